"""Exception hierarchy shared by every module in the package."""


class PadicTilingError(ValueError):
    """Base class for all errors raised by padic_tiles."""


class DomainError(PadicTilingError):
    """An argument lies outside the domain of the operation."""


class PrecisionError(PadicTilingError):
    """The known p-adic digits are not enough to determine the answer."""


class AmbiguousCellError(PadicTilingError):
    """A regularization cell is exactly half full, so majority is undefined."""

    def __init__(self, message: str, cell: int | None = None) -> None:
        super().__init__(message)
        self.cell = cell
