"""Command-line front end: ``padic-tiles <command> ...``.

Sets are passed as JSON, either inline (anything starting with ``{``) or
as a path to a JSON file (``-`` reads standard input).

Exit codes: 0 success, 1 domain error, 2 usage error or malformed input,
3 for ``verify``/``spectral`` when the input is well formed but does not
tile.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .cyclotomic import CyclotomicSum
from .errors import PadicTilingError
from .fourier import frequencies, ft
from .lemmas import run_all
from .padic import CompactOpenSet, Frequency, LevelSet, PointSet
from .tiling import (
    census_record,
    enumerate_tiles,
    find_complements,
    regularize,
    resolve_jobs,
    verify_tiling,
    verify_tiling_spectral,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_NOT_TILING = 3


class InputError(Exception):
    """Unreadable or malformed input; maps to exit code 2."""

    def __init__(self, payload: dict) -> None:
        super().__init__(payload.get("message", ""))
        self.payload = payload


def _load_json(value: str, option: str):
    if value.lstrip().startswith("{"):
        path, text = f"<{option}>", value
    elif value == "-":
        path, text = "<stdin>", sys.stdin.read()
    else:
        path = value
        try:
            with open(value, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(
                {"error": "InputError", "path": path, "message": exc.strerror or str(exc)}
            ) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            {
                "error": "MalformedJSON",
                "path": path,
                "offset": len(text[: exc.pos].encode("utf-8")),
                "message": exc.msg,
            }
        ) from None


def _read_any(value: str, option: str) -> LevelSet | PointSet | CompactOpenSet:
    data = _load_json(value, option)
    if isinstance(data, dict):
        if "balls" in data:
            return CompactOpenSet.from_dict(data)
        if "members" in data:
            return LevelSet.from_dict(data)
        if "points" in data:
            return PointSet.from_dict(data)
    raise InputError(
        {
            "error": "InputError",
            "path": option,
            "message": "expected a LevelSet, PointSet or CompactOpenSet object",
        }
    )


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _fmt_float(x: float) -> str:
    if abs(x) < 1e-12:
        return "0"
    return f"{x:.12g}"


def _ft_payload(obj, xi: Frequency, value: CyclotomicSum) -> dict:
    z = value.to_complex()
    return {
        "p": xi.p,
        "xi": {"k": xi.exponent, "u": xi.unit},
        "gamma": value.gamma,
        "coeffs": [str(c) for c in value.coeffs],
        "zero": value.is_zero(),
        "float": [float(_fmt_float(z.real)), float(_fmt_float(z.imag))],
    }


def _ft_text(xi: Frequency, value: CyclotomicSum) -> str:
    z = value.to_complex()
    return (
        f"xi = {xi}  (p = {xi.p})\n"
        f"exact: {value}\n"
        f"coefficients (gamma = {value.gamma}): [{', '.join(str(c) for c in value.coeffs)}]\n"
        f"zero: {str(value.is_zero()).lower()}\n"
        f"float: {_fmt_float(z.real)} {'-' if z.imag < -1e-12 else '+'} {_fmt_float(abs(z.imag))}i"
    )


def _cmd_verify(args, spectral: bool) -> int:
    omega = LevelSet.from_dict(_load_json(args.omega, "--omega"))
    t_set = PointSet.from_dict(_load_json(args.t, "--t"))
    report = (verify_tiling_spectral if spectral else verify_tiling)(omega, t_set)
    if args.format == "json":
        print(_dumps(report.to_dict()))
    else:
        print(f"tiling: {str(report.is_tiling).lower()}")
        print(f"method: {report.method}")
        if report.coverage_histogram is not None:
            hist = ", ".join(f"{k}:{v}" for k, v in sorted(report.coverage_histogram.items()))
            print(f"coverage histogram: {hist}")
        if report.witness is not None:
            print(f"witness: {report.witness}")
        if report.reason:
            print(f"reason: {report.reason}")
    return EXIT_OK if report.is_tiling else EXIT_NOT_TILING


def _cmd_regularize(args) -> int:
    omega = LevelSet.from_dict(_load_json(args.omega, "--omega"))
    t_set = PointSet.from_dict(_load_json(args.t, "--t"))
    result = regularize(omega, t_set)
    if args.format == "json":
        print(_dumps(result.to_dict()))
    else:
        print(f"compact open: {result}")
        print(f"measure: {result.measure}")
    return EXIT_OK


def _cmd_complements(args) -> int:
    omega = LevelSet.from_dict(_load_json(args.omega, "--omega"))
    found = find_complements(omega, jobs=resolve_jobs(args.jobs))
    for t in found:
        print(_dumps(t.to_dict()) if args.format == "json" else str(t))
    if args.format == "text":
        print(f"{len(found)} complement(s)")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    jobs = resolve_jobs(args.jobs)
    tiles = enumerate_tiles(args.p, args.n, args.size, jobs=jobs)
    for omega, _ in tiles:
        record = census_record(omega, find_complements(omega))
        if args.format == "json":
            print(_dumps(record.to_dict()))
        else:
            comps = " ".join("{" + ",".join(map(str, t.points)) + "}" for t in record.complements)
            print(
                f"Ω={{{','.join(map(str, omega.members))}}}  γ_T={record.gamma_t}  "
                f"compact open: {record.compact_open}  complements: {comps}"
            )
    if args.format == "text":
        print(f"{len(tiles)} tile(s)")
    return EXIT_OK


def _parse_xi(raw: str, base) -> Frequency:
    try:
        x = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise InputError({"error": "InputError", "path": "--xi", "message": f"not a rational: {raw!r}"}) from None
    return Frequency.from_rational(x, base)


def _cmd_ft(args) -> int:
    obj = _read_any(args.set, "--set")
    xi = _parse_xi(args.xi, obj.base)
    value = ft(obj, xi)
    print(_dumps(_ft_payload(obj, xi, value)) if args.format == "json" else _ft_text(xi, value))
    return EXIT_OK


def _cmd_zeroset(args) -> int:
    obj = _read_any(args.set, "--set")
    zeros, total = [], 0
    for xi in frequencies(obj.base, args.max_k, 1):
        total += 1
        if ft(obj, xi).is_zero():
            zeros.append(xi)
    if args.format == "json":
        print(
            _dumps(
                {
                    "p": obj.base.p,
                    "max_k": args.max_k,
                    "checked": total,
                    "zeros": [{"k": xi.exponent, "u": xi.unit} for xi in zeros],
                }
            )
        )
    else:
        for xi in zeros:
            print(f"zero at xi = {xi}")
        print(f"{len(zeros)} of {total} nontrivial frequencies with |xi| <= {obj.base.p}^{args.max_k} vanish")
    return EXIT_OK


def _cmd_lemmas(args) -> int:
    results = run_all(args.p, max_gamma=args.max_gamma, seed=args.seed)
    if args.format == "json":
        print(
            _dumps(
                [
                    {"name": r.name, "checked": r.checked, "ok": r.ok, "failures": r.failures[:20]}
                    for r in results
                ]
            )
        )
    else:
        for r in results:
            print(str(r))
            for f in r.failures[:5]:
                print(f"  counterexample: {f}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padic-tiles",
        description="Exact tiling analysis in the p-adic integers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def pair(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("--omega", required=True, help="LevelSet JSON or path")
        p.add_argument("--t", required=True, help="PointSet JSON or path")
        return p

    pair("verify", "check a tiling pair by counting coverage")
    pair("spectral", "check a tiling pair through Fourier transforms")
    pair("regularize", "majority-vote a tile onto classes mod p^(γ_T+1)")

    p = sub.add_parser("complements", parents=[common], help="all tiling complements containing 0")
    p.add_argument("--omega", required=True, help="LevelSet JSON or path")
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("enumerate", parents=[common], help="census of tiles of a given size")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("ft", parents=[common], help="exact Fourier transform at one frequency")
    p.add_argument("--set", required=True, help="LevelSet, PointSet or CompactOpenSet JSON or path")
    p.add_argument("--xi", required=True, help="frequency as a rational, e.g. 3/4")

    p = sub.add_parser("zeroset", parents=[common], help="frequencies where the transform vanishes")
    p.add_argument("--set", required=True, help="LevelSet, PointSet or CompactOpenSet JSON or path")
    p.add_argument("--max-k", type=int, required=True, help="sweep 1 <= k <= max-k")

    p = sub.add_parser("lemmas", parents=[common], help="run the built-in Fourier self-checks")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-gamma", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    return parser


_COMMANDS = {
    "verify": lambda a: _cmd_verify(a, spectral=False),
    "spectral": lambda a: _cmd_verify(a, spectral=True),
    "regularize": _cmd_regularize,
    "complements": _cmd_complements,
    "enumerate": _cmd_enumerate,
    "ft": _cmd_ft,
    "zeroset": _cmd_zeroset,
    "lemmas": _cmd_lemmas,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_gamma", 1) < 1:
        parser.print_usage(sys.stderr)
        print("padic-tiles: error: --max-gamma must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(_dumps(exc.payload), file=sys.stderr)
        return EXIT_USAGE
    except PadicTilingError as exc:
        print(_dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
