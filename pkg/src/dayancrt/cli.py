"""Command-line interface.

Exit status: 0 on success, 1 when the requested quantity is undefined or the
system has no solution, 2 on usage or input-format errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import dayan, oracle
from .crt import (
    Congruence,
    IncompatibleCongruencesError,
    NonCoprimeModuliError,
    solve_coprime,
    solve_general,
)
from .dayan import SignStrategy, ext_mod_inverse
from .modmath import ModInverseStatus, NotCoprimeError, floor_mod, mod_inverse
from .tables import RENDERERS

EXIT_OK, EXIT_UNDEFINED, EXIT_USAGE = 0, 1, 2

# pre-rounding error above which float-mode series results are flagged
FLOAT_WARN_THRESHOLD = 0.25

_CONGRUENCE_LINE = re.compile(r"^\s*([+-]?\d+)\s+mod\s+([+-]?\d+)\s*$", re.IGNORECASE)


class InputFormatError(ValueError):
    pass


def parse_congruences(text: str) -> list[Congruence]:
    """Parse ``a mod m`` lines; blank lines and ``#`` comments are skipped."""
    system = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        match = _CONGRUENCE_LINE.match(stripped)
        if not match:
            raise InputFormatError(f"line {lineno}: expected 'a mod m', got {stripped!r}")
        a, m = int(match.group(1)), int(match.group(2))
        if m <= 1:
            raise InputFormatError(f"line {lineno}: modulus must exceed 1, got {m}")
        system.append(Congruence(a, m))
    if not system:
        raise InputFormatError("no congruences found")
    return system


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_mod(args) -> int:
    if args.m == 0:
        _err("undefined: modulus is zero")
        return EXIT_UNDEFINED
    print(floor_mod(args.a, args.m))
    return EXIT_OK


def cmd_inv(args) -> int:
    out = mod_inverse(args.a, args.m)
    if out.status is ModInverseStatus.UNDEFINED_ZERO_MODULUS:
        _err("undefined: a*m = 0")
        return EXIT_UNDEFINED
    if out.status is ModInverseStatus.UNDEFINED_NOT_COPRIME:
        _err(f"not coprime, gcd={out.gcd}")
        return EXIT_UNDEFINED
    print(out.value)
    return EXIT_OK


def _format_ext_value(out) -> str:
    if out.gcd == 1:
        return str(out.value)
    return f"{out.value} (mod {out.reduced_modulus}), gcd={out.gcd}"


def cmd_extinv(args) -> int:
    if args.m <= 1:
        _err("modulus must exceed 1")
        return EXIT_USAGE
    if args.a == 0:
        _err("a must be nonzero")
        return EXIT_USAGE
    out = ext_mod_inverse(args.b, args.a, args.m, args.strategy, with_trace=args.trace)
    if args.format == "json":
        if out.trace is not None:
            payload = json.loads(RENDERERS["json"](out.trace))
        else:
            payload = {"value": out.value}
        payload.update(modulus=out.reduced_modulus, gcd=out.gcd)
        print(json.dumps(payload, indent=2))
    else:
        if out.trace is not None:
            sys.stdout.write(RENDERERS[args.format](out.trace))
        if out.defined:
            print(_format_ext_value(out))
    if not out.defined:
        _err(f"no solution: gcd {out.gcd} does not divide {args.b}")
        return EXIT_UNDEFINED
    return EXIT_OK


def cmd_crt(args) -> int:
    try:
        text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
        system = parse_congruences(text)
    except (OSError, InputFormatError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    try:
        if args.method == "coprime":
            sol = solve_coprime(system, args.strategy)
        else:
            sol = solve_general(system, args.strategy, parallel=args.parallel)
    except IncompatibleCongruencesError as exc:
        _err(str(exc))
        return EXIT_UNDEFINED
    except NonCoprimeModuliError as exc:
        _err(str(exc))
        return EXIT_UNDEFINED
    print(sol)
    return EXIT_OK


def series_float(p: int, q: int, kind: int, condensed: bool) -> float:
    """Floating-point evaluation of the inverse series, for demonstration."""
    sign = 1 if kind == 1 else -1
    r, c = dayan.remainder_chain(p, q, sign)
    n = len(r) - 2
    if kind == 1 and not condensed:
        value = p * sum((-1) ** i / (r[i] * r[i + 1]) for i in range(n + 1))
        return value + p if value < 0 else value
    if kind == 2 and not condensed:
        return p * sum(1 / (r[i] * r[i + 1]) for i in range(n + 1))
    paired = p * sum(c[2 * i + 2] / (r[2 * i] * r[2 * i + 2]) for i in range((n - 1) // 2 + 1))
    if kind == 1:
        return -paired + (p / r[n] if n % 2 == 0 else p)
    return paired + (p / r[n] if n % 2 == 0 else 0.0)


def cmd_series(args) -> int:
    p, q = args.p, args.q
    try:
        if args.float:
            approx = series_float(p, q, args.type, args.condensed)
            value = round(approx)
            if abs(approx - value) > FLOAT_WARN_THRESHOLD:
                _err(f"warning: float result {approx!r} is {abs(approx - value):.3g} from {value}")
            elif (q * value - 1) % p:
                # large inputs: every double is integral, so rounding hides the error
                _err(f"warning: float result {value} is not an inverse of {q} modulo {p}")
            print(value)
        elif args.type == 1 and not args.condensed:
            raw, n = dayan.series_first_type_raw(p, q)
            print(f"{raw + p} (raw {raw} + {p})" if n % 2 else raw)
        elif args.type == 1:
            print(dayan.inverse_series_first_type_condensed(p, q))
        else:
            print(dayan.inverse_series_second_type(p, q, args.condensed))
    except NotCoprimeError as exc:
        _err(f"not coprime, gcd={exc.gcd}")
        return EXIT_UNDEFINED
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.samples < 1 or args.max_p < max(args.min_p, 3):
        _err("need samples >= 1 and max-p >= max(min-p, 3)")
        return EXIT_USAGE
    result = oracle.compare_steps((args.min_p, args.max_p), args.samples, seed=args.seed)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        result.to_csv(fh)
    print(out)
    for col, stats in result.summary().items():
        print(f"{col}\tmean={stats['mean']:.3f}\tmin={stats['min']}\tmax={stats['max']}")
    return EXIT_OK


def _strategy(text: str) -> SignStrategy:
    try:
        return SignStrategy.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dayancrt",
        description="Sign-aware modular inverses, Dayan traces and CRT solving.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mod", help="floor modulo: a - m*floor(a/m)")
    p.add_argument("a", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_mod)

    p = sub.add_parser("inv", help="sign-aware modular inverse of a modulo m")
    p.add_argument("a", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("extinv", help="solve a*x = b (mod m) with the Dayan engine")
    p.add_argument("b", type=int)
    p.add_argument("a", type=int)
    p.add_argument("m", type=int)
    p.add_argument(
        "--strategy",
        type=_strategy,
        default=dayan.ALL_PLUS,
        help="plus | minus | least-abs | explicit:s1,s2,... (default plus)",
    )
    p.add_argument("--trace", action="store_true", help="print the trace table")
    p.add_argument("--format", choices=sorted(RENDERERS), default="tsv")
    p.set_defaults(func=cmd_extinv)

    p = sub.add_parser("crt", help="solve a congruence system read from a file")
    p.add_argument("file", help="file of 'a mod m' lines, or - for stdin")
    p.add_argument("--parallel", action="store_true", help="run merge rounds on a thread pool")
    p.add_argument("--method", choices=("general", "coprime"), default="general")
    p.add_argument("--strategy", type=_strategy, default=dayan.ALL_PLUS)
    p.set_defaults(func=cmd_crt)

    p = sub.add_parser("series", help="modular inverse from the remainder series")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--type", type=int, choices=(1, 2), default=1)
    p.add_argument("--condensed", action="store_true")
    p.add_argument("--float", action="store_true", help="evaluate in floating point (demo)")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bench", help="division-step comparison, written as CSV")
    p.add_argument("--max-p", type=int, default=1000)
    p.add_argument("--min-p", type=int, default=3)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="steps.csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
