"""Command-line surface: every operation, exact, scriptable.

Exit codes: 0 success; 2 domain error (bad argument ranges, malformed
input); 3 not-coprime (no inverse exists); 4 verification mismatch.
JSON output is deterministic — byte-identical for identical invocations —
except that verify reports carry wall time under a dedicated "timing" key.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from .basephi import expand
from .bigfib import fib, pisano
from .errors import (
    DomainError,
    InvalidRep,
    NotCoprime,
    PreconditionError,
    ZeckinvError,
)
from .inverse import inverse_closed, inverse_oracle
from .pattern import (
    evaluate,
    load_pattern,
    report_to_json_dict,
    save_pattern,
    synthesize,
    to_json_dict,
    verify,
)
from .qphi import QPhi, parse_qphi
from .zeckendorf import decode, encode, from_bit_string, to_bit_string

__all__ = ["main"]


def _print_json(obj: object) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _rep_text(value: int, rep) -> str:
    fsum = "+".join(f"F{i}" for i in rep.indices)
    idx = ",".join(str(i) for i in rep.indices)
    return f"{value} = {fsum} (indices {idx}; bits {to_bit_string(rep)})"


# --------------------------------------------------------------------------


def cmd_pattern(args: argparse.Namespace) -> int:
    spec = synthesize(args.a)
    data = to_json_dict(spec)
    if args.out:
        save_pattern(spec, args.out)
    if args.json:
        _print_json(data)
    else:
        print(
            f"a={spec.a} M={spec.M} ell={spec.ell} i0={spec.i0} "
            f"n0={spec.n0} tail_period={spec.tail_period}"
        )
        for r, zc in sorted(spec.z.items()):
            print(f"z[{r}]: b={zc.b} period={zc.zbits.period}")
        for c, word in sorted(spec.tail.items()):
            value = sum(
                fib(spec.i0 - 1 - j) for j, ch in enumerate(word) if ch == "1"
            )
            print(f"tail[{c}]: {word} (={value})")
        inadm = ",".join(str(r) for r in sorted(spec.inadmissible))
        print(f"inadmissible residues mod {spec.M}: {inadm or 'none'}")
        if args.out:
            print(f"wrote {args.out}")
    return 0


def cmd_inverse(args: argparse.Namespace) -> int:
    a, n, method = args.a, args.n, args.method
    if method == "oracle":
        value = inverse_oracle(a, n)
        rep = encode(value)
    elif method == "closed":
        value = inverse_closed(a, n).value
        rep = encode(value)
    else:
        spec = synthesize(a) if a >= 2 else None
        if method == "pattern":
            if spec is None or n < spec.n0:
                raise DomainError(
                    f"pattern method needs a >= 2 and n >= n0, got a={a}, n={n}"
                )
            rep = evaluate(spec, n)
            value = decode(rep)
        else:  # auto
            if spec is not None and n >= spec.n0:
                rep = evaluate(spec, n)
                value = decode(rep)
                method = "pattern"
            else:
                value = inverse_closed(a, n).value
                rep = encode(value)
                method = "closed"

    cross_checked = False
    if args.debug:
        oracle = inverse_oracle(a, n)
        if oracle != value:
            print(
                f"error: {method} value {value} != oracle {oracle}",
                file=sys.stderr,
            )
            return 4
        cross_checked = True

    if args.json:
        _print_json(
            {
                "a": a,
                "n": n,
                "value": value,
                "method": method,
                "indices": list(rep.indices),
                "bits": to_bit_string(rep),
                "cross_checked": cross_checked,
            }
        )
    else:
        suffix = "  [cross-checked]" if cross_checked else ""
        print(_rep_text(value, rep) + suffix)
    return 0


def cmd_zeckendorf(args: argparse.Namespace) -> int:
    if args.decode is not None:
        rep = from_bit_string(args.decode)
        value = decode(rep)
    else:
        if args.n is None:
            raise DomainError("need an integer to encode or --decode BITS")
        value = args.n
        rep = encode(value)
    if args.json:
        _print_json(
            {"value": value, "indices": list(rep.indices), "bits": to_bit_string(rep)}
        )
    else:
        print(_rep_text(value, rep))
    return 0


def cmd_basephi(args: argparse.Namespace) -> int:
    if args.v is None and "phi" in args.u:
        x = parse_qphi(args.u)
    else:
        try:
            u = Fraction(args.u)
            v = Fraction(args.v) if args.v is not None else Fraction(0)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational: {exc}") from exc
        x = QPhi(u, v)
    bits = expand(x)
    if args.json:
        _print_json(
            {
                "u": str(x.u),
                "v": str(x.v),
                "pre": bits.preperiod,
                "period": bits.period,
            }
        )
    else:
        print(f"pre={bits.preperiod}| period={bits.period}")
    return 0


def cmd_pisano(args: argparse.Namespace) -> int:
    period = pisano(args.m)
    if args.json:
        _print_json({"m": period.m, "pi": period.pi})
    else:
        print(period.pi)
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise DomainError(f"range must look like LO..HI, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError as exc:
        raise DomainError(f"range must look like LO..HI, got {text!r}") from exc


def cmd_verify(args: argparse.Namespace) -> int:
    n_lo, n_hi = _parse_range(args.n_range)
    if args.spec:
        spec = load_pattern(args.spec)
        if spec.a != args.a:
            raise DomainError(f"spec file is for a={spec.a}, not a={args.a}")
    else:
        spec = synthesize(args.a)
    report = verify(spec, n_lo, n_hi)
    if args.json:
        _print_json(report_to_json_dict(report))
    else:
        print(
            f"a={report.a} range=[{report.n_lo},{report.n_hi}] "
            f"checked={report.checked} mismatches={report.mismatches} "
            f"elapsed={report.elapsed_s:.3f}s"
        )
        if report.first_mismatch is not None:
            fm = report.first_mismatch
            print(f"first mismatch at n={fm.n}: expected {fm.expected}, got {fm.got}")
    return 4 if report.mismatches else 0


def _a2_expected_indices(n: int) -> list[int]:
    """The displayed closed form for a = 2: an arithmetic progression of
    step 3 from n-2, plus a constant bottom index (corrected limits)."""
    if n % 3 == 1:
        top = [n - 2 - 3 * k for k in range((n - 7) // 3 + 1)]
        return top + [3]
    if n % 3 == 2:
        top = [n - 2 - 3 * k for k in range((n - 8) // 3 + 1)]
        return top + [4]
    raise DomainError(f"n = {n} is not admissible for a = 2")


def cmd_paper_check(args: argparse.Namespace) -> int:
    """Built-in a = 2 regression: evaluate vs oracle vs displayed closed form."""
    spec = synthesize(2)
    failures = []
    checked = 0
    for n in range(8, 301):
        if n % 3 == 0:
            continue
        checked += 1
        got = evaluate(spec, n)
        want = encode(inverse_oracle(2, n))
        closed = _a2_expected_indices(n)
        if got != want or list(got.indices) != closed:
            failures.append(n)
    if args.json:
        _print_json(
            {"a": 2, "n_lo": 8, "n_hi": 300, "checked": checked, "failures": failures}
        )
    else:
        if failures:
            print(f"FAIL: {len(failures)} of {checked} values mismatched: {failures[:10]}")
        else:
            print(f"OK: all {checked} admissible n in [8, 300] match")
    return 4 if failures else 0


# --------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeckinv",
        description=(
            "Exact periodic structure of the Zeckendorf representation "
            "of (a^-1 mod F_n)."
        ),
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="less chatter")
    parser.add_argument(
        "--debug", action="store_true", help="debug logging and extra cross-checks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pattern", help="synthesize the periodic pattern for a")
    p.add_argument("a", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE", help="also save the pattern as JSON")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("inverse", help="compute (a^-1 mod F_n)")
    p.add_argument("a", type=int)
    p.add_argument("n", type=int)
    p.add_argument(
        "--method",
        choices=("auto", "pattern", "closed", "oracle"),
        default="auto",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("zeckendorf", help="encode an integer / decode a bit word")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--decode", metavar="BITS", help="bit word, positions down to 2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_zeckendorf)

    p = sub.add_parser(
        "basephi", help="digit expansion of u + v*phi in [0, 1)"
    )
    p.add_argument("u", help="rational u (e.g. 1/2), or a 'u + v*phi' literal")
    p.add_argument("v", nargs="?", help="rational v (default 0)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_basephi)

    p = sub.add_parser("pisano", help="period of the Fibonacci sequence mod m")
    p.add_argument("m", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pisano)

    p = sub.add_parser("verify", help="sweep evaluate against the oracle")
    p.add_argument("a", type=int)
    p.add_argument("--n-range", required=True, metavar="LO..HI")
    p.add_argument("--spec", metavar="FILE", help="load pattern instead of synthesizing")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "paper-check", help="built-in a = 2 regression sweep (n in [8, 300])"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_paper_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG
        if args.debug
        else (logging.ERROR if args.quiet else logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except NotCoprime as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, InvalidRep, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeckinvError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
