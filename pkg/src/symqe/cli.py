"""Command line front end.

Exit codes: 0 the form is nonnegative, 1 it is not, 2 usage or parse error,
3 the oracle cross-check disagreed with the fast decider.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import as_rational
from .oracle import decide_orthant_reference, decide_real_reference, sample_falsify
from .qe_plus import cubic_verdict, decide_orthant
from .qe_real import decide_real
from .symquartic import MonomialQuartic, SymmetricCubic, SymmetricQuartic, from_monomial
from .verdict import Verdict, record_dict

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class InputSpec:
    n: int
    basis: str
    coeffs: tuple
    domain: str
    degree: int = 4

    def form(self):
        if self.degree == 3:
            return SymmetricCubic(self.n, *self.coeffs)
        if self.basis == "monomial":
            return from_monomial(MonomialQuartic(self.n, *self.coeffs))
        return SymmetricQuartic(self.n, *self.coeffs)


def parse_coeffs(text: str, count: int) -> tuple:
    parts = text.split(",")
    if len(parts) != count:
        raise UsageError(f"expected {count} comma-separated coefficients, got {len(parts)}")
    try:
        return tuple(as_rational(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coefficient in {text!r}: {exc}") from None


def _positive_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"n must be an integer, got {text!r}") from None
    if n < 2:
        raise UsageError(f"n must be at least 2, got {n}")
    return n


def spec_from_args(args) -> InputSpec:
    degree = getattr(args, "degree", 4)
    if degree == 3 and args.domain != "orthant":
        raise UsageError("cubic mode decides the orthant domain only")
    if degree == 3 and args.basis != "power-sum":
        raise UsageError("cubic mode takes power-sum coefficients only")
    return InputSpec(
        n=_positive_n(args.n),
        basis=args.basis,
        coeffs=parse_coeffs(args.coeffs, 3 if degree == 3 else 5),
        domain=args.domain,
        degree=degree,
    )


def run_decider(spec: InputSpec, *, trace=True, exhaustive=False, workers=None) -> Verdict:
    f = spec.form()
    if spec.degree == 3:
        return cubic_verdict(f, trace=trace)
    decide = decide_orthant if spec.domain == "orthant" else decide_real
    return decide(f, trace=trace, exhaustive=exhaustive, workers=workers)


def reference_decision(spec: InputSpec) -> bool:
    f = spec.form()
    if spec.domain == "orthant":
        return decide_orthant_reference(f)
    return decide_real_reference(f)


def decision_line(decision: bool) -> str:
    return f"0 <= f, {'true' if decision else 'false'}"


def _oracle_mismatch(spec: InputSpec, verdict: Verdict) -> bool:
    ref = reference_decision(spec)
    if ref != verdict.decision:
        print(
            f"oracle mismatch: decider says {verdict.decision}, reference says {ref}",
            file=sys.stderr,
        )
        return True
    return False


def cmd_decide(args) -> int:
    spec = spec_from_args(args)
    if args.oracle_check and spec.degree == 3:
        raise UsageError("--oracle-check applies to quartics only")
    t0 = time.perf_counter()
    verdict = run_decider(spec, trace=args.trace, workers=args.parallel)
    millis = (time.perf_counter() - t0) * 1000.0
    if args.json:
        payload = {
            "decision": verdict.decision,
            "input": {
                "n": spec.n,
                "basis": spec.basis,
                "degree": spec.degree,
                "domain": spec.domain,
                "coeffs": [str(c) for c in spec.coeffs],
            },
        }
        if verdict.witness is not None:
            payload["witness"] = verdict.witness.as_dict()
        if args.trace:
            payload["trace"] = [record_dict(r) for r in verdict.trace]
        payload["timing_ms"] = millis
        print(json.dumps(payload))
    else:
        print(decision_line(verdict.decision))
        if args.witness and verdict.witness is not None:
            print(verdict.witness.line())
    if args.oracle_check and _oracle_mismatch(spec, verdict):
        return EXIT_MISMATCH
    return EXIT_TRUE if verdict.decision else EXIT_FALSE


def cmd_trace(args) -> int:
    spec = spec_from_args(args)
    verdict = run_decider(spec, trace=True, exhaustive=True, workers=args.parallel)
    for line in verdict.lines():
        print(line)
    print(decision_line(verdict.decision))
    if args.witness and verdict.witness is not None:
        print(verdict.witness.line())
    return EXIT_TRUE if verdict.decision else EXIT_FALSE


def cmd_convert(args) -> int:
    coeffs = parse_coeffs(args.coeffs, 5)
    f = from_monomial(MonomialQuartic(_positive_n(args.n), *coeffs))
    print(",".join(str(c) for c in f.coeffs))
    return 0


def cmd_bench(args) -> int:
    try:
        ns = [int(x) for x in args.n.split(",")]
    except ValueError:
        raise UsageError(f"bad n list {args.n!r}") from None
    if any(n < 2 for n in ns) or ns != sorted(ns):
        raise UsageError("n list must be ascending integers >= 2")
    if args.repeat < 1:
        raise UsageError("--repeat must be positive")
    rows = []
    print("n,decision,millis")
    for n in ns:
        spec = InputSpec(n, args.basis, parse_coeffs(args.coeffs, 5), args.domain)
        times, decisions = [], set()
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            verdict = run_decider(spec, trace=False, workers=args.parallel)
            times.append((time.perf_counter() - t0) * 1000.0)
            decisions.add(verdict.decision)
        millis = statistics.median(times)
        decision = decisions.pop()
        rows.append((n, decision, millis))
        print(f"{n},{str(decision).lower()},{millis:.3f}")
        sys.stdout.flush()
    for (n0, _, m0), (n1, _, m1) in zip(rows, rows[1:]):
        ratio = m1 / m0 if m0 > 0 else float("inf")
        print(f"# time ratio n={n1}/n={n0}: {ratio:.3f} (size ratio {n1 / n0:.3f})", file=sys.stderr)
    if len({d for _, d, _ in rows}) > 1:
        print("# decision changes across n", file=sys.stderr)
    return 0


def cmd_crosscheck(args) -> int:
    spec = spec_from_args(args)
    if spec.degree == 3:
        raise UsageError("crosscheck applies to quartics only")
    verdict = run_decider(spec, trace=False)
    ref = reference_decision(spec)
    sample = sample_falsify(spec.form(), spec.domain, args.trials, args.seed)
    print(f"decider: {str(verdict.decision).lower()}")
    print(f"reference: {str(ref).lower()}")
    if sample is None:
        print("sampling: no negative point found")
    else:
        print(f"sampling: negative at ({', '.join(map(str, sample))})")
    if ref != verdict.decision or (sample is not None and verdict.decision):
        print("MISMATCH")
        return EXIT_MISMATCH
    print("agree")
    return EXIT_TRUE if verdict.decision else EXIT_FALSE


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", required=True, help="number of variables (>= 2)")
    p.add_argument(
        "--coeffs",
        required=True,
        help="comma-separated exact rationals, e.g. 24,-19,-7,9,-1 or 1/2,0,0,0,0",
    )
    p.add_argument("--domain", choices=("orthant", "real"), default="orthant")
    p.add_argument("--basis", choices=("power-sum", "monomial"), default="power-sum")
    p.add_argument("--degree", type=int, choices=(3, 4), default=4)
    p.add_argument(
        "--parallel",
        type=int,
        nargs="?",
        const=os.cpu_count() or 1,
        default=None,
        metavar="WORKERS",
        help="evaluate the block checks in worker processes",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symqe",
        description="Exact nonnegativity tests for symmetric quartic forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide f >= 0 on the orthant or on R^n")
    _add_input_args(p)
    p.add_argument("--witness", action="store_true", help="print a negative point on failure")
    p.add_argument("--json", action="store_true", help="emit a single JSON object")
    p.add_argument("--trace", action="store_true", help="include the check trace in JSON")
    p.add_argument("--oracle-check", action="store_true", help="confirm with the reference decider")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("trace", help="print every check and its values")
    _add_input_args(p)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("convert", help="monomial symmetric coefficients -> power-sum coefficients")
    p.add_argument("--coeffs", required=True, help="coefficients of M4,M31,M22,M211,M1111")
    p.add_argument("--n", default="4", help="number of variables (does not affect the result)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("bench", help="time the decider over a list of n, CSV output")
    p.add_argument("--n", required=True, help="ascending comma-separated list")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--domain", choices=("orthant", "real"), default="orthant")
    p.add_argument("--basis", choices=("power-sum", "monomial"), default="power-sum")
    p.add_argument("--repeat", type=int, default=5, help="runs per n; the median is reported")
    p.add_argument("--parallel", type=int, nargs="?", const=os.cpu_count() or 1, default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("crosscheck", help="compare decider, reference oracle and random sampling")
    _add_input_args(p)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_crosscheck)
    return parser


def _glue_coeffs(argv: Sequence[str]) -> list[str]:
    # "--coeffs -6,8,3" would otherwise be read as an unknown option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--coeffs":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--coeffs={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_coeffs(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"symqe {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
