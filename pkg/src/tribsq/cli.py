"""Command-line front end.

Exit codes: 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .discovery import discover_identity, random_specs
from .errors import AmbiguousKernel, DenominatorZero, VariantSpecMismatch
from .genfunc import convergence_radius_estimate, series_coefficients, theorem3_squares_genfunc
from .identities import builtin_identities, load_catalog, verify_range
from .sequence import TRIBONACCI, SequenceSpec, term, term_alt, term_fast
from .sums import SumVariant, compare, compare_weighted

__all__ = ["main", "build_parser", "OutputRecord"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# options whose values may legitimately start with "-"
_VALUE_OPTIONS = {"--seed", "--range", "--window", "--x", "-n", "--n", "--k"}


@dataclass
class OutputRecord:
    command: str
    params: dict
    results: object
    passed: bool = True
    lines: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"command": self.command, "params": self.params, "results": self.results, "pass": self.passed}

    def render_json(self) -> str:
        return render_json(self.to_dict())


def render_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _fmt(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _parse_seed(text: str) -> SequenceSpec:
    try:
        return SequenceSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _join_negative_values(argv: list[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--rng-seed", type=int, default=argparse.SUPPRESS, help="seed for --random")

    parser = argparse.ArgumentParser(
        prog="tribsq", description="Exact generalized Tribonacci identities.", parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("term", parents=[common], help="compute T[n]")
    p.add_argument("--seed", type=_parse_seed, default=TRIBONACCI)
    p.add_argument("-n", "--n", type=int, required=True)
    p.add_argument("--method", choices=("iter", "alt", "matrix"), default="iter")

    p = sub.add_parser("verify", parents=[common], help="check identities over a range")
    p.add_argument("ids", nargs="*", help="identity ids, or 'all'")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--seed", type=_parse_seed)
    src.add_argument("--random", type=int, metavar="N")
    p.add_argument("--range", type=_parse_range, default=(-50, 200))
    p.add_argument("--template", type=Path, help="JSON file of extra identity templates")

    p = sub.add_parser("sum", parents=[common], help="closed-form partial sum vs direct sum")
    p.add_argument("variant", nargs="?")
    p.add_argument("--seed", type=_parse_seed, default=TRIBONACCI)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=_parse_fraction)

    p = sub.add_parser("genfunc", parents=[common], help="expand the squares generating function")
    p.add_argument("--seed", type=_parse_seed, default=TRIBONACCI)
    p.add_argument("--count", type=int, default=8)

    p = sub.add_parser("discover", parents=[common], help="find an identity by integer kernel")
    p.add_argument("--power", type=int, required=True)
    p.add_argument("--window", type=_parse_range, required=True)
    p.add_argument("--all", action="store_true", help="accept multi-dimensional kernels")
    p.add_argument("--emit-json", type=Path, metavar="FILE")
    return parser


def _cmd_term(args, parser) -> OutputRecord:
    fn = {"iter": term, "alt": term_alt, "matrix": term_fast}[args.method]
    value = fn(args.seed, args.n)
    rec = OutputRecord("term", {"seed": str(args.seed), "n": args.n, "method": args.method}, {"value": str(value)})
    rec.lines.append(str(value))
    return rec


def _cmd_verify(args, parser) -> OutputRecord:
    catalog = builtin_identities()
    templates = []
    ids = args.ids
    if ids == ["all"]:
        templates = list(catalog.values())
    else:
        for i in ids:
            if i not in catalog:
                parser.error(f"unknown identity id {i!r}")
            templates.append(catalog[i])
    if args.template is not None:
        try:
            templates += load_catalog(args.template.read_text())
        except (OSError, ValueError, KeyError, TypeError) as exc:
            parser.error(f"cannot load template file: {exc}")
    if not templates:
        parser.error("no identities given")
    if args.random is not None:
        if args.random < 1:
            parser.error("--random needs a positive count")
        specs = random_specs(args.random, args.rng_seed)
    else:
        specs = [args.seed or TRIBONACCI]
    lo, hi = args.range
    reports = [verify_range(t, s, lo, hi) for t in sorted(templates, key=lambda t: t.id) for s in specs]
    passed = all(r.passed for r in reports)
    params = {
        "ids": sorted(t.id for t in templates),
        "seeds": [str(s) for s in specs],
        "range": [lo, hi],
    }
    rec = OutputRecord("verify", params, [r.to_dict() for r in reports], passed)
    for r in reports:
        status = "PASS" if r.passed else f"FAIL ({len(r.failures)} nonzero, first r={r.failures[0][0]})"
        rec.lines.append(f"{r.id:<12} seed={r.spec} r={lo}..{hi}  {status}")
    return rec


def _cmd_sum(args, parser) -> OutputRecord:
    if args.k < 0:
        parser.error("--k must be nonnegative")
    if args.variant is not None and args.x is not None:
        parser.error("give either a variant or --x, not both")
    try:
        if args.x is not None:
            report = compare_weighted(args.seed, args.x, args.k)
        elif args.variant is not None:
            try:
                variant = SumVariant.parse(args.variant)
            except ValueError as exc:
                parser.error(str(exc))
            report = compare(args.seed, variant, args.k)
        else:
            parser.error("give a variant or --x")
    except (VariantSpecMismatch, DenominatorZero) as exc:
        parser.error(str(exc))
    d = report.to_dict()
    params = {"variant": d["variant"], "seed": d["seed"], "k": d["k"]}
    if "x" in d:
        params["x"] = d["x"]
    results = {"closed": d["closed"], "oracle": d["oracle"], "equal": d["equal"]}
    rec = OutputRecord("sum", params, results, report.equal)
    rec.lines.append(f"closed={d['closed']} oracle={d['oracle']} equal={str(report.equal).lower()}")
    return rec


def _cmd_genfunc(args, parser) -> OutputRecord:
    if args.count < 1:
        parser.error("--count must be at least 1")
    rf = theorem3_squares_genfunc(args.seed)
    coeffs = series_coefficients(rf, args.count)
    expected = [term(args.seed, j) ** 2 for j in range(args.count)]
    matches = [c == e for c, e in zip(coeffs, expected)]
    results = {
        "genfunc": rf.to_dict(),
        "coefficients": [_fmt(c) for c in coeffs],
        "match": matches,
    }
    if not rf.numerator.is_zero():
        results["radius_estimate_float"] = round(convergence_radius_estimate(rf), 12)
    rec = OutputRecord("genfunc", {"seed": str(args.seed), "count": args.count}, results, all(matches))
    rec.lines.append(f"G(x) = ({rf.numerator}) / ({rf.denominator})")
    rec.lines.append("coefficients: [" + ", ".join(results["coefficients"]) + "]")
    rec.lines.append("all match T[j]^2" if all(matches) else f"mismatch at j={matches.index(False)}")
    return rec


def _cmd_discover(args, parser) -> OutputRecord:
    if args.power < 1:
        parser.error("--power must be at least 1")
    lo, hi = args.window
    offsets = list(range(lo, hi + 1))
    params = {"power": args.power, "window": [lo, hi]}
    try:
        tpl = discover_identity(args.power, offsets, rng_seed=args.rng_seed)
    except AmbiguousKernel as exc:
        vectors = [list(v) for v in exc.basis]
        rec = OutputRecord("discover", params, {"status": "AMBIGUOUS", "basis": vectors}, args.all)
        rec.lines.append(f"AMBIGUOUS: kernel dimension {len(vectors)}")
        rec.lines += ["(" + ",".join(map(str, v)) + ")" for v in vectors]
        return rec
    if tpl is None:
        rec = OutputRecord("discover", params, {"status": "NOT_FOUND"})
        rec.lines.append("NOT_FOUND")
        return rec
    vec = list(tpl.coefficient_vector(lo, hi))
    rec = OutputRecord("discover", params, {"status": "FOUND", "vector": vec, "template": tpl.to_dict()})
    rec.lines.append("(" + ",".join(map(str, vec)) + ")")
    if args.emit_json is not None:
        args.emit_json.write_text(render_json(tpl.to_dict()))
    return rec


_COMMANDS = {
    "term": _cmd_term,
    "verify": _cmd_verify,
    "sum": _cmd_sum,
    "genfunc": _cmd_genfunc,
    "discover": _cmd_discover,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    if not hasattr(args, "rng_seed"):
        args.rng_seed = 0
    rec = _COMMANDS[args.command](args, parser)
    if getattr(args, "json", False):
        sys.stdout.write(rec.render_json())
    else:
        for line in rec.lines:
            print(line)
    return EXIT_OK if rec.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
