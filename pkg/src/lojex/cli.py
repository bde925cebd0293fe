"""Command-line entry point.

Exit codes: 0 success, 1 usage or input error, 2 degenerate input (infinite
exponent), 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from .bipoly import BiPoly
from .exponent import (
    INF,
    Analysis,
    analyze,
    complex_exponent,
    format_exponent,
    resolve_weights,
)
from .numeric import DEFAULT_SEED, EstimateConfig, NumericError, estimate_exponent
from .parse import ParseError, detect_variables, format_polynomial, parse_polynomial
from .signature import classify
from .wfilter import WeightError, check_euler_identity, weights_from_override

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("weights must be positive integers")
    return values


def _names(text: str) -> tuple[str, str]:
    names = tuple(v.strip() for v in text.split(","))
    if len(names) != 2 or not all(names) or names[0] == names[1]:
        raise argparse.ArgumentTypeError("expected two distinct names, e.g. x,y")
    return names


def _decimal(value) -> str:
    return "inf" if value == INF else f"{float(value):#.6g}"


def _rational_json(value):
    if value == INF:
        return "inf"
    return {"num": value.numerator, "den": value.denominator}


class _Output:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, payload: dict, lines: list[str]) -> None:
        if self.fmt == "json":
            self.stream.write(json.dumps(payload, indent=2) + "\n")
        else:
            self.stream.write("\n".join(lines) + "\n")


def _load(args) -> tuple[BiPoly, tuple[str, str]]:
    variables = args.vars or detect_variables(args.polynomial)
    return parse_polynomial(args.polynomial, variables), variables


def _weights_arg(args):
    if args.weights is None:
        return None
    if len(args.weights) != 2:
        raise UsageError("--weights takes exactly two values here: w1,w2")
    return tuple(args.weights)


def compute_report(a: Analysis, text: str, variables: tuple[str, str]) -> dict:
    r = a.result
    return {
        "input": text,
        "variables": list(variables),
        "weights": [a.weights.w1, a.weights.w2],
        "degree": a.weights.d,
        "swapped": a.classification.swapped,
        "nondegenerate": a.classification.nondegenerate,
        "case": r.case_tag,
        "lojasiewicz_exponent": _rational_json(r.value),
        "exponent_decimal": _decimal(r.value),
        "sufficiency_degree": r.sufficiency_degree,
        "witness_path": r.witness_path.as_dict() if r.witness_path else None,
        "diagnostics": [dg.as_dict() for dg in a.classification.diagnostics],
    }


def run_compute(args, out: _Output) -> int:
    p, variables = _load(args)
    a = analyze(p, _weights_arg(args), variables)
    rep = compute_report(a, args.polynomial, variables)
    r = a.result
    x, y = variables
    lines = [
        f"input: {format_polynomial(p, variables)}",
        f"type: {a.weights}  (w({x})={a.weights.w1}, w({y})={a.weights.w2})",
        f"swapped: {'yes' if a.classification.swapped else 'no'}",
        f"nondegenerate: {'yes' if a.classification.nondegenerate else 'no'}",
        f"case: {r.case_tag}",
        f"L = {format_exponent(r.value)}" + (f" ({_decimal(r.value)})" if r.finite else ""),
        f"sufficiency degree: {r.sufficiency_degree if r.finite else 'undefined'}",
    ]
    if r.witness_path:
        lines.append(f"witness path: {r.witness_path.path_text(variables)}"
                     f"  ratio {format_exponent(r.witness_path.ratio)}")
    lines += [f"note: {dg.message}" for dg in a.classification.diagnostics]
    out.emit(rep, lines)
    return EXIT_OK if r.finite else EXIT_DEGENERATE


def run_check(args, out: _Output) -> int:
    p, variables = _load(args)
    payload = {"input": args.polynomial, "variables": list(variables)}
    weights = _weights_arg(args)
    try:
        ws, notes = resolve_weights(p, weights)
    except WeightError as exc:
        payload.update(weighted_homogeneous=False, error=str(exc))
        out.emit(payload, [f"weighted homogeneous: no ({exc})"])
        return EXIT_INPUT
    cls = classify(p, ws, variables)
    payload.update(
        weighted_homogeneous=True,
        weights=[ws.w1, ws.w2],
        degree=ws.d,
        euler_identity=check_euler_identity(p, ws),
        nondegenerate=cls.nondegenerate,
        containment=cls.containment_holds,
        homogeneous=cls.homogeneous,
        swapped=cls.swapped,
        diagnostics=[dg.as_dict() for dg in notes + list(cls.diagnostics)],
    )
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    lines = [
        f"weighted homogeneous: yes, type {ws}",
        f"euler identity: {yn(payload['euler_identity'])}",
        f"nondegenerate: {yn(cls.nondegenerate)}",
        f"containment: {yn(cls.containment_holds)}",
        f"swapped: {yn(cls.swapped)}",
    ] + [f"  {dg.message}" for dg in notes + list(cls.diagnostics)]
    out.emit(payload, lines)
    return EXIT_OK if cls.nondegenerate else EXIT_DEGENERATE


def run_paths(args, out: _Output) -> int:
    p, variables = _load(args)
    a = analyze(p, _weights_arg(args), variables)
    cands = [c.swapped() if a.classification.swapped else c for c in a.oracle.candidates]
    payload = {
        "input": args.polynomial,
        "variables": list(variables),
        "weights": [a.weights.w1, a.weights.w2],
        "degree": a.weights.d,
        "swapped": a.classification.swapped,
        "candidates": [c.as_dict() for c in cands],
        "max_ratio": _rational_json(a.oracle.max_ratio),
    }
    paths = [c.path_text(variables) for c in cands]
    w = max(len(t) for t in paths + ["path"])
    lines = [f"{'kind':8} {'path':{w}} {'ord_phi':>7} {'ord_grad':>8} {'ratio':>8}"]
    for c, text in zip(cands, paths):
        og = "inf" if c.ord_grad == INF else str(c.ord_grad)
        lines.append(f"{c.kind:8} {text:{w}} {c.ord_phi:>7} {og:>8} {format_exponent(c.ratio):>8}")
    lines.append(f"max ratio = {format_exponent(a.oracle.max_ratio)}")
    out.emit(payload, lines)
    return EXIT_DEGENERATE if a.oracle.degenerate else EXIT_OK


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("LOJEX_SEED")
    if env:
        try:
            return int(env, 0)
        except ValueError:
            raise UsageError(f"LOJEX_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def run_estimate(args, out: _Output) -> int:
    p, variables = _load(args)
    cfg = EstimateConfig(
        r0=args.r0,
        gamma=args.gamma,
        num_radii=args.num_radii,
        samples_per_circle=args.samples,
        seed=_seed(args),
        refine=not args.no_refine,
    )
    weights = _weights_arg(args)
    ws = weights_from_override(p, *weights) if weights else None
    try:
        rep = estimate_exponent(p, cfg, ws)
    except NumericError as exc:
        if "degenerate" in str(exc):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DEGENERATE
        raise
    payload = {"input": args.polynomial, "seed": cfg.seed, **rep.as_dict()}
    lines = [f"{'radius':>12} {'min |grad|':>14}"]
    lines += [f"{r:12.6g} {m:14.6g}" for r, m in zip(rep.radii, rep.minima)]
    lines.append(f"fitted slope = {rep.fitted_slope:.6f} +- {rep.slope_stderr:.2g}")
    if rep.weighted_ratio_min is not None:
        lines.append(f"weighted ratio in [{rep.weighted_ratio_min:.6g}, {rep.weighted_ratio_max:.6g}]")
    out.emit(payload, lines)
    return EXIT_OK


def run_complex(args, out: _Output) -> int:
    if args.weights is None or args.degree is None:
        raise UsageError("complex needs --weights and --degree")
    value = complex_exponent(args.weights, args.degree)
    payload = {
        "weights": args.weights,
        "degree": args.degree,
        "complex_exponent": _rational_json(value),
        "exponent_decimal": _decimal(value),
    }
    out.emit(payload, [f"L = {format_exponent(value)} ({_decimal(value)})"])
    return EXIT_OK


def _parse_expected(raw) -> Fraction | float:
    if isinstance(raw, str) and raw.strip().lower() in ("inf", "infinity", "+inf"):
        return INF
    if isinstance(raw, (int, str)):
        return Fraction(raw)
    raise ValueError(f"expected_L must be a rational string or 'inf', got {raw!r}")


def run_corpus(args, out: _Output) -> int:
    results = []
    try:
        with open(args.path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read corpus: {exc}")
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        entry = {"line": lineno}
        try:
            case = json.loads(line)
            poly_text = case["poly"]
            entry["poly"] = poly_text
            expected = _parse_expected(case["expected_L"])
            entry["expected"] = format_exponent(expected)
            weights = case.get("weights")
            variables = detect_variables(poly_text)
            p = parse_polynomial(poly_text, variables)
            a = analyze(p, tuple(weights) if weights else None, variables)
            entry["got"] = format_exponent(a.result.value)
            entry["pass"] = a.result.value == expected
        except (json.JSONDecodeError, KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            entry["pass"] = False
            entry["error"] = f"{type(exc).__name__}: {exc}"
            print(f"line {lineno}: {entry['error']}", file=sys.stderr)
        results.append(entry)
    passed = sum(e["pass"] for e in results)
    text = []
    for e in results:
        status = "PASS" if e["pass"] else "FAIL"
        detail = e.get("error") or f"expected {e['expected']}, got {e['got']}"
        text.append(f"{status} line {e['line']}: {e.get('poly', '?')}  ({detail})")
    text.append(f"{passed}/{len(results)} passed")
    out.emit({"cases": results, "passed": passed, "failed": len(results) - passed}, text)
    return EXIT_OK if passed == len(results) else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--json", dest="format", action="store_const", const="json",
                        help="shorthand for --format json")

    poly = _Parser(add_help=False)
    poly.add_argument("polynomial", help='e.g. "x^3 + x*y^6 + y^9"')
    poly.add_argument("--weights", type=_int_list, help="override inferred weights: w1,w2")
    poly.add_argument("--vars", type=_names, help="variable names, default x,y (x1,x2 auto-detected)")

    parser = _Parser(prog="lojex", description="Lojasiewicz exponent of weighted homogeneous "
                     "polynomials in two real variables.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("compute", parents=[common, poly], help="exact exponent")
    sub.add_parser("check", parents=[common, poly], help="structure and classification checks")
    sub.add_parser("paths", parents=[common, poly], help="orbit path table")
    est = sub.add_parser("estimate", parents=[common, poly], help="numerical slope estimate")
    est.add_argument("--r0", type=float, default=0.1)
    est.add_argument("--gamma", type=float, default=0.5)
    est.add_argument("--num-radii", type=int, default=8)
    est.add_argument("--samples", type=int, default=4096)
    est.add_argument("--seed", type=lambda s: int(s, 0), default=None)
    est.add_argument("--no-refine", action="store_true", help="plain sampling, no zoom polish")
    cx = sub.add_parser("complex", parents=[common], help="complex-case formula max(d/wi - 1)")
    cx.add_argument("--weights", type=_int_list, required=True)
    cx.add_argument("--degree", type=int, required=True)
    corpus = sub.add_parser("corpus", parents=[common], help="run a JSON-lines corpus")
    corpus.add_argument("path")
    return parser


COMMANDS = {
    "compute": run_compute,
    "check": run_check,
    "paths": run_paths,
    "estimate": run_estimate,
    "complex": run_complex,
    "corpus": run_corpus,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, _Output(args.format))
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (WeightError, NumericError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INPUT
    except Exception as exc:  # pragma: no cover - last resort
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
