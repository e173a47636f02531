"""Command-line front end.

Global flags select the bundle (--n, --m), output format (--json), the seed
for the verification suites (--seed) and the rewrite step bound
(--max-steps).  Exit codes: 0 success, 1 verification failure, 2 usage or
expression parse error, 3 domain error (invalid bundle, not Fano, step bound
exceeded).  Output is deterministic: identical argv and seed produce
byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .bundle import (
    A1,
    A2,
    BundleSpec,
    CurveClass,
    anticanonical,
    chern,
    grading,
    intersect_curve,
    validate_spec,
)
from .errors import ExpressionError, QBundleError
from .expr import parse_polynomial
from .gwrules import InvariantQuery, evaluate
from .pairing import compute_pairing
from .poly import Monomial, Polynomial
from .rewrite import (
    DEFAULT_MAX_STEPS,
    RingKind,
    build_presentation,
    normal_form,
    reduce_mod,
)
from .verify import run_suite, scan

_NEEDS_SPEC = {
    "info",
    "present",
    "basis",
    "nf",
    "mul",
    "pairing",
    "dual",
    "gw",
    "verify",
}


def _twists(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated integer list, got {text!r}"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbundle",
        description="exact classical and quantum cohomology of projectivized "
        "split bundles over projective space",
    )
    parser.add_argument("--n", type=int, help="dimension of the base projective space")
    parser.add_argument("--m", type=_twists, help="comma-separated twists, e.g. 1,2")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--seed", type=int, default=0, help="seed for verification suites")
    parser.add_argument(
        "--max-steps",
        type=int,
        default=DEFAULT_MAX_STEPS,
        help="rewrite step bound per normal form",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("info", help="bundle invariants and flags")

    present = sub.add_parser("present", help="ring presentation rules")
    present.add_argument("--ring", choices=["classical", "quantum"], default="quantum")

    sub.add_parser("basis", help="monomial basis in canonical order")

    nf = sub.add_parser("nf", help="normal form of an expression")
    nf.add_argument("expr")
    nf.add_argument("--ring", choices=["classical", "quantum"], default="quantum")
    nf.add_argument("--mod-q1", action="store_true", help="drop q1 terms afterwards")
    nf.add_argument("--mod-q2", action="store_true", help="drop q2 terms afterwards")

    mul = sub.add_parser("mul", help="product of two expressions, then normal form")
    mul.add_argument("left")
    mul.add_argument("right")
    mul.add_argument("--ring", choices=["classical", "quantum"], default="quantum")
    mul.add_argument("--mod-q1", action="store_true")
    mul.add_argument("--mod-q2", action="store_true")

    sub.add_parser("pairing", help="pairing matrix over the basis")
    sub.add_parser("dual", help="dual basis classes")

    gw = sub.add_parser("gw", help="pattern evaluation of a three-point invariant")
    gw.add_argument("--a", type=int, required=True, help="multiple of the fiber line class")
    gw.add_argument("--b", type=int, required=True, help="multiple of the section class")
    gw.add_argument("alpha")
    gw.add_argument("beta")
    gw.add_argument("gamma")

    sub.add_parser("verify", help="run the identity suite on this bundle")

    scan_cmd = sub.add_parser("scan", help="run the suite over a Fano family")
    scan_cmd.add_argument("--n-max", type=int, required=True)
    scan_cmd.add_argument("--r-max", type=int, required=True)
    scan_cmd.add_argument("--m-max", type=int, required=True)

    return parser


def _poly_json(p: Polynomial) -> dict:
    return {"terms": p.to_records()}


def _mono_json(mono: Monomial) -> dict:
    return {"xi": mono.e_xi, "h": mono.e_h, "q1": mono.e_q1, "q2": mono.e_q2}


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _ring_kind(name: str) -> RingKind:
    return RingKind.QUANTUM if name == "quantum" else RingKind.CLASSICAL


def _cmd_info(args, spec: BundleSpec) -> int:
    minus_k = anticanonical(spec)
    degrees: tuple[Optional[int], Optional[int]] = (None, None)
    if spec.fano:
        g = grading(spec)
        degrees = (g.deg_q1, g.deg_q2)
    payload = {
        "n": spec.n,
        "m": list(spec.m),
        "r": spec.r,
        "c1": spec.c1,
        "dim": spec.dim,
        "cbar": list(chern(spec).cbar),
        "fano": spec.fano,
        "theorem_hypothesis": spec.theorem_hypothesis,
        "qin_ruan_condition": spec.qin_ruan_condition,
        "anticanonical": {
            "xi": minus_k.coef_xi,
            "h": minus_k.coef_h,
            "text": str(minus_k),
        },
        "anticanonical_dot_a1": intersect_curve(minus_k, A1),
        "anticanonical_dot_a2": intersect_curve(minus_k, A2),
        "deg_q1": degrees[0],
        "deg_q2": degrees[1],
        "basis_size": spec.r * (spec.n + 1),
    }
    if args.json:
        _emit(payload)
        return 0
    print(f"n: {spec.n}")
    print(f"m: {','.join(str(x) for x in spec.m)}")
    for key in (
        "r", "c1", "dim", "fano", "theorem_hypothesis", "qin_ruan_condition",
    ):
        print(f"{key}: {json.dumps(payload[key])}")
    print(f"cbar: {','.join(str(x) for x in payload['cbar'])}")
    print(f"anticanonical: {minus_k}")
    print(f"anticanonical_dot_a1: {payload['anticanonical_dot_a1']}")
    print(f"anticanonical_dot_a2: {payload['anticanonical_dot_a2']}")
    for key in ("deg_q1", "deg_q2"):
        value = payload[key]
        print(f"{key}: {value if value is not None else 'n/a (NotFano)'}")
    print(f"basis_size: {payload['basis_size']}")
    return 0


def _cmd_present(args, spec: BundleSpec) -> int:
    pres = build_presentation(spec, _ring_kind(args.ring))
    rules = [
        {
            "head": _mono_json(rule.head),
            "head_text": str(rule.head),
            "replacement": _poly_json(rule.replacement),
            "text": f"{rule.head} -> {rule.replacement}",
        }
        for rule in pres.rules
    ]
    if args.json:
        payload = {
            "ring": pres.kind.value,
            "rules": rules,
            "grading": None
            if pres.grading is None
            else {"deg_q1": pres.grading.deg_q1, "deg_q2": pres.grading.deg_q2},
        }
        _emit(payload)
        return 0
    print(f"ring: {pres.kind.value}")
    for rule in rules:
        print(rule["text"])
    if pres.grading is not None:
        print(f"deg_q1: {pres.grading.deg_q1}")
        print(f"deg_q2: {pres.grading.deg_q2}")
    return 0


def _cmd_basis(args, spec: BundleSpec) -> int:
    basis = build_presentation(spec, RingKind.CLASSICAL).basis
    if args.json:
        _emit({"basis": [_poly_json(Polynomial.monomial(mono)) for mono in basis]})
        return 0
    for mono in basis:
        print(mono)
    return 0


def _normalized(args, spec: BundleSpec, p: Polynomial) -> Polynomial:
    pres = build_presentation(spec, _ring_kind(args.ring))
    result = normal_form(p, pres, args.max_steps)
    if args.mod_q1:
        result = reduce_mod(result, "q1")
    if args.mod_q2:
        result = reduce_mod(result, "q2")
    return result


def _cmd_nf(args, spec: BundleSpec) -> int:
    result = _normalized(args, spec, parse_polynomial(args.expr))
    if args.json:
        _emit(_poly_json(result))
    else:
        print(result)
    return 0


def _cmd_mul(args, spec: BundleSpec) -> int:
    product = parse_polynomial(args.left) * parse_polynomial(args.right)
    result = _normalized(args, spec, product)
    if args.json:
        _emit(_poly_json(result))
    else:
        print(result)
    return 0


def _cmd_pairing(args, spec: BundleSpec) -> int:
    data = compute_pairing(spec)
    if args.json:
        _emit(
            {
                "basis": [_poly_json(Polynomial.monomial(m)) for m in data.basis],
                "size": len(data.basis),
                "matrix": [str(x) for row in data.matrix for x in row],
                "det": str(data.determinant),
            }
        )
        return 0
    print("basis: " + ", ".join(str(m) for m in data.basis))
    print("matrix:")
    for row in data.matrix:
        print(" ".join(str(x) for x in row))
    print(f"det: {data.determinant}")
    return 0


def _cmd_dual(args, spec: BundleSpec) -> int:
    data = compute_pairing(spec)
    if args.json:
        _emit(
            {
                "basis": [_poly_json(Polynomial.monomial(m)) for m in data.basis],
                "duals": [_poly_json(d) for d in data.duals],
            }
        )
        return 0
    for mono, dual in zip(data.basis, data.duals):
        print(f"{mono} -> {dual}")
    return 0


def _cmd_gw(args, spec: BundleSpec) -> int:
    query = InvariantQuery(
        spec=spec,
        curve=CurveClass(args.a, args.b),
        alpha=parse_polynomial(args.alpha),
        beta=parse_polynomial(args.beta),
        gamma=parse_polynomial(args.gamma),
    )
    answer = evaluate(query)
    if answer.known:
        payload = {"status": "known", "value": answer.value, "rule": answer.rule}
    else:
        payload = {"status": "unknown"}
    if args.json:
        _emit(payload)
        return 0
    print(f"status: {payload['status']}")
    if answer.known:
        print(f"value: {answer.value}")
        print(f"rule: {answer.rule}")
    return 0


def _print_report_table(report) -> None:
    print(f"{report.spec} seed={report.seed}")
    for check in report.checks:
        print(f"{check.name:<32} {check.status:<8} {check.detail}")
    passed, failed, skipped = report.counts
    print(f"summary: {passed} pass, {failed} fail, {skipped} skipped")


def _cmd_verify(args, spec: BundleSpec) -> int:
    report = run_suite(spec, args.seed, max_steps=args.max_steps)
    if args.json:
        _emit(report.to_jsonable())
    else:
        _print_report_table(report)
    return 0 if report.ok else 1


def _cmd_scan(args) -> int:
    result = scan(args.n_max, args.r_max, args.m_max, args.seed)
    if args.json:
        _emit(result.to_jsonable())
    else:
        if result.note:
            print(f"note: {result.note}")
        for report in result.reports:
            passed, failed, skipped = report.counts
            print(f"{report.spec}: {passed} pass, {failed} fail, {skipped} skipped")
        print(f"scanned {len(result.reports)} instances")
    if result.note:
        return 3
    return 0 if result.ok else 1


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        if args.command == "scan":
            return _cmd_scan(args)
        if args.command in _NEEDS_SPEC:
            if args.n is None or args.m is None:
                print(
                    f"error: --n and --m are required for '{args.command}'",
                    file=sys.stderr,
                )
                return 2
            if list(args.m) != sorted(args.m):
                print(
                    f"warning: twists {list(args.m)} re-sorted ascending",
                    file=sys.stderr,
                )
            spec = validate_spec(args.n, args.m)
            handler = {
                "info": _cmd_info,
                "present": _cmd_present,
                "basis": _cmd_basis,
                "nf": _cmd_nf,
                "mul": _cmd_mul,
                "pairing": _cmd_pairing,
                "dual": _cmd_dual,
                "gw": _cmd_gw,
                "verify": _cmd_verify,
            }[args.command]
            return handler(args, spec)
        raise AssertionError(f"unhandled command {args.command!r}")
    except ExpressionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (QBundleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
