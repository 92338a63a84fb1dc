"""Command-line front end.

Subcommands:

* ``classify``  -- full verdict for a coefficient source
* ``pearson``   -- Pearson pair from the head coefficients
* ``necessary`` -- the difference-equation null-space report
* ``generate``  -- predicted coefficients from a head
* ``dq`` / ``sq`` -- apply an operator to polynomial text

Exit codes: 0 for any successfully computed verdict (including
not_classical), 2 for input or usage errors, 3 for internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .classify import (NecessaryReport, classify, necessary_check,
                       pearson_from_head, thm2_generate)
from .expr import ExprEvalError, ExprSource, ExprSyntaxError, parse_xpoly
from .families import AdmissibilityError, family_source
from .scalar import QParam, format_scalar
from .sympoly import dq_apply, sq_apply
from .ttrr import (InsufficientDataError, RegularityError, TabulatedSource)


class UsageError(ValueError):
    pass


def _add_common(p: argparse.ArgumentParser, with_source: bool):
    p.add_argument("--sqrt-q", help="exact backend: q^(1/2) as a rational, e.g. 1/2")
    p.add_argument("--q", help="float backend: q as a decimal")
    p.add_argument("--backend", choices=("exact", "float"))
    p.add_argument("--tol", type=float, default=1e-9,
                   help="relative tolerance (float backend)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--order", type=int, default=12, metavar="N",
                   help="finite order N of the verdict (default 12)")
    if with_source:
        p.add_argument("--family", help="built-in family: aw|cqh|asc|cbqh|remark")
        p.add_argument("--params", default="",
                       help='family parameters, e.g. "1/2,-1/2,1/3,0"')
        p.add_argument("--B-expr", dest="b_expr",
                       help="B_n as an expression in n and q")
        p.add_argument("--C-expr", dest="c_expr",
                       help="C_n as an expression in n and q")
        p.add_argument("--table", help="path to a JSON coefficient table")


def _qparam(args) -> QParam:
    backend = args.backend
    if args.sqrt_q is not None and args.q is not None:
        raise UsageError("give either --sqrt-q or --q, not both")
    if args.sqrt_q is not None:
        if backend == "float":
            raise UsageError("--sqrt-q selects the exact backend")
        return QParam.exact(args.sqrt_q)
    if args.q is not None:
        if backend == "exact":
            raise UsageError("the exact backend requires --sqrt-q")
        return QParam.floating(float(args.q), args.tol)
    raise UsageError("a lattice base is required: --sqrt-q p/q or --q 0.25")


def _source(args, qp: QParam):
    chosen = [x for x in ("family", "b_expr", "table")
              if getattr(args, x, None) is not None]
    if getattr(args, "b_expr", None) is not None or getattr(args, "c_expr", None) is not None:
        if not (args.b_expr and args.c_expr):
            raise UsageError("--B-expr and --C-expr must be given together")
    if len(chosen) != 1:
        raise UsageError("exactly one source is required: "
                         "--family, --B-expr/--C-expr, or --table")
    if args.family:
        params = [p for p in args.params.split(",") if p.strip()] \
            if args.params else []
        return family_source(args.family, qp, params)
    if args.b_expr:
        return ExprSource(qp, args.b_expr, args.c_expr)
    with open(args.table) as fh:
        doc = json.load(fh)
    if "q_sqrt" not in doc and "q" not in doc:
        # fall back to the command-line lattice base
        doc = dict(doc)
        if qp.backend == "exact":
            doc["q_sqrt"] = format_scalar(qp.s)
        else:
            doc["q"] = (qp.s * qp.s).real
            doc["tol"] = qp.tol
    return TabulatedSource.from_json(doc)


def _parse_head(text: str, qp: QParam):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise UsageError('--head needs four values "B0,B1,C1,C2"')
    return tuple(qp.coerce(p) for p in parts)


def _emit(args, text_lines: List[str], json_obj):
    if args.format == "json":
        print(json.dumps(json_obj, indent=2))
    else:
        print("\n".join(text_lines))


def _necessary_lines(report: NecessaryReport) -> List[str]:
    lines = [f"necessary rank: {report.rank}"]
    if report.basis:
        for a, b in report.basis:
            lines.append(f"  null vector (a_hat, b_hat) = "
                         f"({format_scalar(a)}, {format_scalar(b)})")
    else:
        lines.append("  null space is trivial: necessarily not classical")
    return lines


def _cmd_classify(args, qp: QParam) -> int:
    src = _source(args, qp)
    verdict = classify(src, qp, N=args.order,
                       validate_residuals=args.validate_residuals)
    lines = [f"status: {verdict.status}",
             f"order checked: {verdict.order_checked}"]
    if verdict.pearson:
        pp = verdict.pearson
        lines += [f"pearson a: {format_scalar(pp.a)}",
                  f"pearson b: {format_scalar(pp.b)}",
                  f"phi: {pp.phi}",
                  f"psi: {pp.psi}"]
    if verdict.necessary:
        lines += _necessary_lines(verdict.necessary)
    if verdict.first_mismatch:
        m = verdict.first_mismatch
        lines.append(f"first mismatch: {m['kind']}_{m['n']} "
                     f"predicted {m['expected']}, got {m['actual']}")
    for note in verdict.notes:
        lines.append(f"note: {note}")
    _emit(args, lines, verdict.to_json())
    return 0


def _cmd_pearson(args, qp: QParam) -> int:
    head = _parse_head(args.head, qp)
    pair = pearson_from_head(*head, qp)
    lines = [f"a: {format_scalar(pair.a)}",
             f"b: {format_scalar(pair.b)}",
             f"phi: {pair.phi}",
             f"psi: {pair.psi}"]
    _emit(args, lines, pair.to_json())
    return 0


def _cmd_necessary(args, qp: QParam) -> int:
    src = _source(args, qp)
    N = args.order
    B = [src.B(n) for n in range(N + 1)]
    C = [src.C(n) for n in range(1, N + 1)]
    report = necessary_check(B, C, qp, N)
    _emit(args, _necessary_lines(report), report.to_json())
    return 0


def _cmd_generate(args, qp: QParam) -> int:
    B0, B1, C1, C2 = _parse_head(args.head, qp)
    pair = pearson_from_head(B0, B1, C1, C2, qp)
    Bs, Cs = thm2_generate(pair.a, pair.b, B0, C1, qp, args.order)
    lines = [f"a: {format_scalar(pair.a)}", f"b: {format_scalar(pair.b)}"]
    lines += [f"B_{n}: {format_scalar(v)}" for n, v in enumerate(Bs)]
    lines += [f"C_{n + 1}: {format_scalar(v)}" for n, v in enumerate(Cs)]
    _emit(args, lines, {"a": format_scalar(pair.a),
                        "b": format_scalar(pair.b),
                        "B": [format_scalar(v) for v in Bs],
                        "C": [format_scalar(v) for v in Cs]})
    return 0


def _cmd_operator(args, qp: QParam, op) -> int:
    poly = parse_xpoly(args.poly, qp)
    out = op(poly, qp)
    _emit(args, [str(out)], {"coeffs": out.to_json()})
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qclassical",
        description="Decide whether a monic OPS given by its three-term "
                    "recurrence is classical on the q-quadratic lattice.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full classification verdict")
    _add_common(p, with_source=True)
    p.add_argument("--validate-residuals", action="store_true",
                   help="also check the Pearson moment residuals")

    p = sub.add_parser("pearson", help="Pearson pair from the head")
    _add_common(p, with_source=False)
    p.add_argument("--head", required=True, metavar='"B0,B1,C1,C2"')

    p = sub.add_parser("necessary", help="difference-equation null space")
    _add_common(p, with_source=True)

    p = sub.add_parser("generate", help="predicted coefficients from a head")
    _add_common(p, with_source=False)
    p.add_argument("--head", required=True, metavar='"B0,B1,C1,C2"')

    for name, help_ in (("dq", "apply the divided-difference operator"),
                        ("sq", "apply the averaging operator")):
        p = sub.add_parser(name, help=help_)
        _add_common(p, with_source=False)
        p.add_argument("--poly", required=True,
                       help='polynomial text, e.g. "3/4*x^2 - 3/8"')

    return ap


def run(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else 0
    try:
        qp = _qparam(args)
        if args.command == "classify":
            return _cmd_classify(args, qp)
        if args.command == "pearson":
            return _cmd_pearson(args, qp)
        if args.command == "necessary":
            return _cmd_necessary(args, qp)
        if args.command == "generate":
            return _cmd_generate(args, qp)
        if args.command == "dq":
            return _cmd_operator(args, qp, dq_apply)
        return _cmd_operator(args, qp, sq_apply)
    except (UsageError, RegularityError, AdmissibilityError,
            InsufficientDataError, ExprSyntaxError, ExprEvalError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def main():  # console-script entry point
    raise SystemExit(run())


if __name__ == "__main__":
    main()
