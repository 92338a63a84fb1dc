"""Exact recognition of classical orthogonal polynomial sequences on
q-quadratic lattices from their three-term recurrence coefficients."""

from .scalar import QParam, Scalar, alpha, alpha_n, format_scalar, gamma_n
from .sympoly import XPoly, ZSym, dq_apply, sq_apply, to_xpoly, to_zsym
from .ttrr import (CallableSource, CoeffSource, InsufficientDataError,
                   MomentTable, RegularityError, TabulatedSource,
                   apply_functional, expand_monic, moments,
                   pearson_residual, recover_coeffs)
from .families import (AWParams, AdmissibilityError, aw_coeffs, aw_source,
                       family_source, limit_family, limit_source,
                       remark_counterexample, remark_source)
from .expr import (ExprEvalError, ExprSource, ExprSyntaxError, eval_expr,
                   parse, parse_xpoly, print_expr)
from .classify import (CLASSICAL, INCONCLUSIVE_DATA, INCONCLUSIVE_SINGULAR,
                       NOT_CLASSICAL, NecessaryReport, PearsonPair,
                       SingularDenominator, Thm2State, Verdict, classify,
                       necessary_check, pearson_from_head, thm2_generate)

__version__ = "0.1.0"

__all__ = [
    "QParam", "Scalar", "alpha", "alpha_n", "gamma_n", "format_scalar",
    "XPoly", "ZSym", "to_zsym", "to_xpoly", "dq_apply", "sq_apply",
    "CoeffSource", "TabulatedSource", "CallableSource", "ExprSource",
    "MomentTable", "expand_monic", "moments", "apply_functional",
    "recover_coeffs", "pearson_residual",
    "RegularityError", "InsufficientDataError", "AdmissibilityError",
    "AWParams", "aw_coeffs", "aw_source", "limit_family", "limit_source",
    "remark_counterexample", "remark_source", "family_source",
    "parse", "eval_expr", "print_expr", "parse_xpoly",
    "ExprSyntaxError", "ExprEvalError",
    "PearsonPair", "NecessaryReport", "Thm2State", "Verdict",
    "pearson_from_head", "necessary_check", "thm2_generate", "classify",
    "SingularDenominator",
    "CLASSICAL", "NOT_CLASSICAL", "INCONCLUSIVE_SINGULAR", "INCONCLUSIVE_DATA",
]
