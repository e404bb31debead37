"""Exact factorization of separable polynomials over rational function
fields K = GF(p^d)(x), with restricted-coefficient factor search, absolute
irreducibility testing and root finding in prescribed constant-field
subspaces."""

__version__ = "0.1.0"

from .bounds import SubspaceSpec, compute_delta, default_subspaces, find_place, place_from_alpha
from .fields import FieldCtx, FieldElem, parse_field
from .modes import run_factor, run_irreducible, run_restricted, run_roots
from .parse import parse_basis, parse_ratfunc, parse_tpoly
from .poly import Poly, RatFunc, TPoly, discriminant, make_separable_check
from .search import FactorReport, collect_all_restricted_factors, restricted_factor

__all__ = [
    "FieldCtx",
    "FieldElem",
    "Poly",
    "RatFunc",
    "TPoly",
    "SubspaceSpec",
    "FactorReport",
    "parse_field",
    "parse_tpoly",
    "parse_ratfunc",
    "parse_basis",
    "discriminant",
    "make_separable_check",
    "compute_delta",
    "default_subspaces",
    "find_place",
    "place_from_alpha",
    "restricted_factor",
    "collect_all_restricted_factors",
    "run_factor",
    "run_irreducible",
    "run_roots",
    "run_restricted",
    "__version__",
]
