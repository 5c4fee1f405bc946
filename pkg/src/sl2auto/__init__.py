"""Exact exp(ad X), log and composition for the Lie algebra of two generic traceless 2x2 matrices."""

from .algebra import Q, Poly, TruncSeries, UniSeries, VarSpec, TUV, exact_divide, baker_AB, recover_g
from .errors import ConsistencyError, NotDivisible
from .walgebra import WElement, w_mul, w_bracket, from_word
from .lie import LieDecomp, LieExpr, NotLie, lie_membership, lie_form
from .inner import AdMatrix, AutMatrix, ad_matrix, g_of, exp_ad, log_aut, apply_aut, compose, quotient_reduce
from .g3 import G3Element, G3Matrix, p_matrix, g3_g, g3_exp, g3_recover, g3_compose
from .bch import FreeSeries, bch, project_to_w, nilpotent_example
from .parser import parse, parse_w, parse_poly

__all__ = [name for name in dir() if not name.startswith("_")]
