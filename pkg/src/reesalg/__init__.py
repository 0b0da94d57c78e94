"""Exact computations with Rees algebras over polynomial rings in
characteristic 0 and p."""

from reesalg.closure import ClosureOptions, diff_close, is_diff_closed
from reesalg.coeff import Split, coefficient_algebra, integral_member_1d, lambda_invariant, sl
from reesalg.field import GF, INF, QQ, Field
from reesalg.grobner import GREVLEX, LEX, buchberger, ideal_member, member_bounded
from reesalg.parse import ParseError, parse_poly
from reesalg.poly import Poly, PolyRing
from reesalg.rees import ReesAlgebra, graded_piece, piece_basis, veronese
from reesalg.sing import in_sing, sing_points
from reesalg.transforms import RingMap, equal_closure_probe, main_theorem_check, total_transform

__all__ = [
    "ClosureOptions", "diff_close", "is_diff_closed",
    "Split", "coefficient_algebra", "integral_member_1d", "lambda_invariant", "sl",
    "GF", "INF", "QQ", "Field",
    "GREVLEX", "LEX", "buchberger", "ideal_member", "member_bounded",
    "ParseError", "parse_poly",
    "Poly", "PolyRing",
    "ReesAlgebra", "graded_piece", "piece_basis", "veronese",
    "in_sing", "sing_points",
    "RingMap", "equal_closure_probe", "main_theorem_check", "total_transform",
]
