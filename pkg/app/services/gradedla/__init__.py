"""Exact linear algebra on graded pieces and Hilbert functions."""

from app.services.gradedla.hilbert import (
    CurveGrowth,
    FiniteGrowth,
    GeneratedIdeal,
    Growth,
    HilbertWindow,
    IdealSource,
    NotStabilized,
    classify_growth,
    hilbert_value,
    hilbert_window,
    plane_curve_hilbert,
    stabilize,
    window_of,
)
from app.services.gradedla.linalg import inverse_mod, kernel_basis, matmul_mod, rank, row_reduce
from app.services.gradedla.pieces import (
    GradedPiece,
    multiply_by_variables,
    piece_intersection_dim,
    piece_product,
    piece_sum,
)

__all__ = [
    "GradedPiece",
    "HilbertWindow",
    "IdealSource",
    "GeneratedIdeal",
    "Growth",
    "NotStabilized",
    "FiniteGrowth",
    "CurveGrowth",
    "classify_growth",
    "hilbert_value",
    "hilbert_window",
    "plane_curve_hilbert",
    "stabilize",
    "window_of",
    "kernel_basis",
    "row_reduce",
    "rank",
    "matmul_mod",
    "inverse_mod",
    "multiply_by_variables",
    "piece_product",
    "piece_sum",
    "piece_intersection_dim",
]
