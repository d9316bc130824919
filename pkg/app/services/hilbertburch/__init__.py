"""Resolution-data arithmetic, Hilbert-Burch sampling and envelope predictions."""

from app.services.hilbertburch.formulas import (
    CodimensionClaim,
    CorollaryClauses,
    codimension_claims,
    corollary_clauses,
    d_r_for_n,
    expected_codim_rank_locus,
    expected_profile,
    generic_resolution_data,
    is_positive,
    parse_resolution_data,
    points_count,
    r_of,
    require_positive,
)
from app.services.hilbertburch.sampling import minors_of, sample_hb_matrix
from app.services.hilbertburch.verification import CHECKS, verify_hb_sample

__all__ = [
    "CHECKS",
    "CodimensionClaim",
    "CorollaryClauses",
    "codimension_claims",
    "corollary_clauses",
    "d_r_for_n",
    "expected_codim_rank_locus",
    "expected_profile",
    "generic_resolution_data",
    "is_positive",
    "parse_resolution_data",
    "points_count",
    "r_of",
    "require_positive",
    "minors_of",
    "sample_hb_matrix",
    "verify_hb_sample",
]
