"""Determinantal loci of the generic (k+1) x k matrix."""

from app.services.detloci.blocks import BlockedPiece, DetIdealPieces, generated_piece, multigraded_basis
from app.services.detloci.checks import (
    DetLociWorkspace,
    check_codim_growth,
    check_cramer_membership,
    check_decomposition,
    check_generator_exclusion,
    detloci_checks,
    witness_noninclusions,
)
from app.services.detloci.ring import GenericMatrixRing, generic_F, jr_generators, witness_A, witness_B

__all__ = [
    "GenericMatrixRing",
    "generic_F",
    "jr_generators",
    "witness_A",
    "witness_B",
    "BlockedPiece",
    "DetIdealPieces",
    "generated_piece",
    "multigraded_basis",
    "DetLociWorkspace",
    "check_decomposition",
    "check_cramer_membership",
    "check_generator_exclusion",
    "check_codim_growth",
    "witness_noninclusions",
    "detloci_checks",
]
