"""Degree-by-degree checks of I_r = I_{k+1} ∩ J_r for the generic matrix.

Equalities are verified in every degree up to a cap E, which is evidence at
desk scale rather than a certificate; reports say "up to degree E".
"""

from __future__ import annotations

import numpy as np
import structlog

from app.models.report import DetLociCheck, DimensionRow
from app.services.algebra import PrimeField
from app.services.algebra.monomials import basis_size
from app.services.detloci.blocks import DetIdealPieces, IdealFamily, intersection_dim
from app.services.detloci.exceptions import UnsupportedSizeError
from app.services.detloci.ring import GenericMatrixRing, witness_A, witness_B
from app.services.hilbertburch.formulas import codimension_claims, expected_codim_rank_locus

logger = structlog.get_logger(__name__)

MAX_K = 3


class DetLociWorkspace:
    """Shares the graded pieces of every I_r and J_r across the checks for one k."""

    def __init__(self, k: int, field: PrimeField | None = None):
        self.ring = GenericMatrixRing(k, field)
        self._ideals: dict[tuple[str, int], DetIdealPieces] = {}

    @property
    def k(self) -> int:
        return self.ring.k

    def ideal(self, which: IdealFamily, r: int) -> DetIdealPieces:
        key = (which, r)
        if key not in self._ideals:
            self._ideals[key] = DetIdealPieces(self.ring, which, r)
        return self._ideals[key]


def _workspace(k: int, workspace: DetLociWorkspace | None) -> DetLociWorkspace:
    if workspace is None:
        return DetLociWorkspace(k)
    if workspace.k != k:
        raise UnsupportedSizeError(f"workspace is for k = {workspace.k}, not {k}")
    return workspace


def check_decomposition(
    k: int,
    r: int,
    E: int,
    workspace: DetLociWorkspace | None = None,
) -> tuple[bool, list[DimensionRow]]:
    """dim (I_r)_e = dim (I_{k+1} ∩ J_r)_e and I_r ⊆ I_{k+1}, J_r for every e <= E.

    Returns:
        Whether every degree holds, and the per-degree dimension table
    """
    if E < k + 2:
        raise UnsupportedSizeError(f"degree cap {E} is below k + 2 = {k + 2}")
    ws = _workspace(k, workspace)
    ir, ik1, jr = ws.ideal("I", r), ws.ideal("I", k + 1), ws.ideal("J", r)

    table = []
    for e in range(E + 1):
        piece_ir, piece_ik1, piece_jr = ir.piece(e), ik1.piece(e), jr.piece(e)
        contained = piece_ik1.contains(piece_ir) and piece_jr.contains(piece_ir)
        intersection = intersection_dim(piece_ik1, piece_jr)
        table.append(
            DimensionRow(
                e=e,
                dim_ir=piece_ir.dim,
                dim_ik1=piece_ik1.dim,
                dim_jr=piece_jr.dim,
                dim_sum=(piece_ik1 + piece_jr).dim,
                dim_intersection=intersection,
                contained=contained,
                holds=contained and piece_ir.dim == intersection,
            )
        )
    holds = all(row.holds for row in table)
    logger.info("decomposition_checked", k=k, r=r, max_degree=E, holds=holds)
    return holds, table


def check_cramer_membership(k: int, r: int, workspace: DetLociWorkspace | None = None) -> bool:
    """P * F_{r+1} lies in (F_1, .., F_r) for every generator P of J_r."""
    if not 1 <= r <= k:
        raise UnsupportedSizeError(f"Cramer membership needs 1 <= r <= k, got r = {r}")
    ws = _workspace(k, workspace)
    ir = ws.ideal("I", r)
    following = ws.ring.minor(r + 1)
    for generator in ws.ring.j_generators(r):
        product = generator * following
        if not ir.piece(product.degree).contains_form(product):
            return False
    return True


def check_generator_exclusion(k: int, r: int, workspace: DetLociWorkspace | None = None) -> bool:
    """F_{r+1} is not in (J_r)_k."""
    if not 1 <= r <= k:
        raise UnsupportedSizeError(f"generator exclusion needs 1 <= r <= k, got r = {r}")
    ws = _workspace(k, workspace)
    return not ws.ideal("J", r).piece(k).contains_form(ws.ring.minor(r + 1))


def witness_noninclusions(k: int, r: int, field: PrimeField | None = None) -> bool:
    """A_r lies on L_{k+1} but off N_r (r >= 2); B lies on N_r but off L_{k+1} (r <= k)."""
    ring = GenericMatrixRing(k, field)
    ring.check_r(r)
    ok = True
    if 2 <= r <= k:
        point = witness_A(k, r)
        ok &= all(ring.evaluate(f, point) == 0 for f in ring.minors)
        ok &= any(ring.evaluate(g, point) != 0 for g in ring.j_generators(r))
    if r <= k:
        point = witness_B(k)
        ok &= all(ring.evaluate(g, point) == 0 for g in ring.j_generators(r))
        ok &= ring.evaluate(ring.minor(k + 1), point) in (1, ring.field.prime - 1)
    return ok


def check_codim_growth(k: int, E: int, workspace: DetLociWorkspace | None = None) -> int | None:
    """Codimension of V(I_{k+1}) from finite differences of h_{S/I_{k+1}} on degrees 1..E.

    Returns None when the window is too short to pin down a Hilbert polynomial
    of the degree a codimension-two locus would have.
    """
    ws = _workspace(k, workspace)
    nvars = ws.ring.nvars
    polynomial_degree = nvars - 3
    if E < polynomial_degree + 2:
        return None
    ik1 = ws.ideal("I", k + 1)
    values = np.array([basis_size(nvars, e) - ik1.dim(e) for e in range(1, E + 1)], dtype=np.int64)
    for order in range(len(values)):
        differences = np.diff(values, n=order)
        if not differences.any():
            return nvars - order
    return None


def detloci_checks(k: int, E: int, field: PrimeField | None = None) -> list[DetLociCheck]:
    """Every determinantal-locus check for one k, in report order."""
    if not 1 <= k <= MAX_K:
        raise UnsupportedSizeError(f"k must lie in 1..{MAX_K}, got {k}")
    ws = DetLociWorkspace(k, field)
    checks = []
    for r in range(1, k + 2):
        holds, table = check_decomposition(k, r, E, ws)
        checks.append(
            DetLociCheck(
                check="decomposition",
                k=k,
                r=r,
                passed=holds,
                detail=f"I_{r} = I_{k + 1} ∩ J_{r} verified up to degree {E}" if holds else "",
                table=table,
            )
        )
    for r in range(1, k + 1):
        checks.append(
            DetLociCheck(
                check="cramer_membership",
                k=k,
                r=r,
                passed=check_cramer_membership(k, r, ws),
                detail=f"J_{r} * F_{r + 1} ⊆ I_{r}; only this inclusion of J_{r} = (I_{r} : F_{r + 1}) is checked",
            )
        )
        checks.append(
            DetLociCheck(
                check="generator_exclusion",
                k=k,
                r=r,
                passed=check_generator_exclusion(k, r, ws),
                detail=f"F_{r + 1} not in (J_{r})_{k}",
            )
        )
        checks.append(
            DetLociCheck(check="witness_noninclusions", k=k, r=r, passed=witness_noninclusions(k, r, field))
        )

    observed = check_codim_growth(k, E, ws)
    expected = expected_codim_rank_locus(k + 1, k, k - 1)
    if observed is None:
        checks.append(
            DetLociCheck(
                check="codim_growth",
                k=k,
                passed=True,
                skipped=True,
                detail=f"degree window {E} too short for {ws.ring.nvars} variables",
            )
        )
    else:
        checks.append(
            DetLociCheck(
                check="codim_growth",
                k=k,
                passed=observed == expected,
                detail=f"observed {observed}, expected {expected}",
            )
        )

    for claim in codimension_claims(k):
        checks.append(
            DetLociCheck(
                check=f"codim {claim.label}",
                k=k,
                passed=claim.computed == claim.claimed,
                detail=f"({claim.rows}-{claim.rank})({claim.cols}-{claim.rank}) = {claim.computed}, claimed {claim.claimed}",
            )
        )
    return checks
