"""Tests for the generic matrix ring and the determinantal-locus checks."""

from math import comb

import numpy as np
import pytest

from app.services.algebra import HomogeneousForm, PrimeField
from app.services.detloci import (
    DetLociWorkspace,
    GenericMatrixRing,
    check_codim_growth,
    check_cramer_membership,
    check_decomposition,
    check_generator_exclusion,
    detloci_checks,
    generated_piece,
    generic_F,
    jr_generators,
    multigraded_basis,
    witness_A,
    witness_B,
    witness_noninclusions,
)
from app.services.detloci.exceptions import DetLociError, UnsupportedSizeError


def _letters(field: PrimeField) -> list[HomogeneousForm]:
    """a .. f for the matrix ((a, b), (c, d), (e, f))."""
    return [HomogeneousForm.variable(6, i, field) for i in range(6)]


def test_minors_of_the_generic_three_by_two(field: PrimeField) -> None:
    """Signed maximal minors and J_r generators for k = 2."""
    a, b, c, d, e, f = _letters(field)
    assert generic_F(2, 1, field) == c * f - d * e
    assert generic_F(2, 2, field) == a * f - b * e
    assert generic_F(2, 3, field) == a * d - b * c
    assert jr_generators(2, 2, field) == (e, f)
    assert jr_generators(2, 1, field) == (c * f - d * e,)


def test_last_j_is_the_unit_ideal(field: PrimeField) -> None:
    """J_{k+1} is generated by a nonzero constant."""
    (one,) = jr_generators(2, 3, field)
    assert one.degree == 0
    assert not one.is_zero()


def test_ring_indexing(field: PrimeField) -> None:
    """Entry (i, j) maps to variable k(i-1) + (j-1)."""
    ring = GenericMatrixRing(3, field)
    assert ring.nvars == 12
    assert ring.index(1, 1) == 0
    assert ring.index(4, 3) == 11
    with pytest.raises(UnsupportedSizeError):
        ring.index(5, 1)
    with pytest.raises(UnsupportedSizeError):
        GenericMatrixRing(0)
    with pytest.raises(UnsupportedSizeError):
        ring.i_generators(5)


def test_witness_points() -> None:
    """Witness matrices for k = 2."""
    assert witness_A(2, 2).tolist() == [[0, 0], [0, 0], [1, 0]]
    assert witness_B(2).tolist() == [[1, 0], [0, 1], [0, 0]]


def test_multigraded_blocks_cover_the_basis() -> None:
    """Every monomial lands in exactly one block."""
    basis = multigraded_basis(2, 3)
    assert basis.size == comb(8, 5)
    assert int(basis.block_sizes.sum()) == basis.size
    assert np.all(basis.local_index < basis.block_sizes[basis.block_of])


def test_generated_piece_dimensions(field: PrimeField) -> None:
    """Dimensions of graded pieces spanned by minors."""
    ring = GenericMatrixRing(2, field)
    minors = ring.minors
    # the three 2x2 minors are linearly independent quadrics
    assert generated_piece(minors, 2, 2, field.prime).dim == 3
    assert generated_piece(minors[:1], 2, 3, field.prime).dim == 6
    assert generated_piece(jr_generators(2, 3, field), 2, 2, field.prime).dim == comb(7, 5)


def test_generated_piece_rejects_mixed_multidegrees(field: PrimeField) -> None:
    """Generators must be multihomogeneous."""
    a, b, *_ = _letters(field)
    with pytest.raises(DetLociError):
        generated_piece([a * a + a * b], 2, 2, field.prime)


def test_piece_membership(field: PrimeField) -> None:
    """Containment of forms and pieces in I_3."""
    a, b, c, d, e, f = _letters(field)
    workspace = DetLociWorkspace(2, field)
    i3 = workspace.ideal("I", 3)
    assert i3.piece(3).contains_form(e * (a * d - b * c))
    assert not i3.piece(2).contains_form(a * a)
    assert i3.piece(2).contains(workspace.ideal("I", 1).piece(2))


@pytest.mark.parametrize("k", [1, 2])
def test_decomposition_holds(k: int, field: PrimeField) -> None:
    """I_r = I_{k+1} intersect J_r in every degree of the window."""
    workspace = DetLociWorkspace(k, field)
    for r in range(1, k + 2):
        holds, table = check_decomposition(k, r, k + 4, workspace)
        assert holds, table
        assert [row.e for row in table] == list(range(k + 5))
        assert table[0].dim_ir == 0


def test_decomposition_needs_a_long_enough_window() -> None:
    """A degree cap below k + 2 is refused."""
    with pytest.raises(UnsupportedSizeError):
        check_decomposition(2, 1, 3)


def test_decomposition_table_for_one_minor(field: PrimeField) -> None:
    """I_1 = (F_1) has dimension C(e+3, 5) in degree e for k = 2."""
    _, table = check_decomposition(2, 1, 5, DetLociWorkspace(2, field))
    assert [row.dim_ir for row in table] == [0, 0] + [comb(e + 3, 5) for e in range(2, 6)]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_cramer_exclusion_and_witnesses(k: int, field: PrimeField) -> None:
    """Cramer membership, generator exclusion and witnesses for r <= k."""
    workspace = DetLociWorkspace(k, field)
    for r in range(1, k + 1):
        assert check_cramer_membership(k, r, workspace)
        assert check_generator_exclusion(k, r, workspace)
        assert witness_noninclusions(k, r, field)


def test_cramer_membership_range(field: PrimeField) -> None:
    """Cramer membership is only defined for r <= k."""
    with pytest.raises(UnsupportedSizeError):
        check_cramer_membership(2, 3, DetLociWorkspace(2, field))


def test_codim_growth(field: PrimeField) -> None:
    """Codimension of the maximal-minor locus from Hilbert differences."""
    assert check_codim_growth(1, 5, DetLociWorkspace(1, field)) == 2
    assert check_codim_growth(2, 6, DetLociWorkspace(2, field)) == 2
    assert check_codim_growth(3, 7, DetLociWorkspace(3, field)) is None


def test_workspace_must_match_k(field: PrimeField) -> None:
    """A workspace built for another k is refused."""
    with pytest.raises(UnsupportedSizeError):
        check_generator_exclusion(1, 1, DetLociWorkspace(2, field))


def test_all_checks_pass_for_k_two(field: PrimeField) -> None:
    """The full check list for k = 2 passes."""
    checks = detloci_checks(2, 6, field)
    assert all(check.passed for check in checks), [c.check for c in checks if not c.passed]
    names = [check.check for check in checks]
    assert names.count("decomposition") == 3
    assert names.count("witness_noninclusions") == 2
    growth = next(check for check in checks if check.check == "codim_growth")
    assert not growth.skipped


def test_detloci_rejects_large_k(field: PrimeField) -> None:
    """Matrices beyond 4 x 3 are not supported."""
    with pytest.raises(UnsupportedSizeError):
        detloci_checks(4, 8, field)
