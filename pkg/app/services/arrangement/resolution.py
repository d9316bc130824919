"""Generator and syzygy degrees of a codimension-two ideal.

Generator degrees come from linear algebra: in each degree d the new minimal
generators number dim I_d - dim S_1 * I_{d-1}. Syzygy degrees come from the
numerator of the Hilbert series of I, N(t) = (1-t)^3 * sum_e dim I_e t^e, whose
coefficient c_d equals #{a_i = d} - #{b_j = d}.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from math import comb

import structlog

from app.core.config import settings
from app.models.resolution import ResolutionData
from app.services.algebra import basis_size
from app.services.arrangement.exceptions import ResolutionInvariantError
from app.services.arrangement.ideal import as_source
from app.services.arrangement.points import Arrangement
from app.services.gradedla import GradedPiece, IdealSource, multiply_by_variables
from app.services.gradedla.exceptions import NotStabilizedError

logger = structlog.get_logger(__name__)


def _degree_cap(source: IdealSource, cap: int | None, width: int) -> int:
    if cap is None:
        cap = settings.degree_cap()
    n = getattr(source, "n", None)
    # h reaches n by degree n - 1 for any n points
    if n is not None:
        cap = max(cap, n + width + 1)
    return cap


def generator_degrees(
    target: Arrangement | IdealSource,
    cap: int | None = None,
    width: int | None = None,
) -> list[int]:
    """Degrees of a minimal generating set, ascending.

    Stops `width` degrees after the Hilbert function first repeats a value.

    Raises:
        NotStabilizedError: If the Hilbert function has not levelled off by the cap
    """
    source = as_source(target)
    width = width or settings.stabilization_window
    cap = _degree_cap(source, cap, width)

    degrees: list[int] = []
    previous: GradedPiece | None = None
    previous_h: int | None = None
    plateau: int | None = None
    values: list[int] = []
    for d in range(cap + 1):
        current = source.piece(d)
        generated = multiply_by_variables(previous).dim if previous is not None else 0
        new = current.dim - generated
        if new < 0:
            raise ResolutionInvariantError(f"S_1 * I_{d - 1} is larger than I_{d}")
        degrees.extend([d] * new)

        h = basis_size(source.nvars, d) - current.dim
        values.append(h)
        if plateau is None and degrees and h == previous_h:
            plateau = d
        if plateau is not None and d >= plateau + width:
            logger.debug("generator_degrees_computed", degrees=degrees, plateau=plateau)
            return degrees
        previous, previous_h = current, h

    raise NotStabilizedError(f"generator degrees not settled by degree {cap}", values=values)


def hilbert_numerator(dims: Sequence[int]) -> list[int]:
    """Coefficients of (1-t)^3 * sum_e dims[e] t^e, truncated to len(dims)."""
    return [
        sum((-1) ** j * comb(3, j) * dims[d - j] for j in range(4) if d - j >= 0)
        for d in range(len(dims))
    ]


def syzygy_degrees(
    target: Arrangement | IdealSource,
    a: Sequence[int],
    e_max: int | None = None,
) -> list[int]:
    """Syzygy degrees b_j from the Hilbert-series numerator and known generator degrees.

    Raises:
        ResolutionInvariantError: If counts go negative or #b, sum(b) disagree with a
    """
    source = as_source(target)
    a = sorted(a)
    # b_k <= a_1 + a_{k+1} for any Hilbert-Burch degree matrix
    e_max = e_max if e_max is not None else a[0] + a[-1] + 1
    dims = [source.piece(e).dim for e in range(e_max + 1)]
    numerator = hilbert_numerator(dims)
    generators = Counter(a)

    b: list[int] = []
    for d, c in enumerate(numerator):
        count = generators[d] - c
        if count < 0:
            raise ResolutionInvariantError(
                f"Hilbert numerator coefficient {c} in degree {d} exceeds the generator count"
            )
        b.extend([d] * count)

    if len(b) != len(a) - 1:
        raise ResolutionInvariantError(f"found {len(b)} syzygies for {len(a)} generators")
    if sum(b) != sum(a):
        raise ResolutionInvariantError(f"sum(b) = {sum(b)} differs from sum(a) = {sum(a)}")
    return b


def resolution_data(
    target: Arrangement | IdealSource,
    cap: int | None = None,
) -> ResolutionData:
    """Generator and syzygy degrees, checked against n = (sum b^2 - sum a^2) / 2."""
    source = as_source(target)
    a = generator_degrees(source, cap=cap)
    b = syzygy_degrees(source, a)

    twice = sum(x * x for x in b) - sum(x * x for x in a)
    if twice <= 0 or twice % 2:
        raise ResolutionInvariantError(f"(sum b^2 - sum a^2) = {twice} is not a positive even number")
    n = getattr(source, "n", None)
    if n is not None and twice // 2 != n:
        raise ResolutionInvariantError(f"resolution data counts {twice // 2} points, arrangement has {n}")

    logger.debug("resolution_data_computed", a=a, b=b)
    return ResolutionData(a=tuple(a), b=tuple(b))
