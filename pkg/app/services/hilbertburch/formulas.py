"""Arithmetic of resolution data and the envelope predictions it implies."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from pydantic import ValidationError

from app.models.envelope import EnvelopeKind, ExpectedEnvelope, ExpectedProfile
from app.models.resolution import ResolutionData
from app.services.hilbertburch.exceptions import (
    HilbertBurchError,
    InvalidResolutionDataError,
    NonPositiveDataError,
)


def parse_resolution_data(text: str) -> ResolutionData:
    """Parse `a=3,3,4 b=5,5`."""
    try:
        return ResolutionData.parse(text)
    except (ValueError, ValidationError) as e:
        raise InvalidResolutionDataError(str(e)) from e


def is_positive(data: ResolutionData) -> bool:
    """a_{k+1} < b_1."""
    return max(data.a) < min(data.b)


def require_positive(data: ResolutionData) -> None:
    if not is_positive(data):
        raise NonPositiveDataError(
            f"resolution data {data} is not positive: a_(k+1) = {max(data.a)} >= b_1 = {min(data.b)}"
        )


def points_count(data: ResolutionData) -> int:
    """n = (sum b_j^2 - sum a_i^2) / 2."""
    twice = sum(b * b for b in data.b) - sum(a * a for a in data.a)
    if twice <= 0 or twice % 2:
        raise InvalidResolutionDataError(f"{data} gives (sum b^2 - sum a^2) = {twice}")
    return twice // 2


def d_r_for_n(n: int) -> tuple[int, int]:
    """(d, r) with C(d+1, 2) <= n = C(d+2, 2) - r and r > 0."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    d = 0
    while comb(d + 2, 2) <= n:
        d += 1
    return d, comb(d + 2, 2) - n


def generic_resolution_data(n: int) -> ResolutionData:
    """Resolution data of n general points.

    With (d, r) = d_r_for_n(n): if 2r >= d+2 all r generators have degree d, so
    k = r - 1, and 2r - d - 2 syzygies have degree d+1, the rest d+2; if
    2r <= d+2 then k = d+1-r, r generators have degree d and the rest d+1, and
    every syzygy has degree d+2. Both cases agree when 2r = d+2.
    """
    d, r = d_r_for_n(n)
    if 2 * r >= d + 2:
        k = r - 1
        a = [d] * r
        low = 2 * r - d - 2
        b = [d + 1] * low + [d + 2] * (k - low)
    else:
        k = d + 1 - r
        a = [d] * r + [d + 1] * (k + 1 - r)
        b = [d + 2] * k
    data = ResolutionData(a=tuple(a), b=tuple(b))
    if points_count(data) != n:
        raise HilbertBurchError(f"generic data {data} counts {points_count(data)} points, not {n}")
    return data


@dataclass(frozen=True)
class CorollaryClauses:
    """What the general-points statement predicts for n general points."""

    n: int
    d: int
    r: int
    ggds: tuple[int, ...]
    curve_degree: int | None = None
    finite_degree: int | None = None
    extra_points: int | None = None


def corollary_clauses(n: int) -> CorollaryClauses:
    """Predicted generating degrees and Z_d for n > 1 general points."""
    if n < 2:
        raise ValueError(f"the general-points clauses need n > 1, got {n}")
    d, r = d_r_for_n(n)
    if r == 1:
        return CorollaryClauses(n, d, r, ggds=(d, d + 1), curve_degree=d)
    if r == 2 and d > 2:
        return CorollaryClauses(
            n, d, r, ggds=(d, d + 1), finite_degree=d * d, extra_points=comb(d - 1, 2)
        )
    return CorollaryClauses(n, d, r, ggds=(d,))


def r_of(data: ResolutionData, d: int) -> int:
    """#{a_i <= d}."""
    return sum(1 for a in data.a if a <= d)


def expected_profile(data: ResolutionData) -> ExpectedProfile:
    """Envelope shapes of Z(A)_d for general A with this data, d = 1 .. a_{k+1}.

    codim Z(A)_d = r(d) while r(d) <= 2; Z(A)_d = Z(A) exactly when r(d) = 2
    for k = 1 and when r(d) > 2 for k >= 2. A codimension-two envelope that is
    not Z(A) is predicted to have degree a_1 * a_2.
    """
    require_positive(data)
    a1, a2 = data.a[0], data.a[1]
    envelopes = []
    for d in range(1, data.a[-1] + 1):
        r = r_of(data, d)
        if r == 0:
            envelopes.append(ExpectedEnvelope(d=d, kind=EnvelopeKind.PLANE))
        elif r == 1:
            envelopes.append(ExpectedEnvelope(d=d, kind=EnvelopeKind.CURVE, curve_degree=a1))
        elif r == 2 and data.k >= 2:
            envelopes.append(ExpectedEnvelope(d=d, kind=EnvelopeKind.FINITE, scheme_degree=a1 * a2))
        else:
            envelopes.append(
                ExpectedEnvelope(d=d, kind=EnvelopeKind.EQUALS_Z, scheme_degree=points_count(data))
            )
    ggds = sorted(set(data.a[:2] if data.k == 1 else data.a[:3]))
    return ExpectedProfile(resolution=data, envelopes=envelopes, ggds_expected=ggds)


def expected_codim_rank_locus(m: int, n: int, c: int) -> int:
    """Codimension (m-c)(n-c) of the m x n matrices of rank at most c."""
    if not 0 <= c <= min(m, n):
        raise ValueError(f"rank bound {c} outside 0..{min(m, n)}")
    return (m - c) * (n - c)


@dataclass(frozen=True)
class CodimensionClaim:
    label: str
    rows: int
    cols: int
    rank: int
    claimed: int

    @property
    def computed(self) -> int:
        return expected_codim_rank_locus(self.rows, self.cols, self.rank)


def codimension_claims(k: int) -> list[CodimensionClaim]:
    """The rank-locus codimensions behind L_{k+1}, its singular locus, N_r and Sing N_r."""
    claims = [CodimensionClaim("L_k+1", k + 1, k, k - 1, 2)]
    if k >= 2:
        claims.append(CodimensionClaim("Sing L_k+1", k + 1, k, k - 2, 6))
    for r in range(1, k + 1):
        claims.append(CodimensionClaim(f"N_{r}", k + 1 - r, k, k - r, r))
        if k - r - 1 >= 0:
            claims.append(CodimensionClaim(f"Sing N_{r}", k + 1 - r, k, k - r - 1, 2 * (r + 1)))
    return claims
