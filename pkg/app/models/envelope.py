"""Pydantic models for degree envelopes and their predicted profiles."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, computed_field, model_validator

from app.models.resolution import ResolutionData


class EnvelopeKind(str, Enum):
    """Possible shapes of the degree-d envelope Z_d."""

    PLANE = "plane"
    CURVE = "curve"
    FINITE = "finite"
    EQUALS_Z = "equals_z"


CODIMENSION = {
    EnvelopeKind.PLANE: 0,
    EnvelopeKind.CURVE: 1,
    EnvelopeKind.FINITE: 2,
    EnvelopeKind.EQUALS_Z: 2,
}


class EnvelopeReport(BaseModel):
    """Classification of one envelope Z_d."""

    d: int = Field(..., ge=0)
    kind: EnvelopeKind
    ideal_dim: int = Field(..., ge=0, description="dim I_d")
    curve_degree: Optional[int] = None
    excess: Optional[int] = None
    smooth: Optional[bool] = Field(default=None, description="None when not tested")
    scheme_degree: Optional[int] = None
    distinct_count: Optional[int] = None
    reduced: Optional[bool] = None
    is_ggd: bool = False

    @computed_field  # type: ignore[prop-decorator]
    @property
    def codim(self) -> int:
        return CODIMENSION[self.kind]

    @model_validator(mode="after")
    def _check_kind(self) -> "EnvelopeReport":
        if (self.kind is EnvelopeKind.PLANE) != (self.ideal_dim == 0):
            raise ValueError("an envelope is the plane exactly when I_d = 0")
        if self.kind is EnvelopeKind.CURVE and self.curve_degree is None:
            raise ValueError("curve envelopes carry a curve degree")
        if self.kind in (EnvelopeKind.FINITE, EnvelopeKind.EQUALS_Z):
            if self.scheme_degree is None or self.distinct_count is None:
                raise ValueError("finite envelopes carry scheme degree and distinct count")
            if self.distinct_count > self.scheme_degree:
                raise ValueError("distinct points cannot exceed the scheme degree")
            if self.reduced != (self.distinct_count == self.scheme_degree):
                raise ValueError("reduced means distinct count equals scheme degree")
        if self.kind is EnvelopeKind.EQUALS_Z and not self.reduced:
            raise ValueError("an envelope equal to Z is reduced")
        return self

    @property
    def label(self) -> str:
        """Compact form such as `Finite(9,9,reduced)` or `Curve(1,excess 1)`."""
        if self.kind is EnvelopeKind.PLANE:
            return "Plane"
        if self.kind is EnvelopeKind.EQUALS_Z:
            return "EqualsZ"
        if self.kind is EnvelopeKind.CURVE:
            smooth = {True: "smooth", False: "singular", None: "not-tested"}[self.smooth]
            return f"Curve({self.curve_degree},excess {self.excess},{smooth})"
        reduced = "reduced" if self.reduced else "non-reduced"
        return f"Finite({self.scheme_degree},{self.distinct_count},{reduced})"


class EnvelopeProfile(BaseModel):
    """The decreasing chain of envelopes Z_1 ⊇ Z_2 ⊇ ... up to the last generator degree."""

    n: int = Field(..., description="Degree of the stabilized scheme Z")
    generator_degrees: list[int]
    reports: list[EnvelopeReport]
    ggds: list[int] = Field(..., description="Geometric generating degrees, ascending")

    def at(self, d: int) -> EnvelopeReport:
        for report in self.reports:
            if report.d == d:
                return report
        raise KeyError(f"no envelope report for d={d}")


class ExpectedEnvelope(BaseModel):
    """Predicted classification of Z(A)_d for a general Hilbert-Burch matrix A."""

    d: int
    kind: EnvelopeKind
    curve_degree: Optional[int] = None
    scheme_degree: Optional[int] = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def codim(self) -> int:
        return CODIMENSION[self.kind]

    def matches(self, observed: EnvelopeReport) -> bool:
        """Shape and curve degree agree and the envelope is smooth.

        The predicted scheme degree of a finite envelope is compared separately.
        """
        if observed.kind is not self.kind:
            return False
        if self.kind is EnvelopeKind.CURVE:
            return observed.curve_degree == self.curve_degree and observed.smooth is not False
        if self.kind is EnvelopeKind.FINITE:
            return bool(observed.reduced)
        return True


class ExpectedProfile(BaseModel):
    """Envelope predictions derived from resolution data alone."""

    resolution: ResolutionData
    envelopes: list[ExpectedEnvelope]
    ggds_expected: list[int]

    def at(self, d: int) -> ExpectedEnvelope:
        for envelope in self.envelopes:
            if envelope.d == d:
                return envelope
        raise KeyError(f"no prediction for d={d}")
