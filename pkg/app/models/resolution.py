"""Pydantic models for Hilbert-Burch resolution data."""

import re

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

_TEXT_FORM = re.compile(r"^\s*a\s*=\s*([\d,\s]+?)\s+b\s*=\s*([\d,\s]*?)\s*$")


class ResolutionData(BaseModel):
    """Generator degrees a_1 <= ... <= a_{k+1} and syzygy degrees b_1 <= ... <= b_k."""

    model_config = ConfigDict(frozen=True)

    a: tuple[int, ...] = Field(..., description="Generator degrees, ascending")
    b: tuple[int, ...] = Field(..., description="Syzygy degrees, ascending")

    @field_validator("a", "b")
    @classmethod
    def _sorted_positive(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(degree <= 0 for degree in value):
            raise ValueError(f"degrees must be positive, got {list(value)}")
        return tuple(sorted(value))

    @model_validator(mode="after")
    def _check_shape(self) -> "ResolutionData":
        if len(self.a) < 2:
            raise ValueError("at least two generator degrees are required")
        if len(self.b) != len(self.a) - 1:
            raise ValueError(f"expected {len(self.a) - 1} syzygy degrees, got {len(self.b)}")
        if sum(self.a) != sum(self.b):
            raise ValueError(f"sum(a) = {sum(self.a)} differs from sum(b) = {sum(self.b)}")
        return self

    @property
    def k(self) -> int:
        """Number of syzygies; the Hilbert-Burch matrix is (k+1) x k."""
        return len(self.b)

    @classmethod
    def parse(cls, text: str) -> "ResolutionData":
        """Parse the textual form `a=3,3,4 b=5,5`."""
        match = _TEXT_FORM.match(text)
        if not match:
            raise ValueError(f"cannot parse resolution data {text!r}; expected 'a=.. b=..'")
        a, b = (
            tuple(int(part) for part in group.replace(" ", "").split(",") if part)
            for group in match.groups()
        )
        return cls(a=a, b=b)

    def format(self) -> str:
        return f"a={','.join(map(str, self.a))} b={','.join(map(str, self.b))}"

    def __str__(self) -> str:
        return self.format()
