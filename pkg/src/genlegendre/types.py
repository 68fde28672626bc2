"""Shared value types, status flags and error classes."""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field


class Flag(str, enum.Enum):
    POLE = "pole"
    IDENTICALLY_ZERO = "identically-zero"
    DEGRADED = "degraded-precision"


class Side(int, enum.Enum):
    """Which boundary value to take on a branch cut: z + i0 or z - i0."""

    BELOW = -1
    OFF_AXIS = 0
    ABOVE = 1

    @classmethod
    def parse(cls, value) -> "Side":
        if value is None:
            return cls.OFF_AXIS
        if isinstance(value, Side):
            return value
        if isinstance(value, int):
            return cls(value)
        text = str(value).strip().lower()
        table = {"above": cls.ABOVE, "+": cls.ABOVE, "up": cls.ABOVE,
                 "below": cls.BELOW, "-": cls.BELOW, "down": cls.BELOW,
                 "off-axis": cls.OFF_AXIS, "none": cls.OFF_AXIS, "": cls.OFF_AXIS}
        if text not in table:
            raise ValueError(f"unknown side {value!r}")
        return table[text]

    def flipped(self) -> "Side":
        return Side(-int(self))


class GenLegendreError(Exception):
    """Base class for all library errors."""


class PoleError(GenLegendreError):
    pass


class BranchAmbiguityError(GenLegendreError):
    pass


class DomainError(GenLegendreError):
    pass


class NonConvergenceError(GenLegendreError):
    pass


class DegenerateCoefficientError(GenLegendreError):
    pass


class PreconditionError(GenLegendreError):
    pass


class InvalidIndexError(GenLegendreError):
    pass


@dataclass(frozen=True)
class FnValue:
    """A complex result with an absolute error bound and status flags."""

    value: complex
    abs_error: float = 0.0
    flags: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "abs_error", float(self.abs_error))
        object.__setattr__(self, "flags", frozenset(self.flags))
        if self.abs_error < 0 or math.isnan(self.abs_error):
            raise ValueError("abs_error must be a nonnegative number")
        if Flag.POLE not in self.flags and not _finite(self.value):
            raise ValueError(f"non-finite value {self.value!r} without pole flag")

    @property
    def is_pole(self) -> bool:
        return Flag.POLE in self.flags

    @property
    def is_zero(self) -> bool:
        return Flag.IDENTICALLY_ZERO in self.flags

    @property
    def degraded(self) -> bool:
        return Flag.DEGRADED in self.flags

    @classmethod
    def pole(cls, extra=()) -> "FnValue":
        return cls(complex(math.nan, math.nan), math.inf, frozenset({Flag.POLE, *extra}))

    @classmethod
    def zero(cls) -> "FnValue":
        return cls(0j, 0.0, frozenset({Flag.IDENTICALLY_ZERO}))

    def flag_names(self) -> list[str]:
        return sorted(f.value for f in self.flags)


@dataclass(frozen=True)
class Residual:
    """Outcome of an identity check: lhs - rhs together with a cancellation-aware scale."""

    lhs: complex
    rhs: complex
    scale: float
    abs_error: float = 0.0
    flags: frozenset = field(default_factory=frozenset)

    @property
    def residual(self) -> complex:
        return self.lhs - self.rhs

    @property
    def absolute(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def relative(self) -> float:
        if self.scale == 0.0:
            return self.absolute
        return self.absolute / self.scale

    @property
    def skipped(self) -> bool:
        return Flag.POLE in self.flags


def _finite(z: complex) -> bool:
    return cmath.isfinite(z)


def term_scale(*values) -> float:
    """Largest magnitude among the terms of an identity (0 for none)."""
    best = 0.0
    for v in values:
        if isinstance(v, FnValue):
            v = v.value
        m = abs(v)
        if m > best:
            best = m
    return best
