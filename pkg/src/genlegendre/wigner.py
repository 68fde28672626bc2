"""Rotation-group d-functions as normalized on-cut Legendre functions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .foundations import EPS, gamma_ratio
from .legendre import IndexTriple, p_tilde
from .types import DomainError, Flag, FnValue, InvalidIndexError

IMAG_LIMIT = 1e-12


@dataclass(frozen=True)
class SpinIndex:
    """(j, mu, nu) held as twice their values so admissibility is an integer test."""

    twice_j: int
    twice_mu: int
    twice_nu: int

    def __post_init__(self):
        for name in ("twice_j", "twice_mu", "twice_nu"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise InvalidIndexError(f"{name} must be an integer")
            object.__setattr__(self, name, int(v))
        tj, tm, tn = self.twice_j, self.twice_mu, self.twice_nu
        if tj < 0:
            raise InvalidIndexError("j must be nonnegative")
        if not (tj % 2 == tm % 2 == tn % 2):
            raise InvalidIndexError("j, mu, nu must be all integers or all half-integers")
        if abs(tm) > tj or abs(tn) > tj:
            raise InvalidIndexError("|mu| and |nu| must not exceed j")

    @classmethod
    def from_values(cls, j, mu, nu) -> "SpinIndex":
        """Build from numbers such as 1.5 or '3/2'; each must be a multiple of 1/2."""
        doubled = []
        for v in (j, mu, nu):
            f = Fraction(v).limit_denominator(4) * 2 if not isinstance(v, str) else Fraction(v) * 2
            if f.denominator != 1 or abs(float(f) - 2 * float(Fraction(v))) > 1e-12:
                raise InvalidIndexError(f"{v!r} is not a multiple of 1/2")
            doubled.append(int(f))
        return cls(*doubled)

    @property
    def j(self) -> float:
        return self.twice_j / 2.0

    @property
    def mu(self) -> float:
        return self.twice_mu / 2.0

    @property
    def nu(self) -> float:
        return self.twice_nu / 2.0

    def with_orders(self, twice_mu: int, twice_nu: int) -> "SpinIndex":
        return SpinIndex(self.twice_j, twice_mu, twice_nu)


def _sign(twice_exponent: int) -> int:
    """(-1)^k for an even doubled exponent 2k."""
    return -1 if (twice_exponent // 2) % 2 else 1


def _from_triple(j: complex, mu: float, nu: float, x: float) -> FnValue:
    """P~ times the square-root normalization, for any degree (used for j and -j-1)."""
    r = gamma_ratio([j - mu + 1, j + nu + 1], [j + mu + 1, j - nu + 1])
    if r.is_pole or r.value.real <= 0:
        raise DomainError("normalization of the d-function is not finite and positive")
    norm = math.sqrt(r.value.real)
    p = p_tilde(IndexTriple(j, mu, nu), x)
    value = p.value * norm
    err = p.abs_error * norm + abs(p.value) * 0.5 * r.abs_error / norm + 4 * EPS * abs(value)
    flags = set(p.flags) - {Flag.IDENTICALLY_ZERO}
    if abs(value.imag) > max(IMAG_LIMIT, err):
        flags.add(Flag.DEGRADED)
    return FnValue(value.real, err + abs(value.imag), flags)


def wigner_d(s: SpinIndex, x: float) -> FnValue:
    """d^j_{mu nu}(x) for x in [-1, 1]; the ends use the rotation-by-0 and rotation-by-pi values."""
    if not isinstance(s, SpinIndex):
        s = SpinIndex.from_values(*s)
    x = float(x)
    if not -1.0 <= x <= 1.0:
        raise DomainError("x must lie in [-1, 1]")
    if x == 1.0:
        return FnValue(1.0 if s.twice_mu == s.twice_nu else 0.0)
    if x == -1.0:
        if s.twice_mu != -s.twice_nu:
            return FnValue(0.0)
        return FnValue(float(_sign(s.twice_j - s.twice_nu)))
    return _from_triple(s.j, s.mu, s.nu, x)


SYMMETRY_RULES = ("reflect-j", "negate-swap", "transpose", "reflect-x-mu", "reflect-x-nu")


def _reflected_degree(s: SpinIndex, x: float) -> FnValue:
    if abs(x) == 1.0:
        # P~ at the ends is reached only as a limit; the normalized value is degree-symmetric there
        return wigner_d(s, x)
    return _from_triple(-s.j - 1.0, s.mu, s.nu, x)


def symmetry_rhs(rule: str, s: SpinIndex, x: float) -> FnValue:
    """Right-hand side of one of the five d-function equalities with d^j_{mu nu}(x)."""
    tj, tm, tn = s.twice_j, s.twice_mu, s.twice_nu
    if rule == "reflect-j":
        return _reflected_degree(s, x)
    if rule == "negate-swap":
        return wigner_d(s.with_orders(-tn, -tm), x)
    if rule == "transpose":
        v, sg = wigner_d(s.with_orders(tn, tm), x), _sign(tm - tn)
    elif rule == "reflect-x-mu":
        v, sg = wigner_d(s.with_orders(-tm, tn), -x), _sign(tj - tn)
    elif rule == "reflect-x-nu":
        v, sg = wigner_d(s.with_orders(tm, -tn), -x), _sign(tj + tm)
    else:
        raise ValueError(f"unknown d-function symmetry {rule!r}")
    return FnValue(sg * v.value, v.abs_error, v.flags)


def d_symmetry_residual(rule: str, s: SpinIndex, x: float) -> float:
    """|d^j_{mu nu}(x) - rhs| for the named rule."""
    if not isinstance(s, SpinIndex):
        s = SpinIndex.from_values(*s)
    return abs(wigner_d(s, x).value - symmetry_rhs(rule, s, x).value)


def d_orthogonality(s1: SpinIndex, s2: SpinIndex, order: int = 32) -> FnValue:
    """Integral of d^j d^l over [-1, 1] by Gauss-Legendre with ``order`` nodes."""
    if (s1.twice_mu, s1.twice_nu) != (s2.twice_mu, s2.twice_nu):
        raise InvalidIndexError("both d-functions must share mu and nu")
    order = int(order)
    if order < 2:
        raise ValueError("quadrature order must be at least 2")
    nodes, weights = np.polynomial.legendre.leggauss(order)
    total, err = 0.0, 0.0
    flags: set = set()
    for x, w in zip(nodes.tolist(), weights.tolist()):
        a, b = wigner_d(s1, x), wigner_d(s2, x)
        total = total + w * a.value.real * b.value.real
        err += w * (abs(a.value) * b.abs_error + abs(b.value) * a.abs_error)
        flags |= a.flags | b.flags
    return FnValue(total, err + 8 * EPS * order, flags)


def admissible_spins(max_twice_j: int) -> list[SpinIndex]:
    """All admissible (j, mu, nu) with 2j <= max_twice_j, in a fixed order."""
    out = []
    for tj in range(max_twice_j + 1):
        for tm in range(-tj, tj + 1, 2):
            for tn in range(-tj, tj + 1, 2):
                out.append(SpinIndex(tj, tm, tn))
    return out
