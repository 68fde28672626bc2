"""Hyperbolic and trigonometric triangle relations used by the addition theorems.

Given z1 = cosh b1 and z2 = cosh b2 (both real and > 1) and an angle, the
third side z and the two remaining angles p1, p2 follow from the cosine
rule. The sines of p1, p2 (sinh for the hyperbolic kind) take the sign of
the given angle's sine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

from .foundations import EPS
from .types import DomainError

KINDS = ("hyperbolic", "trigonometric")


@dataclass(frozen=True)
class TriangleConfig:
    z1: float
    z2: float
    parameter: float
    kind: str = "hyperbolic"
    z_third: Optional[float] = None
    p1: Optional[float] = None
    p2: Optional[float] = None
    consistency: Optional[float] = None

    @property
    def solved(self) -> bool:
        return self.z_third is not None


def _real_above_one(v, name: str) -> float:
    if isinstance(v, complex):
        if v.imag != 0.0:
            raise DomainError(f"{name} must be real; the square-root sign is not fixed for complex sides")
        v = v.real
    v = float(v)
    if not math.isfinite(v) or v <= 1.0:
        raise DomainError(f"{name} must be a real number greater than 1")
    return v


def _real(v, name: str) -> float:
    if isinstance(v, complex):
        if v.imag != 0.0:
            raise DomainError(f"{name} must be real")
        v = v.real
    v = float(v)
    if not math.isfinite(v):
        raise DomainError(f"{name} must be finite")
    return v


def _root(z: float) -> float:
    return math.sqrt((z - 1.0) * (z + 1.0))


def shared_root_squared(z1: float, z2: float, z3: float) -> float:
    """z3^2 + z1^2 + z2^2 - 2 z1 z2 z3 - 1; the hyperbolic sinh products square to it, the trigonometric ones to minus it."""
    return z3 * z3 + z1 * z1 + z2 * z2 - 2.0 * z1 * z2 * z3 - 1.0


def solve_triangle(cfg: TriangleConfig) -> TriangleConfig:
    """Fill in z_third, p1, p2 and the consistency residual of the three product relations."""
    if cfg.kind not in KINDS:
        raise DomainError(f"kind must be one of {KINDS}")
    z1 = _real_above_one(cfg.z1, "z1")
    z2 = _real_above_one(cfg.z2, "z2")
    a = _real(cfg.parameter, "parameter")
    s1, s2 = _root(z1), _root(z2)
    if cfg.kind == "hyperbolic":
        z3 = z1 * z2 + s1 * s2 * math.cosh(a)
        s3 = _root(z3)
        sh1 = math.sinh(a) * s1 / s3
        sh2 = math.sinh(a) * s2 / s3
        p1, p2 = math.asinh(sh1), math.asinh(sh2)
        products = (s1 * s2 * math.sinh(a), s2 * s3 * sh1, s1 * s3 * sh2)
        d2 = shared_root_squared(z1, z2, z3)
    else:
        z3 = z1 * z2 - s1 * s2 * math.cos(a)
        if z3 - 1.0 <= 64 * EPS * z1 * z2:
            raise DomainError("degenerate triangle: the third side collapses to z = 1")
        s3 = _root(z3)
        sn = math.sin(a)
        p1 = math.atan2(sn * s1 / s3, (z2 * z3 - z1) / (s2 * s3))
        p2 = math.atan2(sn * s2 / s3, (z1 * z3 - z2) / (s1 * s3))
        products = (s1 * s2 * sn, s2 * s3 * math.sin(p1), s1 * s3 * math.sin(p2))
        d2 = -shared_root_squared(z1, z2, z3)
    # compare the products with each other, and their squares with the shared expression; both stay
    # linear in rounding, where a square root of d2 would amplify it near alpha = 0
    scale = max(max(abs(p) for p in products), 1.0)
    spread = max(abs(p - products[0]) for p in products) / scale
    square_scale = 1.0 + z1 * z1 + z2 * z2 + z3 * z3 + 2.0 * abs(z1 * z2 * z3)
    squares = max(abs(p * p - d2) for p in products) / square_scale
    consistency = max(spread, squares)
    return replace(cfg, z1=z1, z2=z2, parameter=a, z_third=z3, p1=p1, p2=p2, consistency=consistency)


def recover_z1(cfg: TriangleConfig) -> float:
    """z1 rebuilt from (z2, z_third, p1), the inverse direction of the cosine rule."""
    if not cfg.solved:
        cfg = solve_triangle(cfg)
    s2, s3 = _root(cfg.z2), _root(cfg.z_third)
    if cfg.kind == "hyperbolic":
        return cfg.z2 * cfg.z_third - s2 * s3 * math.cosh(cfg.p1)
    return cfg.z2 * cfg.z_third - s2 * s3 * math.cos(cfg.p1)


def hyperbolic(z1: float, z2: float, alpha: float) -> tuple[float, float, float]:
    t = solve_triangle(TriangleConfig(z1, z2, alpha, "hyperbolic"))
    return t.z_third, t.p1, t.p2


def trigonometric(z1: float, z2: float, theta: float) -> tuple[float, float, float]:
    t = solve_triangle(TriangleConfig(z1, z2, theta, "trigonometric"))
    return t.z_third, t.p1, t.p2
