"""Numerical integration: double-exponential rules for singular or infinite ranges, adaptive Gauss-Legendre otherwise.

Nodes are visited in a fixed order and sums use math.fsum on the real and
imaginary parts, so a given spec always produces the same bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .foundations import EPS
from .types import DomainError, FnValue, NonConvergenceError

HALF_PI = math.pi / 2.0
FAIL_REL = 1e-6
QUIET_RUN = 5
T_MAX = 7.0

Integrand = Callable[[float], Union[complex, float, FnValue]]


@dataclass(frozen=True)
class QuadratureSpec:
    """``level`` is the number of step halvings for tanh-sinh (start step 1/2) or the node count per Gauss-Legendre panel."""

    method: str = "tanh-sinh"
    level: int = 10
    truncation_threshold: float = 1e-16
    tolerance: float = 1e-12
    max_depth: int = 24

    def __post_init__(self):
        if self.method not in ("tanh-sinh", "gauss-legendre"):
            raise ValueError(f"unknown quadrature method {self.method!r}")
        if int(self.level) != self.level or self.level < 2:
            raise ValueError("order or level must be an integer >= 2")
        if not self.truncation_threshold > 0:
            raise ValueError("truncation threshold must be positive")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


DEFAULT_DE = QuadratureSpec("tanh-sinh", 10)
DEFAULT_GL = QuadratureSpec("gauss-legendre", 64)


@dataclass(frozen=True)
class Interval:
    """finite [a, b]; semi-infinite [a, +inf) (direction +1) or (-inf, a] (direction -1); or the full line."""

    kind: str
    a: float = 0.0
    b: float = 0.0
    direction: int = 1

    @classmethod
    def finite(cls, a: float, b: float) -> "Interval":
        if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
            raise DomainError("finite interval needs a < b")
        return cls("finite", float(a), float(b))

    @classmethod
    def semi_infinite(cls, a: float, direction: int = 1) -> "Interval":
        if direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")
        return cls("semi-infinite", float(a), direction=direction)

    @classmethod
    def full_line(cls) -> "Interval":
        return cls("full-line")


def _call(f: Integrand, x: float, d: float | None = None) -> tuple[complex, float]:
    v = f(x) if d is None else f(x, d)
    if isinstance(v, FnValue):
        return v.value, v.abs_error
    return complex(v), 0.0


class _Sum:
    """Ordered accumulator for complex weighted samples."""

    def __init__(self):
        self.re: list[float] = []
        self.im: list[float] = []
        self.absum: list[float] = []
        self.err: list[float] = []

    def add(self, wf: complex, werr: float) -> None:
        self.re.append(wf.real)
        self.im.append(wf.imag)
        self.absum.append(abs(wf))
        self.err.append(werr)

    def total(self) -> complex:
        return complex(math.fsum(self.re), math.fsum(self.im))

    def l1(self) -> float:
        return math.fsum(self.absum)

    def carried(self) -> float:
        return math.fsum(self.err)


def _de_map(interval: Interval) -> Callable[[float], tuple[float, float, float]]:
    """t -> (x, weight, signed offset d of x from the finite end it approaches, that end).

    d is infinite and the end None where no finite end is in reach.
    """
    if interval.kind == "finite":
        a, b = interval.a, interval.b
        half = (b - a) / 2.0
        mid = (a + b) / 2.0

        def m(t: float):
            u = HALF_PI * math.sinh(t)
            if abs(u) > 350.0:
                return mid, 0.0, 0.0, None
            e = math.exp(-2.0 * abs(u))
            gap = 2.0 * half * e / (1.0 + e)  # distance to the nearer end, without cancellation
            x, d, end = (b - gap, -gap, b) if u > 0 else (a + gap, gap, a)
            w = half * HALF_PI * math.cosh(t) * 4.0 * e / (1.0 + e) ** 2
            return x, w, d, end
        return m
    if interval.kind == "semi-infinite":
        a, d = interval.a, interval.direction

        def m(t: float):
            u = HALF_PI * math.sinh(t)
            if u > 700.0:
                return math.inf, 0.0, math.inf, None
            r = math.exp(u)
            return a + d * r, HALF_PI * math.cosh(t) * r, d * r, a
        return m

    def m(t: float):
        u = HALF_PI * math.sinh(t)
        if abs(u) > 700.0:
            return math.inf, 0.0, math.inf, None
        return math.sinh(u), HALF_PI * math.cosh(t) * math.cosh(u), math.inf, None
    return m


def _de_walk(f: Integrand, m, h: float, start: int, stride: int, direction: int, acc: _Sum, spec: QuadratureSpec,
             peak: list, offsets: bool) -> float:
    """Visit t = direction*h*(start + k*stride) outward until the tail is negligible for QUIET_RUN nodes.

    Returns the size of the last accepted term when the walk had to stop at an
    end it could not resolve (x rounded onto it, or d underflowed), else 0.
    """
    quiet = 0
    k = start
    last = 0.0
    while True:
        t = direction * h * k
        if abs(t) > T_MAX:
            return 0.0
        x, w, d, end = m(t)
        if not math.isfinite(x) or w == 0.0:
            return 0.0
        if d == 0.0 or (not offsets and x == end):
            return last
        try:
            v, e = _call(f, x, d if offsets else None)
        except (OverflowError, NonConvergenceError):
            # far out in the tail an integrand may stop being computable; only then is it safe to cut
            if quiet:
                return 0.0
            raise
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise NonConvergenceError(f"integrand is not finite at x = {x!r}")
        wf = w * v
        acc.add(wf, w * e)
        mag = abs(wf)
        last = mag
        peak[0] = max(peak[0], mag)
        quiet = quiet + 1 if mag < spec.truncation_threshold * peak[0] else 0
        if quiet >= QUIET_RUN:
            return 0.0
        k += stride


def _double_exponential(f: Integrand, interval: Interval, spec: QuadratureSpec, offsets: bool) -> FnValue:
    m = _de_map(interval)
    peak = [0.0]
    h = 0.5
    # level 0: t = 0 and both directions at spacing h
    acc = _Sum()
    x0, w0, d0, _ = m(0.0)
    v, e = _call(f, x0, d0 if offsets else None)
    acc.add(w0 * v, w0 * e)
    peak[0] = abs(w0 * v)
    tail = _de_walk(f, m, h, 1, 1, 1, acc, spec, peak, offsets)
    tail += _de_walk(f, m, h, 1, 1, -1, acc, spec, peak, offsets)
    estimate = h * acc.total()
    l1 = h * acc.l1()
    carried = h * acc.carried()
    diff = math.inf
    for _ in range(1, spec.level):
        h /= 2.0
        acc = _Sum()
        tail = _de_walk(f, m, h, 1, 2, 1, acc, spec, peak, offsets)
        tail += _de_walk(f, m, h, 1, 2, -1, acc, spec, peak, offsets)
        new = estimate / 2.0 + h * acc.total()
        l1 = l1 / 2.0 + h * acc.l1()
        carried = carried / 2.0 + h * acc.carried()
        diff = abs(new - estimate)
        estimate = new
        if diff <= spec.tolerance * max(l1, abs(estimate)):
            break
    scale = max(l1, abs(estimate))
    if not diff <= FAIL_REL * scale:
        raise NonConvergenceError(f"double-exponential rule did not settle: last change {diff:.3g}, scale {scale:.3g}")
    return FnValue(estimate, diff + carried + tail + 16 * EPS * l1)


_GL_CACHE: dict[int, tuple[list[float], list[float]]] = {}


def _gl_nodes(n: int) -> tuple[list[float], list[float]]:
    if n not in _GL_CACHE:
        x, w = np.polynomial.legendre.leggauss(n)
        _GL_CACHE[n] = (x.tolist(), w.tolist())
    return _GL_CACHE[n]


def _gl_panel(f: Integrand, a: float, b: float, n: int, ends) -> tuple[complex, float, float]:
    xs, ws = _gl_nodes(n)
    half, mid = (b - a) / 2.0, (a + b) / 2.0
    acc = _Sum()
    for x, w in zip(xs, ws):
        x = mid + half * x
        d = None if ends is None else (x - ends[0] if x - ends[0] <= ends[1] - x else x - ends[1])
        v, e = _call(f, x, d)
        acc.add(half * w * v, half * w * e)
    return acc.total(), acc.l1(), acc.carried()


def _gauss_legendre(f: Integrand, interval: Interval, spec: QuadratureSpec, offsets: bool) -> FnValue:
    if interval.kind != "finite":
        raise DomainError("Gauss-Legendre panels need a finite interval; use tanh-sinh for infinite ranges")
    n = int(spec.level)
    ends = (interval.a, interval.b) if offsets else None
    whole = _gl_panel(f, interval.a, interval.b, n, ends)
    scale_ref = max(whole[1], abs(whole[0]))
    accepted: list[tuple[complex, float, float, float]] = []

    # explicit stack keeps the panel order left to right
    stack = [(interval.a, interval.b, whole, 0)]
    worst_unsettled = 0.0
    while stack:
        a, b, coarse, depth = stack.pop()
        mid = (a + b) / 2.0
        left, right = _gl_panel(f, a, mid, n, ends), _gl_panel(f, mid, b, n, ends)
        fine = left[0] + right[0]
        diff = abs(fine - coarse[0])
        if diff <= spec.tolerance * scale_ref or depth >= spec.max_depth:
            if diff > spec.tolerance * scale_ref:
                worst_unsettled = max(worst_unsettled, diff)
            accepted.append((fine, diff, left[1] + right[1], left[2] + right[2]))
            continue
        stack.append((mid, b, right, depth + 1))
        stack.append((a, mid, left, depth + 1))
    total = complex(math.fsum(p[0].real for p in accepted), math.fsum(p[0].imag for p in accepted))
    err = math.fsum(p[1] for p in accepted)
    l1 = math.fsum(p[2] for p in accepted)
    carried = math.fsum(p[3] for p in accepted)
    if worst_unsettled > FAIL_REL * max(l1, abs(total)):
        raise NonConvergenceError("adaptive Gauss-Legendre hit its depth limit without settling")
    return FnValue(total, err + carried + 16 * EPS * l1)


def integrate(f: Integrand, interval: Interval, spec: QuadratureSpec | None = None, offsets: bool = False) -> FnValue:
    """Integral of f over the interval; f may return a number or an FnValue (its error is carried).

    With ``offsets`` the integrand is called as f(x, d), where d = x - e for
    the finite end e nearest to x (infinite on the full line). Near an end
    d keeps the digits that x itself has lost, so an integrand with an
    endpoint power law can evaluate that factor from d.
    """
    if spec is None:
        spec = DEFAULT_GL if interval.kind == "finite" else DEFAULT_DE
    if spec.method == "gauss-legendre":
        return _gauss_legendre(f, interval, spec, offsets)
    return _double_exponential(f, interval, spec, offsets)


def integrate_pieces(f: Integrand, breakpoints: list[float], spec: QuadratureSpec | None = None) -> FnValue:
    """Sum of integrals over consecutive finite pieces, in order."""
    parts = [integrate(f, Interval.finite(a, b), spec) for a, b in zip(breakpoints, breakpoints[1:])]
    total = complex(math.fsum(p.value.real for p in parts), math.fsum(p.value.imag for p in parts))
    return FnValue(total, math.fsum(p.abs_error for p in parts))
