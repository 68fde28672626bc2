"""Regularized Gauss hypergeometric function, Kummer's function and Bessel J."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .foundations import (
    EPS,
    RGAMMA_ZERO_TOL,
    _digamma,
    _rgamma,
    _rgamma_psi,
    branch_log,
    branch_power,
    gamma_ratio,
    log_gamma,
    nearest_integer,
    nonpositive_integer,
    sin_pi,
)
from .types import BranchAmbiguityError, DomainError, Flag, FnValue, NonConvergenceError, PoleError, Side

TERM_TOL = 1e-17
MAX_TERMS = 5000
ULPS_PER_TERM = 10.0
DEGENERATE_TOL = 1e-8
# offset of the two generic evaluations used to interpolate across a near-degenerate parameter
DEGENERACY_STEP = 1e-3
# beyond DEGENERATE_TOL and inside this window, Cauchy's formula on a circle replaces the generic form
DEGENERACY_WINDOW = 0.0125
CIRCLE_RADIUS = 0.06
CIRCLE_NODES = 32
SERIES_RADIUS = 0.9
ODE_TRIGGER = 0.8
GOOD_ENOUGH = 1e-13
DETOUR = 0.5
EULER_GAMMA = 0.57721566490153286061
# a route that meets one of these is skipped in favour of the others
_ROUTE_FAILURES = (ZeroDivisionError, OverflowError, NonConvergenceError, PoleError)


@dataclass(frozen=True)
class Hyp2F1Params:
    a: complex
    b: complex
    c: complex
    x: complex

    def regularized(self, side=None) -> FnValue:
        return hyp2f1_regularized(self.a, self.b, self.c, self.x, side)


class _Approx:
    """Value with absolute error and a degraded marker, used inside the kernel."""

    __slots__ = ("v", "e", "degraded")

    def __init__(self, v: complex, e: float, degraded: bool = False):
        self.v = complex(v)
        self.e = float(e)
        self.degraded = degraded

    def rel(self) -> float:
        if self.v == 0:
            return 0.0 if self.e == 0 else math.inf
        return self.e / abs(self.v)

    def scaled(self, factor: complex, factor_rel: float = 2 * EPS) -> "_Approx":
        v = self.v * factor
        return _Approx(v, self.e * abs(factor) + abs(v) * factor_rel, self.degraded)


def _is_cut(x: complex) -> bool:
    return x.imag == 0.0 and x.real > 1.0


def _scaled_rgamma(L: complex, *zs: complex) -> complex:
    """e^L / prod Gamma(z), assembled in log space when L is nonzero."""
    if L == 0:
        out = 1 + 0j
        for z in zs:
            out *= _rgamma(z)
        return out
    for z in zs:
        if _rgamma(z) == 0:
            return 0j
    w = L - sum(log_gamma(z) for z in zs)
    if w.real < -745.0:
        return 0j
    if w.real > 709.0:
        raise OverflowError("scaled reciprocal gamma overflows")
    return cmath.exp(w)


def _log_rel(L: complex) -> float:
    """Relative rounding carried by a factor e^L."""
    return EPS * (4.0 + abs(L))


# ---------------------------------------------------------------- series


def _rgamma_shift_start(c: complex) -> int:
    """Number of leading 1/Gamma(c+k) values to compute directly before recursing."""
    return max(0, math.ceil(0.5 - c.real))


def _series_terms(k0: int, c: complex, ratio_num: Callable[[int], complex], L: complex = 0j):
    """Yield (k, term) for e^L sum_k u_k / Gamma(c+k) where u_{k+1} = u_k * ratio_num(k).

    The first k0 reciprocal gammas are computed directly (they may vanish);
    afterwards the term itself is carried so that no factor over- or underflows.
    """
    p = 1 + 0j
    k = 0
    while k < k0:
        yield k, p * _scaled_rgamma(L, c + k)
        p *= ratio_num(k)
        k += 1
    t = p * _scaled_rgamma(L, c + k)
    while True:
        yield k, t
        t *= ratio_num(k) / (c + k)
        k += 1


def _maclaurin(a: complex, b: complex, c: complex, x: complex, L: complex = 0j) -> _Approx:
    """e^L sum_k (a)_k (b)_k / (k! Gamma(c+k)) x^k."""
    k0 = _rgamma_shift_start(c)
    total = 0j
    abs_total = 0.0
    small = 0
    ulps = ULPS_PER_TERM * EPS + (_log_rel(L) + EPS * abs(log_gamma(c + k0)) if L != 0 else 0.0)
    for k, t in _series_terms(k0, c, lambda k: (a + k) * (b + k) * x / (k + 1), L):
        total += t
        at = abs(t)
        abs_total += at
        if (a + k) * (b + k) == 0:
            # every later term carries this factor
            return _Approx(total, ulps * abs_total)
        if k >= k0 and at <= TERM_TOL * abs(total):
            ratio = abs((a + k) * (b + k) * x / ((k + 1) * (c + k)))
            small += 1
            if small >= 2 and ratio < 1.0:
                trunc = at * ratio / (1.0 - ratio)
                return _Approx(total, ulps * abs_total + trunc)
        else:
            small = 0
        if k > MAX_TERMS or not cmath.isfinite(total):
            raise NonConvergenceError(f"2F1 series did not converge (a={a}, b={b}, c={c}, x={x})")


# ------------------------------------------------- linear transformations


def _pfaff(a, b, c, x, side: Side, inner: Callable, L: complex = 0j, cx: Optional[complex] = None) -> _Approx:
    """F(a,b;c;x) = (1-x)^(-a) F(a, c-b; c; x/(x-1)); ``cx`` is 1 - x."""
    if cx is None:
        cx = 1.0 - x
    w = -x / cx
    lp = -a * branch_log(cx, side.flipped())
    return inner(a, c - b, c, w, side.flipped(), L + lp).scaled(1.0, _log_rel(lp))


def _across_degeneracy(exact: _Approx, plus: _Approx, minus: _Approx, u: complex) -> _Approx:
    """Quadratic through values at offsets 0, +h, -h of an entire parameter, read at u*h."""
    w0, wp, wm = 1 - u * u, u * (1 + u) / 2, u * (u - 1) / 2
    v = w0 * exact.v + wp * plus.v + wm * minus.v
    # the dropped cubic term is u h^3 times a third derivative; the second difference bounds it generously
    trunc = abs(u) * abs(plus.v - 2 * exact.v + minus.v)
    err = abs(w0) * exact.e + abs(wp) * plus.e + abs(wm) * minus.e + trunc + 4 * EPS * abs(v)
    return _Approx(v, err, exact.degraded or plus.degraded or minus.degraded)


def _around_degeneracy(generic: Callable[[complex], _Approx], t: complex) -> _Approx:
    """Value at offset t from the trapezoid rule for Cauchy's formula on |zeta| = CIRCLE_RADIUS.

    The function is entire in the offset, so the nodes can sit where the generic
    connection formula cancels only mildly.
    """
    n = CIRCLE_NODES
    total, err, mag, peak, degraded = 0j, 0.0, 0.0, 0.0, False
    for k in range(n):
        zeta = CIRCLE_RADIUS * cmath.exp(2j * math.pi * k / n)
        f = generic(zeta)
        wgt = zeta / (zeta - t) / n
        total += wgt * f.v
        err += abs(wgt) * f.e
        mag += abs(wgt * f.v)
        peak = max(peak, abs(f.v))
        degraded = degraded or f.degraded
    q = (abs(t) / CIRCLE_RADIUS) ** n
    return _Approx(total, err + 2 * peak * q / (1 - q) + 4 * EPS * mag, degraded)


def _one_minus_x(a, b, c, x, side: Side, L: complex = 0j, w: Optional[complex] = None) -> _Approx:
    """Connection to the point x = 1; ``w`` is 1 - x."""
    if w is None:
        w = 1.0 - x
    s = c - a - b
    m = nearest_integer(s, DEGENERACY_WINDOW)
    if m is None:
        return _one_minus_x_generic(a, b, c, s, x, w, side, L)
    if s == m:
        return _one_minus_x_limit(a, b, c, m, x, w, side, L)
    c0 = a + b + m
    if abs(s - m) > DEGENERATE_TOL:
        return _around_degeneracy(lambda e: _one_minus_x_generic(a, b, c0 + e, m + e, x, w, side, L), s - m)
    # F/Gamma(c) is entire in c: interpolate between the limiting form and two well-separated neighbours
    h = DEGENERACY_STEP
    return _across_degeneracy(_one_minus_x_limit(a, b, c0, m, x, w, side, L),
                              _one_minus_x_generic(a, b, c0 + h, m + h, x, w, side, L),
                              _one_minus_x_generic(a, b, c0 - h, m - h, x, w, side, L), (s - m) / h)


def _one_minus_x_generic(a, b, c, s, x, w, side: Side, L: complex) -> _Approx:
    wside = side.flipped()
    f1 = _maclaurin(a, b, 1.0 - s, w)
    f2 = _maclaurin(c - a, c - b, 1.0 + s, w)
    lw = s * branch_log(w, wside)
    g1 = _scaled_rgamma(L, c - a, c - b)
    g2 = _scaled_rgamma(L + lw, a, b)
    k = math.pi / sin_pi(s)
    t1 = k * g1 * f1.v
    t2 = k * g2 * f2.v
    # rounding in the formed parameters is amplified like 1/sin(pi s) near an integer
    err = (abs(k * g1) * f1.e + abs(k * g2) * f2.e
           + 8 * EPS * (abs(t1) + abs(t2)) * (1 + abs(s)) * (1 + abs(a) + abs(b)) * abs(k) / math.pi
           + abs(t1) * _log_rel(L) + abs(t2) * _log_rel(L + lw))
    return _Approx(t1 - t2, err, f1.degraded or f2.degraded)


def _one_minus_x_limit(a, b, c, m: int, x, w, side: Side, L: complex) -> _Approx:
    """The x = 1 connection at c = a + b + m exactly."""
    wside = side.flipped()
    if m >= 0:
        return _one_minus_x_log(a, b, m, w, wside, L)
    # Euler: F(a,b;c;x) = (1-x)^(c-a-b) F(c-a, c-b; c; x)
    lw = m * branch_log(w, wside)
    a2, b2 = c - a, c - b
    if nonpositive_integer(a2, 0.0) is not None or nonpositive_integer(b2, 0.0) is not None:
        inner = _maclaurin(a2, b2, c, x, L + lw)
    else:
        inner = _one_minus_x_log(a2, b2, -m, w, wside, L + lw)
    return inner.scaled(1.0, _log_rel(lw))


def _one_minus_x_log(a, b, m: int, w, wside: Side, L: complex = 0j) -> _Approx:
    """Limiting form of the x = 1 connection when c = a + b + m, m >= 0; w = 1 - x."""
    # finite part
    fin = 0j
    fin_abs = 0.0
    if m > 0:
        g = _scaled_rgamma(L, a + m, b + m)
        if g != 0:
            p = 1 + 0j
            mw = -w
            for k in range(m):
                t = p * math.factorial(m - k - 1)
                fin += t
                fin_abs += abs(t)
                p *= (a + k) * (b + k) * mw / (k + 1)
            fin *= g
            fin_abs *= abs(g)
    # logarithmic series
    gab = _scaled_rgamma(L, a, b)
    if gab == 0:
        return _Approx(fin, (ULPS_PER_TERM * EPS + _log_rel(L)) * fin_abs)
    logw = branch_log(w, wside)
    psi1 = -EULER_GAMMA  # psi(k+1)
    psi2 = -EULER_GAMMA + sum(1.0 / i for i in range(1, m + 1))  # psi(k+m+1)
    psia = _digamma(a + m)
    psib = _digamma(b + m)
    coef = 1.0 / math.factorial(m)
    total = 0j
    abs_total = 0.0
    small = 0
    k = 0
    while True:
        t = coef * (logw - psi1 - psi2 + psia + psib)
        total += t
        at = abs(t)
        # the bracket can cancel when a or b sits near a pole, so its parts set the rounding
        abs_total += abs(coef) * (abs(logw) + abs(psi1) + abs(psi2) + abs(psia) + abs(psib))
        if at <= TERM_TOL * abs(total):
            small += 1
            if small >= 2 and k > 1 and abs(w) * abs((a + m + k) * (b + m + k)) / ((k + 1) * (k + m + 1)) < 1:
                break
        else:
            small = 0
        if coef == 0:
            break
        coef *= (a + m + k) * (b + m + k) * w / ((k + 1) * (k + m + 1))
        psi1 += 1.0 / (k + 1)
        psi2 += 1.0 / (k + m + 1)
        psia += 1.0 / (a + m + k)
        psib += 1.0 / (b + m + k)
        k += 1
        if k > MAX_TERMS:
            raise NonConvergenceError("logarithmic 2F1 series did not converge")
    pref = (-w) ** m * gab
    val = fin - pref * total
    err = (ULPS_PER_TERM * EPS + _log_rel(L)) * (fin_abs + abs(pref) * abs_total) + 4 * EPS * abs(val)
    return _Approx(val, err)


def _inverse_x(a, b, c, x, side: Side, L: complex = 0j) -> _Approx:
    """Connection to the point x = infinity."""
    mside = side.flipped()  # side of -x
    if mside == Side.OFF_AXIS and x.imag == 0.0 and x.real > 0.0:
        # F is analytic on (0, 1); either boundary value of the connection formula gives it
        mside = Side.ABOVE
    d = b - a
    m = nearest_integer(d, DEGENERACY_WINDOW)
    if m is None:
        return _inverse_x_generic(a, b, c, d, x, mside, L)
    if d == m:
        return _inverse_x_log(a, m, c, x, mside, L) if m >= 0 else _inverse_x_log(b, -m, c, x, mside, L)
    if abs(d - m) > DEGENERATE_TOL:
        return _around_degeneracy(lambda e: _inverse_x_generic(a, a + m + e, c, m + e, x, mside, L), d - m)
    # entire in b as well: the same interpolation as at x = 1
    h = DEGENERACY_STEP
    exact = _inverse_x_log(a, m, c, x, mside, L) if m >= 0 else _inverse_x_log(a + m, -m, c, x, mside, L)
    return _across_degeneracy(exact,
                              _inverse_x_generic(a, a + m + h, c, m + h, x, mside, L),
                              _inverse_x_generic(a, a + m - h, c, m - h, x, mside, L), (d - m) / h)


def _inverse_x_generic(a, b, c, d, x, mside: Side, L: complex) -> _Approx:
    y = 1.0 / x
    f1 = _maclaurin(a, a - c + 1.0, 1.0 - d, y)
    f2 = _maclaurin(b, b - c + 1.0, 1.0 + d, y)
    lmx = branch_log(-x, mside)
    g1 = _scaled_rgamma(L - a * lmx, b, c - a)
    g2 = _scaled_rgamma(L - b * lmx, a, c - b)
    k = math.pi / sin_pi(d)
    t1 = k * g1 * f1.v
    t2 = k * g2 * f2.v
    err = (abs(k * g1) * f1.e + abs(k * g2) * f2.e
           + 8 * EPS * (abs(t1) + abs(t2)) * (1 + abs(a) + abs(b)) * abs(k) / math.pi
           + abs(t1) * _log_rel(L - a * lmx) + abs(t2) * _log_rel(L - b * lmx))
    return _Approx(t1 - t2, err, f1.degraded or f2.degraded)


def _inverse_x_log(a, m: int, c, x, mside: Side, L: complex = 0j) -> _Approx:
    """Limiting form of the x = infinity connection when b = a + m, m >= 0."""
    y = 1.0 / x
    fin = 0j
    fin_abs = 0.0
    if m > 0:
        g = _rgamma(a + m)
        if g != 0:
            p = 1 + 0j  # (a)_k y^k / k!
            q = _rgamma(c - a)  # 1/Gamma(c-a-k)
            for k in range(m):
                t = p * math.factorial(m - k - 1) * q
                fin += t
                fin_abs += abs(t)
                p *= (a + k) * y / (k + 1)
                q *= c - a - k - 1
            fin *= g
            fin_abs *= abs(g)
    ga = _rgamma(a)
    total = 0j
    abs_total = 0.0
    if ga != 0:
        w0 = c - a - m
        r = _rgamma(w0)  # 1/Gamma(w0 - k)
        gpsi = _rgamma_psi(w0)  # psi(w0 - k)/Gamma(w0 - k)
        logmx = branch_log(-x, mside)
        psi_1mk = -EULER_GAMMA + sum(1.0 / i for i in range(1, m + 1))  # psi(1+m+k)
        psi_1k = -EULER_GAMMA  # psi(1+k)
        psi_a = _digamma(a + m)  # psi(a+k+m)
        coef = y ** m / math.factorial(m)  # (a+m)_k (-1)^k y^(k+m) / (k! (k+m)!)
        small = 0
        k = 0
        while True:
            t = coef * (r * (logmx + psi_1mk + psi_1k - psi_a) - gpsi)
            total += t
            at = abs(t)
            abs_total += abs(coef) * (abs(r) * (abs(logmx) + abs(psi_1mk) + abs(psi_1k) + abs(psi_a)) + abs(gpsi))
            if at <= TERM_TOL * abs(total):
                small += 1
                if small >= 2 and k > 1:
                    break
            else:
                small = 0
            coef *= -(a + m + k) * y / ((k + 1) * (k + m + 1))
            gpsi = (w0 - k - 1) * gpsi - r
            r *= w0 - k - 1
            psi_1mk += 1.0 / (k + m + 1)
            psi_1k += 1.0 / (k + 1)
            psi_a += 1.0 / (a + m + k)
            k += 1
            if k > MAX_TERMS:
                raise NonConvergenceError("logarithmic 2F1 series at infinity did not converge")
        total *= ga
        abs_total *= abs(ga)
    lp = L - a * branch_log(-x, mside)
    if lp.real > 709.0:
        raise OverflowError("scaled 2F1 overflows")
    pref = cmath.exp(lp) if lp.real > -745.0 else 0j
    val = pref * (fin + total)
    err = ULPS_PER_TERM * EPS * abs(pref) * (fin_abs + abs_total) + abs(val) * (4 * EPS * (1 + abs(a)) + _log_rel(lp))
    return _Approx(val, err)


# --------------------------------------------------------- ODE continuation


def _ode_continue(a, b, c, x, L: complex = 0j) -> _Approx:
    """Integrate the hypergeometric equation by Taylor steps from a point where the series converges fast.

    The transfer matrix of the path is propagated so that the error of the
    initial data is amplified honestly into the final estimate.
    """
    start = 0.5 * x / abs(x)
    y = _maclaurin(a, b, c, start, L)
    dy = _maclaurin(a + 1.0, b + 1.0, c + 1.0, start, L)
    cols = [[1 + 0j, 0j], [0j, 1 + 0j]]  # (value, derivative) for the two basis solutions
    step_rel = 0.0
    x0 = start
    for target in _ode_path(start, x):
        while x0 != target:
            radius = min(abs(x0), abs(1.0 - x0))
            hmax = 0.4 * radius
            dist = abs(target - x0)
            h = (target - x0) if dist <= hmax else (target - x0) * (hmax / dist)
            worst = 0.0
            for col in cols:
                col[0], col[1], r = _taylor_step(a, b, c, x0, col[0], col[1], h)
                worst = max(worst, r)
            step_rel += worst
            x0 = target if dist <= hmax else x0 + h
    d0 = a * b * dy.v
    t0, t1 = cols[0][0] * y.v, cols[1][0] * d0
    val = t0 + t1
    mag = abs(t0) + abs(t1)
    err = mag * (max(y.rel(), dy.rel()) + step_rel + ULPS_PER_TERM * EPS)
    return _Approx(val, err)


def _ode_path(start: complex, x: complex) -> list[complex]:
    """Waypoints ending at x; a leg that would graze x = 1 detours on the side of Im x."""
    d = x - start
    t = ((1.0 - start) * d.conjugate()).real / abs(d) ** 2
    if x.real > 1.0 and 0.0 < t < 1.0 and abs(start + t * d - 1.0) < DETOUR:
        return [complex(1.0, math.copysign(DETOUR, x.imag)), x]
    return [x]


def _taylor_step(a, b, c, x0, y0, y1, h):
    q = x0 * (1.0 - x0)
    lin = c - (a + b + 1.0) * x0
    slope = 1.0 - 2.0 * x0
    prev, cur = y0, y1 * h  # y_n h^n
    val = prev + cur
    der = y1
    abs_sum = abs(prev) + abs(cur)
    small = 0
    n = 0
    while True:
        nxt = ((n + a) * (n + b) * prev * h * h
               - (n + 1) * (slope * n + lin) * cur * h) / (q * (n + 1) * (n + 2))
        val += nxt
        der += (n + 2) * nxt / h
        abs_sum += abs(nxt)
        if abs(nxt) <= TERM_TOL * abs(val):
            small += 1
            if small >= 2 and n > 4:
                break
        else:
            small = 0
        prev, cur = cur, nxt
        n += 1
        if n > MAX_TERMS:
            raise NonConvergenceError("Taylor continuation did not converge")
    return val, der, ULPS_PER_TERM * EPS * abs_sum / max(abs(val), 1e-300)


# ------------------------------------------------------------ dispatcher


def _route(name: str, a, b, c, x, side: Side, L: complex = 0j, cx: Optional[complex] = None) -> _Approx:
    if cx is None:
        cx = 1.0 - x
    if name.endswith("'"):
        # F is symmetric in (a, b); the Pfaff-based routes are not
        a, b, name = b, a, name[:-1]
    if name == "direct":
        return _maclaurin(a, b, c, x, L)
    if name == "A":
        return _one_minus_x(a, b, c, x, side, L, cx)
    if name == "B":
        return _inverse_x(a, b, c, x, side, L)
    if name == "pfaff":
        return _pfaff(a, b, c, x, side, lambda a_, b_, c_, w, s, L_: _maclaurin(a_, b_, c_, w, L_), L, cx)
    if name == "C":
        # 1 - x/(x-1) = 1/(1-x)
        return _pfaff(a, b, c, x, side, lambda a_, b_, c_, w, s, L_: _one_minus_x(a_, b_, c_, w, s, L_, 1.0 / cx), L, cx)
    if name == "D":
        return _pfaff(a, b, c, x, side, _inverse_x, L, cx)
    raise ValueError(name)


def _route_radii(x: complex, cx: complex) -> list[tuple[float, int, str]]:
    ax = abs(x)
    a1x = abs(cx)
    w = ax / a1x if cx != 0 else math.inf
    radii = {
        "direct": ax,
        "pfaff": w,
        "A": a1x,
        "B": 1.0 / ax if ax else math.inf,
        "C": 1.0 / a1x if a1x else math.inf,
        "D": a1x / ax if ax else math.inf,
    }
    order = ("direct", "pfaff", "A", "B", "C", "D", "pfaff'", "C'", "D'")
    return sorted((radii[k.rstrip("'")], i, k) for i, k in enumerate(order))


def _evaluate(a, b, c, x, side: Side, L: complex = 0j, cx: Optional[complex] = None) -> _Approx:
    if cx is None:
        cx = 1.0 - x
    if x == 0:
        g = _scaled_rgamma(L, c)
        return _Approx(g, abs(g) * (2 * EPS + _log_rel(L)))
    n = nonpositive_integer(c, 0.0)
    if n is not None:
        # at c = -n the first n+1 terms vanish; shifting them out avoids forming c - a next to a pole
        pref = 1 + 0j
        near_zero = 0.0
        for k in range(n + 1):
            pref *= (a + k) * (b + k) * x
            if pref != 0:
                near_zero += 1.0 / abs(a + k) + 1.0 / abs(b + k)
        if pref == 0:
            return _Approx(0j, 0.0)
        lp = cmath.log(pref)
        inner = _evaluate(a + n + 1, b + n + 1, complex(n + 2), x, side, L + lp, cx)
        # a or b formed by the caller next to a zero of the prefactor carries its rounding into the value
        formed = EPS * (abs(a) + abs(b) + n + 1.0) * near_zero
        return inner.scaled(1.0, (3 * n + 4) * EPS + _log_rel(lp) + formed)
    if nonpositive_integer(a, 0.0) is not None or nonpositive_integer(b, 0.0) is not None:
        best = _maclaurin(a, b, c, x, L)
        if best.rel() > GOOD_ENOUGH and cx != 0:
            # the Pfaff image keeps the terminating parameter, so it is a polynomial in x/(x-1)
            kept = "pfaff" if nonpositive_integer(a, 0.0) is not None else "pfaff'"
            try:
                alt = _route(kept, a, b, c, x, side, L, cx)
            except _ROUTE_FAILURES:
                return best
            if cmath.isfinite(alt.v) and alt.rel() < best.rel():
                return alt
        return best
    if cx == 0:
        if (c - a - b).real > 0:
            g = gamma_ratio([c - a - b], [c - a, c - b])
            f = cmath.exp(L) if L != 0 else 1.0
            return _Approx(g.value * f, g.abs_error * abs(f) + abs(g.value * f) * _log_rel(L))
        raise DomainError("2F1 diverges at x = 1 when Re(c-a-b) <= 0")
    ca, cb = c - a, c - b
    if nonpositive_integer(ca, 0.0) is not None or nonpositive_integer(cb, 0.0) is not None:
        if abs(x) <= 0.5:
            return _maclaurin(a, b, c, x, L)
        lw = (c - a - b) * branch_log(cx, side.flipped())
        return _maclaurin(ca, cb, c, x, L + lw).scaled(1.0, _log_rel(lw))
    candidates = _route_radii(x, cx)
    if candidates[0][0] > ODE_TRIGGER:
        return _ode_continue(a, b, c, x, L)
    best: Optional[_Approx] = None
    for radius, _, name in candidates:
        if radius > SERIES_RADIUS:
            break
        try:
            got = _route(name, a, b, c, x, side, L, cx)
        except _ROUTE_FAILURES:
            continue
        if not (cmath.isfinite(got.v) and math.isfinite(got.e)):
            continue
        if best is None or got.rel() < best.rel():
            best = got
        if best.rel() <= GOOD_ENOUGH:
            break
    if best is None:
        return _ode_continue(a, b, c, x, L)
    if best.rel() > GOOD_ENOUGH and not (x.imag == 0.0 and x.real >= 1.0):
        try:
            alt = _ode_continue(a, b, c, x, L)
        except _ROUTE_FAILURES:
            return best
        if alt.rel() < best.rel():
            return alt
    return best


def _pole_sensitivity(a, b, c, x, L: complex) -> float:
    """Error from rounding in formed parameters such as c - a when c sits next to a pole of Gamma.

    There the leading terms (a)_k (b)_k x^k / (k! Gamma(c+k)) are small but have slope
    psi/Gamma(c+k) of order one in c, so an ulp of c moves the result by about an ulp
    in absolute terms, however small the value.
    """
    n = nonpositive_integer(c, 0.5)
    if n is None or L.real > 700.0 or c == -n:
        # an exact pole makes c + k exact too, so those terms vanish without rounding
        return 0.0
    total = 0.0
    p = 1 + 0j
    for k in range(n + 1):
        total += abs(p * _rgamma_psi(c + k))
        p *= (a + k) * (b + k) * x / (k + 1)
    return 4 * EPS * (abs(a) + abs(b) + abs(c) + 1.0) * total * math.exp(L.real)


def hyp2f1_regularized(a, b, c, x, side=None, log_scale: complex = 0j, complement=None) -> FnValue:
    """e^{log_scale} F(a,b;c;x)/Gamma(c) for complex parameters and argument.

    ``side`` selects x + i0 (above) or x - i0 (below) on the cut x > 1.
    ``log_scale`` lets callers fold a large or small prefactor into the
    evaluation so that the product stays inside double range.
    ``complement`` is 1 - x when the caller knows it more accurately than
    x itself carries it (x close to 1).
    """
    a, b = complex(a), complex(b)
    c, x = complex(c), complex(x)
    n = nonpositive_integer(c, RGAMMA_ZERO_TOL)
    if n is not None:
        # callers form c from indices such as nu - mu + 1; within the pole tolerance the pole is meant
        c = complex(-n)
    L = complex(log_scale)
    s = Side.parse(side)
    if _is_cut(x) and s == Side.OFF_AXIS:
        poly = nonpositive_integer(a, 0.0) is not None or nonpositive_integer(b, 0.0) is not None
        if not poly:
            raise BranchAmbiguityError(f"2F1 argument {x.real} lies on the cut (1, inf); a side is required")
    if s != Side.OFF_AXIS and not _is_cut(x):
        s = Side.OFF_AXIS if x.imag != 0 else s
    got = _evaluate(a, b, c, x, s, L, None if complement is None else complex(complement))
    if not cmath.isfinite(got.v):
        raise NonConvergenceError(f"2F1 evaluation produced a non-finite value at {(a, b, c, x)}")
    got.e += _pole_sensitivity(a, b, c, x, L)
    flags = set()
    big = max(abs(a), abs(b), abs(c)) > 30
    if got.degraded or big or got.rel() > 1e-10:
        flags.add(Flag.DEGRADED)
    return FnValue(got.v, got.e if math.isfinite(got.e) else abs(got.v), frozenset(flags))


def hyp2f1_derivative(a, b, c, x, side=None) -> FnValue:
    """d/dx of the regularized 2F1 via the parameter-shift formula."""
    inner = hyp2f1_regularized(complex(a) + 1, complex(b) + 1, complex(c) + 1, x, side)
    k = complex(a) * complex(b)
    return FnValue(k * inner.value, abs(k) * inner.abs_error, inner.flags)


# ------------------------------------------------------------ confluent


def _kummer_series(a: complex, c: complex, x: complex) -> _Approx:
    k0 = _rgamma_shift_start(c)
    total = 0j
    abs_total = 0.0
    small = 0
    for k, t in _series_terms(k0, c, lambda k: (a + k) * x / (k + 1)):
        total += t
        at = abs(t)
        abs_total += at
        if a + k == 0 and k >= k0:
            break
        if k >= k0 and at <= TERM_TOL * abs(total) and k > abs(x):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
        if k > MAX_TERMS or not cmath.isfinite(total):
            raise NonConvergenceError("Kummer series did not converge")
    return _Approx(total, ULPS_PER_TERM * EPS * abs_total)


def kummer_phi_regularized(a, c, x) -> FnValue:
    """Phi(a;c;x)/Gamma(c), entire in c."""
    a, c, x = complex(a), complex(c), complex(x)
    if x.real < 0:
        inner = _kummer_series(c - a, c, -x)
        got = inner.scaled(cmath.exp(x), 4 * EPS * (1 + abs(x)))
    else:
        got = _kummer_series(a, c, x)
    flags = {Flag.DEGRADED} if abs(x) > 50 or got.rel() > 1e-10 else set()
    return FnValue(got.v, got.e, frozenset(flags))


# ------------------------------------------------------------ Bessel J

BESSEL_SERIES_LIMIT = 20.0
BESSEL_HANKEL_MIN = 8.0


def bessel_j(order, y, side=None) -> FnValue:
    """J_order(y); the ascending series up to |y| = 20, Hankel's expansion beyond, the sharper bound in between."""
    nu, y = complex(order), complex(y)
    s = Side.parse(side)
    on_cut = y.imag == 0.0 and y.real < 0.0
    integer_order = nearest_integer(nu, 0.0)
    if on_cut and s == Side.OFF_AXIS and integer_order is None:
        raise BranchAmbiguityError("Bessel J of a negative real argument needs a side for non-integer order")
    if y == 0:
        if nu == 0:
            return FnValue(1.0)
        if nu.real > 0 or (integer_order is not None and integer_order < 0):
            return FnValue(0.0)
        raise DomainError("J_nu(0) is infinite for Re nu < 0")
    hankel_ok = y.real > 0 and abs(y) >= BESSEL_HANKEL_MIN
    got = _hankel(nu, y) if hankel_ok else None
    if abs(y) <= BESSEL_SERIES_LIMIT or on_cut or y.real < 0:
        pref = branch_power(0.5 * y, nu, s)
        ser = _kummer_like_bessel(nu, y).scaled(pref, 4 * EPS * (1 + abs(nu)))
        # the ascending series cancels for mid-size y, where the Hankel bound is often already sharper
        if got is None or ser.e < got.e:
            got = ser
    flags = {Flag.DEGRADED} if got.rel() > 1e-10 else set()
    return FnValue(got.v, got.e, frozenset(flags))


def _kummer_like_bessel(nu: complex, y: complex) -> _Approx:
    """sum_k (-y^2/4)^k / (k! Gamma(nu+k+1))."""
    q = -0.25 * y * y
    c = nu + 1.0
    k0 = _rgamma_shift_start(c)
    total = 0j
    abs_total = 0.0
    small = 0
    for k, t in _series_terms(k0, c, lambda k: q / (k + 1)):
        total += t
        at = abs(t)
        abs_total += at
        if k >= k0 and at <= TERM_TOL * abs(total) and k * k > abs(q):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
        if k > MAX_TERMS or not cmath.isfinite(total):
            raise NonConvergenceError("Bessel series did not converge")
    return _Approx(total, ULPS_PER_TERM * EPS * abs_total)


def _hankel(nu: complex, y: complex) -> _Approx:
    mu4 = 4.0 * nu * nu
    omega = y - (0.5 * nu + 0.25) * math.pi
    pser, qser = 0j, 0j
    term = 1 + 0j
    last = math.inf
    k = 0
    while k < 200:
        if k % 2 == 0:
            pser += term if (k // 2) % 2 == 0 else -term
        else:
            qser += term if (k // 2) % 2 == 0 else -term
        nxt = term * (mu4 - (2 * k + 1) ** 2) / ((k + 1) * 8.0 * y)
        if abs(nxt) >= last or abs(nxt) < 1e-17:
            last = abs(nxt)
            break
        last = abs(term)
        term = nxt
        k += 1
    pref = cmath.sqrt(2.0 / (math.pi * y))
    val = pref * (pser * cmath.cos(omega) - qser * cmath.sin(omega))
    scale = abs(pref) * (abs(cmath.cos(omega)) + abs(cmath.sin(omega)))
    return _Approx(val, scale * (last + 10 * EPS))
