"""Integral identities, orthogonal systems, the generating series and the addition theorems.

Each check returns a Residual comparing a closed form or single evaluation
with its integral or series counterpart. Preconditions the integrals need
for convergence are enforced with PreconditionError.
"""

from __future__ import annotations

import cmath
import math
from typing import Optional

from .foundations import EPS, POLE_TOL, gamma_ratio, nearest_integer, sin_pi
from .legendre import IndexTriple, derivative, evaluate, p_first_kind, p_tilde, q_second_kind
from .quadrature import DEFAULT_DE, DEFAULT_GL, Interval, QuadratureSpec, integrate
from .triangle import TriangleConfig, solve_triangle
from .types import DegenerateCoefficientError, DomainError, Flag, FnValue, PreconditionError, Residual

PI = math.pi
I = 1j
# near z = 1 the factors are only good to ~1e-9, so asking the rule for more just burns levels
PQ_SPEC = QuadratureSpec("tanh-sinh", 10, tolerance=1e-10)


def _value(v: FnValue) -> complex:
    if v.is_pole:
        raise DomainError("an index pole sits inside the identity")
    return v.value


def _mul_err(a: FnValue, b: FnValue) -> float:
    return abs(a.value) * b.abs_error + abs(b.value) * a.abs_error


def _residual(lhs: complex, rhs: complex, lhs_err: float, rhs_err: float, flags=frozenset()) -> Residual:
    return Residual(lhs, rhs, max(abs(lhs), abs(rhs)), lhs_err + rhs_err, frozenset(flags))


def _real_side(z, name: str) -> float:
    z = complex(z)
    if z.imag != 0.0 or not z.real > 1.0:
        raise PreconditionError(f"{name} must be real and greater than 1")
    return z.real


# ------------------------------------------------------------ product integrals


def product_integral_identity(j1, j2, mu, nu, kinds: tuple[str, str] = ("P", "P"), a: float = 1.2, b: float = 3.0,
                              spec: Optional[QuadratureSpec] = None) -> Residual:
    """Quadrature of f_{j1} f_{j2} over [a, b] against the boundary term (1-z^2)(f1 f2' - f1' f2)/((j1-j2)(j1+j2+1))."""
    j1, j2, mu, nu = (complex(v) for v in (j1, j2, mu, nu))
    denom = (j1 - j2) * (j1 + j2 + 1)
    if abs(denom) <= POLE_TOL * max(1.0, abs(j1) ** 2):
        raise DegenerateCoefficientError("j1(j1+1) = j2(j2+1): the boundary formula has no content")
    if not 1.0 < a < b:
        raise PreconditionError("need 1 < a < b")
    k1, k2 = kinds
    i1, i2 = IndexTriple(j1, mu, nu), IndexTriple(j2, mu, nu)

    def integrand(z: float) -> FnValue:
        f1, f2 = evaluate(k1, i1, z), evaluate(k2, i2, z)
        return FnValue(_value(f1) * _value(f2), _mul_err(f1, f2))

    lhs = integrate(integrand, Interval.finite(a, b), spec or DEFAULT_GL)

    def boundary(z: float) -> tuple[complex, float]:
        f1, f2 = evaluate(k1, i1, z), evaluate(k2, i2, z)
        d1, d2 = derivative(k1, i1, z), derivative(k2, i2, z)
        w = (1 - z * z) / denom
        val = w * (_value(f1) * _value(d2) - _value(d1) * _value(f2))
        err = abs(w) * (_mul_err(f2, d1) + _mul_err(d2, f1)) + 4 * EPS * abs(val)
        return val, err

    (hb, eb), (ha, ea) = boundary(b), boundary(a)
    return _residual(lhs.value, hb - ha, lhs.abs_error, eb + ea)


def pq_closed_form(j, l, mu, nu) -> complex:
    return cmath.exp(I * PI * (nu - mu)) / ((l - j) * (l + j + 1))


def pq_integral(j, l, mu, nu, spec: Optional[QuadratureSpec] = None) -> FnValue:
    """Integral of P^j_{mu nu} Q^l_{nu mu} over [1, inf) by exp-sinh quadrature."""
    j, l, mu, nu = (complex(v) for v in (j, l, mu, nu))
    if not (l.real > j.real >= -0.5):
        raise PreconditionError("need Re l > Re j >= -1/2 for convergence at infinity")
    if not (nu - mu + 1).real > 0:
        raise PreconditionError("need Re(nu - mu + 1) > 0 for convergence at z = 1")
    ip, iq = IndexTriple(j, mu, nu), IndexTriple(l, nu, mu)

    def integrand(z: float) -> FnValue:
        p, q = p_first_kind(ip, z), q_second_kind(iq, z)
        return FnValue(_value(p) * _value(q), _mul_err(p, q))

    return integrate(integrand, Interval.semi_infinite(1.0), spec or PQ_SPEC)


def pq_integral_check(j, l, mu, nu, spec: Optional[QuadratureSpec] = None) -> Residual:
    v = pq_integral(j, l, mu, nu, spec)
    c = pq_closed_form(complex(j), complex(l), complex(mu), complex(nu))
    return _residual(v.value, c, v.abs_error, 4 * EPS * abs(c))


# ------------------------------------------------------------ orthogonal systems


def orthogonal_system(idx: IndexTriple) -> int:
    """1 when (j, mu, nu) meets Re(nu-mu+1) > 0, Re(nu+mu+1) > 0, j - nu = n >= 0; 2 for the mu <-> -nu mirror; 0 otherwise."""
    j, mu, nu = idx.j, idx.mu, idx.nu
    n = nearest_integer(j - nu)
    if (nu - mu + 1).real > 0 and (nu + mu + 1).real > 0 and n is not None and n >= 0:
        return 1
    n = nearest_integer(j + mu)
    if (nu - mu + 1).real > 0 and (1 - nu - mu).real > 0 and n is not None and n >= 0:
        return 2
    return 0


def _endpoint_exponents(idx: IndexTriple, system: int) -> tuple[complex, complex]:
    """Powers of (1-x)/2 and (1+x)/2 that P~ carries in the given orthogonal system."""
    e_plus = (idx.nu - idx.mu) / 2.0
    e_minus = (idx.nu + idx.mu) / 2.0 if system == 1 else -(idx.nu + idx.mu) / 2.0
    return e_plus, e_minus


def _interior(x: float) -> float:
    if x >= 1.0:
        return math.nextafter(1.0, 0.0)
    if x <= -1.0:
        return math.nextafter(-1.0, 0.0)
    return x


def _regular_part(idx: IndexTriple, x: float, exps: tuple[complex, complex]) -> FnValue:
    """P~ with its endpoint powers divided out (smooth on [-1, 1] inside an orthogonal system)."""
    x = _interior(x)
    p = p_tilde(idx, x)
    sing = ((1 - x) / 2) ** exps[0] * ((1 + x) / 2) ** exps[1]
    return FnValue(_value(p) / sing, p.abs_error / abs(sing))


def _product_on_cut(i1: IndexTriple, i2: IndexTriple, system: int, spec: Optional[QuadratureSpec]) -> FnValue:
    e1, e2 = _endpoint_exponents(i1, system), _endpoint_exponents(i2, system)
    ep, em = e1[0] + e2[0], e1[1] + e2[1]

    def integrand(x: float, d: float) -> FnValue:
        # d is the exact offset from the nearer end: 1 - x = -d near +1, 1 + x = d near -1
        omx, opx = (-d, 2.0 + d) if d < 0 else (2.0 - d, d)
        sing = (omx / 2) ** ep * (opx / 2) ** em
        r1, r2 = _regular_part(i1, x, e1), _regular_part(i2, x, e2)
        return FnValue(sing * r1.value * r2.value, abs(sing) * _mul_err(r1, r2))

    return integrate(integrand, Interval.finite(-1.0, 1.0), spec or DEFAULT_DE, offsets=True)


def norm_closed_form(idx: IndexTriple) -> FnValue:
    j, mu, nu = idx.j, idx.mu, idx.nu
    g = gamma_ratio([j + mu + 1, j - nu + 1], [j - mu + 1, j + nu + 1])
    if g.is_pole:
        return g
    c = 2.0 / (2 * j + 1)
    return FnValue(c * g.value, abs(c) * g.abs_error)


def norm_integral(idx, spec: Optional[QuadratureSpec] = None) -> FnValue:
    """Integral of [P~^j_{mu nu}]^2 over [-1, 1] for a member of either orthogonal system."""
    idx = idx if isinstance(idx, IndexTriple) else IndexTriple(*idx)
    system = orthogonal_system(idx)
    if not system:
        raise PreconditionError("indices are in neither orthogonal system")
    return _product_on_cut(idx, idx, system, spec)


def norm_check(idx, spec: Optional[QuadratureSpec] = None) -> Residual:
    idx = idx if isinstance(idx, IndexTriple) else IndexTriple(*idx)
    v = norm_integral(idx, spec)
    c = norm_closed_form(idx)
    return _residual(v.value, _value(c), v.abs_error, c.abs_error)


def cross_orthogonality(j1, j2, mu, nu, spec: Optional[QuadratureSpec] = None) -> FnValue:
    """Integral of P~^{j1} P~^{j2} over [-1, 1]; zero when both lie in one orthogonal system with j1 != j2."""
    i1, i2 = IndexTriple(j1, mu, nu), IndexTriple(j2, mu, nu)
    s1, s2 = orthogonal_system(i1), orthogonal_system(i2)
    if not s1 or s1 != s2:
        raise PreconditionError("both functions must belong to the same orthogonal system")
    return _product_on_cut(i1, i2, s1, spec)


# ------------------------------------------------------------ generating series


def generating_series_partial_sum(mu, nu, z, zeta, n_terms: int) -> FnValue:
    """First n_terms of the expansion of 1/(zeta - z) over j = nu, nu+1, ..."""
    mu, nu, z, zeta = (complex(v) for v in (mu, nu, z, zeta))
    if int(n_terms) != n_terms or n_terms < 1:
        raise ValueError("n_terms must be a positive integer")
    if z.imag or zeta.imag or not (zeta.real > z.real > 1.0):
        raise PreconditionError("need real zeta > z > 1")
    pref = (cmath.exp(I * PI * (mu - nu)) * ((z - 1) / (zeta - 1)) ** (-(nu - mu) / 2)
            * ((z + 1) / (zeta + 1)) ** (-(nu + mu) / 2))
    terms, err = [], 0.0
    for n in range(int(n_terms)):
        j = nu + n
        p = p_first_kind(IndexTriple(j, mu, nu), z)
        q = q_second_kind(IndexTriple(j, nu, mu), zeta)
        t = (2 * j + 1) * _value(p) * _value(q)
        terms.append(t)
        err += abs(2 * j + 1) * _mul_err(p, q)
    total = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    return FnValue(pref * total, abs(pref) * (err + 4 * EPS * sum(abs(t) for t in terms)))


# ------------------------------------------------------------ addition theorems


def _hyperbolic(z1: float, z2: float, alpha: float):
    t = solve_triangle(TriangleConfig(z1, z2, alpha, "hyperbolic"))
    return t.z_third, t.p1, t.p2


def shifted_trig_angles(z1: float, z2: float, theta: float) -> tuple[float, float, float]:
    """z_theta and (theta1, theta2) with the angle next to the larger side moved by pi so both vanish with theta.

    The addition theorems hold in this form; the plain triangle angles (sign of
    sin theta_i equal to that of sin theta) leave them off by O(1).
    """
    t = solve_triangle(TriangleConfig(z1, z2, theta, "trigonometric"))
    t1, t2 = t.p1, t.p2

    def toward_zero(p: float) -> float:
        return p - PI if p > 0 else (p + PI if p < 0 else p)

    if z1 > z2:
        t1 = toward_zero(t1)
    else:
        t2 = toward_zero(t2)
    return t.z_third, t1, t2


def _hyperbolic_kernel(j, mu, lam, nu, z1, z2):
    idx = IndexTriple(j, mu, nu)

    def f(alpha: float) -> FnValue:
        try:
            za, a1, a2 = _hyperbolic(z1, z2, alpha)
        except OverflowError:
            return FnValue(0j)
        q = q_second_kind(idx, za)
        ph = cmath.exp(-lam * alpha + mu * a2 + nu * a1)
        return FnValue(ph * _value(q), abs(ph) * q.abs_error)
    return f


def multiplication_formula_check(j, mu, lam, nu=None, z1=2.0, z2=2.5, spec: Optional[QuadratureSpec] = None) -> Residual:
    """Q^j_{mu lam}(z1) Q^j_{lam nu}(z2) against (1/2) times the alpha-integral of the single Q at z_alpha."""
    j, mu, lam = complex(j), complex(mu), complex(lam)
    nu = mu if nu is None else complex(nu)
    z1, z2 = _real_side(z1, "z1"), _real_side(z2, "z2")
    if not ((j - lam + 1).real > 0 and (j + lam + 1).real > 0):
        raise PreconditionError("need Re(j - lam + 1) > 0 and Re(j + lam + 1) > 0")
    qa = q_second_kind(IndexTriple(j, mu, lam), z1)
    qb = q_second_kind(IndexTriple(j, lam, nu), z2)
    lhs = _value(qa) * _value(qb)
    rhs = integrate(_hyperbolic_kernel(j, mu, lam, nu, z1, z2), Interval.full_line(), spec or DEFAULT_DE)
    return _residual(lhs, 0.5 * rhs.value, _mul_err(qa, qb), 0.5 * rhs.abs_error)


def addition_contour_check(j, mu, nu, alpha, z1=2.0, z2=2.5, spec: Optional[QuadratureSpec] = None) -> Residual:
    """Single Q at z_alpha against (1/pi) times the integral over t of e^{i t alpha} Q^j_{mu, it}(z1) Q^j_{it, nu}(z2)."""
    j, mu, nu = complex(j), complex(mu), complex(nu)
    alpha = float(alpha)
    z1, z2 = _real_side(z1, "z1"), _real_side(z2, "z2")
    if not j.real > -0.5:
        raise PreconditionError("need Re j > -1/2 so the index poles stay off the imaginary contour")
    za, a1, a2 = _hyperbolic(z1, z2, alpha)
    q = q_second_kind(IndexTriple(j, mu, nu), za)
    ph = cmath.exp(mu * a2 + nu * a1)
    lhs = ph * _value(q)

    def f(t: float) -> FnValue:
        lam = I * t
        qa = q_second_kind(IndexTriple(j, mu, lam), z1)
        qb = q_second_kind(IndexTriple(j, lam, nu), z2)
        e = cmath.exp(I * t * alpha)
        return FnValue(e * _value(qa) * _value(qb), abs(e) * _mul_err(qa, qb))

    rhs = integrate(f, Interval.full_line(), spec or DEFAULT_DE)
    return _residual(lhs, rhs.value / PI, abs(ph) * q.abs_error, rhs.abs_error / PI)


def _theta_integral(j, mu, lam, nu, z1, z2, spec) -> FnValue:
    idx = IndexTriple(j, mu, nu)

    def f(theta: float) -> FnValue:
        zt, t1, t2 = shifted_trig_angles(z1, z2, theta)
        q = q_second_kind(idx, zt)
        ph = cmath.exp(-I * (lam * theta + mu * t2 + nu * t1))
        return FnValue(ph * _value(q), abs(ph) * q.abs_error)

    parts = [integrate(f, Interval.finite(-PI, 0.0), spec or DEFAULT_DE),
             integrate(f, Interval.finite(0.0, PI), spec or DEFAULT_DE)]
    total = parts[0].value + parts[1].value
    return FnValue(total / (2 * PI), (parts[0].abs_error + parts[1].abs_error) / (2 * PI))


def mixed_pq_check(variant: str, j, mu, lam, nu, z1, z2, spec: Optional[QuadratureSpec] = None) -> Residual:
    """Q(z1) P(z2) for z1 > z2 ('QP'), or P(z1) Q(z2) for z1 < z2 ('PQ'), against a theta-integral plus a weighted half-line alpha-integral."""
    j, mu, lam, nu = (complex(v) for v in (j, mu, lam, nu))
    z1, z2 = _real_side(z1, "z1"), _real_side(z2, "z2")
    if variant == "QP":
        if not z1 > z2:
            raise PreconditionError("this form needs z1 > z2")
        if not (j - lam + 1).real > 0:
            raise PreconditionError("need Re(j - lam + 1) > 0")
        a = q_second_kind(IndexTriple(j, mu, lam), z1)
        b = p_first_kind(IndexTriple(j, lam, nu), z2)
        ph = cmath.exp(I * PI * (lam - nu))
        weight = sin_pi(lam - nu) / PI
        half = Interval.semi_infinite(0.0, -1)
    elif variant == "PQ":
        if not z1 < z2:
            raise PreconditionError("this form needs z1 < z2")
        if not (j + lam + 1).real > 0:
            raise PreconditionError("need Re(j + lam + 1) > 0")
        a = p_first_kind(IndexTriple(j, mu, lam), z1)
        b = q_second_kind(IndexTriple(j, lam, nu), z2)
        ph = cmath.exp(I * PI * (mu - lam))
        weight = sin_pi(mu - lam) / PI
        half = Interval.semi_infinite(0.0, 1)
    else:
        raise ValueError("variant must be 'QP' (z1 > z2) or 'PQ' (z1 < z2)")
    lhs = ph * _value(a) * _value(b)
    th = _theta_integral(j, mu, lam, nu, z1, z2, spec)
    rhs, rhs_err = th.value, th.abs_error
    if weight != 0:
        al = integrate(_hyperbolic_kernel(j, mu, lam, nu, z1, z2), half, spec or DEFAULT_DE)
        rhs += weight * al.value
        rhs_err += abs(weight) * al.abs_error
    return _residual(lhs, rhs, abs(ph) * _mul_err(a, b), rhs_err)


def q_integral_representation(idx, z, spec: Optional[QuadratureSpec] = None) -> FnValue:
    """Q^j_{mu nu}(z) from its integral over alpha of e^{-mu alpha} times two powers of (root + z cosh alpha +- sinh alpha)."""
    idx = idx if isinstance(idx, IndexTriple) else IndexTriple(*idx)
    j, mu, nu = idx.j, idx.mu, idx.nu
    z = _real_side(z, "z")
    if not ((j + 1 + mu).real > 0 and (j + 1 - mu).real > 0):
        raise PreconditionError("need Re(j + 1 +- mu) > 0 for the alpha-integral to converge")
    g = gamma_ratio([j - nu + 1], [j - mu + 1])
    if g.is_pole:
        raise PreconditionError("Gamma(j - nu + 1) sits on a pole")
    root = math.sqrt((z - 1) * (z + 1))
    pa, pb = -(j - nu + 1) / 2, -(j + nu + 1) / 2

    def f(alpha: float) -> complex:
        # both bases are positive; work in logs so large |alpha| neither overflows nor underflows early
        if abs(alpha) > 700:
            return 0j
        ea = math.exp(alpha)
        la = math.log(root + ((z + 1) * ea + (z - 1) / ea) / 2)
        lb = math.log(root + ((z - 1) * ea + (z + 1) / ea) / 2)
        return cmath.exp(-mu * alpha + pa * la + pb * lb)

    v = integrate(f, Interval.full_line(), spec or DEFAULT_DE)
    c = 0.5 * cmath.exp(I * PI * (mu - nu)) * g.value
    return FnValue(c * v.value, abs(c) * v.abs_error + abs(v.value) * 0.5 * g.abs_error)


def q_integral_check(idx, z, spec: Optional[QuadratureSpec] = None) -> Residual:
    idx = idx if isinstance(idx, IndexTriple) else IndexTriple(*idx)
    rep = q_integral_representation(idx, z, spec)
    q = q_second_kind(idx, z)
    return _residual(_value(q), rep.value, q.abs_error, rep.abs_error)


def series_addition_check(kind: str, j, mu, nu, theta, z1, z2, n_max: int) -> Residual:
    """f^j_{mu nu}(z_theta) with its angle phases against the lam-sum truncated at |n| <= n_max (f = Q or P)."""
    kind = kind.upper()
    if kind not in ("P", "Q"):
        raise ValueError("kind must be 'P' or 'Q'")
    j, mu, nu = complex(j), complex(mu), complex(nu)
    theta = float(theta)
    z1, z2 = _real_side(z1, "z1"), _real_side(z2, "z2")
    if z1 == z2:
        raise PreconditionError("the series needs z1 != z2")
    if int(n_max) != n_max or n_max < 0:
        raise ValueError("n_max must be a nonnegative integer")
    zt, t1, t2 = shifted_trig_angles(z1, z2, theta)
    f = evaluate(kind, IndexTriple(j, mu, nu), zt)
    ph = cmath.exp(-I * (mu * t2 + nu * t1))
    lhs = ph * _value(f)
    terms, err = [], 0.0
    for n in range(-int(n_max), int(n_max) + 1):
        if z1 > z2:
            lam = nu + n
            a = evaluate(kind, IndexTriple(j, mu, lam), z1)
            b = p_first_kind(IndexTriple(j, lam, nu), z2)
        else:
            lam = mu + n
            a = p_first_kind(IndexTriple(j, mu, lam), z1)
            b = evaluate(kind, IndexTriple(j, lam, nu), z2)
        if a.is_zero or b.is_zero:
            continue
        e = (-1) ** (n % 2) * cmath.exp(I * lam * theta)
        terms.append(e * _value(a) * _value(b))
        err += abs(e) * _mul_err(a, b)
    rhs = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    flags = {Flag.DEGRADED} if f.degraded else set()
    return _residual(lhs, rhs, abs(ph) * f.abs_error, err + 4 * EPS * sum(abs(t) for t in terms), flags)
