"""Generalized Legendre functions P^j_{mu nu}(z), Q^j_{mu nu}(z) and the on-cut function P~."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .foundations import (
    EPS,
    POLE_TOL,
    RGAMMA_ZERO_TOL,
    branch_log,
    branch_power,
    gamma_ratio,
    log_gamma,
    nearest_integer,
    nonpositive_integer,
    sin_pi,
)
from .hypergeometric import hyp2f1_regularized
from .types import BranchAmbiguityError, DomainError, Flag, FnValue, NonConvergenceError, Residual, Side, term_scale

PI = math.pi
I = 1j
FORM_FALLBACK_REL = 1e-12


@dataclass(frozen=True)
class IndexTriple:
    j: complex
    mu: complex
    nu: complex

    def __post_init__(self):
        for name in ("j", "mu", "nu"):
            v = complex(getattr(self, name))
            if not cmath.isfinite(v):
                raise DomainError(f"index {name} must be finite")
            object.__setattr__(self, name, v)

    def replace(self, **kw) -> "IndexTriple":
        d = {"j": self.j, "mu": self.mu, "nu": self.nu}
        d.update(kw)
        return IndexTriple(**d)


@dataclass(frozen=True)
class Argument:
    """Evaluation point z with the cut side used when z lies on (-inf, 1)."""

    z: complex
    side: Side = Side.OFF_AXIS

    def __post_init__(self):
        z = complex(self.z)
        if not cmath.isfinite(z):
            raise DomainError("argument must be finite")
        s = Side.parse(self.side)
        if not (z.imag == 0.0 and z.real < 1.0):
            s = Side.OFF_AXIS
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "side", s)

    @property
    def on_cut(self) -> bool:
        return self.z.imag == 0.0 and self.z.real < 1.0

    def check(self) -> None:
        if self.z == 1 or self.z == -1:
            raise DomainError("evaluation exactly at z = +-1 is not supported")
        if self.on_cut and self.side == Side.OFF_AXIS:
            raise BranchAmbiguityError(f"z = {self.z.real} lies on a cut; pass side='above' or 'below'")

    def negated(self) -> "Argument":
        return Argument(-self.z, self.side.flipped())


IndexLike = Union[IndexTriple, tuple]
ArgLike = Union[Argument, complex, float, int]


def as_index(idx: IndexLike) -> IndexTriple:
    return idx if isinstance(idx, IndexTriple) else IndexTriple(*idx)


def as_argument(arg: ArgLike, side=None) -> Argument:
    if isinstance(arg, Argument):
        return arg
    return Argument(complex(arg), Side.parse(side))


def _side_of(w: complex, side: Side) -> Side:
    """Side to use for a negative real quantity derived from z with the same orientation."""
    return side if w.imag == 0.0 else Side.OFF_AXIS


# -------------------------------------------------------------- zeros/poles


def is_identically_zero(idx: IndexTriple, tol: float = POLE_TOL) -> bool:
    """(mu, nu) = (j+n+1, j-m) or (-j+m, -j-n-1) with integers n, m >= 0."""
    j, mu, nu = idx.j, idx.mu, idx.nu
    n1, m1 = nearest_integer(mu - j - 1, tol), nearest_integer(j - nu, tol)
    if n1 is not None and m1 is not None and n1 >= 0 and m1 >= 0:
        return True
    m2, n2 = nearest_integer(mu + j, tol), nearest_integer(-nu - j - 1, tol)
    return m2 is not None and n2 is not None and m2 >= 0 and n2 >= 0


def q_pole_order(idx: IndexTriple, tol: float = POLE_TOL) -> int:
    """0, 1 or 2: how many of Gamma(j+mu+1), Gamma(j-nu+1) sit on a pole (conservative order)."""
    return sum(nonpositive_integer(w, tol) is not None for w in (idx.j + idx.mu + 1, idx.j - idx.nu + 1))


# -------------------------------------------------------------- evaluation


def _scaled_kernel(a, b, c, x, side, log_pref: complex, extra_rel: float = 0.0, complement=None) -> FnValue:
    """e^{log_pref} F(a,b;c;x)/Gamma(c) with the prefactor folded into the kernel."""
    f = hyp2f1_regularized(a, b, c, x, side, log_scale=log_pref, complement=complement)
    err = f.abs_error + abs(f.value) * EPS * (8.0 + extra_rel)
    return FnValue(f.value, err, f.flags)


def p_first_kind(idx: IndexLike, arg: ArgLike, side=None, form: str = "auto") -> FnValue:
    """P^j_{mu nu}(z); ``form`` is 'auto', '2' (argument (1-z)/2) or '2a' (argument (z-1)/(z+1))."""
    idx = as_index(idx)
    arg = as_argument(arg, side)
    arg.check()
    if is_identically_zero(idx):
        return FnValue.zero()
    j, mu, nu = idx.j, idx.mu, idx.nu
    n = nonpositive_integer(nu - mu + 1.0, RGAMMA_ZERO_TOL)
    if n is not None:
        # every form divides by Gamma(nu - mu + 1); move mu onto its pole so the forms agree
        mu = nu + 1.0 + n
    z, s = arg.z, arg.side
    x = (1.0 - z) / 2.0
    w = (z - 1.0) / (z + 1.0)
    lm = branch_log((z - 1.0) / 2.0, _side_of(z - 1.0, s))
    lp = branch_log((z + 1.0) / 2.0, _side_of(z + 1.0, s))

    def via(f: str) -> FnValue:
        if f == "2":
            log_pref = 0.5 * (nu - mu) * lm + 0.5 * (nu + mu) * lp
            # 1 - x = (z+1)/2 keeps its digits near z = -1, where x itself rounds toward 1
            return _scaled_kernel(j + nu + 1.0, -j + nu, nu - mu + 1.0, x, s.flipped() if x.imag == 0 else None, log_pref,
                                  complement=(z + 1.0) / 2.0)
        if f == "2a":
            log_pref = j * lp + 0.5 * (nu - mu) * (lm - lp)
            return _scaled_kernel(-j + nu, -j - mu, nu - mu + 1.0, w, s if w.imag == 0 else None, log_pref)
        raise ValueError(f"unknown form {f!r}")

    if form != "auto":
        return via(form)
    first = "2a" if abs(w) < abs(x) else "2"
    try:
        v = via(first)
    except (DomainError, NonConvergenceError):
        return via("2" if first == "2a" else "2a")
    if v.degraded or v.abs_error > FORM_FALLBACK_REL * abs(v.value):
        # cancellation inside the preferred form (e.g. a terminating series near its zero)
        alt = via("2" if first == "2a" else "2a")
        if alt.abs_error < v.abs_error:
            return alt
    return v


def q_second_kind(idx: IndexLike, arg: ArgLike, side=None) -> FnValue:
    """Q^j_{mu nu}(z); pole flag when j+mu+1 or j-nu+1 is a nonpositive integer."""
    idx = as_index(idx)
    arg = as_argument(arg, side)
    arg.check()
    if q_pole_order(idx):
        return FnValue.pole()
    j, mu, nu = idx.j, idx.mu, idx.nu
    z, s = arg.z, arg.side
    x = 2.0 / (1.0 - z)
    lm = branch_log((z - 1.0) / 2.0, _side_of(z - 1.0, s))
    lp = branch_log((z + 1.0) / 2.0, _side_of(z + 1.0, s))
    lg1, lg2 = log_gamma(j + mu + 1.0), log_gamma(j - nu + 1.0)
    log_pref = (I * PI * (mu - nu) + lg1 + lg2 - math.log(2.0)
                - (j + 1.0 + 0.5 * (nu + mu)) * lm + 0.5 * (nu + mu) * lp)
    return _scaled_kernel(j + nu + 1.0, j + mu + 1.0, 2.0 * j + 2.0, x, s if x.imag == 0 else None,
                          log_pref, abs(lg1) + abs(lg2))


def evaluate(kind: str, idx: IndexLike, arg: ArgLike, side=None) -> FnValue:
    kind = kind.upper()
    if kind == "P":
        return p_first_kind(idx, arg, side)
    if kind == "Q":
        return q_second_kind(idx, arg, side)
    raise ValueError(f"kind must be 'P' or 'Q', got {kind!r}")


def p_tilde(idx: IndexLike, x: float, from_below: bool = False) -> FnValue:
    """P~^j_{mu nu}(x) on (-1, 1), the phase-adjusted boundary value of P."""
    idx = as_index(idx)
    x = float(x)
    if not -1.0 < x < 1.0:
        raise DomainError("P~ is defined for -1 < x < 1")
    if from_below:
        v = p_first_kind(idx, Argument(x, Side.BELOW))
        ph = cmath.exp(-I * PI * (idx.mu - idx.nu) / 2.0)
    else:
        v = p_first_kind(idx, Argument(x, Side.ABOVE))
        ph = cmath.exp(I * PI * (idx.mu - idx.nu) / 2.0)
    return FnValue(v.value * ph, v.abs_error * abs(ph) * (1 + 4 * EPS), v.flags)


def derivative(kind: str, idx: IndexLike, arg: ArgLike, side=None) -> FnValue:
    """d/dz of P or Q using the lowering relation for nu (first derivative form)."""
    idx = as_index(idx)
    arg = as_argument(arg, side)
    f = evaluate(kind, idx, arg)
    g = evaluate(kind, idx.replace(nu=idx.nu - 1.0), arg)
    if f.is_pole or g.is_pole:
        return FnValue.pole()
    z, s = arg.z, arg.side
    p, q = 0.5 * (idx.nu - idx.mu), 0.5 * (idx.nu + idx.mu)
    root = branch_power(z - 1.0, -0.5, _side_of(z - 1.0, s)) * branch_power(z + 1.0, -0.5, _side_of(z + 1.0, s))
    k = p / (z - 1.0) + q / (z + 1.0)
    value = root * g.value - k * f.value
    err = abs(root) * g.abs_error + abs(k) * f.abs_error + EPS * (abs(root * g.value) + abs(k * f.value))
    return FnValue(value, err, (f.flags | g.flags) - {Flag.IDENTICALLY_ZERO})


# ------------------------------------------------------------- identities


def _swap_ratio(idx: IndexTriple) -> FnValue:
    """Gamma(j+mu+1) Gamma(j-nu+1) / (Gamma(j-mu+1) Gamma(j+nu+1))."""
    j, mu, nu = idx.j, idx.mu, idx.nu
    return gamma_ratio([j + mu + 1, j - nu + 1], [j - mu + 1, j + nu + 1])


def apply_index_symmetry(rule: str, idx: IndexLike, arg: ArgLike, side=None, kind: str = "P") -> FnValue:
    """Right-hand side of an index symmetry, evaluated from the transformed indices.

    reflect-j:    P^{-j-1}_{mu nu}
    swap-q:       e^{2 i pi (mu-nu)} R Q^j_{nu mu}, R the four-gamma ratio
    negate-both:  f^j_{-nu,-mu} for f = P or Q
    """
    idx = as_index(idx)
    arg = as_argument(arg, side)
    j, mu, nu = idx.j, idx.mu, idx.nu
    if rule == "reflect-j":
        return p_first_kind(idx.replace(j=-j - 1.0), arg)
    if rule == "negate-both":
        return evaluate(kind, IndexTriple(j, -nu, -mu), arg)
    if rule == "swap-q":
        r = _swap_ratio(idx)
        q = q_second_kind(IndexTriple(j, nu, mu), arg)
        if r.is_pole or q.is_pole:
            return FnValue.pole()
        ph = cmath.exp(2 * I * PI * (mu - nu))
        value = ph * r.value * q.value
        err = abs(ph) * (abs(r.value) * q.abs_error + r.abs_error * abs(q.value))
        return FnValue(value, err, (q.flags | r.flags) - {Flag.IDENTICALLY_ZERO})
    raise ValueError(f"unknown symmetry rule {rule!r}")


def symmetry_residual(rule: str, idx: IndexLike, arg: ArgLike, side=None, kind: str = "P") -> Residual:
    idx = as_index(idx)
    arg = as_argument(arg, side)
    lhs_kind = "Q" if rule == "swap-q" else ("P" if rule == "reflect-j" else kind)
    lhs = evaluate(lhs_kind, idx, arg)
    rhs = apply_index_symmetry(rule, idx, arg, kind=kind)
    return _residual(lhs, rhs, [lhs, rhs])


def _residual(lhs: FnValue, rhs: FnValue, terms, extra_err: float = 0.0) -> Residual:
    flags = frozenset((lhs.flags | rhs.flags) - {Flag.IDENTICALLY_ZERO})
    for t in terms:
        if isinstance(t, FnValue) and t.is_pole:
            flags = flags | {Flag.POLE}
    if Flag.POLE in flags:
        return Residual(0j, 0j, 0.0, 0.0, flags)
    return Residual(lhs.value, rhs.value, term_scale(*terms), lhs.abs_error + rhs.abs_error + extra_err, flags)


def _fv(value: complex, err: float = 0.0, flags=frozenset()) -> FnValue:
    return FnValue(value, err, flags)


def connection_qpp(idx: IndexLike, arg: ArgLike, side=None) -> Residual:
    """(2/pi) e^{-i pi (mu-nu)} sin pi(mu-nu) Q = P_{mu nu} - R P_{nu mu}."""
    idx = as_index(idx)
    arg = as_argument(arg, side)
    j, mu, nu = idx.j, idx.mu, idx.nu
    sn = sin_pi(mu - nu)
    p1 = p_first_kind(idx, arg)
    p2 = p_first_kind(IndexTriple(j, nu, mu), arg)
    r = _swap_ratio(idx)
    if sn == 0:
        lhs = _fv(0j)
    else:
        q = q_second_kind(idx, arg)
        if q.is_pole:
            return _residual(q, q, [q])
        k = 2.0 / PI * cmath.exp(-I * PI * (mu - nu)) * sn
        lhs = _fv(k * q.value, abs(k) * q.abs_error, q.flags)
    if r.is_pole:
        return _residual(r, r, [r])
    t2 = r.value * p2.value
    rhs = _fv(p1.value - t2, p1.abs_error + abs(r.value) * p2.abs_error + r.abs_error * abs(p2.value))
    return _residual(lhs, rhs, [lhs, p1, t2])


def connection_qq_difference(idx: IndexLike, arg: ArgLike, side=None) -> Residual:
    """Q^j - Q^{-j-1} = (pi/2) e^{i pi (mu-nu)} sin 2 pi j / (sin pi(j-mu) sin pi(j+nu)) R P^j_{nu mu}."""
    idx = as_index(idx)
    arg = as_argument(arg, side)
    j, mu, nu = idx.j, idx.mu, idx.nu
    q1 = q_second_kind(idx, arg)
    q2 = q_second_kind(idx.replace(j=-j - 1.0), arg)
    den = sin_pi(j - mu) * sin_pi(j + nu)
    s2 = sin_pi(2 * j)
    r = _swap_ratio(idx)
    if q1.is_pole or q2.is_pole or r.is_pole or (den == 0 and s2 != 0):
        return Residual(0j, 0j, 0.0, 0.0, frozenset({Flag.POLE}))
    lhs = _fv(q1.value - q2.value, q1.abs_error + q2.abs_error)
    if s2 == 0:
        rhs = _fv(0j)
    else:
        p = p_first_kind(IndexTriple(j, nu, mu), arg)
        k = PI / 2 * cmath.exp(I * PI * (mu - nu)) * s2 / den * r.value
        rhs = _fv(k * p.value, abs(k) * p.abs_error + abs(p.value) * abs(k) * (r.abs_error / max(abs(r.value), 1e-300) + 8 * EPS))
    return _residual(lhs, rhs, [q1, q2, rhs])


def _carried_error(term: complex, source: FnValue) -> float:
    """Error of ``term`` = (exact factor) * source, plus a rounding allowance."""
    rel = source.abs_error / abs(source.value) if source.value else 0.0
    return abs(term) * (rel + 8 * EPS)


def _reflection_sign(z: complex, side: Side) -> int:
    if z.imag != 0.0:
        return 1 if z.imag > 0 else -1
    if side == Side.OFF_AXIS:
        raise BranchAmbiguityError("reflection z -> -z on the real axis needs a side")
    return int(side)


def reflect_argument(kind: str, idx: IndexLike, arg: ArgLike, side=None) -> Residual:
    """Residual of the z -> -z relations; upper signs for Im z > 0 (or side above)."""
    idx = as_index(idx)
    if isinstance(arg, Argument):
        z, s_in = arg.z, (arg.side if side is None else Side.parse(side))
    else:
        z, s_in = complex(arg), Side.parse(side)
    s = _reflection_sign(z, s_in)
    arg = Argument(z, Side(s))
    marg = Argument(-z, Side(-s))
    j, mu, nu = idx.j, idx.mu, idx.nu
    if kind == "q":
        lhs = q_second_kind(idx, arg)
        q1 = q_second_kind(IndexTriple(j, mu, -nu), marg)
        q2 = q_second_kind(IndexTriple(j, -mu, nu), marg)
        r1 = gamma_ratio([j - nu + 1], [j + nu + 1])
        r2 = gamma_ratio([j + mu + 1], [j - mu + 1])
        if any(v.is_pole for v in (lhs, q1, q2, r1, r2)):
            return Residual(0j, 0j, 0.0, 0.0, frozenset({Flag.POLE}))
        e = cmath.exp(-s * I * (j + 1) * PI)
        a = e * cmath.exp(-2 * I * PI * nu) * r1.value * q1.value
        b = e * cmath.exp(2 * I * PI * mu) * r2.value * q2.value
        # both displayed right-hand sides must equal Q(z); report the worse one
        ra = _residual(lhs, _fv(a, _carried_error(a, q1)), [lhs, a])
        rb = _residual(lhs, _fv(b, _carried_error(b, q2)), [lhs, b])
        return ra if ra.relative >= rb.relative else rb
    if kind == "p-mu":
        p = p_first_kind(idx, arg)
        g = gamma_ratio([j + nu + 1], [j - nu + 1])
        pm = p_first_kind(IndexTriple(j, mu, -nu), marg)
        q = q_second_kind(IndexTriple(j, mu, -nu), marg)
        sq = sin_pi(j + mu)
        if g.is_pole or (q.is_pole and sq != 0):
            return Residual(0j, 0j, 0.0, 0.0, frozenset({Flag.POLE}))
        lhs = _fv(g.value * p.value, abs(g.value) * p.abs_error + g.abs_error * abs(p.value))
        t1 = cmath.exp(s * I * PI * j) * pm.value
        t2 = 0j if sq == 0 else 2 / PI * cmath.exp(s * I * PI * nu) * cmath.exp(-I * PI * (mu + nu)) * sq * q.value
        qerr = 0.0 if sq == 0 else abs(t2) * q.abs_error / max(abs(q.value), 1e-300)
        rhs = _fv(t1 - t2, abs(t1) * pm.abs_error / max(abs(pm.value), 1e-300) + qerr)
        return _residual(lhs, rhs, [lhs, t1, t2])
    if kind == "p-nu":
        p = p_first_kind(idx, arg)
        g = gamma_ratio([j - mu + 1], [j + mu + 1])
        pm = p_first_kind(IndexTriple(j, -mu, nu), marg)
        q = q_second_kind(IndexTriple(j, -mu, nu), marg)
        sq = sin_pi(j - nu)
        if g.is_pole or (q.is_pole and sq != 0):
            return Residual(0j, 0j, 0.0, 0.0, frozenset({Flag.POLE}))
        lhs = _fv(g.value * p.value, abs(g.value) * p.abs_error + g.abs_error * abs(p.value))
        t1 = cmath.exp(s * I * PI * j) * pm.value
        t2 = 0j if sq == 0 else 2 / PI * cmath.exp(-s * I * PI * mu) * cmath.exp(I * PI * (mu + nu)) * sq * q.value
        qerr = 0.0 if sq == 0 else abs(t2) * q.abs_error / max(abs(q.value), 1e-300)
        rhs = _fv(t1 - t2, abs(t1) * pm.abs_error / max(abs(pm.value), 1e-300) + qerr)
        return _residual(lhs, rhs, [lhs, t1, t2])
    if kind == "p-pair":
        p = p_first_kind(idx, arg)
        lhs_v = sin_pi(mu + nu) / PI * p.value
        lhs = _fv(lhs_v, abs(sin_pi(mu + nu) / PI) * p.abs_error)
        pa = p_first_kind(IndexTriple(j, mu, -nu), marg)
        pb = p_first_kind(IndexTriple(j, -mu, nu), marg)
        ga = gamma_ratio([], [j + nu + 1, -j + nu])
        gb = gamma_ratio([], [j - mu + 1, -j - mu])
        t1 = cmath.exp(-s * I * PI * mu) * ga.value * pa.value
        t2 = cmath.exp(s * I * PI * nu) * gb.value * pb.value
        rhs = _fv(t1 - t2, abs(ga.value) * pa.abs_error + abs(gb.value) * pb.abs_error + EPS * (abs(t1) + abs(t2)) * 8)
        return _residual(lhs, rhs, [lhs, t1, t2])
    raise ValueError(f"unknown reflection kind {kind!r}")


DISCONTINUITY_KINDS = ("q-left", "p-left", "p-right", "q-right")


def discontinuity(kind: str, idx: IndexLike, x: float) -> FnValue:
    """Closed-form jump across a cut.

    q-left, p-left (x < -1):  (f(x+i0) - f(x-i0)) / 2i
    p-right (-1 < x < 1):     (P(x+i0) - P(x-i0)) / 2i
    q-right (-1 < x < 1):     (e^{i pi (nu-mu)/2} Q(x+i0) - e^{-i pi (nu-mu)/2} Q(x-i0)) / 2i
    """
    idx = as_index(idx)
    x = float(x)
    j, mu, nu = idx.j, idx.mu, idx.nu
    if kind in ("q-left", "p-left"):
        if not x < -1.0:
            raise DomainError("left-cut discontinuities need x < -1")
        r = gamma_ratio([j - nu + 1], [j + nu + 1])
        q = q_second_kind(IndexTriple(j, mu, -nu), Argument(-x))
        if r.is_pole:
            return FnValue.pole()
        if kind == "q-left":
            if q.is_pole:
                return FnValue.pole()
            k = cmath.exp(-2 * I * PI * nu) * sin_pi(j) * r.value
            return FnValue(k * q.value, abs(k) * q.abs_error + abs(k * q.value) * 8 * EPS, q.flags - {Flag.IDENTICALLY_ZERO})
        p = p_first_kind(IndexTriple(j, mu, -nu), Argument(-x))
        sq = sin_pi(nu) * sin_pi(j + mu)
        t1 = sin_pi(j) * p.value
        if sq == 0:
            t2, e2 = 0j, 0.0
        else:
            if q.is_pole:
                return FnValue.pole()
            t2 = 2 / PI * cmath.exp(-I * PI * (mu + nu)) * sq * q.value
            e2 = abs(t2) * q.abs_error / max(abs(q.value), 1e-300)
        v = r.value * (t1 - t2)
        err = abs(r.value) * (abs(sin_pi(j)) * p.abs_error + e2) + abs(v) * 8 * EPS
        return FnValue(v, err)
    if kind in ("p-right", "q-right"):
        if not -1.0 < x < 1.0:
            raise DomainError("right-cut discontinuities need -1 < x < 1")
        pt = p_tilde(idx, x)
        if kind == "p-right":
            k = sin_pi((nu - mu) / 2)
        else:
            k = -PI / 2 * cmath.exp(-I * PI * (nu - mu))
        return FnValue(k * pt.value, abs(k) * pt.abs_error, pt.flags - {Flag.IDENTICALLY_ZERO})
    raise ValueError(f"unknown discontinuity kind {kind!r}")


def _one_sided_terms(kind: str, idx: IndexTriple, x: float, eps: float):
    f = q_second_kind if kind.startswith("q") else p_first_kind

    def at(sign: int) -> FnValue:
        if eps > 0:
            return f(idx, Argument(complex(x, sign * eps)))
        return f(idx, Argument(complex(x), Side(sign)))

    up, down = at(1), at(-1)
    if up.is_pole or down.is_pole:
        return None
    if kind == "q-right":
        ph = cmath.exp(I * PI * (idx.nu - idx.mu) / 2)
        return ph * up.value, down.value / ph, abs(ph) * up.abs_error + down.abs_error / abs(ph)
    return up.value, down.value, up.abs_error + down.abs_error


def one_sided_difference(kind: str, idx: IndexLike, x: float, eps: float = 0.0) -> FnValue:
    """The jump computed from the two boundary values (exact sides, or x +- i eps when eps > 0)."""
    terms = _one_sided_terms(kind, as_index(idx), x, eps)
    if terms is None:
        return FnValue.pole()
    a, b, err = terms
    return FnValue((a - b) / (2j), err / 2)


def discontinuity_residual(kind: str, idx: IndexLike, x: float, eps: float = 0.0) -> Residual:
    """Closed-form jump against the difference of boundary values.

    The scale includes the two boundary values themselves: near x +- i eps
    their difference cancels when the jump is small next to the function.
    """
    idx = as_index(idx)
    closed = discontinuity(kind, idx, x)
    terms = _one_sided_terms(kind, idx, x, eps)
    if closed.is_pole or terms is None:
        return Residual(0j, 0j, 0.0, 0.0, frozenset({Flag.POLE}))
    a, b, err = terms
    diff = (a - b) / (2j)
    return Residual(closed.value, diff, term_scale(closed.value, diff, a / 2, b / 2), closed.abs_error + err / 2,
                    closed.flags - {Flag.IDENTICALLY_ZERO})


def wronskian_closed_form(pair: str, idx: IndexLike, arg: ArgLike, side=None) -> FnValue:
    """W[f, g] = f g' - f' g for (P_{mu nu}, P_{nu mu}) or (Q^j_{mu nu}, Q^{-j-1}_{nu mu})."""
    idx = as_index(idx)
    arg = as_argument(arg, side)
    j, mu, nu = idx.j, idx.mu, idx.nu
    d = 1.0 - arg.z * arg.z
    if pair == "P-P":
        v = 2 / PI * sin_pi(nu - mu) / d
        return FnValue(v, abs(v) * 4 * EPS)
    if pair == "Q-Q":
        den = sin_pi(j + mu) * sin_pi(j - nu)
        num = sin_pi(2 * j)
        if den == 0:
            return FnValue.pole()
        v = PI / 2 * num / den / d
        return FnValue(v, abs(v) * 8 * EPS)
    raise ValueError(f"unknown pair {pair!r}")


def wronskian_numeric(pair: str, idx: IndexLike, arg: ArgLike, h: float = 1e-5, side=None) -> FnValue:
    """Wronskian from central differences (one Richardson step)."""
    idx = as_index(idx)
    arg = as_argument(arg, side)
    if pair == "P-P":
        f = lambda w: p_first_kind(idx, Argument(w, arg.side)).value  # noqa: E731
        g = lambda w: p_first_kind(IndexTriple(idx.j, idx.nu, idx.mu), Argument(w, arg.side)).value  # noqa: E731
    elif pair == "Q-Q":
        f = lambda w: q_second_kind(idx, Argument(w, arg.side)).value  # noqa: E731
        g = lambda w: q_second_kind(IndexTriple(-idx.j - 1, idx.nu, idx.mu), Argument(w, arg.side)).value  # noqa: E731
    else:
        raise ValueError(f"unknown pair {pair!r}")
    z = arg.z
    df = central_difference(f, z, h)
    dg = central_difference(g, z, h)
    fz, gz = f(z), g(z)
    v = fz * dg - df * gz
    return FnValue(v, 1e-9 * (abs(fz * dg) + abs(df * gz)))


def central_difference(f, z: complex, h: float, order: int = 1) -> complex:
    """Central difference of order 1 or 2 with one Richardson extrapolation.

    ``h`` is the finest step; the coarse estimate uses 2h, which keeps rounding
    noise in the second difference four times smaller than halving would.
    """
    if order == 1:
        d = lambda s: (f(z + s) - f(z - s)) / (2 * s)  # noqa: E731
    elif order == 2:
        fz = f(z)
        d = lambda s: (f(z + s) - 2 * fz + f(z - s)) / (s * s)  # noqa: E731
    else:
        raise ValueError("order must be 1 or 2")
    return (4 * d(h) - d(2 * h)) / 3


def ode_residual(kind: str, idx: IndexLike, arg: ArgLike, h: float = 1e-3, side=None) -> Residual:
    """(1-z^2) y'' - 2 z y' + [j(j+1) - (mu^2 - 2 mu nu z + nu^2)/(1-z^2)] y with finite-difference derivatives.

    With values good to about 1e-14 relative, the second difference carries
    noise near 1e-14/h^2; at h = 1e-4 that alone reaches 1e-5 of the scale,
    so the default step is 1e-3 (truncation after extrapolation stays below).
    """
    idx = as_index(idx)
    arg = as_argument(arg, side)
    f = lambda w: evaluate(kind, idx, Argument(w, arg.side)).value  # noqa: E731
    y0 = evaluate(kind, idx, arg)
    if y0.is_pole:
        return Residual(0j, 0j, 0.0, 0.0, frozenset({Flag.POLE}))
    z = arg.z
    j, mu, nu = idx.j, idx.mu, idx.nu
    y = y0.value
    d1 = central_difference(f, z, h, 1)
    d2 = central_difference(f, z, h, 2)
    w = 1.0 - z * z
    terms = [w * d2, -2 * z * d1, j * (j + 1) * y, -(mu * mu - 2 * mu * nu * z + nu * nu) / w * y]
    return Residual(sum(terms), 0j, term_scale(*terms), 0.0, y0.flags - {Flag.IDENTICALLY_ZERO})


def reduce_to_associated_legendre(kind: str, j: complex, mu: complex, arg: ArgLike, side=None) -> FnValue:
    """P^j_{mu 0} or Q^j_{mu 0}, which are the associated Legendre functions P^mu_j, Q^mu_j."""
    return evaluate(kind, IndexTriple(j, mu, 0), as_argument(arg, side))


def reduce_to_jacobi(idx: IndexLike, arg: ArgLike, jacobi_value: complex, side=None) -> FnValue:
    """P^j_{mu nu} rebuilt from a Jacobi polynomial value P^{(nu-mu, nu+mu)}_{j-nu}(z) and the prefactors."""
    idx = as_index(idx)
    arg = as_argument(arg, side)
    j, mu, nu = idx.j, idx.mu, idx.nu
    g = gamma_ratio([j - nu + 1], [j - mu + 1])
    if g.is_pole:
        return g
    z, s = arg.z, arg.side
    pref = (branch_power((z - 1) / 2, (nu - mu) / 2, _side_of(z - 1, s))
            * branch_power((z + 1) / 2, (nu + mu) / 2, _side_of(z + 1, s)))
    v = g.value * pref * jacobi_value
    return FnValue(v, abs(v) * 16 * EPS + abs(pref * jacobi_value) * g.abs_error)
