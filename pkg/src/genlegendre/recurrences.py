"""Linear relations between generalized Legendre functions with shifted indices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .foundations import EPS, POLE_TOL, branch_power, gamma_ratio
from .legendre import Argument, IndexTriple, _side_of, as_argument, as_index, evaluate
from .types import DegenerateCoefficientError, DomainError, Flag, FnValue, Residual, term_scale

HALF = 0.5

RULE_IDS = (
    "half-step-mp",
    "half-step-pm",
    "half-step-pp",
    "half-step-mm",
    "full-step-z",
    "deriv-down",
    "deriv-up",
)


@dataclass(frozen=True)
class RecurrenceRule:
    id: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.id not in RULE_IDS:
            raise ValueError(f"unknown recurrence rule {self.id!r}")
        if self.id.startswith("deriv"):
            if self.n is None or int(self.n) != self.n or self.n < 1:
                raise ValueError("derivative rules need an integer order n >= 1")
        elif self.n is not None:
            raise ValueError(f"rule {self.id} takes no order")


def _pole_residual() -> Residual:
    return Residual(0j, 0j, 0.0, 0.0, frozenset({Flag.POLE}))


def _half_roots(arg: Argument) -> tuple[complex, complex]:
    z, s = arg.z, arg.side
    sm = branch_power((z - 1.0) / 2.0, 0.5, _side_of(z - 1.0, s))
    sp = branch_power((z + 1.0) / 2.0, 0.5, _side_of(z + 1.0, s))
    return sm, sp


def fd_derivative(f, z: complex, n: int, h0: float, levels: int = 10, shrink: float = 1.4) -> tuple[complex, float]:
    """n-th derivative from a symmetric stencil, extrapolated over shrinking steps (Ridders' scheme).

    Every tableau entry gets an error estimate from its two neighbours; the
    entry with the smallest estimate is returned along with that estimate.
    Refinement stops once the diagonal drifts by more than twice the best
    estimate, which is where rounding noise starts to win over truncation.
    """
    def stencil(h: float) -> complex:
        total = 0j
        for k in range(n + 1):
            total += (-1) ** k * math.comb(n, k) * f(z + (n / 2.0 - k) * h)
        return total / h ** n

    prev = [stencil(h0)]
    best, best_err = prev[0], math.inf
    for i in range(1, levels):
        row = [stencil(h0 / shrink ** i)]
        for k in range(1, i + 1):
            fac = shrink ** (2 * k)
            row.append((fac * row[k - 1] - prev[k - 1]) / (fac - 1.0))
            err = max(abs(row[k] - row[k - 1]), abs(row[k] - prev[k - 1]))
            if err <= best_err:
                best, best_err = row[k], err
        if abs(row[i] - prev[i - 1]) >= 2.0 * best_err:
            break
        prev = row
    return best, best_err


def singular_distance(arg: Argument) -> float:
    """Distance from z to the nearest branch point or cut (cuts lie on the real axis left of 1)."""
    z = arg.z
    d = min(abs(z - 1.0), abs(z + 1.0))
    if z.real < 1.0:
        d = min(d, abs(z.imag)) if z.imag != 0.0 else d
    return d


def adaptive_fd_derivative(f, arg: Argument, n: int) -> tuple[complex, float]:
    """Ridders extrapolation from two starting steps inside the disc of analyticity; the steadier result wins."""
    if arg.z.imag == 0.0 and arg.z.real < 1.0:
        raise DomainError("finite-difference rules need z off the cuts")
    base = min(singular_distance(arg), 1.0)
    runs = [fd_derivative(f, arg.z, n, frac * base / n) for frac in (0.8, 0.4)]
    return min(runs, key=lambda r: r[1])


def _deriv_residual(rule: RecurrenceRule, kind: str, idx: IndexTriple, arg: Argument) -> Residual:
    j, mu, nu, n = idx.j, idx.mu, idx.nu, rule.n
    z, s = arg.z, arg.side
    up = rule.id == "deriv-up"
    sgn = -1.0 if up else 1.0
    p, q = sgn * (nu - mu) / 2.0, sgn * (nu + mu) / 2.0

    def weighted(w: complex) -> complex:
        a = Argument(w, s)
        v = evaluate(kind, idx, a).value
        return branch_power(w - 1.0, p, _side_of(w - 1.0, s)) * branch_power(w + 1.0, q, _side_of(w + 1.0, s)) * v

    base = evaluate(kind, idx, arg)
    shifted = evaluate(kind, idx.replace(nu=nu + n if up else nu - n), arg)
    if base.is_pole or shifted.is_pole:
        return _pole_residual()
    lhs, indicator = adaptive_fd_derivative(weighted, arg, n)
    pm = branch_power(z - 1.0, p - n / 2.0, _side_of(z - 1.0, s))
    pp = branch_power(z + 1.0, q - n / 2.0, _side_of(z + 1.0, s))
    rhs = pm * pp * shifted.value
    if up:
        g1 = gamma_ratio([j + nu + 1], [j - nu + 1])
        g2 = gamma_ratio([j + nu + n + 1], [j - nu - n + 1])
        if g1.is_pole or g2.is_pole:
            return _pole_residual()
        lhs, rhs = g1.value * lhs, g2.value * rhs
        indicator *= abs(g1.value)
    flags = frozenset((base.flags | shifted.flags) - {Flag.IDENTICALLY_ZERO})
    return Residual(lhs, rhs, term_scale(lhs, rhs), indicator, flags)


def recurrence_residual(rule: RecurrenceRule | str, kind: str, idx, arg, side=None) -> Residual:
    """LHS and RHS of the named relation for f = P or Q (both satisfy all seven)."""
    if isinstance(rule, str):
        rule = RecurrenceRule(rule)
    idx = as_index(idx)
    arg = as_argument(arg, side)
    arg.check()
    if rule.id.startswith("deriv"):
        return _deriv_residual(rule, kind, idx, arg)
    j, mu, nu = idx.j, idx.mu, idx.nu
    z = arg.z
    h = HALF

    def f(dj=0.0, dmu=0.0, dnu=0.0) -> FnValue:
        return evaluate(kind, IndexTriple(j + dj, mu + dmu, nu + dnu), arg)

    sm, sp = _half_roots(arg)
    k = 2 * j + 1
    if rule.id == "full-step-z":
        f0, fp, fm = f(), f(1.0), f(-1.0)
        vals = [f0, fp, fm]
        if any(v.is_pole for v in vals):
            return _pole_residual()
        lhs_terms = [j * (j + 1) * k * z * f0.value]
        rhs_terms = [j * (j + nu + 1) * (j - mu + 1) * fp.value, nu * mu * k * f0.value,
                     (j + 1) * (j + mu) * (j - nu) * fm.value]
    else:
        fp, fm = f(h), f(-h)
        if rule.id == "half-step-mp":
            c = f(0, -h, h)
            lhs_terms = [k * sm * c.value]
            rhs_terms = [fp.value, -fm.value]
        elif rule.id == "half-step-pm":
            c = f(0, h, -h)
            lhs_terms = [k * sm * c.value]
            rhs_terms = [(j + nu + h) * (j - mu + h) * fp.value, -(j - nu + h) * (j + mu + h) * fm.value]
        elif rule.id == "half-step-pp":
            c = f(0, h, h)
            lhs_terms = [k * sp * c.value]
            rhs_terms = [(j - mu + h) * fp.value, (j + mu + h) * fm.value]
        else:
            c = f(0, -h, -h)
            lhs_terms = [k * sp * c.value]
            rhs_terms = [(j + nu + h) * fp.value, (j - nu + h) * fm.value]
        vals = [c, fp, fm]
        if any(v.is_pole for v in vals):
            return _pole_residual()
    terms = lhs_terms + rhs_terms
    err = sum(v.abs_error for v in vals) * max(1.0, max(abs(t) for t in terms) / max(max(abs(v.value) for v in vals), 1e-300))
    flags = frozenset(set().union(*(v.flags for v in vals)) - {Flag.IDENTICALLY_ZERO})
    return Residual(sum(lhs_terms), sum(rhs_terms), term_scale(*terms), err, flags)


def iterated_half_step_residual(kind: str, idx, arg, side=None) -> Residual:
    """Raise (mu, nu) by 1/2 with the (+,+) rule, then lower back with the (-,-) rule.

    The round trip rebuilds f^j_{mu nu} from f^{j-1}, f^j, f^{j+1} at the same (mu, nu).
    """
    idx = as_index(idx)
    arg = as_argument(arg, side)
    arg.check()
    j, mu, nu = idx.j, idx.mu, idx.nu
    h = HALF
    if min(abs(2 * j), abs(2 * j + 1), abs(2 * j + 2)) <= POLE_TOL:
        raise DegenerateCoefficientError(f"the half-step round trip divides by zero at j = {j}")
    _, sp = _half_roots(arg)
    f = {dj: evaluate(kind, idx.replace(j=j + dj), arg) for dj in (-1.0, 0.0, 1.0)}
    if any(v.is_pole for v in f.values()):
        return _pole_residual()

    def raised(jj: complex, hi: FnValue, lo: FnValue) -> complex:
        # (+,+) rule at order jj: f(jj, mu+1/2, nu+1/2)
        return ((jj - mu + h) * hi.value + (jj + mu + h) * lo.value) / ((2 * jj + 1) * sp)

    a_up = raised(j + h, f[1.0], f[0.0])
    a_dn = raised(j - h, f[0.0], f[-1.0])
    nu2 = nu + h
    rebuilt = ((j + nu2 + h) * a_up + (j - nu2 + h) * a_dn) / ((2 * j + 1) * sp)
    direct = f[0.0]
    err = sum(v.abs_error for v in f.values()) * 8
    return Residual(direct.value, rebuilt, term_scale(direct.value, rebuilt, a_up, a_dn), err,
                    frozenset(direct.flags - {Flag.IDENTICALLY_ZERO}))


def step_j(kind: str, idx, arg, f_j: FnValue, f_jm1: FnValue, side=None) -> FnValue:
    """f^{j+1}_{mu nu} from f^j and f^{j-1} via the three-term relation in j."""
    idx = as_index(idx)
    arg = as_argument(arg, side)
    j, mu, nu = idx.j, idx.mu, idx.nu
    z = arg.z
    k = 2 * j + 1
    outer = j * (j + 1) * k
    lead = j * (j + nu + 1) * (j - mu + 1)
    if abs(outer) <= POLE_TOL or abs(lead) <= POLE_TOL:
        raise DegenerateCoefficientError(f"three-term relation degenerates at j = {j}")
    t0 = (outer * z - nu * mu * k) * f_j.value
    t1 = (j + 1) * (j + mu) * (j - nu) * f_jm1.value
    value = (t0 - t1) / lead
    cond = (abs(t0) + abs(t1)) / abs(lead)
    err = (abs(outer * z - nu * mu * k) * f_j.abs_error + abs((j + 1) * (j + mu) * (j - nu)) * f_jm1.abs_error) / abs(lead)
    err += 4 * EPS * cond
    return FnValue(value, err, frozenset((f_j.flags | f_jm1.flags) & {Flag.DEGRADED}))
