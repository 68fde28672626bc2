"""Limit and large-parameter forms compared against direct evaluation."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .foundations import EPS, branch_power, gamma_ratio, reciprocal_gamma
from .hypergeometric import bessel_j, kummer_phi_regularized
from .legendre import Argument, IndexTriple, p_first_kind, q_second_kind
from .types import DomainError, FnValue

PI = math.pi


@dataclass(frozen=True)
class AsymptoticParams:
    """Scaling parameters of the limit forms; ``t`` is (nu+mu)^2/4 - j(j+1) in the Bessel/Kummer limits."""

    t: complex = 0j
    a: complex = 0j
    b: complex = 1.0 + 0j
    alpha: complex = 0j
    y: complex = 0j
    x_scaled: complex = 0j


@dataclass(frozen=True)
class AsymptoticComparison:
    value: FnValue
    target: FnValue

    @property
    def ratio(self) -> complex:
        return self.value.value / self.target.value

    @property
    def ratio_error(self) -> float:
        return abs(self.ratio - 1.0)

    @property
    def abs_diff(self) -> float:
        return abs(self.value.value - self.target.value)


def degree_from_t(s: complex, t: complex) -> complex:
    """j with j(j+1) = s^2/4 - t (the root with Re(j+1/2) >= 0)."""
    return -0.5 + cmath.sqrt(0.25 + s * s / 4.0 - t)


def limit_bessel(mu: complex, nu: complex, t: complex, y: complex) -> AsymptoticComparison:
    """t^{(nu-mu)/2} P^j_{mu nu}(cosh(y/sqrt t)) against J_{nu-mu}(y), j fixed by t."""
    t = complex(t)
    if t == 0:
        raise DomainError("t must be nonzero")
    j = degree_from_t(mu + nu, t)
    k = nu - mu
    z = cmath.cosh(complex(y) / cmath.sqrt(t))
    if z == 1:
        raise DomainError("y/sqrt(t) too small to separate z from 1 in double precision")
    p = p_first_kind(IndexTriple(j, mu, nu), Argument(z))
    scale = branch_power(t, k / 2.0)
    value = FnValue(scale * p.value, abs(scale) * p.abs_error, p.flags)
    return AsymptoticComparison(value, bessel_j(k, y))


def limit_kummer(a: complex, kappa: complex, t: complex, x_scaled: complex, b: complex = 1.0) -> AsymptoticComparison:
    """t^{kappa/2} P^j_{mu nu}(1 + 2x/t) against the confluent form, with nu + mu = a t, nu - mu = kappa.

    j is fixed by (nu+mu)^2/4 - j(j+1) = b t. For a = 0 the target is the Bessel
    limit b^{-kappa/2} J_kappa(2 sqrt(b x)).
    """
    a, kappa, t, x, b = (complex(v) for v in (a, kappa, t, x_scaled, b))
    if t == 0:
        raise DomainError("t must be nonzero")
    s = a * t
    mu, nu = (s - kappa) / 2.0, (s + kappa) / 2.0
    j = degree_from_t(s, b * t)
    p = p_first_kind(IndexTriple(j, mu, nu), Argument(1.0 + 2.0 * x / t))
    scale = branch_power(t, kappa / 2.0)
    value = FnValue(scale * p.value, abs(scale) * p.abs_error, p.flags)
    if a == 0:
        jb = bessel_j(kappa, 2.0 * cmath.sqrt(b * x))
        pre = branch_power(b, -kappa / 2.0)
        target = FnValue(pre * jb.value, abs(pre) * jb.abs_error, jb.flags)
    else:
        phi = kummer_phi_regularized((kappa + 1.0) / 2.0 + b / a, kappa + 1.0, -a * x)
        pre = branch_power(x, kappa / 2.0) * cmath.exp(a * x / 2.0)
        target = FnValue(pre * phi.value, abs(pre) * phi.abs_error, phi.flags)
    return AsymptoticComparison(value, target)


def asym_q_large_j(idx, alpha: complex) -> AsymptoticComparison:
    """Q^j_{mu nu}(cosh alpha) against e^{i pi (mu-nu)} j^{mu-nu-1/2} sqrt(pi/(2 sinh alpha)) e^{-alpha(j+1/2)}."""
    idx = idx if isinstance(idx, IndexTriple) else IndexTriple(*idx)
    j, mu, nu = idx.j, idx.mu, idx.nu
    alpha = complex(alpha)
    q = q_second_kind(idx, Argument(cmath.cosh(alpha)))
    log_t = (1j * PI * (mu - nu) + (mu - nu - 0.5) * cmath.log(j)
             + 0.5 * cmath.log(PI / (2.0 * cmath.sinh(alpha))) - alpha * (j + 0.5))
    target = cmath.exp(log_t)
    return AsymptoticComparison(q, FnValue(target, abs(target) * EPS * (4 + abs(log_t))))


def asym_p_large_numu(idx, alpha: complex) -> AsymptoticComparison:
    """P^j_{mu nu}(cosh alpha) against [2 tanh(alpha/4)]^{nu-mu} / (Gamma(nu-mu+1) sqrt(cosh(alpha/2)))."""
    idx = idx if isinstance(idx, IndexTriple) else IndexTriple(*idx)
    alpha = complex(alpha)
    k = idx.nu - idx.mu
    p = p_first_kind(idx, Argument(cmath.cosh(alpha)))
    target = (branch_power(2.0 * cmath.tanh(alpha / 4.0), k) * reciprocal_gamma(k + 1.0)
              / cmath.sqrt(cmath.cosh(alpha / 2.0)))
    return AsymptoticComparison(p, FnValue(target, abs(target) * EPS * (8 + abs(k))))


def asym_q_fixed_jmu(idx, alpha: complex, branch: str = "j") -> AsymptoticComparison:
    """Q^j or Q^{-j-1} at cosh alpha for j, mu large with j - mu and nu fixed.

    branch 'j':     e^{i pi (mu-nu)} G(j+mu+1)/G(j+nu+1) sqrt(2 pi/(j+mu+1)) tanh(a/2)^nu tanh(a)^-mu (2 cosh a)^-(j+1)
    branch '-j-1':  e^{i pi (mu-nu)} G(-j+mu)/G(-j+nu) sqrt(2 pi/(-j-mu)) tanh(a/2)^-nu tanh(a)^mu (2 cosh a)^j
    """
    idx = idx if isinstance(idx, IndexTriple) else IndexTriple(*idx)
    j, mu, nu = idx.j, idx.mu, idx.nu
    alpha = complex(alpha)
    z = Argument(cmath.cosh(alpha))
    lt2, lt1, l2c = cmath.log(cmath.tanh(alpha / 2.0)), cmath.log(cmath.tanh(alpha)), cmath.log(2.0 * cmath.cosh(alpha))
    if branch == "j":
        q = q_second_kind(idx, z)
        g = gamma_ratio([j + mu + 1], [j + nu + 1])
        log_rest = 0.5 * cmath.log(2 * PI / (j + mu + 1)) + nu * lt2 - mu * lt1 - (j + 1) * l2c
    elif branch == "-j-1":
        q = q_second_kind(idx.replace(j=-j - 1.0), z)
        g = gamma_ratio([-j + mu], [-j + nu])
        log_rest = 0.5 * cmath.log(2 * PI / (-j - mu)) - nu * lt2 + mu * lt1 + j * l2c
    else:
        raise ValueError("branch must be 'j' or '-j-1'")
    if g.is_pole or q.is_pole:
        raise DomainError("asymptotic comparison sits on an index pole")
    log_rest += 1j * PI * (mu - nu)
    target = g.value * cmath.exp(log_rest)
    err = abs(target) * (g.abs_error / max(abs(g.value), 1e-300) + EPS * (8 + abs(log_rest)))
    return AsymptoticComparison(q, FnValue(target, err))
