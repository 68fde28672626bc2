"""Branch-aware complex elementary functions and gamma-function machinery."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .types import BranchAmbiguityError, DomainError, FnValue, PoleError, Side

EPS = 2.220446049250313e-16
POLE_TOL = 1e-10
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)

# Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey).
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_P = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def nearest_integer(z: complex, tol: float = POLE_TOL) -> Optional[int]:
    """The integer within ``tol`` of ``z``, or None."""
    z = complex(z)
    if abs(z.imag) > tol or not math.isfinite(z.real):
        return None
    n = round(z.real)
    if abs(z.real - n) <= tol:
        return int(n)
    return None


def nonpositive_integer(z: complex, tol: float = POLE_TOL) -> Optional[int]:
    """Return n >= 0 when z is within ``tol`` of -n, else None."""
    n = nearest_integer(z, tol)
    if n is not None and n <= 0:
        return -n
    return None


def _sin_pi_exact(z: complex) -> complex:
    """sin(pi z) without snapping: the reduced offset r is exact, so only true integers give 0."""
    z = complex(z)
    n = round(z.real)
    r = z.real - n
    if z.imag == 0.0:
        s = math.sin(math.pi * r)
        return complex(-s if n % 2 else s, 0.0)
    y = math.pi * z.imag
    s = complex(math.sin(math.pi * r) * math.cosh(y), math.cos(math.pi * r) * math.sinh(y))
    return -s if n % 2 else s


def sin_pi(z: complex) -> complex:
    """sin(pi z) with exact zeros at real integers (and within 1e-15 of them)."""
    z = complex(z)
    if z.imag == 0.0 and abs(z.real - round(z.real)) < 1e-15:
        return 0j
    return _sin_pi_exact(z)


def cos_pi(z: complex) -> complex:
    """cos(pi z) with exact zeros at real half-integers."""
    z = complex(z)
    n = round(z.real)
    r = z.real - n
    if z.imag == 0.0:
        h = 0.5 - abs(r)  # exact; cos(pi r) = sin(pi h)
        if abs(h) < 1e-15:
            return 0j
        c = math.sin(math.pi * h)
        return complex(-c if n % 2 else c, 0.0)
    y = math.pi * z.imag
    c = complex(math.cos(math.pi * r) * math.cosh(y), -math.sin(math.pi * r) * math.sinh(y))
    return -c if n % 2 else c


def _lanczos_sum(z: complex) -> complex:
    x = _LANCZOS_P[0]
    for k in range(1, len(_LANCZOS_P)):
        x += _LANCZOS_P[k] / (z + k)
    return x


def _log_gamma_right(z: complex) -> complex:
    """Principal log Gamma for Re z >= 0.5."""
    zm = z - 1.0
    t = zm + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (zm + 0.5) * cmath.log(t) - t + cmath.log(_lanczos_sum(zm))


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z).

    On the negative real axis the value is the limit from above.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and abs(z.real - round(z.real)) < 1e-300:
        raise PoleError(f"log_gamma pole at {z.real}")
    if z.real >= 0.5:
        return _log_gamma_right(z)
    n = math.ceil(0.5 - z.real)
    im = _log_gamma_right(z + n).imag
    for k in range(n):
        w = z + k
        im -= math.atan2(w.imag + 0.0, w.real)
    s = _sin_pi_exact(z)
    if s == 0:
        raise PoleError(f"log_gamma pole at {z}")
    re = _LOG_PI - math.log(abs(s)) - _log_gamma_right(1.0 - z).real
    return complex(re, im)


RGAMMA_ZERO_TOL = 1e-12


def reciprocal_gamma(z: complex) -> complex:
    """1/Gamma(z), an entire function; exactly 0 within RGAMMA_ZERO_TOL of a nonpositive integer."""
    z = complex(z)
    if nonpositive_integer(z, RGAMMA_ZERO_TOL) is not None:
        return 0j
    return _rgamma(z)


def _rgamma(z: complex) -> complex:
    """1/Gamma(z) with zeros only at exact nonpositive integers, for arguments formed inside kernels."""
    if nonpositive_integer(z, 0.0) is not None:
        return 0j
    if z.real >= 0.5:
        return _safe_exp(-_log_gamma_right(z))
    s = _sin_pi_exact(z)
    if s == 0:
        return 0j
    lg = _log_gamma_right(1.0 - z)
    return s / math.pi * _safe_exp(lg)


def gamma(z: complex) -> complex:
    z = complex(z)
    if nonpositive_integer(z, 1e-300) is not None:
        raise PoleError(f"gamma pole at {z}")
    if z.real >= 0.5:
        return _safe_exp(_log_gamma_right(z))
    return math.pi / (_sin_pi_exact(z) * _safe_exp(_log_gamma_right(1.0 - z)))


def _safe_exp(w: complex) -> complex:
    if w.real > 709.0:
        raise OverflowError("gamma-function magnitude overflows double precision")
    if w.real < -745.0:
        return 0j
    return cmath.exp(w)


@dataclass(frozen=True)
class GammaRatioSpec:
    numerator: Sequence[complex] = field(default_factory=tuple)
    denominator: Sequence[complex] = field(default_factory=tuple)


def gamma_ratio(spec: GammaRatioSpec | Sequence[complex] = (), denominator: Sequence[complex] = ()) -> FnValue:
    """prod Gamma(num) / prod Gamma(den) with pairwise pole cancellation.

    Arguments within 1e-10 of a nonpositive integer count as poles. Poles pair
    up in the order given, each pair contributing the ratio of residues (the
    limit with a common perturbation). A leftover numerator pole gives a pole
    flag; a leftover denominator pole gives exact zero.
    """
    if isinstance(spec, GammaRatioSpec):
        num, den = tuple(spec.numerator), tuple(spec.denominator)
    else:
        num, den = tuple(spec), tuple(denominator)
    num_poles, den_poles = [], []
    log_sum = 0j
    budget = 0.0
    for z in num:
        n = nonpositive_integer(z)
        if n is None:
            lg = log_gamma(z)
            log_sum += lg
            budget += abs(lg) + 1.0
        else:
            num_poles.append(n)
    for z in den:
        n = nonpositive_integer(z)
        if n is None:
            lg = log_gamma(z)
            log_sum -= lg
            budget += abs(lg) + 1.0
        else:
            den_poles.append(n)
    if len(num_poles) > len(den_poles):
        return FnValue.pole()
    if len(den_poles) > len(num_poles):
        return FnValue.zero()
    sign = 1
    for n, m in zip(num_poles, den_poles):
        # Res Gamma at -n is (-1)^n / n!
        if (n + m) % 2:
            sign = -sign
        log_sum += math.lgamma(m + 1) - math.lgamma(n + 1)
    if all(complex(z).imag == 0.0 for z in (*num, *den)):
        # real arguments: the imaginary part of the log is a multiple of pi
        k = round(log_sum.imag / math.pi)
        value = complex(sign * (-1) ** (k % 2) * _safe_exp(complex(log_sum.real)).real, 0.0)
    else:
        value = sign * _safe_exp(log_sum)
    return FnValue(value, abs(value) * EPS * (4.0 + budget))


def branch_log(w: complex, side: Side | int | None = None) -> complex:
    """Principal log with arg in (-pi, pi); a negative real needs a side."""
    w = complex(w)
    if w == 0:
        raise DomainError("logarithm of zero")
    if w.imag == 0.0 and w.real < 0.0:
        s = Side.parse(side)
        if s == Side.OFF_AXIS:
            raise BranchAmbiguityError(f"log of negative real {w.real} needs a cut side")
        return complex(math.log(-w.real), int(s) * math.pi)
    return cmath.log(w)


def branch_power(w: complex, p: complex, side: Side | int | None = None) -> complex:
    """w**p with arg w = 0 on the positive real axis and the cut on the negative real axis."""
    w = complex(w)
    p = complex(p)
    if p == 0:
        return 1 + 0j
    if w == 0:
        if p.real > 0:
            return 0j
        raise DomainError("zero raised to a power with nonpositive real part")
    if p.imag == 0.0 and p.real == round(p.real) and abs(p.real) <= 64:
        return w ** int(p.real)
    if w.imag == 0.0 and w.real > 0.0 and p.imag == 0.0:
        return complex(w.real ** p.real, 0.0)
    return cmath.exp(p * branch_log(w, side))


# Bernoulli-number coefficients B_{2k}/(2k) for the digamma asymptotic series.
_PSI_ASYM = (1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760, 1.0 / 12)


def _digamma(z: complex) -> complex:
    """psi(z); internal helper for the logarithmic 2F1 forms."""
    z = complex(z)
    if nonpositive_integer(z, 1e-300) is not None:
        raise PoleError(f"digamma pole at {z}")
    if z.real < 0.5:
        return _digamma(1.0 - z) - math.pi * cos_pi(z) / _sin_pi_exact(z)
    acc = 0j
    while z.real < 10.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    series = 0j
    power = inv2
    for c in _PSI_ASYM:
        series += c * power
        power *= inv2
    return acc + cmath.log(z) - 0.5 / z - series


def _rgamma_psi(z: complex) -> complex:
    """psi(z)/Gamma(z), entire; equals (-1)^(n+1) n! at z = -n."""
    z = complex(z)
    n = round(z.real)
    if n <= 0 and abs(z.real - n) < 0.5 and abs(z.imag) < 0.5:
        # reflected about the pole at -n, so no cancellation as z approaches it
        n = -n
        d = z + n
        sign = -1.0 if n % 2 == 0 else 1.0
        s = cmath.sin(math.pi * d) / math.pi
        return sign * gamma(1.0 + n - d) * (cmath.cos(math.pi * d) - _digamma(1.0 + n - d) * s)
    return _digamma(z) * _rgamma(z)
