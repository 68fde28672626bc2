"""Reference values computed along routes that share no code with the hypergeometric kernel.

These back the reduction and rotation-matrix checks: integer-order associated
Legendre functions from polynomial derivatives, Jacobi polynomials from their
three-term recurrence, and Wigner d-matrices from the spin generator J_y.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from numpy.polynomial import legendre as npleg
from numpy.polynomial import polynomial as nppoly

from .types import DomainError


def _legendre_power_coeffs(n: int) -> np.ndarray:
    """Monomial coefficients of P_n, lowest degree first."""
    basis = np.zeros(n + 1)
    basis[n] = 1.0
    return npleg.leg2poly(basis)


def _poly_derivative_value(coeffs: np.ndarray, m: int, z: complex) -> complex:
    d = nppoly.polyder(coeffs, m) if m else coeffs
    if d.size == 0:
        return 0j
    return complex(nppoly.polyval(z, d))


def _order_ratio(n: int, m: int) -> float:
    """(n-m)!/(n+m)! for 0 <= m <= n."""
    return math.factorial(n - m) / math.factorial(n + m)


def _z_power(z: complex, m: int) -> complex:
    """(z-1)^{m/2} (z+1)^{m/2} on the principal branches (the cut sits on (-inf, 1))."""
    return (z - 1) ** (m / 2.0) * (z + 1) ** (m / 2.0)


def associated_legendre_p(n: int, m: int, z: complex) -> complex:
    """P^m_n(z) off (-inf, 1], integer degree n >= 0 and |m| <= n."""
    n, m = int(n), int(m)
    if n < 0 or abs(m) > n:
        raise DomainError("oracle covers 0 <= |m| <= n")
    z = complex(z)
    k = abs(m)
    value = _z_power(z, k) * _poly_derivative_value(_legendre_power_coeffs(n), k, z)
    return value * _order_ratio(n, k) if m < 0 else value


def _w_coeffs(n: int) -> np.ndarray:
    """Polynomial part W_{n-1} = sum_{k=1}^n P_{k-1} P_{n-k} / k of the Legendre Q_n."""
    total = np.zeros(max(n, 1))
    for k in range(1, n + 1):
        prod = nppoly.polymul(_legendre_power_coeffs(k - 1), _legendre_power_coeffs(n - k)) / k
        total = nppoly.polyadd(total, prod)
    return total


def _half_log_derivative(z: complex, k: int) -> complex:
    """k-th derivative of (1/2) log((z+1)/(z-1))."""
    if k == 0:
        return 0.5 * (cmath.log(z + 1) - cmath.log(z - 1))
    c = 0.5 * (-1) ** (k - 1) * math.factorial(k - 1)
    return c * ((z + 1) ** (-k) - (z - 1) ** (-k))


def _q_inverse_series(n: int, m: int, z: complex) -> complex:
    """Q^m_n from its expansion in 1/z^2; free of the cancellation the log form suffers at large z."""
    a, b, c = (n + m) / 2.0 + 1.0, (n + m + 1) / 2.0, n + 1.5
    x = 1.0 / (z * z)
    term, total, k = 1.0 + 0j, 1.0 + 0j, 0
    while abs(term) > 1e-17 * abs(total) and k < 2000:
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        total += term
        k += 1
    pref = ((-1) ** m * math.sqrt(math.pi) * math.factorial(n + m) / (2 ** (n + 1) * math.gamma(c))
            * (1.0 - x) ** (m / 2.0) / z ** (n + 1))
    return pref * total


def associated_legendre_q(n: int, m: int, z: complex) -> complex:
    """Q^m_n(z) for z off (-inf, 1], integer degree n >= 0 and |m| <= n.

    Large |z| goes through the 1/z^2 series; otherwise the
    Legendre polynomial times a logarithm, minus the polynomial part, is
    differentiated term by term.
    """
    n, m = int(n), int(m)
    if n < 0 or abs(m) > n:
        raise DomainError("oracle covers 0 <= |m| <= n")
    z = complex(z)
    if abs(z) > 2.0:
        return _q_inverse_series(n, m, z)
    k = abs(m)
    pc = _legendre_power_coeffs(n)
    deriv = sum(math.comb(k, i) * _poly_derivative_value(pc, k - i, z) * _half_log_derivative(z, i)
                for i in range(k + 1))
    deriv -= _poly_derivative_value(_w_coeffs(n), k, z) if n > 0 else 0j
    value = _z_power(z, k) * deriv
    return value * _order_ratio(n, k) if m < 0 else value


def jacobi_polynomial(n: int, alpha: complex, beta: complex, z: complex) -> complex:
    """P^{(alpha, beta)}_n(z) by the three-term recurrence in n."""
    n = int(n)
    if n < 0:
        raise DomainError("Jacobi degree must be nonnegative")
    a, b, z = complex(alpha), complex(beta), complex(z)
    p_prev, p = 1.0 + 0j, (a + 1) + (a + b + 2) * (z - 1) / 2
    if n == 0:
        return p_prev
    for k in range(2, n + 1):
        s = 2 * k + a + b
        c0 = 2 * k * (k + a + b) * (s - 2)
        if c0 == 0:
            raise DomainError("Jacobi recurrence degenerates for these parameters")
        c1 = (s - 1) * (s * (s - 2) * z + a * a - b * b)
        c2 = 2 * (k + a - 1) * (k + b - 1) * s
        p_prev, p = p, (c1 * p - c2 * p_prev) / c0
    return p


def wigner_d_matrix(twice_j: int, x: float) -> np.ndarray:
    """Matrix <j m| exp(-i theta J_y) |j m'> at cos(theta) = x, rows and columns ordered m = j, j-1, ..., -j."""
    twice_j = int(twice_j)
    if twice_j < 0:
        raise DomainError("2j must be nonnegative")
    if not -1.0 <= x <= 1.0:
        raise DomainError("x must lie in [-1, 1]")
    j = twice_j / 2.0
    ms = [j - k for k in range(twice_j + 1)]
    dim = twice_j + 1
    jplus = np.zeros((dim, dim), dtype=complex)
    for col, m in enumerate(ms[1:], start=1):
        # J+ |m> = sqrt((j-m)(j+m+1)) |m+1>, and m+1 sits one row up
        jplus[col - 1, col] = math.sqrt((j - m) * (j + m + 1))
    jy = (jplus - jplus.conj().T) / 2j
    w, v = np.linalg.eigh(jy)
    theta = math.acos(x)
    rot = (v * np.exp(-1j * theta * w)) @ v.conj().T
    return rot.real


def wigner_d_oracle(twice_j: int, twice_mu: int, twice_nu: int, x: float) -> float:
    """Single element d^j_{mu nu}(x) of the generator-exponentiation matrix."""
    mat = wigner_d_matrix(twice_j, x)
    row = (twice_j - twice_mu) // 2
    col = (twice_j - twice_nu) // 2
    return float(mat[row, col])
