import math

import mpmath as mp
import pytest

from genlegendre import identities as ids
from genlegendre.legendre import IndexTriple
from genlegendre.types import DegenerateCoefficientError, PreconditionError

import mp_reference as ref


def test_pq_integral_matches_closed_form():
    for j, l, mu, nu in ((0.2, 1.1, 0.1, 0.3), (0.5 + 0.1j, 1.4, -0.3, 0.2), (-0.3, 0.6, 0.4, -0.1)):
        assert ids.pq_integral_check(j, l, mu, nu).relative < 1e-6


def test_pq_integral_against_mpmath_quadrature():
    j, l, mu, nu = 0.2, 1.1, 0.1, 0.3
    with mp.workdps(20):
        expected = mp.quad(lambda z: ref.P(j, mu, nu, z) * ref.Q(l, nu, mu, z), [1, 2, 10, mp.inf])
    assert abs(ids.pq_integral(j, l, mu, nu).value - complex(expected)) < 1e-8


def test_pq_preconditions():
    with pytest.raises(PreconditionError):
        ids.pq_integral(1.0, 0.5, 0.0, 0.0)
    with pytest.raises(PreconditionError):
        ids.pq_integral(0.0, 1.0, 1.5, 0.0)


@pytest.mark.parametrize("mu,nu,n", [(0.2, 0.3, 0), (-0.4, 0.1, 2), (0.3 + 0.1j, 0.25, 3)])
def test_norm_in_first_system(mu, nu, n):
    idx = IndexTriple(nu + n, mu, nu)
    assert ids.orthogonal_system(idx) == 1
    assert ids.norm_check(idx).relative < 1e-8


@pytest.mark.parametrize("mu,nu,n", [(0.3, 0.45, 1), (0.1, -0.2, 4)])
def test_norm_in_second_system(mu, nu, n):
    idx = IndexTriple(n - mu, mu, nu)
    assert ids.orthogonal_system(idx) == 2
    assert ids.norm_check(idx).relative < 1e-8


def test_norm_against_mpmath_quadrature():
    j, mu, nu = 1.3, 0.2, 0.3
    with mp.workdps(20):
        expected = mp.quad(lambda x: ref.P_tilde(j, mu, nu, x) ** 2, [-1, 0, 1])
    assert abs(ids.norm_integral(IndexTriple(j, mu, nu)).value - complex(expected)) < 1e-9


def test_cross_orthogonality_near_minus_one_exponents():
    # nu + mu close to 1 in the second system puts a strong power law at x = -1
    assert abs(ids.cross_orthogonality(1 - 0.44, 3 - 0.44, 0.44, 0.5).value) < 1e-9
    assert abs(ids.cross_orthogonality(0.3 + 1, 0.3 + 3, 0.1, 0.3).value) < 1e-9


def test_outside_orthogonal_systems():
    with pytest.raises(PreconditionError):
        ids.norm_integral(IndexTriple(0.7, 0.2, 0.3))


def test_generating_series_at_forty_terms():
    for mu, nu, z, zeta in ((0.1, 0.2, 1.5, 4.0), (-0.3, 0.25, 2.0, 6.0)):
        v = ids.generating_series_partial_sum(mu, nu, z, zeta, 40)
        assert abs(v.value - 1.0 / (zeta - z)) < 1e-6


def test_product_integral_boundary_formula():
    for kinds in (("P", "P"), ("Q", "Q"), ("P", "Q")):
        assert ids.product_integral_identity(0.6, 1.7, 0.2, -0.3, kinds=kinds).relative < 1e-8
    with pytest.raises(DegenerateCoefficientError):
        ids.product_integral_identity(0.5, -1.5, 0.0, 0.0)


def test_multiplication_formula():
    assert ids.multiplication_formula_check(1.2 + 0.1j, 0.2, -0.1, 0.3, 1.8, 2.6).relative < 1e-6


def test_addition_contour():
    assert ids.addition_contour_check(1.1 + 0.2j, 0.1, -0.2, 0.4, 1.9, 2.4).relative < 1e-5


@pytest.mark.parametrize("variant,z1,z2", [("QP", 2.7, 2.0), ("PQ", 2.0, 2.7)])
def test_mixed_products(variant, z1, z2):
    assert ids.mixed_pq_check(variant, 1.4, 0.2, 0.1, -0.3, z1, z2).relative < 1e-5
    with pytest.raises(PreconditionError):
        ids.mixed_pq_check(variant, 1.4, 0.2, 0.1, -0.3, z2, z1)


def test_q_integral_representation():
    assert ids.q_integral_check(IndexTriple(1.3 + 0.2j, 0.2, -0.1), 2.2).relative < 1e-5


@pytest.mark.parametrize("kind", ["Q", "P"])
def test_series_addition_converges_monotonically(kind):
    z_small, z_big = math.cosh(0.8), math.cosh(1.8)
    for z1, z2 in ((z_big, z_small), (z_small, z_big)):
        r = [ids.series_addition_check(kind, 1.2 + 0.1j, 0.2, -0.3, 1.1, z1, z2, n).relative for n in (5, 10, 20, 40)]
        assert r[-1] < 1e-5
        assert all(b < a for a, b in zip(r, r[1:]))


def test_shifted_angles_vanish_with_theta():
    _, t1, t2 = ids.shifted_trig_angles(3.0, 1.5, 1e-9)
    assert abs(t1) < 1e-6 and abs(t2) < 1e-6
