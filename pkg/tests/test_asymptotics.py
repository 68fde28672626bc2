import pytest

from genlegendre.asymptotics import (
    asym_p_large_numu,
    asym_q_fixed_jmu,
    asym_q_large_j,
    degree_from_t,
    limit_bessel,
    limit_kummer,
)


def test_degree_from_t_solves_the_quadratic():
    for s, t in ((0.5, 1e4), (1.0 + 0.2j, 300.0)):
        j = degree_from_t(s, t)
        assert abs(j * (j + 1) - (s * s / 4 - t)) < 1e-9 * abs(t)
        assert (j + 0.5).real >= 0


@pytest.mark.parametrize("mu,nu,y", [(0.2, 1.2, 2.0), (-0.4, 0.6, 1.0), (0.1 + 0.2j, 1.1 + 0.2j, 3.0)])
def test_bessel_limit(mu, nu, y):
    assert limit_bessel(mu, nu, 1e6, y).abs_diff <= 5e-4


def test_kummer_limit():
    assert limit_kummer(0.3, 1.0, 1e6, 1.5).ratio_error <= 5e-4


@pytest.mark.parametrize("mu,nu", [(0.0, 0.0), (0.3j, -0.2j)])
def test_q_large_degree(mu, nu):
    errs = [asym_q_large_j((j, mu, nu), 1.0).ratio_error for j in (20.0, 40.0, 80.0)]
    assert errs[1] <= 0.02 * 1.5 and asym_q_large_j((50.0, mu, nu), 1.0).ratio_error <= 0.02
    assert errs[1] / errs[0] <= 0.6 and errs[2] / errs[1] <= 0.6


def test_p_large_order_difference():
    f = lambda k: asym_p_large_numu((0.7, -k / 2 + 0.3, k / 2 + 0.3), 1.2).ratio_error  # noqa: E731
    assert f(80.0) <= 0.05
    assert f(80.0) / f(40.0) <= 0.6


@pytest.mark.parametrize("branch,shift,d", [("j", 0.0, 1.0), ("-j-1", 3j, 1.5)])
def test_q_large_degree_and_order(branch, shift, d):
    f = lambda j: asym_q_fixed_jmu((j + shift, j + shift - d, 0.4), 1.1, branch).ratio_error  # noqa: E731
    assert f(80.0) <= 0.05
    assert f(80.0) / f(40.0) <= 0.6
