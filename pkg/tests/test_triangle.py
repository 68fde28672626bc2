import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genlegendre.triangle import TriangleConfig, hyperbolic, recover_z1, solve_triangle, trigonometric
from genlegendre.types import DomainError

side = st.floats(1.05, 6.0)


@given(side, side, st.floats(-2.5, 2.5))
@settings(max_examples=100, deadline=None)
def test_hyperbolic_round_trip(z1, z2, alpha):
    t = solve_triangle(TriangleConfig(z1, z2, alpha, "hyperbolic"))
    assert t.consistency < 1e-10
    assert recover_z1(t) == pytest.approx(z1, rel=1e-9)


@given(side, side, st.floats(-3.0, 3.0))
@settings(max_examples=100, deadline=None)
def test_trigonometric_round_trip(z1, z2, theta):
    try:
        t = solve_triangle(TriangleConfig(z1, z2, theta, "trigonometric"))
    except DomainError:
        return
    assert t.consistency < 1e-9
    assert recover_z1(t) == pytest.approx(z1, rel=1e-8)


def test_zero_angle_cases():
    z, p1, p2 = hyperbolic(2.0, 3.0, 0.0)
    assert z == pytest.approx(2.0 * 3.0 + math.sqrt(3.0 * 8.0))
    assert p1 == 0.0 and p2 == 0.0
    z, p1, p2 = trigonometric(3.0, 2.0, math.pi)
    assert z == pytest.approx(3.0 * 2.0 + math.sqrt(8.0 * 3.0))


def test_invalid_sides():
    with pytest.raises(DomainError):
        solve_triangle(TriangleConfig(0.5, 2.0, 1.0))
    with pytest.raises(DomainError):
        solve_triangle(TriangleConfig(2.0 + 1j, 2.0, 1.0))
    with pytest.raises(DomainError):
        solve_triangle(TriangleConfig(2.0, 2.0, 0.0, "trigonometric"))
