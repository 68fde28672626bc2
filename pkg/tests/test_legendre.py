import cmath
import math

import mpmath as mp
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from genlegendre.legendre import (
    DISCONTINUITY_KINDS,
    Argument,
    IndexTriple,
    connection_qpp,
    connection_qq_difference,
    derivative,
    discontinuity,
    discontinuity_residual,
    evaluate,
    is_identically_zero,
    ode_residual,
    one_sided_difference,
    p_first_kind,
    p_tilde,
    q_second_kind,
    reflect_argument,
    symmetry_residual,
    wronskian_closed_form,
    wronskian_numeric,
)
from genlegendre.types import BranchAmbiguityError, Flag, Side

import mp_reference as ref
from mp_reference import rel

index = st.complex_numbers(max_magnitude=2.5, allow_nan=False, allow_infinity=False)
off_cut = st.complex_numbers(min_magnitude=1.2, max_magnitude=6, allow_nan=False, allow_infinity=False).filter(
    lambda z: abs(z.imag) > 0.05 or z.real > 1.1)


@given(index, index, index, off_cut)
@settings(max_examples=120, deadline=None)
def test_p_matches_mpmath(j, mu, nu, z):
    got = p_first_kind(IndexTriple(j, mu, nu), z)
    expected = ref.P(j, mu, nu, z)
    assert rel(got.value, expected) < 1e-9 or got.degraded
    assert abs(got.value - complex(expected)) <= 4 * got.abs_error + 1e-300


@given(index, index, index, off_cut)
@settings(max_examples=120, deadline=None)
def test_q_matches_mpmath(j, mu, nu, z):
    idx = IndexTriple(j, mu, nu)
    got = q_second_kind(idx, z)
    assume(not got.is_pole)
    expected = ref.Q(j, mu, nu, z)
    assert rel(got.value, expected) < 1e-9 or got.degraded
    assert abs(got.value - complex(expected)) <= 4 * got.abs_error + 1e-300


@pytest.mark.parametrize("side", [Side.ABOVE, Side.BELOW])
@pytest.mark.parametrize("x", [-3.5, -1.2, -0.6, 0.0, 0.7])
def test_cut_boundary_values(side, x):
    j, mu, nu = 0.7 + 0.3j, 0.4 - 0.2j, -0.3 + 0.1j
    sgn = int(side)
    assert rel(p_first_kind(IndexTriple(j, mu, nu), Argument(x, side)).value, ref.P(j, mu, nu, x, sgn)) < 1e-11
    assert rel(q_second_kind(IndexTriple(j, mu, nu), Argument(x, side)).value, ref.Q(j, mu, nu, x, sgn)) < 1e-11


def test_cut_needs_a_side():
    with pytest.raises(BranchAmbiguityError):
        p_first_kind(IndexTriple(0.5, 0.2, 0.1), -2.0)


def test_near_minus_one_keeps_relative_accuracy():
    j, mu, nu = 0.3 + 0.2j, 0.45, 0.5
    for d in (1e-4, 1e-8, 1e-12):
        z = complex(-1 + d, 1e-3)
        got = p_first_kind(IndexTriple(j, mu, nu), z)
        assert rel(got.value, ref.P(j, mu, nu, mp.mpc(-1 + d, 1e-3))) < 1e-11


@pytest.mark.parametrize("z", [1.05, 1.5 + 0.2j, 3.0, -2.0 + 1.0j, 0.2 - 0.4j, 12.0])
def test_two_hypergeometric_forms_agree(z):
    idx = IndexTriple(1.3 - 0.4j, 0.6 + 0.2j, -0.25)
    a = p_first_kind(idx, z, form="2")
    b = p_first_kind(idx, z, form="2a")
    assert abs(a.value - b.value) <= 2 * (a.abs_error + b.abs_error) + 1e-14 * abs(a.value)


@pytest.mark.parametrize("j,n,m", [(0.3 + 0.1j, 0, 0), (1.2, 1, 2), (-0.4 + 0.5j, 2, 1)])
def test_zero_family(j, n, m):
    first = IndexTriple(j, j + n + 1, j - m)
    second = IndexTriple(j, -j + m, -j - n - 1)
    for idx in (first, second):
        assert is_identically_zero(idx)
        v = p_first_kind(idx, 2.3 + 0.4j)
        assert v.value == 0 and v.is_zero
    # exact index arithmetic, so the reference sits on the zero set itself
    jm = mp.mpc(j)
    assert abs(ref.P(jm, jm + n + 1, jm - m, 2.3 + 0.4j)) < 1e-25
    assert abs(ref.P(jm, -jm + m, -jm - n - 1, 2.3 + 0.4j)) < 1e-25


def test_q_pole_is_flagged():
    v = q_second_kind(IndexTriple(-2, 1, 0), 2.0)
    assert v.is_pole and Flag.POLE in v.flags


def test_small_values_from_the_cli_examples():
    assert q_second_kind(IndexTriple(0, 0, 0), 3.0).value == pytest.approx(0.5 * math.log(2.0), rel=1e-14)
    assert p_first_kind(IndexTriple(1, 0, 0), 2.6).value == pytest.approx(2.6, rel=1e-14)


@pytest.mark.parametrize("kind", ["P", "Q"])
@pytest.mark.parametrize("z", [1.7 + 0.3j, 4.0, -2.5 + 0.8j])
def test_ode_residual(kind, z):
    r = ode_residual(kind, IndexTriple(0.9 + 0.2j, 0.3, -0.6 + 0.1j), z)
    assert r.relative < 1e-7


@pytest.mark.parametrize("kind", ["P", "Q"])
def test_derivative_matches_mpmath(kind):
    j, mu, nu, z = 1.1 + 0.2j, 0.3, -0.45, 2.2 - 0.5j
    f = ref.P if kind == "P" else ref.Q
    expected = mp.diff(lambda t: f(j, mu, nu, t), z)
    assert rel(derivative(kind, IndexTriple(j, mu, nu), z).value, expected) < 1e-11


@given(index, index, index, off_cut)
@settings(max_examples=60, deadline=None)
def test_index_symmetries(j, mu, nu, z):
    for rule, kind in (("reflect-j", "P"), ("negate-both", "P"), ("negate-both", "Q"), ("swap-q", "Q")):
        r = symmetry_residual(rule, IndexTriple(j, mu, nu), z, kind=kind)
        if Flag.POLE in r.flags:
            continue
        assert r.relative < 1e-10 or Flag.DEGRADED in r.flags


@pytest.mark.parametrize("z", [2.0 + 0.5j, 1.3, -3.0 + 1.0j])
def test_connections(z):
    idx = IndexTriple(0.6 + 0.3j, 0.2 - 0.1j, -0.35)
    assert connection_qpp(idx, z).relative < 1e-10
    assert connection_qq_difference(idx, z).relative < 1e-10
    # -z lands on the cut for real z, so a side is required there
    side = Side.ABOVE if complex(z).imag == 0 else None
    for kind in ("q", "p-mu", "p-nu", "p-pair"):
        assert reflect_argument(kind, idx, z, side).relative < 1e-10
    if side is not None:
        with pytest.raises(BranchAmbiguityError):
            reflect_argument("q", idx, z)


@pytest.mark.parametrize("kind,x", [("q-left", -2.3), ("p-left", -1.4), ("p-right", 0.35), ("q-right", -0.6)])
def test_discontinuities_match_boundary_values(kind, x):
    idx = IndexTriple(0.8 + 0.2j, -0.3 + 0.4j, 0.55 - 0.1j)
    closed = discontinuity(kind, idx, x)
    diff = one_sided_difference(kind, idx, x)
    assert abs(closed.value - diff.value) <= 1e-10 * max(1.0, abs(closed.value))
    assert discontinuity_residual(kind, idx, x, eps=1e-9).relative < 1e-6
    assert kind in DISCONTINUITY_KINDS


def test_p_tilde_matches_reference_and_both_sides():
    j, mu, nu = 1.4 + 0.2j, 0.3, -0.2 + 0.1j
    for x in (-0.8, 0.0, 0.45):
        above = p_tilde(IndexTriple(j, mu, nu), x)
        below = p_tilde(IndexTriple(j, mu, nu), x, from_below=True)
        assert rel(above.value, ref.P_tilde(j, mu, nu, x)) < 1e-12
        assert abs(above.value - below.value) < 1e-12 * abs(above.value)


@pytest.mark.parametrize("pair", ["P-P", "Q-Q"])
def test_wronskians(pair):
    idx = IndexTriple(0.7 + 0.1j, 0.25, -0.4)
    z = 2.1 + 0.3j
    closed = wronskian_closed_form(pair, idx, z)
    numeric = wronskian_numeric(pair, idx, z)
    assert abs(closed.value - numeric.value) < 1e-7 * abs(closed.value)


def test_evaluate_dispatch_and_argument_objects():
    idx = IndexTriple(0.5, 0.1, 0.2)
    assert evaluate("p", idx, 2.0).value == p_first_kind(idx, Argument(2.0)).value
    with pytest.raises(ValueError):
        evaluate("R", idx, 2.0)
    assert cmath.isfinite(evaluate("Q", idx, Argument(-0.5, Side.BELOW)).value)
