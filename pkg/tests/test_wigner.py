import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genlegendre.oracles import wigner_d_matrix, wigner_d_oracle
from genlegendre.types import DomainError, InvalidIndexError
from genlegendre.wigner import (
    SYMMETRY_RULES,
    SpinIndex,
    admissible_spins,
    d_orthogonality,
    d_symmetry_residual,
    wigner_d,
)

XS = (-1.0, -0.73, -0.2, 0.0, 0.41, 0.9, 1.0)


@pytest.mark.parametrize("twice_j", range(0, 7))
def test_matches_generator_oracle(twice_j):
    for s in admissible_spins(twice_j):
        if s.twice_j != twice_j:
            continue
        for x in XS:
            assert abs(wigner_d(s, x).value - wigner_d_oracle(s.twice_j, s.twice_mu, s.twice_nu, x)) < 1e-10


def test_half_integer_signs_are_explicit():
    theta = 0.8
    x = math.cos(theta)
    assert wigner_d(SpinIndex.from_values(0.5, 0.5, -0.5), x).value == pytest.approx(-math.sin(theta / 2), abs=1e-14)
    assert wigner_d(SpinIndex.from_values(0.5, -0.5, 0.5), x).value == pytest.approx(math.sin(theta / 2), abs=1e-14)
    assert wigner_d(SpinIndex.from_values(1, 1, 0), x).value == pytest.approx(-math.sin(theta) / math.sqrt(2), abs=1e-14)


@pytest.mark.parametrize("rule", SYMMETRY_RULES)
def test_symmetries(rule):
    for s in admissible_spins(5):
        for x in XS:
            assert d_symmetry_residual(rule, s, x) < 1e-11


@given(st.integers(0, 8), st.floats(-1.0, 1.0))
@settings(max_examples=60, deadline=None)
def test_rows_are_unit_vectors(twice_j, x):
    for tn in range(-twice_j, twice_j + 1, 2):
        total = sum(wigner_d(SpinIndex(twice_j, tm, tn), x).value.real ** 2 for tm in range(-twice_j, twice_j + 1, 2))
        assert total == pytest.approx(1.0, abs=1e-12)


def test_oracle_matrix_is_orthogonal():
    m = wigner_d_matrix(5, 0.3)
    assert abs((m @ m.T) - __import__("numpy").eye(6)).max() < 1e-13


@pytest.mark.parametrize("tm,tn", [(0, 0), (2, -2), (1, 1), (1, -3)])
def test_orthogonality(tm, tn):
    start = max(abs(tm), abs(tn))
    degrees = range(start, 9, 2)
    for a in degrees:
        for b in degrees:
            v = d_orthogonality(SpinIndex(a, tm, tn), SpinIndex(b, tm, tn)).value.real
            expected = 2.0 / (a + 1) if a == b else 0.0
            assert v == pytest.approx(expected, abs=1e-10)


def test_index_validation():
    with pytest.raises(InvalidIndexError):
        SpinIndex.from_values(0.3, 0, 0)
    with pytest.raises(InvalidIndexError):
        SpinIndex(2, 1, 0)
    with pytest.raises(InvalidIndexError):
        SpinIndex(2, 4, 0)
    with pytest.raises(DomainError):
        wigner_d(SpinIndex(2, 0, 0), 1.5)
    with pytest.raises(InvalidIndexError):
        d_orthogonality(SpinIndex(2, 0, 0), SpinIndex(2, 2, 0))


def test_string_construction():
    assert SpinIndex.from_values("3/2", "1/2", "-3/2") == SpinIndex(3, 1, -3)
