import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genlegendre.legendre import Argument, IndexTriple, evaluate
from genlegendre.recurrences import (
    RULE_IDS,
    RecurrenceRule,
    fd_derivative,
    iterated_half_step_residual,
    recurrence_residual,
    step_j,
)
from genlegendre.types import DegenerateCoefficientError, DomainError, Flag, Side

POINTS = [1.5, 2.0 + 1.0j, 5.0, Argument(-3.0 + 0.5j), Argument(-0.4, Side.ABOVE)]


def _rule(rule_id):
    return RecurrenceRule(rule_id, 1 if rule_id.startswith("deriv") else None)


@pytest.mark.parametrize("kind", ["P", "Q"])
@pytest.mark.parametrize("rule_id", RULE_IDS)
@pytest.mark.parametrize("z", POINTS, ids=lambda z: str(z))
def test_every_rule_holds(kind, rule_id, z):
    if rule_id.startswith("deriv") and isinstance(z, Argument) and z.side != Side.OFF_AXIS:
        with pytest.raises(DomainError):
            recurrence_residual(_rule(rule_id), kind, IndexTriple(0.8, 0.35, -0.6), z)
        return
    r = recurrence_residual(_rule(rule_id), kind, IndexTriple(0.8 + 0.3j, 0.35 - 0.2j, -0.6 + 0.1j), z)
    assert Flag.POLE in r.flags or r.relative < 1e-8


@given(st.complex_numbers(max_magnitude=2.5, allow_nan=False, allow_infinity=False),
       st.complex_numbers(max_magnitude=2.5, allow_nan=False, allow_infinity=False),
       st.complex_numbers(max_magnitude=2.5, allow_nan=False, allow_infinity=False))
@settings(max_examples=40, deadline=None)
def test_iterated_half_steps(j, mu, nu):
    if min(abs(2 * j), abs(2 * j + 1), abs(2 * j + 2)) < 1e-3:
        with pytest.raises(DegenerateCoefficientError):
            iterated_half_step_residual("P", IndexTriple(round(2 * j.real) / 2, mu, nu), 2.0)
        return
    for kind in ("P", "Q"):
        r = iterated_half_step_residual(kind, IndexTriple(j, mu, nu), 2.0 + 0.7j)
        assert Flag.POLE in r.flags or Flag.DEGRADED in r.flags or r.relative < 1e-8


def test_second_order_derivative_rule():
    r = recurrence_residual(RecurrenceRule("deriv-up", 2), "P", IndexTriple(1.1, 0.2, 0.4), 2.5)
    assert r.relative < 1e-8


def test_rule_validation():
    with pytest.raises(ValueError):
        RecurrenceRule("no-such-rule")
    with pytest.raises(ValueError):
        RecurrenceRule("deriv-up")
    with pytest.raises(ValueError):
        RecurrenceRule("half-step-mp", 2)


def test_step_in_degree_reproduces_direct_values():
    idx = IndexTriple(1.3 + 0.2j, 0.4, -0.25)
    z = 2.4 - 0.3j
    for kind in ("P", "Q"):
        f_j = evaluate(kind, idx, z)
        f_jm1 = evaluate(kind, idx.replace(j=idx.j - 1), z)
        nxt = step_j(kind, idx, z, f_j, f_jm1)
        direct = evaluate(kind, idx.replace(j=idx.j + 1), z)
        assert abs(nxt.value - direct.value) <= 1e-11 * abs(direct.value)


def test_step_in_degree_refuses_degenerate_coefficients():
    idx = IndexTriple(0.0, 0.3, 0.2)
    f = evaluate("P", idx, 2.0)
    with pytest.raises(DegenerateCoefficientError):
        step_j("P", idx, 2.0, f, f)


def test_fd_derivative_of_a_polynomial():
    d, err = fd_derivative(lambda z: z ** 3, 1.5 + 0.5j, 2, 0.1)
    assert abs(d - 6 * (1.5 + 0.5j)) < 1e-8
    assert err < 1e-6
