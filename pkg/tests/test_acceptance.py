"""Acceptance criteria 1-8, each at its stated tolerance and runtime budget.

Run with ``pytest tests/test_acceptance.py`` (verdicts appear in the terminal summary)
or directly with ``python tests/test_acceptance.py``.
"""

import contextlib
import io
import itertools
import time
from collections import defaultdict

import pytest

from acceptance_log import record
from genlegendre.cli import main
from genlegendre.legendre import IndexTriple, p_first_kind, reduce_to_associated_legendre, reduce_to_jacobi
from genlegendre.oracles import associated_legendre_p, associated_legendre_q, jacobi_polynomial
from genlegendre.suites import run_suite
from genlegendre.wigner import SYMMETRY_RULES

SEED = 0


def _worst_by_check(report) -> dict:
    """Largest residual and loosest bound seen per check name."""
    worst = defaultdict(lambda: [0.0, 0.0, 0])
    for r in report.records:
        w = worst[r.inputs.get("check", report.suite)]
        w[0] = max(w[0], r.residual if r.residual == r.residual else float("inf"))
        w[1] = max(w[1], r.tolerance)
        w[2] += 1
    return dict(worst)


def _timed(suite: str):
    start = time.perf_counter()
    report = run_suite(suite, seed=SEED)
    return report, time.perf_counter() - start


def _failures(report) -> list:
    return [r.to_dict() for r in report.records if not r.passed][:3]


def test_criterion_1_ode():
    report, elapsed = _timed("ode")
    ok = report.passed and report.cases_run == 1000 and elapsed < 30.0
    record(1, ok, f"ODE: {report.cases_run} checks (500 triples x P,Q), max scaled residual "
                  f"{report.max_residual:.2e} <= 1e-5, {elapsed:.1f} s < 30 s")
    assert report.passed, _failures(report)
    assert report.cases_run == 1000
    assert elapsed < 30.0


def _reduction_errors():
    points = (1.3, 2.0, 4.5, 1.5 + 0.7j, -2.0 + 1.0j, 0.3 - 0.8j, 12.0 - 3.0j)
    worst_legendre = 0.0
    for n in range(6):
        for m in range(-n, n + 1):
            for z in points:
                for kind, oracle in (("P", associated_legendre_p), ("Q", associated_legendre_q)):
                    got = reduce_to_associated_legendre(kind, n, m, z).value
                    ref = oracle(n, m, z)
                    worst_legendre = max(worst_legendre, abs(got - ref) / max(abs(ref), 1e-300))
    worst_jacobi = 0.0
    orders = ((0.3, -0.2), (0.25 + 0.4j, 0.6 - 0.1j), (-0.7, 1.3), (1.5j, -0.5))
    for n, (mu, nu), z in itertools.product(range(7), orders, points):
        idx = IndexTriple(nu + n, mu, nu)
        rebuilt = reduce_to_jacobi(idx, z, jacobi_polynomial(n, nu - mu, nu + mu, z)).value
        direct = p_first_kind(idx, z).value
        worst_jacobi = max(worst_jacobi, abs(rebuilt - direct) / max(abs(direct), 1e-300))
    return worst_legendre, worst_jacobi


def test_criterion_2_reductions():
    legendre, jacobi = _reduction_errors()
    ok = legendre <= 1e-10 and jacobi <= 1e-10
    record(2, ok, f"reductions: associated Legendre {legendre:.2e}, Jacobi {jacobi:.2e} (bound 1e-10)")
    assert legendre <= 1e-10
    assert jacobi <= 1e-10


def test_criterion_3_identities():
    start = time.perf_counter()
    reports = {s: run_suite(s, seed=SEED) for s in ("symmetry", "recurrence", "connection", "discontinuity")}
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in reports.values()) and elapsed < 90.0
    detail = ", ".join(f"{s} {r.max_residual:.1e}/{r.tolerance:g}" for s, r in reports.items())
    record(3, ok, f"identities (300 samples each): {detail}; {elapsed:.1f} s < 90 s")
    for r in reports.values():
        assert r.passed, _failures(r)
        assert r.samples == 300
    assert elapsed < 90.0


def test_criterion_4_wigner():
    report = run_suite("wigner", seed=SEED)
    worst = _worst_by_check(report)
    assert {"oracle", "orthogonality"} <= set(worst)
    # six equal expressions: d^j_{mu nu} itself and five rewritings of it
    assert set(worst) - {"oracle", "orthogonality", "unitarity"} == set(SYMMETRY_RULES)
    assert len(SYMMETRY_RULES) == 5
    record(4, report.passed, "wigner: " + ", ".join(f"{k} {v[0]:.1e}/{v[1]:g}" for k, v in worst.items()))
    assert report.passed, _failures(report)


def test_criterion_5_integrals():
    report = run_suite("integrals", seed=SEED)
    worst = _worst_by_check(report)
    assert worst["pq-integral"][2] == 20
    assert worst["generating-series"][1] == 1e-6 and worst["norm"][1] == 1e-8
    record(5, report.passed, "integrals: " + ", ".join(f"{k} {v[0]:.1e}/{v[1]:g}" for k, v in worst.items()))
    assert report.passed, _failures(report)


def test_criterion_6_addition():
    report, elapsed = _timed("addition")
    worst = _worst_by_check(report)
    assert worst["multiplication"][2] == 10 and worst["multiplication"][1] == 1e-6
    ok = report.passed and elapsed < 120.0
    record(6, ok, "addition: " + ", ".join(f"{k} {v[0]:.1e}/{v[1]:g}" for k, v in worst.items())
           + f"; {elapsed:.1f} s < 120 s")
    assert report.passed, _failures(report)
    assert elapsed < 120.0


def test_criterion_7_asymptotics():
    report = run_suite("asymptotic", seed=SEED)
    worst = _worst_by_check(report)
    record(7, report.passed, "asymptotics: " + ", ".join(f"{k} {v[0]:.1e}/{v[1]:g}" for k, v in worst.items()))
    assert report.passed, _failures(report)


def _cli_bytes(argv: list[str]) -> tuple[int, bytes]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue().encode()


DETERMINISM_COMMANDS = (
    ["table", "P", "--j", "0:2:0.5", "--mu", "-0.5:0.5:0.5", "--nu", "0.25", "--z", "1.1:3:0.3"],
    ["table", "Q", "--j", "0.3+0.2i", "--mu", "0:1:1", "--nu", "-1:1:1", "--z", "-2:2:0.5", "--side", "below",
     "--format", "json"],
    ["table", "wigner-d", "--j", "2", "--mu", "-2:2:1", "--nu", "-2:2:1", "--z", "-1:1:0.25"],
    ["verify", "all", "--samples", "4", "--seed", "11"],
)


def test_criterion_8_determinism():
    mismatched = []
    for argv in DETERMINISM_COMMANDS:
        runs = {_cli_bytes(["--threads", str(t), *argv]) for t in (1, 4, 1, 3)}
        if len(runs) != 1:
            mismatched.append(argv[:2])
    record(8, not mismatched, f"determinism: {len(DETERMINISM_COMMANDS)} table/verify commands byte-identical "
                              f"at 1, 3 and 4 threads" + (f"; differing: {mismatched}" if mismatched else ""))
    assert not mismatched


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
