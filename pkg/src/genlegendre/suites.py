"""Verification suites behind ``genlegendre verify``.

Every suite expands (seed, samples) into a fixed list of cases, runs them
(optionally on a thread pool) and collects the outcomes in case order, so a
report depends only on its inputs.
"""

from __future__ import annotations

import cmath
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import identities as ids
from .asymptotics import asym_p_large_numu, asym_q_fixed_jmu, asym_q_large_j, limit_bessel, limit_kummer
from .legendre import (DISCONTINUITY_KINDS, Argument, IndexTriple, connection_qpp, connection_qq_difference,
                       discontinuity_residual, ode_residual, reflect_argument, symmetry_residual)
from .oracles import wigner_d_matrix
from .recurrences import RULE_IDS, iterated_half_step_residual, recurrence_residual
from .triangle import TriangleConfig, recover_z1, solve_triangle
from .types import Flag, GenLegendreError, Residual, Side
from .wigner import SYMMETRY_RULES, SpinIndex, admissible_spins, d_orthogonality, symmetry_rhs, wigner_d

SUITES = ("ode", "symmetry", "recurrence", "connection", "discontinuity", "asymptotic", "wigner", "integrals",
          "addition")

DEFAULT_SAMPLES = {"ode": 500, "symmetry": 300, "recurrence": 300, "connection": 300, "discontinuity": 300,
                   "asymptotic": 1, "wigner": 20, "integrals": 20, "addition": 10}

TOLERANCE = {"ode": 1e-5, "symmetry": 1e-10, "recurrence": 1e-8, "connection": 1e-8, "discontinuity": 1e-6,
             "asymptotic": 5e-2, "wigner": 1e-10, "integrals": 1e-6, "addition": 1e-5}

ONE_SIDED_EPS = 1e-9
SERIES_ORDERS = (5, 10, 20, 40)
# below this a truncation residual is at the rounding floor and may wobble
SERIES_FLOOR = 1e-12


@dataclass(frozen=True)
class Outcome:
    residual: float
    scale: float = 0.0
    flags: frozenset = frozenset()
    skipped: bool = False


@dataclass(frozen=True)
class Case:
    inputs: dict
    run: Callable[[], Outcome]
    tolerance: float
    # structural checks (contraction ratios, monotonicity) keep their bound under --tolerance
    fixed: bool = False


@dataclass
class CaseRecord:
    inputs: dict
    tolerance: float
    residual: Optional[float] = None
    scale: Optional[float] = None
    flags: list = field(default_factory=list)
    skipped: bool = False
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        if self.error is not None:
            return False
        return self.skipped or self.residual <= self.tolerance

    def to_dict(self) -> dict:
        d = {"inputs": self.inputs, "residual": self.residual, "scale": self.scale, "tolerance": self.tolerance,
             "flags": self.flags, "skipped": self.skipped}
        if self.error is not None:
            d["error"] = self.error
        return d


@dataclass
class VerifyReport:
    """Outcome of one suite.

    ``tolerance`` is the suite's headline bound; each record carries the bound
    it was held to. The report passes when every non-skipped record is within
    its bound and no case raised.
    """

    suite: str
    seed: int
    samples: int
    tolerance: float
    records: list

    @property
    def cases_run(self) -> int:
        return sum(1 for r in self.records if not r.skipped and r.error is None)

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.records if r.skipped)

    @property
    def errors(self) -> int:
        return sum(1 for r in self.records if r.error is not None)

    @property
    def max_residual(self) -> float:
        vals = [r.residual for r in self.records if r.residual is not None and not r.skipped]
        return max(vals) if vals else 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "samples": self.samples, "cases_run": self.cases_run,
                "skipped": self.skipped, "errors": self.errors, "max_residual": self.max_residual,
                "tolerance": self.tolerance, "pass": self.passed, "records": [r.to_dict() for r in self.records]}


# ------------------------------------------------------------ helpers


def _c(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _triple(rng: random.Random, lo: float = -3.0, hi: float = 3.0) -> IndexTriple:
    return IndexTriple(*(complex(rng.uniform(lo, hi), rng.uniform(lo, hi)) for _ in range(3)))


def _z_off_cut(rng: random.Random) -> complex:
    """1.1 <= |z| <= 5, kept clear of (-inf, 1] so difference stencils do not straddle a cut."""
    while True:
        z = cmath.rect(rng.uniform(1.1, 5.0), rng.uniform(-math.pi, math.pi))
        if abs(z.imag) >= 0.05 or z.real > 1.05:
            return z


def _idx_inputs(idx: IndexTriple) -> dict:
    return {"j": _c(idx.j), "mu": _c(idx.mu), "nu": _c(idx.nu)}


def _from_residual(r: Residual) -> Outcome:
    if r.skipped:
        return Outcome(0.0, 0.0, r.flags, True)
    return Outcome(r.relative, r.scale, r.flags)


def _relative(a: complex, b: complex, flags=frozenset()) -> Outcome:
    scale = max(abs(a), abs(b))
    return Outcome(abs(a - b) / scale if scale else 0.0, scale, flags)


def _absolute(a: complex, b: complex, flags=frozenset()) -> Outcome:
    return Outcome(abs(a - b), max(abs(a), abs(b)), flags)


def _execute(case: Case, tolerance_override: Optional[float]) -> CaseRecord:
    tol = case.tolerance if (tolerance_override is None or case.fixed) else tolerance_override
    rec = CaseRecord(inputs=case.inputs, tolerance=tol)
    try:
        out = case.run()
    except GenLegendreError as exc:
        rec.error = f"{type(exc).__name__}: {exc}"
        return rec
    rec.flags = sorted(f.value if isinstance(f, Flag) else str(f) for f in out.flags)
    rec.skipped = out.skipped
    if not out.skipped:
        rec.residual = float(out.residual)
        rec.scale = float(out.scale)
        if math.isnan(rec.residual):
            rec.error = "residual is not a number"
    return rec


# ------------------------------------------------------------ suite builders


def _ode_cases(rng: random.Random, n: int) -> list[Case]:
    cases = []
    for _ in range(n):
        idx, z = _triple(rng), _z_off_cut(rng)
        for kind in ("P", "Q"):
            cases.append(Case({"check": "ode", "kind": kind, **_idx_inputs(idx), "z": _c(z)},
                              lambda k=kind, i=idx, w=z: _from_residual(ode_residual(k, i, w)), TOLERANCE["ode"]))
    return cases


def _symmetry_cases(rng: random.Random, n: int) -> list[Case]:
    cases = []
    checks = (("reflect-j", "P"), ("swap-q", "Q"), ("negate-both", "P"), ("negate-both", "Q"))
    for _ in range(n):
        idx, z = _triple(rng), _z_off_cut(rng)
        for rule, kind in checks:
            cases.append(Case({"check": rule, "kind": kind, **_idx_inputs(idx), "z": _c(z)},
                              lambda r=rule, k=kind, i=idx, w=z: _from_residual(symmetry_residual(r, i, w, kind=k)),
                              TOLERANCE["symmetry"]))
    return cases


RECURRENCE_POINTS = ((1.5, None), (2 + 1j, None), (5.0, None), (-3 + 0.5j, Side.ABOVE))


def _recurrence_cases(rng: random.Random, n: int) -> list[Case]:
    cases = []
    for s in range(n):
        idx = _triple(rng)
        z, side = RECURRENCE_POINTS[s % len(RECURRENCE_POINTS)]
        order = 1 + (s // len(RECURRENCE_POINTS)) % 2
        for rule in RULE_IDS + ("iterated",):
            for kind in ("P", "Q"):
                inputs = {"check": rule, "kind": kind, **_idx_inputs(idx), "z": _c(z)}
                if rule == "iterated":
                    run = (lambda k=kind, i=idx, w=z, sd=side:
                           _from_residual(iterated_half_step_residual(k, i, Argument(w, sd))))
                elif rule.startswith("deriv"):
                    inputs["n"] = order
                    run = (lambda r=rule, k=kind, i=idx, w=z, sd=side, o=order:
                           _from_residual(recurrence_residual(_rule(r, o), k, i, Argument(w, sd))))
                else:
                    run = (lambda r=rule, k=kind, i=idx, w=z, sd=side:
                           _from_residual(recurrence_residual(r, k, i, Argument(w, sd))))
                cases.append(Case(inputs, run, TOLERANCE["recurrence"]))
    return cases


def _rule(rule_id: str, order: int):
    from .recurrences import RecurrenceRule
    return RecurrenceRule(rule_id, order)


def _connection_cases(rng: random.Random, n: int) -> list[Case]:
    checks = {"q-from-p": connection_qpp, "q-degree-difference": connection_qq_difference,
              "reflect-q": lambda i, w: reflect_argument("q", i, w),
              "reflect-p-mu": lambda i, w: reflect_argument("p-mu", i, w),
              "reflect-p-nu": lambda i, w: reflect_argument("p-nu", i, w),
              "reflect-p-pair": lambda i, w: reflect_argument("p-pair", i, w)}
    cases = []
    for _ in range(n):
        idx, z = _triple(rng), _z_off_cut(rng)
        for name, fn in checks.items():
            cases.append(Case({"check": name, **_idx_inputs(idx), "z": _c(z)},
                              lambda f=fn, i=idx, w=z: _from_residual(f(i, w)), TOLERANCE["connection"]))
    return cases


def _discontinuity_cases(rng: random.Random, n: int) -> list[Case]:
    cases = []
    for _ in range(n):
        idx = _triple(rng)
        x_left, x_right = -rng.uniform(1.1, 5.0), rng.uniform(-0.9, 0.9)
        for kind in DISCONTINUITY_KINDS:
            x = x_left if kind.endswith("left") else x_right
            # exact boundary values, then the off-axis pair x +- i eps
            for eps in (0.0, ONE_SIDED_EPS):
                cases.append(Case({"check": kind, **_idx_inputs(idx), "x": x, "eps": eps},
                                  lambda k=kind, i=idx, xx=x, e=eps: _from_residual(discontinuity_residual(k, i, xx, e)),
                                  TOLERANCE["discontinuity"]))
    return cases


def _ratio_case(name: str, inputs: dict, make, tol: float) -> Case:
    def run() -> Outcome:
        cmp = make()
        return Outcome(cmp.ratio_error, abs(cmp.target.value), cmp.value.flags)
    return Case({"check": name, **inputs}, run, tol)


def _contraction_case(name: str, inputs: dict, make, t: float) -> Case:
    """err(2T) / err(T) for a family whose ratio tends to 1."""
    def run() -> Outcome:
        e1, e2 = make(t).ratio_error, make(2 * t).ratio_error
        return Outcome(e2 / e1 if e1 else 0.0, e1)
    return Case({"check": name + "-contraction", "T": t, **inputs}, run, 0.6, fixed=True)


def _asymptotic_cases(rng: random.Random, n: int) -> list[Case]:
    del rng, n  # fixed configurations: the limits are checked at stated parameter values
    cases = []
    t = 1e6
    for mu, nu, y in ((0.2, 1.2, 2.0), (0.3, 0.3, 2.405), (-0.4, 0.6, 1.0), (0.1 + 0.2j, 1.1 + 0.2j, 3.0)):
        def run(mu=mu, nu=nu, y=y) -> Outcome:
            cmp = limit_bessel(mu, nu, t, y)
            return Outcome(cmp.abs_diff, abs(cmp.target.value), cmp.value.flags)
        cases.append(Case({"check": "bessel-limit", "mu": _c(mu), "nu": _c(nu), "t": t, "y": y}, run, 5e-4))
    for a, kappa, x in ((0.3, 1.0, 1.5), (-0.5, 0.5, 0.8), (0.8, 2.0, 2.5)):
        cases.append(_ratio_case("kummer-limit", {"a": a, "kappa": kappa, "t": t, "x": x},
                                 lambda a=a, k=kappa, x=x: limit_kummer(a, k, t, x), 5e-4))
    for kappa, x in ((1.0, 1.5), (0.0, 0.7)):
        def corner(kappa=kappa, x=x) -> Outcome:
            near = limit_kummer(1e-7, kappa, t, x)
            bes = limit_bessel(-kappa / 2, kappa / 2, t, 2 * math.sqrt(x))
            return _absolute(near.target.value, bes.target.value)
        cases.append(Case({"check": "kummer-bessel-corner", "kappa": kappa, "t": t, "x": x}, corner, 1e-3))

    q_large = {"mu=nu=0": (0.0, 0.0), "imaginary-orders": (0.3j, -0.2j)}
    for label, (mu, nu) in q_large.items():
        fam = lambda jj, mu=mu, nu=nu: asym_q_large_j((jj, mu, nu), 1.0)  # noqa: E731
        inputs = {"family": label, "alpha": 1.0}
        cases.append(_ratio_case("q-large-degree", {**inputs, "j": 50.0}, lambda f=fam: f(50.0), 0.02))
        cases.append(_ratio_case("q-large-degree", {**inputs, "j": 80.0}, lambda f=fam: f(80.0), 0.05))
        for tt in (20.0, 40.0):
            cases.append(_contraction_case("q-large-degree", inputs, fam, tt))

    p_large = lambda k: asym_p_large_numu((0.7, -k / 2 + 0.3, k / 2 + 0.3), 1.2)  # noqa: E731
    p_inputs = {"j": 0.7, "nu+mu": 0.6, "alpha": 1.2}
    cases.append(_ratio_case("p-large-order-difference", {**p_inputs, "nu-mu": 80.0}, lambda: p_large(80.0), 0.05))
    for tt in (20.0, 40.0):
        cases.append(_contraction_case("p-large-order-difference", p_inputs, p_large, tt))

    families = []
    for d in (0.0, 1.0):
        families.append(({"branch": "j", "j-mu": d, "nu": 0.4, "alpha": 1.1},
                         lambda jj, d=d: asym_q_fixed_jmu((jj, jj - d, 0.4), 1.1, "j")))
    for d in (0.5, 1.5):
        # real j puts the reflected branch on the oscillating side; a fixed imaginary part removes it
        families.append(({"branch": "-j-1", "j-mu": d, "im j": 3.0, "nu": 0.4, "alpha": 1.1},
                         lambda jj, d=d: asym_q_fixed_jmu((jj + 3j, jj + 3j - d, 0.4), 1.1, "-j-1")))
    for inputs, fam in families:
        cases.append(_ratio_case("q-large-degree-and-order", {**inputs, "j": 80.0}, lambda f=fam: f(80.0), 0.05))
        for tt in (20.0, 40.0):
            cases.append(_contraction_case("q-large-degree-and-order", inputs, fam, tt))
    return cases


def _wigner_cases(rng: random.Random, n: int) -> list[Case]:
    xs = sorted(rng.uniform(-1.0, 1.0) for _ in range(max(n - 2, 0))) + [-1.0, 1.0]
    spins = admissible_spins(8)
    tol = TOLERANCE["wigner"]
    matrices: dict = {}

    def matrix(tj: int, x: float):
        key = (tj, x)
        if key not in matrices:
            matrices[key] = wigner_d_matrix(tj, x)
        return matrices[key]

    def spin_inputs(s: SpinIndex) -> dict:
        return {"2j": s.twice_j, "2mu": s.twice_mu, "2nu": s.twice_nu}

    def oracle(s: SpinIndex) -> Outcome:
        worst, flags = 0.0, set()
        row, col = (s.twice_j - s.twice_mu) // 2, (s.twice_j - s.twice_nu) // 2
        for x in xs:
            v = wigner_d(s, x)
            flags |= v.flags
            worst = max(worst, abs(v.value.real - matrix(s.twice_j, x)[row, col]))
        return Outcome(worst, 1.0, frozenset(flags))

    def symmetry(rule: str, s: SpinIndex) -> Outcome:
        worst = 0.0
        for x in xs:
            worst = max(worst, abs(wigner_d(s, x).value - symmetry_rhs(rule, s, x).value))
        return Outcome(worst, 1.0)

    def unitarity(tj: int, tm: int) -> Outcome:
        worst = 0.0
        for x in xs:
            total = math.fsum(wigner_d(SpinIndex(tj, tm, tn), x).value.real ** 2 for tn in range(-tj, tj + 1, 2))
            worst = max(worst, abs(total - 1.0))
        return Outcome(worst, 1.0)

    cases = [Case({"check": "oracle", **spin_inputs(s)}, lambda s=s: oracle(s), tol) for s in spins]
    for rule in SYMMETRY_RULES:
        cases += [Case({"check": rule, **spin_inputs(s)}, lambda r=rule, s=s: symmetry(r, s), 1e-11) for s in spins]
    for tj in range(9):
        for tm in range(-tj, tj + 1, 2):
            cases.append(Case({"check": "unitarity", "2j": tj, "2mu": tm}, lambda a=tj, b=tm: unitarity(a, b), tol))
    for tm, tn in ((0, 0), (2, 0), (2, -4), (1, 1), (1, -3)):
        degrees = [tj for tj in range(9) if tj % 2 == tm % 2 and tj >= max(abs(tm), abs(tn))]
        for a in degrees:
            for b in degrees:
                def ortho(a=a, b=b, tm=tm, tn=tn) -> Outcome:
                    v = d_orthogonality(SpinIndex(a, tm, tn), SpinIndex(b, tm, tn))
                    target = 2.0 / (a + 1) if a == b else 0.0
                    return Outcome(abs(v.value - target), 1.0, v.flags)
                cases.append(Case({"check": "orthogonality", "2j": a, "2l": b, "2mu": tm, "2nu": tn}, ortho, tol))
    return cases


def _integral_cases(rng: random.Random, n: int) -> list[Case]:
    cases = []
    for _ in range(n):
        j = rng.uniform(-0.4, 1.5)
        l = j + rng.uniform(0.3, 1.5)
        mu = rng.uniform(-0.6, 0.6)
        nu = mu + rng.uniform(-0.6, 0.8)
        cases.append(Case({"check": "pq-integral", "j": j, "l": l, "mu": mu, "nu": nu},
                          lambda a=(j, l, mu, nu): _from_residual(ids.pq_integral_check(*a)), 1e-6))
    # both orthogonal systems with 1 <= j <= 5: j - nu = n (system 1) or j + mu = n (system 2)
    for n_deg in range(1, 6):
        for system in (1, 2):
            for _ in range(2):
                mu, nu = rng.uniform(-0.45, 0.45), rng.uniform(-0.45, 0.45)
                j = nu + n_deg if system == 1 else n_deg - mu
                if j > 5.0:
                    j -= 1.0
                idx = IndexTriple(j, mu, nu)
                cases.append(Case({"check": "norm", "system": system, **_idx_inputs(idx)},
                                  lambda i=idx: _from_residual(ids.norm_check(i)), 1e-8))
    for system in (1, 2):
        for _ in range(3):
            mu, nu = rng.uniform(-0.45, 0.45), rng.uniform(-0.45, 0.45)
            n1, n2 = rng.sample(range(0, 5), 2)
            if system == 1:
                j1, j2 = nu + n1, nu + n2
            else:
                j1, j2 = n1 - mu, n2 - mu

            def cross(a=(j1, j2, mu, nu)) -> Outcome:
                v = ids.cross_orthogonality(*a)
                return Outcome(abs(v.value), 1.0, v.flags)
            cases.append(Case({"check": "cross-orthogonality", "system": system, "j1": j1, "j2": j2, "mu": mu, "nu": nu},
                              cross, 1e-8))
    for _ in range(4):
        mu, nu = rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)
        z, zeta = rng.uniform(1.1, 1.6), rng.uniform(3.0, 5.0)

        def series(a=(mu, nu, z, zeta)) -> Outcome:
            v = ids.generating_series_partial_sum(*a, 40)
            return _absolute(v.value, 1.0 / (a[3] - a[2]), v.flags)
        cases.append(Case({"check": "generating-series", "mu": mu, "nu": nu, "z": z, "zeta": zeta, "N": 40}, series, 1e-6))
    for kinds in (("P", "P"), ("Q", "Q"), ("P", "Q")):
        j1, j2 = rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0) + 0.3
        mu, nu = rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)
        cases.append(Case({"check": "product-integral", "kinds": "".join(kinds), "j1": j1, "j2": j2, "mu": mu, "nu": nu},
                          lambda a=(j1, j2, mu, nu), k=kinds: _from_residual(ids.product_integral_identity(*a, kinds=k)),
                          1e-8))
    return cases


def _monotone_case(kind: str, inputs: dict, args: tuple) -> list[Case]:
    """Residual at the largest truncation order, plus the worst ratio between consecutive orders."""
    memo: dict = {}

    def residuals() -> list[float]:
        if "r" not in memo:
            memo["r"] = [ids.series_addition_check(kind, *args, n_max=n).relative for n in SERIES_ORDERS]
        return memo["r"]

    def final() -> Outcome:
        return Outcome(residuals()[-1], 1.0)

    def monotone() -> Outcome:
        r = residuals()
        return Outcome(max(b / max(a, SERIES_FLOOR) for a, b in zip(r, r[1:])), r[0])

    base = {"check": f"series-{kind}", **inputs}
    return [Case({**base, "N": SERIES_ORDERS[-1]}, final, TOLERANCE["addition"]),
            Case({**base, "check": f"series-{kind}-monotone", "N": list(SERIES_ORDERS)}, monotone, 0.9, fixed=True)]


def _addition_cases(rng: random.Random, n: int) -> list[Case]:
    cases = []
    configs = []
    for _ in range(n):
        j = complex(rng.uniform(0.5, 2.5), rng.uniform(-0.3, 0.3))
        mu, lam, nu = (rng.uniform(-0.4, 0.4) for _ in range(3))
        z1, z2 = rng.uniform(1.5, 3.0), rng.uniform(1.5, 3.0)
        configs.append((j, mu, lam, nu, z1, z2))
    for j, mu, lam, nu, z1, z2 in configs:
        inputs = {"j": _c(j), "mu": mu, "lam": lam, "nu": nu, "z1": z1, "z2": z2}
        cases.append(Case({"check": "multiplication", **inputs},
                          lambda a=(j, mu, lam, nu, z1, z2): _from_residual(ids.multiplication_formula_check(*a)), 1e-6))
    for j, mu, _, nu, z1, z2 in configs[:3]:
        alpha = rng.uniform(-0.8, 0.8)
        cases.append(Case({"check": "addition-contour", "j": _c(j), "mu": mu, "nu": nu, "alpha": alpha, "z1": z1, "z2": z2},
                          lambda a=(j, mu, nu, alpha, z1, z2): _from_residual(ids.addition_contour_check(*a)),
                          TOLERANCE["addition"]))
    for j, mu, lam, nu, z1, z2 in configs[:4]:
        hi, lo = max(z1, z2) + 0.5, min(z1, z2)
        for variant, (a, b) in (("QP", (hi, lo)), ("PQ", (lo, hi))):
            cases.append(Case({"check": f"mixed-{variant}", "j": _c(j), "mu": mu, "lam": lam, "nu": nu, "z1": a, "z2": b},
                              lambda v=variant, t=(j, mu, lam, nu, a, b): _from_residual(ids.mixed_pq_check(v, *t)),
                              TOLERANCE["addition"]))
    for j, mu, _, nu, z1, _ in configs[:4]:
        idx = IndexTriple(j, mu, nu)
        cases.append(Case({"check": "q-integral", **_idx_inputs(idx), "z": z1},
                          lambda i=idx, z=z1: _from_residual(ids.q_integral_check(i, z)), TOLERANCE["addition"]))
    for j, mu, _, nu, _, _ in configs[:3]:
        theta = rng.choice((-1.0, 1.0)) * rng.uniform(0.3, 2.0)
        # the lam-sum converges like e^{-|n| (acosh big - acosh small)}; keep that gap >= 0.8
        b_small = rng.uniform(0.6, 1.0)
        small, big = math.cosh(b_small), math.cosh(b_small + rng.uniform(0.8, 1.4))
        for z1, z2 in ((big, small), (small, big)):
            inputs = {"j": _c(j), "mu": mu, "nu": nu, "theta": theta, "z1": z1, "z2": z2}
            for kind in ("Q", "P"):
                cases += _monotone_case(kind, inputs, (j, mu, nu, theta, z1, z2))
    for _ in range(4):
        z1, z2 = rng.uniform(1.2, 4.0), rng.uniform(1.2, 4.0)
        for kind, par in (("hyperbolic", rng.uniform(-2.0, 2.0)), ("trigonometric", rng.uniform(-3.0, 3.0))):
            def tri(cfg=TriangleConfig(z1, z2, par, kind)) -> Outcome:
                t = solve_triangle(cfg)
                back = recover_z1(t)
                return Outcome(max(t.consistency, abs(back - t.z1) / t.z1), t.z1)
            cases.append(Case({"check": "triangle", "kind": kind, "z1": z1, "z2": z2, "parameter": par}, tri, 1e-11))
    return cases


_BUILDERS = {"ode": _ode_cases, "symmetry": _symmetry_cases, "recurrence": _recurrence_cases,
             "connection": _connection_cases, "discontinuity": _discontinuity_cases,
             "asymptotic": _asymptotic_cases, "wigner": _wigner_cases, "integrals": _integral_cases,
             "addition": _addition_cases}


def build_cases(suite: str, seed: int = 0, samples: Optional[int] = None) -> list[Case]:
    if suite not in _BUILDERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    n = DEFAULT_SAMPLES[suite] if samples is None else int(samples)
    if n < 0:
        raise ValueError("samples must be nonnegative")
    # a string seed is hashed the same way on every platform and Python run
    rng = random.Random(f"{suite}/{int(seed)}")
    return _BUILDERS[suite](rng, n)


def run_suite(suite: str, seed: int = 0, samples: Optional[int] = None, tolerance: Optional[float] = None,
              threads: int = 1) -> VerifyReport:
    cases = build_cases(suite, seed, samples)
    if tolerance is not None and not tolerance > 0:
        raise ValueError("tolerance must be positive")
    run = lambda c: _execute(c, tolerance)  # noqa: E731
    if threads > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(run, cases))
    else:
        records = [run(c) for c in cases]
    n = DEFAULT_SAMPLES[suite] if samples is None else int(samples)
    return VerifyReport(suite, int(seed), n, TOLERANCE[suite] if tolerance is None else tolerance, records)


def run_all(seed: int = 0, samples: Optional[int] = None, tolerance: Optional[float] = None,
            threads: int = 1) -> list[VerifyReport]:
    return [run_suite(s, seed, samples, tolerance, threads) for s in SUITES]
