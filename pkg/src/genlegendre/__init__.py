"""Generalized Legendre functions P^j_{mu nu}, Q^j_{mu nu} and the rotation d-functions.

Every evaluator returns an :class:`FnValue` carrying the value, an absolute
error bound and status flags (pole, identically zero, degraded precision).
"""

from .asymptotics import (
    AsymptoticComparison,
    AsymptoticParams,
    asym_p_large_numu,
    asym_q_fixed_jmu,
    asym_q_large_j,
    limit_bessel,
    limit_kummer,
)
from .foundations import branch_log, branch_power, gamma, gamma_ratio, log_gamma, reciprocal_gamma
from .hypergeometric import bessel_j, hyp2f1_derivative, hyp2f1_regularized, kummer_phi_regularized
from .legendre import (
    Argument,
    IndexTriple,
    apply_index_symmetry,
    connection_qpp,
    connection_qq_difference,
    derivative,
    discontinuity,
    evaluate,
    ode_residual,
    p_first_kind,
    p_tilde,
    q_second_kind,
    reduce_to_associated_legendre,
    reduce_to_jacobi,
    reflect_argument,
    wronskian_closed_form,
)
from .quadrature import Interval, QuadratureSpec, integrate
from .recurrences import RULE_IDS, RecurrenceRule, recurrence_residual, step_j
from .suites import SUITES, VerifyReport, run_all, run_suite
from .triangle import TriangleConfig, solve_triangle
from .types import (
    BranchAmbiguityError,
    DegenerateCoefficientError,
    DomainError,
    Flag,
    FnValue,
    GenLegendreError,
    InvalidIndexError,
    NonConvergenceError,
    PoleError,
    PreconditionError,
    Residual,
    Side,
)
from .wigner import SpinIndex, d_orthogonality, wigner_d

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
