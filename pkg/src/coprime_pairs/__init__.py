"""Coprime-pair counting: closed form, brute-force oracle, and the
remainder-operator tools it is built from."""

from .counting import CaseData, LiftVector, case_data, eta, eta_bar, g_closed, q_mixed, q_same, selector_h
from .errors import ParameterError, RangeError
from .kernels import BACKENDS, DEFAULT as DEFAULT_BACKEND, get_backend
from .oracle import g_oracle
from .pairs import (
    CountVector,
    diagonal,
    ind_zero,
    kappa,
    kappa_bar,
    lambda_bar,
    lambda_count,
    nu,
    nu_bar,
    step_H,
    tau,
)
from .params import PrimeParams, compute_params, f_selector, is_prime
from .residue import delta, delta_neg
from .solver import (
    EuclidTrace,
    RemainderEquation,
    SolutionSet,
    euclid_trace,
    minimal_solution_coprime,
    solve,
    solve_with_trace,
)

__version__ = "0.1.0"
