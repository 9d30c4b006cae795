"""Exact raw moments of the binomial distribution and their large-k asymptote."""
from .analysis import (
    ConvergenceRow,
    MonteCarloEstimate,
    PropertyReport,
    converge_table,
    klaner_check,
    mc_all_red,
    unimodality_check,
)
from .asymptote import (
    SaddleSolution,
    chi_of_tau,
    chi_star,
    log_psi,
    psi_of_tau,
    psi_prime,
    tau_of_chi,
    tau_star,
)
from .bounds import BoundReport, LogValue, bound_report, log_of_exact, temme_stirling
from .errors import DomainError
from .exact import (
    MomentQuery,
    StirlingRow,
    all_red_probability,
    falling_factorial,
    raw_moment_direct,
    raw_moment_stirling,
    sample_size_pmf,
    stirling_row,
)
from .lambertw import WBranch, lambert_w

__version__ = "0.1.0"
