"""Leading-order asymptote of ``E(R^k)`` when ``n / k -> beta``.

Writing ``j = tau k`` for the summation index of the Stirling form, the log
of the summand per unit ``k`` (after removing ``k log k``) is

    psi(tau) = tau log(e^chi - 1) - log chi + tau log(beta/tau - 1)
               - beta log(1 - tau/beta) + tau log p - 1,

where ``chi = chi_of_tau(tau)`` is the positive saddle point of
``-log x + tau log(e^x - 1)``. The maximiser is available in closed form
through W_0 and ``E(R^k) = k^k (Psi + o(1))^k`` with ``log Psi = max psi``.

Functions accept floats or numpy arrays unless stated otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .lambertw import lambert_w

TAU_GUARD = 1e-9


class AsymptoteInputs(NamedTuple):
    beta: float
    p: float


def validate_inputs(beta, p) -> AsymptoteInputs:
    beta, p = float(beta), float(p)
    if not (beta > 0 and math.isfinite(beta)):
        raise DomainError(f"beta must be positive and finite, got {beta}")
    if not 0 < p < 1:
        raise DomainError(f"p must lie strictly between 0 and 1, got {p}")
    return AsymptoteInputs(beta, p)


@dataclass(frozen=True)
class SaddleSolution:
    """Location and value of the maximum of ``psi``.

    ``psi_theorem_form`` is the log of the closed-form product
    ``beta^beta (e^chi - 1)^tau / (tau^tau (beta - tau)^(beta - tau) chi)``
    at ``(chi0, tau0)``. It differs from ``log_psi`` by ``tau0 log p - 1``
    and is kept only for comparison.
    """

    beta: float
    p: float
    chi0: float
    tau0: float
    log_psi: float
    psi_theorem_form: float

    @property
    def psi(self) -> float:
        return math.exp(self.log_psi)

    @property
    def theorem_form_value(self) -> float:
        return math.exp(self.psi_theorem_form)

    @property
    def theorem_form_exceeds_ceiling(self) -> bool:
        """True when the closed-form product breaks ``Psi <= beta`` (from ``E(R^k) <= n^k``)."""
        return self.psi_theorem_form > math.log(self.beta)


def _w0_argument(beta: float, p: float) -> float:
    return math.exp(-1.0 / beta) * (1.0 - p) / (beta * p)


def chi_star(beta, p) -> float:
    """Saddle point at the maximiser: ``1/beta + W_0(e^(-1/beta) (1-p) / (beta p))``."""
    beta, p = validate_inputs(beta, p)
    return 1.0 / beta + lambert_w(_w0_argument(beta, p))


def tau_star(beta, p) -> float:
    """Maximiser of ``psi``: ``beta/(1-p) * (1/(beta W + 1) - p)`` with W as in :func:`chi_star`."""
    beta, p = validate_inputs(beta, p)
    w = lambert_w(_w0_argument(beta, p))
    return beta / (1.0 - p) * (1.0 / (beta * w + 1.0) - p)


def tau_of_chi(chi):
    """``(1 - e^-chi) / chi``, mapping ``chi > 0`` onto ``(0, 1)``."""
    c = np.asarray(chi, dtype=float)
    if not (c > 0).all():
        raise DomainError("tau_of_chi requires chi > 0")
    out = -np.expm1(-c) / c
    return float(out) if out.ndim == 0 else out


def chi_of_tau(tau):
    """Positive saddle point ``W_0(-e^(-1/tau) / tau) + 1/tau`` for ``0 < tau < 1``.

    The other real solution, from W_{-1}, is the spurious ``chi = 0``.
    """
    t = np.asarray(tau, dtype=float)
    if not ((t > 0) & (t < 1)).all():
        raise DomainError("chi_of_tau requires 0 < tau < 1")
    inv = 1.0 / t
    out = lambert_w(-np.exp(-inv) * inv) + inv
    return float(out) if np.ndim(out) == 0 else out


def _guard_tau(tau, beta: float):
    t = np.asarray(tau, dtype=float)
    upper = min(1.0, beta)
    if not ((t > 0) & (t < upper)).all():
        raise DomainError(f"tau must lie strictly inside (0, {upper:g})")
    return np.clip(t, TAU_GUARD, upper - TAU_GUARD)


def psi_of_tau(tau, beta, p):
    """Exponential growth rate of the ``j = tau k`` term of the Stirling sum."""
    beta, p = validate_inputs(beta, p)
    t = _guard_tau(tau, beta)
    chi = np.asarray(chi_of_tau(t))
    out = (
        t * (chi + np.log1p(-np.exp(-chi)))
        - np.log(chi)
        + t * (np.log(beta - t) - np.log(t))
        - beta * np.log1p(-t / beta)
        + t * math.log(p)
        - 1.0
    )
    return float(out) if out.ndim == 0 else out


def psi_prime(tau, beta, p):
    """Derivative of :func:`psi_of_tau`: ``chi + log chi + log(beta - tau) + log p``."""
    beta, p = validate_inputs(beta, p)
    t = _guard_tau(tau, beta)
    chi = np.asarray(chi_of_tau(t))
    out = chi + np.log(chi) + np.log(beta - t) + math.log(p)
    return float(out) if out.ndim == 0 else out


def log_psi(beta, p) -> SaddleSolution:
    """Solve for the maximiser of ``psi`` and return the full :class:`SaddleSolution`."""
    beta, p = validate_inputs(beta, p)
    chi0 = chi_star(beta, p)
    tau0 = tau_star(beta, p)
    value = psi_of_tau(tau0, beta, p)
    printed = (
        beta * math.log(beta)
        + tau0 * (chi0 + math.log1p(-math.exp(-chi0)))
        - tau0 * math.log(tau0)
        - (beta - tau0) * math.log(beta - tau0)
        - math.log(chi0)
    )
    return SaddleSolution(beta, p, chi0, tau0, value, printed)


def grid_max_log_psi(beta, p, points: int = 100_000) -> float:
    """Brute-force ``max psi`` over ``points`` equally spaced interior ``tau`` values."""
    beta, p = validate_inputs(beta, p)
    upper = min(1.0, beta)
    taus = upper * np.arange(1, points + 1) / (points + 1)
    return float(np.max(psi_of_tau(taus, beta, p)))


def log_jensen_floor(beta, p) -> float:
    """``log(beta p^(beta (1 - e^(-1/beta))))``, the limit of the Jensen lower bound."""
    beta, p = validate_inputs(beta, p)
    return math.log(beta) - beta * math.expm1(-1.0 / beta) * math.log(p)


def log_ahle_ceiling(beta, p) -> float:
    """``-log log(1 + 1/(beta p))``, the k-th root limit of Ahle's upper bound over ``k``."""
    beta, p = validate_inputs(beta, p)
    return -math.log(math.log1p(1.0 / (beta * p)))
