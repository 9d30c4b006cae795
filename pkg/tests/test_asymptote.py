import itertools
import math

import mpmath
import numpy as np
import pytest

from oracles import psi_mp, saddle_by_bisection
from rawmoments import DomainError
from rawmoments.asymptote import (
    chi_of_tau,
    chi_star,
    grid_max_log_psi,
    log_ahle_ceiling,
    log_jensen_floor,
    log_psi,
    psi_of_tau,
    psi_prime,
    tau_of_chi,
    tau_star,
)

GRID = list(itertools.product([0.25, 0.5, 1.0, 2.0, 5.0], [0.1, 0.3, 0.5, 0.7, 0.9]))
# [0.1, 0.9] x [0.5, 3] corners plus interior, 20 points
GRID20 = list(itertools.product([0.3, 0.8, 1.0, 1.7, 3.0], [0.15, 0.4, 0.6, 0.85]))

CHI0 = 1.2784645427610738  # bisection oracle, beta=1 p=1/2
TAU0 = 0.5643765885603998
LOG_PSI = -0.4146826377988715


def test_chi_star_matches_bisection():
    chi, _ = saddle_by_bisection(1, 0.5)
    assert chi_star(1, 0.5) == pytest.approx(float(chi), abs=1e-13)
    assert chi_star(1, 0.5) == pytest.approx(CHI0, abs=1e-13)


def test_chi_star_beta_two_defining_equation():
    chi = chi_star(2, 0.5)
    assert (chi - 0.5) * math.exp(chi - 0.5) == pytest.approx(math.exp(-0.5) / 2, abs=1e-10)


def test_chi_star_tends_to_inverse_beta_as_p_to_one():
    assert chi_star(1, 1 - 1e-9) == pytest.approx(1.0, abs=1e-8)


def test_tau_star_matches_bisection():
    _, tau = saddle_by_bisection(1, 0.5)
    assert tau_star(1, 0.5) == pytest.approx(float(tau), abs=1e-13)


@pytest.mark.parametrize("beta, p", GRID20)
def test_tau_star_consistent_with_substitution(beta, p):
    tau = tau_star(beta, p)
    assert tau == pytest.approx(tau_of_chi(chi_star(beta, p)), abs=1e-10)
    assert 0 < tau < min(1.0, beta)


def test_tau_of_chi_values():
    assert tau_of_chi(math.log(2)) == pytest.approx(0.7213475204444817, abs=1e-15)
    assert tau_of_chi(CHI0) == pytest.approx(TAU0, abs=1e-12)
    assert tau_of_chi(1e-12) == pytest.approx(1.0, abs=1e-11)
    with pytest.raises(DomainError):
        tau_of_chi(0.0)


def test_chi_of_tau_inverse():
    ts = np.arange(1, 10) / 10
    assert np.allclose(tau_of_chi(chi_of_tau(ts)), ts, rtol=0, atol=1e-9)
    assert chi_of_tau(TAU0) == pytest.approx(CHI0, abs=1e-9)
    assert chi_of_tau(1 - 1e-8) < 1e-3
    with pytest.raises(DomainError):
        chi_of_tau(1.0)


def test_psi_at_maximiser_against_high_precision():
    chi, tau = saddle_by_bisection(1, 0.5)
    with mpmath.workdps(40):
        expected = float(psi_mp(chi, tau, 1, 0.5))
    assert psi_of_tau(TAU0, 1, 0.5) == pytest.approx(expected, abs=1e-12)
    assert expected == pytest.approx(LOG_PSI, abs=1e-14)


def test_psi_is_maximal_at_tau0():
    centre = psi_of_tau(TAU0, 1, 0.5)
    assert centre >= psi_of_tau(TAU0 - 0.05, 1, 0.5)
    assert centre >= psi_of_tau(TAU0 + 0.05, 1, 0.5)


def test_psi_falls_near_right_edge():
    assert psi_of_tau(0.999, 1, 0.5) < LOG_PSI - 1


def test_psi_domain_errors():
    for tau in [0.0, 1.0, 1.2]:
        with pytest.raises(DomainError):
            psi_of_tau(tau, 1, 0.5)
    with pytest.raises(DomainError):
        psi_of_tau(0.5, 0.5, 0.5)
    with pytest.raises(DomainError):
        log_psi(1, 1.0)
    with pytest.raises(DomainError):
        log_psi(-1, 0.5)


def test_psi_prime_finite_difference():
    h = 1e-6
    fd = (psi_of_tau(0.3 + h, 1, 0.5) - psi_of_tau(0.3 - h, 1, 0.5)) / (2 * h)
    assert psi_prime(0.3, 1, 0.5) == pytest.approx(fd, abs=1e-5)


def test_psi_prime_sign_change():
    assert psi_prime(TAU0 - 0.05, 1, 0.5) > 0 > psi_prime(TAU0 + 0.05, 1, 0.5)


@pytest.mark.parametrize("beta, p", GRID20)
def test_psi_prime_vanishes_at_tau_star(beta, p):
    assert abs(psi_prime(tau_star(beta, p), beta, p)) <= 1e-8


@pytest.mark.parametrize("beta, p", GRID)
def test_saddle_relations(beta, p):
    s = log_psi(beta, p)
    e = math.exp(s.chi0)
    assert s.chi0 - 1 / beta > -1
    assert abs(1 / s.chi0 - s.tau0 * e / (e - 1)) <= 1e-9
    assert abs(e * s.chi0 * (beta - s.tau0) * p - 1) <= 1e-9


@pytest.mark.parametrize("beta, p", GRID)
def test_log_psi_between_limit_bounds(beta, p):
    lp = log_psi(beta, p).log_psi
    assert log_jensen_floor(beta, p) <= lp <= min(math.log(beta), log_ahle_ceiling(beta, p))


def test_log_psi_example_and_sandwich():
    s = log_psi(1, 0.5)
    assert s.log_psi == pytest.approx(LOG_PSI, abs=1e-12)
    assert s.psi == pytest.approx(0.6605498810078087, abs=1e-12)
    assert 0.5 <= s.psi <= 1.0
    assert math.exp(log_jensen_floor(1, 0.5)) == pytest.approx(0.6452273245437927, abs=1e-14)


def test_log_psi_matches_grid_maximum_example():
    assert grid_max_log_psi(1, 0.5) == pytest.approx(LOG_PSI, abs=1e-6)


def test_printed_product_differs_by_tau_log_p_minus_one():
    s = log_psi(1, 0.5)
    assert s.theorem_form_value == pytest.approx(2.6551825339186727, rel=1e-12)
    assert s.log_psi - s.psi_theorem_form == pytest.approx(s.tau0 * math.log(0.5) - 1, abs=1e-13)
    assert s.theorem_form_exceeds_ceiling
