"""Log-space bounds on ``E(R^k)`` and the saddle-point approximation of ``S(k, j)``.

All quantities are natural logarithms; ``-inf`` stands for log 0. Working in
log space is mandatory here since ``n^k`` overflows a double already for
moderate ``k``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import List, Union

from .asymptote import chi_of_tau
from .errors import DomainError
from .exact import MomentQuery, raw_moment_stirling, sign_and_log, stirling_row

NEG_INF = -math.inf


@dataclass(frozen=True)
class LogValue:
    log_e: float
    descriptor: str = ""

    @property
    def is_zero(self) -> bool:
        return self.log_e == NEG_INF

    def __float__(self) -> float:
        return self.log_e


def log_of_exact(x: Union[Fraction, int], descriptor: str = "exact") -> LogValue:
    sign, value = sign_and_log(x)
    if sign < 0:
        raise DomainError("log_of_exact requires x >= 0")
    return LogValue(value, descriptor)


def _log_p(q: MomentQuery) -> float:
    return sign_and_log(q.p)[1]


def log_trivial_lower(q: MomentQuery) -> LogValue:
    """``k log(np)``: Jensen on ``R^k`` with ``E(R) = np``."""
    lp = _log_p(q)
    if lp == NEG_INF:
        return LogValue(NEG_INF, "trivial_lower")
    return LogValue(q.k * (math.log(q.n) + lp), "trivial_lower")


def log_trivial_upper_n(q: MomentQuery) -> LogValue:
    """``k log n``, since ``R <= n``."""
    return LogValue(q.k * math.log(q.n), "trivial_upper_n")


def log_trivial_upper_p(q: MomentQuery) -> LogValue:
    """``k log n + log p``, from ``p^j <= p`` in the Stirling sum."""
    lp = _log_p(q)
    if lp == NEG_INF:
        return LogValue(NEG_INF, "trivial_upper_p")
    return LogValue(q.k * math.log(q.n) + lp, "trivial_upper_p")


def log_jensen_lower(q: MomentQuery) -> LogValue:
    """``k log n + E(S) log p`` with ``E(S) = n (1 - (1 - 1/n)^k)`` distinct balls drawn."""
    lp = _log_p(q)
    if lp == NEG_INF:
        return LogValue(NEG_INF, "jensen_lower")
    # E(S) computed exactly; it is a ratio of integers
    expected_distinct = q.n - Fraction((q.n - 1) ** q.k, q.n ** (q.k - 1))
    return LogValue(q.k * math.log(q.n) + float(expected_distinct) * lp, "jensen_lower")


def log_ahle_upper(q: MomentQuery) -> LogValue:
    """``k (log k - log log(1 + k/(np)))``."""
    if q.p == 0:
        raise DomainError("the Ahle bound requires p > 0")
    ratio = Fraction(q.k) / (q.n * q.p)
    inner = math.log1p(float(ratio)) if ratio < 1e300 else sign_and_log(ratio)[1]
    inner = max(inner, 1e-300)
    return LogValue(q.k * (math.log(q.k) - math.log(inner)), "ahle_upper")


@dataclass(frozen=True)
class BoundReport:
    query: MomentQuery
    log_exact: LogValue
    log_trivial_lower: LogValue
    log_jensen_lower: LogValue
    log_trivial_upper_n: LogValue
    log_trivial_upper_p: LogValue
    log_ahle_upper: LogValue

    def violations(self, slack: float = 1e-9) -> List[str]:
        """Names of the ordering relations that fail by more than ``slack``."""
        e = self.log_exact.log_e
        checks = {
            "trivial_lower <= jensen_lower": (self.log_trivial_lower.log_e, self.log_jensen_lower.log_e),
            "jensen_lower <= exact": (self.log_jensen_lower.log_e, e),
            "exact <= ahle_upper": (e, self.log_ahle_upper.log_e),
            "exact <= trivial_upper_p": (e, self.log_trivial_upper_p.log_e),
            "trivial_upper_p <= trivial_upper_n": (
                self.log_trivial_upper_p.log_e,
                self.log_trivial_upper_n.log_e,
            ),
        }
        return [name for name, (lo, hi) in checks.items() if lo > hi + slack]

    @staticmethod
    def csv_header() -> List[str]:
        names = [f.name for f in fields(BoundReport) if f.name != "query"]
        return ["n", "p", "k", *names]

    def csv_row(self) -> list:
        q = self.query
        values = [getattr(self, f.name).log_e for f in fields(self) if f.name != "query"]
        return [q.n, q.p, q.k, *values]


def bound_report(q: MomentQuery) -> BoundReport:
    if q.p == 0:
        raise DomainError("bound_report requires p > 0")
    return BoundReport(
        query=q,
        log_exact=log_of_exact(raw_moment_stirling(q)),
        log_trivial_lower=log_trivial_lower(q),
        log_jensen_lower=log_jensen_lower(q),
        log_trivial_upper_n=log_trivial_upper_n(q),
        log_trivial_upper_p=log_trivial_upper_p(q),
        log_ahle_upper=log_ahle_upper(q),
    )


def temme_sqrt_factor(k: int, j: int) -> float:
    """``sqrt((k - j) / (k (chi - k/j + 1)))`` from the Stirling approximation; lies in (0, 1]."""
    _check_kj(k, j)
    chi = chi_of_tau(j / k)
    return math.sqrt((k - j) / (k * (chi - k / j + 1.0)))


def temme_stirling(k: int, j: int) -> LogValue:
    """Saddle-point approximation of ``log S(k, j)`` for ``1 <= j <= k - 1``."""
    _check_kj(k, j)
    chi = chi_of_tau(j / k)
    log_binom = math.lgamma(k + 1) - math.lgamma(j + 1) - math.lgamma(k - j + 1)
    m = k - j
    value = (
        log_binom
        + m * (math.log(m) - 1.0)
        + j * (chi + math.log1p(-math.exp(-chi)))
        - k * math.log(chi)
        + math.log(temme_sqrt_factor(k, j))
    )
    return LogValue(value, f"temme({k},{j})")


def temme_relative_error(k: int, j: int) -> float:
    """``|temme - log S(k, j)| / log S(k, j)`` against the exact Stirling number."""
    exact = log_of_exact(stirling_row(k)[j]).log_e
    return abs(temme_stirling(k, j).log_e - exact) / abs(exact)


def _check_kj(k: int, j: int) -> None:
    if not (1 <= j <= k - 1):
        raise DomainError(f"the Stirling approximation needs 1 <= j <= k - 1, got k={k}, j={j}")
