"""Exact binomial raw moments with arbitrary-precision integers.

Every value here is an ``int`` or a :class:`fractions.Fraction`; nothing is
rounded. Two independent routes to ``E(R^k)`` are provided:

* :func:`raw_moment_direct` sums ``P(R = i) * i**k`` over the binomial PMF.
* :func:`raw_moment_stirling` sums ``S(k, j) * (n)_j * p**j`` where ``S`` are
  Stirling numbers of the second kind.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

from .errors import DomainError

RationalLike = Union[Fraction, int, str, float]


def as_fraction(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact rational.

    Strings are parsed literally, so ``"0.25"`` and ``"1/4"`` both give 1/4.
    Floats go through their shortest decimal repr (``0.1`` -> 1/10), not
    through their binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a probability")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise DomainError(f"non-finite value {value!r}")
        return Fraction(repr(value))
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse {value!r} as an exact rational") from exc


@dataclass(frozen=True)
class MomentQuery:
    """One raw-moment instance: ``E(R^k)`` for ``R ~ B(n, p)``."""

    n: int
    p: Fraction
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", as_fraction(self.p))
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if int(self.k) != self.k or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")
        if not 0 <= self.p <= 1:
            raise DomainError(f"p must lie in [0, 1], got {self.p}")


@dataclass(frozen=True)
class StirlingRow:
    """Row ``k`` of the Stirling numbers of the second kind, ``entries[j] = S(k, j)``."""

    k: int
    entries: Tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.entries[j]

    def __len__(self) -> int:
        return len(self.entries)


@lru_cache(maxsize=32)
def _stirling_entries(k: int) -> Tuple[int, ...]:
    # S(m+1, j) = S(m, j-1) + j S(m, j), updated in place from the right
    row = [0] * (k + 1)
    row[0] = 1
    for m in range(k):
        for j in range(m + 1, 0, -1):
            row[j] = row[j - 1] + j * row[j]
        row[0] = 0
    return tuple(row)


def stirling_row(k: int) -> StirlingRow:
    """Return ``S(k, 0), ..., S(k, k)`` computed exactly by the triangular recurrence.

    Only one row is kept in memory while building, so the cost is O(k^2)
    big-integer additions and O(k) storage.
    """
    if int(k) != k or k < 1:
        raise DomainError(f"stirling_row requires k >= 1, got {k!r}")
    return StirlingRow(int(k), _stirling_entries(int(k)))


def falling_factorial(n: int, j: int) -> int:
    """``(n)_j = n (n-1) ... (n-j+1)``; zero when ``j > n``, one when ``j == 0``."""
    if j < 0 or n < 0:
        raise DomainError("falling_factorial takes nonnegative integers")
    if j > n:
        return 0
    return math.perm(n, j)


def raw_moment_direct(q: MomentQuery) -> Fraction:
    """``sum_i C(n, i) p^i (1-p)^(n-i) i^k``, exact."""
    a, b = q.p.numerator, q.p.denominator
    c = b - a
    total = 0
    binom = 1
    for i in range(1, q.n + 1):
        binom = binom * (q.n - i + 1) // i
        total += binom * a**i * c ** (q.n - i) * i**q.k
    return Fraction(total, b**q.n)


def raw_moment_stirling(q: MomentQuery) -> Fraction:
    """``sum_{j=1}^{min(k, n)} S(k, j) (n)_j p^j``, exact."""
    a, b = q.p.numerator, q.p.denominator
    m = min(q.k, q.n)
    row = stirling_row(q.k).entries
    total = 0
    ff = 1
    for j in range(1, m + 1):
        ff *= q.n - j + 1
        total += row[j] * ff * a**j * b ** (m - j)
    return Fraction(total, b**m)


def sample_size_pmf(k: int, n: int) -> Tuple[Fraction, ...]:
    """Distribution of the number of distinct balls among ``k`` draws from ``n``.

    Entry ``j - 1`` is ``P(S = j) = S(k, j) (n)_j / n^k`` for ``j = 1..min(k, n)``.
    """
    if k < 1 or n < 1:
        raise DomainError("sample_size_pmf requires k, n >= 1")
    row = stirling_row(k).entries
    denom = n**k
    out = []
    ff = 1
    for j in range(1, min(k, n) + 1):
        ff *= n - j + 1
        out.append(Fraction(row[j] * ff, denom))
    return tuple(out)


def all_red_probability(q: MomentQuery) -> Fraction:
    """Probability that ``k`` draws with replacement from ``n`` painted balls are all red."""
    return raw_moment_stirling(q) / q.n**q.k


def sign_and_log(x: Union[Fraction, int]) -> Tuple[int, float]:
    """Return ``(sign, log|x|)`` for an exact rational without going through a float.

    ``log|x|`` is ``-inf`` when ``x == 0``. Numerator and denominator are
    shifted down to 64 significant bits first, so thousand-digit integers
    never overflow.
    """
    x = Fraction(x)
    if x == 0:
        return 0, -math.inf
    sign = 1 if x > 0 else -1
    return sign, _log_int(abs(x.numerator)) - _log_int(x.denominator)


def _log_int(m: int) -> float:
    shift = max(m.bit_length() - 64, 0)
    return math.log(m >> shift) + shift * math.log(2)
