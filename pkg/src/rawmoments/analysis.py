"""Experiments tying the exact, bound and asymptote modules together."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .asymptote import log_psi
from .bounds import log_of_exact
from .errors import DomainError
from .exact import MomentQuery, RationalLike, as_fraction, raw_moment_stirling, stirling_row


def klaner_check(k: int) -> Optional[int]:
    """Check ``j S(k,j)/S(k,j-1) >= (j+1) S(k,j+1)/S(k,j)`` for ``2 <= j <= k-1``.

    Cross-multiplied, so the test is exact integer arithmetic. Returns the
    first violating ``j``, or ``None`` when the inequality holds throughout.
    """
    if k < 3:
        raise DomainError("klaner_check requires k >= 3")
    s = stirling_row(k).entries
    for j in range(2, k):
        if j * s[j] * s[j] < (j + 1) * s[j + 1] * s[j - 1]:
            return j
    return None


def is_log_concave(seq: Sequence[int]) -> bool:
    return all(seq[i] * seq[i] >= seq[i - 1] * seq[i + 1] for i in range(1, len(seq) - 1))


def is_unimodal(seq: Sequence) -> bool:
    """No strict decrease is ever followed by a strict increase."""
    falling = False
    for a, b in zip(seq, seq[1:]):
        if b < a:
            falling = True
        elif b > a and falling:
            return False
    return True


def mode_index(seq: Sequence) -> int:
    """Position of the first maximum."""
    best = 0
    for i, v in enumerate(seq):
        if v > seq[best]:
            best = i
    return best


@dataclass(frozen=True)
class PropertyReport:
    k: int
    n: int
    p: Fraction
    klaner_holds: bool
    unimodal_stirling: bool
    unimodal_with_falling: bool
    unimodal_with_p: bool
    mode_index: int

    @property
    def ok(self) -> bool:
        return (
            self.klaner_holds
            and self.unimodal_stirling
            and self.unimodal_with_falling
            and self.unimodal_with_p
        )


def summand_sequences(k: int, n: int, p: RationalLike):
    """The three positive sequences ``S(k,j)``, ``S(k,j)(n)_j`` and ``S(k,j)(n)_j p^j``.

    Indexed by ``j = 1..min(k, n)``. The last one is scaled by ``b^min(k,n)``
    (``p = a/b``) so it stays integral; a common positive factor changes
    neither log-concavity nor the mode.
    """
    p = as_fraction(p)
    a, b = p.numerator, p.denominator
    m = min(k, n)
    s = stirling_row(k).entries
    plain, with_falling, with_p = [], [], []
    ff = 1
    for j in range(1, m + 1):
        ff *= n - j + 1
        plain.append(s[j])
        with_falling.append(s[j] * ff)
        with_p.append(s[j] * ff * a**j * b ** (m - j))
    return plain, with_falling, with_p


def unimodality_check(k: int, n: int, p: RationalLike) -> PropertyReport:
    """Verify log-concavity and unimodality of the three summand sequences.

    ``mode_index`` is the ``j`` (1-based, smallest on ties) maximising
    ``S(k,j)(n)_j p^j``.
    """
    p = as_fraction(p)
    if k < 1 or n < 1:
        raise DomainError("unimodality_check requires k, n >= 1")
    if not 0 < p <= 1:
        raise DomainError("unimodality_check requires 0 < p <= 1")
    seqs = summand_sequences(k, n, p)
    flags = [is_log_concave(s) and is_unimodal(s) for s in seqs]
    return PropertyReport(
        k=k,
        n=n,
        p=p,
        klaner_holds=k < 3 or klaner_check(k) is None,
        unimodal_stirling=flags[0],
        unimodal_with_falling=flags[1],
        unimodal_with_p=flags[2],
        mode_index=mode_index(seqs[2]) + 1,
    )


@dataclass(frozen=True)
class ConvergenceRow:
    k: int
    n: int
    normalized_log_moment: float
    log_psi: float
    gap: float


def converge_table(
    beta: float, p: RationalLike, k_values: Iterable[int], kmax_hard: int = 1000
) -> List[ConvergenceRow]:
    """Compare ``(log E(R^k) - k log k) / k`` with ``log Psi`` at ``n = round(beta k)``.

    The moment is exact (``p`` is taken as an exact rational); only the final
    logarithm is a float.
    """
    p_exact = as_fraction(p)
    target = log_psi(beta, float(p_exact)).log_psi
    rows = []
    for k in sorted(set(k_values)):
        if k < 2:
            raise DomainError(f"converge_table needs k >= 2, got {k}")
        if k > kmax_hard:
            raise DomainError(f"k={k} exceeds the hard cap {kmax_hard}")
        n = round(beta * k)
        if n < 1:
            raise DomainError(f"round(beta * k) = 0 for k={k}")
        moment = raw_moment_stirling(MomentQuery(n, p_exact, k))
        normalized = (log_of_exact(moment).log_e - k * math.log(k)) / k
        rows.append(ConvergenceRow(k, n, normalized, target, abs(normalized - target)))
    return rows


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    stderr: float
    samples: int


_CHUNK_CELLS = 4_000_000


def mc_all_red(n: int, p: float, k: int, samples: int, seed: int) -> MonteCarloEstimate:
    """Simulate painting ``n`` balls red w.p. ``p`` and drawing ``k`` with replacement.

    Uses numpy's PCG64 seeded from ``seed``; each chunk of trials gets its own
    child stream from ``SeedSequence.spawn``, and the chunk size depends only
    on ``n`` and ``k``, so the result is a pure function of the arguments.
    """
    if samples < 1:
        raise DomainError("samples must be >= 1")
    if n < 1 or k < 1:
        raise DomainError("n and k must be >= 1")
    p = float(p)
    if not 0 <= p <= 1:
        raise DomainError("p must lie in [0, 1]")
    chunk = max(1, _CHUNK_CELLS // (n + k))
    n_chunks = -(-samples // chunk)
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    hits = 0
    for c, ss in enumerate(children):
        size = min(chunk, samples - c * chunk)
        rng = np.random.Generator(np.random.PCG64(ss))
        red = rng.random((size, n)) < p
        draws = rng.integers(0, n, size=(size, k))
        hits += int(np.take_along_axis(red, draws, axis=1).all(axis=1).sum())
    est = hits / samples
    return MonteCarloEstimate(est, math.sqrt(est * (1.0 - est) / samples), samples)
