"""Real Lambert W on the two real branches W_0 and W_{-1}.

Halley iteration from branch-specific starting values:

* a series in ``sqrt(2 (e x + 1))`` near the branch point ``-1/e``;
* ``L1 - L2 + L2 / L1`` with ``L1 = log|x|``, ``L2 = log|L1|`` in the tails.

In the tails the iteration runs on ``w + log|w| = log|x|`` rather than on
``w e^w = x`` so that neither huge nor tiny arguments overflow.
"""
from __future__ import annotations

import enum
import math

import numpy as np

from .errors import DomainError

# 1/e split in two doubles so that x + 1/e keeps its low bits near the branch point
_INV_E_HI = 0.36787944117144233
_INV_E_LO = -1.2428753672788363e-17
BRANCH_POINT = -math.exp(-1.0)

_CLAMP = 1e-15
_STEP_TOL = 1e-14
_MAX_ITER = 60


class WBranch(str, enum.Enum):
    PRINCIPAL = "principal"
    MINUS_ONE = "minus_one"

    @classmethod
    def coerce(cls, branch) -> "WBranch":
        if isinstance(branch, cls):
            return branch
        if branch in (0, "0"):
            return cls.PRINCIPAL
        if branch in (-1, "-1"):
            return cls.MINUS_ONE
        return cls(branch)


def lambert_w(x, branch=WBranch.PRINCIPAL):
    """Solve ``w * exp(w) = x`` for real ``w`` on the requested branch.

    Parameters
    ----------
    x : float or array_like
        Argument. The principal branch accepts ``x >= -1/e``; the ``minus_one``
        branch accepts ``-1/e <= x < 0``. Values less than 1e-15 below
        ``-1/e`` are treated as the branch point.
    branch : WBranch, str or int
        ``"principal"`` / ``0`` for W_0 (``w >= -1``), ``"minus_one"`` / ``-1``
        for W_{-1} (``w <= -1``).

    Returns
    -------
    float or ndarray
        A float for scalar input, otherwise an array shaped like ``x``.

    Raises
    ------
    DomainError
        If any element lies outside the branch's domain or is NaN.
    """
    branch = WBranch.coerce(branch)
    xa = np.asarray(x, dtype=float)
    scalar = xa.ndim == 0
    xa = xa.ravel().copy()

    if np.isnan(xa).any():
        raise DomainError("lambert_w is undefined for NaN")
    gap = (xa + _INV_E_HI) + _INV_E_LO
    if (gap < -_CLAMP).any():
        raise DomainError("lambert_w requires x >= -1/e")
    if branch is WBranch.MINUS_ONE and (xa >= 0).any():
        raise DomainError("the minus_one branch requires x < 0")
    if branch is WBranch.PRINCIPAL and np.isposinf(xa).any():
        raise DomainError("lambert_w requires finite x")
    at_branch = gap <= 0
    xa[at_branch] = BRANCH_POINT
    gap = np.maximum(gap, 0.0)

    w = _solve(xa, gap, branch)
    w[at_branch] = -1.0
    if branch is WBranch.PRINCIPAL:
        w[xa == 0] = 0.0
    return float(w[0]) if scalar else w.reshape(np.shape(x))


def _solve(x: np.ndarray, gap: np.ndarray, branch: WBranch) -> np.ndarray:
    principal = branch is WBranch.PRINCIPAL
    r = np.sqrt(2.0 * math.e * gap)
    if not principal:
        r = -r
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        series = -1.0 + r * (1.0 + r * (-1.0 / 3.0 + r * (11.0 / 72.0 - r * 43.0 / 540.0)))
        ax = np.abs(x)
        l1 = np.log(np.where(ax > 0, ax, 1.0))
        l2 = np.log(np.abs(np.where(l1 != 0, l1, 1.0)))
        asym = l1 - l2 + l2 / np.where(l1 != 0, l1, 1.0)

    if principal:
        near = gap < 0.3
        tail = x > 3.0
        w = np.where(near, series, np.where(tail, asym, np.log1p(np.maximum(x, -0.99))))
    else:
        near = x < -0.25
        tail = ~near
        w = np.where(near, series, asym)

    logx = np.where(tail, l1, 0.0)
    active = ~((gap == 0) | (x == 0))
    for _ in range(_MAX_ITER):
        if not active.any():
            break
        wa, xa, ta = w[active], x[active], tail[active]
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            # direct form: f = w e^w - x
            ew = np.exp(wa)
            f = wa * ew - xa
            wp1 = wa + 1.0
            step_direct = f / (ew * wp1 - (wa + 2.0) * f / (2.0 * wp1))
            # log form: h = w + log|w| - log|x|
            h = wa + np.log(np.abs(wa)) - logx[active]
            hp = 1.0 + 1.0 / wa
            hpp = -1.0 / (wa * wa)
            step_log = h / (hp - h * hpp / (2.0 * hp))
        step = np.where(ta, step_log, step_direct)
        step = np.where(np.isfinite(step), step, 0.0)
        wa = wa - step
        w[active] = wa
        done = np.abs(step) <= _STEP_TOL * np.maximum(np.abs(wa), 1e-300)
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    return w
