"""Large-database, small-error approximations and the tolerated phase error.

These are never substituted for the exact quantities in
:mod:`imperfect_grover.probability`; comparisons between the two are explicit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import PhaseConfig
from .errors import UndefinedRatio


@dataclass(frozen=True)
class ToleranceQuery:
    p_target: float
    theta: float
    beta: float

    def __post_init__(self):
        if not (0.0 < self.p_target < 1.0):
            raise ValueError(f"p_target must lie in (0, 1), got {self.p_target!r}")
        if math.sin(self.theta / 2) == 0.0:
            raise ValueError("sin(theta/2) must be nonzero")
        if not (0.0 < self.beta < math.pi / 2):
            raise ValueError(f"beta must lie in (0, pi/2), got {self.beta!r}")


def approx_expansions(cfg: PhaseConfig) -> tuple[float, float, float]:
    """Leading-order (cos w, sin w, sin 2x) for small beta and small delta.

    The regime is not checked.
    """
    d2 = cfg.delta ** 2
    bs2 = (cfg.beta * math.sin(cfg.theta / 2)) ** 2
    root = math.sqrt(d2 + 16 * bs2)
    cos_w = 1 - (d2 / 8 + 2 * bs2)
    sin_w = root / 2
    sin_2x = 4 * cfg.beta * math.sin(cfg.theta / 2) / root if root > 0 else 1.0
    return cos_w, sin_w, sin_2x


def p_approx(cfg: PhaseConfig, m) -> float:
    """sin(m w)**2 sin(2x)**2 with the approximate w and 2x.

    The initial overlap (order beta**2) is dropped, so m = 0 gives 0.
    """
    cos_w, sin_w, sin_2x = approx_expansions(cfg)
    w = math.atan2(sin_w, cos_w)
    p = np.sin(np.asarray(m, dtype=float) * w) ** 2 * sin_2x ** 2
    return float(p) if np.ndim(p) == 0 else p


def _ratio(coeff: float, beta: float, theta: float, delta: float) -> float:
    num = coeff * (beta * math.sin(theta / 2)) ** 2
    den = delta ** 2 + num
    if den == 0.0:
        raise UndefinedRatio(
            f"delta and beta*sin(theta/2) both vanish (beta={beta!r}, theta={theta!r})")
    return num / den


def improved_criterion(beta: float, theta: float, delta: float) -> float:
    """16 b**2 / (delta**2 + 16 b**2) with b = beta sin(theta/2).

    Takes the phase error directly; going through ``phi = theta + delta``
    loses the low bits of a small ``delta``.
    """
    return _ratio(16.0, beta, theta, delta)


def long_criterion(beta: float, theta: float, delta: float) -> float:
    return _ratio(4.0, beta, theta, delta)


def p_max_improved(cfg: PhaseConfig) -> float:
    """Approximate peak probability for the configuration's phase error."""
    return improved_criterion(cfg.beta, cfg.theta, cfg.delta)


def p_max_long(cfg: PhaseConfig) -> float:
    """The older estimate 4 b**2 / (delta**2 + 4 b**2); always below :func:`p_max_improved`."""
    return long_criterion(cfg.beta, cfg.theta, cfg.delta)


def tolerated_delta(q: ToleranceQuery) -> float:
    """Largest |delta| whose improved peak probability still reaches ``q.p_target``."""
    return (4 * q.beta * abs(math.sin(q.theta / 2))
            * math.sqrt((1 - q.p_target) / q.p_target))
