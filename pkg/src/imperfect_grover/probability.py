"""Success probability after m iterations and the iteration count that maximizes it."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import PhaseConfig
from .errors import DegenerateExtremum, InternalConsistencyError, NotMatched, SpectralDegenerate
from .kernel import build_kernel, initial_state
from .spectral import SpectralParams, spectral_params

TOL_EXTREMUM = 1e-12
TIE_TOL = 1e-12
# Above this many points the one-period scan is narrowed to a window around m_real.
SCAN_LIMIT = 4_000_000


@dataclass(frozen=True)
class SearchOutcome:
    m: int
    p: float


@dataclass(frozen=True)
class MminReal:
    m_real: float
    a: float
    b: float


def _probability_terms(cfg: PhaseConfig, sp: SpectralParams):
    # P = 1 - (cos(mw) A - sin(mw) B)**2 - sin(mw)**2 C**2
    sb, cb = math.sin(cfg.beta), math.cos(cfg.beta)
    s2x, c2x = sp.sin_2x, sp.cos_2x
    a = cb
    b = math.sin(cfg.phi / 2) * s2x * sb
    c = math.cos(cfg.phi / 2) * s2x * sb - c2x * cb
    return a, b, c


def _brute_probability(cfg: PhaseConfig, m):
    g = build_kernel(cfg)
    s = initial_state(cfg.beta)
    m_arr = np.asarray(m)
    flat = [abs((np.linalg.matrix_power(g, int(k)) @ s)[1]) ** 2 for k in m_arr.ravel()]
    out = 1.0 - np.array(flat).reshape(m_arr.shape)
    return float(out) if out.ndim == 0 else out


def success_probability(cfg: PhaseConfig, m):
    """Probability of measuring the marked state after ``m`` kernel applications.

    ``m`` may be a scalar or an array. Real (non-integer) ``m`` is accepted so
    the continuous optimum can be evaluated. When the spectral decomposition
    is degenerate the state is evolved by explicit matrix powers instead.
    """
    try:
        sp = spectral_params(cfg)
    except SpectralDegenerate:
        return _brute_probability(cfg, m)
    a, b, c = _probability_terms(cfg, sp)
    mw = np.asarray(m, dtype=float) * sp.w
    cm, sm = np.cos(mw), np.sin(mw)
    p = 1.0 - (cm * a - sm * b) ** 2 - sm * sm * c * c
    return float(p) if np.ndim(p) == 0 else p


def extremum_coefficients(cfg: PhaseConfig, sp: SpectralParams | None = None) -> tuple[float, float]:
    """The coefficients ``a`` and ``b`` of the stationary-point formula.

    ``b`` is returned exactly as the closed expression evaluates; it equals
    ``4 a**2 + 4 sin(phi/2)**2 sin(2 beta)**2`` and enters the iteration count
    through its square root.
    """
    if sp is None:
        sp = spectral_params(cfg)
    beta, phi = cfg.beta, cfg.phi
    s2x, c2x = sp.sin_2x, sp.cos_2x
    s4x = math.sin(4 * sp.x)
    a = s2x * math.cos(2 * beta) + c2x * math.cos(phi / 2) * math.sin(2 * beta)
    b = (2 + s2x ** 2 + (3 * s2x ** 2 - 2) * math.cos(4 * beta)
         - 2 * s2x ** 2 * math.cos(phi) * math.sin(2 * beta) ** 2
         + 2 * s4x * math.cos(phi / 2) * math.sin(4 * beta))
    return a, b


def m_min_general(cfg: PhaseConfig) -> MminReal:
    """Continuous iteration count at which the success probability peaks.

    Solves dP/d(cos(mw)) = 0: ``cos(m w) = sqrt((sqrt(b) - 2a) / (2 sqrt(b)))``.
    When ``sin(phi/2) sin(2x) < 0`` the peak sits at the supplementary angle.
    The result lies in ``[0, pi/w)``.
    """
    sp = spectral_params(cfg)
    a, b = extremum_coefficients(cfg, sp)
    # sqrt(b) without the cancellation in the expanded expression
    g = math.sin(cfg.phi / 2) * math.sin(2 * cfg.beta)
    root_b = 2.0 * math.hypot(a, g)
    if root_b <= TOL_EXTREMUM:
        raise DegenerateExtremum(f"b = {b!r} vanishes for {cfg}")
    if abs(b - root_b * root_b) > 1e-10 * max(1.0, b):
        raise InternalConsistencyError(f"b = {b!r} differs from its closed square {root_b ** 2!r}")
    # cos^2(mw) = (sqrt(b) - 2a) / (2 sqrt(b)); (sqrt(b) - 2a)(sqrt(b) + 2a) = 4 g^2
    if a > 0:
        plus = root_b + 2 * a
        minus = 4 * g * g / plus
    else:
        minus = root_b - 2 * a
        plus = 4 * g * g / minus
    ratio = minus / (2 * root_b)
    if ratio < -TOL_EXTREMUM or ratio > 1 + TOL_EXTREMUM:
        raise DegenerateExtremum(f"cos^2(mw) = {ratio!r} lies outside [0, 1] for {cfg}")
    angle = math.atan2(math.sqrt(plus), math.sqrt(minus))
    if g * sp.sin_2x < 0:
        angle = math.pi - angle
    return MminReal(m_real=angle / sp.w, a=a, b=b)


def m_min_matched(cfg: PhaseConfig) -> float:
    """Iteration count for sure success when phi == theta."""
    if not cfg.matched:
        raise NotMatched(f"phi = {cfg.phi!r} differs from theta = {cfg.theta!r}")
    sp = spectral_params(cfg)
    return (math.pi / 2 - math.asin(math.sin(cfg.phi / 2) * math.sin(cfg.beta))) / sp.w


def p_max_continuous(cfg: PhaseConfig) -> float:
    """Peak probability, evaluated at the real-valued optimum of :func:`m_min_general`.

    This is the "exact" maximum that the approximate criteria are compared
    against; iteration counts are not rounded. In both degenerate cases the
    probability never leaves its initial value sin(beta)**2.
    """
    try:
        mr = m_min_general(cfg)
    except (SpectralDegenerate, DegenerateExtremum):
        return success_probability(cfg, 0)
    return success_probability(cfg, mr.m_real)


def p_max_exact(cfg: PhaseConfig) -> SearchOutcome:
    """Best integer iteration count and its probability.

    Rounds the continuous optimum both ways and also scans one full period
    ``0 .. ceil(pi/w) + 1`` as a guard against branch errors. Ties within
    1e-12 go to the smaller count.
    """
    try:
        sp = spectral_params(cfg)
    except SpectralDegenerate:
        return SearchOutcome(0, success_probability(cfg, 0))

    candidates = []
    m_real = None
    try:
        m_real = m_min_general(cfg).m_real
        candidates += [math.floor(m_real), math.ceil(m_real)]
    except DegenerateExtremum:
        pass

    period = math.ceil(math.pi / sp.w) + 1
    if period <= SCAN_LIMIT or m_real is None:
        scan = np.arange(min(period, SCAN_LIMIT) + 1)
    else:
        lo = max(0, math.floor(m_real) - SCAN_LIMIT // 2)
        scan = np.arange(lo, lo + SCAN_LIMIT + 1)
    ms = np.unique(np.concatenate([scan, np.array(candidates, dtype=scan.dtype)]))
    ps = np.asarray(success_probability(cfg, ms))
    best = ps.max()
    idx = int(np.flatnonzero(ps >= best - TIE_TOL)[0])
    m_star, p_star = int(ms[idx]), float(ps[idx])

    # climb past the end of the scan window if the peak lies just beyond it
    while True:
        p_next = success_probability(cfg, m_star + 1)
        if p_next > p_star + TIE_TOL:
            m_star, p_star = m_star + 1, p_next
        else:
            break
    return SearchOutcome(m_star, p_star)
