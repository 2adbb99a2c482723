"""Rotation angle ``w``, mixing angle ``x`` and normalizer ``l_m`` of the kernel.

In the two-dimensional invariant subspace the kernel, stripped of its global
phase, has eigenvalues ``exp(+-iw)``. ``x`` fixes how the marked state mixes
with its complement along the eigenbasis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import PhaseConfig
from .errors import InternalConsistencyError, SpectralDegenerate

TOL_DEGENERATE = 1e-14
TOL_CLAMP = 1e-14


@dataclass(frozen=True)
class SpectralParams:
    w: float
    x: float
    l_m: float
    sin_w: float
    cos_w: float

    @property
    def sin_2x(self) -> float:
        return math.sin(2.0 * self.x)

    @property
    def cos_2x(self) -> float:
        return math.cos(2.0 * self.x)


def cos_w(cfg: PhaseConfig) -> float:
    """cos(w) from the trace of the kernel."""
    sb = math.sin(cfg.beta)
    return (math.cos(cfg.delta / 2)
            - 2.0 * math.sin(cfg.phi / 2) * math.sin(cfg.theta / 2) * sb * sb)


def _components(cfg: PhaseConfig):
    # sin(w)**2 = S**2 + K**2; both terms are reused by x and l_m.
    sb = math.sin(cfg.beta)
    s = math.sin(cfg.theta / 2) * math.sin(2.0 * cfg.beta)
    k = (math.sin(cfg.delta / 2)
         + 2.0 * math.cos(cfg.phi / 2) * math.sin(cfg.theta / 2) * sb * sb)
    return s, k


def sin_w(cfg: PhaseConfig) -> float:
    """Nonnegative sin(w), computed independently of :func:`cos_w`.

    The second squared term carries ``sin(beta)**2``; with a bare
    ``sin(beta)`` the identity ``cos(w)**2 + sin(w)**2 = 1`` fails whenever
    ``cos(phi/2) != 0``.
    """
    s, k = _components(cfg)
    return math.hypot(s, k)


def _shifted_sin_w(s: float, k: float, sw: float) -> float:
    # sin(w) + K; for K < 0 the equivalent S**2 / (sin(w) - K) avoids cancellation
    if k >= 0.0:
        return sw + k
    return s * s / (sw - k)


def normalizer_forms(cfg: PhaseConfig) -> tuple[float, float]:
    """Return ``l_m`` as the sum of two squares and in its factored form.

    The two agree only if ``sin(w)**2 == S**2 + K**2``, so comparing them
    checks the rotation-angle formulas.
    """
    s, k = _components(cfg)
    sw = math.hypot(s, k)
    t = _shifted_sin_w(s, k, sw)
    squares = t * t + s * s
    factored = 2.0 * sw * t
    if factored < 0.0:
        if factored < -TOL_CLAMP:
            raise InternalConsistencyError(
                f"factored normalizer is negative ({factored!r}) for {cfg}")
        factored = 0.0
    return squares, factored


def spectral_params(cfg: PhaseConfig) -> SpectralParams:
    """Compute ``w`` in [0, pi], ``x`` in [-pi/2, pi/2] and ``l_m``.

    Raises :class:`SpectralDegenerate` when ``sin(w) <= 1e-14``: the kernel is
    then a multiple of the identity and ``x`` is undefined.
    """
    s, k = _components(cfg)
    sw = math.hypot(s, k)
    cw = cos_w(cfg)
    if sw <= TOL_DEGENERATE:
        raise SpectralDegenerate(
            f"sin(w) = {sw:.3e} is below {TOL_DEGENERATE:g} for {cfg}")
    w = math.atan2(sw, cw)

    # sin(x) = S / sqrt(l_m) and cos(x) = (sin(w) + K) / sqrt(l_m) >= 0.
    t = _shifted_sin_w(s, k, sw)
    l_m = t * t + s * s
    if l_m == 0.0:
        # |tau> is the eigenvector with eigenvalue exp(-iw).
        x = math.pi / 2
    else:
        x = math.atan2(s, t)
    return SpectralParams(w=w, x=x, l_m=l_m, sin_w=sw, cos_w=cw)
