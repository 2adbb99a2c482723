"""The generalized Grover kernel in the basis {|tau>, |tau_perp>}.

Matrices are plain ``(2, 2)`` complex numpy arrays with row-major entries
``[[a11, a12], [a21, a22]]``; states are length-2 complex vectors holding the
amplitudes on ``|tau>`` and ``|tau_perp>``.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .config import PhaseConfig
from .spectral import spectral_params

TOL_MATRIX = 1e-10
TOL_UNITARY = 1e-12
TOL_NORM = 1e-12


def initial_state(beta: float) -> np.ndarray:
    """Uniform superposition W|eta> = sin(beta)|tau> + cos(beta)|tau_perp>."""
    return np.array([math.sin(beta), math.cos(beta)], dtype=complex)


def marked_projector(cfg: PhaseConfig) -> np.ndarray:
    """G_tau = I + (e^{i phi} - 1)|tau><tau|."""
    g = np.eye(2, dtype=complex)
    g[0, 0] = cmath.exp(1j * cfg.phi)
    return g


def initial_projector(cfg: PhaseConfig) -> np.ndarray:
    """G_eta = I + (e^{i theta} - 1)|s><s| with |s> the uniform superposition."""
    s = initial_state(cfg.beta)
    return np.eye(2, dtype=complex) + (cmath.exp(1j * cfg.theta) - 1) * np.outer(s, s.conj())


def build_kernel(cfg: PhaseConfig) -> np.ndarray:
    """Return G = -G_eta G_tau written out entrywise, overall minus sign included."""
    sb, cb = math.sin(cfg.beta), math.cos(cfg.beta)
    ep = cmath.exp(1j * cfg.phi)
    et1 = cmath.exp(1j * cfg.theta) - 1
    return -np.array([
        [ep * (1 + et1 * sb * sb), et1 * sb * cb],
        [ep * et1 * sb * cb, 1 + et1 * cb * cb],
    ])


def kernel_power_closed(cfg: PhaseConfig, m):
    """Closed-form G**m, including the global phase (-1)**m e^{i m (phi+theta)/2}.

    ``m`` may be an integer or an integer array; an array of shape ``S``
    yields matrices of shape ``S + (2, 2)``. Raises ``SpectralDegenerate``
    when sin(w) vanishes; use :func:`kernel_power_brute` there.
    """
    sp = spectral_params(cfg)
    m_arr = np.asarray(m)
    if np.any(m_arr < 0):
        raise ValueError("iteration count must be non-negative")
    mf = m_arr.astype(float)
    sign = np.where(m_arr % 2 == 0, 1.0, -1.0)
    glob = sign * np.exp(0.5j * mf * (cfg.phi + cfg.theta))
    fwd = np.exp(1j * mf * sp.w)
    back = np.exp(-1j * mf * sp.w)
    c2 = math.cos(sp.x) ** 2
    s2 = math.sin(sp.x) ** 2
    off = 1j * np.sin(mf * sp.w) * math.sin(2 * sp.x)

    out = np.empty(m_arr.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = fwd * c2 + back * s2
    out[..., 0, 1] = cmath.exp(-0.5j * cfg.phi) * off
    out[..., 1, 0] = cmath.exp(0.5j * cfg.phi) * off
    out[..., 1, 1] = fwd * s2 + back * c2
    out *= glob[..., None, None]
    return out


def kernel_power_brute(cfg: PhaseConfig, m: int) -> np.ndarray:
    """G**m by ``m`` successive multiplications; the oracle for the closed form."""
    if m < 0:
        raise ValueError("iteration count must be non-negative")
    g = build_kernel(cfg)
    out = np.eye(2, dtype=complex)
    for _ in range(m):
        out = g @ out
    return out


def kernel_power_sequence(cfg: PhaseConfig, m_max: int) -> np.ndarray:
    """Stack of G**0 .. G**m_max, shape ``(m_max + 1, 2, 2)``, by repeated multiplication."""
    g = build_kernel(cfg)
    out = np.empty((m_max + 1, 2, 2), dtype=complex)
    out[0] = np.eye(2)
    for k in range(1, m_max + 1):
        out[k] = g @ out[k - 1]
    return out


def apply(mat: np.ndarray, state: np.ndarray) -> np.ndarray:
    return mat @ state


def is_unitary(mat: np.ndarray, tol: float = TOL_UNITARY) -> bool:
    mat = np.asarray(mat)
    eye = np.eye(mat.shape[-1])
    prod = mat @ np.conj(np.swapaxes(mat, -1, -2))
    return bool(np.max(np.abs(prod - eye)) <= tol)
