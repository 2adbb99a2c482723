"""Brute-force n-qubit state-vector simulation of the imperfect Grover iteration.

Works in the full 2**n dimensional space and never uses the two-dimensional
reduction, so it serves as an independent check of it. The initial basis state
is |0...0>, whose Walsh-Hadamard image is the uniform vector.
"""

from __future__ import annotations

import cmath

import numpy as np

from .errors import IndexOutOfRange, SizeExceeded

N_MAX = 20


def init_uniform(n: int, n_max: int = N_MAX) -> np.ndarray:
    if n < 1:
        raise ValueError(f"qubit count must be positive, got {n}")
    if n > n_max:
        raise SizeExceeded(f"{n} qubits exceeds the limit of {n_max}")
    dim = 1 << n
    return np.full(dim, dim ** -0.5, dtype=complex)


def _check_index(state: np.ndarray, tau: int) -> None:
    if not (0 <= tau < state.shape[0]):
        raise IndexOutOfRange(f"marked index {tau} outside [0, {state.shape[0]})")


def grover_step(state: np.ndarray, tau: int, phi: float, theta: float) -> np.ndarray:
    """Return -G_eta G_tau applied to ``state``; the input is left untouched.

    G_eta is a rank-one update about the uniform vector u:
    s + (e^{i theta} - 1) <u|s> u, which costs O(2**n).
    """
    _check_index(state, tau)
    out = state.copy()
    out[tau] *= cmath.exp(1j * phi)
    # <u|s> u has every entry equal to sum(s) / 2**n
    out += (cmath.exp(1j * theta) - 1) * out.sum() / out.shape[0]
    return np.negative(out, out=out)


def marked_probability(state: np.ndarray, tau: int) -> float:
    _check_index(state, tau)
    return float(abs(state[tau]) ** 2)


def trajectory(n: int, tau: int, phi: float, theta: float, m_max: int,
               n_max: int = N_MAX) -> np.ndarray:
    """Marked-state probabilities after 0..m_max iterations from the uniform state."""
    state = init_uniform(n, n_max)
    _check_index(state, tau)
    probs = np.empty(m_max + 1)
    probs[0] = marked_probability(state, tau)
    for k in range(1, m_max + 1):
        state = grover_step(state, tau, phi, theta)
        probs[k] = marked_probability(state, tau)
    return probs
