"""Problem parameters for a single-target search with imperfect phase rotations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class PhaseConfig:
    """Overlap angle ``beta`` and the two phase rotation angles.

    ``phi`` is the rotation applied to the marked state and ``theta`` the
    rotation about the initial (uniform) state. ``sin(beta)`` is the overlap
    between the marked state and the uniform superposition, so an n-qubit
    database has ``beta = asin(2**(-n/2))``.
    """

    beta: float
    phi: float
    theta: float
    n: Optional[int] = None

    def __post_init__(self):
        if not (0.0 < self.beta <= math.pi / 2):
            raise ValueError(f"beta must lie in (0, pi/2], got {self.beta!r}")
        if self.n is not None and self.n < 0:
            raise ValueError(f"qubit count must be non-negative, got {self.n}")

    @classmethod
    def from_qubits(cls, n: int, phi: float, theta: float) -> "PhaseConfig":
        return cls(beta=beta_for_qubits(n), phi=phi, theta=theta, n=n)

    @property
    def delta(self) -> float:
        """Phase error phi - theta."""
        return self.phi - self.theta

    @property
    def matched(self) -> bool:
        return abs(self.phi - self.theta) <= 1e-14


def beta_for_qubits(n: int) -> float:
    if n < 0:
        raise ValueError(f"qubit count must be non-negative, got {n}")
    return math.asin(2.0 ** (-n / 2))
