"""Randomized cross-checks between the closed forms and their brute-force oracles."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fullsim
from .approx import improved_criterion, long_criterion
from .config import PhaseConfig
from .errors import SpectralDegenerate
from .kernel import kernel_power_closed, kernel_power_sequence
from .probability import p_max_exact, success_probability
from .spectral import cos_w, sin_w
from .sweep import sweep_row


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    worst: float = 0.0
    failure: str = ""

    def record(self, value: float, limit: float, context) -> None:
        self.worst = max(self.worst, value)
        if not value <= limit and self.passed:
            self.passed = False
            self.failure = f"{value:.3e} > {limit:g} at {context}"

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status}  {self.name:<28} worst={self.worst:.3e}"
        return msg + (f"  {self.failure}" if self.failure else "")


def random_config(rng: np.random.Generator) -> PhaseConfig:
    beta = (math.pi / 2) * (1.0 - rng.random())  # (0, pi/2]
    phi, theta = rng.uniform(0.0, 2 * math.pi, size=2)
    return PhaseConfig(beta=beta, phi=float(phi), theta=float(theta))


def check_closed_form(rng, trials: int, m_max: int = 200) -> CheckResult:
    res = CheckResult("closed form vs brute power")
    ms = np.arange(m_max + 1)
    for _ in range(trials):
        cfg = random_config(rng)
        try:
            closed = kernel_power_closed(cfg, ms)
        except SpectralDegenerate:
            continue
        err = float(np.max(np.abs(closed - kernel_power_sequence(cfg, m_max))))
        res.record(err, 1e-10, cfg)
    return res


def check_fullsim(rng, trials: int, m_max: int = 60) -> CheckResult:
    res = CheckResult("2D model vs full space")
    for _ in range(trials):
        n = int(rng.integers(2, 11))
        tau = int(rng.integers(0, 1 << n))
        phi, theta = (float(v) for v in rng.uniform(0.0, 2 * math.pi, size=2))
        cfg = PhaseConfig.from_qubits(n, phi, theta)
        full = fullsim.trajectory(n, tau, phi, theta, m_max)
        two_d = np.asarray(success_probability(cfg, np.arange(m_max + 1)))
        res.record(float(np.max(np.abs(full - two_d))), 1e-10, (cfg, tau))
    return res


def check_trig_consistency(rng, trials: int) -> CheckResult:
    res = CheckResult("cos^2 w + sin^2 w = 1")
    for _ in range(trials):
        cfg = random_config(rng)
        res.record(abs(cos_w(cfg) ** 2 + sin_w(cfg) ** 2 - 1.0), 1e-12, cfg)
    return res


def check_extremum(rng, trials: int) -> CheckResult:
    res = CheckResult("integer optimum")
    for _ in range(trials):
        cfg = random_config(rng)
        best = p_max_exact(cfg)
        try:
            w = math.atan2(sin_w(cfg), cos_w(cfg))
            period = math.ceil(math.pi / w) + 1
        except ZeroDivisionError:
            continue
        if period > 100_000:
            continue
        scan = np.asarray(success_probability(cfg, np.arange(period + 1)))
        neighbours = [best.m + 1] + ([best.m - 1] if best.m > 0 else [])
        ref = max(scan.max(), *(success_probability(cfg, k) for k in neighbours))
        res.record(max(ref - best.p, 0.0), 1e-12, cfg)
    return res


def check_accuracy(improved=improved_criterion, n_range=range(4, 25), delta=0.01) -> CheckResult:
    """The improved criterion must track the exact peak and beat the older estimate."""
    res = CheckResult("improved criterion accuracy")
    for n in n_range:
        row = sweep_row(n, delta, improved=improved)
        gap12 = abs(row.p_exact - row.p_eq12)
        gap13 = abs(row.p_exact - row.p_eq13)
        ctx = f"n={n} theta={row.theta:.6g} delta={delta:g}"
        res.record(gap12, 5e-3, ctx)
        if not gap12 < gap13 and res.passed:
            res.passed = False
            res.failure = f"improved not closer than older estimate at {ctx}"
    return res


def _faulty_improved(beta: float, theta: float, delta: float) -> float:
    # mutation (16 -> 4) used to confirm the accuracy check can fail
    return long_criterion(beta, theta, delta)


def run_all(seed: int = 0, trials: int = 200, inject_fault: bool = False) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    improved = _faulty_improved if inject_fault else improved_criterion
    return [
        check_closed_form(rng, trials),
        check_fullsim(rng, max(1, trials // 4)),
        check_trig_consistency(rng, trials * 10),
        check_extremum(rng, trials),
        check_accuracy(improved),
    ]
