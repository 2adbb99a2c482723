"""Acceptance suite: one PASS/FAIL line per criterion (shown in the terminal summary)."""

import math
import time

import numpy as np
import pytest

from imperfect_grover import (
    PhaseConfig,
    SpectralDegenerate,
    ToleranceQuery,
    build_kernel,
    improved_criterion,
    kernel_power_closed,
    long_criterion,
    p_max_continuous,
    p_max_exact,
    spectral_params,
    success_probability,
    tolerated_delta,
)
from imperfect_grover.cli import main
from imperfect_grover.fullsim import trajectory
from imperfect_grover.kernel import is_unitary
from imperfect_grover.spectral import cos_w, normalizer_forms, sin_w
from imperfect_grover.sweep import FIGURES

TWO_PI = 2 * math.pi


def random_phase_config(rng):
    beta = (math.pi / 2) * (1.0 - rng.random())  # (0, pi/2]
    phi, theta = rng.uniform(0.0, TWO_PI, size=2)
    return PhaseConfig(beta, phi, theta)


# 1 ---------------------------------------------------------------------------

def test_criterion_1_closed_form_power(report):
    rng = np.random.default_rng(1)
    m_max, n_cfg, chunk = 10_000, 1000, 100
    ms = np.arange(m_max + 1)
    start = time.perf_counter()
    cfgs = []
    while len(cfgs) < n_cfg:
        cfg = random_phase_config(rng)
        try:
            spectral_params(cfg)
        except SpectralDegenerate:
            continue
        cfgs.append(cfg)
    worst = worst_unitary = 0.0
    for lo in range(0, n_cfg, chunk):
        batch = cfgs[lo:lo + chunk]
        g = np.stack([build_kernel(c) for c in batch])
        brute = np.empty((len(batch), m_max + 1, 2, 2), dtype=complex)
        brute[:, 0] = np.eye(2)
        for k in range(1, m_max + 1):
            brute[:, k] = g @ brute[:, k - 1]
        for i, cfg in enumerate(batch):
            closed = kernel_power_closed(cfg, ms)
            worst = max(worst, float(np.max(np.abs(closed - brute[i]))))
            head = closed[:101]
            prod = head @ np.conj(np.swapaxes(head, -1, -2))
            worst_unitary = max(worst_unitary, float(np.max(np.abs(prod - np.eye(2)))))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-10 and worst_unitary <= 1e-12 and elapsed < 60
    report("1 closed-form power vs brute force", ok,
           f"{n_cfg} configs, m<=1e4, max err {worst:.2e}, unitarity {worst_unitary:.2e}, {elapsed:.1f}s")
    assert worst <= 1e-10
    assert worst_unitary <= 1e-12
    assert is_unitary(kernel_power_closed(cfgs[0], 100))
    assert elapsed < 60


# 2 ---------------------------------------------------------------------------

def test_criterion_2_subspace_full_space(report):
    rng = np.random.default_rng(2)
    start = time.perf_counter()
    worst = 0.0
    for n in range(2, 13):
        for _ in range(50):
            phi, theta = rng.uniform(0.0, TWO_PI, size=2)
            tau = int(rng.integers(1 << n))
            full = trajectory(n, tau, phi, theta, 200)
            two_d = success_probability(PhaseConfig.from_qubits(n, phi, theta), np.arange(201))
            worst = max(worst, float(np.max(np.abs(full - two_d))))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-10 and elapsed < 120
    report("2 full-space simulator vs 2D probability", ok,
           f"n=2..12 x 50, m<=200, max err {worst:.2e}, {elapsed:.1f}s")
    assert worst <= 1e-10
    assert elapsed < 120


# 3 ---------------------------------------------------------------------------

def test_criterion_3_standard_grover(report):
    best = p_max_exact(PhaseConfig.from_qubits(10, math.pi, math.pi))
    p_four = success_probability(PhaseConfig.from_qubits(2, math.pi, math.pi), 1)
    ok = best.m == 25 and best.p >= 0.999 and abs(p_four - 1.0) <= 1e-12
    report("3 standard search recovery", ok,
           f"n=10: m*={best.m} P={best.p:.6f}; n=2: |P(1)-1|={abs(p_four - 1):.1e}")
    assert best.m == 25
    assert best.p >= 0.999
    assert abs(p_four - 1.0) <= 1e-12


# 4 ---------------------------------------------------------------------------

def test_criterion_4_trig_consistency(report):
    rng = np.random.default_rng(4)
    worst_pyth = worst_norm = 0.0
    for _ in range(10_000):
        cfg = random_phase_config(rng)
        worst_pyth = max(worst_pyth, abs(cos_w(cfg) ** 2 + sin_w(cfg) ** 2 - 1.0))
        squares, factored = normalizer_forms(cfg)
        worst_norm = max(worst_norm, abs(squares - factored) / max(abs(squares), 1e-300))
    ok = worst_pyth <= 1e-12 and worst_norm <= 1e-12
    report("4 rotation-angle and normalizer identities", ok,
           f"1e4 configs, pythagorean {worst_pyth:.2e}, normalizer rel {worst_norm:.2e}")
    assert worst_pyth <= 1e-12
    assert worst_norm <= 1e-12


# 5, 6 ------------------------------------------------------------------------

def figure_gaps(fig_id, peak):
    fig = FIGURES[fig_id]
    delta = fig["delta"]
    out = []
    for n in range(fig["n_min"], fig["n_max"] + 1):
        cfg = PhaseConfig.from_qubits(n, math.pi + delta, math.pi)
        exact = peak(cfg)
        g12 = abs(exact - improved_criterion(cfg.beta, math.pi, delta))
        g13 = abs(exact - long_criterion(cfg.beta, math.pi, delta))
        out.append((n, g12, g13))
    return out


BETA_N20 = math.asin(2 ** -10)
FIGURE_SPOTS = {
    1: [(improved_criterion(BETA_N20, math.pi, 0.01), 0.13237, 5e-5),
        (long_criterion(BETA_N20, math.pi, 0.01), 0.03674, 1e-5)],
    2: [(improved_criterion(BETA_N20, math.pi, 0.001), 0.93846, 5e-5)],
}


@pytest.mark.parametrize("fig_id,criterion", [(1, 5), (2, 6)])
def test_criteria_5_6_figure_reproduction(report, fig_id, criterion):
    # the figures' "exact" crosses are the peak at the real-valued optimal iteration count
    start = time.perf_counter()
    gaps = figure_gaps(fig_id, p_max_continuous)
    elapsed = time.perf_counter() - start
    worst = max(g12 for _, g12, _ in gaps)
    not_closer = [n for n, g12, g13 in gaps if not g12 < g13]
    spots_ok = all(abs(value - quoted) <= tol for value, quoted, tol in FIGURE_SPOTS[fig_id])
    ok = worst <= 5e-3 and not not_closer and spots_ok and elapsed < 60
    fig = FIGURES[fig_id]
    report(f"{criterion} figure {fig_id} reproduction", ok,
           f"delta={fig['delta']}, n={fig['n_min']}..{fig['n_max']}, max |exact-improved| {worst:.2e}, "
           f"improved not closer at {not_closer or 'none'}, {elapsed:.2f}s")
    assert worst <= 5e-3
    assert not not_closer
    assert spots_ok
    assert elapsed < 60


@pytest.mark.xfail(strict=True, reason="integer-rounded peak cannot resolve the two criteria at small n")
@pytest.mark.parametrize("fig_id,criterion", [(1, 5), (2, 6)])
def test_criteria_5_6_integer_peak_reading(report, fig_id, criterion):
    gaps = figure_gaps(fig_id, lambda cfg: p_max_exact(cfg).p)
    worst = max(g12 for _, g12, _ in gaps)
    not_closer = [n for n, g12, g13 in gaps if not g12 < g13]
    ok = worst <= 5e-3 and not not_closer
    report(f"{criterion} figure {fig_id}, exact taken at integer m* (expected to fail)", ok,
           f"max |P(m*)-improved| {worst:.2e}, improved not closer at {not_closer or 'none'}")
    assert worst <= 5e-3
    assert not not_closer


# 7 ---------------------------------------------------------------------------

def test_criterion_7_tolerance_round_trip(report):
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(1000):
        p = rng.uniform(1e-3, 1 - 1e-3)
        theta = rng.uniform(0.05, TWO_PI - 0.05)
        beta = rng.uniform(1e-6, 1.5)
        d = tolerated_delta(ToleranceQuery(p, theta, beta))
        worst = max(worst, abs(improved_criterion(beta, theta, d) - p))
    ratios = []
    for n in range(10, 41):
        d = tolerated_delta(ToleranceQuery(0.9, math.pi, math.asin(2 ** (-n / 2))))
        ratios.append(d / 2 ** (-n / 2))
    spread = max(ratios) / min(ratios) - 1.0
    ok = worst <= 1e-12 and spread <= 0.01
    report("7 tolerance round trip and 2^(-n/2) scaling", ok,
           f"1e3 round trips max err {worst:.2e}; n=10..40 ratio spread {spread:.2e}")
    assert worst <= 1e-12
    assert spread <= 0.01


# 8 ---------------------------------------------------------------------------

def test_criterion_8_integer_optimum(report):
    rng = np.random.default_rng(8)
    worst = 0.0
    checked = 0
    while checked < 1000:
        cfg = random_phase_config(rng)
        if sin_w(cfg) < 1e-5:
            continue
        checked += 1
        best = p_max_exact(cfg)
        w = spectral_params(cfg).w
        scan = success_probability(cfg, np.arange(math.ceil(math.pi / w) + 2))
        neighbours = [success_probability(cfg, best.m + 1)]
        if best.m > 0:
            neighbours.append(success_probability(cfg, best.m - 1))
        worst = max(worst, float(scan.max()) - best.p, max(neighbours) - best.p)
    ok = worst <= 1e-12
    report("8 integer optimum beats neighbours and period scan", ok,
           f"1e3 configs, worst shortfall {max(worst, 0.0):.2e}")
    assert worst <= 1e-12


# 9 ---------------------------------------------------------------------------

def test_criterion_9_csv_determinism(report, tmp_path, capsys):
    paths = []
    for name in ("a", "b"):
        d = tmp_path / name
        d.mkdir()
        out = d / "figure1.csv"
        assert main(["figure", "--id", "1", "--out", str(out)]) == 0
        paths.append(out)
    capsys.readouterr()
    first, second = (p.read_bytes() for p in paths)
    ok = first == second
    report("9 figure CSV byte-identical across runs", ok, f"{len(first)} bytes")
    assert ok
