"""Peak-probability sweeps over database size, written as CSV plus a plot script."""

from __future__ import annotations

import csv
import math
import os
from dataclasses import astuple, dataclass, fields

from .approx import improved_criterion, long_criterion
from .config import PhaseConfig
from .errors import DegenerateExtremum, SpectralDegenerate
from .probability import m_min_general, p_max_continuous, p_max_exact

FIGURES = {
    1: {"delta": 0.01, "n_min": 4, "n_max": 30},
    2: {"delta": 0.001, "n_min": 8, "n_max": 40},
}
THETA = math.pi


@dataclass(frozen=True)
class SweepRow:
    n: int
    beta: float
    delta: float
    theta: float
    m_star: int
    p_exact: float
    p_eq12: float
    p_eq13: float
    m_real: float
    p_at_m_star: float


COLUMNS = [f.name for f in fields(SweepRow)]


def sweep_row(n: int, delta: float, theta: float = THETA, improved=improved_criterion) -> SweepRow:
    """Compare the exact peak with both approximate criteria at one database size.

    ``p_exact`` is the peak at the real-valued optimal iteration count;
    ``m_star`` and ``p_at_m_star`` are the best whole number of iterations.
    ``improved`` is called as ``improved(beta, theta, delta)``.
    """
    cfg = PhaseConfig.from_qubits(n, phi=theta + delta, theta=theta)
    best = p_max_exact(cfg)
    try:
        m_real = m_min_general(cfg).m_real
    except (SpectralDegenerate, DegenerateExtremum):
        m_real = float("nan")
    return SweepRow(
        n=n, beta=cfg.beta, delta=delta, theta=theta,
        m_star=best.m, p_exact=p_max_continuous(cfg),
        p_eq12=improved(cfg.beta, theta, delta),
        p_eq13=long_criterion(cfg.beta, theta, delta),
        m_real=m_real, p_at_m_star=best.p,
    )


def figure_rows(fig_id: int, n_min: int | None = None, n_max: int | None = None,
                delta: float | None = None, improved=improved_criterion) -> list[SweepRow]:
    fig = FIGURES[fig_id]
    n_min = fig["n_min"] if n_min is None else n_min
    n_max = fig["n_max"] if n_max is None else n_max
    delta = fig["delta"] if delta is None else delta
    return [sweep_row(n, delta, improved=improved) for n in range(n_min, n_max + 1)]


def _fmt(value) -> str:
    if isinstance(value, int):
        return str(value)
    return format(value, ".17g")


def write_csv(rows, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow([_fmt(v) for v in astuple(row)])


PLOT_TEMPLATE = '''\
"""Plot {csv_name}: exact peak (crosses), improved criterion (solid), older estimate (dashed)."""
import csv
import os
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, "{csv_name}"), newline="") as fh:
    rows = list(csv.DictReader(fh))

n = [int(r["n"]) for r in rows]
plt.figure(figsize=(7, 5))
plt.plot(n, [float(r["p_exact"]) for r in rows], "kx", label="exact")
plt.plot(n, [float(r["p_eq12"]) for r in rows], "k-", label="16 b^2 / (d^2 + 16 b^2)")
plt.plot(n, [float(r["p_eq13"]) for r in rows], "k--", label="4 b^2 / (d^2 + 4 b^2)")
plt.xlabel("n (qubits)")
plt.ylabel("P_max")
plt.title("theta = pi, delta = {delta}")
plt.legend(loc="best")
out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "{stem}.pdf")
plt.savefig(out, bbox_inches="tight")
print("writing file " + out)
'''


def plot_script_path(csv_path) -> str:
    stem, _ = os.path.splitext(csv_path)
    return stem + "_plot.py"


def write_plot_script(csv_path, delta: float) -> str:
    """Write a matplotlib script beside ``csv_path`` that reads it by relative name."""
    script = plot_script_path(csv_path)
    csv_name = os.path.basename(csv_path)
    stem = os.path.splitext(csv_name)[0]
    with open(script, "w", newline="\n") as fh:
        fh.write(PLOT_TEMPLATE.format(csv_name=csv_name, stem=stem, delta=_fmt(delta)))
    return script
