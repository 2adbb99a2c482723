"""Exact and approximate analysis of Grover search with imperfect phase rotations."""

from .approx import (
    ToleranceQuery,
    approx_expansions,
    improved_criterion,
    long_criterion,
    p_approx,
    p_max_improved,
    p_max_long,
    tolerated_delta,
)
from .config import PhaseConfig, beta_for_qubits
from .errors import (
    DegenerateExtremum,
    GroverError,
    IndexOutOfRange,
    NotMatched,
    SizeExceeded,
    SpectralDegenerate,
    UndefinedRatio,
)
from .kernel import (
    apply,
    build_kernel,
    initial_state,
    kernel_power_brute,
    kernel_power_closed,
    kernel_power_sequence,
)
from .probability import (
    MminReal,
    SearchOutcome,
    m_min_general,
    m_min_matched,
    p_max_continuous,
    p_max_exact,
    success_probability,
)
from .spectral import SpectralParams, spectral_params

__version__ = "0.1.0"
