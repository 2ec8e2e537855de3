"""Brute-force truncated Fock-space verifier for the closed-form phases.

States are dense complex coefficient vectors over number states |n> (one
mode) or a rectangular grid |n1, n2> (two modes).  Evolution is exact and
diagonal, so the total, dynamical, and geometric phases can be computed
straight from their definitions: the argument of the endpoint overlap, the
integrated connection -i <psi | d/dt | psi>, and their difference.  Nothing
here uses any closed-form expression from the analytic module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np
from scipy import special

from .core import (
    DEFAULT_NORM_EPS,
    DEFAULT_OVERLAP_EPS,
    CapacityError,
    CoherentParam,
    DegenerateStateError,
    EntangledSpec,
    OracleInconsistencyError,
    TruncationError,
    UndefinedTotalPhaseError,
    _checked_finite,
)

__all__ = [
    "FOCK_FLOOR",
    "FOCK_CAP",
    "OracleConfig",
    "TruncatedState",
    "DynamicalPhases",
    "poisson_tail",
    "fock_cutoff",
    "coherent_amplitudes",
    "build_coherent",
    "build_entangled",
    "evolve",
    "state_overlap",
    "mean_energy",
    "oracle_total_phase",
    "quadrature_dynamical_phase",
    "oracle_dynamical_phase",
    "oracle_geometric_phase",
]

#: Smallest cutoff ever used; keeps desk-scale amplitudes essentially exact.
FOCK_FLOOR = 32

#: Hard cap on the per-mode cutoff, guarding against huge allocations.
FOCK_CAP = 4096

OmegaLike = Union[float, Sequence[float]]
Subject = Union[CoherentParam, EntangledSpec, "TruncatedState"]


@dataclass(frozen=True)
class OracleConfig:
    """Knobs for the brute-force verifier.

    n_max_override forces a per-mode cutoff instead of the automatic Poisson
    tail choice; trunc_tol bounds the neglected tail mass; time_steps is the
    grid size for the quadrature form of the dynamical phase.
    """

    n_max_override: int | None = None
    trunc_tol: float = 1e-12
    time_steps: int = 4096

    def __post_init__(self) -> None:
        if self.n_max_override is not None:
            if not isinstance(self.n_max_override, int) or self.n_max_override < 1:
                raise ValueError(f"n_max_override must be a positive integer, got {self.n_max_override!r}")
        if not 0.0 < self.trunc_tol < 1.0:
            raise ValueError(f"trunc_tol must lie in (0, 1), got {self.trunc_tol!r}")
        if not isinstance(self.time_steps, int) or self.time_steps < 2:
            raise ValueError(f"time_steps must be an integer >= 2, got {self.time_steps!r}")


@dataclass(frozen=True)
class TruncatedState:
    """Complex amplitudes over a truncated number basis, one or two modes.

    coeffs has shape (n_max[0] + 1,) or (n_max[0] + 1, n_max[1] + 1) and is
    stored read-only; builders hand out states normalized to within their
    truncation tolerance.
    """

    coeffs: np.ndarray
    n_max: tuple[int, ...]

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=complex)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "n_max", tuple(int(n) for n in self.n_max))
        if not 1 <= len(self.n_max) <= 2:
            raise ValueError("n_max must describe one or two modes")
        if any(n < 1 for n in self.n_max):
            raise ValueError(f"per-mode cutoffs must be >= 1, got {self.n_max}")
        expected = tuple(n + 1 for n in self.n_max)
        if arr.shape != expected:
            raise ValueError(f"coeffs shape {arr.shape} does not match cutoffs {self.n_max}")

    @property
    def modes(self) -> int:
        return len(self.n_max)

    def norm_squared(self) -> float:
        return float(np.vdot(self.coeffs, self.coeffs).real)


@dataclass(frozen=True)
class DynamicalPhases:
    """Spectral (-<H> tau) and quadrature (integrated connection) values."""

    spectral: float
    quadrature: float


def poisson_tail(mean: float, cutoff: int) -> float:
    """Probability mass of a Poisson(mean) variable strictly above cutoff."""
    if mean <= 0.0:
        return 0.0
    return float(special.gammainc(cutoff + 1, mean))


def fock_cutoff(
    rho: float,
    tail_bound: float,
    *,
    floor: int = FOCK_FLOOR,
    cap: int = FOCK_CAP,
) -> int:
    """Smallest cutoff whose Poisson(rho^2) tail mass stays below tail_bound."""
    mean = rho * rho
    n = max(floor, math.ceil(mean))
    while poisson_tail(mean, n) >= tail_bound:
        if n >= cap:
            raise CapacityError(
                f"amplitude rho={rho} needs a Fock cutoff above the cap {cap}"
            )
        n += 1
    return n


def _resolve_cutoff(rhos: Sequence[float], config: OracleConfig) -> int:
    if config.n_max_override is not None:
        n = config.n_max_override
        worst = max(poisson_tail(r * r, n) for r in rhos)
        if worst >= config.trunc_tol:
            raise TruncationError(
                f"cutoff override {n} leaves tail mass {worst:.3e} >= {config.trunc_tol:.1e}"
            )
        return n
    return max(fock_cutoff(r, config.trunc_tol) for r in rhos)


def coherent_amplitudes(alpha: CoherentParam, n_max: int) -> np.ndarray:
    """Number-basis amplitudes e^{-rho^2/2} (rho e^{i phi})^n / sqrt(n!) up to n_max.

    Magnitudes are formed in log space so large amplitudes neither overflow
    nor underflow before the tail.
    """
    count = n_max + 1
    if alpha.rho == 0.0:
        amps = np.zeros(count, dtype=complex)
        amps[0] = 1.0
        return amps
    n = np.arange(count)
    log_mag = -0.5 * alpha.rho**2 + n * math.log(alpha.rho) - 0.5 * special.gammaln(n + 1.0)
    return np.exp(log_mag) * np.exp(1j * alpha.phi * n)


def build_coherent(alpha: CoherentParam, config: OracleConfig | None = None) -> TruncatedState:
    """Truncated coherent state; the squared-norm deficit stays below trunc_tol."""
    config = config or OracleConfig()
    n = _resolve_cutoff([alpha.rho], config)
    return TruncatedState(coherent_amplitudes(alpha, n), (n,))


def build_entangled(spec: EntangledSpec, config: OracleConfig | None = None) -> TruncatedState:
    """Normalized two-mode grid for the two-branch superposition.

    The per-mode cutoff covers the tails of both labels living on that mode;
    the normalization constant is the numerically computed vector norm, taken
    positive real.
    """
    config = config or OracleConfig()
    n1 = _resolve_cutoff([spec.alpha.rho, spec.beta.rho], config)
    n2 = _resolve_cutoff([spec.mu.rho, spec.nu.rho], config)
    branch1 = np.outer(coherent_amplitudes(spec.alpha, n1), coherent_amplitudes(spec.mu, n2))
    branch2 = np.outer(coherent_amplitudes(spec.beta, n1), coherent_amplitudes(spec.nu, n2))
    half = 0.5 * spec.theta
    grid = (
        np.exp(-0.5j * spec.varphi) * math.cos(half) * branch1
        + np.exp(0.5j * spec.varphi) * math.sin(half) * branch2
    )
    nsq = float(np.vdot(grid, grid).real)
    if nsq <= DEFAULT_NORM_EPS:
        raise DegenerateStateError(
            f"branches cancel destructively: squared norm {nsq:.3e} <= {DEFAULT_NORM_EPS:.1e}"
        )
    return TruncatedState(grid / math.sqrt(nsq), (n1, n2))


def _mode_frequencies(omegas: OmegaLike, modes: int) -> tuple[float, ...]:
    if isinstance(omegas, (int, float)):
        ws: tuple[float, ...] = (float(omegas),)
    else:
        ws = tuple(float(w) for w in omegas)
    if len(ws) != modes:
        raise ValueError(f"got {len(ws)} frequencies for a {modes}-mode state")
    for w in ws:
        _checked_finite("omega", w)
        if w < 0.0:
            raise ValueError(f"frequencies must be nonnegative, got {w}")
    return ws


def _energy_grid(state: TruncatedState, ws: tuple[float, ...]) -> np.ndarray:
    """Diagonal energies omega (n + 1/2) summed over modes, shaped like coeffs."""
    levels = [w * (np.arange(n + 1) + 0.5) for w, n in zip(ws, state.n_max)]
    if state.modes == 1:
        return levels[0]
    return levels[0][:, None] + levels[1][None, :]


def evolve(state: TruncatedState, omegas: OmegaLike, t: float) -> TruncatedState:
    """Advance the state by time t: each amplitude picks up e^{-i omega (n + 1/2) t}."""
    t = _checked_finite("t", t)
    ws = _mode_frequencies(omegas, state.modes)
    phases = np.exp(-1j * t * _energy_grid(state, ws))
    return TruncatedState(state.coeffs * phases, state.n_max)


def state_overlap(first: TruncatedState, second: TruncatedState) -> complex:
    """Inner product <first|second> over a shared truncated basis."""
    if first.n_max != second.n_max:
        raise ValueError(f"basis mismatch: {first.n_max} vs {second.n_max}")
    return complex(np.vdot(first.coeffs, second.coeffs))


def mean_energy(state: TruncatedState, omegas: OmegaLike) -> float:
    """Expectation of the diagonal Hamiltonian, conserved under evolve."""
    ws = _mode_frequencies(omegas, state.modes)
    energies = _energy_grid(state, ws)
    mags = state.coeffs.real**2 + state.coeffs.imag**2
    return float((energies * mags).sum())


def oracle_total_phase(
    initial: TruncatedState,
    final: TruncatedState,
    *,
    overlap_eps: float = DEFAULT_OVERLAP_EPS,
) -> float:
    """Principal argument of <initial|final>."""
    ov = state_overlap(initial, final)
    if abs(ov) < overlap_eps:
        raise UndefinedTotalPhaseError(
            f"overlap magnitude {abs(ov):.3e} below {overlap_eps:.1e}; total phase undefined"
        )
    return math.atan2(ov.imag, ov.real)


def quadrature_dynamical_phase(
    state: TruncatedState,
    omegas: OmegaLike,
    tau: float,
    time_steps: int,
    *,
    gauge_rate: Callable[[float], float] | None = None,
    time_map: tuple[Callable[[float], float], Callable[[float], float]] | None = None,
) -> float:
    """Composite-trapezoid value of the dynamical phase integral over [0, tau].

    Samples the connection -i <psi(t)| d/dt |psi(t)> on a uniform grid of
    time_steps points, evaluating the evolved amplitudes and their exact
    diagonal derivative at each node.  gauge_rate, when given, is d kappa/dt
    for a trajectory multiplied by e^{i kappa(t)} and adds to the integrand.
    time_map = (t_of_s, dt_of_s) traverses the same physical path along a
    reparametrized clock t = t_of_s(s), with s uniform on [0, tau].
    """
    tau = _checked_finite("tau", tau)
    if tau < 0.0:
        raise ValueError(f"tau must be nonnegative, got {tau}")
    if time_steps < 2:
        raise ValueError(f"time_steps must be >= 2, got {time_steps}")
    if tau == 0.0:
        return 0.0
    ws = _mode_frequencies(omegas, state.modes)
    energies = _energy_grid(state, ws).ravel()
    base = state.coeffs.ravel()

    nodes = np.linspace(0.0, tau, time_steps)
    integrand = np.empty(time_steps)
    for k, s in enumerate(nodes):
        t = time_map[0](s) if time_map is not None else s
        scale = time_map[1](s) if time_map is not None else 1.0
        evolved = base * np.exp(-1j * energies * t)
        value = -float((energies * (evolved.real**2 + evolved.imag**2)).sum())
        if gauge_rate is not None:
            value += gauge_rate(t)
        integrand[k] = value * scale
    step = tau / (time_steps - 1)
    return float(step * (0.5 * integrand[0] + integrand[1:-1].sum() + 0.5 * integrand[-1]))


def _subject_state(subject: Subject, config: OracleConfig) -> TruncatedState:
    if isinstance(subject, TruncatedState):
        return subject
    if isinstance(subject, CoherentParam):
        return build_coherent(subject, config)
    if isinstance(subject, EntangledSpec):
        return build_entangled(subject, config)
    raise ValueError(f"cannot build a state from {type(subject).__name__}")


def oracle_dynamical_phase(
    subject: Subject,
    omegas: OmegaLike,
    tau: float,
    config: OracleConfig | None = None,
) -> DynamicalPhases:
    """Dynamical phase computed two independent ways.

    Spectral: -<H> tau using the conserved mean energy.  Quadrature: the
    trapezoid integral of the sampled connection.  The two must agree within
    max(1e-10, 10 / time_steps^2) or the oracle declares itself inconsistent.
    """
    config = config or OracleConfig()
    state = _subject_state(subject, config)
    spectral = -mean_energy(state, omegas) * tau
    quadrature = quadrature_dynamical_phase(state, omegas, tau, config.time_steps)
    bound = max(1e-10, 10.0 / config.time_steps**2)
    if abs(spectral - quadrature) > bound:
        raise OracleInconsistencyError(
            f"spectral {spectral!r} and quadrature {quadrature!r} disagree beyond {bound:.3e}"
        )
    return DynamicalPhases(spectral=spectral, quadrature=quadrature)


def oracle_geometric_phase(
    subject: Subject,
    omegas: OmegaLike,
    tau: float,
    config: OracleConfig | None = None,
    *,
    overlap_eps: float = DEFAULT_OVERLAP_EPS,
) -> float:
    """Geometric phase from the definitions: arg of overlap minus -<H> tau.

    The dynamical part uses the spectral value, exact up to truncation; the
    result is a principal value shifted by an unbounded real, so comparisons
    against closed forms go through circle_distance.
    """
    config = config or OracleConfig()
    tau = _checked_finite("tau", tau)
    if tau < 0.0:
        raise ValueError(f"tau must be nonnegative, got {tau}")
    state = _subject_state(subject, config)
    final = evolve(state, omegas, tau)
    total = oracle_total_phase(state, final, overlap_eps=overlap_eps)
    return total + mean_energy(state, omegas) * tau
