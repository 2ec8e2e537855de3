"""Gauge and reparametrization invariance of the oracle's geometric phase.

A trajectory multiplied by e^{i kappa(t)} shifts the total and (quadrature)
dynamical phases by kappa(tau) - kappa(0) while their difference stays put;
traversing the same path on a reparametrized clock changes nothing.  Both
properties are checked at the default 4096-point grid.
"""

import cmath
import math

import pytest

from cohphase import (
    CoherentParam,
    EntangledSpec,
    TruncatedState,
    build_coherent,
    build_entangled,
    circle_distance,
    evolve,
    oracle_total_phase,
    quadrature_dynamical_phase,
)

TIME_STEPS = 4096
GAUGE_BOUND = max(1e-8, 100.0 / TIME_STEPS**2)
REPARAM_BOUND = 1e-8


def single_mode_path():
    state = build_coherent(CoherentParam(1.0, 0.4))
    return state, 1.3


def two_mode_path():
    spec = EntangledSpec.antipodal(CoherentParam(1.0, 0.7), CoherentParam(0.8, 1.9), 1.2, 0.5)
    return build_entangled(spec), (1.1, 0.7)


def gauge_twisted_final(final: TruncatedState, phase: float) -> TruncatedState:
    return TruncatedState(final.coeffs * cmath.exp(1j * phase), final.n_max)


@pytest.mark.parametrize("amplitude", [0.0, 0.8, 2.0])
@pytest.mark.parametrize("frequency", [1.0, 3.0])
@pytest.mark.parametrize("tau", [0.9, 2.5])
def test_gauge_invariance_single_mode(amplitude, frequency, tau):
    state, omega = single_mode_path()
    kappa = lambda t: amplitude * math.sin(frequency * t)
    rate = lambda t: amplitude * frequency * math.cos(frequency * t)
    shift = kappa(tau) - kappa(0.0)

    final = evolve(state, omega, tau)
    chi = oracle_total_phase(state, final)
    delta = quadrature_dynamical_phase(state, omega, tau, TIME_STEPS)
    chi_twisted = oracle_total_phase(state, gauge_twisted_final(final, kappa(tau)))
    delta_twisted = quadrature_dynamical_phase(state, omega, tau, TIME_STEPS, gauge_rate=rate)

    assert circle_distance(chi_twisted, chi + shift) < 1e-10
    assert abs(delta_twisted - delta - shift) < GAUGE_BOUND
    assert circle_distance(chi_twisted - delta_twisted, chi - delta) < GAUGE_BOUND


@pytest.mark.parametrize("amplitude,frequency", [(0.8, 1.0), (2.0, 3.0)])
def test_gauge_invariance_two_modes(amplitude, frequency):
    state, omegas = two_mode_path()
    tau = 1.7
    kappa = lambda t: amplitude * math.sin(frequency * t)
    rate = lambda t: amplitude * frequency * math.cos(frequency * t)
    shift = kappa(tau) - kappa(0.0)

    final = evolve(state, omegas, tau)
    chi = oracle_total_phase(state, final)
    delta = quadrature_dynamical_phase(state, omegas, tau, TIME_STEPS)
    chi_twisted = oracle_total_phase(state, gauge_twisted_final(final, kappa(tau)))
    delta_twisted = quadrature_dynamical_phase(state, omegas, tau, TIME_STEPS, gauge_rate=rate)

    assert circle_distance(chi_twisted, chi + shift) < 1e-10
    assert abs(delta_twisted - delta - shift) < GAUGE_BOUND
    assert circle_distance(chi_twisted - delta_twisted, chi - delta) < GAUGE_BOUND


@pytest.mark.parametrize("tau", [1.1, 2.8])
def test_reparametrization_invariance_single_mode(tau):
    state, omega = single_mode_path()
    final = evolve(state, omega, tau)
    chi = oracle_total_phase(state, final)
    delta = quadrature_dynamical_phase(state, omega, tau, TIME_STEPS)
    # same endpoints, quadratically stretched clock t(s) = s^2 / tau
    delta_reparam = quadrature_dynamical_phase(
        state,
        omega,
        tau,
        TIME_STEPS,
        time_map=(lambda s: s * s / tau, lambda s: 2.0 * s / tau),
    )
    assert circle_distance(chi - delta_reparam, chi - delta) < REPARAM_BOUND


def test_reparametrization_invariance_two_modes():
    state, omegas = two_mode_path()
    tau = 1.9
    final = evolve(state, omegas, tau)
    chi = oracle_total_phase(state, final)
    delta = quadrature_dynamical_phase(state, omegas, tau, TIME_STEPS)
    delta_reparam = quadrature_dynamical_phase(
        state,
        omegas,
        tau,
        TIME_STEPS,
        time_map=(lambda s: s * s / tau, lambda s: 2.0 * s / tau),
    )
    assert circle_distance(chi - delta_reparam, chi - delta) < REPARAM_BOUND
