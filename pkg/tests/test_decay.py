import math

import pytest

from ringqed import DecayParams, coherence_budget, spontaneous_rate

TWO_PI = 2.0 * math.pi

REFERENCE_PARAMS = DecayParams(omega_q=TWO_PI * 5e9, junction_length=300e-9, sin_gamma=1.0)


def test_params_validation():
    with pytest.raises(ValueError):
        DecayParams(omega_q=1.0, junction_length=0.0, sin_gamma=1.0)
    with pytest.raises(ValueError):
        DecayParams(omega_q=1.0, junction_length=1e-7, sin_gamma=1.5)


def test_reference_decay_time():
    rate = spontaneous_rate(REFERENCE_PARAMS)
    assert 0.72 < 1.0 / rate < 0.95          # the reference ~0.8 s with a 10% band
    assert abs(rate - 1.21) / 1.21 < 0.01    # hand evaluation of the rate formula


def test_decoupled_dipole():
    silent = DecayParams(omega_q=TWO_PI * 5e9, junction_length=300e-9, sin_gamma=0.0)
    assert spontaneous_rate(silent) == 0.0


def test_scaling_laws():
    base = spontaneous_rate(REFERENCE_PARAMS)

    doubled_freq = DecayParams(
        omega_q=2.0 * REFERENCE_PARAMS.omega_q,
        junction_length=REFERENCE_PARAMS.junction_length,
        sin_gamma=1.0,
    )
    assert abs(spontaneous_rate(doubled_freq) / base - 8.0) < 1e-12

    quadrupled_length = DecayParams(
        omega_q=REFERENCE_PARAMS.omega_q,
        junction_length=4.0 * REFERENCE_PARAMS.junction_length,
        sin_gamma=1.0,
    )
    assert abs(spontaneous_rate(quadrupled_length) / base - 16.0) < 1e-12

    half_mixing = DecayParams(
        omega_q=REFERENCE_PARAMS.omega_q,
        junction_length=REFERENCE_PARAMS.junction_length,
        sin_gamma=0.5,
    )
    assert abs(spontaneous_rate(half_mixing) / base - 0.25) < 1e-12


def test_coherence_budget_reference_numbers():
    # Gamma ~ 1.21 1/s against Omega_R = 2g with g/2pi = 5.27 MHz
    budget = coherence_budget(spontaneous_rate(REFERENCE_PARAMS), TWO_PI * 2.0 * 5.27e6)
    assert abs(budget - 8.7e6) / 8.7e6 < 0.01


def test_coherence_budget_edges():
    assert coherence_budget(0.0, 1.0) == math.inf
    with pytest.raises(ValueError):
        coherence_budget(1.0, 0.0)

    # budget ~ 1/l^2 at fixed frequency and Rabi rate
    rabi = TWO_PI * 1e7
    short = coherence_budget(spontaneous_rate(REFERENCE_PARAMS), rabi)
    long = coherence_budget(
        spontaneous_rate(
            DecayParams(
                omega_q=REFERENCE_PARAMS.omega_q,
                junction_length=4.0 * REFERENCE_PARAMS.junction_length,
                sin_gamma=1.0,
            )
        ),
        rabi,
    )
    assert abs(short / long - 16.0) < 1e-12
