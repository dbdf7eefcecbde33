"""Scenario orchestration: solve the pipeline and emit CSV products.

Every product is deterministic byte-for-byte for an identical scenario:
values are formatted with 12 significant digits and lines end with LF.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from . import cavity, coupling, decay, dynamics, qubit
from .config import ConfigError, Scenario

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Product:
    """One named CSV data product."""

    name: str
    header: tuple[str, ...]
    rows: tuple[tuple, ...]

    def to_csv(self) -> str:
        lines = [",".join(self.header)]
        for row in self.rows:
            lines.append(",".join(_format_cell(cell) for cell in row))
        return "\n".join(lines) + "\n"


def _format_cell(cell) -> str:
    if cell is None:
        return ""
    if isinstance(cell, str):
        return cell
    return f"{cell:.12g}"


def write_product(product: Product, out: str | None) -> None:
    """Write CSV to a path, or stdout for None/'-'. LF endings either way."""
    text = product.to_csv()
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


@dataclass(frozen=True)
class Pipeline:
    """Solved quantities shared by the dynamic products."""

    mode: cavity.CavityMode
    coupling: coupling.CouplingResult
    sin_gamma: float
    omega_q: float  # rad/s


def solve_pipeline(scenario: Scenario) -> Pipeline:
    """Solve mode and coupling; resolve the qubit frequency and mixing."""
    if scenario.geometry is None:
        raise ConfigError("this product requires a geometry section in the config")
    mode = cavity.solve_lowest_mode(scenario.geometry)

    if scenario.qubit_params is not None:
        spectrum = qubit.qubit_spectrum(scenario.qubit_params)
        sin_gamma, omega_q = spectrum.sin_gamma, spectrum.omega_q
    else:
        sin_gamma = scenario.sin_gamma if scenario.sin_gamma is not None else 1.0
        omega_q = (
            TWO_PI * scenario.omega_q_hz if scenario.omega_q_hz is not None else mode.omega
        )
    coupled = coupling.coupling_from_sin_gamma(mode, scenario.geometry, sin_gamma)
    return Pipeline(mode=mode, coupling=coupled, sin_gamma=sin_gamma, omega_q=omega_q)


def run_mode(scenario: Scenario) -> Product:
    """Mode report: wavenumber, frequency, coefficients, residuals."""
    if scenario.geometry is None:
        raise ConfigError("mode requires a geometry section in the config")
    mode = cavity.solve_lowest_mode(scenario.geometry)
    res_inner, res_outer = cavity.boundary_residuals(mode, scenario.geometry)
    rows = (
        ("k_rad_per_m", mode.k),
        ("k_rho1", mode.k * scenario.geometry.rho1),
        ("omega_over_2pi_hz", mode.frequency_hz),
        ("coeff_a", mode.coeff_a),
        ("coeff_b", mode.coeff_b),
        ("beta", mode.beta),
        ("boundary_residual_inner", res_inner),
        ("boundary_residual_outer", res_outer),
    )
    return Product(name="mode", header=("quantity", "value"), rows=rows)


def run_fig2(scenario: Scenario, warn=None) -> Product:
    """Geometric factor f over the width-ratio grid.

    Solver failures leave the f column empty for that row (with a warning
    through ``warn``); if every row fails the product is an error.
    """
    rows = []
    failures = 0
    for ratio in scenario.fig2_ratio_grid:
        try:
            value = coupling.f_factor(float(ratio))
        except cavity.CavityModeError as exc:
            failures += 1
            if warn is not None:
                warn(f"fig2: ratio {ratio:.6g} failed: {exc}")
            rows.append((float(ratio), None))
        else:
            rows.append((float(ratio), value))
    if rows and failures == len(rows):
        raise RuntimeError(f"fig2: all {failures} grid points failed to solve")
    return Product(name="fig2", header=("delta_rho_over_rho1", "f_factor"), rows=tuple(rows))


def run_fig3a(scenario: Scenario) -> Product:
    """Dressed branches (relative to the cavity) over the detuning grid."""
    pipe = solve_pipeline(scenario)
    g = pipe.coupling.g_angular
    rows = []
    for det_hz in scenario.detuning_grid_hz:
        delta = TWO_PI * float(det_hz)
        system = dynamics.JCSystem(omega=pipe.mode.omega, omega_q=pipe.mode.omega + delta, g=g)
        rabi = dynamics.dressed_frequencies(system).rabi
        rows.append(
            (float(det_hz), (delta + rabi) / 2.0 / TWO_PI, (delta - rabi) / 2.0 / TWO_PI)
        )
    return Product(
        name="fig3a",
        header=(
            "detuning_over_2pi_hz",
            "omega_plus_minus_omega_over_2pi_hz",
            "omega_minus_minus_omega_over_2pi_hz",
        ),
        rows=tuple(rows),
    )


def _evolution_product(name: str, result: dynamics.EvolutionResult) -> Product:
    rows = tuple(
        (float(t), float(p), float(n), float(w))
        for t, p, n, w in zip(result.times, result.p_excited, result.n_photon, result.norm)
    )
    return Product(name=name, header=("time_s", "p_excited", "n_photon", "norm"), rows=rows)


def run_fig3b(scenario: Scenario) -> Product:
    """Resonant vacuum Rabi oscillation from |e, 0>, numeric propagation."""
    pipe = solve_pipeline(scenario)
    system = dynamics.JCSystem(
        omega=pipe.mode.omega,
        omega_q=pipe.mode.omega,  # resonance by definition of this product
        g=pipe.coupling.g_angular,
        theta=pipe.coupling.theta,
        n_cut=scenario.n_cut if scenario.n_cut is not None else dynamics.default_n_cut(0, True),
        rwa=True,
    )
    _require_rabi_window(scenario.time_grid_s, dynamics.rabi_frequency(system), periods=2.0)
    result = dynamics.evolve(system, dynamics.basis_index(True, 0), scenario.time_grid_s)
    return _evolution_product("fig3b", result)


def run_rabi(scenario: Scenario) -> Product:
    """General time evolution with the scenario's initial state and flags."""
    pipe = solve_pipeline(scenario)
    n_cut = (
        scenario.n_cut
        if scenario.n_cut is not None
        else dynamics.default_n_cut(scenario.initial_photons, scenario.rwa)
    )
    system = dynamics.JCSystem(
        omega=pipe.mode.omega,
        omega_q=pipe.omega_q,
        g=pipe.coupling.g_angular,
        theta=pipe.coupling.theta,
        n_cut=n_cut,
        rwa=scenario.rwa,
    )
    state = dynamics.basis_index(scenario.initial_excited, scenario.initial_photons)
    result = dynamics.evolve(system, state, scenario.time_grid_s)
    return _evolution_product("rabi", result)


def run_decay(scenario: Scenario) -> Product:
    """Free-space decay report with the Rabi-period coherence budget."""
    if scenario.junction_length_m is None:
        raise ConfigError("decay requires a decay section with junction_length_m")
    pipe = solve_pipeline(scenario)
    omega_q = (
        TWO_PI * scenario.decay_omega_q_hz
        if scenario.decay_omega_q_hz is not None
        else pipe.omega_q
    )
    params = decay.DecayParams(
        omega_q=omega_q,
        junction_length=scenario.junction_length_m,
        sin_gamma=pipe.sin_gamma,
    )
    rate = decay.spontaneous_rate(params)
    rabi = 2.0 * pipe.coupling.g_angular
    budget = decay.coherence_budget(rate, rabi) if rabi > 0.0 else math.inf
    rows = (
        ("omega_q_over_2pi_hz", omega_q / TWO_PI),
        ("junction_length_m", params.junction_length),
        ("sin_gamma", params.sin_gamma),
        ("gamma_per_s", rate),
        ("decay_time_s", math.inf if rate == 0.0 else 1.0 / rate),
        ("rabi_over_2pi_hz", rabi / TWO_PI),
        ("rabi_periods_per_decay", budget),
    )
    return Product(name="decay", header=("quantity", "value"), rows=rows)


def _require_rabi_window(times: np.ndarray, rabi: float, periods: float) -> None:
    if times.size < 2:
        raise ConfigError("simulation.time_grid_s: need at least two sample times")
    span = float(times[-1] - times[0])
    needed = periods * TWO_PI / rabi
    if span < needed:
        raise ConfigError(
            f"simulation.time_grid_s: span {span:.3e} s covers less than {periods:g} "
            f"Rabi periods ({needed:.3e} s at Omega_R/2pi = {rabi / TWO_PI:.4g} Hz)"
        )


RUNNERS = {
    "mode": run_mode,
    "fig2": run_fig2,
    "fig3a": run_fig3a,
    "fig3b": run_fig3b,
    "rabi": run_rabi,
    "decay": run_decay,
}
