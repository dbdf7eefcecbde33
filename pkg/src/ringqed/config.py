"""Scenario configuration: a single strict JSON document.

Top-level keys: geometry, qubit, simulation, decay, output.  Every
physical quantity is an SI number with the unit encoded in the key name
(rho1_m, ej_over_h_hz, ...).  Unknown keys anywhere are a validation
error; grids are either explicit strictly-increasing arrays or
{"start", "stop", "num"} linspace objects.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .cavity import CavityGeometry
from .constants import constants
from .qubit import QubitParams

PRODUCTS = ("mode", "fig2", "fig3a", "fig3b", "rabi", "decay")

DEFAULT_FIG2_GRID = np.linspace(0.05, 1.0, 20)


class ConfigError(ValueError):
    """Scenario file failed validation; message names the offending field."""


@dataclass
class Scenario:
    """Validated scenario; geometry/qubit/decay sections may be absent."""

    geometry: CavityGeometry | None = None
    qubit_params: QubitParams | None = None
    sin_gamma: float | None = None          # override form
    omega_q_hz: float | None = None         # override form; None = resonant with the cavity
    time_grid_s: np.ndarray = field(default_factory=lambda: np.linspace(0.0, 2.0e-7, 2001))
    detuning_grid_hz: np.ndarray = field(default_factory=lambda: np.linspace(-1.054e8, 1.054e8, 81))
    fig2_ratio_grid: np.ndarray = field(default_factory=lambda: DEFAULT_FIG2_GRID.copy())
    initial_excited: bool = True
    initial_photons: int = 0
    n_cut: int | None = None                # None = automatic margin
    rwa: bool = True
    junction_length_m: float | None = None
    decay_omega_q_hz: float | None = None   # None = scenario qubit frequency
    out_dir: str = "results"
    products: tuple[str, ...] = PRODUCTS
    figures: bool = False


def load_scenario(path: str) -> Scenario:
    """Parse and validate a scenario JSON file."""
    try:
        with open(path, encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"config parse error in {path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return scenario_from_dict(raw)


def scenario_from_dict(raw: object) -> Scenario:
    """Validate an already-parsed configuration document."""
    doc = _require_mapping(raw, "config")
    _reject_unknown(doc, "config", {"geometry", "qubit", "simulation", "decay", "output"})
    scenario = Scenario()

    if "geometry" in doc:
        geo = _require_mapping(doc["geometry"], "geometry")
        _reject_unknown(geo, "geometry", {"rho1_m", "rho2_m", "delta_z_m"})
        rho1 = _number(geo, "geometry", "rho1_m", positive=True)
        rho2 = _number(geo, "geometry", "rho2_m", positive=True)
        delta_z = _number(geo, "geometry", "delta_z_m", positive=True)
        if not rho2 > rho1:
            raise ConfigError(
                f"geometry.rho2_m: violated invariant 0 < rho1 < rho2 (rho1_m={rho1}, rho2_m={rho2})"
            )
        scenario.geometry = CavityGeometry(rho1=rho1, rho2=rho2, delta_z=delta_z)

    if "qubit" in doc:
        _parse_qubit(_require_mapping(doc["qubit"], "qubit"), scenario)
    else:
        scenario.sin_gamma = 1.0

    if "simulation" in doc:
        _parse_simulation(_require_mapping(doc["simulation"], "simulation"), scenario)

    if "decay" in doc:
        dec = _require_mapping(doc["decay"], "decay")
        _reject_unknown(dec, "decay", {"junction_length_m", "omega_q_over_2pi_hz"})
        scenario.junction_length_m = _number(dec, "decay", "junction_length_m", positive=True)
        if "omega_q_over_2pi_hz" in dec:
            scenario.decay_omega_q_hz = _number(dec, "decay", "omega_q_over_2pi_hz", positive=True)

    if "output" in doc:
        out = _require_mapping(doc["output"], "output")
        _reject_unknown(out, "output", {"dir", "products", "figures"})
        if "dir" in out:
            if not isinstance(out["dir"], str) or not out["dir"]:
                raise ConfigError("output.dir: must be a non-empty string")
            scenario.out_dir = out["dir"]
        if "products" in out:
            items = out["products"]
            if not isinstance(items, list) or not all(isinstance(p, str) for p in items):
                raise ConfigError("output.products: must be a list of product names")
            unknown = [p for p in items if p not in PRODUCTS]
            if unknown:
                raise ConfigError(
                    f"output.products: unknown product(s) {unknown}; valid: {list(PRODUCTS)}"
                )
            scenario.products = tuple(items)
        if "figures" in out:
            scenario.figures = _boolean(out, "output", "figures")

    return scenario


def _parse_qubit(sec: dict, scenario: Scenario) -> None:
    params_keys = {"ec_over_h_hz", "ej_over_h_hz", "n_g"}
    override_keys = {"sin_gamma", "omega_q_over_2pi_hz"}
    _reject_unknown(sec, "qubit", params_keys | override_keys)
    has_params = bool(params_keys & sec.keys())
    has_override = bool(override_keys & sec.keys())
    if has_params and has_override:
        raise ConfigError(
            "qubit: give either Cooper-pair-box parameters (ec_over_h_hz, ej_over_h_hz, n_g) "
            "or a (sin_gamma, omega_q_over_2pi_hz) override, not both"
        )
    if has_params:
        h = constants().h
        scenario.qubit_params = QubitParams(
            e_c=h * _number(sec, "qubit", "ec_over_h_hz", positive=True),
            e_j=h * _number(sec, "qubit", "ej_over_h_hz", non_negative=True),
            n_g=_number(sec, "qubit", "n_g"),
        )
    else:
        sin_gamma = _number(sec, "qubit", "sin_gamma")
        if not 0.0 <= sin_gamma <= 1.0:
            raise ConfigError(f"qubit.sin_gamma: must lie in [0, 1], got {sin_gamma}")
        scenario.sin_gamma = sin_gamma
        if "omega_q_over_2pi_hz" in sec:
            scenario.omega_q_hz = _number(sec, "qubit", "omega_q_over_2pi_hz", positive=True)


def _parse_simulation(sec: dict, scenario: Scenario) -> None:
    allowed = {
        "time_grid_s",
        "detuning_grid_over_2pi_hz",
        "fig2_ratio_grid",
        "initial_qubit",
        "initial_photons",
        "n_cut",
        "rwa",
    }
    _reject_unknown(sec, "simulation", allowed)
    if "time_grid_s" in sec:
        scenario.time_grid_s = _grid(sec["time_grid_s"], "simulation.time_grid_s")
    if "detuning_grid_over_2pi_hz" in sec:
        scenario.detuning_grid_hz = _grid(
            sec["detuning_grid_over_2pi_hz"], "simulation.detuning_grid_over_2pi_hz"
        )
    if "fig2_ratio_grid" in sec:
        grid = _grid(sec["fig2_ratio_grid"], "simulation.fig2_ratio_grid")
        if grid.size and grid[0] <= 0.0:
            raise ConfigError("simulation.fig2_ratio_grid: ratios must be positive")
        scenario.fig2_ratio_grid = grid
    if "initial_qubit" in sec:
        state = sec["initial_qubit"]
        if state not in ("e", "g"):
            raise ConfigError(f"simulation.initial_qubit: must be 'e' or 'g', got {state!r}")
        scenario.initial_excited = state == "e"
    if "initial_photons" in sec:
        n = sec["initial_photons"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ConfigError(f"simulation.initial_photons: must be an integer >= 0, got {n!r}")
        scenario.initial_photons = n
    if "n_cut" in sec and sec["n_cut"] is not None:
        n = sec["n_cut"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ConfigError(f"simulation.n_cut: must be an integer >= 1 or null, got {n!r}")
        scenario.n_cut = n
    if "rwa" in sec:
        scenario.rwa = _boolean(sec, "simulation", "rwa")


def _grid(value: object, path: str) -> np.ndarray:
    """Grid either as an explicit array or a {start, stop, num} linspace."""
    if isinstance(value, list):
        try:
            grid = np.asarray([float(v) for v in value], dtype=float)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{path}: entries must be numbers") from exc
        if grid.size and not np.all(np.isfinite(grid)):
            raise ConfigError(f"{path}: entries must be finite")
        if grid.size > 1 and not np.all(np.diff(grid) > 0.0):
            raise ConfigError(f"{path}: must be strictly increasing")
        return grid
    if isinstance(value, dict):
        _reject_unknown(value, path, {"start", "stop", "num"})
        start = _number(value, path, "start")
        stop = _number(value, path, "stop")
        num = value.get("num")
        if not isinstance(num, int) or isinstance(num, bool) or num < 2:
            raise ConfigError(f"{path}.num: must be an integer >= 2, got {num!r}")
        if not stop > start:
            raise ConfigError(f"{path}: must be strictly increasing (stop <= start)")
        return np.linspace(start, stop, num)
    raise ConfigError(f"{path}: must be an array or a {{start, stop, num}} object")


def _require_mapping(value: object, path: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(f"{path}: must be a JSON object")
    return value


def _reject_unknown(sec: dict, path: str, allowed: set[str]) -> None:
    unknown = sorted(set(sec) - allowed)
    if unknown:
        raise ConfigError(f"{path}: unknown key(s) {unknown}; allowed: {sorted(allowed)}")


def _number(
    sec: dict, path: str, key: str, positive: bool = False, non_negative: bool = False
) -> float:
    if key not in sec:
        raise ConfigError(f"{path}.{key}: required key missing")
    value = sec[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}.{key}: must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f"{path}.{key}: must be finite")
    if positive and not value > 0.0:
        raise ConfigError(f"{path}.{key}: must be positive, got {value}")
    if non_negative and value < 0.0:
        raise ConfigError(f"{path}.{key}: must be non-negative, got {value}")
    return value


def _boolean(sec: dict, path: str, key: str) -> bool:
    value = sec[key]
    if not isinstance(value, bool):
        raise ConfigError(f"{path}.{key}: must be true or false, got {value!r}")
    return value
