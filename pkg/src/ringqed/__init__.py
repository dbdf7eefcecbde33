"""Charge qubit coupled to the lowest mode of an annular microwave cavity.

Library layout:

- ``constants``: CODATA constants and unit conventions.
- ``cavity``: lowest-mode solver (half-order Bessel radial profile,
  Neumann walls), normalization integral, field amplitudes.
- ``qubit``: Cooper-pair-box spectrum, mixing angle, charge matrix element.
- ``coupling``: scalar-potential amplitudes outside the cavity, geometric
  factor f, and the qubit-cavity coupling strength g.
- ``dynamics``: truncated Jaynes-Cummings Hamiltonian, dressed states,
  exact eigendecomposition propagation, Fock-state Rabi scaling.
- ``decay``: free-space spontaneous-emission rate and coherence budget.
- ``config`` / ``runner`` / ``cli``: scenario JSON, CSV products and the
  command-line front end (``ringqed`` or ``python -m ringqed``).
"""

from .cavity import (
    CavityGeometry,
    CavityMode,
    FieldAmplitudes,
    beta_factor,
    field_amplitudes,
    radial_u,
    solve_lowest_mode,
)
from .constants import PhysicalConstants, constants
from .coupling import (
    CouplingResult,
    coupling_from_sin_gamma,
    coupling_g,
    f_factor,
    potential_amplitudes,
)
from .decay import DecayParams, coherence_budget, spontaneous_rate
from .dynamics import (
    DressedPair,
    EvolutionResult,
    JCSystem,
    basis_index,
    build_hamiltonian,
    dressed_frequencies,
    evolve,
    fock_initial_splitting,
    lamb_shift,
    rabi_populations_analytic,
)
from .qubit import QubitParams, QubitSpectrum, charge_matrix_element, qubit_spectrum

__all__ = [
    "CavityGeometry",
    "CavityMode",
    "CouplingResult",
    "DecayParams",
    "DressedPair",
    "EvolutionResult",
    "FieldAmplitudes",
    "JCSystem",
    "PhysicalConstants",
    "QubitParams",
    "QubitSpectrum",
    "basis_index",
    "beta_factor",
    "build_hamiltonian",
    "charge_matrix_element",
    "coherence_budget",
    "constants",
    "coupling_from_sin_gamma",
    "coupling_g",
    "dressed_frequencies",
    "evolve",
    "f_factor",
    "field_amplitudes",
    "fock_initial_splitting",
    "lamb_shift",
    "potential_amplitudes",
    "qubit_spectrum",
    "rabi_populations_analytic",
    "radial_u",
    "solve_lowest_mode",
    "spontaneous_rate",
]

__version__ = "0.1.0"
