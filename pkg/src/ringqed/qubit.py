"""Cooper-pair-box charge qubit: spectrum, mixing angle, charge matrix element.

Two charge states |0>, |1> differing by one Cooper pair, with charging
energy E_c and Josephson coupling E_J, form the Hamiltonian

    H = sum_n E_c (n - n_g)^2 |n><n| - (E_J/2) (|1><0| + |0><1|).

Diagonalization rotates the basis by half the mixing angle gamma, where
tan(gamma) = E_J / (E_c (1 - 2 n_g)), and splits the levels by
hbar*omega_q = sqrt([E_c (1 - 2 n_g)]^2 + E_J^2).  The Cooper-pair charge
operator 2e|1><1| then has off-diagonal element e*sin(gamma) in the
eigenbasis; that element is what couples the qubit to an external
potential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import constants


@dataclass(frozen=True)
class QubitParams:
    """Cooper-pair-box parameters."""

    e_c: float   # charging energy of a single Cooper pair, J
    e_j: float   # Josephson coupling magnitude, J
    n_g: float   # dimensionless gate parameter

    def __post_init__(self) -> None:
        if not self.e_c > 0.0:
            raise ValueError(f"charging energy must be positive, got {self.e_c}")
        if self.e_j < 0.0:
            raise ValueError(f"Josephson coupling must be non-negative, got {self.e_j}")


@dataclass(frozen=True)
class QubitSpectrum:
    """Diagonalized two-level spectrum."""

    energy_g: float   # ground eigenenergy, J
    energy_e: float   # excited eigenenergy, J
    omega_q: float    # angular splitting (E_e - E_g)/hbar, rad/s
    gamma_mix: float  # mixing angle, rad, in [0, pi]
    sin_gamma: float  # sin(gamma_mix), in [0, 1]

    @property
    def degenerate(self) -> bool:
        """True at the exact degeneracy omega_q = 0 (E_J = 0, n_g = 1/2)."""
        return self.omega_q == 0.0

    def eigenvectors(self) -> np.ndarray:
        """Columns (|g>, |e>) in the charge basis: the rotation by gamma/2."""
        half = 0.5 * self.gamma_mix
        c, s = math.cos(half), math.sin(half)
        return np.array([[c, -s], [s, c]])


def qubit_spectrum(params: QubitParams) -> QubitSpectrum:
    """Diagonalize the charge-qubit Hamiltonian.

    Eigenenergies come from a dense 2x2 eigensolve of
    [[eps0, -E_J/2], [-E_J/2, eps1]] with eps_n = E_c (n - n_g)^2; the
    splitting and mixing angle use the closed forms.  The two-argument
    arctangent keeps gamma in [0, pi] (so sin(gamma) >= 0) and continuous
    through the charge-degeneracy point n_g = 1/2.
    """
    eps0 = params.e_c * params.n_g**2
    eps1 = params.e_c * (1.0 - params.n_g) ** 2
    h2 = np.array([[eps0, -0.5 * params.e_j], [-0.5 * params.e_j, eps1]])
    energy_g, energy_e = np.linalg.eigvalsh(h2)

    asym = params.e_c * (1.0 - 2.0 * params.n_g)
    gamma = math.atan2(params.e_j, asym)
    omega_q = math.hypot(asym, params.e_j) / constants().hbar
    return QubitSpectrum(
        energy_g=float(energy_g),
        energy_e=float(energy_e),
        omega_q=omega_q,
        gamma_mix=gamma,
        sin_gamma=math.sin(gamma),
    )


def charge_matrix_element(spectrum: QubitSpectrum) -> float:
    """Off-diagonal charge matrix element e*sin(gamma), C."""
    return constants().e * spectrum.sin_gamma
