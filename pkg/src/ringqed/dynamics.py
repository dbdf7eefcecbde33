"""Jaynes-Cummings dynamics of the qubit coupled to one cavity mode.

The coupled system lives in the truncated product basis |s, n> with qubit
state s in {g, e} and photon number n = 0..n_cut, ordered by index
2n + (1 if s = e else 0).  The Hamiltonian is

    H = hbar*omega (a^dag a + 1/2) + hbar*omega_q |e><e|
        + hbar*g (sigma_+ + sigma_-) (a e^{i theta} + a^dag e^{-i theta}),

with the counter-rotating products sigma_- a and sigma_+ a^dag dropped
when the rotating-wave flag is set.  Propagation goes through an exact
eigendecomposition of the (small, dense, Hermitian) matrix, which is
unconditionally stable and exact up to the Fock truncation; a leak guard
on the top Fock level turns silent truncation error into a loud one.

Closed forms implemented alongside the numerics: dressed frequencies
omega_pm = omega + Delta/2 +- Omega_R/2 with Omega_R = sqrt(4 g^2 m +
Delta^2) for the m-excitation doublet, the dispersive (Lamb) shift
2 g^2 / (Omega_R + |Delta|), and the resonant vacuum Rabi oscillation
P_e(t) = cos^2(g t), n_ph(t) = sin^2(g t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import constants

TRUNCATION_LEAK_LIMIT = 1e-8


class TruncationLeakError(RuntimeError):
    """Population reached the top Fock level; n_cut is too small."""


@dataclass(frozen=True)
class JCSystem:
    """Coupled qubit-cavity system specification (all rates in rad/s)."""

    omega: float          # cavity angular frequency
    omega_q: float        # qubit angular frequency
    g: float              # coupling strength
    theta: float = 0.0    # interaction phase
    n_cut: int = 1        # Fock truncation (max photon number)
    rwa: bool = True      # drop counter-rotating terms

    def __post_init__(self) -> None:
        if self.n_cut < 1:
            raise ValueError(f"n_cut must be >= 1, got {self.n_cut}")

    @property
    def detuning(self) -> float:
        """Delta = omega_q - omega, rad/s."""
        return self.omega_q - self.omega

    @property
    def dim(self) -> int:
        return 2 * (self.n_cut + 1)


@dataclass(frozen=True)
class DressedPair:
    """One dressed doublet of the rotating-wave Hamiltonian."""

    omega_plus: float   # upper dressed frequency, rad/s
    omega_minus: float  # lower dressed frequency, rad/s
    rabi: float         # splitting Omega_R, rad/s
    manifold: int       # excitation number m >= 1


@dataclass(frozen=True)
class EvolutionResult:
    """Time series of qubit and photon observables."""

    times: np.ndarray      # sample times, s
    p_excited: np.ndarray  # qubit excited-state probability
    n_photon: np.ndarray   # mean photon number
    norm: np.ndarray       # state norm (unitarity check)


def basis_index(excited: bool, n_photons: int) -> int:
    """Index of the product state |s, n> in the truncated basis."""
    if n_photons < 0:
        raise ValueError(f"photon number must be >= 0, got {n_photons}")
    return 2 * n_photons + (1 if excited else 0)


def default_n_cut(initial_photons: int, rwa: bool) -> int:
    """Truncation margin: +10 levels for RWA runs, +20 without.

    RWA dynamics from a product state is exactly finite-dimensional; the
    counter-rotating terms leak weakly upward at g/omega ~ 1e-3.
    """
    return initial_photons + (10 if rwa else 20)


def rabi_frequency(system: JCSystem, manifold: int = 1) -> float:
    """Generalized Rabi frequency sqrt(4 g^2 m + Delta^2), rad/s."""
    if manifold < 1:
        raise ValueError(f"manifold must be >= 1, got {manifold}")
    return math.sqrt(4.0 * system.g**2 * manifold + system.detuning**2)


def dressed_frequencies(system: JCSystem, manifold: int = 1) -> DressedPair:
    """Dressed doublet omega +- of the m-excitation manifold (RWA closed form)."""
    rabi = rabi_frequency(system, manifold)
    center = system.omega + 0.5 * system.detuning
    return DressedPair(
        omega_plus=center + 0.5 * rabi,
        omega_minus=center - 0.5 * rabi,
        rabi=rabi,
        manifold=manifold,
    )


def lamb_shift(system: JCSystem) -> float:
    """Dispersive shift of the qubit-like dressed branch, rad/s.

    Equal to (Omega_R - |Delta|)/2, evaluated in the cancellation-free
    form 2 g^2 / (Omega_R + |Delta|); tends to g^2/|Delta| for
    |Delta| >> g.  Undefined at resonance (the full splitting remains).
    """
    delta = abs(system.detuning)
    if delta == 0.0:
        raise ValueError("lamb_shift requires a nonzero detuning")
    return 2.0 * system.g**2 / (rabi_frequency(system) + delta)


def rabi_populations_analytic(system: JCSystem, times) -> EvolutionResult:
    """Closed-form single-excitation Rabi oscillation from |e, 0> (RWA).

    At resonance P_e(t) = cos^2(Omega_R t / 2) with Omega_R = 2g; detuned,
    P_e(t) = 1 - (4 g^2 / Omega_R^2) sin^2(Omega_R t / 2).  The photon
    number is 1 - P_e (one shared excitation).
    """
    times = np.asarray(times, dtype=float)
    rabi = rabi_frequency(system)
    if rabi == 0.0:
        p_excited = np.ones_like(times)
    else:
        depth = 4.0 * system.g**2 / rabi**2
        p_excited = 1.0 - depth * np.sin(0.5 * rabi * times) ** 2
    return EvolutionResult(
        times=times,
        p_excited=p_excited,
        n_photon=1.0 - p_excited,
        norm=np.ones_like(times),
    )


def build_hamiltonian(system: JCSystem) -> np.ndarray:
    """Dense Hermitian matrix of the truncated Hamiltonian, J.

    Hermiticity holds exactly by construction (one triangle is filled and
    mirrored with the complex conjugate).
    """
    hbar = constants().hbar
    dim = system.dim
    diag = np.zeros(dim)
    for n in range(system.n_cut + 1):
        base = hbar * system.omega * (n + 0.5)
        diag[2 * n] = base
        diag[2 * n + 1] = base + hbar * system.omega_q

    phase = complex(math.cos(system.theta), math.sin(system.theta))
    lower = np.zeros((dim, dim), dtype=complex)
    for n in range(system.n_cut):
        amp = hbar * system.g * math.sqrt(n + 1.0)
        # rotating term sigma_+ a: <e,n|H|g,n+1> = hbar g sqrt(n+1) e^{i theta}
        lower[2 * n + 2, 2 * n + 1] = amp * phase.conjugate()
        if not system.rwa:
            # counter-rotating sigma_+ a^dag: <e,n+1|H|g,n> = hbar g sqrt(n+1) e^{-i theta}
            lower[2 * n + 3, 2 * n] = amp * phase.conjugate()

    h = lower + lower.conj().T
    h[np.diag_indices(dim)] = diag
    return h


def evolve(system: JCSystem, initial, times) -> EvolutionResult:
    """Propagate an initial state and record qubit/photon observables.

    Parameters
    ----------
    system : JCSystem
        System specification; its n_cut fixes the basis size.
    initial : int or array_like
        Basis index (see ``basis_index``) or a normalized complex
        amplitude vector of length ``system.dim``.
    times : array_like
        Sample times in seconds.

    Raises
    ------
    TruncationLeakError
        If the top Fock level holds more than 1e-8 population at any
        sample time.
    """
    dim = system.dim
    if isinstance(initial, (int, np.integer)):
        if not 0 <= initial < dim:
            raise ValueError(f"initial state index {initial} outside basis of size {dim}")
        psi0 = np.zeros(dim, dtype=complex)
        psi0[initial] = 1.0
    else:
        psi0 = np.asarray(initial, dtype=complex)
        if psi0.shape != (dim,):
            raise ValueError(f"initial state must have length {dim}, got shape {psi0.shape}")
        if abs(float(np.linalg.norm(psi0)) - 1.0) > 1e-9:
            raise ValueError("initial state must be normalized")

    times = np.asarray(times, dtype=float)
    energies, vectors = np.linalg.eigh(build_hamiltonian(system))
    amplitudes = vectors.conj().T @ psi0
    phases = np.exp(-1j * np.outer(times, energies) / constants().hbar)
    psi_t = (phases * amplitudes) @ vectors.T  # rows are psi(t) in the product basis

    populations = np.abs(psi_t) ** 2
    top_leak = populations[:, -2] + populations[:, -1]
    if float(np.max(top_leak)) > TRUNCATION_LEAK_LIMIT:
        raise TruncationLeakError(
            f"top Fock level n = {system.n_cut} reached population {float(np.max(top_leak)):.3e} "
            f"(limit {TRUNCATION_LEAK_LIMIT:g}); increase n_cut"
        )

    photon_numbers = np.repeat(np.arange(system.n_cut + 1), 2)
    return EvolutionResult(
        times=times,
        p_excited=populations[:, 1::2].sum(axis=1),
        n_photon=populations @ photon_numbers,
        norm=populations.sum(axis=1),
    )


def fock_initial_splitting(system: JCSystem, n_photons: int, excited: bool = True) -> float:
    """Rabi oscillation frequency from an n-photon Fock start at resonance.

    2|g| sqrt(n+1) when the qubit starts excited (|e, n>), 2|g| sqrt(n)
    when it starts in the ground state (|g, n>); the ratio across n
    carries the sqrt(n) scaling of the splitting.
    """
    if n_photons < 1:
        raise ValueError(f"photon number must be >= 1, got {n_photons}")
    excitations = n_photons + 1 if excited else n_photons
    return 2.0 * abs(system.g) * math.sqrt(excitations)
