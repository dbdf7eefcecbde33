"""Scalar potential outside the cavity and the nonlocal qubit-cavity coupling.

The oscillating surface charges of the two cavity walls produce, at the
center of the ring, retarded scalar-potential contributions with
amplitudes

    V_j0 = (-1)^j (hbar*omega/e) sqrt(alpha k delta_z / (2 pi^2 beta)) a_j,
    a_j = u(rho_j) / (k rho_j),                                j = 1, 2,

which add to a single phasor -V0 cos(omega t - theta) with

    V0    = (hbar*omega/e) sqrt(D^2 alpha k delta_z / (2 pi^2 beta)),
    D     = sqrt(a1^2 + a2^2 - 2 a1 a2 cos(k delta_rho)),
    theta = k rho1 - atan2(a2 sin(k delta_rho), a1 - a2 cos(k delta_rho)).

The coupling strength follows either from the potential amplitude,
hbar*g = (2e sin(gamma)) V0 / 2, or equivalently from the purely geometric
route

    g/omega = f(delta_rho/rho1) * sqrt(alpha delta_z / rho1) * sin(gamma),
    f       = sqrt(D^2 k rho1 / (2 pi^2 beta)).

Both routes are implemented independently and must agree; g is stored as a
non-negative magnitude since every downstream observable depends on g^2.
f depends only on the ratio delta_rho/rho1 (D, beta and k*rho1 are all
scale-invariant and quadratic-homogeneous in (A, B)).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .cavity import CavityGeometry, CavityMode, solve_lowest_mode
from .constants import constants
from .qubit import QubitSpectrum

# f_factor solves at this inner radius; scale invariance makes the value free,
# pinning one makes results reproducible bit-for-bit.
F_REFERENCE_RHO1 = 1.0

WEAK_COUPLING_LIMIT = 1e-2


class StrongCouplingWarning(UserWarning):
    """g/omega left the weak-coupling regime the rotating-wave treatment assumes."""


@dataclass(frozen=True)
class CouplingResult:
    """Potential amplitudes, geometric constants, and coupling strength.

    ``potential_amplitudes`` fills the geometric and potential fields and
    leaves the coupling triple (f_factor, g_over_omega, g_angular) as
    None; ``coupling_g`` returns the completed record.
    """

    a1: float       # u(rho1)/(k rho1), dimensionless
    a2: float       # u(rho2)/(k rho2), dimensionless
    big_d: float    # wall-contribution combination D, dimensionless
    v1_0: float     # inner-wall potential amplitude, V (signed)
    v2_0: float     # outer-wall potential amplitude, V (signed)
    v0: float       # total potential amplitude, V (non-negative)
    theta: float    # phase shift, rad, in (-pi, pi]
    f_factor: float | None = None      # geometric factor f(delta_rho/rho1)
    g_over_omega: float | None = None  # dimensionless coupling ratio
    g_angular: float | None = None     # coupling strength, rad/s (magnitude)


def wall_combination(a1: float, a2: float, k_delta_rho: float) -> float:
    """Combination D = sqrt(a1^2 + a2^2 - 2 a1 a2 cos(k delta_rho)).

    Vanishes when the two wall contributions cancel (a1 = a2 at zero
    retardation phase); equivalently |a1 - a2 e^{i k delta_rho}|.
    """
    return math.sqrt(a1 * a1 + a2 * a2 - 2.0 * a1 * a2 * math.cos(k_delta_rho))


def potential_amplitudes(mode: CavityMode, geometry: CavityGeometry) -> CouplingResult:
    """Scalar-potential amplitudes at the ring center for a solved mode."""
    phys = constants()
    x1 = mode.k * geometry.rho1
    x2 = mode.k * geometry.rho2
    a1 = mode.radial_profile(geometry.rho1) / x1
    a2 = mode.radial_profile(geometry.rho2) / x2

    k_drho = mode.k * geometry.delta_rho
    big_d = wall_combination(a1, a2, k_drho)

    volt_scale = phys.hbar * mode.omega / phys.e
    common = phys.alpha * mode.k * geometry.delta_z / (2.0 * math.pi**2 * mode.beta)
    v1_0 = -volt_scale * math.sqrt(common) * a1
    v2_0 = volt_scale * math.sqrt(common) * a2
    v0 = volt_scale * math.sqrt(big_d * big_d * common)

    theta = x1 - math.atan2(a2 * math.sin(k_drho), a1 - a2 * math.cos(k_drho))
    theta = math.remainder(theta, 2.0 * math.pi)  # wrap into (-pi, pi]
    if theta <= -math.pi:
        theta += 2.0 * math.pi

    return CouplingResult(a1=a1, a2=a2, big_d=big_d, v1_0=v1_0, v2_0=v2_0, v0=v0, theta=theta)


def mode_f_factor(mode: CavityMode, geometry: CavityGeometry) -> float:
    """Geometric factor f = sqrt(D^2 k rho1 / (2 pi^2 beta)) of a solved mode."""
    partial = potential_amplitudes(mode, geometry)
    x1 = mode.k * geometry.rho1
    return math.sqrt(partial.big_d**2 * x1 / (2.0 * math.pi**2 * mode.beta))


def f_factor(delta_rho_ratio: float) -> float:
    """Geometric coupling factor f(delta_rho/rho1).

    Solves the mode at the internal reference radius; the result depends
    only on the width ratio.  Propagates mode-solver errors.
    """
    if not delta_rho_ratio > 0.0:
        raise ValueError(f"delta_rho/rho1 must be positive, got {delta_rho_ratio}")
    rho1 = F_REFERENCE_RHO1
    geometry = CavityGeometry(rho1=rho1, rho2=rho1 * (1.0 + delta_rho_ratio), delta_z=rho1)
    return mode_f_factor(solve_lowest_mode(geometry), geometry)


def coupling_from_sin_gamma(
    mode: CavityMode, geometry: CavityGeometry, sin_gamma: float
) -> CouplingResult:
    """Complete coupling record for a given charge-mixing factor sin(gamma)."""
    partial = potential_amplitudes(mode, geometry)
    f = mode_f_factor(mode, geometry)
    g_over_omega = f * math.sqrt(constants().alpha * geometry.delta_z / geometry.rho1) * sin_gamma
    if g_over_omega >= WEAK_COUPLING_LIMIT:
        warnings.warn(
            f"g/omega = {g_over_omega:.3g} is outside the weak-coupling regime "
            f"(< {WEAK_COUPLING_LIMIT:g}) assumed by the rotating-wave treatment",
            StrongCouplingWarning,
            stacklevel=2,
        )
    return CouplingResult(
        a1=partial.a1,
        a2=partial.a2,
        big_d=partial.big_d,
        v1_0=partial.v1_0,
        v2_0=partial.v2_0,
        v0=partial.v0,
        theta=partial.theta,
        f_factor=f,
        g_over_omega=g_over_omega,
        g_angular=g_over_omega * mode.omega,
    )


def coupling_g(
    mode: CavityMode, geometry: CavityGeometry, spectrum: QubitSpectrum
) -> CouplingResult:
    """Qubit-cavity coupling strength for a solved mode and qubit spectrum."""
    return coupling_from_sin_gamma(mode, geometry, spectrum.sin_gamma)


def coupling_g_from_potential(result: CouplingResult, sin_gamma: float) -> float:
    """Coupling magnitude, rad/s, via the potential-amplitude route.

    hbar*g = (2e sin(gamma)) V0 / 2; the factor 2e is the Cooper-pair
    charge carried by the qubit charge operator.  Kept as an independent
    code path against the geometric route in ``coupling_from_sin_gamma``.
    """
    phys = constants()
    return (2.0 * phys.e * sin_gamma) * result.v0 / (2.0 * phys.hbar)
