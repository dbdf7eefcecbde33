"""Lowest resonant mode of a thin annular cavity with a node.

The cavity is a ring of inner radius rho1, outer radius rho2 and height
delta_z.  The fundamental mode has a single azimuthal node (cos(phi/2)
dependence) and a radial profile built from the half-order Bessel
functions

    u(rho) = A*J_{1/2}(k rho) + B*J_{-1/2}(k rho),

with the closed forms J_{1/2}(x) = sqrt(2/(pi x)) sin x and
J_{-1/2}(x) = sqrt(2/(pi x)) cos x, so no general Bessel machinery is
needed.  Vanishing tangential electric field at the cylindrical walls
(the azimuthal field component is proportional to du/drho) gives Neumann
conditions u'(rho1) = u'(rho2) = 0.  Writing

    du/drho = k * sqrt(2/(pi x)) * (A*ca(x) - B*cb(x)),      x = k*rho,
    ca(x) = cos x - sin x / (2x),    cb(x) = sin x + cos x / (2x),

the wavenumber is the smallest positive root of the boundary determinant

    det(x1) = ca(x1)*cb(x2) - ca(x2)*cb(x1),      x_j = k*rho_j,

and the coefficients follow as (A, B) proportional to (cb(x1), ca(x1)).
The dimensionless normalization beta = k^2 * integral rho |u|^2 drho sets
the zero-point field amplitude E0(rho) = sqrt(hbar*omega / (2 beta rho^2
delta_z)) (Gaussian-convention amplitude; only dimensionless ratios of the
field evaluators are consumed downstream).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constants import constants

# Root scan window and tolerances for the boundary determinant.
SCAN_X_MIN = 0.01            # lower end of the k*rho1 scan window
SCAN_X_MAX = 3.0 * math.pi   # upper end of the k*rho1 scan window
SCAN_POINTS = 10_000
BISECT_RTOL = 1e-13
BISECT_MAX_ITER = 200

QUAD_RTOL = 1e-10
QUAD_MAX_DEPTH = 40


class CavityModeError(RuntimeError):
    """Base class for mode-solver failures."""


class NoRootError(CavityModeError):
    """The boundary determinant has no sign change in the scan window."""


class ConvergenceError(CavityModeError):
    """Bisection failed to reach tolerance within the iteration cap."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature exceeded its recursion-depth cap."""


@dataclass(frozen=True)
class CavityGeometry:
    """Annular cavity dimensions, meters."""

    rho1: float   # inner radius
    rho2: float   # outer radius
    delta_z: float  # cavity height

    def __post_init__(self) -> None:
        if not (0.0 < self.rho1 < self.rho2):
            raise ValueError(
                f"invalid geometry: require 0 < rho1 < rho2, got rho1={self.rho1}, rho2={self.rho2}"
            )
        if not self.delta_z > 0.0:
            raise ValueError(f"invalid geometry: require delta_z > 0, got {self.delta_z}")

    @property
    def delta_rho(self) -> float:
        """Radial width rho2 - rho1, m (always derived, never stored)."""
        return self.rho2 - self.rho1

    def scaled(self, s: float) -> "CavityGeometry":
        """Uniformly rescaled copy (all three lengths multiplied by s)."""
        return CavityGeometry(s * self.rho1, s * self.rho2, s * self.delta_z)


@dataclass(frozen=True)
class CavityMode:
    """Solved lowest mode: wavenumber, radial coefficients, normalization."""

    k: float        # mode wavenumber, rad/m
    coeff_a: float  # coefficient of J_{1/2}, dimensionless
    coeff_b: float  # coefficient of J_{-1/2}, dimensionless
    beta: float     # normalization k^2 * int rho |u|^2 drho, dimensionless
    omega: float    # angular frequency c*k, rad/s

    def __post_init__(self) -> None:
        if not self.k > 0.0:
            raise ValueError(f"mode wavenumber must be positive, got {self.k}")
        if not self.beta > 0.0:
            raise ValueError(f"mode normalization beta must be positive, got {self.beta}")

    @property
    def frequency_hz(self) -> float:
        """Plain mode frequency omega / 2*pi, Hz."""
        return self.omega / (2.0 * math.pi)

    def radial_profile(self, rho):
        """Evaluate u(rho) for rho in meters."""
        return radial_u(self.k * np.asarray(rho, dtype=float), self.coeff_a, self.coeff_b)


@dataclass(frozen=True)
class FieldAmplitudes:
    """Mode field evaluators: E0(rho) and B0(rho, phi).

    B0(rho, phi) = 2 E0(rho) k rho u(rho) cos(phi/2) pointwise; the
    amplitudes are in Gaussian-convention field units and feed only
    dimensionless ratios.
    """

    e0_at: Callable[[float], float]
    b0_at: Callable[[float, float], float]


def radial_u(x, coeff_a: float, coeff_b: float):
    """Radial mode function A*J_{1/2}(x) + B*J_{-1/2}(x) at x = k*rho.

    Accepts scalars or arrays; every x must be positive.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("radial_u requires x = k*rho > 0")
    value = np.sqrt(2.0 / (np.pi * x)) * (coeff_a * np.sin(x) + coeff_b * np.cos(x))
    return value if value.ndim else float(value)


def _deriv_coeffs(x):
    """Coefficients (ca, cb) with du/drho = k*sqrt(2/(pi x))*(A*ca - B*cb)."""
    sin, cos = np.sin(x), np.cos(x)
    return cos - sin / (2.0 * x), sin + cos / (2.0 * x)


def boundary_determinant(x1, radius_ratio: float):
    """Neumann boundary determinant as a function of x1 = k*rho1.

    Vanishes exactly when u'(rho1) = u'(rho2) = 0 admits a nontrivial
    (A, B); radius_ratio = rho2/rho1.
    """
    ca1, cb1 = _deriv_coeffs(np.asarray(x1, dtype=float))
    ca2, cb2 = _deriv_coeffs(np.asarray(x1, dtype=float) * radius_ratio)
    return ca1 * cb2 - ca2 * cb1


def solve_lowest_mode(geometry: CavityGeometry) -> CavityMode:
    """Solve the lowest cavity mode for the given annular geometry.

    Scans the boundary determinant on a uniform grid of x1 = k*rho1 over
    (0.01, 3*pi], brackets the first sign change and bisects it to
    relative tolerance 1e-13.  Coefficients are set to
    (A, B) = (cb(x1), ca(x1)), normalized to A^2 + B^2 = 1 with A >= 0.

    Raises
    ------
    NoRootError
        If the determinant does not change sign inside the scan window.
    ConvergenceError
        If bisection exceeds its iteration cap.
    """
    ratio = geometry.rho2 / geometry.rho1
    xs = np.linspace(SCAN_X_MIN, SCAN_X_MAX, SCAN_POINTS)
    det = boundary_determinant(xs, ratio)

    crossings = np.nonzero(np.sign(det[:-1]) * np.sign(det[1:]) <= 0.0)[0]
    if crossings.size == 0:
        raise NoRootError(
            f"no boundary-determinant sign change for k*rho1 in ({SCAN_X_MIN}, {SCAN_X_MAX:.6g}] "
            f"with rho2/rho1 = {ratio:.6g}"
        )
    i = int(crossings[0])
    a, b = float(xs[i]), float(xs[i + 1])
    fa = float(det[i])

    x_root = None
    for _ in range(BISECT_MAX_ITER):
        mid = 0.5 * (a + b)
        fm = float(boundary_determinant(mid, ratio))
        if fm == 0.0:
            x_root = mid
            break
        if fa * fm < 0.0:
            b = mid
        else:
            a, fa = mid, fm
        if (b - a) <= BISECT_RTOL * b:
            x_root = 0.5 * (a + b)
            break
    if x_root is None:
        raise ConvergenceError(
            f"bisection did not reach relative tolerance {BISECT_RTOL} in {BISECT_MAX_ITER} iterations"
        )

    ca1, cb1 = _deriv_coeffs(x_root)
    norm = math.hypot(cb1, ca1)
    coeff_a, coeff_b = cb1 / norm, ca1 / norm
    if coeff_a < 0.0:  # fix the overall sign convention
        coeff_a, coeff_b = -coeff_a, -coeff_b

    k = x_root / geometry.rho1
    beta = _beta_integral(k, coeff_a, coeff_b, geometry)
    return CavityMode(k=k, coeff_a=coeff_a, coeff_b=coeff_b, beta=beta, omega=constants().c * k)


def beta_factor(mode: CavityMode, geometry: CavityGeometry) -> float:
    """Normalization beta = k^2 * integral_{rho1}^{rho2} rho |u(rho)|^2 drho.

    Evaluated by adaptive Simpson quadrature at relative tolerance 1e-10.
    """
    return _beta_integral(mode.k, mode.coeff_a, mode.coeff_b, geometry)


def _beta_integral(k: float, coeff_a: float, coeff_b: float, geometry: CavityGeometry) -> float:
    def integrand(rho: float) -> float:
        u = radial_u(k * rho, coeff_a, coeff_b)
        return rho * u * u

    return k * k * adaptive_simpson(integrand, geometry.rho1, geometry.rho2)


def field_amplitudes(mode: CavityMode, geometry: CavityGeometry) -> FieldAmplitudes:
    """Evaluators for the mode field amplitudes E0(rho) and B0(rho, phi).

    Both raise ValueError for rho outside [rho1, rho2].
    """
    hbar = constants().hbar
    k, beta, dz = mode.k, mode.beta, geometry.delta_z

    def _check(rho: float) -> None:
        if not (geometry.rho1 <= rho <= geometry.rho2):
            raise ValueError(
                f"rho = {rho} outside the cavity [{geometry.rho1}, {geometry.rho2}]"
            )

    def e0_at(rho: float) -> float:
        _check(rho)
        return math.sqrt(hbar * mode.omega / (2.0 * beta * rho * rho * dz))

    def b0_at(rho: float, phi: float) -> float:
        _check(rho)
        return 2.0 * e0_at(rho) * k * rho * radial_u(k * rho, mode.coeff_a, mode.coeff_b) * math.cos(phi / 2.0)

    return FieldAmplitudes(e0_at=e0_at, b0_at=b0_at)


def boundary_residuals(mode: CavityMode, geometry: CavityGeometry) -> tuple[float, float]:
    """Normalized Neumann residuals |du/drho| / (k * max|u|) at both walls."""
    x1, x2 = mode.k * geometry.rho1, mode.k * geometry.rho2

    def du_over_k(x: float) -> float:
        ca, cb = _deriv_coeffs(x)
        return math.sqrt(2.0 / (math.pi * x)) * (mode.coeff_a * ca - mode.coeff_b * cb)

    grid = np.linspace(x1, x2, 512)
    u_max = float(np.max(np.abs(radial_u(grid, mode.coeff_a, mode.coeff_b))))
    return abs(du_over_k(x1)) / u_max, abs(du_over_k(x2)) / u_max


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = QUAD_RTOL,
    max_depth: int = QUAD_MAX_DEPTH,
) -> float:
    """Adaptive Simpson quadrature of f over [a, b].

    The acceptance test is the standard Richardson estimate
    |S_left + S_right - S| <= 15 * tol with the tolerance halved per
    split; tol starts at rel_tol times the coarse whole-interval
    estimate.  Raises QuadratureError past max_depth splitting levels.
    """
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    tol = rel_tol * max(abs(whole), math.ulp(1.0))
    return _simpson_recurse(f, a, m, b, fa, fm, fb, whole, tol, max_depth)


def _simpson_recurse(f, a, m, b, fa, fm, fb, s, tol, depth):
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    s_left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
    s_right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
    err = s_left + s_right - s
    if abs(err) <= 15.0 * tol:
        return s_left + s_right + err / 15.0
    if depth <= 0:
        raise QuadratureError(f"adaptive Simpson exceeded depth cap on [{a}, {b}]")
    return _simpson_recurse(f, a, lm, m, fa, flm, fm, s_left, 0.5 * tol, depth - 1) + _simpson_recurse(
        f, m, rm, b, fm, frm, fb, s_right, 0.5 * tol, depth - 1
    )
