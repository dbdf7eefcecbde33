"""Physical constants (CODATA 2018) and the unit conventions used package-wide.

Lengths are in meters, energies in joules, plain frequencies in Hz.
Angular frequencies (rad/s) always carry ``omega`` in their name and are
never mixed silently with Hz quantities.  Formulas of Gaussian-unit origin
are only used in combinations where the fine-structure constant and the
speed of light absorb the unit-system dependence, so no conversion factor
enters any computed observable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 constants, SI units."""

    alpha: float = 7.2973525693e-3                 # fine-structure constant
    c: float = 2.99792458e8                        # speed of light, m/s (exact)
    hbar: float = 6.62607015e-34 / (2.0 * math.pi)  # reduced Planck constant, J*s
    e: float = 1.602176634e-19                     # elementary charge, C (exact)

    @property
    def h(self) -> float:
        """Planck constant h = 2*pi*hbar, J*s."""
        return 2.0 * math.pi * self.hbar


def constants() -> PhysicalConstants:
    """Return the shared constant set; pure and deterministic."""
    return PhysicalConstants()
