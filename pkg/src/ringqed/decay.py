"""Weisskopf-Wigner spontaneous emission of the qubit into free space.

The junction current couples the qubit locally to the continuum of
free-space modes; the golden-rule decay rate is

    Gamma = 16 alpha l^2 omega_q^3 sin^2(gamma) / (3 c^2),

with junction length l.  The companion budget Omega_R / (2 pi Gamma)
counts full Rabi periods per decay time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import constants


@dataclass(frozen=True)
class DecayParams:
    """Inputs of the free-space decay rate."""

    omega_q: float          # qubit angular frequency, rad/s
    junction_length: float  # junction length, m
    sin_gamma: float        # charge-mixing factor, dimensionless

    def __post_init__(self) -> None:
        if not self.junction_length > 0.0:
            raise ValueError(f"junction length must be positive, got {self.junction_length}")
        if not 0.0 <= self.sin_gamma <= 1.0:
            raise ValueError(f"sin_gamma must lie in [0, 1], got {self.sin_gamma}")


def spontaneous_rate(params: DecayParams) -> float:
    """Free-space spontaneous decay rate Gamma, 1/s."""
    phys = constants()
    return (
        16.0
        * phys.alpha
        * params.junction_length**2
        * params.omega_q**3
        * params.sin_gamma**2
        / (3.0 * phys.c**2)
    )


def coherence_budget(gamma_rate: float, rabi: float) -> float:
    """Full Rabi periods per decay time, Omega_R / (2 pi Gamma).

    Returns +inf in the lossless limit gamma_rate = 0.
    """
    if not rabi > 0.0:
        raise ValueError(f"Rabi frequency must be positive, got {rabi}")
    if gamma_rate == 0.0:
        return math.inf
    return rabi / (2.0 * math.pi * gamma_rate)
