"""Vacuum energy of a 1-D massless scalar field pinned at two points.

The mode with index n between walls a distance d apart has wave number
k_n = n pi / d and angular frequency omega_n = c k_n, so the total ground
state energy is formally (pi hbar c / 2d) * (1 + 2 + 3 + ...).  The
divergent sum is never evaluated numerically: the module consumes the
exact regularized value -1/12 from the closed-form summation, giving

    E(d) = -pi c hbar / (24 d),      |E'(d)| = pi c hbar / (24 d^2).

The n = 0 mode is identically zero and carries no energy, so the sum
starts at n = 1.  Natural units (hbar = c = 1) are the default; SI values
can be supplied through the config.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sums import sum_powers

__all__ = [
    "CavityConfig",
    "SI_HBAR",
    "SI_C",
    "mode_wavenumber",
    "angular_frequency",
    "ground_state_energy",
    "casimir_force",
]

SI_HBAR = 1.054571817e-34  # J s
SI_C = 2.99792458e8        # m / s


@dataclass(frozen=True)
class CavityConfig:
    d: float
    c: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if not self.d > 0:
            raise ValueError("separation d must be > 0")
        if not (self.c > 0 and self.hbar > 0):
            raise ValueError("c and hbar must be > 0")

    @staticmethod
    def si(d: float) -> "CavityConfig":
        return CavityConfig(d=d, c=SI_C, hbar=SI_HBAR)


def mode_wavenumber(n: int, cfg: CavityConfig) -> float:
    """k_n = n pi / d for mode index n >= 1."""
    if n < 1:
        raise ValueError("mode index must be >= 1")
    return n * math.pi / cfg.d


def angular_frequency(n: int, cfg: CavityConfig) -> float:
    """omega_n = c k_n (the dispersion relation c = omega_n / k_n)."""
    return cfg.c * mode_wavenumber(n, cfg)


def ground_state_energy(cfg: CavityConfig) -> float:
    """(pi hbar c / 2d) times the regularized sum of the mode indices."""
    coefficient = float(sum_powers(1).value)  # -1/12, never hard-coded
    return math.pi * cfg.hbar * cfg.c / (2.0 * cfg.d) * coefficient


def casimir_force(cfg: CavityConfig) -> float:
    """Magnitude of dE/dd: pi c hbar / (24 d^2)."""
    return math.pi * cfg.c * cfg.hbar / (24.0 * cfg.d**2)
