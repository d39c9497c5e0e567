"""Symmetric positive mollifiers and the test functions built from them.

The base profile is the standard bump psi(t) = exp(-1/(1 - t^2)) on
(-1, 1), zero outside.  A mollifier here is t^p * psi(t) normalized to
unit mass, where the vanishing order p is 0, 2 or 4 (p >= 2 forces
phi(0) = phi'(0) = 0), rescaled as phi_m(t) = m * phi(m t).  All
evaluators accept numpy arrays and return exact zeros outside the declared
support.

Normalization constants have no closed form; they are computed once per
(profile, p) by quadrature and cached.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .quadrature import integrate

__all__ = ["Profile", "Mollifier", "TestFunction", "bump_moment", "mollifier"]

VANISHING_ORDERS = (0, 2, 4)


class Profile(str, enum.Enum):
    BUMP = "bump"


def _bump(t: np.ndarray) -> np.ndarray:
    out = np.zeros_like(t)
    inside = np.abs(t) < 1.0
    u = 1.0 - t[inside] ** 2
    out[inside] = np.exp(-1.0 / u)
    return out


def _bump_d1(t: np.ndarray) -> np.ndarray:
    out = np.zeros_like(t)
    inside = np.abs(t) < 1.0
    ti = t[inside]
    u = 1.0 - ti * ti
    out[inside] = np.exp(-1.0 / u) * (-2.0 * ti / u**2)
    return out


def _bump_d2(t: np.ndarray) -> np.ndarray:
    out = np.zeros_like(t)
    inside = np.abs(t) < 1.0
    ti = t[inside]
    u = 1.0 - ti * ti
    g = -2.0 * ti / u**2                      # (d/dt) of -1/(1-t^2)
    gp = -2.0 / u**2 - 8.0 * ti * ti / u**3   # its derivative
    out[inside] = np.exp(-1.0 / u) * (g * g + gp)
    return out


_NORM_CACHE: dict = {}


def bump_moment(j: int) -> float:
    """integral of t^j * psi(t) over (-1, 1); zero for odd j by symmetry."""
    if j % 2 == 1:
        return 0.0
    key = (Profile.BUMP, j)
    if key not in _NORM_CACHE:
        # idempotent under concurrent computation; last write wins harmlessly
        _NORM_CACHE[key] = integrate(
            lambda t: t**j * _bump(t), -1.0, 1.0, tol=1e-14
        ).real
    return _NORM_CACHE[key]


@dataclass(frozen=True)
class TestFunction:
    """Smooth compactly supported function with first and second derivative.

    Evaluators are numpy-vectorized; everything vanishes outside
    ``support``.
    """

    value: Callable
    deriv: Callable
    deriv2: Callable
    support: tuple

    def __call__(self, t):
        return self.value(np.asarray(t, dtype=float))

    def shifted(self, a: float) -> "TestFunction":
        """Translate by a: t maps to value(t - a)."""
        v, d1, d2 = self.value, self.deriv, self.deriv2
        sa, sb = self.support
        return TestFunction(
            value=lambda t: v(np.asarray(t, dtype=float) - a),
            deriv=lambda t: d1(np.asarray(t, dtype=float) - a),
            deriv2=lambda t: d2(np.asarray(t, dtype=float) - a),
            support=(sa + a, sb + a),
        )

    def dilated(self, lam: float) -> "TestFunction":
        """Homothetic image: t maps to value(lam * t); support scales by 1/lam."""
        if lam <= 0:
            raise ValueError("dilation factor must be positive")
        v, d1, d2 = self.value, self.deriv, self.deriv2
        sa, sb = self.support
        return TestFunction(
            value=lambda t: v(lam * np.asarray(t, dtype=float)),
            deriv=lambda t: lam * d1(lam * np.asarray(t, dtype=float)),
            deriv2=lambda t: lam * lam * d2(lam * np.asarray(t, dtype=float)),
            support=(sa / lam, sb / lam),
        )

    def scaled(self, amp: float) -> "TestFunction":
        v, d1, d2 = self.value, self.deriv, self.deriv2
        return TestFunction(
            value=lambda t: amp * v(np.asarray(t, dtype=float)),
            deriv=lambda t: amp * d1(np.asarray(t, dtype=float)),
            deriv2=lambda t: amp * d2(np.asarray(t, dtype=float)),
            support=self.support,
        )


@dataclass(frozen=True)
class Mollifier:
    """t^p * psi(t) normalized to unit mass, rescaled by an integer m >= 1."""

    vanishing_order: int = 0
    scale: int = 1
    profile: Profile = Profile.BUMP

    def __post_init__(self):
        if self.vanishing_order not in VANISHING_ORDERS:
            raise ValueError(
                f"vanishing order must be one of {VANISHING_ORDERS}"
            )
        if self.scale < 1:
            raise ValueError("scale must be an integer >= 1")

    @property
    def norm_const(self) -> float:
        return bump_moment(self.vanishing_order)

    @property
    def support(self) -> tuple:
        m = self.scale
        return (-1.0 / m, 1.0 / m)

    # t^p via explicit squaring below: libm pow is not bit-symmetric in t,
    # and the mollifier symmetry phi(t) = phi(-t) must hold exactly

    def _base(self, t: np.ndarray) -> np.ndarray:
        p = self.vanishing_order
        if p == 0:
            return _bump(t)
        s = t * t
        tp = s if p == 2 else s * s
        return tp * _bump(t)

    def _base_d1(self, t: np.ndarray) -> np.ndarray:
        p = self.vanishing_order
        if p == 0:
            return _bump_d1(t)
        s = t * t
        tp = s if p == 2 else s * s
        tp1 = t if p == 2 else t * s
        return p * tp1 * _bump(t) + tp * _bump_d1(t)

    def _base_d2(self, t: np.ndarray) -> np.ndarray:
        p = self.vanishing_order
        if p == 0:
            return _bump_d2(t)
        s = t * t
        tp = s if p == 2 else s * s
        tp1 = t if p == 2 else t * s
        tp2 = np.ones_like(t) if p == 2 else s
        return (
            p * (p - 1) * tp2 * _bump(t)
            + 2.0 * p * tp1 * _bump_d1(t)
            + tp * _bump_d2(t)
        )

    def value(self, t) -> np.ndarray:
        m, c = self.scale, self.norm_const
        return m * self._base(m * np.asarray(t, dtype=float)) / c

    def deriv(self, t) -> np.ndarray:
        m, c = self.scale, self.norm_const
        return m**2 * self._base_d1(m * np.asarray(t, dtype=float)) / c

    def deriv2(self, t) -> np.ndarray:
        m, c = self.scale, self.norm_const
        return m**3 * self._base_d2(m * np.asarray(t, dtype=float)) / c

    def __call__(self, t):
        return self.value(t)

    def rescaled(self, m: int) -> "Mollifier":
        return Mollifier(self.vanishing_order, m, self.profile)

    def as_test_function(self) -> TestFunction:
        return TestFunction(
            value=self.value,
            deriv=self.deriv,
            deriv2=self.deriv2,
            support=self.support,
        )


def mollifier(vanishing_order: int = 0, scale: int = 1) -> TestFunction:
    """Convenience constructor returning the TestFunction directly."""
    return Mollifier(vanishing_order, scale).as_test_function()
