"""Adaptive panel quadrature with a fixed-order Gauss rule per panel.

Panels are bisected until the local error estimate (panel value versus the
sum of its two halves) meets a width-proportional share of the absolute
tolerance, with a per-panel relative floor so that panels carrying huge but
accurately-computed contributions terminate.  Known trouble points are
seeded as panel edges up front: explicit breakpoints (kernel poles,
mollifier support edges, jump locations) and optional geometric grading
toward an endpoint that abuts a truncated singularity.

Evaluation is batched: integrands must accept a 1-D numpy array.  The
final reduction is ordered by panel position and compensated, so results
are independent of refinement history and bit-stable.
"""

from __future__ import annotations

import math
import os
from functools import lru_cache

import numpy as np

__all__ = ["QuadratureError", "default_tolerance", "integrate"]

GAUSS_ORDER = 15
_MAX_ROUNDS = 44
_REL_FLOOR = 1e-14


class QuadratureError(ArithmeticError):
    """Refinement exhausted without reaching the requested tolerance."""


def default_tolerance() -> float:
    """Absolute tolerance, overridable via DIVSUM_QUAD_TOL (default 1e-10)."""
    return float(os.environ.get("DIVSUM_QUAD_TOL", "1e-10"))


@lru_cache(maxsize=None)
def _rule(order: int):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes, weights


def _panel_values(f, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    nodes, weights = _rule(GAUSS_ORDER)
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = mid[:, None] + half[:, None] * nodes[None, :]
    v = np.asarray(f(x.ravel()))
    v = v.reshape(x.shape)
    return (v @ weights) * half


def _graded_offsets(width: float) -> list:
    # halving ladder of edge offsets; local bisection refines further on demand
    offs = []
    x = width
    while x > 1e-11 * width:
        offs.append(x)
        x *= 0.5
    return offs


def _initial_edges(a: float, b: float, breakpoints, grade) -> np.ndarray:
    pts = {a, b}
    for p in breakpoints:
        if a < p < b:
            pts.add(float(p))
    for g in grade:
        if g == a:
            pts.update(a + off for off in _graded_offsets(b - a))
        elif g == b:
            pts.update(b - off for off in _graded_offsets(b - a))
        else:
            raise ValueError("grading point must be an endpoint of the interval")
    edges = np.array(sorted(pts))
    return edges[(edges >= a) & (edges <= b)]


def integrate(f, a: float, b: float, *, tol: float | None = None,
              breakpoints=(), grade=()) -> complex:
    """Integral of a vectorized integrand over [a, b].

    Returns a complex value; real integrands come back with zero imaginary
    part.  Raises QuadratureError if bisection cannot reach the tolerance.
    """
    if not b > a:
        if b == a:
            return 0j
        raise ValueError("need b > a")
    if tol is None:
        tol = default_tolerance()
    total_width = b - a

    edges = _initial_edges(a, b, breakpoints, grade)
    lo = edges[:-1].copy()
    hi = edges[1:].copy()
    whole = _panel_values(f, lo, hi).astype(complex)

    accepted: list[tuple[float, complex]] = []
    for _ in range(_MAX_ROUNDS):
        mid = 0.5 * (lo + hi)
        left = _panel_values(f, lo, mid).astype(complex)
        right = _panel_values(f, mid, hi).astype(complex)
        refined = left + right
        err = np.abs(whole - refined)
        budget = np.maximum(tol * (hi - lo) / total_width,
                            _REL_FLOOR * np.abs(refined))
        ok = err <= budget
        for i in np.nonzero(ok)[0]:
            accepted.append((lo[i], refined[i]))
        bad = ~ok
        if not bad.any():
            break
        lo = np.concatenate([lo[bad], mid[bad]])
        hi = np.concatenate([mid[bad], hi[bad]])
        whole = np.concatenate([left[bad], right[bad]])
    else:
        residual = float(np.sum(np.abs(whole)))
        if residual > 1e3 * tol:
            raise QuadratureError(
                f"quadrature stalled with error estimate {residual:.3e}"
            )
        for i in range(len(lo)):
            accepted.append((lo[i], whole[i]))

    accepted.sort(key=lambda item: item[0])
    re = math.fsum(v.real for _, v in accepted)
    im = math.fsum(v.imag for _, v in accepted)
    return complex(re, im)
