"""Limit extrapolation for epsilon- and scale-ladders.

A ladder samples a quantity at parameters shrinking (epsilon) or growing
(mollifier scale m) by a fixed ratio.  Richardson elimination is applied
stage by stage, with the leading error order re-detected at every stage
from the contraction ratio of successive differences; that way ladders
whose error expansions run in odd powers, even powers, or plain integer
powers are all accelerated without hard-coding an exponent.

Divergent ladders are a reported outcome, not an error: the fitted power
of the parameter is recorded instead of an extrapolant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "EpsilonLimit",
    "richardson_extrapolate",
    "fit_power_growth",
    "detect_divergence",
    "extrapolate_ladder",
    "divergent_ladder",
]

_NOISE_REL = 5e-14
_CONTRACT_REL = 1e-7


@dataclass(frozen=True)
class EpsilonLimit:
    """Record of one extrapolated limit process.

    ``samples`` holds (parameter, value) pairs with strictly monotone
    parameters: decreasing for an epsilon-ladder, increasing for a
    scale-ladder.  ``extrapolated`` is None when the ladder diverged, in
    which case ``growth_exponent`` carries the fitted power of the
    parameter.  ``error_estimate`` is never below the magnitude of the
    last Richardson correction.
    """

    samples: tuple
    extrapolated: complex | None
    error_estimate: float
    converged: bool
    growth_exponent: float | None = None

    def __post_init__(self):
        params = [p for p, _ in self.samples]
        if len(params) >= 2:
            inc = all(q > p for p, q in zip(params, params[1:]))
            dec = all(q < p for p, q in zip(params, params[1:]))
            if not (inc or dec):
                raise ValueError("ladder parameters must be strictly monotone")

    @property
    def real_extrapolated(self) -> float:
        if self.extrapolated is None:
            raise ValueError("ladder diverged; no extrapolated value")
        return self.extrapolated.real

    def to_json_obj(self) -> dict:
        finite_err = math.isfinite(self.error_estimate)
        return {
            "samples": [
                {"parameter": p, "re": v.real, "im": v.imag}
                for p, v in self.samples
            ],
            "extrapolated": None if self.extrapolated is None else {
                "re": self.extrapolated.real,
                "im": self.extrapolated.imag,
            },
            "error_estimate": self.error_estimate if finite_err else None,
            "converged": self.converged,
            "growth_exponent": self.growth_exponent,
        }

    def to_csv_rows(self) -> list:
        return [[repr(float(p)), repr(v.real), repr(v.imag)]
                for p, v in self.samples]


def richardson_extrapolate(values, ratio: float = 2.0):
    """(estimate, error_estimate, converged) from a geometric ladder.

    ``values`` are ordered from the coarsest parameter to the finest.
    """
    col = [complex(v) for v in values]
    if len(col) == 0:
        raise ValueError("empty ladder")
    scale = max(1.0, max(abs(v) for v in col))
    if len(col) == 1:
        return col[0], math.inf, False

    noise = _NOISE_REL * scale
    est = col[-1]
    corr_prev = None
    for stage in range(len(values) - 1):
        if len(col) >= 3:
            d1 = col[-2] - col[-3]
            d2 = col[-1] - col[-2]
            if abs(d2) <= noise:
                # differences at the noise floor: the column has converged
                return col[-1], max(abs(d2), noise), True
            try:
                order = math.log(abs(d1 / d2)) / math.log(ratio)
            except (ValueError, ZeroDivisionError):
                order = stage + 1
            if not (0.2 < order < 40.0):
                order = stage + 1
            order = max(1, round(order))
        else:
            order = stage + 1
        factor = ratio ** order
        col = [(factor * col[j + 1] - col[j]) / (factor - 1.0)
               for j in range(len(col) - 1)]
        new = col[-1]
        corr = abs(new - est)
        if corr_prev is not None and corr > corr_prev and corr_prev <= 1e-9 * scale:
            # the table has hit its noise-limited accuracy
            break
        est = new
        corr_prev = corr
        if len(col) < 2:
            break
    err = max(corr_prev if corr_prev is not None else math.inf, noise * 0.1)
    converged = err <= max(_CONTRACT_REL * scale, 1e-12)
    return est, err, converged


def fit_power_growth(params, values) -> float:
    """Least-squares slope of log|value| vs log(parameter), last 5 samples."""
    pts = [(p, abs(complex(v))) for p, v in zip(params, values) if abs(complex(v)) > 0]
    if len(pts) < 2:
        raise ValueError("need at least two nonzero samples to fit growth")
    pts = pts[-5:]
    xs = [math.log(p) for p, _ in pts]
    ys = [math.log(v) for _, v in pts]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


def detect_divergence(values, factor: float = 1.5, window: int = 3) -> bool:
    """Magnitudes growing monotonically by >= factor across the last levels."""
    mags = [abs(complex(v)) for v in values]
    if len(mags) < window:
        return False
    tail = mags[-window:]
    return all(b >= factor * a and a > 0 for a, b in zip(tail, tail[1:]))


def divergent_ladder(params, values) -> EpsilonLimit:
    return EpsilonLimit(
        samples=tuple((float(p), complex(v)) for p, v in zip(params, values)),
        extrapolated=None,
        error_estimate=math.inf,
        converged=False,
        growth_exponent=fit_power_growth(params, values),
    )


def extrapolate_ladder(params, values, ratio: float = 2.0) -> EpsilonLimit:
    """Assemble an EpsilonLimit from ladder samples (convergent branch)."""
    est, err, converged = richardson_extrapolate(values, ratio=ratio)
    return EpsilonLimit(
        samples=tuple((float(p), complex(v)) for p, v in zip(params, values)),
        extrapolated=est,
        error_estimate=err,
        converged=converged,
    )
