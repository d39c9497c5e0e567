"""Numerical realization of the singular kernels, combs and limit processes.

Two 2*pi-periodic kernels drive everything here.  Around t = 0 the
alternating-series kernel is smooth and evaluates as

    e^{it} / (1 + e^{it})^2  =  1 / (4 cos^2(t/2)),

an algebraic identity (expand (1 + e^{it})^2 = 4 e^{it} cos^2(t/2)); its
poles sit at odd multiples of pi.  Shifting a pole to the origin turns the
same kernel into 1 / (4 sin^2(x/2)), and the all-plus kernel obeys

    e^{ix} / (1 - e^{ix})^2  =  -1 / (4 sin^2(x/2)).

The centered real forms are used inside quadrature because the naive
complex quotients lose precision to cancellation in 1 + e^{it} near a
pole; they are exactly equal, not approximations.

Finite-part pairings are evaluated through two independent routes: the
truncated-window route with the 1/tan(eps/2) counterterm followed by
extrapolation in eps, and the Taylor-remainder route

    integral over one period cell of
        (t-p)^2 K(t) * integral_0^1 (1-theta) phi''(p + theta (t-p)) dtheta

which needs no limit process at all.  Their agreement is a library-level
invariant.  The remainder route is valid on any full period cell centered
at a pole p: the kernel integral over such a cell truncated by eps equals
1/tan(eps/2) exactly, and the first-order Taylor term drops out by the
symmetry of the cell about p.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConsistencyError
from .extrapolation import (
    EpsilonLimit,
    detect_divergence,
    divergent_ladder,
    extrapolate_ladder,
)
from .mollifiers import Mollifier, TestFunction
from .quadrature import _rule, integrate

__all__ = [
    "alternating_kernel",
    "centered_kernel",
    "kernel_ratio",
    "finite_part_action",
    "finite_part_action_epsilon",
    "alternating_series_action",
    "all_plus_series_action",
    "fourier_coefficient_numeric",
    "mollified_limit",
    "jump_average",
    "dirichlet_comb_growth",
    "dirichlet_comb_ladder",
    "homothety_pairing_check",
    "DEFAULT_EPS_LEVELS",
    "DEFAULT_SCALE_LEVELS",
]

PERIOD = 2.0 * math.pi
DEFAULT_EPS_LEVELS = 10
DEFAULT_SCALE_LEVELS = 10
EPS_TOP = 0.5

# a pole closer than this to the integration region forces the
# remainder-form route; farther away the kernel is integrated directly
_SINGULAR_MARGIN = 0.25

_MAX_FOURIER_INDEX = 32


def alternating_kernel(t):
    """1 / (4 cos^2(t/2)); poles at odd multiples of pi."""
    t = np.asarray(t, dtype=float)
    return 0.25 / np.cos(0.5 * t) ** 2


def centered_kernel(x):
    """The same kernel with a pole shifted to x = 0: 1 / (4 sin^2(x/2))."""
    x = np.asarray(x, dtype=float)
    return 0.25 / np.sin(0.5 * x) ** 2


def kernel_ratio(x):
    """x^2 / (4 sin^2(x/2)) = (x / (2 sin(x/2)))^2, analytic on (-2pi, 2pi)."""
    x = np.asarray(x, dtype=float)
    out = np.ones_like(x)
    nz = x != 0.0
    out[nz] = (x[nz] / (2.0 * np.sin(0.5 * x[nz]))) ** 2
    return out


def _singular_points(lo: float, hi: float) -> list:
    """Odd multiples of pi inside [lo, hi]."""
    pts = []
    n = math.floor((lo / math.pi - 1.0) / 2.0)
    while True:
        p = (2 * n + 1) * math.pi
        if p > hi:
            break
        if p >= lo:
            pts.append(p)
        n += 1
    return pts


def _support(phi: TestFunction) -> tuple:
    sa, sb = phi.support
    if not sb > sa:
        raise ValueError("test function has empty support")
    return float(sa), float(sb)


# ---------------------------------------------------------------------------
# Taylor-remainder route


def _remainder_cell_action(phi: TestFunction, pole: float, tol=None) -> complex:
    """Finite-part pairing over the period cell [pole - pi, pole + pi].

    Valid for any C^2 function on the closed cell; phi need not vanish at
    the cell edges.
    """
    sa, sb = _support(phi)
    width = sb - sa
    nodes, weights = _rule(15)

    def outer(xv):
        xv = np.asarray(xv, dtype=float)
        res = np.zeros_like(xv)
        with np.errstate(divide="ignore", invalid="ignore"):
            t1 = (sa - pole) / xv
            t2 = (sb - pole) / xv
        lo = np.clip(np.minimum(t1, t2), 0.0, 1.0)
        hi = np.clip(np.maximum(t1, t2), 0.0, 1.0)
        ok = hi > lo
        if not ok.any():
            return res
        xs, los, his = xv[ok], lo[ok], hi[ok]
        # the inner integrand is phi'' along a segment; resolve it with
        # panels proportional to how much of the support the segment sweeps
        arg_range = float(np.max((his - los) * np.abs(xs)))
        n_in = int(min(96, max(12, math.ceil(48.0 * arg_range / width + 8))))
        frac = np.linspace(0.0, 1.0, n_in + 1)
        elo = los[:, None] + (his - los)[:, None] * frac[None, :-1]
        ehi = los[:, None] + (his - los)[:, None] * frac[None, 1:]
        midt = 0.5 * (elo + ehi)
        halft = 0.5 * (ehi - elo)
        theta = midt[:, :, None] + halft[:, :, None] * nodes[None, None, :]
        args = pole + theta * xs[:, None, None]
        vals = (1.0 - theta) * phi.deriv2(args.ravel()).reshape(theta.shape)
        inner = np.sum((vals @ weights) * halft, axis=1)
        res[ok] = kernel_ratio(xs) * inner
        return res

    cuts = sorted(
        {float(np.clip(v, -math.pi, math.pi)) for v in (sa - pole, sb - pole, 0.0)}
    )
    return integrate(outer, -math.pi, math.pi, tol=tol, breakpoints=cuts)


def finite_part_action(phi: TestFunction, tol=None) -> complex:
    """Finite-part pairing over (0, 2*pi) via the Taylor-remainder form."""
    sa, sb = _support(phi)
    if not (0.0 < sa and sb < PERIOD):
        raise ValueError("support must lie inside (0, 2*pi)")
    return _remainder_cell_action(phi, math.pi, tol=tol)


# ---------------------------------------------------------------------------
# Truncated-window route


def _eps_ladder(levels: int):
    if levels < 3:
        raise ValueError("need at least 3 epsilon levels")
    return [EPS_TOP * 0.5**j for j in range(levels)]


def _window_integral(f, eps: float, lo: float, hi: float,
                     extra_cuts=(), tol=None) -> complex:
    """Integral of f over (-pi, -eps) u (eps, pi) intersected with [lo, hi]."""
    total = 0j
    for a, b, near in ((eps, math.pi, "lo"), (-math.pi, -eps, "hi")):
        a2, b2 = max(a, lo), min(b, hi)
        if b2 <= a2:
            continue
        grade = (a2,) if near == "lo" else (b2,)
        cuts = [c for c in extra_cuts if a2 < c < b2]
        total += integrate(f, a2, b2, tol=tol, breakpoints=cuts, grade=grade)
    return total


def finite_part_action_epsilon(phi: TestFunction,
                               levels: int = DEFAULT_EPS_LEVELS,
                               tol=None) -> EpsilonLimit:
    """Finite-part pairing over (0, 2*pi) via the counterterm route.

    Samples the truncated integral minus phi(pi)/tan(eps/2) on a halving
    epsilon ladder and extrapolates.
    """
    sa, sb = _support(phi)
    if not (0.0 < sa and sb < PERIOD):
        raise ValueError("support must lie inside (0, 2*pi)")
    at_pole = float(phi(np.array([math.pi]))[0])
    cuts = (sa - math.pi, sb - math.pi)

    def f(x):
        return phi(math.pi + np.asarray(x)) * centered_kernel(x)

    eps_list = _eps_ladder(levels)
    samples = []
    for eps in eps_list:
        v = _window_integral(f, eps, sa - math.pi, sb - math.pi,
                             extra_cuts=cuts, tol=tol)
        samples.append(v - at_pole / math.tan(0.5 * eps))
    return extrapolate_ladder(eps_list, samples)


# ---------------------------------------------------------------------------
# The periodized distributions


def alternating_series_action(phi: TestFunction, tol=None) -> complex:
    """Pairing with the 2*pi-periodic distribution whose Fourier series is
    e^{it} - 2 e^{2it} + 3 e^{3it} - ...: the periodized finite-part kernel
    plus i*pi times the derivative-of-delta comb at odd multiples of pi.
    """
    sa, sb = _support(phi)
    total = 0j

    n = math.floor(sa / PERIOD)
    while n * PERIOD < sb:
        cell_lo, cell_hi = n * PERIOD, (n + 1) * PERIOD
        pole = cell_lo + math.pi
        lo, hi = max(sa, cell_lo), min(sb, cell_hi)
        n += 1
        if hi <= lo:
            continue
        if lo - _SINGULAR_MARGIN <= pole <= hi + _SINGULAR_MARGIN:
            total += _remainder_cell_action(phi, pole, tol=tol)
        else:
            total += integrate(lambda t: phi(t) * alternating_kernel(t),
                               lo, hi, tol=tol)

    for pole in _singular_points(sa, sb):
        total += -1j * math.pi * float(phi.deriv(np.array([pole]))[0])
    return total


def all_plus_series_action(chi: TestFunction, tol=None) -> complex:
    """Pairing with the distribution whose Fourier series is
    e^{it} + 2 e^{2it} + 3 e^{3it} + ...

    Requires supp(chi) inside (-pi/2, pi/2) with chi(0) = chi'(0) = 0, so
    the integrand chi(x) * (-1)/(4 sin^2(x/2)) extends continuously and a
    single proper quadrature suffices.
    """
    sa, sb = _support(chi)
    if not (-0.5 * math.pi < sa and sb < 0.5 * math.pi):
        raise ValueError("support must lie inside (-pi/2, pi/2)")
    probe = np.max(np.abs(chi(np.linspace(sa, sb, 65))))
    vanish_tol = 1e-9 * (1.0 + probe)
    at0 = float(chi(np.array([0.0]))[0])
    d_at0 = float(chi.deriv(np.array([0.0]))[0])
    if abs(at0) > vanish_tol or abs(d_at0) > vanish_tol:
        raise ValueError(
            "test function must vanish to second order at 0 "
            f"(got chi(0)={at0:.3e}, chi'(0)={d_at0:.3e})"
        )

    dd_at0 = float(chi.deriv2(np.array([0.0]))[0])

    def f(x):
        x = np.asarray(x, dtype=float)
        out = np.empty_like(x)
        z = x == 0.0
        nz = ~z
        out[nz] = -0.25 * chi(x[nz]) / np.sin(0.5 * x[nz]) ** 2
        if z.any():
            out[z] = -0.5 * dd_at0  # continuous extension at the origin
        return out

    return integrate(f, sa, sb, tol=tol, breakpoints=(0.0,))


# ---------------------------------------------------------------------------
# Fourier coefficients


def fourier_coefficient_numeric(n: int, levels: int = DEFAULT_EPS_LEVELS,
                                tol=None) -> EpsilonLimit:
    """Numerical Fourier coefficient c_n of the alternating-series
    distribution: the limit of

      (1/2pi) ( integral over the truncated period window of e^{-int} K(t)
                - (-1)^n / tan(eps/2)  -  (-1)^n n pi ).

    Converges to (-1)^{n-1} n for n >= 1 and to 0 for n <= 0.
    """
    if abs(n) > _MAX_FOURIER_INDEX:
        raise ValueError(f"|n| must be <= {_MAX_FOURIER_INDEX}")
    if levels < 4:
        raise ValueError("need at least 4 epsilon levels")
    sign = -1.0 if n % 2 else 1.0

    def f(x):
        x = np.asarray(x, dtype=float)
        return np.exp(-1j * n * (math.pi + x)) * centered_kernel(x)

    # pre-split oscillatory panels so the error estimator never aliases
    cuts = []
    if abs(n) >= 4:
        step = 6.0 / abs(n)
        cuts = list(np.arange(-math.pi + step, math.pi, step))

    eps_list = _eps_ladder(levels)
    samples = []
    for eps in eps_list:
        v = _window_integral(f, eps, -math.pi, math.pi,
                             extra_cuts=cuts, tol=tol)
        v -= sign / math.tan(0.5 * eps)
        samples.append((v - sign * n * math.pi) / PERIOD)
    return extrapolate_ladder(eps_list, samples)


# ---------------------------------------------------------------------------
# Mollified limits


def _scale_ladder(levels: int, base: int = 2):
    if levels < 3:
        raise ValueError("need at least 3 scale levels")
    return [base * 2**j for j in range(levels)]


def mollified_limit(pairing, vanishing_order: int = 0,
                    levels: int = DEFAULT_SCALE_LEVELS) -> EpsilonLimit:
    """Evaluate pairing(phi_m) on the scale ladder m = 2, 4, 8, ... and
    extrapolate m -> infinity.

    Divergent ladders (magnitudes growing by >= 1.5x across the last three
    levels) are reported with the fitted power of m instead of a limit.
    """
    scales = _scale_ladder(levels)
    values = [complex(pairing(Mollifier(vanishing_order, m).as_test_function()))
              for m in scales]
    if detect_divergence(values):
        return divergent_ladder(scales, values)
    return extrapolate_ladder(scales, values)


def jump_average(f, breakpoints=(0.0,), levels: int = DEFAULT_SCALE_LEVELS,
                 vanishing_order: int = 0, tol=None) -> EpsilonLimit:
    """Mollified value at 0 of the regular distribution of f.

    For piecewise-continuous f the limit is (f(0+) + f(0-)) / 2.  The
    function must be integrable near 0; declared jump locations become
    panel breakpoints.
    """

    def pairing(phi: TestFunction) -> complex:
        sa, sb = phi.support
        return integrate(lambda t: f(t) * phi(t), sa, sb,
                         tol=tol, breakpoints=breakpoints)

    return mollified_limit(pairing, vanishing_order, levels)


# ---------------------------------------------------------------------------
# Divergence demonstrations


_COMB_XI_MAX = 480.0  # spectral cutoff: bump transform tail is < 1e-7 beyond


def _comb_spectral_sum(base: Mollifier, m: int, n_max: int) -> float:
    """Truncated spectral sum hat(phi_m)(0) + 2 sum_{n=1}^{n_max} hat(phi_m)(n).

    hat(phi_m)(n) = hat(phi)(n/m) = 2 int_0^1 phi(u) cos(n u / m) du for the
    even base mollifier.  The cosines at the quadrature nodes follow the
    stable three-term recurrence cos((n+1)h) = 2 cos(h) cos(nh) - cos((n-1)h),
    so each term of the sum is an individual weighted dot product.
    """
    n_panels = max(32, math.ceil(_COMB_XI_MAX / 6.0) + 16)
    nodes, weights = _rule(15)
    edges = np.linspace(0.0, 1.0, n_panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    u = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (np.broadcast_to(weights[None, :], (n_panels, 15)) * half[:, None]).ravel()
    w_eff = 2.0 * w * base.value(u)

    h = u / m
    two_cos_h = 2.0 * np.cos(h)
    c_prev = np.ones_like(u)      # cos(0 * h)
    c_cur = np.cos(h)             # cos(1 * h)
    total = float(np.dot(w_eff, c_prev))  # the n = 0 term, hat(phi)(0)
    for n in range(1, n_max + 1):
        if n % 2048 == 0:
            # reseed: the recurrence drifts by O(n eps) if left alone
            c_prev = np.cos((n - 1) * h)
            c_cur = np.cos(n * h)
        total += 2.0 * float(np.dot(w_eff, c_cur))
        c_prev, c_cur = c_cur, two_cos_h * c_cur - c_prev
    return total


def dirichlet_comb_growth(m: int, agreement_tol: float = 1e-6) -> float:
    """Pairing of the Dirichlet comb sum_n e^{int} with phi_m.

    Evaluated two ways: the Poisson-summation closed form 2 pi m phi(0),
    and the truncated spectral sum of the mollifier transform with the
    cutoff chosen so the neglected tail is far below agreement_tol.  The
    routes must agree within agreement_tol; the validated closed-form value
    is returned.  Grows exactly linearly in m.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    base = Mollifier(0, 1)  # needs phi(0) > 0, so no vanishing factor
    phi0 = float(base.value(np.array([0.0]))[0])
    closed = PERIOD * m * phi0

    spectral = _comb_spectral_sum(base, m, math.ceil(_COMB_XI_MAX * m))
    if abs(closed - spectral) > agreement_tol:
        raise ConsistencyError(
            "Dirichlet comb routes disagree: "
            f"closed={closed!r} spectral={spectral!r}"
        )
    return closed


def dirichlet_comb_ladder(levels: int = 8,
                          agreement_tol: float = 1e-6) -> EpsilonLimit:
    """Scale ladder of the comb pairing, m = 1, 2, 4, ..., 2^(levels-1)."""
    if levels < 3:
        raise ValueError("need at least 3 levels")
    scales = [2**j for j in range(levels)]
    values = [complex(dirichlet_comb_growth(m, agreement_tol)) for m in scales]
    if detect_divergence(values):
        return divergent_ladder(scales, values)
    return extrapolate_ladder(scales, values)


# ---------------------------------------------------------------------------
# Homothety


def _fourier_transform_batch(phi: TestFunction, mus: np.ndarray) -> np.ndarray:
    """integral of phi(t) e^{i mu t} dt for a batch of frequencies."""
    sa, sb = _support(phi)
    width = sb - sa
    mu_max = float(np.max(np.abs(mus))) if mus.size else 1.0
    n_panels = max(16, math.ceil(width * mu_max / 3.0))
    nodes, weights = _rule(15)
    edges = np.linspace(sa, sb, n_panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    t = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w_eff = (np.broadcast_to(weights[None, :], (n_panels, 15))
             * half[:, None]).ravel() * phi(t)
    return np.exp(1j * mus[:, None] * t[None, :]) @ w_eff


def _lacunary_series_pairing(phi: TestFunction, lam: float,
                             tail_tol: float = 1e-13,
                             max_terms: int = 4096) -> complex:
    """sum over q >= 1 of (-1)^{q-1} q <e^{i lam q t}, phi>, truncated when
    the terms' spectral decay makes the tail negligible."""
    total = 0j
    small_run = 0
    q0 = 1
    block = 64
    while q0 <= max_terms:
        qs = np.arange(q0, min(q0 + block, max_terms + 1))
        fts = _fourier_transform_batch(phi, lam * qs.astype(float))
        signs = np.where(qs % 2 == 1, 1.0, -1.0)
        terms = signs * qs * fts
        for term in terms:
            total += term
            if abs(term) < tail_tol * (1.0 + abs(total)):
                small_run += 1
                if small_run >= 3:
                    return total
            else:
                small_run = 0
        q0 += block
    raise ArithmeticError("lacunary series tail did not become negligible")


def homothety_pairing_check(phi: TestFunction, lam: float,
                            tol: float = 1e-6) -> bool:
    """Check the dilation rule <H_lam T, phi> = (1/lam) <T, H_{1/lam} phi>
    on the alternating-series distribution.

    The left side is evaluated independently through the lacunary Fourier
    series sum_q (-1)^{q-1} q e^{i lam q t}, the right side through the
    kernel-and-comb pairing of the dilated test function.
    """
    if lam <= 0:
        raise ValueError("dilation factor must be positive")
    via_definition = alternating_series_action(phi.dilated(1.0 / lam)) / lam
    via_series = _lacunary_series_pairing(phi, lam)
    return abs(via_definition - via_series) <= tol
