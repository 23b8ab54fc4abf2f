"""Spectral band intervals, band lengths, and gap detection.

Each mode branch sweeps a band as eta ranges over [-pi, pi)^2.  At first
order the band is [Lambda0 + eps^{2m} min Lambda1, Lambda0 + eps^{2m} max
Lambda1], padded by C eps^gamma on both sides.  Gaps between consecutive
bands are certified only when the padded intervals are disjoint and neither
endpoint rests on undetermined or mutually cancelling first-order data.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .corrections import (
    Branch,
    CorrectionValue,
    ExpansionParams,
    FloquetPoint,
    correction_for,
    lambda_expansion,
)
from .spectrum import ModeIndex, Parity, enumerate_spectrum, limit_eigenvalue


class InternalConsistencyError(RuntimeError):
    """Two routes to the same quantity disagreed beyond tolerance."""


def floquet_axis(resolution: int) -> np.ndarray:
    """Uniform closed grid [-pi, pi] with `resolution` points per axis; odd
    resolutions sample -pi, 0, and pi exactly."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2, got %r" % (resolution,))
    return np.linspace(-math.pi, math.pi, resolution)


@dataclass(frozen=True)
class BandInterval:
    """[lower, upper] for one mode branch, pad already applied on both ends;
    extrema_eta records where the unpadded minimum and maximum were found."""

    mode: ModeIndex
    lower: float
    upper: float
    pad: float
    undetermined: bool
    extrema_eta: tuple[FloquetPoint, FloquetPoint]

    @property
    def width(self) -> float:
        return self.upper - self.lower


# candidate extremizer components: Lambda1 factors through cos/sin of eta_i/2,
# so extrema over the closed square lie on the tensor grid {-pi, 0, pi}^2
_EXTREME_COMPONENTS = (0.0, math.pi, -math.pi)


def _extremes_over(
    corr: CorrectionValue, points: list[FloquetPoint]
) -> tuple[float, FloquetPoint, float, FloquetPoint]:
    lo = math.inf
    hi = -math.inf
    lo_eta = hi_eta = points[0]
    for eta in points:
        v = corr.lambda1_at(eta)
        if v < lo:
            lo, lo_eta = v, eta
        if v > hi:
            hi, hi_eta = v, eta
    return lo, lo_eta, hi, hi_eta


def band_interval(
    mode: ModeIndex, params: ExpansionParams, grid_resolution: int = 33
) -> BandInterval:
    """Band of one mode branch; grid scan of Lambda1 cross-checked against
    the analytic extremizer candidates."""
    if grid_resolution < 3:
        raise ValueError(
            "grid_resolution must be >= 3, got %r" % (grid_resolution,)
        )
    lam0 = limit_eigenvalue(mode).lambda0
    pad = params.pad
    corr = correction_for(mode)
    if corr.branch is Branch.UNDETERMINED:
        origin = FloquetPoint(0.0, 0.0)
        return BandInterval(mode, lam0 - pad, lam0 + pad, pad, True, (origin, origin))

    axis = floquet_axis(grid_resolution)
    grid_pts = [FloquetPoint(float(a), float(b)) for a in axis for b in axis]
    lo, lo_eta, hi, hi_eta = _extremes_over(corr, grid_pts)

    # closed-form extrema land on the half-angle lattice; the grid scan and
    # the candidate list must agree to grid tolerance
    cand_pts = [
        FloquetPoint(a, b)
        for a in _EXTREME_COMPONENTS
        for b in _EXTREME_COMPONENTS
    ]
    cand_lo, cand_lo_eta, cand_hi, cand_hi_eta = _extremes_over(corr, cand_pts)
    scale = max(abs(cand_lo), abs(cand_hi), 1.0)
    step = 2.0 * math.pi / (grid_resolution - 1)
    slack = 0.75 * scale * step * step
    if (
        lo < cand_lo - slack
        or hi > cand_hi + slack
        or cand_lo < lo - slack
        or cand_hi > hi + slack
    ):
        raise InternalConsistencyError(
            "grid extrema of Lambda1 for %s disagree with analytic candidates: "
            "grid [%r, %r], candidates [%r, %r]"
            % (mode.label(), lo, hi, cand_lo, cand_hi)
        )
    # keep the sharper extremizer from either route (on the default odd grid
    # the candidate points are grid points and the two routes coincide)
    if cand_lo < lo:
        lo, lo_eta = cand_lo, cand_lo_eta
    if cand_hi > hi:
        hi, hi_eta = cand_hi, cand_hi_eta

    scalef = params.first_order_scale
    return BandInterval(
        mode,
        lam0 + scalef * lo - pad,
        lam0 + scalef * hi + pad,
        pad,
        False,
        (lo_eta, hi_eta),
    )


@dataclass(frozen=True)
class BandLength:
    """Leading-order band length |coef| eps^{2m}; `leading` is None when the
    first-order term vanishes identically and the width is only O(eps^{2m})."""

    leading: float | None
    order_note: str


def band_length(mode: ModeIndex, params: ExpansionParams) -> BandLength:
    """Closed-form first-order band length of the branch pair containing
    `mode` (parity-independent: both branches of a double mode sweep bands
    whose union has this leading width)."""
    n, k = mode.n, mode.k
    note = "remainder O(eps^%.6g)" % params.gamma
    eps2m = params.first_order_scale
    if n == 0:
        from .bessel import bessel_j, bessel_zero

        z = bessel_zero(0, k).value
        j1 = bessel_j(1, z)
        return BandLength((2.0 * math.pi / (1.0 - math.pi / 4.0)) * j1 * j1 * eps2m, note)
    if n % 4 == 0:
        return BandLength(None, "undetermined, O(eps^%.6g)" % (2.0 * params.m))
    from .bessel import bessel_j, bessel_zero

    z = bessel_zero(n, k).value
    gap = bessel_j(n - 1, z) - bessel_j(n + 1, z)
    num = 64.0 if n % 4 == 2 else 16.0
    coef = abs(num / (z * n * n * (1.0 - math.pi / 4.0)) * gap)
    return BandLength(coef * eps2m, note)


def swept_band_width(
    n: int, k: int, params: ExpansionParams, resolution: int = 33
) -> float:
    """Grid-swept width of the union of branch bands of (n, k), pad excluded;
    independent route to `band_length` for cross-checking."""
    if n == 0:
        corr = correction_for(ModeIndex(0, k, Parity.SIMPLE))
        values = [
            corr.lambda1_at(FloquetPoint(float(a), float(b)))
            for a in floquet_axis(resolution)
            for b in floquet_axis(resolution)
        ]
        return params.first_order_scale * (max(values) - min(values))
    if n % 4 == 0:
        raise ValueError(
            "band width of (n, k) = (%d, %d) is undetermined at first order" % (n, k)
        )
    corr = correction_for(ModeIndex(n, k, Parity.SINE))
    values = [0.0]  # the cosine branch pins Lambda1 = 0 into the union
    values.extend(
        corr.lambda1_at(FloquetPoint(float(a), float(b)))
        for a in floquet_axis(resolution)
        for b in floquet_axis(resolution)
    )
    return params.first_order_scale * (max(values) - min(values))


@dataclass(frozen=True)
class GapReport:
    """Certification verdict for the slot between two consecutive bands.
    `reason` names the obstruction when `certified` is False."""

    below: ModeIndex
    above: ModeIndex
    gap_lower: float
    gap_upper: float
    certified: bool
    reason: str | None = None


def _lambda1_range(interval: BandInterval) -> float:
    # recompute from the stored extremizers: upper-lower-2*pad suffers float
    # cancellation on first-order-flat bands
    corr = correction_for(interval.mode)
    lo = corr.lambda1_at(interval.extrema_eta[0])
    hi = corr.lambda1_at(interval.extrema_eta[1])
    return hi - lo


def _first_order_flat_pair(below: ModeIndex, above: ModeIndex) -> bool:
    # band-direction convention: odd-n bands extend downward from Lambda0,
    # simple and n = 2 (mod 4) bands extend upward, so the facing edges of
    # such a pair are both flat at first order
    below_odd = below.n % 2 == 1
    above_up = above.n == 0 or above.n % 4 == 2
    return below_odd and above_up


def detect_gaps(
    spectrum_prefix: int,
    params: ExpansionParams,
    grid_resolution: int = 33,
    error_constants: dict[tuple[int, int], float] | None = None,
) -> list[GapReport]:
    """Gap reports for each adjacent pair among the first `spectrum_prefix`
    limit modes.  Per-mode error constants override params.error_constant.
    Non-certification reasons, in precedence order: undetermined-band,
    shared-leading-term, first-order-flat, pads-overlap."""
    if spectrum_prefix < 2:
        raise ValueError(
            "spectrum_prefix must be >= 2, got %r" % (spectrum_prefix,)
        )
    pairs = enumerate_spectrum(spectrum_prefix)

    def params_for(m: ModeIndex) -> ExpansionParams:
        if error_constants is not None and (m.n, m.k) in error_constants:
            return replace(params, error_constant=error_constants[(m.n, m.k)])
        return params

    intervals = [
        band_interval(p.mode, params_for(p.mode), grid_resolution) for p in pairs
    ]

    _warn_if_pad_swamps_first_order(intervals, params)

    reports: list[GapReport] = []
    for below, above in zip(intervals, intervals[1:]):
        lower, upper = below.upper, above.lower
        reason: str | None = None
        if below.undetermined or above.undetermined:
            reason = "undetermined-band"
        elif below.mode.n == above.mode.n and below.mode.k == above.mode.k:
            # cosine/sine branches of one double eigenvalue share Lambda0 and
            # overlap at every eta where the trace vanishes
            reason = "shared-leading-term"
        elif _first_order_flat_pair(below.mode, above.mode):
            reason = "first-order-flat"
        elif upper <= lower:
            reason = "pads-overlap"
        reports.append(
            GapReport(below.mode, above.mode, lower, upper, reason is None, reason)
        )
    return reports


def _warn_if_pad_swamps_first_order(
    intervals: list[BandInterval], params: ExpansionParams
) -> None:
    # asymptotic-regime guard: eps^gamma must stay below the first-order
    # widths eps^{2m} * range, else pads can swamp the model
    ranges = [_lambda1_range(b) for b in intervals if not b.undetermined]
    ranges = [r for r in ranges if r > 0.0]
    if not ranges:
        return
    if params.epsilon**params.gamma >= params.first_order_scale * min(ranges):
        warnings.warn(
            "eps^gamma = %.3g is not below the smallest first-order band "
            "range %.3g; error pads can swamp the first-order model at "
            "eps = %g" % (
                params.epsilon**params.gamma,
                params.first_order_scale * min(ranges),
                params.epsilon,
            ),
            UserWarning,
            stacklevel=3,
        )


def brillouin_sweep(
    mode: ModeIndex, params: ExpansionParams, resolution: int = 33
) -> list[tuple[FloquetPoint, float]]:
    """Two-term eigenvalue sampled over the closed grid, row-major in eta1."""
    axis = floquet_axis(resolution)
    out: list[tuple[FloquetPoint, float]] = []
    for e1 in axis:
        for e2 in axis:
            eta = FloquetPoint(float(e1), float(e2))
            out.append((eta, lambda_expansion(mode, eta, params).value))
    return out
