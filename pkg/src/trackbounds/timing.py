"""Time-domain metrics: crossing solvers, rise and settling times.

Crossings of the closed-form step response are solved by fifth-order Newton
forward-difference inverse interpolation on six equally spaced samples, with
the sampling refined until two successive grid halvings agree. A plain
bisection takes over whenever the fixed-point iteration misbehaves, so the
result is always a bracketed root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError
from .sos_core import SecondOrderParams, step_value

__all__ = [
    "ToleranceBand",
    "TimeDomainMetrics",
    "newton_inverse_interp",
    "unit_rise_time",
    "unit_settling_time",
    "omega_n_for",
    "extract_metrics",
]

# fixed-point iteration on the normalized abscissa
_FP_TOL = 1e-10
_FP_MAXIT = 100
# outer grid refinement: stop when consecutive halvings agree this closely
_REFINE_TOL = 1e-6
_REFINE_MAX_LEVELS = 40


@dataclass(frozen=True)
class ToleranceBand:
    """Settlement band final*(1 +/- dev)."""

    dev: float

    def __post_init__(self):
        if not 0 < self.dev < 1:
            raise ValueError("tolerance band must be a fraction in (0, 1)")


@dataclass(frozen=True)
class TimeDomainMetrics:
    """Overshoot fraction, rise time, settling time, final value."""

    mp: float
    tr: float
    ts: float
    final_value: float

    def __post_init__(self):
        if self.mp < 0:
            raise ValueError("overshoot fraction cannot be negative")
        if self.tr < 0 or self.ts < 0:
            raise ValueError("rise and settling times cannot be negative")


def newton_inverse_interp(times, values, target: float) -> float:
    """Solve f(t) = target from six equally spaced (t, f) samples.

    Builds the fifth-order Newton forward-difference polynomial and inverts
    it by successive substitution on the normalized abscissa u, starting
    from the secant estimate. Raises NumericalError if the iteration fails
    to settle within 100 steps.
    """
    t = np.asarray(times, dtype=float)
    f = np.asarray(values, dtype=float)
    if t.shape != (6,) or f.shape != (6,):
        raise ValueError("exactly six samples are required")
    h = t[1] - t[0]
    if h <= 0 or not np.allclose(np.diff(t), h, rtol=1e-9, atol=1e-12 * max(1.0, abs(h))):
        raise ValueError("samples must be equally spaced in time")
    if not (min(f) <= target <= max(f)):
        raise ValueError("target is not bracketed by the samples")

    # forward differences of increasing order, taken at the first sample
    diffs = [float(f[0])]
    col = f
    for _ in range(5):
        col = np.diff(col)
        diffs.append(float(col[0]))
    if diffs[1] == 0:
        raise NumericalError("inverse interpolation diverged: flat first difference")

    u = (target - diffs[0]) / diffs[1]
    for _ in range(_FP_MAXIT):
        corr = 0.0
        prod = u
        fact = 1.0
        for k in range(2, 6):
            prod *= u - (k - 1)
            fact *= k
            corr += prod / fact * diffs[k]
        u_new = (target - diffs[0] - corr) / diffs[1]
        if not math.isfinite(u_new) or abs(u_new) > 1e6:
            raise NumericalError("inverse interpolation diverged")
        if abs(u_new - u) < _FP_TOL:
            return float(t[0] + u_new * h)
        u = u_new
    raise NumericalError("inverse interpolation diverged")


def _bisect(f, lo: float, hi: float, target: float) -> float:
    g_lo = f(lo) - target
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        g_mid = f(mid) - target
        if g_mid == 0 or (hi - lo) < 1e-14 * max(1.0, abs(hi)):
            return mid
        if (g_mid < 0) == (g_lo < 0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _refined_crossing(f, lo: float, hi: float, target: float) -> float:
    """Crossing of target on [lo, hi] where f is monotone through it."""
    prev = None
    n = 6
    for _ in range(_REFINE_MAX_LEVELS):
        ts = np.linspace(lo, hi, n)
        fs = f(ts)
        increasing = fs[-1] >= fs[0]
        key = fs if increasing else -fs
        j = int(np.searchsorted(key, target if increasing else -target))
        j = min(max(j, 1), n - 1)
        w = min(max(j - 3, 0), n - 6)
        try:
            t_hat = newton_inverse_interp(ts[w:w + 6], fs[w:w + 6], target)
            if not ts[w] <= t_hat <= ts[w + 5]:
                raise NumericalError("estimate escaped the sample window")
        except (ValueError, NumericalError):
            t_hat = _bisect(f, ts[j - 1], ts[j], target)
        if prev is not None and abs(t_hat - prev) < _REFINE_TOL:
            return float(t_hat)
        prev = t_hat
        n = 2 * n - 1
    raise NumericalError("crossing search did not converge")


def _unit_step(zeta: float):
    params = SecondOrderParams(1.0, zeta)
    return lambda t: step_value(params, t)


def unit_rise_time(zeta: float) -> float:
    """10%-90% rise time of the unit-frequency step response."""
    if not 0 < zeta < 1:
        raise ValueError("damping ratio must lie strictly inside (0, 1)")
    f = _unit_step(zeta)
    t_peak = math.pi / math.sqrt(1 - zeta * zeta)
    t10 = _refined_crossing(f, 0.0, t_peak, 0.1)
    t90 = _refined_crossing(f, 0.0, t_peak, 0.9)
    return t90 - t10


def unit_settling_time(zeta: float, band: ToleranceBand) -> float:
    """Last entry of the unit-frequency step response into the band.

    The response extrema sit at t_k = k*pi/wd where the deviation from the
    final value equals exp(-zeta*t_k) exactly, so the final band-exceeding
    lobe is located by scanning k and the crossing is solved inside it.
    """
    if not 0 < zeta < 1:
        raise ValueError("damping ratio must lie strictly inside (0, 1)")
    dev = band.dev
    root = math.sqrt(1 - zeta * zeta)
    wd = root
    phi = math.acos(zeta)

    k = max(0, math.ceil(wd * math.log(1.0 / dev) / (zeta * math.pi)) - 1)
    while k > 0 and math.exp(-zeta * k * math.pi / wd) <= dev:
        k -= 1

    t_lo = k * math.pi / wd
    t_hi = ((k + 1) * math.pi - phi) / wd
    target = 1.0 - dev if k % 2 == 0 else 1.0 + dev
    return _refined_crossing(_unit_step(zeta), t_lo, t_hi, target)


def omega_n_for(zeta: float, tr_spec: float, ts_spec: float, band: ToleranceBand) -> float:
    """Smallest natural frequency meeting both timing requirements.

    Rise and settling times scale as 1/omega_n, so the binding requirement
    is whichever ratio of unit-frequency time to specified time is larger.
    """
    if not tr_spec > 0:
        raise ValueError("rise time specification must be positive")
    if not ts_spec > 0:
        raise ValueError("settling time specification must be positive")
    return max(unit_rise_time(zeta) / tr_spec,
               unit_settling_time(zeta, band) / ts_spec)


def extract_metrics(times, values, band: ToleranceBand) -> TimeDomainMetrics:
    """Measure mp, tr, ts and the final value of a uniformly sampled trace.

    The final value is the mean of the last 5% of samples; the trace must
    already be settled (every sample in its final 10% inside the band).
    Crossings are located by linear interpolation between samples.
    """
    t = np.asarray(times, dtype=float)
    y = np.asarray(values, dtype=float)
    if t.ndim != 1 or t.shape != y.shape or t.size < 20:
        raise ValueError("trace must be two matching 1-D arrays with at least 20 samples")

    n = t.size
    final = float(np.mean(y[-max(1, round(0.05 * n)):]))
    if final <= 0:
        raise ValueError("degenerate final value")

    half_band = band.dev * final
    tail = y[-max(1, round(0.10 * n)):]
    if np.any(np.abs(tail - final) > half_band):
        raise ValueError("unsettled trace")

    mp = max(0.0, (float(np.max(y)) - final) / final)

    def first_crossing(level):
        idx = np.nonzero(y >= level)[0]
        if idx.size == 0:
            return None
        j = int(idx[0])
        if j == 0:
            return float(t[0])
        return float(t[j - 1] + (level - y[j - 1]) / (y[j] - y[j - 1]) * (t[j] - t[j - 1]))

    t90 = first_crossing(0.9 * final)
    if t90 is None:
        raise ValueError("no rise: trace never reaches 90% of its final value")
    t10 = first_crossing(0.1 * final)
    tr = t90 - t10

    outside = np.nonzero(np.abs(y - final) > half_band)[0]
    if outside.size == 0:
        ts = 0.0
    else:
        j = int(outside[-1])
        boundary = final + half_band if y[j] > final else final - half_band
        ts = float(t[j] + (boundary - y[j]) / (y[j + 1] - y[j]) * (t[j + 1] - t[j]))

    return TimeDomainMetrics(mp=mp, tr=tr, ts=ts, final_value=final)
