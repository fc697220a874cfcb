"""Frequency-domain envelopes and endpoint-restricted bound selection.

The lower (upper) envelope of a curve family takes the pointwise minimum
(maximum) of magnitude and of unwrapped phase independently, so it is a
conservative hull rather than the response of any single member. The
restricted modes instead pick whole members by their magnitude at one end
of the grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .family import WdTable, family_tfs
from .tf_model import (
    FrequencyGrid,
    FrequencyResponse,
    RationalTF,
    eval_poly,
    freq_response,
    roots,
)

__all__ = [
    "EnvelopeCurve",
    "BoundPair",
    "make_grid",
    "envelope_of",
    "select_restricted",
    "complex_envelope",
    "format_envelope",
]

_MODES = ("low_freq", "high_freq", "envelope")
_REL_TIE = 1e-12


@dataclass(frozen=True, eq=False)
class EnvelopeCurve:
    """Magnitude and unwrapped phase (radians) over a grid."""

    grid: FrequencyGrid
    magnitude: np.ndarray
    phase: np.ndarray

    def __post_init__(self):
        mag = np.asarray(self.magnitude, dtype=float)
        ph = np.asarray(self.phase, dtype=float)
        if mag.shape != self.grid.omegas.shape or ph.shape != self.grid.omegas.shape:
            raise ValueError("curve arrays must match the grid length")
        if np.any(mag <= 0) or not np.all(np.isfinite(mag)) or not np.all(np.isfinite(ph)):
            raise ValueError("magnitudes must be positive and finite, phases finite")
        object.__setattr__(self, "magnitude", mag.copy())
        object.__setattr__(self, "phase", ph.copy())


@dataclass(frozen=True, eq=False)
class BoundPair:
    """Lower and upper bound transfer functions, both proper and stable."""

    lower: RationalTF
    upper: RationalTF
    mode: str

    def __post_init__(self):
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}")
        for name, tf in (("lower", self.lower), ("upper", self.upper)):
            if tf.den_degree >= 1 and np.max(roots(tf.den).real) >= 0:
                raise ValueError(f"{name} bound must be strictly stable")


def make_grid(w_min: float, w_max: float, points: int) -> FrequencyGrid:
    """Logarithmically spaced grid including both endpoints."""
    if not (math.isfinite(w_min) and w_min > 0):
        raise ValueError("minimum frequency must be positive")
    if not (math.isfinite(w_max) and w_max > w_min):
        raise ValueError("maximum frequency must exceed the minimum")
    if points < 2:
        raise ValueError("grid needs at least two points")
    return FrequencyGrid(np.logspace(math.log10(w_min), math.log10(w_max), int(points)))


def envelope_of(tfs, grid: FrequencyGrid, side: str,
                phase_from: str = "independent") -> EnvelopeCurve:
    """Pointwise envelope of the member responses.

    side is "lower" or "upper". By default magnitude and phase extremes are
    taken independently per frequency; phase_from="magnitude_extremum"
    instead carries the phase of whichever member set the magnitude extreme.
    """
    if side not in ("lower", "upper"):
        raise ValueError('side must be "lower" or "upper"')
    if phase_from not in ("independent", "magnitude_extremum"):
        raise ValueError('phase_from must be "independent" or "magnitude_extremum"')
    tfs = list(tfs)
    if not tfs:
        raise ValueError("at least one member is required")

    responses = [freq_response(tf, grid) for tf in tfs]
    mags = np.array([r.magnitude() for r in responses])
    phases = np.array([r.phase() for r in responses])

    pick = np.min if side == "lower" else np.max
    mag_env = pick(mags, axis=0)
    if phase_from == "independent":
        phase_env = pick(phases, axis=0)
    else:
        arg = np.argmin(mags, axis=0) if side == "lower" else np.argmax(mags, axis=0)
        phase_env = phases[arg, np.arange(mags.shape[1])]
    return EnvelopeCurve(grid, mag_env, phase_env)


def _magnitude_at(tf: RationalTF, omega: float) -> float:
    s = 1j * omega
    return abs(eval_poly(tf.num, s) / eval_poly(tf.den, s))


def _pick_member(tfs, omega: float, want: str) -> RationalTF:
    # ties within _REL_TIE resolve to the earliest (lowest zeta) member
    best = tfs[0]
    best_mag = _magnitude_at(best, omega)
    for tf in tfs[1:]:
        mag = _magnitude_at(tf, omega)
        if want == "min" and mag < best_mag * (1 - _REL_TIE):
            best, best_mag = tf, mag
        elif want == "max" and mag > best_mag * (1 + _REL_TIE):
            best, best_mag = tf, mag
    return best


def select_restricted(table: WdTable, wi: int, grid: FrequencyGrid, end: str) -> BoundPair:
    """Pick whole members by magnitude at one end of the grid.

    The lower bound is the base-frequency (i = 1) member with the smallest
    magnitude at the chosen endpoint; the upper bound is the i = wi member
    with the largest.
    """
    if end not in ("low", "high"):
        raise ValueError('end must be "low" or "high"')
    omega = grid.omegas[0] if end == "low" else grid.omegas[-1]
    lower = _pick_member(family_tfs(table, 1), omega, "min")
    upper = _pick_member(family_tfs(table, wi), omega, "max")
    return BoundPair(lower, upper, "low_freq" if end == "low" else "high_freq")


def complex_envelope(curve: EnvelopeCurve) -> FrequencyResponse:
    """Recombine magnitude and phase into complex samples."""
    return FrequencyResponse(curve.grid, curve.magnitude * np.exp(1j * curve.phase))


def format_envelope(curve: EnvelopeCurve) -> str:
    """CSV rendering with columns omega, mag, phase_deg."""
    lines = ["omega,mag,phase_deg"]
    for w, m, p in zip(curve.grid.omegas, curve.magnitude, np.degrees(curve.phase)):
        lines.append(f"{float(w)!r},{float(m)!r},{float(p)!r}")
    return "\n".join(lines) + "\n"
