"""Step-response simulation and round-trip metric extraction.

The transfer function is realized in controllable canonical form and the
unit-step forced response is integrated with the classical fixed-step
fourth-order Runge-Kutta method. For a linear system driven by a constant
input one RK4 step is an affine map, so the propagation matrix and forcing
vector are formed once and iterated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .envelope import BoundPair
from .errors import NumericalError
from .family import Spec
from .tf_model import RationalTF, roots
from .timing import TimeDomainMetrics, ToleranceBand, extract_metrics

__all__ = [
    "StepTrace",
    "FinalTD",
    "step_response",
    "settled_step_response",
    "final_td",
    "format_trace",
]

_MAX_EXTENSIONS = 16


@dataclass(frozen=True, eq=False)
class StepTrace:
    """Uniformly sampled step response, starting at t = 0."""

    times: np.ndarray
    values: np.ndarray
    step_size: float

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        y = np.asarray(self.values, dtype=float)
        if t.ndim != 1 or t.shape != y.shape or t.size < 2:
            raise ValueError("trace must hold two matching 1-D arrays")
        if self.step_size <= 0:
            raise ValueError("step size must be positive")
        object.__setattr__(self, "times", t.copy())
        object.__setattr__(self, "values", y.copy())


@dataclass(frozen=True)
class FinalTD:
    """Round-trip metrics of the two bound responses."""

    lower: TimeDomainMetrics
    upper: TimeDomainMetrics


def _canonical(tf: RationalTF):
    den = tf.den / tf.den[0]
    num = tf.num / tf.den[0]
    m = den.size - 1
    if num.size == den.size:
        direct = num[0]
        num = (num - direct * den)[1:]
    else:
        direct = 0.0
        num = np.concatenate([np.zeros(den.size - num.size - 1), num])
    a = np.zeros((m, m))
    a[:-1, 1:] = np.eye(m - 1)
    a[-1, :] = -den[1:][::-1]
    b = np.zeros(m)
    b[-1] = 1.0
    c = num[::-1].copy()
    return a, b, c, float(direct)


def step_response(tf: RationalTF, t_end: float, step_size: float | None = None) -> StepTrace:
    """Simulate the unit step response on [0, t_end].

    When step_size is omitted it defaults to min(0.05/|fastest pole|,
    t_end/1e4). An explicit step_size larger than 0.1/|fastest pole|
    violates the accuracy contract and is rejected.
    """
    if not t_end > 0:
        raise ValueError("end time must be positive")
    if tf.den_degree < 1:
        raise ValueError("static function has no step dynamics to simulate")
    poles = roots(tf.den)
    if np.max(poles.real) >= 0:
        raise NumericalError("cannot simulate to steady state: system is not strictly stable")
    fastest = float(np.max(np.abs(poles)))

    if step_size is None:
        h = min(0.05 / fastest, t_end / 1e4)
    else:
        if step_size <= 0:
            raise ValueError("step size must be positive")
        if step_size > 0.1 / fastest:
            raise NumericalError("step size violates accuracy contract for the fastest mode")
        h = float(step_size)

    a, b, c, direct = _canonical(tf)
    m = a.shape[0]
    ha = h * a
    # classical RK4 for x' = a x + b with constant input, as one affine map
    prop = np.eye(m) + ha + ha @ ha / 2 + ha @ ha @ ha / 6 + ha @ ha @ ha @ ha / 24
    force = (h * (np.eye(m) + ha / 2 + ha @ ha / 6 + ha @ ha @ ha / 24)) @ b

    n_steps = int(math.floor(t_end / h + 1e-9))
    states = np.empty((n_steps + 1, m))
    x = np.zeros(m)
    states[0] = x
    for k in range(1, n_steps + 1):
        x = prop @ x + force
        states[k] = x
    times = np.arange(n_steps + 1) * h
    values = states @ c + direct
    return StepTrace(times, values, h)


def _is_settled(values: np.ndarray, dev: float) -> bool:
    n = values.size
    final = float(np.mean(values[-max(1, round(0.05 * n)):]))
    if final <= 0:
        return False
    tail = values[-max(1, round(0.10 * n)):]
    return bool(np.all(np.abs(tail - final) <= dev * final))


def settled_step_response(tf: RationalTF, ts_spec: float, band: ToleranceBand) -> StepTrace:
    """Simulate starting at t_end = 3*ts, doubling until the trace settles."""
    t_end = 3.0 * ts_spec
    for _ in range(_MAX_EXTENSIONS):
        trace = step_response(tf, t_end)
        if _is_settled(trace.values, band.dev):
            return trace
        t_end *= 2
    raise NumericalError("response did not settle within the extension budget")


def final_td(bounds: BoundPair, spec: Spec) -> FinalTD:
    """Round-trip verification: simulate both bounds and measure them."""
    band = ToleranceBand(spec.dev)
    metrics = {}
    for name, tf in (("lower", bounds.lower), ("upper", bounds.upper)):
        trace = settled_step_response(tf, spec.ts, band)
        metrics[name] = extract_metrics(trace.times, trace.values, band)
    return FinalTD(lower=metrics["lower"], upper=metrics["upper"])


def format_trace(trace: StepTrace) -> str:
    """CSV rendering with columns t, y."""
    lines = ["t,y"]
    lines += [f"{float(t)!r},{float(y)!r}" for t, y in zip(trace.times, trace.values)]
    return "\n".join(lines) + "\n"
