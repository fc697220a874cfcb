"""Second-order building blocks: damping, overshoot, and the step formula.

A tracking specification starts from one number: the worst overshoot the
step response may show. For a subcritically damped second-order system
that overshoot pins down the minimum damping ratio in closed form, and
every (omega_n, zeta) pair at or above that damping is a candidate curve.
"""

import numpy as np

from trackbounds import (
    SecondOrderParams,
    make_tf,
    overshoot,
    scale_omega,
    step_value,
    zeta_min,
)

# ---------------------------------------------------------------------------
# overshoot fixes the minimum damping
# ---------------------------------------------------------------------------
mp = 0.15
z_min = zeta_min(mp)
print(f"allowed overshoot      : {mp:.2f}")
print(f"minimum damping ratio  : {z_min:.6f}")
print(f"overshoot at that zeta : {overshoot(z_min):.6f}  (round trip)")

# more damping always means less overshoot
for zeta in (0.55, 0.70, 0.90):
    print(f"  zeta = {zeta:.2f} -> overshoot {overshoot(zeta):.4f}")

# ---------------------------------------------------------------------------
# the closed-form unit step response
# ---------------------------------------------------------------------------
params = SecondOrderParams(omega_n=1.0, zeta=z_min)
t = np.linspace(0.0, 12.0, 7)
y = step_value(params, t)
print("\nunit step response at omega_n = 1:")
for ti, yi in zip(t, y):
    print(f"  t = {ti:5.2f}   y = {yi:.6f}")

peak_t = np.pi / (params.omega_n * np.sqrt(1.0 - params.zeta**2))
print(f"peak at t = {peak_t:.4f}: y = {float(step_value(params, peak_t)):.6f} "
      f"(1 + Mp = {1.0 + mp:.4f})")

# ---------------------------------------------------------------------------
# the matching transfer function, and frequency scaling
# ---------------------------------------------------------------------------
tf = make_tf(params)
print(f"\nT(s) numerator   : {tf.num}")
print(f"T(s) denominator : {tf.den}")

# multiplying omega_n by i compresses time by i without changing overshoot
fifth = scale_omega(params, 5)
tf5 = make_tf(fifth)
print(f"5th harmonic member: omega_n = {fifth.omega_n:.4f}, zeta = {fifth.zeta:.4f}")
print(f"  numerator   : {tf5.num}")
print(f"  denominator : {tf5.den}")
y_slow = step_value(params, 5.0)
y_fast = step_value(fifth, 1.0)
print(f"  y_slow(5.0) = {float(y_slow):.9f} equals y_fast(1.0) = {float(y_fast):.9f}")
