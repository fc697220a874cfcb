"""Envelope bounds: pointwise min/max plus a least-squares rational fit.

Endpoint restriction keeps whole members, which can be loose in the
middle of the band. The envelope mode instead takes the pointwise
magnitude minimum (and maximum) over all fifty family members and then
recovers a low-order rational transfer function from those complex
samples by linear least squares.
"""

import numpy as np

from trackbounds import (
    FitProblem,
    Spec,
    build_wd,
    cleanup,
    complex_envelope,
    envelope_of,
    family_tfs,
    fit,
    make_grid,
    report,
)

spec = Spec(mp=0.15, tr=5.0, ts=30.0, dev=0.03, wi=5)
table = build_wd(spec, 0.05)
grid = make_grid(0.01, 100.0, 200)
members = [tf for i in range(1, spec.wi + 1) for tf in family_tfs(table, i)]
print(f"family size: {len(members)} members over {len(grid)} grid points")

# ---------------------------------------------------------------------------
# pointwise envelopes
# ---------------------------------------------------------------------------
lo_curve = envelope_of(members, grid, "lower")
hi_curve = envelope_of(members, grid, "upper")
k = np.searchsorted(grid.omegas, 1.0)
print(f"at omega = {grid.omegas[k]:.3f} rad/s the envelope magnitudes are "
      f"{lo_curve.magnitude[k]:.4f} (lower) and {hi_curve.magnitude[k]:.4f} (upper)")

# ---------------------------------------------------------------------------
# rational recovery from the envelope samples
# ---------------------------------------------------------------------------
lo_data = complex_envelope(lo_curve)
hi_data = complex_envelope(hi_curve)

lo_fit = fit(FitProblem(lo_data, 0, 2))
print("\nlower envelope, constant over quadratic:")
print(f"  numerator   : {lo_fit.num}")
print(f"  denominator : {lo_fit.den}")

hi_fit = fit(FitProblem(hi_data, 1, 2))
print("upper envelope, first order over quadratic:")
print(f"  numerator   : {hi_fit.num}")
print(f"  denominator : {hi_fit.den}")

# the tiny s-coefficient carries no dynamics this side of the far zero;
# a looser significance threshold strips it and keeps the gain
trimmed = cleanup(hi_fit, zero_tol=1e-2, ref_omega=grid.omegas[0])
print("upper after cleanup:")
print(f"  numerator   : {trimmed.num}")
print(f"  denominator : {trimmed.den}")

# ---------------------------------------------------------------------------
# how faithful are the fits?
# ---------------------------------------------------------------------------
for name, fitted, data in (("lower", lo_fit, lo_data), ("upper", hi_fit, hi_data)):
    rep = report(fitted, data)
    print(f"{name} fit: max |mag error| = {rep.max_mag_error:.4f}, "
          f"max phase error = {rep.max_phase_error_deg:+.3f} deg")
