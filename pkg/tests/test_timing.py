"""Tests for crossing solvers, rise/settling times, and trace metrics."""

import numpy as np
import pytest

import oracles
from trackbounds import (
    NumericalError,
    SecondOrderParams,
    ToleranceBand,
    TimeDomainMetrics,
    extract_metrics,
    make_tf,
    newton_inverse_interp,
    omega_n_for,
    step_response,
    step_value,
    unit_rise_time,
    unit_settling_time,
)

BAND = ToleranceBand(0.03)

# frozen reference values from the independent bisection oracle in oracles.py
RISE_051696 = 1.670969076362589
RISE_091723 = 2.9612920311054034
RISE_096687 = 3.195725676852441
SETTLE_051696 = 5.5814280585890765
SETTLE_091723 = 4.569946158127828


@pytest.fixture(scope="module")
def frozen_oracles():
    """Recompute the frozen constants so drift in either side is caught."""
    return {
        "rise_051696": oracles.oracle_rise_time(0.51696),
        "rise_091723": oracles.oracle_rise_time(0.91723),
        "rise_096687": oracles.oracle_rise_time(0.96687),
        "settle_051696": oracles.oracle_settling_time(0.51696, 0.03),
        "settle_091723": oracles.oracle_settling_time(0.91723, 0.03),
    }


def test_oracle_constants_are_current(frozen_oracles):
    assert abs(frozen_oracles["rise_051696"] - RISE_051696) < 1e-9
    assert abs(frozen_oracles["rise_091723"] - RISE_091723) < 1e-9
    assert abs(frozen_oracles["rise_096687"] - RISE_096687) < 1e-9
    assert abs(frozen_oracles["settle_051696"] - SETTLE_051696) < 1e-7
    assert abs(frozen_oracles["settle_091723"] - SETTLE_091723) < 1e-7


class TestNewtonInverseInterp:
    def test_linear_data_is_exact(self):
        t = np.arange(6.0)
        assert abs(newton_inverse_interp(t, 3.0 * t + 1.0, 8.5) - 2.5) < 1e-12

    def test_quintic_polynomials_are_exact(self):
        # gently curved monotone quintics; the fixed-point iteration is a
        # contraction when higher-order differences stay below the first
        rng = np.random.default_rng(31)
        for _ in range(25):
            coeffs = np.zeros(6)
            coeffs[4] = rng.uniform(1.0, 2.0)  # linear term
            coeffs[5] = rng.normal()
            for pos, fact in zip((3, 2, 1, 0), (2.0, 6.0, 24.0, 120.0)):
                coeffs[pos] = rng.normal() * 0.3 / fact  # t^2 .. t^5 terms
            t = np.linspace(0.0, 1.0, 6)
            f = np.polyval(coeffs, t)
            target = float(rng.uniform(min(f[1], f[4]), max(f[1], f[4])))
            t_hat = newton_inverse_interp(t, f, target)
            # reference root of p(t) = target inside the window
            shifted = coeffs.copy()
            shifted[-1] -= target
            r = np.roots(shifted)
            real = r[np.abs(r.imag) < 1e-9].real
            real = real[(real >= -1e-6) & (real <= 1.0 + 1e-6)]
            assert real.size
            assert min(abs(real - t_hat)) < 1e-9

    def test_step_response_crossing(self):
        t = np.linspace(1.9, 2.4, 6)
        f = np.array([oracles.step_scalar(0.51696, ti) for ti in t])
        t_hat = newton_inverse_interp(t, f, 0.9)
        assert abs(t_hat - 2.1605660) < 1e-3
        assert abs(t_hat - oracles.oracle_step_crossing(0.51696, 0.9)) < 1e-6

    def test_random_step_windows_match_bisection(self):
        rng = np.random.default_rng(47)
        for _ in range(20):
            zeta = float(rng.uniform(0.1, 0.99))
            target = float(rng.uniform(0.05, 0.95))
            t_hat = oracles.newton_on_step(zeta, target)
            assert abs(t_hat - oracles.oracle_step_crossing(zeta, target)) < 1e-6

    def test_sample_count_enforced(self):
        t = np.arange(5.0)
        with pytest.raises(ValueError, match="six"):
            newton_inverse_interp(t, t, 2.0)

    def test_equal_spacing_enforced(self):
        t = np.array([0.0, 1.0, 2.0, 3.0, 4.0, 5.5])
        with pytest.raises(ValueError, match="equally spaced"):
            newton_inverse_interp(t, t, 2.0)

    def test_unbracketed_target_rejected(self):
        t = np.arange(6.0)
        with pytest.raises(ValueError, match="bracketed"):
            newton_inverse_interp(t, t, 9.0)

    def test_flat_data_raises_numerical(self):
        t = np.arange(6.0)
        f = np.array([0.0, 0.0, 0.0, 0.0, 0.0, 1.0])
        with pytest.raises(NumericalError, match="diverged"):
            newton_inverse_interp(t, f, 0.5)


class TestUnitRiseTime:
    def test_low_damping_member(self):
        t = unit_rise_time(0.51696)
        assert abs(t - 1.6708) < 2e-3
        assert abs(t - RISE_051696) < 2e-6

    def test_mid_damping_member(self):
        # the bisection oracle fixes this value; see the frozen constants
        assert abs(unit_rise_time(0.91723) - RISE_091723) < 2e-6

    def test_high_damping_member(self):
        t = unit_rise_time(0.96687)
        assert abs(t - 3.200) < 5e-3
        assert abs(t - RISE_096687) < 2e-6

    def test_monotone_in_damping(self):
        zs = np.linspace(0.2, 0.95, 12)
        rises = [unit_rise_time(z) for z in zs]
        assert all(a < b for a, b in zip(rises, rises[1:]))

    def test_repeatable(self):
        assert unit_rise_time(0.7) == unit_rise_time(0.7)

    def test_domain(self):
        for bad in (0.0, 1.0, -0.5):
            with pytest.raises(ValueError):
                unit_rise_time(bad)


class TestUnitSettlingTime:
    def test_low_damping_member(self):
        t = unit_settling_time(0.51696, BAND)
        assert abs(t - 5.58) < 0.02
        assert abs(t - SETTLE_051696) < 1e-5

    def test_mid_damping_member(self):
        t = unit_settling_time(0.91723, BAND)
        assert abs(t - 4.57) < 0.02
        assert abs(t - SETTLE_091723) < 1e-5

    def test_random_damping_matches_oracle(self):
        rng = np.random.default_rng(59)
        for _ in range(12):
            zeta = float(rng.uniform(0.15, 0.98))
            mine = unit_settling_time(zeta, BAND)
            ref = oracles.oracle_settling_time(zeta, 0.03)
            assert abs(mine - ref) < 1e-5

    def test_tighter_band_settles_no_sooner(self):
        for zeta in (0.3, 0.52, 0.7, 0.9):
            loose = unit_settling_time(zeta, ToleranceBand(0.05))
            tight = unit_settling_time(zeta, ToleranceBand(0.02))
            assert tight >= loose - 1e-9

    def test_band_validation(self):
        with pytest.raises(ValueError):
            ToleranceBand(1.0)
        with pytest.raises(ValueError):
            ToleranceBand(0.0)
        with pytest.raises(ValueError):
            ToleranceBand(-0.1)


class TestOmegaNFor:
    def test_published_family_seed(self):
        wn = omega_n_for(0.51696, 5.0, 30.0, BAND)
        assert abs(wn - 0.3342) < 2e-3
        ref = max(RISE_051696 / 5.0, SETTLE_051696 / 30.0)
        assert abs(wn - ref) < 1e-6

    def test_settling_dominated_branch(self):
        wn = omega_n_for(0.51696, 1e9, 30.0, BAND)
        assert abs(wn - 0.186) < 1e-3
        assert abs(wn - SETTLE_051696 / 30.0) < 1e-6

    def test_homogeneity_is_exact(self):
        a = omega_n_for(0.6, 5.0, 30.0, BAND)
        b = omega_n_for(0.6, 10.0, 60.0, BAND)
        assert b == a / 2.0

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            omega_n_for(0.5, 0.0, 30.0, BAND)
        with pytest.raises(ValueError):
            omega_n_for(0.5, 5.0, -1.0, BAND)


class TestExtractMetrics:
    def test_constant_unit_trace(self):
        t = np.linspace(0.0, 10.0, 50)
        m = extract_metrics(t, np.ones(50), BAND)
        assert m.mp == 0.0
        assert m.tr == 0.0
        assert m.ts == 0.0
        assert m.final_value == 1.0

    def test_plateaued_ramp_has_exact_zero_overshoot(self):
        t = np.linspace(0.0, 15.0, 600)
        m = extract_metrics(t, np.clip(t / 5.0, 0.0, 1.0), BAND)
        assert m.mp == 0.0
        assert abs(m.tr - 4.0) < 1e-9  # 10% to 90% of a ramp to 1 over 5 s
        assert abs(m.ts - 5.0 * (1.0 - BAND.dev)) < 0.05
        assert m.final_value == 1.0

    def test_exponential_trace_rise_time(self):
        t = np.linspace(0.0, 15.0, 600)
        m = extract_metrics(t, 1.0 - np.exp(-t), BAND)
        # strictly increasing trace: the peak exceeds the tail-mean final
        # value by a sliver, so mp is tiny but not exactly zero
        assert m.mp < 1e-6
        # rise of 1 - e^{-t}: t10 = ln(10/9), t90 = ln(10)
        assert abs(m.tr - (np.log(10.0) - np.log(10.0 / 9.0))) < 2e-3
        assert m.ts > 0.0

    def test_closed_form_member_trace(self):
        p = SecondOrderParams(0.3371943060017473, 0.5169126432375071)
        t = np.arange(0.0, 90.0, 0.01)
        m = extract_metrics(t, step_value(p, t), BAND)
        peak = oracles.step_scalar(p.zeta, np.pi / np.sqrt(1 - p.zeta**2))
        assert abs(m.mp - (peak - 1.0)) < 1e-3
        assert abs(m.tr - oracles.oracle_rise_time(p.zeta) / p.omega_n) < 1e-3
        assert abs(m.ts - oracles.oracle_settling_time(p.zeta, 0.03) / p.omega_n) < 1e-2
        assert abs(m.final_value - 1.0) < 1e-3

    def test_simulated_member_trace(self):
        tf = make_tf(SecondOrderParams(0.3371943060017473, 0.5169126432375071))
        trace = step_response(tf, 90.0)
        m = extract_metrics(trace.times, trace.values, BAND)
        assert abs(m.mp - 0.150) < 2e-3
        assert abs(m.tr - 5.00) < 0.05

    def test_unsettled_trace_rejected(self):
        p = SecondOrderParams(1.0, 0.2)
        t = np.arange(0.0, 3.0, 0.01)
        with pytest.raises(ValueError, match="unsettled"):
            extract_metrics(t, step_value(p, t), BAND)

    def test_degenerate_final_rejected(self):
        t = np.linspace(0.0, 10.0, 50)
        with pytest.raises(ValueError, match="degenerate"):
            extract_metrics(t, np.full(50, -0.5), BAND)

    def test_short_trace_rejected(self):
        t = np.linspace(0.0, 1.0, 10)
        with pytest.raises(ValueError, match="20 samples"):
            extract_metrics(t, np.ones(10), BAND)

    def test_metrics_validation(self):
        with pytest.raises(ValueError):
            TimeDomainMetrics(mp=-0.1, tr=1.0, ts=1.0, final_value=1.0)
        with pytest.raises(ValueError):
            TimeDomainMetrics(mp=0.1, tr=-1.0, ts=1.0, final_value=1.0)
