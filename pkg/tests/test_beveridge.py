import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from uvstar.beveridge import (
    bic_score,
    detect_breaks,
    fit_breaks,
    hyperbola_constant,
    log_ols,
    matching_elasticity,
    select_num_breaks,
)
from uvstar.errors import DomainError, InfeasiblePartition, SingularFit
from uvstar.periods import DateRange, Frequency, Period
from uvstar.series import PairedSeries


def paired_from_uv(u, v, start_year=1990):
    p0 = Period.quarter(start_year, 1)
    return PairedSeries(
        frequency=Frequency.QUARTERLY,
        periods=tuple(p0.shift(i) for i in range(len(u))),
        u=tuple(float(x) for x in u),
        v=tuple(float(x) for x in v),
    )


def power_law_pairs(u, constant, elasticity):
    """v = constant * u^elasticity, exact."""
    v = [constant * x**elasticity for x in u]
    return paired_from_uv(u, v)


def piecewise_pairs(rng, n, break_points, elasticities, intercepts, noise=0.0):
    """Segments of log v = a_k + e_k log u (+ optional noise)."""
    u = rng.uniform(0.03, 0.10, size=n)
    bounds = [0, *break_points, n]
    log_v = np.empty(n)
    for k, (a, b) in enumerate(zip(bounds, bounds[1:])):
        log_v[a:b] = intercepts[k] + elasticities[k] * np.log(u[a:b])
    log_v += noise * rng.standard_normal(n)
    return paired_from_uv(u, np.exp(log_v))


def brute_force_breaks(pairs, k, min_seg):
    """Exhaustive search over all admissible k-break placements."""
    n = len(pairs)
    lu = np.log(np.asarray(pairs.u))
    lv = np.log(np.asarray(pairs.v))

    def ssr(i, j):
        x, y = lu[i : j + 1], lv[i : j + 1]
        slope, intercept = np.polyfit(x, y, 1)
        return float(np.sum((y - intercept - slope * x) ** 2))

    best = (math.inf, None)
    for starts in itertools.combinations(range(1, n), k):
        bounds = [0, *starts, n]
        if any(b - a < min_seg for a, b in zip(bounds, bounds[1:])):
            continue
        total = sum(ssr(a, b - 1) for a, b in zip(bounds, bounds[1:]))
        if total < best[0]:
            best = (total, starts)
    return best[1], best[0]


class TestLogOls:
    def test_exact_hyperbola(self):
        u = np.linspace(0.02, 0.09, 24)
        pairs = power_law_pairs(u, 0.0016, -1.0)
        seg = log_ols(pairs)
        assert seg.elasticity == pytest.approx(-1.0, abs=1e-10)
        assert seg.ssr == pytest.approx(0.0, abs=1e-12)
        assert seg.n == 24

    def test_exact_power_law(self):
        u = np.linspace(0.02, 0.09, 24)
        seg = log_ols(power_law_pairs(u, 0.003, -0.85))
        assert seg.elasticity == pytest.approx(-0.85, abs=1e-10)

    def test_window_restriction(self):
        u = np.linspace(0.02, 0.09, 24)
        pairs = power_law_pairs(u, 0.0016, -1.0)
        window = DateRange(pairs.periods[4], pairs.periods[11])
        seg = log_ols(pairs, window)
        assert seg.n == 8
        assert seg.range == window

    def test_degenerate_regressor(self):
        pairs = paired_from_uv([0.05] * 10, np.linspace(0.02, 0.06, 10))
        with pytest.raises(SingularFit):
            log_ols(pairs)

    def test_too_few_points(self):
        with pytest.raises(SingularFit):
            log_ols(paired_from_uv([0.05, 0.06], [0.03, 0.04]))

    @given(
        cu=st.floats(min_value=0.2, max_value=5.0),
        cv=st.floats(min_value=0.2, max_value=5.0),
    )
    def test_slope_scale_invariant(self, cu, cv):
        rng = np.random.default_rng(7)
        u = rng.uniform(0.02, 0.01 + 0.09, size=30)
        v = 0.0016 / u * np.exp(0.05 * rng.standard_normal(30))
        base = log_ols(paired_from_uv(u, v)).elasticity
        scaled = log_ols(paired_from_uv(cu * u, cv * v)).elasticity
        assert scaled == pytest.approx(base, abs=1e-9)


class TestDetectBreaks:
    def test_noiseless_single_break(self):
        rng = np.random.default_rng(0)
        pairs = piecewise_pairs(rng, 40, [20], [-1.0, -0.5], [-7.0, -5.0])
        results = detect_breaks(pairs, max_breaks=2, min_seg=5)
        starts, ssr = results[1]
        assert starts == (20,)
        assert ssr == pytest.approx(0.0, abs=1e-12)

    def test_zero_breaks_equals_full_ols(self):
        rng = np.random.default_rng(1)
        pairs = piecewise_pairs(rng, 30, [], [-0.9], [-6.5], noise=0.05)
        results = detect_breaks(pairs, max_breaks=1, min_seg=5)
        assert results[0][0] == ()
        assert results[0][1] == pytest.approx(log_ols(pairs).ssr, rel=1e-9)

    def test_matches_brute_force_two_breaks(self):
        rng = np.random.default_rng(42)
        pairs = piecewise_pairs(
            rng, 60, [20, 40], [-1.0, -0.6, -1.1], [-7.0, -5.6, -7.4], noise=0.08
        )
        results = detect_breaks(pairs, max_breaks=2, min_seg=6)
        dp_starts, dp_ssr = results[2]
        bf_starts, bf_ssr = brute_force_breaks(pairs, 2, 6)
        assert dp_ssr == pytest.approx(bf_ssr, rel=1e-9)
        assert tuple(dp_starts) == tuple(bf_starts)

    @pytest.mark.parametrize("seed", [3, 11, 29])
    def test_matches_brute_force_random_data(self, seed):
        rng = np.random.default_rng(seed)
        u = rng.uniform(0.03, 0.10, size=36)
        v = 0.002 / u * np.exp(0.3 * rng.standard_normal(36))
        pairs = paired_from_uv(u, v)
        results = detect_breaks(pairs, max_breaks=2, min_seg=5)
        for k in (1, 2):
            bf_starts, bf_ssr = brute_force_breaks(pairs, k, 5)
            assert results[k][1] == pytest.approx(bf_ssr, rel=1e-9)
            assert tuple(results[k][0]) == tuple(bf_starts)

    def test_ssr_monotone_in_k(self):
        rng = np.random.default_rng(5)
        pairs = piecewise_pairs(rng, 60, [30], [-1.0, -0.7], [-7.0, -5.9], noise=0.1)
        results = detect_breaks(pairs, max_breaks=4, min_seg=6)
        ssrs = [results[k][1] for k in sorted(results)]
        assert all(b <= a + 1e-12 for a, b in zip(ssrs, ssrs[1:]))

    def test_infeasible(self):
        rng = np.random.default_rng(2)
        pairs = piecewise_pairs(rng, 12, [], [-1.0], [-7.0], noise=0.01)
        with pytest.raises(InfeasiblePartition):
            detect_breaks(pairs, max_breaks=3, min_seg=5)


class TestSelectNumBreaks:
    def test_noiseless_break_selected(self):
        rng = np.random.default_rng(0)
        pairs = piecewise_pairs(rng, 40, [20], [-1.0, -0.5], [-7.0, -5.0])
        fit = select_num_breaks(pairs, detect_breaks(pairs, 3, 5))
        assert fit.num_breaks == 1
        assert str(fit.break_dates[0]) == str(pairs.periods[20])
        assert len(fit.segments) == 2

    def test_pure_hyperbola_with_noise_prefers_zero(self):
        # simulation oracle: on 100 replications of a one-regime curve with
        # mild noise, BIC should choose no breaks at least 95 times
        rng = np.random.default_rng(123)
        zero_picked = 0
        for _ in range(100):
            u = rng.uniform(0.03, 0.10, size=60)
            v = 0.0016 / u * np.exp(0.05 * rng.standard_normal(60))
            pairs = paired_from_uv(u, v)
            fit = select_num_breaks(pairs, detect_breaks(pairs, 2, 15))
            zero_picked += fit.num_breaks == 0
        assert zero_picked >= 95

    def test_segments_tile_sample(self):
        rng = np.random.default_rng(9)
        pairs = piecewise_pairs(rng, 50, [25], [-1.0, -0.6], [-7.0, -5.5], noise=0.05)
        fit = select_num_breaks(pairs, detect_breaks(pairs, 3, 6))
        assert fit.segments[0].range.start == pairs.periods[0]
        assert fit.segments[-1].range.end == pairs.periods[-1]
        for a, b in zip(fit.segments, fit.segments[1:]):
            assert b.range.start == a.range.end.shift(1)
        assert fit.num_breaks == len(fit.segments) - 1

    def test_bic_formula(self):
        # p = 2(k+1) + k parameters
        assert bic_score(100, 2.5, 0) == pytest.approx(
            100 * math.log(2.5 / 100) + 2 * math.log(100)
        )
        assert bic_score(100, 2.5, 3) == pytest.approx(
            100 * math.log(2.5 / 100) + 11 * math.log(100)
        )
        assert bic_score(100, 0.0, 1) == -math.inf


class TestHyperbolaConstant:
    def test_exact_hyperbola(self):
        u = np.linspace(0.02, 0.08, 20)
        hc = hyperbola_constant(power_law_pairs(u, 0.0016, -1.0))
        assert hc.A == pytest.approx(0.0016, rel=1e-12)
        assert hc.dispersion == pytest.approx(0.0, abs=1e-12)

    def test_single_pair(self):
        hc = hyperbola_constant(paired_from_uv([0.04], [0.04]))
        assert hc.A == pytest.approx(0.0016)

    @given(k=st.floats(min_value=0.1, max_value=5.0))
    def test_scale_equivariance(self, k):
        u = [0.03, 0.05, 0.08]
        v = [0.05, 0.03, 0.02]
        base = hyperbola_constant(paired_from_uv(u, v)).A
        scaled = hyperbola_constant(
            paired_from_uv([k * x for x in u], [k * x for x in v])
        ).A
        assert scaled == pytest.approx(k * k * base, rel=1e-9)

    def test_swap_symmetry(self):
        u = [0.03, 0.05, 0.08]
        v = [0.05, 0.03, 0.02]
        assert hyperbola_constant(paired_from_uv(u, v)).A == pytest.approx(
            hyperbola_constant(paired_from_uv(v, u)).A
        )


class TestMatchingElasticity:
    def test_benchmark_value(self):
        assert matching_elasticity(1.0, 0.05) == pytest.approx(0.47368421, abs=1e-6)

    def test_low_unemployment_limit(self):
        assert matching_elasticity(1.0, 1e-9) == pytest.approx(0.5, abs=1e-6)

    def test_zero_crossing(self):
        # eta = 0 exactly when eps equals u/(1-u)
        assert matching_elasticity(1.0, 0.5) == pytest.approx(0.0, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            matching_elasticity(1.0, 1.0)
        with pytest.raises(DomainError):
            matching_elasticity(0.0, 0.05)

    def test_monotone_decreasing_in_u(self):
        values = [matching_elasticity(1.0, u) for u in np.linspace(0.01, 0.4, 25)]
        assert all(b < a for a, b in zip(values, values[1:]))

    @given(
        eps=st.floats(min_value=0.2, max_value=2.0),
        u=st.floats(min_value=1e-4, max_value=0.3),
    )
    def test_bounded_above(self, eps, u):
        assert matching_elasticity(eps, u) < eps / (1 + eps)


class TestFitBreaksWrapper:
    def test_trimming_fraction(self):
        rng = np.random.default_rng(17)
        pairs = piecewise_pairs(rng, 50, [25], [-1.0, -0.6], [-7.0, -5.5], noise=0.04)
        fit = fit_breaks(pairs, max_breaks=3, min_seg_frac=0.10)
        # ceil(0.10 * 50) = 5: every segment must hold at least 5 points
        assert all(seg.n >= 5 for seg in fit.segments)
        assert fit.num_breaks == 1
