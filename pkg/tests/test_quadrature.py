"""Tests for the adaptive Gauss-Kronrod integrator.

Covers exact references, a known-antiderivative corpus for error-estimate
honesty and refinement monotonicity, linearity on randomized smooth pairs,
failure reporting (NaN/inf abscissae, budget exhaustion), the semi-infinite
map, and the complex-valued front end with its Gamma-integral references.
"""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from speclab.quadrature import (
    IntegrandError,
    QuadResult,
    integrate,
    integrate_complex,
    integrate_semi_infinite,
)

GAMMA_ONE_MINUS_I = complex(0.49801566811835604, 0.15494982830181069)

# (label, integrand, lo, hi, exact value) with elementary antiderivatives;
# includes endpoint singularities, a kink, and a fast oscillation.
CORPUS = [
    ("cubic", lambda t: 3.0 * t * t, 0.0, 2.0, 8.0),
    ("inv_sqrt", lambda t: 1.0 / math.sqrt(t), 0.0, 1.0, 2.0),
    ("log", math.log, 0.0, 1.0, -1.0),
    ("oscillation", lambda t: math.cos(40.0 * t), 0.0, 3.0, math.sin(120.0) / 40.0),
    ("kink", lambda t: abs(t - 1.0 / 3.0), 0.0, 1.0, 5.0 / 18.0),
    ("gaussian", lambda t: math.exp(-t * t), -3.0, 3.0, math.sqrt(math.pi) * math.erf(3.0)),
    ("power_singularity", lambda t: t**-0.9, 0.0, 1.0, 10.0),
]


class TestExactReferences:
    def test_unit_constant(self):
        res = integrate(lambda t: 1.0, 0.0, 1.0, tol=1e-12)
        assert res.converged
        assert res.evaluations > 0
        assert abs(res.value - 1.0) <= 1e-14

    def test_monomial_degree_100(self):
        res = integrate(lambda t: t**100, 0.0, 1.0, tol=1e-13)
        assert abs(res.value - 1.0 / 101.0) <= 1e-12

    def test_half_period_sine(self):
        res = integrate(math.sin, 0.0, math.pi, tol=1e-12)
        assert abs(res.value - 2.0) <= 1e-12

    def test_converged_means_estimate_within_tolerance(self):
        for _, f, lo, hi, _ in CORPUS:
            for tol in (1e-6, 1e-10):
                res = integrate(f, lo, hi, tol=tol)
                assert res.converged
                assert res.err_estimate <= tol


class TestErrorHonesty:
    def test_true_error_within_ten_times_estimate(self):
        checks = []
        for _, f, lo, hi, exact in CORPUS:
            for tol in (1e-6, 1e-10):
                res = integrate(f, lo, hi, tol=tol)
                true_err = abs(res.value - exact)
                floor = 5e-15 * max(1.0, abs(exact))
                checks.append(true_err <= max(10.0 * res.err_estimate, floor))
        assert all(checks), f"honesty failures: {checks.count(False)}/{len(checks)}"

    def test_refinement_never_increases_true_error(self):
        for _, f, lo, hi, exact in CORPUS:
            errs = [
                abs(integrate(f, lo, hi, tol=tol).value - exact)
                for tol in (1e-4, 1e-6, 1e-8, 1e-10)
            ]
            slack = 1e-15 * max(1.0, abs(exact))
            for coarse, fine in zip(errs, errs[1:]):
                assert fine <= coarse + slack


class TestLinearity:
    @given(
        a=st.floats(-3.0, 3.0),
        b=st.floats(-3.0, 3.0),
        p=st.floats(-2.0, 2.0),
        w=st.floats(0.5, 5.0),
    )
    @settings(max_examples=30, deadline=None)
    def test_linear_combination_of_smooth_pairs(self, a, b, p, w):
        f = lambda t: p + t * t
        g = lambda t: math.cos(w * t)
        combined = integrate(lambda t: a * f(t) + b * g(t), 0.0, 2.0, tol=1e-11)
        parts_f = integrate(f, 0.0, 2.0, tol=1e-11)
        parts_g = integrate(g, 0.0, 2.0, tol=1e-11)
        budget = (
            combined.err_estimate
            + abs(a) * parts_f.err_estimate
            + abs(b) * parts_g.err_estimate
            + 1e-13
        )
        assert abs(combined.value - (a * parts_f.value + b * parts_g.value)) <= budget


class TestFailureModes:
    def test_nan_reports_offending_abscissa(self):
        def f(t):
            return math.nan if t > 0.5 else 1.0

        with pytest.raises(IntegrandError) as info:
            integrate(f, 0.0, 1.0)
        assert 0.5 < info.value.abscissa <= 1.0

    def test_infinity_reports_offending_abscissa(self):
        def f(t):
            return math.inf if t > 0.7 else 1.0

        with pytest.raises(IntegrandError) as info:
            integrate(f, 0.0, 1.0)
        assert 0.7 < info.value.abscissa <= 1.0

    def test_budget_exhaustion_degrades_gracefully(self):
        c = 1.0 / math.pi
        exact = ((1.0 - c) ** 0.05 + c**0.05) / 0.05

        def f(t):
            return 0.0 if t == c else abs(t - c) ** -0.95

        starved = integrate(f, 0.0, 1.0, tol=1e-10, max_panels=60)
        assert not starved.converged
        assert starved.err_estimate > 1e-10
        assert math.isfinite(starved.value)
        funded = integrate(f, 0.0, 1.0, tol=1e-10, max_panels=20000)
        assert abs(funded.value - exact) < abs(starved.value - exact)
        assert funded.err_estimate < starved.err_estimate

    def test_rejects_bad_domains_and_tolerances(self):
        with pytest.raises(ValueError):
            integrate(lambda t: 1.0, 1.0, 0.0)
        with pytest.raises(ValueError):
            integrate(lambda t: 1.0, 0.0, math.inf)
        with pytest.raises(ValueError):
            integrate(lambda t: 1.0, 0.0, 1.0, tol=0.0)


class TestSemiInfinite:
    def test_exponential_unit_mass(self):
        res = integrate_semi_infinite(lambda t: math.exp(-t), tol=1e-13)
        assert abs(res.value - 1.0) <= 1e-12

    def test_rational_cube_tail(self):
        res = integrate_semi_infinite(lambda u: 2.0 / (1.0 + u) ** 3, tol=1e-13)
        assert abs(res.value - 1.0) <= 1e-12

    def test_second_moment_of_exponential(self):
        res = integrate_semi_infinite(lambda s: s * s * math.exp(-s), tol=1e-13)
        assert abs(res.value - 2.0) <= 1e-12

    def test_lower_offset_shifts_the_domain(self):
        res = integrate_semi_infinite(lambda t: math.exp(-t), tol=1e-13, lower=5.0)
        assert abs(res.value - math.exp(-5.0)) <= 1e-12


class TestComplexFrontEnd:
    def test_full_period_cancels(self):
        res = integrate_complex(
            lambda t: cmath.exp(complex(0.0, 2.0 * math.pi * t)), (0.0, 1.0), tol=1e-13
        )
        assert abs(res.value) <= 1e-12

    def test_gamma_value_through_semi_infinite_map(self):
        def f(t: float) -> complex:
            # t^{-i} e^{-t} = e^{-t} (cos(log t) - i sin(log t))
            return cmath.exp(complex(-t, -math.log(t)))

        res = integrate_complex(f, (0.0, math.inf), tol=1e-9)
        assert res.converged
        assert abs(res.value - GAMMA_ONE_MINUS_I) <= 1e-8

    def test_oscillatory_kernel_identity(self):
        def f(u: float) -> complex:
            return 2.0 * cmath.exp(complex(0.0, -math.log(u))) / (1.0 + u) ** 3

        res = integrate_complex(f, (0.0, math.inf), tol=1e-9)
        target = complex(1.0, 1.0) * math.pi / math.sinh(math.pi)
        assert abs(res.value - target) <= 1e-8

    def test_error_is_max_of_parts_and_evaluations_add(self):
        res = integrate_complex(
            lambda t: complex(math.exp(-t * t), math.sin(t)), (0.0, 2.0), tol=1e-11
        )
        re = integrate(lambda t: math.exp(-t * t), 0.0, 2.0, tol=1e-11)
        im = integrate(math.sin, 0.0, 2.0, tol=1e-11)
        assert res.err_estimate == max(re.err_estimate, im.err_estimate)
        assert res.evaluations == re.evaluations + im.evaluations


class TestDeterminism:
    def test_identical_calls_produce_identical_results(self):
        first = integrate(lambda t: math.cos(7.0 * t) / (1.0 + t), 0.0, 4.0, tol=1e-11)
        second = integrate(lambda t: math.cos(7.0 * t) / (1.0 + t), 0.0, 4.0, tol=1e-11)
        assert isinstance(first, QuadResult)
        assert first == second
