"""Kernel-level tests for the four quadrature routines.

Expected values fall into three classes: directly assertable facts
(polynomials, classic integrals), formula evaluations, and frozen
literals produced by the independent oracles in ``_oracles.py``
(composite Simpson / mpmath at 30 digits).  The frozen literals are
marked with their oracle in a comment.
"""

import math

import pytest

from paramint import (
    DomainSpec,
    EndpointKind,
    EvaluationError,
    NonIntegrableSingularityError,
    OscillatoryTail,
    QuadConfig,
    QuadResult,
    QuadStatus,
    integrate,
    integrate_finite,
    integrate_improper,
    integrate_oscillatory_improper,
    integrate_singular,
)

# frozen by tests/_oracles.py (mpmath, 30 digits; Simpson agrees to 1e-15)
EXP_COS5_0_1 = -0.510079168817682          # int_0^1 e^x cos(5x) dx
LOG_OVER_CIRCLE = -1.0887930451518011      # int_0^1 ln(x)/sqrt(1-x^2) dx
EXP_LORENTZ = 0.6214496242358134           # int_0^inf e^{-x}/(1+x^2) dx
SIN_LORENTZ = 0.64676112277913012          # int_0^inf sin(x)/(1+x^2) dx

HALF_LINE = DomainSpec.semi_infinite(0.0)
FULL_LINE = DomainSpec(
    -math.inf, math.inf, EndpointKind.INFINITE, EndpointKind.INFINITE
)


def tol_of(cfg: QuadConfig, value: float) -> float:
    return max(cfg.abs_tol, cfg.rel_tol * abs(value))


# ---------------------------------------------------------------------------
# finite regular kernel
# ---------------------------------------------------------------------------

class TestFinite:
    def test_polynomial_near_exact(self):
        res = integrate_finite(lambda x: x * x, DomainSpec.finite(0.0, 1.0))
        assert abs(res.value - 1.0 / 3.0) < 1e-14
        assert res.status is QuadStatus.CONVERGED
        assert res.n_evals > 0

    def test_sine_arch(self):
        res = integrate_finite(math.sin, DomainSpec.finite(0.0, math.pi))
        assert abs(res.value - 2.0) < 1e-12

    def test_oscillatory_smooth_vs_oracle(self):
        res = integrate_finite(
            lambda x: math.exp(x) * math.cos(5.0 * x), DomainSpec.finite(0.0, 1.0)
        )
        assert abs(res.value - EXP_COS5_0_1) < 1e-12
        assert res.status is QuadStatus.CONVERGED

    def test_converged_estimate_meets_request(self):
        cfg = QuadConfig(abs_tol=1e-8, rel_tol=1e-8)
        res = integrate_finite(
            lambda x: math.exp(-x * x), DomainSpec.finite(-3.0, 3.0), cfg
        )
        assert res.status is QuadStatus.CONVERGED
        assert res.abs_err_est <= tol_of(cfg, res.value)

    def test_estimate_honest_on_peaked_integrand(self):
        # narrow Lorentzian forces real subdivision work
        res = integrate_finite(
            lambda x: 1e-4 / (x * x + 1e-8), DomainSpec.finite(-1.0, 1.0)
        )
        exact = 2.0 * math.atan(1e4)
        assert abs(res.value - exact) <= 10.0 * max(res.abs_err_est, 1e-15)

    def test_budget_exhaustion_is_a_status_not_an_error(self):
        cfg = QuadConfig(abs_tol=1e-15, rel_tol=1e-15, max_subdivisions=4)
        res = integrate_finite(
            lambda x: 1.0 / (x * x + 1e-10), DomainSpec.finite(-1.0, 1.0), cfg
        )
        assert res.status is QuadStatus.MAX_DEPTH
        assert math.isfinite(res.value)

    def test_nonfinite_evaluation_names_the_abscissa(self):
        def bad(x: float) -> float:
            if abs(x - 0.3) < 0.05:
                raise ValueError("synthetic blow-up")
            return 1.0

        with pytest.raises(EvaluationError) as info:
            integrate_finite(bad, DomainSpec.finite(0.0, 1.0))
        assert abs(info.value.abscissa - 0.3) < 0.05

    def test_nan_return_is_rejected(self):
        with pytest.raises(EvaluationError):
            integrate_finite(
                lambda x: math.nan if x > 0.5 else 1.0, DomainSpec.finite(0.0, 1.0)
            )

    def test_reversed_bounds_rejected(self):
        with pytest.raises(ValueError):
            DomainSpec.finite(1.0, 0.0)


# ---------------------------------------------------------------------------
# singular-endpoint kernel
# ---------------------------------------------------------------------------

class TestSingular:
    def test_inverse_sqrt(self):
        res = integrate_singular(
            lambda x: 1.0 / math.sqrt(x), DomainSpec.singular(0.0, 1.0, at_lower=True)
        )
        assert abs(res.value - 2.0) < 1e-10

    def test_log_endpoint(self):
        res = integrate_singular(
            math.log, DomainSpec.singular(0.0, 1.0, at_lower=True)
        )
        assert abs(res.value + 1.0) < 1e-10

    def test_upper_endpoint_cube_root(self):
        res = integrate_singular(
            lambda x: (1.0 - x) ** (-1.0 / 3.0),
            DomainSpec.singular(0.0, 1.0, at_upper=True),
        )
        assert abs(res.value - 1.5) < 1e-10

    def test_two_sided_vs_oracle(self):
        res = integrate_singular(
            lambda x: math.log(x) / math.sqrt((1.0 - x) * (1.0 + x)),
            DomainSpec.singular(0.0, 1.0, at_lower=True, at_upper=True),
        )
        assert abs(res.value - LOG_OVER_CIRCLE) < 1e-8
        assert abs(res.value - LOG_OVER_CIRCLE) <= 10.0 * max(res.abs_err_est, 1e-15)

    def test_beta_function_half_half(self):
        res = integrate_singular(
            lambda x: 1.0 / math.sqrt(x * (1.0 - x)),
            DomainSpec.singular(0.0, 1.0, at_lower=True, at_upper=True),
        )
        assert abs(res.value - math.pi) <= 10.0 * max(res.abs_err_est, 1e-12)

    def test_nonintegrable_pole_refused(self):
        with pytest.raises(NonIntegrableSingularityError) as info:
            integrate_singular(
                lambda x: 1.0 / x, DomainSpec.singular(0.0, 1.0, at_lower=True)
            )
        assert info.value.exponent <= -0.999

    def test_smooth_integrand_still_correct(self):
        # declaring a singularity that is not there must not break anything
        res = integrate_singular(
            math.cos, DomainSpec.singular(0.0, 1.0, at_lower=True)
        )
        assert abs(res.value - math.sin(1.0)) < 1e-12

    def test_singular_constructor_needs_a_side(self):
        with pytest.raises(ValueError):
            DomainSpec.singular(0.0, 1.0)


# ---------------------------------------------------------------------------
# improper (infinite-endpoint) kernel
# ---------------------------------------------------------------------------

class TestImproper:
    def test_exponential(self):
        res = integrate_improper(lambda x: math.exp(-x), HALF_LINE)
        assert abs(res.value - 1.0) < 1e-11

    def test_gaussian_half_line(self):
        res = integrate_improper(lambda x: math.exp(-x * x), HALF_LINE)
        assert abs(res.value - 0.5 * math.sqrt(math.pi)) < 1e-11

    def test_full_line_gaussian(self):
        res = integrate_improper(lambda x: math.exp(-x * x), FULL_LINE)
        assert abs(res.value - math.sqrt(math.pi)) < 1e-10

    def test_lower_infinite_by_reflection(self):
        spec = DomainSpec(-math.inf, 0.0, lower_kind=EndpointKind.INFINITE)
        res = integrate_improper(lambda x: math.exp(x), spec)
        assert abs(res.value - 1.0) < 1e-11

    def test_slow_algebraic_tail_vs_oracle(self):
        res = integrate_improper(lambda x: math.exp(-x) / (1.0 + x * x), HALF_LINE)
        assert abs(res.value - EXP_LORENTZ) < 1e-10

    def test_lorentzian_quarter_circle(self):
        res = integrate_improper(lambda x: 1.0 / (1.0 + x * x), HALF_LINE)
        assert abs(res.value - math.pi / 2.0) < 1e-9

    def test_singular_lower_plus_infinite_upper(self):
        # Gamma(1/2): x^{-1/2} e^{-x} on (0, inf)
        spec = DomainSpec.semi_infinite(0.0, singular_lower=True)
        res = integrate_improper(lambda x: math.exp(-x) / math.sqrt(x), spec)
        assert abs(res.value - math.sqrt(math.pi)) < 1e-9

    def test_nonintegrable_tail_has_no_certificate(self):
        # 1/(1+x) diverges; the scan must not claim convergence
        res = integrate_improper(lambda x: 1.0 / (1.0 + x), HALF_LINE)
        assert res.status is not QuadStatus.CONVERGED


# ---------------------------------------------------------------------------
# oscillatory kernel
# ---------------------------------------------------------------------------

def _pi_zeros(k: int) -> float:
    return k * math.pi


class TestOscillatory:
    def test_sinc(self):
        res = integrate_oscillatory_improper(
            lambda x: math.sin(x) / x if x != 0.0 else 1.0,
            DomainSpec.oscillatory(0.0, _pi_zeros),
        )
        assert abs(res.value - math.pi / 2.0) < 1e-9

    def test_sin_lorentz_vs_oracle(self):
        res = integrate_oscillatory_improper(
            lambda x: math.sin(x) / (1.0 + x * x),
            DomainSpec.oscillatory(0.0, _pi_zeros),
        )
        assert abs(res.value - SIN_LORENTZ) < 1e-9

    def test_fresnel_like_square_phase(self):
        res = integrate_oscillatory_improper(
            lambda x: math.sin(x * x) / (x * x) if x != 0.0 else 1.0,
            DomainSpec.oscillatory(0.0, lambda k: math.sqrt(k * math.pi)),
        )
        assert abs(res.value - math.sqrt(2.0 * math.pi) / 2.0) < 1e-8

    def test_slow_sqrt_decay(self):
        res = integrate_oscillatory_improper(
            lambda x: math.sin(x) / math.sqrt(x) if x > 0.0 else 0.0,
            DomainSpec.oscillatory(0.0, _pi_zeros),
        )
        assert abs(res.value - math.sqrt(math.pi / 2.0)) < 1e-8

    def test_non_alternating_tail_falls_back(self):
        # positive integrand: partial sums never alternate, so the
        # accelerator must hand off to the plain improper kernel
        res = integrate_oscillatory_improper(
            lambda x: math.exp(-x) * (2.0 + math.sin(x)),
            DomainSpec.oscillatory(0.0, _pi_zeros),
        )
        assert abs(res.value - 2.5) < 1e-8

    def test_zero_rule_must_increase(self):
        with pytest.raises(ValueError):
            OscillatoryTail(phase_zero_rule=lambda k: 1.0)


# ---------------------------------------------------------------------------
# dispatch and config plumbing
# ---------------------------------------------------------------------------

class TestDispatch:
    def test_finite_route(self):
        spec = DomainSpec.finite(0.0, math.pi)
        assert integrate(math.sin, spec) == integrate_finite(math.sin, spec)

    def test_singular_route(self):
        spec = DomainSpec.singular(0.0, 1.0, at_lower=True)
        res = integrate(lambda x: 1.0 / math.sqrt(x), spec)
        assert abs(res.value - 2.0) < 1e-10

    def test_improper_route(self):
        res = integrate(lambda x: math.exp(-x), HALF_LINE)
        assert abs(res.value - 1.0) < 1e-11

    def test_oscillatory_route(self):
        spec = DomainSpec.oscillatory(0.0, _pi_zeros)
        res = integrate(lambda x: math.sin(x) / x if x else 1.0, spec)
        assert abs(res.value - math.pi / 2.0) < 1e-9

    def test_result_is_a_frozen_record(self):
        res = integrate_finite(math.sin, DomainSpec.finite(0.0, 1.0))
        assert isinstance(res, QuadResult)
        with pytest.raises(AttributeError):
            res.value = 0.0

    def test_config_rejects_nonpositive_tolerances(self):
        with pytest.raises(ValueError):
            QuadConfig(abs_tol=0.0)
        with pytest.raises(ValueError):
            QuadConfig(rel_tol=-1e-10)
        with pytest.raises(ValueError):
            QuadConfig(max_subdivisions=0)

    def test_domain_spec_rejects_bad_interval(self):
        with pytest.raises(ValueError):
            DomainSpec.finite(1.0, 1.0)
        with pytest.raises(ValueError):
            DomainSpec.finite(2.0, 1.0)
        with pytest.raises(ValueError):
            DomainSpec(0.0, math.inf)  # missing INFINITE classification
