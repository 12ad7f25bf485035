"""Catalog consistency tests.

Everything here cross-checks the registry against itself and against
the kernels: closed forms vs quadrature, closed-form derivatives vs a
central difference of the closed-form solution, removable-singularity
values, anchor bookkeeping, and the validity windows of the helpers.
"""

import math

import pytest

from paramint import (
    EndpointKind,
    ParameterDomainError,
    QuadStatus,
    eval_direct,
    integrate_improper,
)
from paramint import catalog

ALL_IDS = ["gauss", "ex1", "ex2", "ex3_beta", "ex3_alpha", "ex4"]


def interior_grid(entry) -> list[float]:
    pd = entry.parametric.param_domain
    return [a for a in entry.verification_grid if pd.is_interior(a)]


class TestRegistry:
    def test_ids_and_order(self):
        assert [e.id for e in catalog.entries()] == ALL_IDS

    def test_get_roundtrip(self):
        for entry_id in ALL_IDS:
            assert catalog.get(entry_id).id == entry_id

    def test_unknown_id(self):
        with pytest.raises(catalog.UnknownEntryError) as info:
            catalog.get("nope")
        assert isinstance(info.value, KeyError)
        assert info.value.entry_id == "nope"
        for entry_id in ALL_IDS:
            assert entry_id in str(info.value)

    def test_entries_returns_a_copy(self):
        listing = catalog.entries()
        listing.clear()
        assert [e.id for e in catalog.entries()] == ALL_IDS

    def test_grids_inside_parameter_domains(self):
        for entry in catalog.entries():
            pd = entry.parametric.param_domain
            for a in entry.verification_grid:
                assert pd.closure_contains(a)

    def test_anchors_consistent_with_closed_forms(self):
        for entry in catalog.entries():
            P = entry.parametric
            if P.anchor is None or P.solution_closed is None:
                continue
            assert abs(P.solution_closed(P.anchor.alpha0) - P.anchor.value0) <= 1e-12

    def test_metadata_shape(self):
        meta = catalog.entry_metadata(catalog.get("ex1"))
        assert meta["id"] == "ex1"
        assert set(meta["param_domain"]) == {"lo", "hi", "lo_open", "hi_open"}
        assert meta["anchor"] == {"alpha0": 0.0, "value0": 0.0}
        assert meta["has_rhs_closed"] is True
        assert meta["has_solution_closed"] is True
        assert meta["verification_grid"] == [0.25, 1.0, 4.0]


class TestRemovableSingularities:
    def test_ex1_at_origin(self):
        f = catalog.get("ex1").parametric.integrand
        for a in (0.25, 1.0, 4.0):
            assert f(0.0, a) == a

    def test_ex3_beta_at_origin(self):
        f = catalog.get("ex3_beta").parametric.integrand
        for b in (0.0, 0.5, 2.0):
            assert f(0.0, b) == b

    def test_ex3_alpha_at_origin(self):
        f = catalog.get("ex3_alpha").parametric.integrand
        for a in (0.0, 1.0, 2.0):
            assert f(0.0, a) == 1.0


class TestClosedFormConsistency:
    def test_solution_derivative_matches_rhs(self):
        # central difference of the closed-form solution vs the
        # closed-form derivative, on interior grid points
        h = 1e-6
        for entry_id in ("ex1", "ex2", "ex3_beta", "ex4"):
            entry = catalog.get(entry_id)
            sol = entry.parametric.solution_closed
            for a in interior_grid(entry):
                try:
                    rhs = catalog.rhs_closed_form(entry_id, a)
                except ParameterDomainError:
                    continue  # grid point outside the derivative's window
                fd = (sol(a + h) - sol(a - h)) / (2.0 * h)
                assert abs(fd - rhs) < 1e-6, (entry_id, a)

    def test_two_parameterizations_agree_at_one(self):
        assert catalog.closed_form("ex3_alpha", 1.0) == catalog.closed_form(
            "ex3_beta", 1.0
        )

    def test_gauss_closed_form_vs_quadrature(self):
        from paramint import DomainSpec

        res = integrate_improper(
            lambda x: math.exp(-x * x), DomainSpec.semi_infinite(0.0)
        )
        assert abs(res.value - catalog.closed_form("gauss", 1.0)) <= 1e-10

    def test_direct_quadrature_on_every_grid_point(self):
        for entry in catalog.entries():
            P = entry.parametric
            for a in entry.verification_grid:
                res = eval_direct(P, a)
                closed = P.solution_closed(a)
                assert abs(res.value - closed) < 1e-5, (entry.id, a)

    def test_closed_form_domain_checked(self):
        with pytest.raises(ParameterDomainError):
            catalog.closed_form("ex2", 0.5)
        with pytest.raises(ParameterDomainError):
            catalog.closed_form("gauss", 0.0)
        with pytest.raises(ParameterDomainError):
            catalog.closed_form("ex4", 1.2)


class TestRhsValidityWindows:
    def test_values(self):
        assert abs(catalog.rhs_closed_form("ex1", 1.0) - math.pi / 2.0) < 1e-15
        assert abs(catalog.rhs_closed_form("ex2", 2.0) - math.pi) < 1e-15
        assert (
            abs(catalog.rhs_closed_form("ex3_beta", 0.0) - 0.5 * math.sqrt(math.pi))
            < 1e-15
        )
        assert catalog.rhs_closed_form("ex4", 0.0) == 0.0

    def test_windows_enforced(self):
        with pytest.raises(ParameterDomainError):
            catalog.rhs_closed_form("ex1", 0.0)  # singular at the anchor
        with pytest.raises(ParameterDomainError):
            catalog.rhs_closed_form("ex2", 1.0)
        with pytest.raises(ParameterDomainError):
            catalog.rhs_closed_form("ex4", 1.0)

    def test_entries_without_rhs(self):
        with pytest.raises(ValueError):
            catalog.rhs_closed_form("gauss", 1.0)
        with pytest.raises(ValueError):
            catalog.rhs_closed_form("ex3_alpha", 1.0)


class TestSingularityDispatch:
    def test_ex2_lower_endpoint_classification(self):
        P = catalog.get("ex2").parametric
        near = P.domain_for(1.0)
        away = P.domain_for(1.5)
        assert near.lower_kind is EndpointKind.INTEGRABLE_SINGULARITY
        assert away.lower_kind is EndpointKind.REGULAR

    def test_ex4_band_classification(self):
        # at a near 1, log(1 + a sin t) blows up where sin t = -1
        P = catalog.get("ex4").parametric
        assert P.domain_for(1.0).lower_kind is EndpointKind.INTEGRABLE_SINGULARITY
        assert P.domain_for(0.996).lower_kind is EndpointKind.INTEGRABLE_SINGULARITY
        assert P.domain_for(0.99).lower_kind is EndpointKind.REGULAR
        assert P.domain_for(0.5).lower_kind is EndpointKind.REGULAR

    def test_ex2_at_band_edge_still_converges(self):
        res = eval_direct(catalog.get("ex2").parametric, 1.0)
        assert abs(res.value) < 1e-10
        assert res.status is QuadStatus.CONVERGED


class TestStandaloneIdentities:
    def test_inner_sine_integral(self):
        for a in (0.0, 0.6, 0.99):
            exact = math.pi / math.sqrt(1.0 - a * a)
            assert abs(catalog.inner_sine_integral(a) - exact) <= 1e-9

    def test_inner_sine_integral_window(self):
        with pytest.raises(ValueError):
            catalog.inner_sine_integral(1.0)
        with pytest.raises(ValueError):
            catalog.inner_sine_integral(-0.1)

    def test_realpart_cancellation(self):
        for a in (1.1, 2.0, 5.0, 10.0):
            assert abs(catalog.realpart_cancellation_integral(a)) <= 1e-10

    def test_realpart_cancellation_window(self):
        with pytest.raises(ValueError):
            catalog.realpart_cancellation_integral(1.0)
