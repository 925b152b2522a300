from fractions import Fraction
from math import pi

import numpy as np
import pytest

from cpsigma.geometry import (
    coincidence_check,
    expected_action,
    gauss_bonnet,
    gauss_curvature,
    immersion,
    inner,
    kahler_angle,
    kahler_closed_form,
    metric_coefficient,
    metric_density,
    radius,
    sample_surface,
    second_form,
    total_action,
)
from cpsigma.model import ModelInstance
from cpsigma.rational import RF_ONE, RF_X, RF_Y

ONE_PLUS_XY = RF_ONE + RF_X * RF_Y


class TestImmersion:
    def test_invariants(self):
        for n in (1, 2, 3):
            inst = ModelInstance(n)
            for k in range(n + 1):
                x = immersion(inst, k)
                x.check_invariants()

    def test_level_out_of_range(self):
        with pytest.raises(ValueError):
            immersion(ModelInstance(2), 3)

    def test_inner_product_convention(self):
        # (X, X) = -tr(X^2)/2 on an anti-Hermitian matrix is the squared
        # Euclidean norm of its basis coordinates
        inst = ModelInstance(2)
        x = immersion(inst, 1).mat
        val = inner(x, x)
        assert val.is_constant()
        mat = x.semantic_numeric(0.7 - 0.2j)
        assert np.isclose(-np.trace(mat @ mat).real / 2, float(val.as_fraction()))


class TestRadius:
    def test_trace_value_closed_form(self):
        # independent oracle: R_k^2 = (1 + 4k - (1+2k)^2/(1+2s)) / 2
        for n in range(1, 6):
            inst = ModelInstance(n)
            for k in range(n + 1):
                expected = Fraction(
                    1 + 4 * k - Fraction((1 + 2 * k) ** 2, 1 + n), 2
                )
                assert radius(inst, k).radius_squared == expected, (n, k)

    def test_spin_half_spheres(self):
        inst = ModelInstance(1)
        assert radius(inst, 0).radius_squared == Fraction(1, 4)
        assert radius(inst, 1).radius_squared == Fraction(1, 4)

    def test_mirror_symmetry(self):
        for n in (2, 4, 5):
            inst = ModelInstance(n)
            for k in range(n + 1):
                assert (
                    radius(inst, k).radius_squared
                    == radius(inst, n - k).radius_squared
                )

    def test_printed_polynomial_discrepancy(self):
        # the printed polynomial agrees only at special levels
        inst = ModelInstance(2)
        r = radius(inst, 1)
        assert not r.matches
        assert r.radius_squared == Fraction(1)
        assert r.printed_closed_form == Fraction(0)

    def test_printed_polynomial_disagrees_at_k0_too(self):
        r = radius(ModelInstance(2), 0)
        assert r.radius_squared == Fraction(1, 3)
        assert r.printed_closed_form == Fraction(0)
        assert not r.matches


class TestMetric:
    def test_density_closed_form(self):
        for n in (1, 2, 3):
            inst = ModelInstance(n)
            for k in range(n + 1):
                coeff = metric_coefficient(inst, k)
                assert coeff == 2 * (n * k + inst.s - k * k)
                assert metric_density(inst, k) == coeff / ONE_PLUS_XY ** 2

    def test_density_positive_on_slice(self):
        d = metric_density(ModelInstance(3), 2)
        for u in (0.0, 0.5, 2.0):
            assert d.eval_numeric(u).real > 0


class TestCurvature:
    def test_closed_form(self):
        for n in range(1, 6):
            inst = ModelInstance(n)
            for k in range(n + 1):
                expected = Fraction(2) / (n * k + inst.s - k * k)
                assert gauss_curvature(inst, k) == expected, (n, k)

    def test_round_sphere_consistency(self):
        # constant curvature K and radius match K = 1/R^2 only at the
        # holomorphic ends; interior levels are spheres of smaller radius
        inst = ModelInstance(1)
        assert gauss_curvature(inst, 0) == 4
        assert radius(inst, 0).radius_squared == Fraction(1, 4)


class TestKahler:
    def test_matches_closed_form(self):
        for n in range(1, 6):
            inst = ModelInstance(n)
            for k in range(n + 1):
                assert kahler_angle(inst, k) == kahler_closed_form(inst, k)

    def test_holomorphic_end_values(self):
        inst = ModelInstance(3)
        assert kahler_angle(inst, 0) == 1        # holomorphic
        assert kahler_angle(inst, 3) == -1       # antiholomorphic

    def test_middle_level_lagrangian(self):
        # even N: the middle level has cos(theta) = 0
        assert kahler_angle(ModelInstance(4), 2) == 0


class TestSecondForm:
    def test_mixed_coefficient_antihermitian_traceless(self):
        for n in (1, 2):
            inst = ModelInstance(n)
            for k in range(n + 1):
                sf = second_form(inst, k)
                assert sf.coeff_mixed.trace().is_zero()
                assert sf.coeff_mixed.adjoint() == -sf.coeff_mixed

    def test_mirror_pair(self):
        for n in (1, 2):
            inst = ModelInstance(n)
            for k in range(n + 1):
                sf = second_form(inst, k)
                assert sf.coeff_minus == -sf.coeff_plus.adjoint()


class TestCoincidence:
    def test_spin_half_immersions_coincide(self):
        assert coincidence_check(ModelInstance(1)) == [(0, 1)]

    def test_higher_levels_distinct(self):
        for n in (2, 3, 4):
            assert coincidence_check(ModelInstance(n)) == []


class TestQuadratures:
    def test_total_action(self):
        for n in (1, 2, 3):
            inst = ModelInstance(n)
            for k in range(n + 1):
                value = total_action(inst, k)
                expected = expected_action(inst, k)
                assert expected == pytest.approx(
                    pi * float(metric_coefficient(inst, k))
                )
                assert abs(value - expected) <= 1e-6 * expected

    def test_gauss_bonnet_gives_two(self):
        for n in (1, 2, 3):
            inst = ModelInstance(n)
            for k in range(n + 1):
                assert abs(gauss_bonnet(inst, k) - 2.0) <= 1e-6


class TestSurfaceSamples:
    def test_shape_and_norms(self):
        inst = ModelInstance(2)
        out = sample_surface(inst, 1, 5, 2.0)
        assert len(out.samples) == 25
        r2 = float(out.radius_squared)
        for s in out.samples:
            assert len(s.coords) == 8  # dim(su(3))
            norm2 = sum(c * c for c in s.coords)
            assert abs(norm2 - r2) <= 1e-10 * r2
            assert s.metric_density > 0

    def test_deterministic(self):
        inst = ModelInstance(1)
        a = sample_surface(inst, 0, 4, 1.5)
        b = sample_surface(inst, 0, 4, 1.5)
        assert a.samples == b.samples

    def test_validation(self):
        inst = ModelInstance(1)
        with pytest.raises(ValueError):
            sample_surface(inst, 0, 1, 1.0)
        with pytest.raises(ValueError):
            sample_surface(inst, 0, 3, 0.0)
