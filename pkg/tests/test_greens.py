import math

import numpy as np
import pytest

from helpers import random_invertible_spec, random_symmetrisable_spec
from tritoep import (
    DimensionMismatch,
    IndexOutOfRange,
    NearSingularPivot,
    NotInGappedRegime,
    SingularMatrix,
    SymmetrisedForm,
    apply_inverse,
    apply_matvec,
    build_kernel,
    decay_bound,
    decay_envelope,
    hyperbolic_inverse_entry,
    inverse_dense,
    inverse_entry,
    make_spec,
    symmetrise,
    thomas_solve,
)
from tritoep.oracle import dense_from_spec, dense_inverse, lu_solve


class TestBuildKernel:
    def test_invertible_example(self):
        k = build_kernel(make_spec(1, 2, 1, 2))
        assert k.invertible is True
        assert k.wronskian.to_float() == pytest.approx(3.0, rel=1e-13)
        assert math.isnan(k.wronskian_residual) is False
        assert k.wronskian_residual <= 1e-9

    def test_singular_detected(self):
        k = build_kernel(make_spec(1, 0, 1, 3))
        assert k.invertible is False
        assert abs(k.wronskian.try_float() or 0.0) <= 1e-10

    def test_boundary_sequences(self):
        k = build_kernel(make_spec(1, 5, 1, 1))
        assert k.f_signs[0] == 0.0 and k.f_logs[0] == -math.inf
        assert k.g_signs[2] == 0.0 and k.g_logs[2] == -math.inf
        assert k.f_at(1).to_float() == pytest.approx(1.0)
        assert abs(k.g_at(0).to_float()) == pytest.approx(5.0, rel=1e-13)
        assert k.wronskian.to_float() == pytest.approx(5.0, rel=1e-13)

    def test_entry_ops_raise_on_singular(self):
        k = build_kernel(make_spec(1, 0, 1, 3))
        with pytest.raises(SingularMatrix):
            inverse_entry(k, 1, 1)
        with pytest.raises(SingularMatrix):
            apply_inverse(k, np.zeros(3))


class TestInverseEntry:
    def test_symmetric_2x2(self):
        k = build_kernel(make_spec(1, 2, 1, 2))
        assert inverse_entry(k, 1, 1) == pytest.approx(2 / 3, rel=1e-13)
        assert inverse_entry(k, 1, 2) == pytest.approx(-1 / 3, rel=1e-13)

    def test_scalar(self):
        k = build_kernel(make_spec(1, 5, 1, 1))
        assert inverse_entry(k, 1, 1) == pytest.approx(0.2, rel=1e-13)

    def test_asymmetric_2x2(self):
        k = build_kernel(make_spec(10, 11, 1, 2))
        assert inverse_entry(k, 1, 2) == pytest.approx(-1 / 111, rel=1e-12)
        assert inverse_entry(k, 2, 1) == pytest.approx(-10 / 111, rel=1e-12)

    def test_index_validation(self):
        k = build_kernel(make_spec(1, 3, 1, 4))
        with pytest.raises(IndexOutOfRange):
            inverse_entry(k, 0, 1)
        with pytest.raises(IndexOutOfRange):
            inverse_entry(k, 1, 5)

    def test_dense_materialisation_agrees(self):
        rng = np.random.default_rng(61)
        for _ in range(10):
            spec, kernel = random_invertible_spec(rng, n_max=25)
            full = inverse_dense(kernel)
            for i in (1, spec.n):
                for j in (1, (spec.n + 1) // 2, spec.n):
                    assert full[i - 1, j - 1] == pytest.approx(
                        inverse_entry(kernel, i, j), rel=1e-13, abs=1e-300
                    )


class TestApplyInverse:
    def test_first_column(self):
        k = build_kernel(make_spec(1, 2, 1, 2))
        np.testing.assert_allclose(apply_inverse(k, [1.0, 0.0]), [2 / 3, -1 / 3],
                                   rtol=1e-13)

    def test_scalar(self):
        k = build_kernel(make_spec(1, 5, 1, 1))
        np.testing.assert_allclose(apply_inverse(k, [10.0]), [2.0], rtol=1e-13)

    def test_middle_basis_column_matches_dense(self):
        spec = make_spec(1, 4, 1, 3)
        k = build_kernel(spec)
        got = apply_inverse(k, np.array([0.0, 1.0, 0.0]))
        want = dense_inverse(dense_from_spec(spec))[:, 1]
        np.testing.assert_allclose(got, want, rtol=1e-12, atol=1e-15)

    def test_dimension_mismatch(self):
        k = build_kernel(make_spec(1, 4, 1, 3))
        with pytest.raises(DimensionMismatch):
            apply_inverse(k, np.ones(4))

    def test_matches_entrywise_kernel_sum(self):
        rng = np.random.default_rng(67)
        for _ in range(12):
            spec, kernel = random_invertible_spec(rng, n_max=200, q_span=0.5)
            rhs = rng.standard_normal(spec.n)
            got = apply_inverse(kernel, rhs)
            want = inverse_dense(kernel) @ rhs
            scale = max(float(np.max(np.abs(want))), 1e-300)
            assert np.max(np.abs(got - want)) <= 1e-10 * scale

    def test_deterministic(self):
        spec = make_spec(1.3, 4.0, 0.9, 500)
        k = build_kernel(spec)
        rhs = np.random.default_rng(5).standard_normal(500)
        x1 = apply_inverse(k, rhs)
        x2 = apply_inverse(k, rhs)
        assert np.array_equal(x1, x2)


class TestThomas:
    def test_examples(self):
        np.testing.assert_allclose(
            thomas_solve(make_spec(1, 2, 1, 2), [1.0, 0.0]), [2 / 3, -1 / 3],
            rtol=1e-13,
        )
        np.testing.assert_allclose(
            thomas_solve(make_spec(10, 11, 1, 2), [1.0, 0.0]), [11 / 111, -10 / 111],
            rtol=1e-13,
        )
        np.testing.assert_allclose(
            thomas_solve(make_spec(1, 5, 1, 1), [10.0]), [2.0], rtol=1e-14
        )

    def test_no_symmetrisability_needed(self):
        spec = make_spec(-1.0, 3.0, 2.0, 6)
        rhs = np.arange(1.0, 7.0)
        got = thomas_solve(spec, rhs)
        want = lu_solve(dense_from_spec(spec), rhs)
        np.testing.assert_allclose(got, want, rtol=1e-11)

    def test_zero_pivot_escape(self):
        with pytest.raises(NearSingularPivot):
            thomas_solve(make_spec(1, 0, 1, 2), [1.0, 1.0])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            thomas_solve(make_spec(1, 3, 1, 3), [1.0])

    def test_agrees_with_apply_inverse_large(self):
        spec = make_spec(1.0, 2.5, 1.0, 10_000)
        rhs = np.random.default_rng(71).standard_normal(10_000)
        xk = apply_inverse(build_kernel(spec), rhs)
        xt = thomas_solve(spec, rhs)
        scale = float(np.max(np.abs(xt)))
        assert np.max(np.abs(xk - xt)) <= 1e-9 * scale

    def test_agrees_with_apply_inverse_random_gapped(self):
        rng = np.random.default_rng(151)
        for n in (10, 100, 1000, 10_000):
            sign = -1.0 if rng.random() < 0.5 else 1.0
            a = sign * math.exp(rng.uniform(-0.3, 0.3))
            c = sign * math.exp(rng.uniform(-0.3, 0.3))
            s = math.sqrt(a * c)
            spec = make_spec(a, 2.0 * s * rng.uniform(1.05, 2.5), c, n)
            rhs = rng.standard_normal(n)
            xk = apply_inverse(build_kernel(spec), rhs)
            xt = thomas_solve(spec, rhs)
            scale = float(np.max(np.abs(xt)))
            assert np.max(np.abs(xk - xt)) <= 1e-9 * scale


class TestDecay:
    def test_bound_values(self):
        spec = make_spec(1, 2.5, 1, 10)
        assert decay_bound(spec, 1, 4) == pytest.approx(1 / 6, rel=1e-13)
        assert decay_bound(spec, 3, 3) == pytest.approx(4 / 3, rel=1e-13)
        env = decay_envelope(spec)
        assert env.eta == pytest.approx(2.0, rel=1e-14)
        assert env.prefactor == pytest.approx(4 / 3, rel=1e-13)

    def test_regime_gate(self):
        with pytest.raises(NotInGappedRegime):
            decay_bound(make_spec(1, 2, 1, 3), 1, 1)
        with pytest.raises(NotInGappedRegime):
            decay_envelope(make_spec(1, 0.5, 1, 3))

    def test_dominates_inverse_entries(self):
        rng = np.random.default_rng(73)
        for _ in range(15):
            spec = random_symmetrisable_spec(rng, n_max=120, x_range=(1.05, 3.0))
            kernel = build_kernel(spec)
            assert kernel.invertible
            inv = inverse_dense(kernel)
            n = spec.n
            idx = np.arange(1, n + 1)
            form = symmetrise(spec)
            gamma = math.acosh(form.x)
            log_env = (
                math.log(2.0 / form.s)
                - math.log(2.0 * math.sinh(gamma))
                + np.subtract.outer(idx, idx) * math.log(abs(form.q))
                - np.abs(np.subtract.outer(idx, idx)) * gamma
            )
            bound = np.exp(log_env)
            assert np.all(np.abs(inv) <= bound * (1.0 + 1e-12))
            # spot-check the scalar op against the vectorised envelope
            assert decay_bound(spec, 1, min(3, n)) == pytest.approx(
                float(bound[0, min(3, n) - 1]), rel=1e-12
            )


class TestHyperbolicEntries:
    def test_2x2_values(self):
        form = SymmetrisedForm(s=1.0, q=1.0, x=1.25, n=2)
        assert hyperbolic_inverse_entry(form, 1, 1) == pytest.approx(10 / 21, rel=1e-12)
        assert hyperbolic_inverse_entry(form, 1, 2) == pytest.approx(-4 / 21, rel=1e-12)
        assert hyperbolic_inverse_entry(form, 2, 1) == pytest.approx(-4 / 21, rel=1e-12)

    def test_scalar_reciprocal(self):
        form = symmetrise(make_spec(1, 7, 1, 1))
        assert hyperbolic_inverse_entry(form, 1, 1) == pytest.approx(1 / 7, rel=1e-13)

    def test_regime_gate(self):
        with pytest.raises(NotInGappedRegime):
            hyperbolic_inverse_entry(SymmetrisedForm(1.0, 1.0, 1.0, 3), 1, 1)

    def test_agrees_with_kernel_when_symmetric(self):
        rng = np.random.default_rng(79)
        for _ in range(10):
            n = int(rng.integers(1, 60))
            x = float(rng.uniform(1.01, 3.0))
            spec = make_spec(1.0, 2.0 * x, 1.0, n)
            kernel = build_kernel(spec)
            form = symmetrise(spec)
            for i in (1, (n + 1) // 2, n):
                for j in (1, n):
                    assert hyperbolic_inverse_entry(form, i, j) == pytest.approx(
                        inverse_entry(kernel, i, j), rel=1e-11
                    )


def test_wronskian_constancy_sampled():
    # oscillatory x at mid-gap angles, hyperbolic x in (1, 3), n up to 500
    rng = np.random.default_rng(83)
    for _ in range(12):
        n = int(rng.integers(2, 501))
        if rng.random() < 0.5:
            theta = rng.uniform(0.45, math.pi - 0.45)
            k_star = round(theta * (n + 1) / math.pi)
            theta = (min(max(k_star, 1), n) + 0.5) * math.pi / (n + 1)
            x = math.cos(theta)
        else:
            x = rng.uniform(1.001, 3.0)
        spec = make_spec(1.0, 2.0 * x, 1.0, n)
        kernel = build_kernel(spec)
        if not kernel.invertible:
            continue
        assert kernel.wronskian_residual <= 1e-9


def test_inverse_columns_satisfy_system():
    # absolute residual against e_j, so the samples must be comfortably
    # invertible and keep q^n moderate, or the Euclidean inverse scale
    # alone eats the budget; skewed q is covered by the relative tests
    rng = np.random.default_rng(89)
    for _ in range(15):
        spec, kernel = random_invertible_spec(rng, n_max=100, q_span=0.08,
                                              margin=1e-3)
        n = spec.n
        for j in (1, (n + 1) // 2, n):
            col = np.array([inverse_entry(kernel, i, j) for i in range(1, n + 1)])
            e_j = np.zeros(n)
            e_j[j - 1] = 1.0
            resid = np.max(np.abs(apply_matvec(spec, col) - e_j))
            assert resid <= 1e-9


def test_weighted_symmetry_of_inverse():
    rng = np.random.default_rng(97)
    for _ in range(15):
        spec, kernel = random_invertible_spec(rng, n_max=60, q_span=0.4)
        q2 = kernel.q * kernel.q
        n = spec.n
        for i in (1, (n + 1) // 2, n):
            for j in (1, (2 * n) // 3 + 1, n):
                lhs = inverse_entry(kernel, i, j)
                rhs = q2 ** (i - j) * inverse_entry(kernel, j, i)
                assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-280)


def test_kernel_inverse_matches_dense_oracle():
    rng = np.random.default_rng(101)
    for _ in range(20):
        spec, kernel = random_invertible_spec(rng, n_max=50, q_span=0.6)
        got = inverse_dense(kernel)
        want = dense_inverse(dense_from_spec(spec))
        scale = float(np.max(np.abs(want)))
        assert np.max(np.abs(got - want)) <= 1e-9 * scale
