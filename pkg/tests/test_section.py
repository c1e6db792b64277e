import math

import mpmath
import numpy as np
import pytest

from gramdisc.errors import DomainError, LengthMismatchError
from gramdisc.gram import gram_point, z0
from gramdisc.section import (
    ParameterVector,
    SectionContext,
    afe_terms,
    hardy_z,
    lerp,
    rs_remainder,
    section_eval,
    spira_terms,
    term_table,
    z_accuracy_floor,
    z_afe,
    z_prime_afe,
    z_section,
    z_section_dt,
    z_section_dtt,
)
from gramdisc.special import TWO_PI, theta

ONES = ParameterVector.ones()
ZEROS = ParameterVector.zeros()


def brute_section(t, a_dense):
    th = theta(t)
    total = mpmath.cos(th)
    for k, a in enumerate(a_dense, start=1):
        total += a / mpmath.sqrt(k + 1) * mpmath.cos(th - mpmath.log(k + 1) * t)
    return float(total)


def random_sparse(rng, N, size=6, default=0.0):
    ks = rng.choice(np.arange(1, N + 1), size=min(size, N), replace=False)
    return ParameterVector(entries={int(k): float(rng.normal()) for k in ks}, default=default)


class TestParameterVector:
    def test_dense_and_sparse_agree(self):
        N = 40
        rng = np.random.default_rng(1)
        sp = random_sparse(rng, N, default=0.3)
        de = ParameterVector(sp.dense(N))
        ctx = SectionContext.build(N)
        for t in (50.0, 80.5):
            assert z_section(t, sp, ctx) == pytest.approx(z_section(t, de, ctx), abs=1e-13)

    def test_validation(self):
        with pytest.raises(ValueError):
            ParameterVector([1.0, math.nan])
        with pytest.raises(ValueError):
            ParameterVector(entries={0: 1.0})
        with pytest.raises(ValueError):
            ParameterVector([])
        with pytest.raises(LengthMismatchError):
            ParameterVector(entries={5: 1.0}, length=3)
        with pytest.raises(ValueError):
            ParameterVector([1.0], entries={1: 1.0})

    def test_dot_and_scaled(self):
        vec = np.arange(1.0, 11.0)
        a = ParameterVector(entries={2: 5.0}, default=1.0)
        assert a.dot(vec) == pytest.approx(vec.sum() + 4.0 * 2.0)
        assert a.scaled(2.0).dot(vec) == pytest.approx(2 * a.dot(vec))
        assert ParameterVector(a.dense(10)).dot(vec) == pytest.approx(a.dot(vec))

    def test_equality_and_spec(self):
        assert ParameterVector.ones() == ParameterVector.constant(1.0)
        assert ParameterVector.ones() != ParameterVector.zeros()
        assert hash(ParameterVector.ones()) == hash(ParameterVector.constant(1))
        assert ZEROS.is_zero() and not ONES.is_zero()
        assert ParameterVector(entries={3: 0.0}).is_zero()
        spec = ParameterVector(entries={4: 2.0}, default=0.5).to_spec()
        assert spec == {"kind": "sparse", "default": 0.5, "entries": {"4": 2.0}}

    def test_lerp_sparse_endpoints(self):
        a = ParameterVector(entries={1: 1.0}, default=0.0)
        b = ParameterVector.ones()
        assert lerp(a, b, 0.0) == ParameterVector(entries={1: 1.0}, default=0.0)
        mid = lerp(a, b, 0.5)
        assert mid.is_sparse
        assert mid.dense(4).tolist() == [1.0, 0.5, 0.5, 0.5]

    def test_lerp_dense(self):
        a = ParameterVector([0.0, 2.0])
        b = ParameterVector.ones()
        assert lerp(a, b, 0.25, 3).dense().tolist() == [0.25, 1.75, 0.25]


class TestSection:
    def test_zero_vector_is_core(self):
        ctx = SectionContext.build(30)
        for t in (20.0, 55.5, 61.0):
            assert z_section(t, ZEROS, ctx) == z0(t)

    def test_matches_brute_force(self):
        N = 25
        ctx = SectionContext.build(N)
        rng = np.random.default_rng(7)
        a = rng.normal(size=N)
        with mpmath.workdps(30):
            ref = brute_section(60.0, a)
        assert z_section(60.0, ParameterVector(a), ctx) == pytest.approx(ref, abs=1e-13)

    def test_linearity(self):
        N = 60
        ctx = SectionContext.build(N)
        rng = np.random.default_rng(3)
        a = rng.normal(size=N)
        b = rng.normal(size=N)
        for alpha, beta in ((0.3, 0.5), (2.0, -1.5), (-0.7, 0.0)):
            t = 130.0
            lhs = z_section(t, ParameterVector(alpha * a + beta * b), ctx)
            rhs = (alpha * z_section(t, ParameterVector(a), ctx)
                   + beta * z_section(t, ParameterVector(b), ctx)
                   + (1 - alpha - beta) * z0(t))
            assert lhs == pytest.approx(rhs, abs=1e-12)

    def test_errors(self):
        ctx = SectionContext.build(5)
        with pytest.raises(DomainError):
            z_section(TWO_PI, ONES, ctx)
        with pytest.raises(LengthMismatchError):
            z_section(50.0, ParameterVector(np.ones(6)), ctx)
        with pytest.raises(LengthMismatchError):
            z_section(50.0, ParameterVector.ones(length=6), ctx)

    def test_short_dense_vector_allowed(self):
        ctx = SectionContext.build(10)
        short = ParameterVector([1.0, 1.0])
        padded = ParameterVector([1.0, 1.0] + [0.0] * 8)
        assert z_section(40.0, short, ctx) == pytest.approx(z_section(40.0, padded, ctx), abs=1e-15)

    def test_context_tables(self):
        ctx = SectionContext.build(100)
        assert ctx.logs[0] == math.log(2)
        assert ctx.inv_sqrts[9] == 1 / math.sqrt(11)
        assert not ctx.logs.flags.writeable
        assert SectionContext.for_t(201.0).N == 100
        assert spira_terms(201.0) == 100
        assert afe_terms(TWO_PI * 9.5) == 3

    @pytest.mark.parametrize("t", [500.0, 1777.3])
    def test_first_derivative_fd(self, t):
        ctx = SectionContext.for_t(t)
        rng = np.random.default_rng(11)
        a = ParameterVector(0.3 * rng.normal(size=ctx.N))
        h = 1e-5
        fd = (z_section(t + h, a, ctx) - z_section(t - h, a, ctx)) / (2 * h)
        assert z_section_dt(t, a, ctx) == pytest.approx(fd, rel=1e-6)

    @pytest.mark.parametrize("t", [500.0, 1777.3])
    def test_second_derivative_fd(self, t):
        ctx = SectionContext.for_t(t)
        rng = np.random.default_rng(12)
        a = ParameterVector(0.3 * rng.normal(size=ctx.N))
        h = 1e-5
        fd = (z_section_dt(t + h, a, ctx) - z_section_dt(t - h, a, ctx)) / (2 * h)
        assert z_section_dtt(t, a, ctx) == pytest.approx(fd, rel=1e-4)

    def test_truncated_derivative_at_gram_points(self):
        for n in (10, 90, 126):
            g = gram_point(n).t
            ctx = SectionContext.for_t(g)
            assert abs(z_section_dt(g, ZEROS, ctx, "truncated")) <= 1e-10
            lg = math.log(g / TWO_PI)
            expected = (-1) ** (n + 1) * 0.25 * lg * lg
            assert z_section_dtt(g, ZEROS, ctx, "truncated") == pytest.approx(expected, rel=1e-10)

    def test_single_pass_matches_wrappers(self):
        t = 321.0
        ctx = SectionContext.for_t(t)
        v, d1, d2 = section_eval(t, ONES, ctx)
        assert v == z_section(t, ONES, ctx)
        assert d1 == z_section_dt(t, ONES, ctx)
        assert d2 == z_section_dtt(t, ONES, ctx)

    def test_g90_sign(self):
        g = gram_point(90).t
        assert z_section(g, ONES, SectionContext.for_t(g)) > 0

    def test_compensated_large_section(self):
        t = 2.1e5
        ctx = SectionContext.for_t(t)
        assert ctx.compensated
        v = z_section(t, ONES, ctx)
        assert abs(v - z_afe(t, 5)) <= 5 * t**-0.25


class TestAFE:
    @pytest.mark.parametrize("t", [1e2, 10**2.5, 1e3, 10**3.5, 1e4, 10**4.5, 1e5])
    def test_spira_gap(self, t):
        ctx = SectionContext.for_t(t)
        assert abs(z_afe(t) - z_section(t, ONES, ctx)) <= 5 * t**-0.25

    def test_derivative_fd(self):
        t, h = 1e4, 1e-5
        fd = (z_afe(t + h) - z_afe(t - h)) / (2 * h)
        assert z_prime_afe(t) == pytest.approx(fd, rel=1e-6)
        fd5 = (z_afe(t + h, 5) - z_afe(t - h, 5)) / (2 * h)
        assert z_prime_afe(t, 5) == pytest.approx(fd5, rel=1e-6)

    def test_rs_remainder_derivative_fd(self):
        for t in (200.0, 3456.7):
            h = 1e-6 * t
            fd = (rs_remainder(t + h)[0] - rs_remainder(t - h)[0]) / (2 * h)
            assert rs_remainder(t)[1] == pytest.approx(fd, rel=1e-5, abs=1e-12)

    @pytest.mark.parametrize("t", [50.0, 100.0, 1000.0, 5000.5, 1e5])
    def test_hardy_z_vs_mpmath(self, t):
        with mpmath.workdps(25):
            ref = float(mpmath.siegelz(t))
            dref = float(mpmath.siegelz(t, derivative=1))
        z, zp = hardy_z(t)
        assert abs(z - ref) <= z_accuracy_floor(t)
        assert zp == pytest.approx(dref, abs=1e-6 * max(1.0, abs(dref)))

    def test_remainder_terms_bounds(self):
        with pytest.raises(ValueError):
            rs_remainder(100.0, 6)
        assert rs_remainder(100.0, 0) == (0.0, 0.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            z_afe(1.0)
        with pytest.raises(DomainError):
            z_prime_afe(TWO_PI)
        with pytest.raises(DomainError):
            hardy_z(TWO_PI)


class TestTermTable:
    def test_afe_identity(self):
        for n in (126, 1000, 730119):
            g = gram_point(n).t
            m = afe_terms(g)
            rows = term_table(n, m - 1)
            total = 2 * ((-1) ** n + sum(r.A for r in rows))
            assert total == pytest.approx(z_afe(g), abs=1e-9)

    def test_b_sum_tracks_main_sum_derivative(self):
        n = 730119
        g = gram_point(n).t
        rows = term_table(n, afe_terms(g) - 1)
        assert sum(r.B for r in rows) == pytest.approx(z_prime_afe(g), rel=1e-6)

    def test_reference_rows(self):
        rows = term_table(730119, 15)
        assert rows[0].B == pytest.approx(6.86, abs=0.05)
        assert rows[2].sin_val == pytest.approx(0.28, abs=0.01)
        assert [r.k for r in rows] == list(range(1, 16))

    def test_k_max_validation(self):
        with pytest.raises(ValueError):
            term_table(5, 0)
