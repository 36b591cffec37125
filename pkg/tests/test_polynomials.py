from __future__ import annotations

import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braid_monodromy.polynomials import (
    BivariatePolynomial,
    ComplexPolynomial,
    InterpolationError,
    bp_curve,
    bp_degeneracy_closed_form,
    bp_discriminant_family,
    degeneracy_check_bp,
    degeneracy_check_plane,
    discriminant_in_x,
    parse_family,
    plane_degeneration_at_infinity,
    plane_discriminant_family,
    roots,
    star_curve,
    sylvester_resultant,
)

P = ComplexPolynomial


def close_to(p: ComplexPolynomial, expected, tol=1e-10):
    c = np.asarray(expected, dtype=complex)
    got = np.zeros(max(len(c), len(p.coeffs)), dtype=complex)
    got[: len(p.coeffs)] = p.coeffs
    ref = np.zeros_like(got)
    ref[: len(c)] = c
    return np.max(np.abs(got - ref)) < tol


def proportional(a: ComplexPolynomial, b: ComplexPolynomial, tol=1e-9) -> bool:
    size = max(len(a.coeffs), len(b.coeffs))
    x = np.zeros(size, dtype=complex)
    y = np.zeros(size, dtype=complex)
    x[: len(a.coeffs)] = a.coeffs
    y[: len(b.coeffs)] = b.coeffs
    c = np.vdot(y, x) / np.vdot(y, y)
    return np.max(np.abs(x - c * y)) < tol * np.max(np.abs(x))


class TestPolynomial:
    def test_trailing_zeros_trimmed(self):
        assert P([1, 2, 0, 0]).degree == 1
        assert P([0]).degree == -1

    def test_arithmetic(self):
        p = P([1, 1])
        assert close_to(p * p, [1, 2, 1])
        assert close_to(p**3, [1, 3, 3, 1])
        assert close_to(p - p, [0])
        assert close_to(P([0, 0, 3]).derivative(), [0, 6])

    def test_json_roundtrip(self):
        p = P([1, 2j, -3])
        assert p.to_json() == {"coeffs": [[1.0, 0.0], [0.0, 2.0], [-3.0, 0.0]]}
        assert P.from_json(p.to_json()) == p


class TestResultant:
    def test_linear(self):
        assert sylvester_resultant(P([-2, 1]), P([-5, 1])) == pytest.approx(-3)
        a, b = 1 + 2j, -0.5j
        assert sylvester_resultant(P([-a, 1]), P([-b, 1])) == pytest.approx(a - b)

    def test_quadratic_with_derivative(self):
        for x0 in (3.0, -1.5 + 2j):
            f = P([-x0, 0, 1])
            assert sylvester_resultant(f, f.derivative()) == pytest.approx(-4 * x0)

    def test_shared_root(self):
        f = P([2, -3, 1])
        assert abs(sylvester_resultant(f, f)) < 1e-12

    def test_both_zero(self):
        with pytest.raises(ValueError):
            sylvester_resultant(P([0]), P([0]))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10_000))
    def test_multiplicative(self, seed):
        rng = np.random.default_rng(seed)

        def rand(d):
            return P(rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1))

        f, g, h = rand(int(rng.integers(1, 5))), rand(int(rng.integers(1, 5))), rand(int(rng.integers(1, 5)))
        lhs = sylvester_resultant(f * g, h)
        rhs = sylvester_resultant(f, h) * sylvester_resultant(g, h)
        assert abs(lhs - rhs) <= 1e-8 * max(abs(lhs), abs(rhs))


class TestDiscriminant:
    def test_n1_star_form(self):
        # y^2 - 2xy + x with p = x, q = x
        f = star_curve(1, P([0, 1]), P([0, 1]))
        assert proportional(discriminant_in_x(f, 4), P([0, -1, 1]))

    def test_bp_base_point(self):
        d = discriminant_in_x(bp_curve(2, 2, 1, 0), 8, monic=True)
        assert close_to(d, [-1, 0, 0, 0, 1], 1e-9)

    def test_constant_when_no_x(self):
        f = BivariatePolynomial.from_terms({(0, 2): 1, (0, 0): -1})
        d = discriminant_in_x(f, 3)
        assert d.degree == 0 and abs(d.coeffs[0]) > 1

    def test_bound_too_small(self):
        with pytest.raises(InterpolationError):
            discriminant_in_x(bp_curve(2, 2, 1, 0), 2)

    def test_constant_is_universal(self):
        # frozen oracle: res_y(f, f_y) = -4 (p^2 - q) for y^2 - 2py + q, by the quadratic formula
        rng = np.random.default_rng(7)
        p = P(rng.normal(size=3))
        q = P(rng.normal(size=4))
        d = discriminant_in_x(star_curve(1, p, q), 8)
        assert close_to(d, (-4 * (p**2 - q)).coeffs, 1e-9)

    @pytest.mark.parametrize("n,k", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3), (1, 3)])
    def test_bp_family_matches_resultant(self, n, k):
        rng = np.random.default_rng(n * 10 + k)
        fam = bp_discriminant_family(n, k)
        consts = []
        for _ in range(50):
            u, v = rng.normal(size=2) + 1j * rng.normal(size=2)
            d = discriminant_in_x(bp_curve(n, k, u, v), n * k + 2)
            ref = fam([u, v])
            c = d.coeffs[-1] / ref.coeffs[-1]
            assert close_to(d, (ref * c).coeffs, 1e-8 * abs(c) * ref.scale())
            consts.append(c)
        assert np.allclose(consts, consts[0], rtol=1e-8)


class TestFamilies:
    def test_bp_examples(self):
        assert close_to(bp_discriminant_family(2, 2)([1, 0]), [-1, 0, 0, 0, 1])
        assert close_to(bp_discriminant_family(1, 3)([0, 0]), [0, 0, 0, 1])
        assert close_to(bp_discriminant_family(2, 2)([0, 1]), [1, 0, 2, 0, 1])

    def test_plane_examples(self):
        fam = plane_discriminant_family(2)
        assert close_to(fam([0]), [1, 0, -1])
        assert close_to(fam([1]), [1, 2])
        assert plane_degeneration_at_infinity(2, 1)
        assert not plane_degeneration_at_infinity(2, 0)
        r = roots(plane_discriminant_family(3)([0]))
        assert not r.has_multiple
        assert np.allclose(np.abs(r.roots), 1)

    def test_parse_family(self):
        assert parse_family("bp:n=2,k=3").degree == 6
        assert parse_family("bp-disc:n=1,k=2,u-loop").degree == 2
        assert parse_family("plane:d=3").degree == 6
        with pytest.raises(ValueError):
            parse_family("bp:n=2")
        with pytest.raises(ValueError):
            parse_family("foo:n=1")


class TestRoots:
    def test_simple(self):
        r = roots(P([-1, 0, 1]))
        assert sorted(z.real for z in r.roots) == pytest.approx([-1, 1])

    def test_unit_roots(self):
        r = roots(P([-1, 0, 0, 0, 1]))
        expect = [cmath.exp(2j * cmath.pi * j / 4) for j in range(4)]
        for e in expect:
            assert min(abs(z - e) for z in r.roots) < 1e-12

    def test_double_root_flagged(self):
        r = roots(P([1, 2, 1]))
        assert r.has_multiple
        assert not roots(P([-1, 0, 1])).has_multiple

    def test_triple_root_flagged(self):
        assert roots(P([-1, 3, -3, 1])).has_multiple

    def test_warm_start(self):
        p = P([-2, 0, 1])
        r = roots(p, init=np.array([1.3, -1.5]))
        assert sorted(z.real for z in r.roots) == pytest.approx([-2**0.5, 2**0.5])

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            roots(P([3]))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.floats(-5, 5, allow_nan=False), min_size=3, max_size=8))
    def test_conjugate_closed_for_real_input(self, coeffs):
        coeffs[-1] = 1.0
        r = roots(P(coeffs))
        zs = np.asarray(r.roots)
        for z in zs:
            assert np.min(np.abs(zs - np.conj(z))) < 1e-6 * max(1.0, abs(z))


class TestDegeneracy:
    def test_examples(self):
        assert degeneracy_check_bp(2, 2, 1, 1)
        assert not degeneracy_check_bp(2, 2, 1, 0)
        assert degeneracy_check_bp(2, 2, 0, 1j)

    @pytest.mark.parametrize("n,k", [(1, 2), (2, 3), (3, 1), (3, 3)])
    def test_base_point_never_degenerate(self, n, k):
        assert not degeneracy_check_bp(n, k, 1, 0)

    def test_closed_form_branches(self):
        # k = 1: only u = 0 matters; n = 1: only u^2 = v
        assert bp_degeneracy_closed_form(2, 1, 1, 1) > 0.5
        assert bp_degeneracy_closed_form(1, 2, 0, 1) > 0.5
        assert bp_degeneracy_closed_form(2, 2, 0, 1) == 0

    def test_plane(self):
        assert degeneracy_check_plane(3, 1)
        assert degeneracy_check_plane(3, cmath.exp(2j * cmath.pi / 3))
        assert not degeneracy_check_plane(3, 0)
        assert not degeneracy_check_plane(3, 0.5j)
