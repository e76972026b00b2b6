from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kleinform.curve import CurveSpec, IndexOutOfRange
from kleinform.exactring import Polynomial, W, X, Y, Z, reduce_monic
from kleinform.klein import (
    DENOMINATOR,
    ConstructionOptions,
    assemble_form,
    build_g,
    build_i,
    diagonal,
    g5_term,
    mod_bar,
    mod_under,
    omega_numerator,
    prop2_rhs,
    r_numerator,
    second_kind_basis,
    swap,
    t_delta_pieces,
)

from helpers import c, cyclic_curve, hyperelliptic_curve

x, y, z, w = (Polynomial.var(v) for v in (X, Y, Z, W))
PRINTED = ConstructionOptions(region="printed")
LITERAL = ConstructionOptions(modbar="literal")


class TestModFunctions:
    def test_mod_under(self):
        assert mod_under(7, 3) == 1
        assert mod_under(4, 2) == 0
        assert mod_under(6, 3) == 0

    def test_mod_bar(self):
        assert mod_bar(4, 2) == 2
        assert mod_bar(6, 3) == 3
        assert mod_bar(0, 3) == 3
        assert mod_bar(5, 3) == mod_bar(5, 3, LITERAL) == 2
        assert mod_bar(4, 2, LITERAL) == 4

    def test_three_two(self):
        assert mod_bar(3, 2) == mod_under(3, 2) == 1

    def test_bad_options(self):
        with pytest.raises(ValueError):
            ConstructionOptions(region="sideways")


class TestElliptic:
    def test_r00_default(self, elliptic):
        assert r_numerator(elliptic, 0, 0) == -c(3, 0) * z

    def test_r00_printed_region_vanishes(self, elliptic):
        assert r_numerator(elliptic, 0, 0, PRINTED).is_zero()

    def test_g(self, elliptic):
        expected = (
            2 * y * w
            - 2 * c(0, 0)
            - c(1, 0) * (x + z)
            - 2 * c(2, 0) * x * z
            - c(3, 0) * (x**2 * z + x * z**2)
        )
        form = build_g(elliptic)
        assert form.numerator == expected
        assert form.denominator == DENOMINATOR

    def test_numeric(self, elliptic_numeric):
        assert build_g(elliptic_numeric).numerator == 2 + x**2 * z + x * z**2 + 2 * y * w
        assert second_kind_basis(elliptic_numeric).entries[(0, 0)] == z

    def test_g_unaffected_by_region(self, elliptic):
        assert build_g(elliptic, PRINTED) == build_g(elliptic)


class TestCyclic:
    def test_r00_34(self):
        spec = cyclic_curve(3, 4)
        assert r_numerator(spec, 0, 0) == -(c(2, 0) + 3 * c(3, 0) * z + 5 * c(4, 0) * z**2) * w

    def test_r01_34(self):
        assert r_numerator(cyclic_curve(3, 4), 0, 1) == -c(4, 0) * z**2

    def test_r_index_checked(self):
        with pytest.raises(IndexOutOfRange):
            r_numerator(cyclic_curve(3, 4), 2, 0)


class TestIBlocks:
    def test_small_blocks(self):
        spec = CurveSpec.symbolic(2, 3)
        assert build_i(spec, 0, 1).is_zero()
        assert build_i(spec, 0, 0).is_zero()
        g1 = spec.g(1)
        assert build_i(spec, 1, 1) == g1 * g1.diff(Z) * (x - z) + g1 * g1

    def test_prop2_small(self):
        spec = CurveSpec.symbolic(2, 3)
        assert prop2_rhs(spec, 0, 1).is_zero()
        assert prop2_rhs(spec, 1, 1) == 2 * build_i(spec, 1, 1)

    def test_prop2_zero_two(self):
        spec = CurveSpec.symbolic(2, 3)
        g0, g2 = spec.g(0), spec.g(2)
        assert build_i(spec, 0, 2) + build_i(spec, 2, 0) == prop2_rhs(spec, 0, 2)
        assert prop2_rhs(spec, 0, 2) == -((g0 * g2.diff(Z) + g0.diff(Z) * g2) * (x - z) + 2 * g0 * g2)

    @pytest.mark.parametrize("ab", [(2, 3), (3, 4), (2, 5)])
    def test_i_blocks_reproduce_omega(self, ab):
        spec = CurveSpec.symbolic(*ab)
        total = Polynomial.zero()
        for u in range(spec.a + 1):
            for v in range(spec.a + 1):
                total = total + build_i(spec, u, v)
        assert reduce_monic(total - omega_numerator(spec), W, spec.F_zw).is_zero()


class TestTDelta:
    def test_latter_case(self):
        p = t_delta_pieces(0, 2, 1, 3, 0)
        assert (p.p, p.q) == (1, 1)
        assert p.p + p.q + 1 == 3

    def test_former_case(self):
        p = t_delta_pieces(0, 2, 1, 2, 0)
        assert (p.p, p.q) == (1, 1)
        assert p.lhs_k == p.rhs_k == -2 * x * z

    def test_constant_case(self):
        p = t_delta_pieces(0, 3, 1, 0, 0)
        assert p.lhs_k == p.rhs_k == Polynomial.const(-3)

    def test_bad_index(self):
        with pytest.raises(IndexOutOfRange):
            t_delta_pieces(0, 2, 2, 1, 1)

    @given(
        st.integers(0, 4).flatmap(
            lambda u: st.tuples(st.just(u), st.integers(u + 2, u + 6)).flatmap(
                lambda uv: st.tuples(st.just(uv[0]), st.just(uv[1]), st.integers(uv[0] + 1, uv[1] - 1))
            )
        ),
        st.integers(0, 10),
        st.integers(0, 10),
    )
    def test_pieces_telescope(self, uvk, r, s):
        u, v, k = uvk
        p = t_delta_pieces(u, v, k, r, s)
        assert p.p + p.q in (r + s, r + s - 1)
        assert p.lhs_k == p.rhs_k
        assert p.lhs_conjugate == p.rhs_conjugate
        if r == s:
            assert p.p == p.q
        conj = t_delta_pieces(u, v, u + v - k, r, s)
        assert (conj.p, conj.q) == (p.q, p.p)

    @given(st.integers(0, 3), st.integers(2, 5), st.integers(0, 6), st.integers(0, 6))
    def test_cross_block_swap_invariant(self, u, gap, r, s):
        v = u + gap
        total = Polynomial.zero()
        for k in range(u + 1, v):
            total = total + g5_term(u, v, k, r, s)
        assert swap(total) == total


CORPUS = [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7)]


@pytest.mark.parametrize("ab", CORPUS)
def test_form_identities_symbolic(ab):
    spec = CurveSpec.symbolic(*ab)
    basis = second_kind_basis(spec)
    G = build_g(spec).numerator
    assert swap(G) == G
    assert assemble_form(spec, basis).numerator == G
    F = spec.F_xy
    Fy = F.diff(Y)
    assert reduce_monic(diagonal(G) - Fy * Fy, Y, F).is_zero()


@pytest.mark.parametrize("ab", CORPUS)
def test_r_exponents_and_variables(ab):
    spec = CurveSpec.symbolic(*ab)
    for (i, j), r in second_kind_basis(spec).entries.items():
        assert set(v for v in r.variables() if not v.is_atom) <= {Z, W}
        # w-degree stays below a, so r is already reduced modulo F(z, w)
        assert r.degree(W) < spec.a


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 4))
def test_hyperelliptic_r_has_no_x(g):
    spec = hyperelliptic_curve(g)
    for r in second_kind_basis(spec).entries.values():
        assert r.degree(X) == 0 and r.degree(Y) == 0
