from __future__ import annotations

import json
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kleinform.curve import (
    SYMBOLIC,
    CurveSpec,
    IndexOutOfRange,
    InvalidCurve,
    NotCoprime,
    basis_j,
    genus,
    h_poly,
    is_weighted_homogeneous,
    order_at_infinity,
    support_d,
    weight_of_c,
    weight_of_u,
)
from kleinform.exactring import Polynomial, W, X, Y, atom

from helpers import c

coprime_pairs = st.tuples(st.integers(2, 12), st.integers(2, 12)).filter(lambda ab: ab[0] < ab[1] and gcd(*ab) == 1)


def test_support_23():
    assert support_d(2, 3) == {(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (0, 2)}


@pytest.mark.parametrize(
    "a,b,expected",
    [(2, 3, [(0, 0)]), (3, 4, [(0, 0), (1, 0), (0, 1)]), (2, 5, [(0, 0), (1, 0)])],
)
def test_basis_j(a, b, expected):
    assert basis_j(a, b) == expected
    assert len(expected) == genus(a, b)


def test_genus_values():
    assert genus(2, 3) == 1
    assert genus(4, 5) == 6
    assert [genus(2, 2 * g + 1) for g in range(1, 6)] == [1, 2, 3, 4, 5]


def test_orders():
    assert order_at_infinity(2, 3, 0, 0) == 1
    assert [order_at_infinity(3, 4, *ij) for ij in [(1, 0), (0, 1), (0, 0)]] == [2, 1, 5]
    with pytest.raises(IndexOutOfRange):
        order_at_infinity(3, 4, 2, 0)


def test_weights():
    assert weight_of_u(3, 4, 0, 0) == 5
    assert weight_of_c(3, 4, 0, 3) == 0
    assert weight_of_c(3, 4, 4, 0) == 0
    assert weight_of_c(3, 4, 0, 0) == 12
    with pytest.raises(IndexOutOfRange):
        weight_of_c(3, 4, 5, 0)


def test_coprimality_required():
    with pytest.raises(NotCoprime, match="a and b must be coprime"):
        support_d(2, 4)
    with pytest.raises(NotCoprime):
        CurveSpec(2, 4, {(0, 2): 1, (4, 0): 1})


@given(coprime_pairs)
def test_genus_matches_enumeration(ab):
    a, b = ab
    J = basis_j(a, b)
    assert len(J) == (a - 1) * (b - 1) // 2
    orders = [order_at_infinity(a, b, i, j) for (i, j) in J]
    assert len(set(orders)) == len(orders)
    assert min(orders) >= 0
    assert orders == sorted(orders, reverse=True)


class TestCurveSpec:
    def test_requires_monic(self):
        with pytest.raises(InvalidCurve, match="c_\\{0,2\\}"):
            CurveSpec(2, 3, {(3, 0): 1})
        with pytest.raises(InvalidCurve):
            CurveSpec(2, 3, {(0, 2): 2, (3, 0): 1})

    def test_requires_leading_x_term(self):
        with pytest.raises(InvalidCurve):
            CurveSpec(2, 3, {(0, 2): 1, (0, 0): 1})

    def test_index_outside_support(self):
        with pytest.raises(IndexOutOfRange):
            CurveSpec(2, 3, {(0, 2): 1, (3, 0): 1, (2, 1): 5})

    def test_zero_coefficients_dropped(self):
        spec = CurveSpec(2, 3, {(0, 2): 1, (3, 0): 1, (1, 0): 0})
        assert (1, 0) not in spec.coefficients

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            CurveSpec(2, 3, {(0, 2): 1, (3, 0): 1.5})

    def test_symbolic_constructor(self):
        spec = CurveSpec.symbolic(2, 3)
        assert spec.is_symbolic
        assert set(spec.coefficients) == support_d(2, 3)
        assert spec.coefficients[(0, 2)] == 1
        assert spec.coefficients[(1, 1)] is SYMBOLIC

    def test_F_and_partials(self, elliptic_numeric):
        y = Polynomial.var(Y)
        x = Polynomial.var(X)
        F = elliptic_numeric.F_xy
        assert F == y**2 - x**3 - 1
        assert F.diff(Y) == 2 * y
        z, w = Polynomial.var("z"), Polynomial.var(W)
        assert elliptic_numeric.F_zw == w**2 - z**3 - 1

    def test_columns(self):
        spec = CurveSpec.symbolic(3, 4)
        z = Polynomial.var("z")
        assert spec.g(1) == c(0, 1) + c(1, 1) * z + c(2, 1) * z**2
        assert spec.f(3) == Polynomial.const(1)
        with pytest.raises(IndexOutOfRange):
            spec.g(4)

    def test_h(self):
        y, w = Polynomial.var(Y), Polynomial.var(W)
        assert h_poly(0).is_zero()
        assert h_poly(1) == Polynomial.const(1)
        assert h_poly(2) == y + w
        for j in range(5):
            assert h_poly(j) * (y - w) == y**j - w**j

    def test_homogeneity(self):
        assert CurveSpec.symbolic(3, 5).check_homogeneity() is True
        assert CurveSpec(2, 3, {(0, 2): 1, (3, 0): 1, (0, 0): 7}).check_homogeneity() is None
        assert CurveSpec(2, 3, {(0, 2): 1, (3, 0): 1}).check_homogeneity() is True
        spec = CurveSpec.symbolic(2, 3)
        foreign = spec.F_xy + Polynomial.var(X, 4)
        assert not is_weighted_homogeneous(foreign, 2, 3)

    def test_json_round_trip(self):
        spec = CurveSpec(3, 4, {(0, 3): 1, (4, 0): Fraction(-2, 3), (1, 1): SYMBOLIC})
        text = json.dumps(spec.to_dict())
        assert CurveSpec.from_json(text) == spec
        assert spec.to_dict()["coefficients"][-1] == {"i": 4, "j": 0, "value": "-2/3"}

    @pytest.mark.parametrize(
        "text",
        [
            "[]",
            "not json",
            '{"a": 2}',
            '{"a": 2, "b": 3, "coefficients": [{"i": 0, "j": 2, "value": 1.5}]}',
            '{"a": 2, "b": 3, "coefficients": [{"i": 0, "j": 2, "value": "1"}, {"i": 0, "j": 2, "value": "1"}]}',
            '{"a": "2", "b": 3, "coefficients": []}',
        ],
    )
    def test_malformed_json(self, text):
        with pytest.raises(ValueError):
            CurveSpec.from_json(text)
