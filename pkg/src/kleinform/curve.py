"""The C_ab curve model.

A curve is ``F(x, y) = sum c_{i,j} x^i y^j`` with ``(i, j)`` in the support
lattice ``D(a, b)``.  ``c_{0,a}`` is normalized to 1 so that ``F`` is monic in
``y``; this is what lets every identity be checked by division-free
reduction modulo the curve.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping, Union

from .exactring import W, X, Y, Z, Polynomial, Var, atom

__all__ = [
    "SYMBOLIC",
    "CurveError",
    "NotCoprime",
    "IndexOutOfRange",
    "InvalidCurve",
    "CurveSpec",
    "support_d",
    "basis_j",
    "genus",
    "weight_of_u",
    "weight_of_c",
    "order_at_infinity",
    "is_weighted_homogeneous",
    "h_poly",
]


class CurveError(ValueError):
    """Base class for invalid curve input."""


class NotCoprime(CurveError):
    pass


class IndexOutOfRange(CurveError, IndexError):
    pass


class InvalidCurve(CurveError):
    pass


class _Symbolic:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "SYMBOLIC"


SYMBOLIC = _Symbolic()
CoeffValue = Union[Fraction, _Symbolic]


def _check_coprime(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise CurveError("a and b must be positive integers")
    if gcd(a, b) != 1:
        raise NotCoprime("a and b must be coprime")


def support_d(a: int, b: int) -> frozenset[tuple[int, int]]:
    """Lattice points ``(i, j)`` with ``ai + bj <= ab``, ``0 <= i <= b``, ``0 <= j <= a``."""
    _check_coprime(a, b)
    return frozenset(
        (i, j) for i in range(b + 1) for j in range(a + 1) if a * i + b * j <= a * b
    )


def order_value(a: int, b: int, i: int, j: int) -> int:
    return a * b - a - b - a * i - b * j


def basis_j(a: int, b: int) -> list[tuple[int, int]]:
    """Index set of the holomorphic differentials, ordered by order at infinity, largest first."""
    _check_coprime(a, b)
    top = a * b - a - b
    pts = [
        (i, j)
        for i in range(max(top, 0) // a + 1)
        for j in range(max(top, 0) // b + 1)
        if a * i + b * j <= top
    ]
    return sorted(pts, key=lambda ij: -order_value(a, b, *ij))


def genus(a: int, b: int) -> int:
    _check_coprime(a, b)
    return (a - 1) * (b - 1) // 2


def order_at_infinity(a: int, b: int, i: int, j: int) -> int:
    """Zero order at the point at infinity of ``x^i y^j / F_y dx``."""
    _check_coprime(a, b)
    if i < 0 or j < 0 or a * i + b * j > a * b - a - b:
        raise IndexOutOfRange(f"({i},{j}) is not in J({a},{b})")
    return order_value(a, b, i, j)


def weight_of_u(a: int, b: int, i: int, j: int) -> int:
    _check_coprime(a, b)
    if i < 0 or j < 0 or a * i + b * j > a * b - a - b:
        raise IndexOutOfRange(f"({i},{j}) is not in J({a},{b})")
    return a * b - a * (i + 1) - b * (j + 1)


def weight_of_c(a: int, b: int, i: int, j: int) -> int:
    # Sign chosen so that F is homogeneous of weight ab with wt(x)=a, wt(y)=b.
    if (i, j) not in support_d(a, b):
        raise IndexOutOfRange(f"({i},{j}) is not in D({a},{b})")
    return a * b - a * i - b * j


def is_weighted_homogeneous(poly: Polynomial, a: int, b: int, total: int | None = None) -> bool:
    """Whether every term has weight ``total`` (default ``ab``).

    Weights: ``x, z`` weigh ``a``; ``y, w`` weigh ``b``; atom ``c_{i,j}``
    weighs ``ab - ai - bj``.
    """
    if total is None:
        total = a * b
    for m in poly.terms:
        wt = 0
        for v, e in m:
            if v.rank in (0, 2):
                wt += a * e
            elif v.rank in (1, 3):
                wt += b * e
            else:
                wt += (a * b - a * v.i - b * v.j) * e
        if wt != total:
            return False
    return True


def h_poly(j: int) -> Polynomial:
    """``h_j = sum_{i<j} w^i y^(j-1-i)``, so that ``h_j (y - w) = y^j - w^j``."""
    if j < 0:
        raise IndexOutOfRange("h_j needs j >= 0")
    return Polynomial(
        [(((W, i), (Y, j - 1 - i)), 1) for i in range(j)]
    )


def _coerce_value(v) -> CoeffValue:
    if v is SYMBOLIC or (isinstance(v, str) and v == "symbolic"):
        return SYMBOLIC
    if isinstance(v, float):
        raise TypeError("floating-point coefficients are not supported")
    return Fraction(v)


@dataclass(frozen=True)
class CurveSpec:
    """``(a, b)`` plus coefficient assignments on ``D(a, b)``.

    ``coefficients`` maps ``(i, j)`` to a ``Fraction`` or ``SYMBOLIC``;
    missing indices are zero.  ``(0, a)`` must be exactly 1.
    """

    a: int
    b: int
    coefficients: Mapping[tuple[int, int], CoeffValue] = field(default_factory=dict)

    def __post_init__(self):
        a, b = self.a, self.b
        if not isinstance(a, int) or not isinstance(b, int):
            raise CurveError("a and b must be integers")
        _check_coprime(a, b)
        support = support_d(a, b)
        coeffs: dict[tuple[int, int], CoeffValue] = {}
        for key, value in self.coefficients.items():
            i, j = key
            if (i, j) not in support:
                raise IndexOutOfRange(f"coefficient index ({i},{j}) lies outside D({a},{b})")
            value = _coerce_value(value)
            if value is SYMBOLIC or value != 0:
                coeffs[(i, j)] = value
        if coeffs.get((0, a)) != 1:
            raise InvalidCurve(f"c_{{0,{a}}} must be present with value 1")
        if (b, 0) not in coeffs:
            raise InvalidCurve(f"c_{{{b},0}} must be nonzero or symbolic")
        object.__setattr__(self, "coefficients", dict(sorted(coeffs.items())))

    # -- constructors -----------------------------------------------------

    @classmethod
    def symbolic(cls, a: int, b: int, pinned: Mapping[tuple[int, int], object] | None = None) -> CurveSpec:
        """Every index of ``D`` except ``(0, a)`` is an atom unless pinned."""
        pinned = dict(pinned or {})
        coeffs: dict = {}
        for ij in sorted(support_d(a, b)):
            if ij == (0, a):
                coeffs[ij] = 1
            elif ij in pinned:
                coeffs[ij] = pinned[ij]
            else:
                coeffs[ij] = SYMBOLIC
        return cls(a, b, coeffs)

    @classmethod
    def from_dict(cls, data: Mapping) -> CurveSpec:
        try:
            a, b = data["a"], data["b"]
            entries = data.get("coefficients", [])
            coeffs = {}
            for e in entries:
                key = (int(e["i"]), int(e["j"]))
                if key in coeffs:
                    raise InvalidCurve(f"duplicate coefficient entry {key}")
                value = e["value"]
                if value == "symbolic":
                    coeffs[key] = SYMBOLIC
                elif isinstance(value, (str, int)) and not isinstance(value, bool):
                    coeffs[key] = Fraction(value)
                else:
                    raise InvalidCurve(f"bad coefficient value {value!r}")
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, CurveError):
                raise
            raise InvalidCurve(f"malformed curve description: {exc}") from exc
        if type(a) is not int or type(b) is not int:
            raise InvalidCurve("a and b must be integers")
        return cls(a, b, coeffs)

    @classmethod
    def from_json(cls, text: str) -> CurveSpec:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidCurve(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise InvalidCurve("curve JSON must be an object")
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        entries = []
        for (i, j), v in self.coefficients.items():
            if v is SYMBOLIC:
                val = "symbolic"
            else:
                val = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
            entries.append({"i": i, "j": j, "value": val})
        return {"a": self.a, "b": self.b, "coefficients": entries}

    # -- lattice data ---------------------------------------------------------

    @property
    def support(self) -> frozenset[tuple[int, int]]:
        return support_d(self.a, self.b)

    @property
    def basis_indices(self) -> list[tuple[int, int]]:
        return basis_j(self.a, self.b)

    @property
    def genus(self) -> int:
        return genus(self.a, self.b)

    @property
    def is_symbolic(self) -> bool:
        return any(v is SYMBOLIC for v in self.coefficients.values())

    def nonzero_indices(self) -> list[tuple[int, int]]:
        return list(self.coefficients)

    def coefficient(self, i: int, j: int) -> Polynomial:
        """``c_{i,j}`` as a ring element (an atom when symbolic)."""
        v = self.coefficients.get((i, j))
        if v is None:
            return Polynomial.zero()
        if v is SYMBOLIC:
            return Polynomial.var(atom(i, j))
        return Polynomial.const(v)

    # -- polynomials ------------------------------------------------------------

    def F(self, u: Var = X, v: Var = Y) -> Polynomial:
        """The curve polynomial in the variable pair ``(u, v)``."""
        out = Polynomial.zero()
        for (i, j) in self.coefficients:
            out = out + self.coefficient(i, j) * Polynomial.monomial(1, {u: i, v: j})
        return out

    @property
    def F_xy(self) -> Polynomial:
        return self.F(X, Y)

    @property
    def F_zw(self) -> Polynomial:
        return self.F(Z, W)

    def g(self, j: int) -> Polynomial:
        """``g_j(z) = sum_i c_{i,j} z^i``."""
        if not 0 <= j <= self.a:
            raise IndexOutOfRange(f"g_j needs 0 <= j <= {self.a}")
        return self._column(j, Z)

    def f(self, u: int) -> Polynomial:
        """``f_u(x) = sum_r c_{r,u} x^r``."""
        if not 0 <= u <= self.a:
            raise IndexOutOfRange(f"f_u needs 0 <= u <= {self.a}")
        return self._column(u, X)

    def h(self, j: int) -> Polynomial:
        if not 0 <= j <= self.a:
            raise IndexOutOfRange(f"h_j needs 0 <= j <= {self.a}")
        return h_poly(j)

    def _column(self, j: int, var: Var) -> Polynomial:
        out = Polynomial.zero()
        for (i, jj) in self.coefficients:
            if jj == j:
                out = out + self.coefficient(i, j) * Polynomial.var(var, i)
        return out

    def column_terms(self, j: int) -> list[tuple[int, Polynomial]]:
        """``[(i, c_{i,j})]`` for the nonzero coefficients in row ``y^j``."""
        return [(i, self.coefficient(i, jj)) for (i, jj) in self.coefficients if jj == j]

    def check_homogeneity(self) -> bool | None:
        """True/False for symbolic curves, None when not applicable.

        Applicable only when every pinned numeric coefficient sits at weight
        zero (``ai + bj = ab``), i.e. the curve is generic in its lower terms.
        """
        a, b = self.a, self.b
        for (i, j), v in self.coefficients.items():
            if v is not SYMBOLIC and a * i + b * j != a * b:
                return None
        return is_weighted_homogeneous(self.F_xy, a, b)
