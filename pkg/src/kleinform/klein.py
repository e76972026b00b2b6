"""Second-kind differentials and the fundamental 2-form numerator.

The 2-form is ``R = G / ((x - z)^2 F_y(x, y) F_w(z, w))`` with ``G`` a
polynomial symmetric under ``(x, y) <-> (z, w)``.  The second-kind
differentials are ``dr_{i,j} = r_{i,j}(z, w) / F_w dz`` and only their
numerators are materialized.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .curve import CurveSpec, IndexOutOfRange
from .exactring import W, X, Y, Z, Polynomial, exact_quotient, substitute

__all__ = [
    "RegionConvention",
    "ModBarConvention",
    "ConstructionOptions",
    "DEFAULT_OPTIONS",
    "SecondKindBasis",
    "FundamentalForm",
    "DENOMINATOR",
    "mod_under",
    "mod_bar",
    "r_numerator",
    "second_kind_basis",
    "build_g",
    "g5_term",
    "build_i",
    "sum_i",
    "assemble_form",
    "OmegaData",
    "omega_data",
    "omega_numerator",
    "prop2_rhs",
    "TDeltaPieces",
    "t_delta_pieces",
    "swap",
    "diagonal",
]

DENOMINATOR = "(x-z)^2*F_y(x,y)*F_w(z,w)"

_SWAP = {X: Z, Z: X, Y: W, W: Y}
_DIAG = {Z: X, W: Y}


def swap(p: Polynomial) -> Polynomial:
    """Exchange ``(x, y)`` with ``(z, w)``."""
    return substitute(p, _SWAP)


def diagonal(p: Polynomial) -> Polynomial:
    """Restrict to the diagonal ``z = x, w = y``."""
    return substitute(p, _DIAG)


class RegionConvention(str, enum.Enum):
    """Summation region of the third family of ``r_{i,j}``."""

    PROOF = "proof"  # (j+1-u)s + (v-j-1)r >= (i+1)(v-u)
    PRINTED = "printed"  # the reversed inequality


class ModBarConvention(str, enum.Enum):
    BETA = "beta"  # value in (0, beta]
    LITERAL = "literal"  # alpha itself when beta | alpha


@dataclass(frozen=True)
class ConstructionOptions:
    region: RegionConvention = RegionConvention.PROOF
    modbar: ModBarConvention = ModBarConvention.BETA

    def __post_init__(self):
        object.__setattr__(self, "region", RegionConvention(self.region))
        object.__setattr__(self, "modbar", ModBarConvention(self.modbar))


DEFAULT_OPTIONS = ConstructionOptions()


def mod_under(alpha: int, beta: int) -> int:
    """Ordinary remainder in ``[0, beta)``."""
    if beta < 1:
        raise ValueError("beta must be positive")
    return alpha % beta


def mod_bar(alpha: int, beta: int, opts: ConstructionOptions = DEFAULT_OPTIONS) -> int:
    """Remainder that never vanishes: ``beta`` (or ``alpha``, literally) on divisibility.

    ``alpha = 0`` is accepted; it arises from the constant coefficient
    ``c_{0,0}`` and gives ``beta`` under the default convention.
    """
    m = mod_under(alpha, beta)
    if m:
        return m
    return beta if opts.modbar is ModBarConvention.BETA else alpha


def _ceil_div(p: int, q: int) -> int:
    return -(-p // q)


def _mono(coeff, c: Polynomial, **exps: int) -> Polynomial:
    # c is a coefficient product (constant or atoms); exps over x, y, z, w
    vars_ = {"x": X, "y": Y, "z": Z, "w": W}
    for k, e in exps.items():
        if e < 0:
            raise ArithmeticError(f"negative exponent {k}^{e} in construction")
    return c * Polynomial.monomial(coeff, {vars_[k]: e for k, e in exps.items()})


# ---------------------------------------------------------------------------
# second-kind numerators


def r_numerator(
    spec: CurveSpec, i: int, j: int, opts: ConstructionOptions = DEFAULT_OPTIONS
) -> Polynomial:
    """Numerator ``r_{i,j}(z, w)`` of the second-kind differential paired with ``x^i y^j``."""
    if (i, j) not in spec.basis_indices:
        raise IndexOutOfRange(f"({i},{j}) is not in J({spec.a},{spec.b})")
    terms = list(spec.coefficients)
    coeff = {ij: spec.coefficient(*ij) for ij in terms}
    out = Polynomial.zero()

    # u(s-i-1) c_{r,u} c_{s,j+1} z^{r+s-i-2} w^{u-1},  u <= j, s >= i+2
    for (s, v) in terms:
        if v != j + 1 or s < i + 2:
            continue
        for (r, u) in terms:
            if u > j:
                continue
            k = u * (s - i - 1)
            if k:
                out = out + _mono(k, coeff[(r, u)] * coeff[(s, v)], z=r + s - i - 2, w=u - 1)

    # (j+1)(r-i-1) c_{r,j+1} c_{s,v} z^{r+s-i-2} w^{v-1},  v >= j+1, r >= i+2
    for (r, u) in terms:
        if u != j + 1 or r < i + 2:
            continue
        for (s, v) in terms:
            if v < j + 1:
                continue
            k = (j + 1) * (r - i - 1)
            if k:
                out = out + _mono(k, coeff[(r, u)] * coeff[(s, v)], z=r + s - i - 2, w=v - 1)

    # {(i+1)(v-u) - (j+1-u)s - (v-j-1)r} c_{r,u} c_{s,v} z^{r+s-i-2} w^{u+v-j-2}
    proof = opts.region is RegionConvention.PROOF
    for (r, u) in terms:
        if u > j:
            continue
        for (s, v) in terms:
            if v < j + 2 or r + s < i + 2:
                continue
            weighted = (j + 1 - u) * s + (v - j - 1) * r
            bound = (i + 1) * (v - u)
            if (weighted >= bound) if proof else (weighted <= bound):
                k = bound - weighted
                if k:
                    out = out + _mono(
                        k, coeff[(r, u)] * coeff[(s, v)], z=r + s - i - 2, w=u + v - j - 2
                    )
    return out


@dataclass(frozen=True)
class SecondKindBasis:
    """``(i, j) -> r_{i,j}(z, w)``; the differential is ``r_{i,j} / F_w dz``."""

    spec: CurveSpec
    entries: Mapping[tuple[int, int], Polynomial]
    denominator: str = "F_w"

    @property
    def max_w_degree(self) -> int:
        return max((p.degree(W) for p in self.entries.values()), default=-1)

    def replace(self, ij: tuple[int, int], poly: Polynomial) -> SecondKindBasis:
        entries = dict(self.entries)
        entries[ij] = poly
        return SecondKindBasis(self.spec, entries, self.denominator)


def second_kind_basis(spec: CurveSpec, opts: ConstructionOptions = DEFAULT_OPTIONS) -> SecondKindBasis:
    entries = {ij: r_numerator(spec, *ij, opts) for ij in spec.basis_indices}
    return SecondKindBasis(spec, entries)


# ---------------------------------------------------------------------------
# fundamental 2-form


@dataclass(frozen=True)
class FundamentalForm:
    """Numerator ``G(x, y, z, w)`` over ``(x - z)^2 F_y(x, y) F_w(z, w)``."""

    numerator: Polynomial
    denominator: str = DENOMINATOR
    spec: CurveSpec | None = field(default=None, compare=False)
    source: str = field(default="closed", compare=False)


def g5_term(
    u: int, v: int, k: int, r: int, s: int, opts: ConstructionOptions = DEFAULT_OPTIONS
) -> Polynomial:
    """The ``(k, r, s)`` summand of the cross block for ``u < k < v``, without the
    coefficient product and the leading minus sign."""
    d = v - u
    alpha = (k - u) * s + (v - k) * r
    beta = (k - u) * r + (v - k) * s
    one = Polynomial.const(1)
    first = _mono(
        mod_bar(alpha, d, opts), one,
        z=_ceil_div(alpha, d), x=beta // d, w=k - 1, y=u + v - k - 1,
    )
    second = _mono(
        mod_under(beta, d), one,
        z=alpha // d, x=_ceil_div(beta, d), w=k - 1, y=u + v - k - 1,
    )
    return first + second


def build_g(spec: CurveSpec, opts: ConstructionOptions = DEFAULT_OPTIONS) -> FundamentalForm:
    """Assemble ``G`` from the diagonal blocks, the paired blocks and the cross blocks."""
    terms = list(spec.coefficients)
    coeff = {ij: spec.coefficient(*ij) for ij in terms}
    out = Polynomial.zero()
    for (r, u) in terms:
        for (s, v) in terms:
            if v < u:
                continue
            cc = coeff[(r, u)] * coeff[(s, v)]
            if u >= 1:
                out = out + _mono(u, cc, x=r, z=s, y=u - 1, w=v - 1)
                if u < v:
                    out = out + _mono(u, cc, x=s, z=r, y=v - 1, w=u - 1)
            for k in range(u + 1, v):
                out = out - cc * g5_term(u, v, k, r, s, opts)
    return FundamentalForm(out, spec=spec, source="closed")


# ---------------------------------------------------------------------------
# Omega machinery


def build_i(spec: CurveSpec, i: int, j: int) -> Polynomial:
    """The bilinear block ``I(i, j)`` in ``x, z, y, w``."""
    a = spec.a
    if not (0 <= i <= a and 0 <= j <= a):
        raise IndexOutOfRange(f"I(i,j) needs 0 <= i, j <= {a}")
    gi, gj = spec.g(i), spec.g(j)
    if gi.is_zero() or gj.is_zero():
        return Polynomial.zero()
    gi_p = gi.diff(Z)
    hi, hj = spec.h(i), spec.h(j)
    w = Polynomial.var(W)
    x_minus_z = Polynomial.var(X) - Polynomial.var(Z)
    jw = j * w ** (j - 1) if j else Polynomial.zero()
    h_prev = spec.h(j - 1) if j else Polynomial.zero()
    first = (-(w ** i) * hj.diff(W) + jw * hi - hi.diff(Y) * w ** j) * gi_p * gj * x_minus_z
    second = (jw * hi - j * h_prev * w ** i) * gi * gj
    return first + second


def sum_i(spec: CurveSpec) -> Polynomial:
    """``sum_{u,v=0}^{a} I(u, v)``."""
    out = Polynomial.zero()
    for u in range(spec.a + 1):
        for v in range(spec.a + 1):
            out = out + build_i(spec, u, v)
    return out


def assemble_form(spec: CurveSpec, basis: SecondKindBasis) -> FundamentalForm:
    """Numerator of ``dOmega/dz + sum du_{i,j}/dx dr_{i,j}/dz`` built from a basis."""
    x_minus_z = Polynomial.var(X) - Polynomial.var(Z)
    corr = Polynomial.zero()
    for (i, j), r in basis.entries.items():
        corr = corr + Polynomial.monomial(1, {X: i, Y: j}) * r
    return FundamentalForm(sum_i(spec) + x_minus_z * x_minus_z * corr, spec=spec, source="assembled")


class OmegaData(NamedTuple):
    H: Polynomial
    H_z: Polynomial
    H_w: Polynomial
    F_z: Polynomial
    F_w: Polynomial
    numerator: Polynomial


def omega_data(spec: CurveSpec) -> OmegaData:
    """``H = (F(z, y) - F(z, w)) / (y - w)`` and the numerator of ``dOmega/dz``.

    The numerator is ``(H_z F_w - H_w F_z)(x - z) + H F_w``.
    """
    F_zy = spec.F(Z, Y)
    F_zw = spec.F_zw
    H = exact_quotient(F_zy - F_zw, Polynomial.var(Y) - Polynomial.var(W))
    H_z, H_w = H.diff(Z), H.diff(W)
    F_z, F_w = F_zw.diff(Z), F_zw.diff(W)
    x_minus_z = Polynomial.var(X) - Polynomial.var(Z)
    num = (H_z * F_w - H_w * F_z) * x_minus_z + H * F_w
    return OmegaData(H, H_z, H_w, F_z, F_w, num)


def omega_numerator(spec: CurveSpec) -> Polynomial:
    return omega_data(spec).numerator


def prop2_rhs(spec: CurveSpec, m: int, n: int) -> Polynomial:
    """Closed form of ``I(m, n) + I(n, m)`` for ``m <= n``."""
    a = spec.a
    if not 0 <= m <= n <= a:
        raise IndexOutOfRange(f"need 0 <= m <= n <= {a}")
    gm, gn = spec.g(m), spec.g(n)
    gm_p, gn_p = gm.diff(Z), gn.diff(Z)
    x_minus_z = Polynomial.var(X) - Polynomial.var(Z)

    def wy(ew: int, ey: int) -> Polynomial:
        return Polynomial.monomial(1, {W: ew, Y: ey})

    out = Polynomial.zero()
    if m:
        out = out + m * wy(m - 1, n - 1) * (gm * gn_p * x_minus_z + gm * gn)
        out = out + m * wy(n - 1, m - 1) * (gm_p * gn * x_minus_z + gm * gn)
    for k in range(m + 1, n):
        block = ((n - k) * gm * gn_p + (k - m) * gm_p * gn) * x_minus_z + (n - m) * gm * gn
        out = out - block * wy(k - 1, m + n - k - 1)
    return out


# ---------------------------------------------------------------------------
# telescoping pieces of the cross blocks


class TDeltaPieces(NamedTuple):
    p: int
    q: int
    lhs_k: Polynomial
    lhs_conjugate: Polynomial
    rhs_k: Polynomial
    rhs_conjugate: Polynomial


def _telescoped(num: int, d: int, r: int, s: int, upper: int) -> Polynomial:
    """``-(t + (x - z)^2 Delta)`` for weighted sum ``num`` over ``d``.

    The sign is the one the block carries inside ``I(m, n) + I(n, m)``.
    """
    x, z = Polynomial.var(X), Polynomial.var(Z)
    t = num * z ** (r + s - 1) * (x - z) + d * z ** (r + s) if r + s else Polynomial.const(d)
    delta = Polynomial.zero()
    for h in range(1, upper + 1):
        delta = delta + (num - d * h) * Polynomial.monomial(1, {Z: r + s - h - 1, X: h - 1})
    return -(t + (x - z) ** 2 * delta)


def _two_term(num: int, d: int, n: int, r: int, s: int) -> Polynomial:
    out = Polynomial.zero()
    for coeff, ez, ex in (
        (-((n + 1) * d - num), r + s - n, n),
        (-(num - n * d), r + s - n - 1, n + 1),
    ):
        if coeff:
            out = out + Polynomial.monomial(coeff, {Z: ez, X: ex})
    return out


def t_delta_pieces(u: int, v: int, k: int, r: int, s: int) -> TDeltaPieces:
    """Both telescoped sides for index ``k`` and its conjugate ``u + v - k``."""
    if not u < k < v:
        raise IndexOutOfRange("need u < k < v")
    if r < 0 or s < 0:
        raise IndexOutOfRange("need r, s >= 0")
    d = v - u
    num_p = (v - k) * s + (k - u) * r
    num_q = (v - k) * r + (k - u) * s
    p, q = num_p // d, num_q // d
    return TDeltaPieces(
        p,
        q,
        _telescoped(num_p, d, r, s, p),
        _telescoped(num_q, d, r, s, q),
        _two_term(num_p, d, p, r, s),
        _two_term(num_q, d, q, r, s),
    )
