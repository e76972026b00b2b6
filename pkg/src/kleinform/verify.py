"""Exact identity checks for the constructed 2-form and second-kind basis.

Every check is a polynomial identity evaluated exactly; there are no
tolerances.  A failing check carries the nonzero residue as its witness.
"""

from __future__ import annotations

import enum
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .curve import CurveSpec, basis_j, genus, order_value
from .exactring import W, X, Y, Z, Polynomial, reduce_monic
from .klein import (
    DEFAULT_OPTIONS,
    ConstructionOptions,
    FundamentalForm,
    SecondKindBasis,
    assemble_form,
    build_g,
    build_i,
    diagonal,
    mod_bar,
    mod_under,
    omega_data,
    prop2_rhs,
    second_kind_basis,
    sum_i,
    swap,
    t_delta_pieces,
)

__all__ = [
    "Status",
    "Mode",
    "Family",
    "FamilyMismatch",
    "VerificationReport",
    "CHECK_NAMES",
    "check_orders",
    "check_homogeneity",
    "check_symmetry",
    "check_normalization",
    "check_oracle_identity",
    "check_prop2",
    "check_t_delta_identities",
    "sample_t_delta_tuples",
    "check_special_forms",
    "detect_families",
    "hyperelliptic_classical_form",
    "run_all",
]


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "notApplicable"


class Mode(str, enum.Enum):
    EXACT = "exact"
    MODULO_CURVE = "moduloCurve"


class Family(str, enum.Enum):
    HYPERELLIPTIC = "hyperelliptic"
    GENERALIZED_HYPERELLIPTIC = "generalizedHyperelliptic"
    CYCLIC = "cyclic"
    TRIGONAL = "trigonal"


class FamilyMismatch(ValueError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    check: str
    status: Status
    mode: Mode = Mode.EXACT
    witness: Polynomial | None = None
    elapsed_ms: int = 0
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.status is Status.FAIL and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def first_term(self) -> Polynomial | None:
        return None if self.witness is None else self.witness.first_term()

    def to_json_obj(self, timings: bool = True) -> dict:
        obj = {
            "check": self.check,
            "status": self.status.value,
            "mode": self.mode.value,
            "witness": None if self.witness is None else self.witness.to_json_obj(),
            "elapsedMs": self.elapsed_ms if timings else 0,
        }
        if self.notes:
            obj["notes"] = list(self.notes)
        return obj


def _timed(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
    def wrapper(*args, **kwargs) -> VerificationReport:
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        ms = int(round((time.perf_counter() - t0) * 1000))
        return VerificationReport(rep.check, rep.status, rep.mode, rep.witness, ms, rep.notes)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _verdict(name: str, residue: Polynomial, mode: Mode = Mode.EXACT, notes=()) -> VerificationReport:
    if residue.is_zero():
        return VerificationReport(name, Status.PASS, mode, None, notes=tuple(notes))
    return VerificationReport(name, Status.FAIL, mode, residue, notes=tuple(notes))


# ---------------------------------------------------------------------------
# curve-level checks


@_timed
def check_orders(spec: CurveSpec) -> VerificationReport:
    """``#J(a, b) = g`` by enumeration and the orders at infinity are distinct and >= 0."""
    a, b = spec.a, spec.b
    brute = [
        (i, j)
        for i in range(b + 1)
        for j in range(a + 1)
        if i >= 0 and j >= 0 and a * i + b * j <= a * b - a - b
    ]
    J = basis_j(a, b)
    orders = [order_value(a, b, i, j) for i, j in J]
    bad = None
    if sorted(brute) != sorted(J) or len(J) != genus(a, b):
        bad = next(iter(set(brute) ^ set(J)), (0, 0))
    else:
        seen: set[int] = set()
        for ij, o in zip(J, orders):
            if o < 0 or o in seen:
                bad = ij
                break
            seen.add(o)
    if bad is None:
        return VerificationReport("orders", Status.PASS)
    return VerificationReport("orders", Status.FAIL, witness=Polynomial.monomial(1, {X: bad[0], Y: bad[1]}))


@_timed
def check_homogeneity(spec: CurveSpec) -> VerificationReport:
    result = spec.check_homogeneity()
    if result is None:
        return VerificationReport("homogeneity", Status.NOT_APPLICABLE, notes=("numeric coefficients carry no weight",))
    if result:
        return VerificationReport("homogeneity", Status.PASS)
    a, b = spec.a, spec.b
    from .curve import is_weighted_homogeneous

    offending = Polynomial(
        (m, c) for m, c in spec.F_xy.terms.items()
        if not is_weighted_homogeneous(Polynomial([(m, c)]), a, b)
    )
    return VerificationReport("homogeneity", Status.FAIL, witness=offending)


# ---------------------------------------------------------------------------
# 2-form checks


@_timed
def check_symmetry(form: FundamentalForm, name: str = "symmetry") -> VerificationReport:
    """Numerator invariant under ``(x, y) <-> (z, w)``; the witness is ``G - swap(G)``."""
    g = form.numerator
    return _verdict(name, g - swap(g))


@_timed
def check_normalization(spec: CurveSpec, form: FundamentalForm, name: str = "normalization") -> VerificationReport:
    """On the diagonal the numerator reduces to ``F_y(x, y)^2`` modulo the curve."""
    F = spec.F_xy
    Fy = F.diff(Y)
    residue = reduce_monic(diagonal(form.numerator) - Fy * Fy, Y, F)
    return _verdict(name, residue, Mode.MODULO_CURVE)


@_timed
def check_oracle_identity(
    spec: CurveSpec, basis: SecondKindBasis, form: FundamentalForm
) -> VerificationReport:
    """``sum I(u, v) + (x - z)^2 sum x^i y^j r_{i,j} == G``, exactly or modulo ``F(z, w)``.

    Also confirms that the ``I`` blocks reproduce the ``dOmega/dz`` numerator
    modulo ``F(z, w)``.
    """
    F_zw = spec.F_zw
    notes = []
    si = sum_i(spec)
    omega = omega_data(spec).numerator
    omega_gap = si - omega
    if omega_gap.is_zero():
        notes.append("sum of I blocks equals the dOmega/dz numerator exactly")
    else:
        omega_gap = reduce_monic(omega_gap, W, F_zw)
        if not omega_gap.is_zero():
            return VerificationReport(
                "oracle", Status.FAIL, Mode.MODULO_CURVE, omega_gap,
                notes=("sum of I blocks disagrees with the dOmega/dz numerator",),
            )
        notes.append("sum of I blocks equals the dOmega/dz numerator modulo F(z,w)")

    delta = assemble_form(spec, basis).numerator - form.numerator
    if delta.is_zero():
        return VerificationReport("oracle", Status.PASS, Mode.EXACT, notes=tuple(notes))
    reduced = reduce_monic(delta, W, F_zw)
    if reduced.is_zero():
        notes.append("identity holds only modulo F(z,w)")
        return VerificationReport("oracle", Status.PASS, Mode.MODULO_CURVE, notes=tuple(notes))
    return VerificationReport("oracle", Status.FAIL, Mode.MODULO_CURVE, reduced, notes=tuple(notes))


@_timed
def check_prop2(spec: CurveSpec) -> VerificationReport:
    """``I(m, n) + I(n, m)`` against its closed form for every ``0 <= m <= n <= a``."""
    a = spec.a
    for n in range(a + 1):
        for m in range(n + 1):
            residue = build_i(spec, m, n) + build_i(spec, n, m) - prop2_rhs(spec, m, n)
            if not residue.is_zero():
                return VerificationReport("prop2", Status.FAIL, witness=residue, notes=(f"m={m}, n={n}",))
    return VerificationReport("prop2", Status.PASS)


def sample_t_delta_tuples(count: int = 120, max_v: int = 6, max_rs: int = 12, seed: int = 0) -> list[tuple[int, int, int, int, int]]:
    """Deterministic sample of ``(u, v, k, r, s)`` with ``u < k < v``."""
    space = sum((v - u - 1) for u in range(max_v + 1) for v in range(u + 2, max_v + 1)) * (max_rs + 1) ** 2
    if count > space:
        raise ValueError(f"only {space} distinct tuples exist for these ranges")
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        u = rng.randint(0, max_v - 2)
        v = rng.randint(u + 2, max_v)
        k = rng.randint(u + 1, v - 1)
        r, s = rng.randint(0, max_rs), rng.randint(0, max_rs)
        t = (u, v, k, r, s)
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


@_timed
def check_t_delta_identities(samples: Iterable[tuple[int, int, int, int, int]]) -> VerificationReport:
    """Telescoped cross-block pieces equal their two-term closed forms."""
    n = 0
    for (u, v, k, r, s) in samples:
        n += 1
        d = v - u
        pieces = t_delta_pieces(u, v, k, r, s)
        num_p = (v - k) * s + (k - u) * r
        num_q = (v - k) * r + (k - u) * s
        sandwich = (
            pieces.p * d <= num_p < (pieces.p + 1) * d
            and pieces.q * d <= num_q < (pieces.q + 1) * d
            and pieces.p + pieces.q in (r + s, r + s - 1)
        )
        tag = f"(u,v,k,r,s)=({u},{v},{k},{r},{s})"
        if not sandwich:
            return VerificationReport(
                "tdelta", Status.FAIL, witness=Polynomial.const(pieces.p - pieces.q),
                notes=(f"floor bounds violated at {tag}",),
            )
        for lhs, rhs in ((pieces.lhs_k, pieces.rhs_k), (pieces.lhs_conjugate, pieces.rhs_conjugate)):
            residue = lhs - rhs
            if not residue.is_zero():
                return VerificationReport("tdelta", Status.FAIL, witness=residue, notes=(tag,))
    return VerificationReport("tdelta", Status.PASS, notes=(f"{n} tuples",))


# ---------------------------------------------------------------------------
# closed-form specializations


def detect_families(spec: CurveSpec) -> list[Family]:
    rows = {j for (_, j) in spec.coefficients}
    fams = []
    if spec.a == 2:
        if rows <= {0, 2}:
            fams.append(Family.HYPERELLIPTIC)
        fams.append(Family.GENERALIZED_HYPERELLIPTIC)
    if rows <= {0, spec.a} and spec.a >= 2:
        if spec.a != 2:
            fams.append(Family.CYCLIC)
    if spec.a == 3 and 2 not in rows:
        fams.append(Family.TRIGONAL)
    return fams


def _m(coeff, **exps) -> Polynomial:
    vs = {"x": X, "y": Y, "z": Z, "w": W}
    return Polynomial.monomial(coeff, {vs[k]: e for k, e in exps.items()})


def _cdiv(p: int, q: int) -> int:
    return -(-p // q)


class _Ledger:
    """Collects closed-form pieces and logs every correction that changes them."""

    def __init__(self):
        self.notes: list[str] = []

    def piece(self, printed: Polynomial, corrected: Polynomial, what: str) -> Polynomial:
        if printed != corrected:
            self.notes.append(f"correction applied: {what}")
        return corrected


def _hyperelliptic_g(spec: CurveSpec, led: _Ledger) -> Polynomial:
    # y^2 = sum c_k x^k, i.e. c_k = -c_{k,0}
    out = _m(2, y=1, w=1)
    printed = Polynomial.zero()
    corrected = Polynomial.zero()
    for k, c in spec.column_terms(0):
        ck = -c
        if k == 0:
            out = out + 2 * ck
        elif k % 2 == 0:
            printed = printed + 2 * ck * 2 * _m(1, x=k // 2, z=k // 2)
            corrected = corrected + 2 * ck * _m(1, x=k // 2, z=k // 2)
        else:
            out = out + ck * (_m(1, x=(k + 1) // 2, z=(k - 1) // 2) + _m(1, x=(k - 1) // 2, z=(k + 1) // 2))
    return out + led.piece(printed, corrected, "even-k sum of G carries coefficient 2, not 2*2")


def _hyperelliptic_r(spec: CurveSpec) -> dict[tuple[int, int], Polynomial]:
    """Classical numerators over ``F_w = 2w``: ``sum_{k=i}^{2g-i} c_{k+1+i}(k+1-i) z^k`` for ``du_i = x^(i-1) dx / 2y``."""
    g = spec.genus
    c = {k: -v for k, v in spec.column_terms(0)}
    out = {}
    for i in range(1, g + 1):
        acc = Polynomial.zero()
        for k in range(i, 2 * g - i + 1):
            ck = c.get(k + 1 + i)
            if ck is not None:
                acc = acc + ck * _m(k + 1 - i, z=k)
        out[(i - 1, 0)] = acc
    return out


def hyperelliptic_classical_form(spec: CurveSpec) -> tuple[FundamentalForm, dict[tuple[int, int], Polynomial]]:
    """2-form built from ``Omega = (y + w) / (2 (x - z) y)`` and the classical basis.

    Independent of the general construction: the numerator of ``dOmega/dz``
    is ``(x - z) f'(z) + 2w (y + w)`` reduced modulo ``F(z, w)``.
    """
    if Family.HYPERELLIPTIC not in detect_families(spec):
        raise FamilyMismatch("not a hyperelliptic curve y^2 = f(x)")
    f = Polynomial.zero()
    for k, c in spec.column_terms(0):
        f = f - c * _m(1, z=k)
    x_minus_z = _m(1, x=1) - _m(1, z=1)
    w = _m(1, w=1)
    dOmega = reduce_monic(x_minus_z * f.diff(Z) + 2 * w * (_m(1, y=1) + w), W, spec.F_zw)
    rs = _hyperelliptic_r(spec)
    corr = Polynomial.zero()
    for (i, _), r in rs.items():
        corr = corr + _m(1, x=i) * r
    return FundamentalForm(dOmega + x_minus_z ** 2 * corr, spec=spec, source="classical"), rs


def _gen_hyperelliptic(spec: CurveSpec, led: _Ledger):
    c0 = dict(spec.column_terms(0))
    c1 = dict(spec.column_terms(1))
    f1, g1 = spec.f(1), spec.g(1)
    y, w = _m(1, y=1), _m(1, w=1)
    G = 2 * y * w + f1 * w + g1 * y + f1 * g1
    for r, c in c0.items():
        if r % 2:
            G = G - c * (_m(1, z=(r + 1) // 2, x=(r - 1) // 2) + _m(1, z=(r - 1) // 2, x=(r + 1) // 2))
        else:
            G = G - 2 * c * _m(1, z=r // 2, x=r // 2)
    rs = {}
    for (i, j) in spec.basis_indices:
        acc = Polynomial.zero()
        for r, cr in c1.items():
            if r >= i + 2:
                for s, cs in c1.items():
                    acc = acc + cr * cs * _m(r - i - 1, z=r + s - i - 2)
        printed = corrected = Polynomial.zero()
        for r, cr in c1.items():
            if r >= i + 2:
                printed = printed + cr * _m(r - i - 1, z=r - i - 2)
                corrected = corrected + cr * _m(r - i - 1, z=r - i - 2, w=1)
        acc = acc + led.piece(printed, corrected, f"r_{{{i},0}}: second sum carries the factor w")
        printed = corrected = Polynomial.zero()
        for r, cr in c0.items():
            if i + 2 <= r <= 2 * i + 2:
                printed = printed + cr * (2 * i + 2 - r)
            if r >= 2 * i + 2:
                corrected = corrected + cr * _m(2 * i + 2 - r, z=r - i - 2)
        acc = acc + led.piece(
            printed, corrected,
            f"r_{{{i},0}}: third sum runs over r >= 2i+2 with factor z^(r-i-2)",
        )
        rs[(i, j)] = acc
    return G, rs


def _cyclic(spec: CurveSpec, led: _Ledger):
    a = spec.a
    c0 = dict(spec.column_terms(0))
    G_printed = Polynomial.zero()
    for r, c in c0.items():
        for k in range(1, a):
            al, be = (a - k) * r, k * r
            blk = _m(mod_bar(al, a), z=_cdiv(al, a), x=be // a, w=k - 1, y=a - k - 1)
            blk = blk + _m(mod_under(be, a), z=al // a, x=_cdiv(be, a), w=k - 1, y=a - k - 1)
            G_printed = G_printed - c * blk
    G = led.piece(G_printed, G_printed + _m(a, y=a - 1, w=a - 1), f"G includes the diagonal block {a}*y^{a - 1}*w^{a - 1}")
    rs = {}
    for (i, j) in spec.basis_indices:
        printed = corrected = Polynomial.zero()
        lower = max(i + 2, _cdiv(a * (i + 1), a - 1 - j))
        for r, c in c0.items():
            k = a * r - a - r - a * i - r * j
            if i + 2 <= r:
                term = -c * _m(k, z=r - 2 - i, w=a - 2 - j)
                printed = printed + term
                if r >= lower:
                    corrected = corrected + term
        rs[(i, j)] = led.piece(printed, corrected, f"r_{{{i},{j}}}: sum starts at r >= {lower} (region (a-1-j)r >= a(i+1))")
    return G, rs


def _trigonal(spec: CurveSpec, led: _Ledger):
    c0 = dict(spec.column_terms(0))
    c1 = dict(spec.column_terms(1))
    f1, g1 = spec.f(1), spec.g(1)
    y, w = _m(1, y=1), _m(1, w=1)
    head = f1 * g1 + f1 * w * w + g1 * y * y + 3 * y * y * w * w
    G = head
    for r, c in c0.items():
        G = G - c * (
            _m(mod_bar(2 * r, 3), z=_cdiv(2 * r, 3), x=r // 3, y=1)
            + _m(mod_under(r, 3), z=2 * r // 3, x=_cdiv(r, 3), y=1)
        )
        G = G - c * (
            _m(mod_bar(r, 3), z=_cdiv(r, 3), x=2 * r // 3, w=1)
            + _m(mod_under(2 * r, 3), z=r // 3, x=_cdiv(2 * r, 3), w=1)
        )
    for r, c in c1.items():
        G = G - c * (
            _m(mod_bar(r, 2), z=_cdiv(r, 2), x=r // 2, w=1, y=1)
            + _m(mod_under(r, 2), z=r // 2, x=_cdiv(r, 2), w=1, y=1)
        )
    # residue-class form of the same display
    cond = head
    for r, c in c0.items():
        if r % 3 == 0:
            printed = c * (_m(3, z=2 * r // 3, x=r // 3, y=1) + _m(3, z=2 * r // 3, x=r // 3, w=1))
            corrected = c * (_m(3, z=2 * r // 3, x=r // 3, y=1) + _m(3, z=r // 3, x=2 * r // 3, w=1))
            cond = cond - led.piece(printed, corrected, "r=3m block: w-term reads 3 z^(r/3) x^(2r/3) w")
        elif r % 3 == 1:
            cond = cond - c * (
                _m(2, z=(2 * r + 1) // 3, x=(r - 1) // 3, y=1) + _m(1, z=(2 * r - 2) // 3, x=(r + 2) // 3, y=1)
                + _m(1, z=(r + 2) // 3, x=(2 * r - 2) // 3, w=1) + _m(2, z=(r - 1) // 3, x=(2 * r + 1) // 3, w=1)
            )
        else:
            cond = cond - c * (
                _m(1, z=(2 * r + 2) // 3, x=(r - 2) // 3, y=1) + _m(2, z=(2 * r - 1) // 3, x=(r + 1) // 3, y=1)
                + _m(2, z=(r + 1) // 3, x=(2 * r - 1) // 3, w=1) + _m(1, z=(r - 2) // 3, x=(2 * r + 2) // 3, w=1)
            )
    for r, c in c1.items():
        if r % 2 == 0:
            cond = cond - 2 * c * _m(1, z=r // 2, x=r // 2, w=1, y=1)
        else:
            cond = cond - c * (_m(1, z=(r + 1) // 2, x=(r - 1) // 2, w=1, y=1) + _m(1, z=(r - 1) // 2, x=(r + 1) // 2, w=1, y=1))

    rs = {}
    for (i, j) in spec.basis_indices:
        if j == 0:
            printed = corrected = Polynomial.zero()
            for r, cr in c1.items():
                for s, cs in c1.items():
                    t = cr * cs * _m(r - i - 1, z=r + s - i - 2) if r >= i + 2 else Polynomial.zero()
                    corrected = corrected + t
                    if r >= 2 * i + 2:
                        printed = printed + t
                t = cr * _m(r - i - 1, z=r - i - 2, w=2) if r >= i + 2 else Polynomial.zero()
                corrected = corrected + t
                if r >= 2 * i + 2:
                    printed = printed + t
            acc = led.piece(printed, corrected, f"r_{{{i},0}}: q-sums start at r >= i+2")
            printed = corrected = Polynomial.zero()
            for r, cr in c0.items():
                t = cr * _m(3 * i + 3 - 2 * r, z=r - i - 2, w=1) if r >= i + 2 else Polynomial.zero()
                if r <= (3 * (i + 1)) // 2:
                    printed = printed + t
                if 2 * r >= 3 * (i + 1):
                    corrected = corrected + t
            acc = acc + led.piece(printed, corrected, f"r_{{{i},0}}: p-sum runs over 2r >= 3(i+1)")
        elif j == 1:
            acc = Polynomial.zero()
            printed = corrected = Polynomial.zero()
            for r, cr in c0.items():
                t = cr * _m(3 * i + 3 - r, z=r - i - 2) if r >= i + 2 else Polynomial.zero()
                if r <= 3 * i + 3:
                    printed = printed + t
                if r >= 3 * i + 3:
                    corrected = corrected + t
            acc = acc + led.piece(printed, corrected, f"r_{{{i},1}}: p-sum runs over r >= 3i+3")
            printed = corrected = Polynomial.zero()
            for r, cr in c1.items():
                t = cr * _m(2 * i + 2 - r, z=r - i - 2, w=1) if r >= i + 2 else Polynomial.zero()
                if r <= 2 * i + 2:
                    printed = printed + t
                if r >= 2 * i + 2:
                    corrected = corrected + t
            acc = acc + led.piece(printed, corrected, f"r_{{{i},1}}: q-sum runs over r >= 2i+2")
        else:
            raise FamilyMismatch(f"trigonal basis index ({i},{j}) unexpected")
        rs[(i, j)] = acc
    return G, rs, cond


def _compare(name: str, expected: Polynomial, actual: Polynomial, failures: list):
    if expected != actual:
        failures.append((name, actual - expected))


@_timed
def check_special_forms(
    spec: CurveSpec, family: Family | str, opts: ConstructionOptions = DEFAULT_OPTIONS
) -> VerificationReport:
    """Agreement of the general construction with a family's closed forms.

    Printed closed forms that contradict the defining properties are
    corrected; every correction that changes the value is logged in the notes.
    """
    family = Family(family)
    if family not in detect_families(spec):
        raise FamilyMismatch(f"curve ({spec.a},{spec.b}) is not of {family.value} shape")
    name = f"specialForms[{family.value}]"
    led = _Ledger()
    basis = second_kind_basis(spec, opts)
    G = build_g(spec, opts).numerator
    failures: list[tuple[str, Polynomial]] = []

    if family is Family.HYPERELLIPTIC:
        _compare("G display", _hyperelliptic_g(spec, led), G, failures)
        classical, rs = hyperelliptic_classical_form(spec)
        for ij, r in rs.items():
            _compare(f"classical r_{{{ij[0]},{ij[1]}}}", r, basis.entries[ij], failures)
        for rep in (check_symmetry(classical, "classical symmetry"), check_normalization(spec, classical, "classical normalization")):
            if not rep.passed:
                failures.append((rep.check, rep.witness))
        _compare("classical G", classical.numerator, G, failures)
    elif family is Family.GENERALIZED_HYPERELLIPTIC:
        Gc, rs = _gen_hyperelliptic(spec, led)
        _compare("G display", Gc, G, failures)
        for ij, r in rs.items():
            _compare(f"r_{{{ij[0]},{ij[1]}}}", r, basis.entries[ij], failures)
    elif family is Family.CYCLIC:
        Gc, rs = _cyclic(spec, led)
        _compare("G display", Gc, G, failures)
        for ij, r in rs.items():
            _compare(f"r_{{{ij[0]},{ij[1]}}}", r, basis.entries[ij], failures)
    else:
        Gc, rs, cond = _trigonal(spec, led)
        _compare("G display", Gc, G, failures)
        _compare("G residue-class display", cond, G, failures)
        for ij, r in rs.items():
            _compare(f"r_{{{ij[0]},{ij[1]}}}", r, basis.entries[ij], failures)

    notes = list(led.notes)
    if failures:
        what, residue = failures[0]
        notes.append(f"mismatch in {what}")
        return VerificationReport(name, Status.FAIL, witness=residue, notes=tuple(notes))
    return VerificationReport(name, Status.PASS, notes=tuple(notes))


# ---------------------------------------------------------------------------

CHECK_NAMES = ("orders", "homogeneity", "symmetry", "normalization", "oracle", "prop2", "tdelta", "special")


def _error_report(name: str, exc: Exception) -> VerificationReport:
    return VerificationReport(
        name, Status.FAIL, witness=Polynomial.zero(), notes=(f"{type(exc).__name__}: {exc}",)
    )


def run_all(
    spec: CurveSpec,
    opts: ConstructionOptions = DEFAULT_OPTIONS,
    checks: Sequence[str] | None = None,
    seed: int = 0,
    t_delta_count: int = 120,
) -> list[VerificationReport]:
    """Run every applicable check in a fixed order; errors become failed reports."""
    selected = set(CHECK_NAMES if checks is None else checks)
    unknown = selected - set(CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    reports: list[VerificationReport] = []
    cache: dict[str, object] = {}

    def basis() -> SecondKindBasis:
        if "basis" not in cache:
            cache["basis"] = second_kind_basis(spec, opts)
        return cache["basis"]

    def form() -> FundamentalForm:
        if "form" not in cache:
            cache["form"] = build_g(spec, opts)
        return cache["form"]

    def run(name: str, thunk: Callable[[], VerificationReport]):
        try:
            reports.append(thunk())
        except Exception as exc:  # noqa: BLE001 - a broken check must not abort the suite
            reports.append(_error_report(name, exc))

    if "orders" in selected:
        run("orders", lambda: check_orders(spec))
    if "homogeneity" in selected:
        run("homogeneity", lambda: check_homogeneity(spec))
    if "symmetry" in selected:
        run("symmetry", lambda: check_symmetry(form()))
        run("symmetry[assembled]", lambda: check_symmetry(assemble_form(spec, basis()), "symmetry[assembled]"))
    if "normalization" in selected:
        run("normalization", lambda: check_normalization(spec, form()))
    if "oracle" in selected:
        run("oracle", lambda: check_oracle_identity(spec, basis(), form()))
    if "prop2" in selected:
        run("prop2", lambda: check_prop2(spec))
    if "tdelta" in selected:
        samples = sample_t_delta_tuples(t_delta_count, max_v=spec.a + 2, max_rs=spec.b + 3, seed=seed)
        run("tdelta", lambda: check_t_delta_identities(samples))
    if "special" in selected:
        for fam in detect_families(spec):
            run(f"specialForms[{fam.value}]", lambda fam=fam: check_special_forms(spec, fam, opts))
    return reports
