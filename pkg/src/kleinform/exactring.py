"""Sparse multivariate polynomials with exact rational coefficients.

Polynomials are immutable maps from monomials to nonzero ``Fraction``
coefficients.  Variables are the geometric coordinates ``x, y, z, w`` and
coefficient atoms ``c_{i,j}``; atoms are ordinary commuting variables, so a
numeric curve simply never introduces them.

Monomials are ordered graded-lexicographically with variable precedence
``x, y, z, w, c_{0,0}, c_{0,1}, ...``; every serialization lists terms from the
largest monomial down.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

__all__ = [
    "Var",
    "X",
    "Y",
    "Z",
    "W",
    "atom",
    "parse_var",
    "Monomial",
    "Polynomial",
    "NotDivisible",
    "NotMonic",
    "add",
    "mul",
    "partial_derivative",
    "substitute",
    "exact_quotient",
    "reduce_monic",
    "monomial_sort_key",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient leaves a nonzero remainder."""


class NotMonic(ArithmeticError):
    """Raised when a modulus is not monic in the reduction variable."""


class Var(NamedTuple):
    """A ring variable.

    ``rank`` 0..3 are ``x, y, z, w``; rank 4 is the coefficient atom
    ``c_{i,j}``.  Tuple comparison gives the fixed variable precedence.
    """

    rank: int
    i: int = 0
    j: int = 0

    @property
    def is_atom(self) -> bool:
        return self.rank == 4

    @property
    def name(self) -> str:
        """JSON identifier: ``x`` ... ``w`` or ``c:i,j``."""
        if self.rank == 4:
            return f"c:{self.i},{self.j}"
        return "xyzw"[self.rank]

    @property
    def text(self) -> str:
        if self.rank == 4:
            return f"c_{{{self.i},{self.j}}}"
        return "xyzw"[self.rank]

    def __repr__(self) -> str:
        return self.text


X = Var(0)
Y = Var(1)
Z = Var(2)
W = Var(3)
_GEOMETRIC = {"x": X, "y": Y, "z": Z, "w": W}
_ATOM_RE = re.compile(r"^c:(\d+),(\d+)$")


def atom(i: int, j: int) -> Var:
    """The coefficient atom ``c_{i,j}``."""
    return Var(4, i, j)


@lru_cache(maxsize=None)
def parse_var(name: str) -> Var:
    if name in _GEOMETRIC:
        return _GEOMETRIC[name]
    m = _ATOM_RE.match(name)
    if m is None:
        raise ValueError(f"unknown variable identifier {name!r}")
    return atom(int(m.group(1)), int(m.group(2)))


# A monomial is a tuple of (Var, exponent) pairs sorted by Var, exponents > 0.
Monomial = tuple
ONE_MONOMIAL: Monomial = ()

Scalar = Union[int, Fraction]


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _mono_div(m1: Monomial, m2: Monomial) -> Monomial | None:
    """``m1 / m2`` if ``m2`` divides ``m1``, else None."""
    d = dict(m1)
    for v, e in m2:
        have = d.get(v, 0)
        if have < e:
            return None
        if have == e:
            del d[v]
        else:
            d[v] = have - e
    return tuple(sorted(d.items()))


def _canon_mono(pairs) -> Monomial:
    d: dict[Var, int] = {}
    for v, e in pairs:
        d[v] = d.get(v, 0) + e
    if any(e < 0 for e in d.values()):
        raise ValueError("negative exponent in monomial")
    return tuple(sorted((v, e) for v, e in d.items() if e))


def _degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def monomial_sort_key(m: Monomial, universe: tuple[Var, ...]) -> tuple:
    """Key such that larger keys are larger in graded-lex order."""
    d = dict(m)
    return (_degree(m), tuple(d.get(v, 0) for v in universe))


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


class Polynomial:
    """An immutable sparse polynomial over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, c in items:
            c = _coerce_scalar(c)
            if not c:
                continue
            mono = _canon_mono(mono)
            s = acc.get(mono, 0) + c
            if s:
                acc[mono] = s
            else:
                acc.pop(mono, None)
        self._terms = acc
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> Polynomial:
        # terms must already be canonical (no zeros, sorted monomials)
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._raw({})

    @classmethod
    def const(cls, c: Scalar) -> Polynomial:
        c = _coerce_scalar(c)
        return cls._raw({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def var(cls, v: Var | str, exp: int = 1) -> Polynomial:
        if isinstance(v, str):
            v = parse_var(v)
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return cls.const(1)
        return cls._raw({((v, exp),): Fraction(1)})

    @classmethod
    def monomial(cls, coeff: Scalar, exps: Mapping[Var, int]) -> Polynomial:
        return cls([(tuple(exps.items()), coeff)])

    # -- basic protocol ---------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def variables(self) -> tuple[Var, ...]:
        vs = {v for m in self._terms for v, _ in m}
        return tuple(sorted(vs))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical order, largest monomial first."""
        universe = self.variables()
        return sorted(
            self._terms.items(),
            key=lambda t: monomial_sort_key(t[0], universe),
            reverse=True,
        )

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        universe = self.variables()
        return max(self._terms.items(), key=lambda t: monomial_sort_key(t[0], universe))

    def first_term(self) -> Polynomial:
        """The canonically first term as a polynomial (zero for zero)."""
        if not self._terms:
            return Polynomial.zero()
        m, c = self.leading_term()
        return Polynomial._raw({m: c})

    def degree(self, v: Var | None = None) -> int:
        """Total degree, or degree in ``v``; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if v is None:
            return max(_degree(m) for m in self._terms)
        return max(dict(m).get(v, 0) for m in self._terms)

    def coefficients_in(self, v: Var) -> dict[int, Polynomial]:
        """Split as ``sum_e coeff_e * v^e``; coefficients are free of ``v``."""
        parts: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            e = 0
            rest = []
            for u, k in m:
                if u == v:
                    e = k
                else:
                    rest.append((u, k))
            parts.setdefault(e, {})[tuple(rest)] = c
        return {e: Polynomial._raw(t) for e, t in parts.items()}

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial.const(other)

    def __add__(self, other) -> Polynomial:
        other = self._lift(other)
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Polynomial:
        return self._lift(other) + (-self)

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            c = _coerce_scalar(other)
            if not c:
                return Polynomial.zero()
            return Polynomial._raw({m: v * c for m, v in self._terms.items()})
        out: dict[Monomial, Fraction] = {}
        get = out.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = get(m, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus and substitution -------------------------------------------

    def diff(self, v: Var | str) -> Polynomial:
        return partial_derivative(self, v)

    def subs(self, bindings: Mapping[Var | str, Polynomial | Scalar]) -> Polynomial:
        return substitute(self, bindings)

    # -- rendering ----------------------------------------------------------

    def to_json_obj(self) -> dict:
        out = []
        for m, c in self.sorted_terms():
            out.append({"coeff": _fmt_coeff(c), "vars": {v.name: e for v, e in m}})
        return {"terms": out}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> Polynomial:
        terms = []
        for t in obj["terms"]:
            mono = tuple((parse_var(k), int(e)) for k, e in t["vars"].items())
            terms.append((mono, Fraction(t["coeff"])))
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> Polynomial:
        return cls.from_json_obj(json.loads(text))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_fmt_term(m, c) for m, c in self.sorted_terms())

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_term(m: Monomial, c: Fraction) -> str:
    factors = [v.text if e == 1 else f"{v.text}^{e}" for v, e in m]
    if not factors:
        return _fmt_coeff(c)
    body = "*".join(factors)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{_fmt_coeff(c)}*{body}"


# -- module-level operations ----------------------------------------------------


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def partial_derivative(p: Polynomial, v: Var | str) -> Polynomial:
    """Formal derivative in ``v``; every other variable is a constant."""
    if isinstance(v, str):
        v = parse_var(v)
    out: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        for idx, (u, e) in enumerate(m):
            if u == v:
                if e == 1:
                    nm = m[:idx] + m[idx + 1:]
                else:
                    nm = m[:idx] + ((u, e - 1),) + m[idx + 1:]
                out[nm] = out.get(nm, 0) + c * e
                break
    return Polynomial._raw({m: c for m, c in out.items() if c})


def substitute(p: Polynomial, bindings: Mapping[Var | str, Polynomial | Var | Scalar]) -> Polynomial:
    """Simultaneous substitution of variables by polynomials."""
    b = {
        (parse_var(k) if isinstance(k, str) else k): (
            Polynomial.var(v) if isinstance(v, Var) else Polynomial._lift(v)
        )
        for k, v in bindings.items()
    }
    # Variable-to-variable renamings are common (swaps, diagonal) and cheap.
    renames: dict[Var, Var] = {}
    for k, v in b.items():
        if len(v.terms) == 1:
            (m, c), = v.terms.items()
            if c == 1 and len(m) == 1 and m[0][1] == 1:
                renames[k] = m[0][0]
    if len(renames) == len(b):
        return Polynomial(
            (tuple((renames.get(u, u), e) for u, e in m), c) for m, c in p.terms.items()
        )
    powers: dict[tuple[Var, int], Polynomial] = {}

    def power(v: Var, e: int) -> Polynomial:
        key = (v, e)
        if key not in powers:
            powers[key] = b[v] ** e
        return powers[key]

    result = Polynomial.zero()
    for m, c in p.terms.items():
        kept = []
        term = Polynomial.const(c)
        for u, e in m:
            if u in b:
                term = term * power(u, e)
            else:
                kept.append((u, e))
        if kept:
            term = term * Polynomial._raw({tuple(kept): Fraction(1)})
        result = result + term
    return result


def exact_quotient(num: Polynomial, den: Polynomial) -> Polynomial:
    """``q`` with ``q * den == num``; raises NotDivisible otherwise."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    universe = tuple(sorted(set(num.variables()) | set(den.variables())))

    def key(t):
        return monomial_sort_key(t[0], universe)

    lead_m, lead_c = max(den.terms.items(), key=key)
    rem = dict(num.terms)
    quot: dict[Monomial, Fraction] = {}
    while rem:
        m, c = max(rem.items(), key=key)
        qm = _mono_div(m, lead_m)
        if qm is None:
            raise NotDivisible(
                f"leading term {_fmt_term(m, c)} not divisible by {_fmt_term(lead_m, lead_c)}"
            )
        qc = c / lead_c
        quot[qm] = qc
        for dm, dc in den.terms.items():
            mm = _mono_mul(qm, dm)
            s = rem.get(mm, 0) - qc * dc
            if s:
                rem[mm] = s
            else:
                rem.pop(mm, None)
    return Polynomial._raw(quot)


def reduce_monic(p: Polynomial, v: Var | str, modulus: Polynomial) -> Polynomial:
    """Remainder of ``p`` modulo a polynomial monic in ``v``.

    The result has degree in ``v`` below that of ``modulus`` and differs from
    ``p`` by a polynomial multiple of ``modulus``.
    """
    if isinstance(v, str):
        v = parse_var(v)
    mod_parts = modulus.coefficients_in(v)
    d = max(mod_parts) if mod_parts else -1
    if d < 1 or mod_parts[d] != Polynomial.const(1):
        raise NotMonic(f"modulus is not monic in {v.text}")
    # v^d == -(lower part of modulus)
    tail = {e: -c for e, c in mod_parts.items() if e != d}
    parts = p.coefficients_in(v)
    while parts:
        e = max(parts)
        if e < d:
            break
        c = parts.pop(e)
        if c.is_zero():
            continue
        for f, t in tail.items():
            k = e - d + f
            parts[k] = parts[k] + c * t if k in parts else c * t
    vp = Polynomial.var(v)
    result = Polynomial.zero()
    for e, c in parts.items():
        if not c.is_zero():
            result = result + c * (vp ** e)
    return result


def iter_terms(p: Polynomial) -> Iterator[Polynomial]:
    """Single-term polynomials of ``p`` in canonical order."""
    for m, c in p.sorted_terms():
        yield Polynomial._raw({m: c})
