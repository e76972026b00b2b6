"""Shared corpus and mutation helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from kleinform.curve import CurveSpec, support_d
from kleinform.exactring import Polynomial, W, X, Y, Z, atom
from kleinform.klein import FundamentalForm, SecondKindBasis, assemble_form
from kleinform.verify import check_normalization, check_oracle_identity, check_symmetry


def c(i: int, j: int) -> Polynomial:
    return Polynomial.var(atom(i, j))


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if q or not nonzero:
            return q


def random_numeric_curve(a: int, b: int, rng: random.Random, density: float = 0.7) -> CurveSpec:
    coeffs = {}
    for ij in sorted(support_d(a, b)):
        if ij == (0, a):
            coeffs[ij] = 1
        elif ij == (b, 0):
            coeffs[ij] = random_rational(rng, nonzero=True)
        elif rng.random() < density:
            coeffs[ij] = random_rational(rng)
    return CurveSpec(a, b, coeffs)


def cyclic_curve(a: int, b: int) -> CurveSpec:
    """``y^a + f_0(x)`` with every ``c_{i,0}`` symbolic."""
    coeffs = {(0, a): 1}
    coeffs.update({(i, 0): "symbolic" for i in range(b + 1)})
    return CurveSpec(a, b, coeffs)


def trigonal_curve(b: int) -> CurveSpec:
    """``y^3 + f_1(x) y + f_0(x)`` with symbolic coefficients."""
    return CurveSpec.symbolic(3, b, {ij: 0 for ij in support_d(3, b) if ij[1] == 2})


def hyperelliptic_curve(g: int) -> CurveSpec:
    b = 2 * g + 1
    coeffs = {(0, 2): 1}
    coeffs.update({(i, 0): "symbolic" for i in range(b + 1)})
    return CurveSpec(2, b, coeffs)


def _nonzero(rng: random.Random) -> Fraction:
    while True:
        q = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
        if q:
            return q


def mutate_term(p: Polynomial, variables, rng: random.Random, max_exp: int = 3) -> Polynomial:
    """Perturb one coefficient of ``p`` or add one fresh monomial."""
    terms = p.sorted_terms()
    if terms and rng.random() < 0.5:
        mono, _ = rng.choice(terms)
        delta = Polynomial({mono: _nonzero(rng)})
    else:
        exps = {v: rng.randint(0, max_exp) for v in variables}
        delta = Polynomial.monomial(_nonzero(rng), exps)
    return p + delta


def random_mutation(
    spec: CurveSpec, basis: SecondKindBasis, form: FundamentalForm, rng: random.Random
) -> tuple[str, SecondKindBasis, FundamentalForm]:
    if rng.random() < 0.5:
        ij = rng.choice(list(basis.entries))
        mutated = mutate_term(basis.entries[ij], (Z, W), rng)
        return f"r:{ij[0]},{ij[1]}", basis.replace(ij, mutated), form
    mutated = mutate_term(form.numerator, (X, Y, Z, W), rng)
    return "G", basis, FundamentalForm(mutated, spec=spec)


def caught(spec: CurveSpec, basis: SecondKindBasis, form: FundamentalForm) -> list[str]:
    """Names of the checks that reject the given basis and form."""
    reports = [
        check_symmetry(form),
        check_symmetry(assemble_form(spec, basis), "symmetry[assembled]"),
        check_normalization(spec, form),
        check_oracle_identity(spec, basis, form),
    ]
    return [r.check for r in reports if r.status.value == "fail"]
