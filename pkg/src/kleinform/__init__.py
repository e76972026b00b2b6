"""Klein's fundamental 2-form of the second kind for C_ab curves, in exact arithmetic."""

from .curve import SYMBOLIC, CurveSpec, basis_j, genus, support_d
from .exactring import Polynomial
from .klein import (
    ConstructionOptions,
    FundamentalForm,
    SecondKindBasis,
    assemble_form,
    build_g,
    r_numerator,
    second_kind_basis,
)
from .verify import VerificationReport, run_all

__all__ = [
    "SYMBOLIC",
    "CurveSpec",
    "basis_j",
    "genus",
    "support_d",
    "Polynomial",
    "ConstructionOptions",
    "FundamentalForm",
    "SecondKindBasis",
    "assemble_form",
    "build_g",
    "r_numerator",
    "second_kind_basis",
    "VerificationReport",
    "run_all",
]

__version__ = "0.1.0"
