from __future__ import annotations

import pytest

from kleinform.curve import CurveSpec

from helpers import hyperelliptic_curve


@pytest.fixture
def elliptic() -> CurveSpec:
    return hyperelliptic_curve(1)


@pytest.fixture
def elliptic_numeric() -> CurveSpec:
    # y^2 = x^3 + 1
    return CurveSpec(2, 3, {(0, 2): 1, (3, 0): -1, (0, 0): -1})

