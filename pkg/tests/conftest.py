import json
from fractions import Fraction

import pytest

from src.models.grid import DiskGrid
from src.symbols.harmonic import HarmonicPolynomial
from src.symbols.radial import RadialSymbol


@pytest.fixture
def example_r():
    """1 + (2/3) z^3 + (1/3) conj(z)^3, vanishes at e^{i pi/3}"""
    return HarmonicPolynomial.from_coefficients(1, {3: Fraction(2, 3)}, {3: Fraction(1, 3)})


@pytest.fixture
def example_q():
    """1 + (2/3) z^2 + (1/3) conj(z)^3, no common boundary zero"""
    return HarmonicPolynomial.from_coefficients(1, {2: Fraction(2, 3)}, {3: Fraction(1, 3)})


@pytest.fixture
def example_p():
    """2 + z/2 + conj(z)^2/2"""
    return HarmonicPolynomial.from_coefficients(2, {1: Fraction(1, 2)}, {2: Fraction(1, 2)})


@pytest.fixture
def radial_p():
    """r^2 - 3/2 r + 1"""
    return RadialSymbol.polynomial([1, "-3/2", 1])


@pytest.fixture
def radial_q():
    """r^2 - 3/2 r + 15/28, the radial symbol shifted by 13/28"""
    return RadialSymbol.polynomial(["15/28", "-3/2", 1])


@pytest.fixture
def small_grid():
    return DiskGrid.build(16, 64)


@pytest.fixture
def symbol_file(tmp_path):
    """Write a symbol description to a temporary JSON file and return its path"""
    def write(data, name="symbol.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write
