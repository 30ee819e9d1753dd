import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np

from .base import BaseSymbol
from .coefficients import Coefficient, PolarCoefficient
from .harmonic import HarmonicPolynomial, MonomialTerm
from .radial import RadialSymbol
from .sampled import SampledSymbol, SAMPLING_RULES
from ..config import AppSettings
from ..core import symbols_logger
from ..core.exceptions import ArgumentError, ParseError
from ..models.grid import DiskGrid
from ..utils.validators import Validators

Symbol = Union[HarmonicPolynomial, RadialSymbol, SampledSymbol]


def _require(mapping: Dict[str, Any], key: str, path: str):
    if not isinstance(mapping, dict):
        raise ParseError(path, "expected an object")
    if key not in mapping:
        raise ParseError(f"{path}.{key}" if path else key, "missing field")
    return mapping[key]


def _rational(value, path: str) -> Fraction:
    try:
        return Validators.parse_rational(value, path)
    except ArgumentError as e:
        raise ParseError(path, str(e)) from e


def _coefficient(raw, path: str) -> Coefficient:
    if isinstance(raw, (int, float, str)) and not isinstance(raw, bool):
        return Coefficient.of(_rational(raw, path))
    if not isinstance(raw, dict):
        raise ParseError(path, "coefficient must be a number, a rational string or an object")
    if "mod" in raw or "arg_over_pi" in raw:
        modulus = _rational(_require(raw, "mod", path), f"{path}.mod")
        arg = _rational(_require(raw, "arg_over_pi", path), f"{path}.arg_over_pi")
        if modulus < 0:
            raise ParseError(f"{path}.mod", "modulus must be nonnegative")
        return Coefficient.from_polar(PolarCoefficient(modulus, arg))
    if "re" in raw or "im" in raw:
        real = _rational(raw.get("re", 0), f"{path}.re")
        imag = _rational(raw.get("im", 0), f"{path}.im")
        if imag == 0:
            return Coefficient.of(real)
        return Coefficient(complex(float(real), float(imag)))
    raise ParseError(path, "expected {re, im} or {mod, arg_over_pi}")


def _terms(raw, key: str, exponent_key: str):
    if raw is None:
        return ()
    if not isinstance(raw, list):
        raise ParseError(key, "expected a list")
    terms = []
    previous = 0
    for index, entry in enumerate(raw):
        path = f"{key}[{index}]"
        exponent = _require(entry, exponent_key, path)
        if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 1:
            raise ParseError(f"{path}.{exponent_key}", f"exponent must be a positive integer, got {exponent!r}")
        if exponent <= previous:
            raise ParseError(f"{path}.{exponent_key}", "exponents must be strictly increasing")
        coefficient = _coefficient(_require(entry, "coef", path), f"{path}.coef")
        if coefficient.is_zero:
            raise ParseError(f"{path}.coef", "coefficient must be nonzero")
        terms.append(MonomialTerm(exponent, coefficient))
        previous = exponent
    return tuple(terms)


def _parse_harmonic(data: Dict[str, Any]) -> HarmonicPolynomial:
    p0 = _coefficient(data.get("p0", 0), "p0")
    return HarmonicPolynomial(
        p0,
        _terms(data.get("analytic"), "analytic", "m"),
        _terms(data.get("coanalytic"), "coanalytic", "n"),
    )


def _parse_radial(data: Dict[str, Any]) -> RadialSymbol:
    if "coeffs" in data:
        coefficients = data["coeffs"]
        if not isinstance(coefficients, list) or not coefficients:
            raise ParseError("coeffs", "expected a non-empty list of numbers")
        exact = tuple(_rational(c, f"coeffs[{k}]") for k, c in enumerate(coefficients))
        return RadialSymbol(coefficients=tuple(float(c) for c in exact), exact_coefficients=exact)
    samples = _require(data, "samples", "")
    if not isinstance(samples, list) or not samples:
        raise ParseError("samples", "expected a non-empty list of [r, g] pairs")
    radii, values = [], []
    for index, pair in enumerate(samples):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"samples[{index}]", "expected an [r, g] pair")
        radii.append(float(_rational(pair[0], f"samples[{index}][0]")))
        values.append(float(_rational(pair[1], f"samples[{index}][1]")))
    try:
        return RadialSymbol.sampled(radii, values, data.get("interpolation", "linear"))
    except ArgumentError as e:
        raise ParseError("samples", str(e)) from e


def _parse_sampled(data: Dict[str, Any]) -> SampledSymbol:
    grid_spec = _require(data, "grid", "")
    try:
        grid = DiskGrid.build(
            int(_require(grid_spec, "rings", "grid")),
            int(_require(grid_spec, "angles", "grid")),
            grid_spec.get("boundary_gap"),
        )
    except (ArgumentError, TypeError, ValueError) as e:
        raise ParseError("grid", str(e)) from e
    raw_values = _require(data, "values", "")
    if not isinstance(raw_values, list):
        raise ParseError("values", "expected a list of [re, im] pairs")
    try:
        values = np.array([complex(float(v[0]), float(v[1])) if isinstance(v, list) else complex(float(v))
                           for v in raw_values])
    except (TypeError, ValueError, IndexError) as e:
        raise ParseError("values", f"malformed value list: {e}") from e
    if values.size != grid.node_count:
        raise ParseError("values", f"{values.size} values given for {grid.node_count} grid nodes")
    rule = data.get("rule", "bilinear")
    if rule not in SAMPLING_RULES:
        raise ParseError("rule", f"unknown rule {rule!r}")
    return SampledSymbol(grid, values, rule)


_PARSERS = {
    "harmonic": _parse_harmonic,
    "radial": _parse_radial,
    "sampled": _parse_sampled,
}


def parse_symbol(text: Union[str, bytes, Dict[str, Any]]) -> Symbol:
    """
    Parse a symbol description (JSON text or an already decoded object).

    Raises:
        ParseError: on malformed input; ``path`` names the offending field
    """
    if isinstance(text, (str, bytes)):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError("", f"invalid JSON: {e}") from e
    else:
        data = text
    if not isinstance(data, dict):
        raise ParseError("", "symbol description must be a JSON object")
    schema = data.get("schema", AppSettings.SYMBOL_SCHEMA)
    if schema != AppSettings.SYMBOL_SCHEMA:
        raise ParseError("schema", f"unsupported schema {schema!r}, expected {AppSettings.SYMBOL_SCHEMA!r}")
    kind = _require(data, "type", "")
    parser = _PARSERS.get(kind)
    if parser is None:
        raise ParseError("type", f"unknown symbol type {kind!r}")
    try:
        symbol = parser(data)
    except ArgumentError as e:
        raise ParseError(kind, str(e)) from e
    symbols_logger.debug(f"Symbol geladen: {symbol.describe()}")
    return symbol


def load_symbol(path: Union[str, Path]) -> Symbol:
    """Read and parse a symbol file; IO problems become ParseError as well"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        symbols_logger.error(f"Symboldatei nicht lesbar: {path}: {e}")
        raise ParseError("", f"cannot read symbol file {path}: {e}") from e
    return parse_symbol(text)


def _number(value: Fraction):
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _serialize_coefficient(coefficient: Coefficient):
    if coefficient.exact_real is not None:
        return _number(coefficient.exact_real)
    if coefficient.polar is not None:
        return {"mod": _number(coefficient.polar.modulus), "arg_over_pi": _number(coefficient.polar.arg_over_pi)}
    return {"re": coefficient.value.real, "im": coefficient.value.imag}


def serialize_symbol(symbol: BaseSymbol) -> Dict[str, Any]:
    """Inverse of parse_symbol: parse_symbol(serialize_symbol(s)) describes the same symbol"""
    data: Dict[str, Any] = {"schema": AppSettings.SYMBOL_SCHEMA}
    if isinstance(symbol, HarmonicPolynomial):
        data["type"] = "harmonic"
        data["p0"] = _serialize_coefficient(symbol.p0)
        data["analytic"] = [{"m": t.exponent, "coef": _serialize_coefficient(t.coefficient)} for t in symbol.analytic]
        data["coanalytic"] = [{"n": t.exponent, "coef": _serialize_coefficient(t.coefficient)} for t in symbol.coanalytic]
    elif isinstance(symbol, RadialSymbol):
        data["type"] = "radial"
        if symbol.is_polynomial:
            data["coeffs"] = ([_number(c) for c in symbol.exact_coefficients] if symbol.is_exact
                              else list(symbol.coefficients))
        else:
            data["samples"] = [[float(r), float(g)] for r, g in zip(symbol.sample_radii, symbol.sample_values)]
            data["interpolation"] = symbol.interpolation
    elif isinstance(symbol, SampledSymbol):
        if symbol.grid.max_angles is None:
            raise ArgumentError("only grids built from rings/angles/boundary_gap can be serialized")
        data["type"] = "sampled"
        data["grid"] = {
            "rings": int(symbol.grid.radii.size),
            "angles": int(symbol.grid.max_angles),
            "boundary_gap": symbol.grid.boundary_gap,
        }
        data["values"] = [[float(v.real), float(v.imag)] for v in symbol.values]
        data["rule"] = symbol.rule
    else:
        raise ArgumentError(f"cannot serialize symbol kind {symbol.kind!r}")
    return data
