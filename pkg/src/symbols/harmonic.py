from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .base import BaseSymbol
from .coefficients import Coefficient
from ..core import symbols_logger
from ..core.exceptions import ArgumentError
from ..models.base import BaseModel


@dataclass(frozen=True)
class MonomialTerm(BaseModel):
    exponent: int
    coefficient: Coefficient


TermSpec = Union[Mapping[int, object], Iterable[Tuple[int, object]], None]


def _terms(spec: TermSpec) -> Tuple[MonomialTerm, ...]:
    if spec is None:
        return ()
    items = spec.items() if isinstance(spec, Mapping) else spec
    return tuple(MonomialTerm(int(exponent), Coefficient.of(coef)) for exponent, coef in items)


def _check_terms(terms: Sequence[MonomialTerm], label: str) -> None:
    previous = 0
    for index, term in enumerate(terms):
        if term.exponent <= previous:
            raise ArgumentError(
                f"{label}[{index}]: exponents must be positive and strictly increasing, got {term.exponent}"
            )
        if term.coefficient.is_zero:
            raise ArgumentError(f"{label}[{index}]: coefficient of exponent {term.exponent} must be nonzero")
        previous = term.exponent


@dataclass(frozen=True)
class HarmonicPolynomial(BaseSymbol, BaseModel):
    """
    p0 + sum_m p_m z^m + sum_n q_n conj(z)^n.

    Exponent lists are strictly increasing and all listed coefficients are
    nonzero; the constant term may vanish.
    """
    p0: Coefficient
    analytic: Tuple[MonomialTerm, ...] = ()
    coanalytic: Tuple[MonomialTerm, ...] = ()

    kind = "harmonic"

    def __post_init__(self):
        object.__setattr__(self, "p0", Coefficient.of(self.p0))
        object.__setattr__(self, "analytic", tuple(self.analytic))
        object.__setattr__(self, "coanalytic", tuple(self.coanalytic))
        _check_terms(self.analytic, "analytic")
        _check_terms(self.coanalytic, "coanalytic")

    @classmethod
    def from_coefficients(cls, p0=0, analytic: TermSpec = None, coanalytic: TermSpec = None) -> "HarmonicPolynomial":
        """
        Convenience constructor.

        Example:
            HarmonicPolynomial.from_coefficients(1, {3: Fraction(2, 3)}, {3: Fraction(1, 3)})
        """
        return cls(Coefficient.of(p0), _terms(analytic), _terms(coanalytic))

    @classmethod
    def constant(cls, value) -> "HarmonicPolynomial":
        return cls(Coefficient.of(value))

    def evaluate_array(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=complex)
        result = np.full(points.shape, self.p0.value, dtype=complex)
        for term in self.analytic:
            result += term.coefficient.value * points ** term.exponent
        if self.coanalytic:
            conj = np.conj(points)
            for term in self.coanalytic:
                result += term.coefficient.value * conj ** term.exponent
        return result

    def monomials(self) -> Iterator[Tuple[int, int, complex]]:
        """(a, b, c) for every term c w^a conj(w)^b, the constant included when nonzero"""
        if not self.p0.is_zero:
            yield 0, 0, self.p0.value
        for term in self.analytic:
            yield term.exponent, 0, term.coefficient.value
        for term in self.coanalytic:
            yield 0, term.exponent, term.coefficient.value

    @property
    def is_polynomial(self) -> bool:
        return True

    @property
    def is_constant(self) -> bool:
        return not self.analytic and not self.coanalytic

    @property
    def is_real_valued(self) -> bool:
        if self.p0.value.imag != 0.0:
            return False
        mirrored = {term.exponent: term.coefficient.value.conjugate() for term in self.coanalytic}
        return mirrored == {term.exponent: term.coefficient.value for term in self.analytic}

    @property
    def max_analytic_exponent(self) -> int:
        return self.analytic[-1].exponent if self.analytic else 0

    @property
    def max_coanalytic_exponent(self) -> int:
        return self.coanalytic[-1].exponent if self.coanalytic else 0

    def trig_degree(self) -> int:
        return max(self.max_analytic_exponent, self.max_coanalytic_exponent)

    def polynomial_degree(self) -> int:
        return self.trig_degree()

    def lipschitz_constant(self) -> float:
        """sum m |p_m| + sum n |q_n| bounds |dP/dz| + |dP/dconj(z)| on the closed disc"""
        return float(sum(term.exponent * term.coefficient.modulus for term in self.analytic + self.coanalytic))

    def coefficient_bound(self) -> float:
        return self.p0.modulus + self.modulus_sum()

    def modulus_sum(self) -> float:
        return float(sum(term.coefficient.modulus for term in self.analytic + self.coanalytic))

    def modulus_sum_exact(self) -> Optional[Fraction]:
        moduli = [term.coefficient.exact_modulus for term in self.analytic + self.coanalytic]
        if any(modulus is None for modulus in moduli):
            return None
        return sum(moduli, Fraction(0))

    def coefficient_bound_exact(self) -> Optional[Fraction]:
        """|p0| + sum of all coefficient moduli as a fraction, None without exact moduli"""
        tail = self.modulus_sum_exact()
        if tail is None or self.p0.exact_modulus is None:
            return None
        return self.p0.exact_modulus + tail

    @property
    def has_exact_arguments(self) -> bool:
        """True when p0 and every coefficient carry an exact polar form"""
        return self.p0.polar is not None and all(
            term.coefficient.polar is not None for term in self.analytic + self.coanalytic
        )

    def conjugate_swap(self) -> "HarmonicPolynomial":
        """conj(P): analytic and coanalytic parts exchanged with conjugated coefficients; T_{conj P} is the adjoint of T_P"""
        return HarmonicPolynomial(
            self.p0.conjugate(),
            tuple(MonomialTerm(t.exponent, t.coefficient.conjugate()) for t in self.coanalytic),
            tuple(MonomialTerm(t.exponent, t.coefficient.conjugate()) for t in self.analytic),
        )

    def scaled(self, factor) -> "HarmonicPolynomial":
        if factor == 0:
            raise ArgumentError("scaling by zero would remove all nonconstant terms; use a constant symbol")
        symbols_logger.debug(f"Skaliere {self.describe()} mit {factor}")
        return HarmonicPolynomial(
            self.p0.scaled(factor),
            tuple(MonomialTerm(t.exponent, t.coefficient.scaled(factor)) for t in self.analytic),
            tuple(MonomialTerm(t.exponent, t.coefficient.scaled(factor)) for t in self.coanalytic),
        )

    def shifted(self, constant) -> "HarmonicPolynomial":
        return HarmonicPolynomial(self.p0.plus(constant), self.analytic, self.coanalytic)

    def describe(self) -> str:
        parts = [_format_number(self.p0.value)]
        parts += [f"({_format_number(t.coefficient.value)})*z^{t.exponent}" for t in self.analytic]
        parts += [f"({_format_number(t.coefficient.value)})*conj(z)^{t.exponent}" for t in self.coanalytic]
        return " + ".join(parts)


def _format_number(value: complex) -> str:
    if value.imag == 0.0:
        return f"{value.real:g}"
    return f"{value.real:g}{value.imag:+g}i"


def eval_harmonic(polynomial: HarmonicPolynomial, z) -> complex:
    """P(z) on the closed unit disc; DomainError for |z| > 1 + 1e-12"""
    return polynomial.evaluate(z)
