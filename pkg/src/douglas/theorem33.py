"""
Decision procedure for harmonic polynomials in normalized form

    P = p0 + sum_m p_m z^m + sum_n q_n conj(z)^n,  p0 >= 1,  sum |p_m| + sum |q_n| = 1.

For p0 > 1 the operator is invertible. For p0 = 1 it fails to be
invertible exactly when one angle lambda solves every constraint

    m lambda + arg p_m = pi (mod 2 pi),   -n lambda + arg q_n = pi (mod 2 pi),

which is also the condition for P(e^{i lambda}) = 0. Angles are handled as
multiples of pi, Lambda = lambda / pi, reduced into [0, 2).
"""

from fractions import Fraction
from typing import Dict, List, Tuple, Union

import numpy as np

from ..config import AppSettings, DecisionConstants
from ..core import douglas_logger
from ..core.exceptions import ArgumentError, TheoremFormError
from ..models.verdict import Outcome, Verdict, Witness
from ..symbols.harmonic import HarmonicPolynomial
from ..symbols.norms import check_theorem33_form, theorem33_note
from ..utils.angles import AngleArithmetic

Angle = Union[Fraction, float]
DECISION_MODES = ("exact", "float")


def _constraints(polynomial: HarmonicPolynomial, exact: bool) -> List[Tuple[str, int, int, Angle]]:
    """(label, exponent, sign, arg/pi) for every nonconstant term; sign +1 analytic, -1 coanalytic"""
    def argument(coefficient) -> Angle:
        return coefficient.polar.arg_over_pi if exact else AngleArithmetic.arg_over_pi(coefficient.value)

    rows = [(f"z^{t.exponent}", t.exponent, 1, argument(t.coefficient)) for t in polynomial.analytic]
    rows += [(f"conj(z)^{t.exponent}", t.exponent, -1, argument(t.coefficient)) for t in polynomial.coanalytic]
    return rows


def _candidates(pivot: Tuple[str, int, int, Angle]) -> List[Angle]:
    """All Lambda in [0, 2) solving the pivot constraint"""
    _, exponent, sign, arg = pivot
    values = []
    for k in range(exponent):
        # sign * e * Lambda + arg = 1 + 2k
        if isinstance(arg, Fraction):
            value = Fraction(sign * (1 - arg + 2 * k), exponent)
        else:
            value = sign * (1.0 - arg + 2.0 * k) / exponent
        values.append(AngleArithmetic.reduce_mod2(value))
    return sorted(set(values))


def _integer_part(exponent: int, sign: int, arg: Angle, candidate: Angle) -> Angle:
    """(sign * e * Lambda + arg - 1) / 2, an integer exactly when the constraint holds"""
    return (sign * exponent * candidate + arg - 1) / 2


def decide_theorem33(
    polynomial: HarmonicPolynomial,
    mode: str = "exact",
    tol: float = AppSettings.DEFAULT_TOLERANCE,
) -> Verdict:
    """
    Decide invertibility of T_P for P in normalized form.

    ``exact`` works with rational arguments (multiples of pi) and needs every
    coefficient in exact polar form; ``float`` accepts a constraint when its
    residual (distance of the integer part to the nearest integer) is at
    most ``tol``. Residuals in (tol, 10 tol] make the verdict Inconclusive,
    and a float witness must satisfy |P(e^{i lambda})| < 1e-10.

    Raises:
        TheoremFormError: P is not in normalized form
        ArgumentError: unknown mode, or exact mode without exact coefficients
    """
    if mode not in DECISION_MODES:
        raise ArgumentError(f"unknown mode {mode!r}, expected one of {DECISION_MODES}")
    exact = mode == "exact"
    if exact and not polynomial.has_exact_arguments:
        raise ArgumentError("exact mode needs every coefficient as an exact rational modulus and argument")
    if not exact and not tol > 0.0:
        raise ArgumentError(f"tolerance must be positive, got {tol}")
    mode_label = "exact" if exact else f"float({tol:g})"

    report = check_theorem33_form(polynomial, exact=exact)
    if not report.passed:
        note = theorem33_note(polynomial)
        message = "not in normalized form: " + "; ".join(report.failures)
        if note:
            message += f" ({note})"
        raise TheoremFormError(message)

    if report.branch == "p0>1":
        douglas_logger.info(f"p0 > 1: {polynomial.describe()} ist invertierbar")
        return Verdict(Outcome.INVERTIBLE, "p0>1", mode_label, certified=exact,
                       notes=("p0 > 1 and coefficient moduli sum to 1",))

    constraints = _constraints(polynomial, exact)
    # Pivot: kleinster analytischer Exponent, sonst kleinster koanalytischer
    pivot = constraints[0]
    candidates = _candidates(pivot)
    douglas_logger.debug(f"Pivot {pivot[0]}: {len(candidates)} Kandidaten {[str(c) for c in candidates]}")

    rows, survivors, near_misses = [], [], []
    for candidate in candidates:
        residuals: Dict[str, float] = {}
        integers: Dict[Tuple[int, int], Angle] = {}
        for label, exponent, sign, arg in constraints:
            part = _integer_part(exponent, sign, arg, candidate)
            residuals[label] = AngleArithmetic.distance_to_integer(part)
            integers[(sign, exponent)] = part
        worst = max(residuals.values())
        survives = worst == 0.0 if exact else worst <= tol
        rows.append({
            "lambda_over_pi": candidate,
            "residuals": residuals,
            "max_residual": worst,
            "survives": survives,
        })
        if survives:
            survivors.append((candidate, integers, worst))
        elif not exact and worst <= DecisionConstants.INCONCLUSIVE_FACTOR * tol:
            near_misses.append((candidate, worst))

    if survivors:
        candidate, integers, worst = survivors[0]
        angle = AngleArithmetic.to_radians(candidate)
        value = abs(polynomial.evaluate_array(np.array([np.exp(1j * angle)]))[0])
        witness = Witness(
            angle=angle,
            lambda_over_pi=candidate if exact else None,
            k={e: AngleArithmetic.nearest_integer(v) for (s, e), v in integers.items() if s > 0},
            l={e: AngleArithmetic.nearest_integer(v) for (s, e), v in integers.items() if s < 0},
            residual=float(value),
            exact_zero=exact,
        )
        if value >= DecisionConstants.WITNESS_TOLERANCE:
            douglas_logger.warning(f"Zeuge lambda={angle:.12g} erfüllt |P| < 1e-10 nicht: |P|={value:.3e}")
            return Verdict(Outcome.INCONCLUSIVE, "p0=1", mode_label, witness=witness, margin=worst,
                           candidates=tuple(rows),
                           notes=(f"angle system solved within tolerance but |P(e^(i lambda))| = {value:.3e}",))
        douglas_logger.info(f"Nicht invertierbar: Nullstelle bei lambda/pi = {candidate}")
        return Verdict(Outcome.NOT_INVERTIBLE, "p0=1", mode_label, witness=witness, margin=worst,
                       certified=exact, candidates=tuple(rows))

    best = min(row["max_residual"] for row in rows)
    if near_misses:
        candidate, worst = near_misses[0]
        douglas_logger.warning(f"Residuum {worst:.3e} knapp über tol={tol:g} bei lambda/pi={candidate}")
        return Verdict(Outcome.INCONCLUSIVE, "p0=1", mode_label, margin=best, candidates=tuple(rows),
                       notes=(f"residual {worst:.3e} lies in (tol, {DecisionConstants.INCONCLUSIVE_FACTOR:g} tol]; "
                              "lower the tolerance or use exact mode",))
    douglas_logger.info(f"Invertierbar: kein Kandidat erfüllt alle Bedingungen ({polynomial.describe()})")
    return Verdict(Outcome.INVERTIBLE, "p0=1", mode_label, margin=best, certified=exact, candidates=tuple(rows))
