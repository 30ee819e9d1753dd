import math
from typing import Optional

import numpy as np

from .base import BaseSymbol
from .harmonic import HarmonicPolynomial
from .modulus import ModulusSymbol
from .radial import RadialSymbol
from .sampled import SampledSymbol
from ..config import AppSettings, DecisionConstants, DomainConstants, GridConstants
from ..core import symbols_logger
from ..core.exceptions import ArgumentError
from ..models.reports import SupNormBracket, Theorem33FormReport


def sup_norm(symbol: BaseSymbol, resolution: int = AppSettings.DEFAULT_NORM_RESOLUTION) -> SupNormBracket:
    """
    Bracket lower <= ||phi||_inf <= upper.

    Harmonic polynomials attain the maximum of |phi| on the unit circle
    (|phi| is subharmonic), so only 8 * resolution boundary angles are
    sampled; the upper bracket adds the Lipschitz constant times the half
    arc between neighbouring angles, capped by |p0| + sum of the moduli
    when the coefficients are exact. Radial polynomials use 8 * resolution
    equally spaced radii in [0, 1]. Sampled symbols return the exact maximum
    of their interpolant, which is attained at a node.

    Raises:
        ArgumentError: if resolution < 8
    """
    if resolution < DomainConstants.MIN_NORM_RESOLUTION:
        raise ArgumentError(f"resolution must be at least {DomainConstants.MIN_NORM_RESOLUTION}, got {resolution}")

    if isinstance(symbol, ModulusSymbol):
        inner = sup_norm(symbol.inner, resolution)
        return SupNormBracket(inner.lower, inner.upper, resolution, inner.lipschitz, inner.argmax, inner.certified)

    if isinstance(symbol, HarmonicPolynomial):
        count = GridConstants.BOUNDARY_ANGLES_PER_RESOLUTION * resolution
        points = np.exp(2j * np.pi * np.arange(count) / count)
        magnitudes = np.abs(symbol.evaluate_array(points))
        index = int(np.argmax(magnitudes))
        lipschitz = symbol.lipschitz_constant()
        lower = float(magnitudes[index])
        upper = lower + lipschitz * math.pi / count
        closed = symbol.coefficient_bound_exact()
        if closed is not None:
            # Dreiecksungleichung; scharf, wenn alle Terme in einem Randpunkt gleichphasig sind
            upper = max(lower, min(upper, float(closed)))
        bracket = SupNormBracket(lower, upper, resolution, lipschitz, complex(points[index]))
    elif isinstance(symbol, RadialSymbol) and symbol.is_polynomial:
        count = GridConstants.RADII_PER_RESOLUTION * resolution
        radii = np.linspace(0.0, 1.0, count)
        magnitudes = np.abs(symbol.evaluate_radius_array(radii))
        index = int(np.argmax(magnitudes))
        lipschitz = symbol.lipschitz_constant()
        slack = lipschitz * 0.5 / (count - 1)
        bracket = SupNormBracket(float(magnitudes[index]), float(magnitudes[index]) + slack, resolution,
                                 lipschitz, complex(radii[index]))
    elif isinstance(symbol, RadialSymbol):
        # Maximum eines stückweise linearen Interpolanten liegt in einem Stützpunkt
        magnitudes = np.abs(symbol.sample_values)
        index = int(np.argmax(magnitudes))
        bracket = SupNormBracket(float(magnitudes[index]), float(magnitudes[index]), resolution,
                                 symbol.lipschitz_constant(), complex(symbol.sample_radii[index]))
    elif isinstance(symbol, SampledSymbol):
        magnitudes = np.abs(symbol.values)
        index = int(np.argmax(magnitudes))
        bracket = SupNormBracket(float(magnitudes[index]), float(magnitudes[index]), resolution,
                                 None, complex(symbol.grid.nodes[index]), certified=False)
    else:
        raise ArgumentError(f"no sup-norm rule for symbol kind {symbol.kind!r}")

    symbols_logger.debug(f"sup-Norm von {symbol.describe()}: [{bracket.lower:.12g}, {bracket.upper:.12g}]")
    return bracket


def check_theorem33_form(polynomial: HarmonicPolynomial, exact: Optional[bool] = None) -> Theorem33FormReport:
    """
    Check the normalized form p0 real, p0 >= 1, nonzero coefficients and
    sum |p_m| + sum |q_n| = 1.

    The sum is compared exactly when every coefficient carries an exact
    polar form (or ``exact`` is requested), otherwise within 1e-12. The
    report also names the branch: "p0>1" or "p0=1".
    """
    tolerance = DecisionConstants.FORM_TOLERANCE
    exact_sum = polynomial.modulus_sum_exact()
    exact_p0 = polynomial.p0.exact_real
    use_exact = (exact_sum is not None and exact_p0 is not None) if exact is None else exact
    if use_exact and (exact_sum is None or exact_p0 is None):
        raise ArgumentError("exact form check needs rational moduli and a rational constant term")

    failures = []
    modulus_sum = polynomial.modulus_sum()
    coefficients_nonzero = all(
        not term.coefficient.is_zero for term in polynomial.analytic + polynomial.coanalytic
    ) and not polynomial.is_constant

    if use_exact:
        p0_real = True
        p0_value = exact_p0
        p0_at_least_one = exact_p0 >= 1
        sum_is_one = exact_sum == 1
        branch = ("p0>1" if exact_p0 > 1 else "p0=1") if p0_at_least_one else None
    else:
        p0 = polynomial.p0.value
        p0_real = abs(p0.imag) <= tolerance
        p0_value = p0.real
        p0_at_least_one = p0_real and p0.real >= 1.0 - tolerance
        sum_is_one = abs(modulus_sum - 1.0) <= tolerance
        branch = None
        if p0_at_least_one:
            branch = "p0=1" if abs(p0.real - 1.0) <= tolerance else "p0>1"

    if not p0_real:
        failures.append("p0 is not real")
    elif not p0_at_least_one:
        failures.append(f"p0 = {p0_value} is below 1")
    if not coefficients_nonzero:
        failures.append("no nonconstant terms" if polynomial.is_constant else "zero coefficient listed")
    if not sum_is_one:
        failures.append(f"coefficient modulus sum is {exact_sum if use_exact else modulus_sum}, not 1")

    report = Theorem33FormReport(
        p0_real=p0_real,
        p0_at_least_one=p0_at_least_one,
        coefficients_nonzero=coefficients_nonzero,
        modulus_sum=modulus_sum,
        modulus_sum_is_one=sum_is_one,
        exact=use_exact,
        branch=branch,
        modulus_sum_exact=exact_sum,
        failures=tuple(failures),
    )
    symbols_logger.debug(f"Formprüfung {polynomial.describe()}: passed={report.passed}, branch={branch}")
    return report


def theorem33_note(polynomial: HarmonicPolynomial) -> Optional[str]:
    """
    Informational note for p0 = 1 with coefficient modulus sum below 1.

    Then |1 - P| <= sum of moduli < 1 on the closed disc and T_P is
    invertible by the disc condition; this case is never treated as a
    branch of the decision procedure.
    """
    exact_p0 = polynomial.p0.exact_real
    exact_sum = polynomial.modulus_sum_exact()
    if exact_p0 is not None and exact_sum is not None:
        applies = exact_p0 == 1 and 0 < exact_sum < 1
        total = exact_sum
    else:
        p0 = polynomial.p0.value
        total = polynomial.modulus_sum()
        applies = (abs(p0 - 1.0) <= DecisionConstants.FORM_TOLERANCE
                   and 0.0 < total < 1.0 - DecisionConstants.FORM_TOLERANCE)
    if not applies:
        return None
    return (
        f"p0 = 1 with coefficient modulus sum {total} < 1: sup |1 - P| < 1 on the closed disc, "
        "so T_P is invertible by the disc condition (not a branch of the normalized-form decision)"
    )
