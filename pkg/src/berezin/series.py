"""
Series forms of the Berezin transform, obtained by expanding the kernel.

For a >= b and x = |z|^2:

    B(w^a conj(w)^b)(z) = (1 - x)^2 z^(a-b) sum_m (m+1)(m+a-b+1) x^m / (m+a+1)

and for a radial symbol with moments mu_n = 2 int_0^1 g(r) r^(2n+1) dr:

    B(g)(z) = (1 - x)^2 sum_n (n+1)^2 x^n mu_n
"""

from typing import Callable

import numpy as np

from ..config import AppSettings, QuadratureConstants
from ..core import berezin_logger
from ..core.exceptions import ArgumentError, DomainError, InsufficientMomentsError
from ..models.quadrature import RadialMoments
from ..symbols.radial import RadialSymbol
from ..utils.validators import Validators


def _smallest_count(bound: Callable[[int], float], tolerance: float, limit: int) -> int:
    """Smallest N <= limit with bound(N) <= tolerance; bound must decrease in N"""
    upper = 1
    while bound(upper) > tolerance:
        if upper >= limit:
            raise DomainError(f"series would need more than {limit} terms for tolerance {tolerance}")
        upper = min(2 * upper, limit)
    lower = upper // 2
    while upper - lower > 1:
        middle = (lower + upper) // 2
        if bound(middle) <= tolerance:
            upper = middle
        else:
            lower = middle
    return upper


def monomial_tail_bound(a: int, b: int, z: complex, terms: int) -> float:
    """Remainder of the monomial series after ``terms`` terms"""
    d = abs(a - b)
    x = abs(z) ** 2
    if x == 0.0:
        return 0.0
    tail = x ** terms * ((terms + d + 1) / (1.0 - x) + x / (1.0 - x) ** 2)
    return (1.0 - x) ** 2 * abs(z) ** d * tail


def berezin_monomial_series(a: int, b: int, z: complex, tol: float = AppSettings.DEFAULT_QUADRATURE_TOLERANCE) -> complex:
    """
    B(w^a conj(w)^b)(z) by the kernel expansion, truncated once the
    remainder bound drops below ``tol``. Exact up to rounding for z = 0.
    """
    if a < 0 or b < 0:
        raise ArgumentError(f"exponents must be non-negative, got a={a}, b={b}")
    z = Validators.require_open_disc(z)
    if a < b:
        return berezin_monomial_series(b, a, z, tol).conjugate()

    d = a - b
    x = abs(z) ** 2
    terms = _smallest_count(lambda count: monomial_tail_bound(a, b, z, count), tol,
                            QuadratureConstants.DEFAULT_MOMENT_LIMIT)
    m = np.arange(terms, dtype=float)
    series = float(np.sum((m + 1.0) * (m + d + 1.0) * x ** m / (m + a + 1.0)))
    return complex((1.0 - x) ** 2 * z ** d * series)


def radial_tail_bound(sup_bound: float, z: complex, terms: int) -> float:
    """sup|g| x^N [(N+1)(1-x) + x], from |mu_n| <= sup|g| / (n+1)"""
    x = abs(z) ** 2
    if x == 0.0:
        return 0.0
    return sup_bound * x ** terms * ((terms + 1) * (1.0 - x) + x)


def required_moment_count(z: complex, tol: float, sup_bound: float) -> int:
    """Number of moments the radial series needs at z for remainder <= tol"""
    if sup_bound == 0.0:
        return 1
    return _smallest_count(lambda count: radial_tail_bound(sup_bound, z, count), tol,
                           QuadratureConstants.DEFAULT_MOMENT_LIMIT)


def radial_moments(symbol: RadialSymbol, count: int, exact: bool = False) -> RadialMoments:
    """
    The first ``count`` moments of a radial symbol. With ``exact`` and a
    polynomial with rational coefficients the moments are also returned as
    fractions.
    """
    count = Validators.require_positive_int(count, "count")
    if count > QuadratureConstants.DEFAULT_MOMENT_LIMIT:
        raise ArgumentError(f"at most {QuadratureConstants.DEFAULT_MOMENT_LIMIT} moments, got {count}")
    exact_values = None
    if exact and symbol.is_exact:
        exact_values = tuple(symbol.exact_moment(n) for n in range(count))
    return RadialMoments(values=symbol.moments(count), sup_bound=symbol.coefficient_bound(), exact=exact_values)


def berezin_radial_series(moments: RadialMoments, z: complex, tol: float = AppSettings.DEFAULT_QUADRATURE_TOLERANCE) -> float:
    """
    B(g)(z) for radial g from its moments.

    Raises:
        InsufficientMomentsError: fewer moments than the tolerance requires
    """
    z = Validators.require_open_disc(z)
    required = required_moment_count(z, tol, moments.sup_bound)
    if moments.count < required:
        berezin_logger.debug(f"Zu wenige Momente: {moments.count} < {required} bei |z|={abs(z):.6f}")
        raise InsufficientMomentsError(required, moments.count)
    x = abs(z) ** 2
    n = np.arange(required, dtype=float)
    return float((1.0 - x) ** 2 * np.sum((n + 1.0) ** 2 * x ** n * moments.values[:required]))
