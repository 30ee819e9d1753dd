from typing import Tuple

from ..config import AppSettings
from ..core import toeplitz_logger
from ..core.exceptions import DomainError
from ..geometry.conditions import scaling_constant
from ..models.reports import SupNormBracket
from ..models.truncation import CertificateRefusal, CertificateResult, NeumannCertificate
from ..symbols.base import BaseSymbol
from ..symbols.modulus import ModulusSymbol
from ..symbols.norms import sup_norm
from ..symbols.sampled import SampledSymbol


def _slack_notes(R: float, symbol_bracket: SupNormBracket, residual_bracket: SupNormBracket) -> Tuple[str, ...]:
    notes = []
    symbol_slack = symbol_bracket.upper - symbol_bracket.lower
    if symbol_slack > 0.0 and symbol_bracket.upper > 1.0:
        notes.append(f"R = {R:.12g} uses the upper bracket {symbol_bracket.upper:.12g} of sup|phi| "
                     f"(sampling slack {symbol_slack:.3e}), so it may lie below 1 / (2 sup|phi|)")
    residual_slack = residual_bracket.upper - residual_bracket.lower
    if residual_slack > 0.0:
        notes.append(f"q includes a sampling slack of {residual_slack:.3e}")
    return tuple(notes)


def neumann_certificate(symbol: BaseSymbol, resolution: int = AppSettings.DEFAULT_NORM_RESOLUTION) -> CertificateResult:
    """
    Invertibility certificate from ||I - T_{R phi}|| <= sup|1 - R phi| = q.

    With R = scaling_constant(phi) and a certified q < 1 the Neumann series
    gives ||T_phi^-1|| <= R / (1 - q). Otherwise a refusal is returned, which
    says nothing about invertibility. Harmonic polynomials with exact
    coefficients get R from the closed-form bound when it is attained;
    any remaining sampling slack is listed in the notes.
    """
    if isinstance(symbol, (SampledSymbol, ModulusSymbol)):
        return CertificateRefusal(f"no certified sup-norm bracket for {symbol.kind} symbols")
    symbol_bracket = sup_norm(symbol, resolution)
    R = scaling_constant(symbol, resolution)
    residual = symbol.scaled(-R).shifted(1)
    bracket = sup_norm(residual, resolution)
    q = bracket.upper
    if not bracket.certified:
        return CertificateRefusal("sup-norm bracket of 1 - R phi is not certified", R, q)
    if q >= 1.0:
        toeplitz_logger.info(f"Kein Zertifikat: q={q:.6g} >= 1 bei R={R:.6g}")
        return CertificateRefusal(f"sup|1 - R phi| <= {q:.6g} is not below 1", R, q)
    bound = R / (1.0 - q)
    toeplitz_logger.info(f"Neumann-Zertifikat: R={R:.6g}, q={q:.6g}, ||T^-1|| <= {bound:.6g}")
    return NeumannCertificate(R=R, q=q, inverse_norm_bound=bound, sup_lower=bracket.lower,
                              notes=_slack_notes(R, symbol_bracket, bracket))


def luecking_bound(M: float, S: float) -> float:
    """||T_phi^-1|| <= M / S^2"""
    if not M >= 1.0:
        raise DomainError(f"M must be at least 1, got {M}")
    if not S > 0.0:
        raise DomainError(f"S must be positive, got {S}")
    return M / S ** 2
