"""Boundary-based invertibility criteria for Toeplitz operators with continuous symbols."""

from typing import Optional, Union

import numpy as np

from .boundary import boundary_zeros
from ..berezin.iterate import iterate_berezin
from ..berezin.poisson import poisson_extend
from ..berezin.transform import berezin
from ..config import AppSettings, DecisionConstants
from ..core import douglas_logger
from ..core.exceptions import ArgumentError, HypothesisError
from ..geometry.conditions import margin_values, parabolic_margin
from ..models.grid import DiskGrid, GridField
from ..models.quadrature import QuadratureSpec
from ..models.verdict import Outcome, Verdict, Witness
from ..symbols.base import BaseSymbol
from ..symbols.boundary import BoundarySamples, TrigPolynomial
from ..symbols.harmonic import HarmonicPolynomial
from ..symbols.radial import RadialSymbol
from ..symbols.sampled import SampledSymbol
from ..utils.validators import Validators

BoundaryData = Union[TrigPolynomial, BoundarySamples]

POISSON_NOTE = "verdict concerns the Toeplitz operator whose symbol is the Poisson extension of g"


def _default_grid() -> DiskGrid:
    return DiskGrid.build(AppSettings.DEFAULT_RINGS, AppSettings.DEFAULT_ANGLES)


def _probe_grid() -> DiskGrid:
    return DiskGrid.build(AppSettings.DEFAULT_PROBE_RINGS, AppSettings.DEFAULT_PROBE_ANGLES)


def _check_boundary_hypothesis(values: np.ndarray, angles: np.ndarray) -> float:
    margins = margin_values(values, 1.0)
    index = int(np.argmin(margins))
    if margins[index] < -DecisionConstants.HYPOTHESIS_SLACK:
        node = complex(np.exp(1j * angles[index]))
        raise HypothesisError(
            f"Re g >= (Im g)^2 fails on the boundary at t = {angles[index]:.12g} (margin {margins[index]:.3e})",
            node=node, margin=float(margins[index]),
        )
    return float(margins[index])


def boundary_criterion(data: Union[BoundaryData, HarmonicPolynomial],
                       angles: int = DecisionConstants.BOUNDARY_ANGLES) -> Verdict:
    """
    Invertibility of T_{Pg}, Pg the Poisson extension of boundary data g with
    Re g >= (Im g)^2 on the circle: invertible exactly when g has no zero.

    Trigonometric polynomials are decided with a Lipschitz slack on the
    angle grid and companion-matrix zeros; sampled data gives evidence only.

    Raises:
        HypothesisError: Re g < (Im g)^2 at a grid angle
    """
    if isinstance(data, HarmonicPolynomial):
        data = TrigPolynomial.from_harmonic(data)
    if isinstance(data, TrigPolynomial):
        angles = Validators.require_positive_int(angles, "angles")
        theta = 2.0 * np.pi * np.arange(angles) / angles
    elif isinstance(data, BoundarySamples):
        theta = data.angles
    else:
        raise ArgumentError(f"boundary criterion needs boundary data, got {type(data).__name__}")
    values = data.evaluate_array(theta) if isinstance(data, TrigPolynomial) else data.values
    hypothesis_margin = _check_boundary_hypothesis(values, theta)
    modulus = np.abs(values)
    index = int(np.argmin(modulus))
    minimum = float(modulus[index])
    node = complex(np.exp(1j * theta[index]))

    if isinstance(data, TrigPolynomial):
        zeros = boundary_zeros(data)
        if zeros:
            residual = float(abs(data.evaluate(zeros[0])))
            douglas_logger.info(f"Randnullstelle bei t={zeros[0]:.12g}, |g|={residual:.3e}")
            return Verdict(Outcome.NOT_INVERTIBLE, "boundary zero", "float",
                           witness=Witness(angle=zeros[0], residual=residual),
                           margin=hypothesis_margin, notes=(POISSON_NOTE,))
        slack = data.lipschitz_constant() * np.pi / theta.size
        if minimum - slack > 0.0:
            return Verdict(Outcome.INVERTIBLE, "boundary minimum", "float", margin=minimum - slack,
                           node=node, certified=True, notes=(POISSON_NOTE,))
        return Verdict(Outcome.INCONCLUSIVE, "boundary minimum", "float", margin=minimum - slack, node=node,
                       notes=(POISSON_NOTE, f"min |g| = {minimum:.3e} does not exceed the slack {slack:.3e}"))

    # Abtastwerte: nur Indizien
    if minimum < DecisionConstants.WITNESS_TOLERANCE:
        return Verdict(Outcome.NOT_INVERTIBLE, "boundary zero", "samples",
                       witness=Witness(angle=float(theta[index]), residual=minimum), node=node,
                       notes=(POISSON_NOTE, "zero found among the samples"))
    jump = float(np.max(np.abs(np.diff(np.append(values, values[0]))))) / 2.0
    outcome = Outcome.INVERTIBLE if minimum > jump else Outcome.INCONCLUSIVE
    return Verdict(outcome, "boundary minimum", "samples", margin=minimum - jump, node=node,
                   notes=(POISSON_NOTE, "sampled boundary data: evidence only"))


def iterated_berezin_criterion(
    symbol: BaseSymbol,
    n: int,
    delta: float,
    spec: Optional[QuadratureSpec] = None,
    grid: Optional[DiskGrid] = None,
) -> Verdict:
    """
    Invertibility of T_psi for psi = B^n phi on grid evidence: |B phi| >= delta
    and Re psi >= delta (Im psi)^2 at every node. A failing node gives
    Inconclusive.

    The evidence depends on the grid: ``grid`` defaults to the probe grid
    from AppSettings (DEFAULT_PROBE_RINGS x DEFAULT_PROBE_ANGLES). Harmonic
    polynomials are fixed points of B and are evaluated at the nodes
    directly; other symbols are sampled on the grid and every step reads
    the field through bilinear interpolation, so their margins include the
    interpolation error.
    """
    delta = Validators.require_half_open_interval(delta, 0.0, 1.0, "delta")
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ArgumentError(f"n must be a non-negative integer, got {n!r}")
    if isinstance(symbol, HarmonicPolynomial):
        grid = grid or _probe_grid()
        field = GridField(grid, symbol.evaluate_array(grid.nodes))
        nodes = grid.nodes
        douglas_logger.debug(f"Harmonisches Symbol: B^{n} phi = phi auf {grid.node_count} Knoten")
        first = psi = field
    else:
        if not isinstance(symbol, SampledSymbol):
            symbol = SampledSymbol.from_symbol(symbol, grid or _probe_grid())
        field = GridField(symbol.grid, symbol.values)
        nodes = symbol.grid.nodes
        first = iterate_berezin(field, 1, spec)
        psi = None

    modulus = np.abs(first.values)
    index = int(np.argmin(modulus))
    if modulus[index] < delta:
        douglas_logger.info(f"|B phi| = {modulus[index]:.6g} < delta bei {nodes[index]}")
        return Verdict(Outcome.INCONCLUSIVE, "iterated Berezin", "grid", margin=float(modulus[index] - delta),
                       node=complex(nodes[index]), notes=("|B phi| >= delta fails on the grid",))

    if psi is None:
        psi = field if n == 0 else iterate_berezin(first, n - 1, spec)
    margins = margin_values(psi.values, delta)
    index = int(np.argmin(margins))
    if margins[index] < 0.0:
        return Verdict(Outcome.INCONCLUSIVE, "iterated Berezin", "grid", margin=float(margins[index]),
                       node=complex(nodes[index]), notes=(f"Re B^{n} phi >= delta (Im B^{n} phi)^2 fails on the grid",))
    return Verdict(Outcome.INVERTIBLE, "iterated Berezin", "grid", margin=float(margins[index]),
                   node=complex(nodes[index]),
                   notes=(f"concerns T_psi with psi = B^{n} phi; grid evidence, not a proof",))


def _boundary_modulus(symbol: BaseSymbol, angles: int):
    """(min |phi| on the circle, argmin node, slack, certified)"""
    if isinstance(symbol, RadialSymbol):
        value = abs(symbol.evaluate_radius(1.0))
        return value, 1 + 0j, 0.0, True
    if isinstance(symbol, SampledSymbol):
        ring = symbol.boundary_values()
        offset = symbol.grid.ring_offsets[-2]
        index = int(np.argmin(np.abs(ring)))
        return float(abs(ring[index])), complex(symbol.grid.nodes[offset + index]), 0.0, False
    theta = 2.0 * np.pi * np.arange(angles) / angles
    modulus = np.abs(symbol.evaluate_array(np.exp(1j * theta)))
    index = int(np.argmin(modulus))
    lipschitz = symbol.lipschitz_constant()
    if lipschitz is None:
        return float(modulus[index]), complex(np.exp(1j * theta[index])), 0.0, False
    return float(modulus[index]), complex(np.exp(1j * theta[index])), lipschitz * np.pi / angles, True


def fredholm_equiv_check(
    symbol: BaseSymbol,
    grid: Optional[DiskGrid] = None,
    angles: int = DecisionConstants.BOUNDARY_ANGLES,
) -> Verdict:
    """
    For a continuous symbol with Re phi >= (Im phi)^2 on the disc, T_phi is
    invertible iff it is Fredholm iff |phi| = |B phi| stays away from zero
    on the circle.

    Raises:
        HypothesisError: the parabolic margin is negative at a grid node
    """
    if not isinstance(symbol, (HarmonicPolynomial, RadialSymbol, SampledSymbol)):
        raise ArgumentError(f"boundary check needs a continuous symbol on the closed disc, got {symbol.kind}")
    grid = grid or (symbol.grid if isinstance(symbol, SampledSymbol) else _default_grid())
    report = parabolic_margin(symbol, 1.0, grid)
    if report.min_margin < -DecisionConstants.HYPOTHESIS_SLACK:
        raise HypothesisError(
            f"Re phi >= (Im phi)^2 fails at {report.argmin} (margin {report.min_margin:.3e})",
            node=report.argmin, margin=report.min_margin,
        )

    if isinstance(symbol, HarmonicPolynomial):
        trig = TrigPolynomial.from_harmonic(symbol)
        zeros = boundary_zeros(trig)
        if zeros:
            residual = float(abs(trig.evaluate(zeros[0])))
            return Verdict(Outcome.NOT_INVERTIBLE, "boundary zero", "float",
                           witness=Witness(angle=zeros[0], residual=residual),
                           margin=report.min_margin, notes=("not Fredholm: phi vanishes on the circle",))

    minimum, node, slack, certified = _boundary_modulus(symbol, angles)
    margin = minimum - slack
    douglas_logger.debug(f"min |phi| auf dem Rand = {minimum:.6g}, slack={slack:.3e}")
    if margin > 0.0:
        return Verdict(Outcome.INVERTIBLE, "boundary minimum", "float", margin=margin, node=node,
                       certified=certified and report.certified,
                       notes=(f"min |phi| on the circle >= {margin:.6g}",))
    if minimum < DecisionConstants.WITNESS_TOLERANCE:
        return Verdict(Outcome.NOT_INVERTIBLE, "boundary zero", "float", margin=report.min_margin, node=node,
                       notes=("not Fredholm: phi vanishes on the circle",))
    return Verdict(Outcome.INCONCLUSIVE, "boundary minimum", "float", margin=margin, node=node,
                   notes=(f"min |phi| = {minimum:.3e} does not exceed the slack {slack:.3e}",))


def _berezin_on_probes(symbol: BaseSymbol, nodes: np.ndarray, spec: Optional[QuadratureSpec]) -> np.ndarray:
    if isinstance(symbol, HarmonicPolynomial):
        return symbol.evaluate_array(nodes)
    route = "series" if isinstance(symbol, RadialSymbol) else "auto"
    values = np.array(nodes, dtype=complex)
    for index, z in enumerate(nodes):
        values[index] = berezin(symbol, complex(z), route=route, spec=spec).value
    return values


def powered_poisson_criterion(
    symbol: BaseSymbol,
    n: int,
    delta: float,
    spec: Optional[QuadratureSpec] = None,
    probe_grid: Optional[DiskGrid] = None,
    angles: int = DecisionConstants.BOUNDARY_ANGLES,
) -> Verdict:
    """
    Invertibility of T_psi, psi the Poisson extension of |phi|^n restricted
    to the circle, given |B phi| >= delta on the probe grid. Then
    |phi|^n >= delta^n on the circle, psi >= delta^n and T_psi >= delta^n I.
    The probe grid defaults to the AppSettings probe resolution and the
    verdict is evidence on that grid.
    """
    delta = Validators.require_open_interval(delta, 0.0, float("inf"), "delta")
    n = Validators.require_positive_int(n, "n")
    grid = probe_grid or _probe_grid()
    nodes = grid.nodes
    transformed = np.abs(_berezin_on_probes(symbol, nodes, spec))
    index = int(np.argmin(transformed))
    if transformed[index] < delta:
        return Verdict(Outcome.INCONCLUSIVE, "powered Poisson", "grid", margin=float(transformed[index] - delta),
                       node=complex(nodes[index]), notes=("|B phi| >= delta fails on the probe grid",))

    if isinstance(symbol, SampledSymbol):
        boundary = np.abs(symbol.boundary_values()) ** n
    else:
        theta = 2.0 * np.pi * np.arange(angles) / angles
        boundary = np.abs(symbol.evaluate_array(np.exp(1j * theta))) ** n
    samples = BoundarySamples(boundary)
    lowest = float(boundary.min())
    if lowest < delta ** n:
        return Verdict(Outcome.INCONCLUSIVE, "powered Poisson", "grid", margin=lowest - delta ** n,
                       notes=("|phi|^n >= delta^n fails on the circle",))
    center = poisson_extend(samples, 0j).real
    return Verdict(Outcome.INVERTIBLE, "powered Poisson", "grid", margin=lowest - delta ** n,
                   notes=(f"psi = Poisson extension of |phi|^{n}; psi >= {delta ** n:.6g}, psi(0) = {center:.6g}",
                          "grid evidence, not a proof"))
