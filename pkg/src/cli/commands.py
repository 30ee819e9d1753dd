from typing import Callable, Dict, List

import numpy as np

from .output import CommandResult
from .parser import parse_range
from .reproduce import reproduce_paper
from ..berezin.transform import berezin, berezin_abs_lower_bound
from ..config import ExitCodes
from ..core import cli_logger
from ..core.exceptions import ArgumentError, HypothesisError, UsageError
from ..douglas.criteria import fredholm_equiv_check
from ..douglas.theorem33 import decide_theorem33
from ..geometry.conditions import parabolic_margin
from ..geometry.sufficiency import corollary_check, thm_sufficient_check
from ..models.grid import DiskGrid
from ..models.run_config import RunConfig
from ..models.truncation import NeumannCertificate
from ..symbols.harmonic import HarmonicPolynomial
from ..symbols.norms import check_theorem33_form, sup_norm, theorem33_note
from ..symbols.parser import load_symbol
from ..toeplitz.certificates import luecking_bound, neumann_certificate
from ..toeplitz.matrices import build_matrix
from ..toeplitz.spectrum import singular_extremes, singular_sweep
from ..utils.validators import Validators

# Stützstellen für die B(|phi|)-Schätzung in analyze
PROBE_RINGS = 6
PROBE_ANGLES = 12


def _points(args) -> List[complex]:
    points = [Validators.parse_complex(text) for text in (args.z or [])]
    if getattr(args, "radii", None):
        start, stop, count = parse_range(args.radii, "--radii")
        if count < 1:
            raise UsageError("--radii needs a positive COUNT")
        points += [complex(r) for r in np.linspace(start, stop, count)]
    if not points:
        raise UsageError("give at least one --z (or --radii)")
    return points


def _grid(config: RunConfig) -> DiskGrid:
    return DiskGrid.build(config.rings, config.angles, config.boundary_gap)


def cmd_eval(args, config: RunConfig) -> CommandResult:
    symbol = load_symbol(config.symbol_path)
    rows = [(z, symbol.evaluate(z)) for z in _points(args)]
    return CommandResult(
        data=[{"z": z, "value": value} for z, value in rows],
        csv_header=("z_re", "z_im", "value_re", "value_im"),
        csv_rows=[(z.real, z.imag, value.real, value.imag) for z, value in rows],
    )


def cmd_check_geometric(args, config: RunConfig) -> CommandResult:
    symbol = load_symbol(config.symbol_path)
    grid = _grid(config)
    margin = parabolic_margin(symbol, config.delta, grid, args.form)
    bracket = sup_norm(symbol, config.resolution)
    if config.rho is not None:
        sufficiency = thm_sufficient_check(symbol, config.rho, grid, args.variant, config.resolution)
    else:
        sufficiency = corollary_check(symbol, grid, config.resolution)
    return CommandResult(
        data={"margin": margin, "sup_norm": bracket, "sufficiency": sufficiency},
        csv_header=("min_margin", "argmin_re", "argmin_im", "certified", "sup_lower", "sup_upper", "sufficient"),
        csv_rows=[(margin.min_margin, margin.argmin.real, margin.argmin.imag, margin.certified,
                   bracket.lower, bracket.upper, sufficiency.passed)],
    )


def cmd_berezin(args, config: RunConfig) -> CommandResult:
    symbol = load_symbol(config.symbol_path)
    values = [berezin(symbol, z, config.route or "auto", config.quad_tol, config.n) for z in _points(args)]
    return CommandResult(
        data=values,
        csv_header=("z_re", "z_im", "value_re", "value_im", "est_error"),
        csv_rows=[(v.z.real, v.z.imag, v.value.real, v.value.imag, v.est_error) for v in values],
    )


def cmd_matrix(args, config: RunConfig) -> CommandResult:
    symbol = load_symbol(config.symbol_path)
    truncation = build_matrix(symbol, config.n, config.route or "auto")
    rows = [(i, j, truncation.entries[i, j].real, truncation.entries[i, j].imag)
            for i in range(truncation.N) for j in range(truncation.N)]
    return CommandResult(data=truncation, csv_header=("i", "j", "re", "im"), csv_rows=rows)


def cmd_svd(args, config: RunConfig) -> CommandResult:
    symbol = load_symbol(config.symbol_path)
    route = config.route or "auto"
    if args.n_sweep:
        start, stop, step = parse_range(args.n_sweep, "--n-sweep", integer=True)
        rows = singular_sweep(symbol, start, stop, step, route)
    elif config.n is not None:
        rows = singular_sweep(symbol, config.n, config.n, 1, route)
    else:
        raise UsageError("svd needs --n or --n-sweep")
    return CommandResult(
        data={"rows": rows, "note": "singular values of finite sections are numerical evidence only"},
        csv_header=("N", "sigma_min", "sigma_max"),
        csv_rows=[(row.N, row.sigma_min, row.sigma_max) for row in rows],
    )


def _require_harmonic(symbol) -> HarmonicPolynomial:
    if not isinstance(symbol, HarmonicPolynomial):
        raise ArgumentError(f"the decision procedure needs a harmonic polynomial, got {symbol.kind}")
    return symbol


def cmd_decide(args, config: RunConfig) -> CommandResult:
    polynomial = _require_harmonic(load_symbol(config.symbol_path))
    verdict = decide_theorem33(polynomial, config.mode, config.tol)
    witness = verdict.witness
    return CommandResult(
        data={"verdict": verdict, "note": theorem33_note(polynomial)},
        csv_header=("outcome", "basis", "mode", "lambda", "witness_residual"),
        csv_rows=[(verdict.outcome, verdict.basis, verdict.mode,
                   witness.angle if witness else None, witness.residual if witness else None)],
    )


def cmd_certify(args, config: RunConfig) -> CommandResult:
    symbol = load_symbol(config.symbol_path)
    result = neumann_certificate(symbol, config.resolution)
    issued = isinstance(result, NeumannCertificate)
    data = {"kind": "certificate" if issued else "refusal", "result": result}
    if args.luecking:
        data["luecking_bound"] = luecking_bound(*args.luecking)
    return CommandResult(
        data=data,
        csv_header=("certified", "R", "q", "inverse_norm_bound"),
        csv_rows=[(issued, result.R, result.q, result.inverse_norm_bound if issued else None)],
    )


def cmd_reproduce(args, config: RunConfig) -> CommandResult:
    report = reproduce_paper(config.seed)
    return CommandResult(
        data=report,
        csv_header=("id", "expected", "computed", "tolerance", "passed"),
        csv_rows=[(c.id, c.expected, c.computed, c.tolerance, c.passed) for c in report.checks],
        exit_code=ExitCodes.OK if report.passed else ExitCodes.INTERNAL_ERROR,
    )


def cmd_analyze(args, config: RunConfig) -> CommandResult:
    """Parabolic margin, B(|phi|) estimate, certificate and (normalized form only) the decision"""
    symbol = load_symbol(config.symbol_path)
    grid = _grid(config)
    data: Dict[str, object] = {"symbol": symbol.describe()}
    data["margin"] = parabolic_margin(symbol, config.delta, grid)
    data["berezin_abs_lower_bound"] = berezin_abs_lower_bound(symbol, DiskGrid.build(PROBE_RINGS, PROBE_ANGLES))
    data["certificate"] = neumann_certificate(symbol, config.resolution)
    try:
        data["fredholm"] = fredholm_equiv_check(symbol, grid)
    except (HypothesisError, ArgumentError) as e:
        data["fredholm"] = {"skipped": str(e)}
    if isinstance(symbol, HarmonicPolynomial):
        form = check_theorem33_form(symbol, exact=False)
        data["form"] = form
        data["note"] = theorem33_note(symbol)
        if form.passed:
            mode = config.mode if config.mode == "float" or symbol.has_exact_arguments else "float"
            data["decision"] = decide_theorem33(symbol, mode, config.tol)
    cli_logger.info(f"Analyse abgeschlossen für {symbol.describe()}")
    return CommandResult(data=data)


COMMANDS: Dict[str, Callable[..., CommandResult]] = {
    "eval": cmd_eval,
    "check-geometric": cmd_check_geometric,
    "berezin": cmd_berezin,
    "matrix": cmd_matrix,
    "svd": cmd_svd,
    "decide": cmd_decide,
    "certify": cmd_certify,
    "reproduce-paper": cmd_reproduce,
    "analyze": cmd_analyze,
}
