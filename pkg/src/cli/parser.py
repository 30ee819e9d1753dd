import argparse

from ..config import AppSettings
from ..core.exceptions import UsageError

COMMAND_HELP = {
    "eval": "evaluate a symbol at points of the closed disc",
    "check-geometric": "parabolic margin, sup-norm bracket and sufficiency check on a grid",
    "berezin": "Berezin transform at points (CSV rows)",
    "matrix": "finite section of the Toeplitz operator",
    "svd": "extreme singular values of finite sections",
    "decide": "decision procedure for harmonic polynomials in normalized form",
    "certify": "Neumann series invertibility certificate",
    "reproduce-paper": "run the reference checks",
    "analyze": "margin, Berezin lower bound, certificate and decision in one report",
}


class BergtolArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _add_symbol(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--symbol", required=required, metavar="PATH", help="symbol description (JSON)")


def _add_format(parser: argparse.ArgumentParser, default: str = "json") -> None:
    parser.add_argument("--format", choices=("json", "csv"), default=default, help=f"output format (default {default})")


def _add_grid(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rings", type=int, default=AppSettings.DEFAULT_RINGS, help="grid rings")
    parser.add_argument("--angles", type=int, default=AppSettings.DEFAULT_ANGLES, help="angles on the outer ring")
    parser.add_argument("--boundary-gap", type=float, default=AppSettings.DEFAULT_BOUNDARY_GAP,
                        help="distance of the boundary ring to the unit circle")
    parser.add_argument("--resolution", type=int, default=AppSettings.DEFAULT_NORM_RESOLUTION,
                        help="sup-norm resolution")


def _add_common(parser: argparse.ArgumentParser) -> None:
    # Auch nach dem Unterbefehl erlaubt; SUPPRESS lässt die globalen Werte stehen
    parser.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="decision tolerance")
    parser.add_argument("--quad-tol", type=float, default=argparse.SUPPRESS, help="Berezin quadrature tolerance")
    parser.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")
    parser.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="debug output on stderr")


def build_parser() -> BergtolArgumentParser:
    parser = BergtolArgumentParser(
        prog=AppSettings.APP_NAME,
        description="Invertibility of Toeplitz operators on the Bergman space of the unit disc",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {AppSettings.VERSION}")
    parser.add_argument("--verbose", action="store_true", help="debug output on stderr")
    parser.add_argument("--log-file", action="store_true", help="also write application.log and errors.log")
    parser.add_argument("--seed", type=int, default=AppSettings.DEFAULT_SEED, help="random seed")
    parser.add_argument("--tol", type=float, default=None,
                        help=f"decision tolerance (default {AppSettings.DEFAULT_TOLERANCE} or ${AppSettings.TOLERANCE_ENV_VAR})")
    parser.add_argument("--quad-tol", type=float, default=AppSettings.DEFAULT_QUADRATURE_TOLERANCE,
                        help="Berezin quadrature tolerance")

    commands = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=BergtolArgumentParser)
    commands.required = True
    sub = {name: commands.add_parser(name, help=text, description=text) for name, text in COMMAND_HELP.items()}
    for subparser in sub.values():
        _add_common(subparser)

    _add_symbol(sub["eval"])
    sub["eval"].add_argument("--z", action="append", metavar="RE+IMi", help="evaluation point (repeatable)")
    _add_format(sub["eval"])

    _add_symbol(sub["check-geometric"])
    _add_grid(sub["check-geometric"])
    sub["check-geometric"].add_argument("--delta", type=float, default=1.0, help="parabolic parameter in (0, 1]")
    sub["check-geometric"].add_argument("--form", choices=("quadratic", "linear"), default="quadratic")
    sub["check-geometric"].add_argument("--rho", type=float, default=None,
                                        help="exceptional-set radius (default: derived from the grid)")
    sub["check-geometric"].add_argument("--variant", choices=("quadratic", "linear"), default="quadratic")
    _add_format(sub["check-geometric"])

    _add_symbol(sub["berezin"])
    sub["berezin"].add_argument("--z", action="append", metavar="RE+IMi", help="evaluation point (repeatable)")
    sub["berezin"].add_argument("--radii", metavar="START:STOP:COUNT", help="equally spaced points on [0, 1)")
    sub["berezin"].add_argument("--route", choices=("auto", "quad", "series", "matrix"), default="auto")
    sub["berezin"].add_argument("--n", type=int, default=None, help="truncation size for the matrix route")
    _add_format(sub["berezin"], default="csv")

    _add_symbol(sub["matrix"])
    sub["matrix"].add_argument("--n", type=int, required=True, help="dimension N")
    sub["matrix"].add_argument("--route", choices=("auto", "closed", "quad"), default="auto")
    _add_format(sub["matrix"])

    _add_symbol(sub["svd"])
    sub["svd"].add_argument("--n", type=int, default=None, help="dimension N")
    sub["svd"].add_argument("--n-sweep", metavar="START:STOP:STEP", help="inclusive range of dimensions")
    sub["svd"].add_argument("--route", choices=("auto", "closed", "quad"), default="auto")
    _add_format(sub["svd"])

    _add_symbol(sub["decide"])
    sub["decide"].add_argument("--mode", choices=("exact", "float"), default="exact")
    _add_format(sub["decide"])

    _add_symbol(sub["certify"])
    sub["certify"].add_argument("--resolution", type=int, default=AppSettings.DEFAULT_NORM_RESOLUTION)
    sub["certify"].add_argument("--luecking", nargs=2, type=float, metavar=("M", "S"),
                                help="also report the bound M / S^2")
    _add_format(sub["certify"])

    _add_format(sub["reproduce-paper"])

    _add_symbol(sub["analyze"])
    _add_grid(sub["analyze"])
    sub["analyze"].add_argument("--delta", type=float, default=1.0, help="parabolic parameter in (0, 1]")
    sub["analyze"].add_argument("--mode", choices=("exact", "float"), default="float")
    _add_format(sub["analyze"])
    return parser


def parse_range(text: str, name: str, integer: bool = False):
    """'a:b:c' -> (a, b, c); integers for dimension sweeps"""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"{name} expects START:STOP:{'STEP' if integer else 'COUNT'}, got {text!r}")
    try:
        if integer:
            return tuple(int(part) for part in parts)
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as e:
        raise UsageError(f"{name}: {e}") from e
