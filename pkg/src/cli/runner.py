import sys
from typing import Optional, Sequence, TextIO

from .commands import COMMANDS
from .output import render, render_error
from .parser import build_parser
from ..config import ExitCodes
from ..core import cli_logger, enable_debug_logging, enable_file_logging
from ..core.exceptions import (
    ArgumentError,
    BergtolError,
    DomainError,
    HypothesisError,
    ParseError,
    UsageError,
)
from ..models.run_config import RunConfig

# Fehlerklasse -> Exit-Code; die erste passende Klasse gewinnt
EXIT_CODE_MAP = (
    (UsageError, ExitCodes.USAGE),
    (ParseError, ExitCodes.USAGE),
    (ArgumentError, ExitCodes.USAGE),
    (HypothesisError, ExitCodes.HYPOTHESIS_OR_DOMAIN),
    (DomainError, ExitCodes.HYPOTHESIS_OR_DOMAIN),
)


def exit_code_for(error: BergtolError) -> int:
    for error_type, code in EXIT_CODE_MAP:
        if isinstance(error, error_type):
            return code
    return ExitCodes.INTERNAL_ERROR


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """
    Parse ``argv``, dispatch to the command handler and write the rendered
    result to ``stdout``. Returns the process exit code instead of exiting.

    Domain and hypothesis failures additionally print an error document to
    stdout; usage problems only go to stderr.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(str(e).rstrip(), file=stderr)
        return ExitCodes.USAGE
    except SystemExit as e:
        # --help und --version
        return int(e.code or 0)

    if args.verbose:
        enable_debug_logging()
    if args.log_file:
        enable_file_logging()

    config = None
    try:
        config = RunConfig.from_namespace(args)
        cli_logger.debug(f"Konfiguration: {config.to_dict()}")
        result = COMMANDS[args.command](args, config)
        stdout.write(render(config, result))
        return result.exit_code
    except BergtolError as e:
        code = exit_code_for(e)
        if code == ExitCodes.USAGE:
            cli_logger.warning(f"Ungültige Eingabe: {e}")
            print(f"{parser.prog}: error: {e}", file=stderr)
        else:
            cli_logger.info(f"{type(e).__name__}: {e}")
            stdout.write(render_error(config, e))
        return code
    except Exception as e:
        cli_logger.log_error(e, {"command": args.command})
        print(f"{parser.prog}: internal error: {e}", file=stderr)
        return ExitCodes.INTERNAL_ERROR
