from .commands import COMMANDS
from .output import CommandResult, render, render_csv, render_error, render_json
from .parser import build_parser, parse_range
from .reproduce import reproduce_paper
from .runner import exit_code_for, run

__all__ = [
    'COMMANDS',
    'CommandResult',
    'render',
    'render_csv',
    'render_error',
    'render_json',
    'build_parser',
    'parse_range',
    'reproduce_paper',
    'exit_code_for',
    'run',
]
