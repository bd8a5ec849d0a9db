"""
Main entry point for the domination benchmark toolkit.
Sets up logging, parses the command line and maps errors to exit codes.
"""

import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

# Add the app directory to Python path
app_dir = Path(__file__).parent
sys.path.insert(0, str(app_dir))

from core.errors import DomsetError, InputError, InvalidResultError, SolverError
from core.logging_config import get_logger, log_error, setup_logging
from cli.commands import dispatch
from cli.parser import build_parser

EXIT_ERROR = 1
EXIT_INPUT = 2
EXIT_SOLVER = 3
EXIT_INVALID = 4


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, (InputError, OSError)):
        return EXIT_INPUT
    if isinstance(error, SolverError):
        return EXIT_SOLVER
    if isinstance(error, InvalidResultError):
        return EXIT_INVALID
    return EXIT_ERROR


def cli_main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
             err: Optional[TextIO] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
        out: Stream for command results (default: stdout)
        err: Stream for the one-line error diagnostic (default: stderr)

    Returns:
        0 on success, 2 input or config error, 3 solver failure,
        4 invalid dominating set, 1 anything else
    """
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose >= 2:
        level = logging.DEBUG
    setup_logging(log_level=level, enable_file_logging=args.log_file)
    logger = get_logger(__name__)

    try:
        return dispatch(args, out)
    except (DomsetError, OSError) as e:
        if args.verbose or args.log_file:
            log_error(e, f"command {args.command}")
        err.write(f"error: {e}\n")
        return exit_code_for(e)
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        err.write(f"error: unexpected {type(e).__name__}: {e}\n")
        return EXIT_ERROR


def main():
    """Console entry point."""
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
