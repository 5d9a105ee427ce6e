"""
Main entry point for the tiny Li-Keiper coefficient toolkit.
"""
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from src.cli.commands import CommandHandler
from src.cli.parser import build_config, build_parser
from src.config.constants import EXIT_CODES, Command
from src.config.settings import Settings
from src.utils.errors import LiKeiperError
from src.utils.output_utils import OutputUtils

logger = logging.getLogger(__name__)


def configure_logging(level: str) -> None:
    # stderr only: stdout carries the artifact
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=getattr(logging, str(level).upper(), logging.WARNING),
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and emit its artifact; returns the exit code."""
    settings = Settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CODES["success"] if e.code == 0 else EXIT_CODES["usage"]
    configure_logging(args.log_level)

    try:
        config = build_config(args, settings)
    except ValidationError as e:
        parser.print_usage(sys.stderr)
        for error in e.errors():
            location = '.'.join(str(part) for part in error['loc']) or 'config'
            sys.stderr.write(f"usage error [{location}]: {error['msg']}\n")
        return EXIT_CODES["usage"]

    try:
        report = CommandHandler(settings).run(config)
    except LiKeiperError as e:
        logger.error(f"Command {config.command.value} failed in stage {e.stage}: {e}")
        sys.stderr.write(f"error [{e.stage}]: {e}\n")
        return EXIT_CODES["computation"]
    except Exception as e:
        logger.error(f"Unexpected failure in {config.command.value}: {e}", exc_info=True)
        sys.stderr.write(f"error [{config.command.value}]: {e}\n")
        return EXIT_CODES["computation"]

    text = OutputUtils.render(report, config.output_format)
    # The reference command already wrote its table to --output
    output_path = None if config.command is Command.REFERENCE else config.output_path
    OutputUtils.emit(text, output_path, sys.stdout)
    for line in report.summary:
        sys.stderr.write(f"{line}\n")
    return EXIT_CODES["success"]


if __name__ == "__main__":
    sys.exit(main())
