"""Main entry point for the homalg command-line tool."""

import argparse
import logging
import sys
from typing import List, Optional

from pythonjsonlogger import jsonlogger

from algebra.errors import AlgebraError, BudgetExceededError, HypothesisError
from cli.commands import check, construct, example, pipeline
from cli.config import (
    EXIT_FAILED,
    EXIT_USAGE,
    LOG_FORMAT,
    LOG_JSON,
    LOG_LEVEL,
    TOOL_DESCRIPTION,
    TOOL_NAME,
    TOOL_VERSION,
)
from cli.services.document_service import DocumentError

logger = logging.getLogger(__name__)

EPILOG = """\
examples:
  homalg example fermionic --param N=2 --param eta='["2","3"]' -o fermionic.json
  homalg check fermionic.json --identity hom_nambu
  homalg construct fermionic.json --recipe replace_twists --param maps=identity -o untwisted.json
  homalg pipeline pipeline.json --report report.json

exit status: 0 all checks pass, 1 a check failed or a construction refused,
2 usage, document or budget errors
"""


def setup_logging(level: str = LOG_LEVEL, json_lines: bool = LOG_JSON) -> None:
    """Send log records to stderr; stdout is reserved for documents and reports."""
    handler = logging.StreamHandler(sys.stderr)
    if json_lines:
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logging.basicConfig(level=level, handlers=[handler], force=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description=TOOL_DESCRIPTION,
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--log-json", action="store_true", help="JSON log lines on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (check, construct, example, pipeline):
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging("DEBUG" if args.verbose else LOG_LEVEL, args.log_json or LOG_JSON)

    try:
        return args.run(args)
    except HypothesisError as e:
        logger.error(f"✗ Construction refused: {e}")
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_FAILED
    except DocumentError as e:
        logger.error(f"✗ Invalid document: {e}")
        for location, message in e.problems:
            print(f"{e.source}: {location}: {message}" if location else f"{e.source}: {message}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as e:
        logger.error(f"✗ Budget exceeded: {e}")
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as e:
        logger.error(f"✗ {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"✗ Cannot access file: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
