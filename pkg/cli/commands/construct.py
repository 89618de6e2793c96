"""``construct``: apply one catalog recipe to an algebra document."""

import argparse
import logging
from pathlib import Path

from algebra.constructions.catalog import RECIPES
from cli.commands.common import default_check_config, parse_params, write_output
from cli.config import EXIT_OK, TABLE_BUDGET
from cli.services.document_service import document_service
from cli.services.pipeline_service import PipelineService

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("construct", help="apply a construction recipe")
    parser.add_argument("algebra_file", type=Path, help="input algebra document (JSON)")
    parser.add_argument("--recipe", required=True, choices=sorted(RECIPES), help="construction name")
    parser.add_argument("--param", action="append", metavar="KEY=VALUE",
                        help="recipe parameter; VALUE is JSON, 'identity' or an @name reference")
    parser.add_argument("--unchecked", action="store_true", help="skip the hypothesis checks")
    parser.add_argument("-o", "--output", type=Path, help="output document (default: stdout)")
    parser.set_defaults(run=run)


def run(args: argparse.Namespace) -> int:
    bundle = document_service.read_algebra(args.algebra_file)
    service = PipelineService(default_check_config(), TABLE_BUDGET)
    result = service.apply_step(bundle, args.recipe, parse_params(args.param), checked=not args.unchecked)
    logger.info(f"{args.recipe}: dim {result.algebra.dim}, arity {result.algebra.arity}")
    write_output(document_service.dump_example(result), args.output)
    return EXIT_OK
