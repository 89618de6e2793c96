"""``example``: write a built-in example as an algebra document."""

import argparse
from pathlib import Path

from algebra.generators.registry import GENERATORS, generate
from cli.commands.common import parse_params, write_output
from cli.config import EXIT_OK
from cli.services.document_service import document_service


def register(subparsers) -> None:
    parser = subparsers.add_parser("example", help="generate a built-in example")
    parser.add_argument("name", choices=sorted(GENERATORS), help="example name")
    parser.add_argument("--param", action="append", metavar="KEY=VALUE", help="generator parameter (JSON value)")
    parser.add_argument("-o", "--output", type=Path, help="output document (default: stdout)")
    parser.set_defaults(run=run)


def run(args: argparse.Namespace) -> int:
    example = generate(args.name, **parse_params(args.param))
    write_output(document_service.dump_example(example), args.output)
    return EXIT_OK
