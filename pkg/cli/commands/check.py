"""``check``: run one identity checker on an algebra document."""

import argparse
import logging
from dataclasses import replace
from pathlib import Path

from algebra.identities.checkers import CHECKERS
from cli.commands.common import MODE_ALIASES, default_check_config
from cli.config import EXIT_FAILED, EXIT_OK
from cli.services.document_service import document_service

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="check an identity on an algebra document")
    parser.add_argument("algebra_file", type=Path, help="algebra document (JSON)")
    parser.add_argument("--identity", required=True, choices=sorted(CHECKERS), help="checker name")
    parser.add_argument("--mode", choices=sorted(MODE_ALIASES), default="auto",
                        help="auto: exhaustive within budget, randomized above it")
    parser.add_argument("--samples", type=int, help="random samples in randomized mode")
    parser.add_argument("--seed", type=int, help="random seed")
    parser.add_argument("--budget", type=int, help="maximum basis tuples for exhaustive mode")
    parser.set_defaults(run=run)


def run(args: argparse.Namespace) -> int:
    bundle = document_service.read_algebra(args.algebra_file)
    cfg = replace(default_check_config(), mode=MODE_ALIASES[args.mode])
    if args.samples is not None:
        cfg = replace(cfg, samples=args.samples)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    if args.budget is not None:
        cfg = replace(cfg, budget=args.budget)

    report = CHECKERS[args.identity](bundle.algebra, cfg)
    print(report.summary())
    for note in report.notes:
        print(f"  note: {note}")
    return EXIT_OK if report.passed else EXIT_FAILED
