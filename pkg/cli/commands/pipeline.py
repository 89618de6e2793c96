"""``pipeline``: run a pipeline document and report."""

import argparse
import logging
from pathlib import Path

from cli.commands.common import default_check_config
from cli.config import EXIT_FAILED, EXIT_OK, TABLE_BUDGET
from cli.services.document_service import document_service, dumps_json
from cli.services.pipeline_service import PipelineService, format_pipeline_report

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("pipeline", help="run constructions and checks from a pipeline document")
    parser.add_argument("pipeline_file", type=Path, help="pipeline document (JSON)")
    parser.add_argument("--report", type=Path, help="write the machine-readable JSON report here")
    parser.set_defaults(run=run)


def run(args: argparse.Namespace) -> int:
    text = Path(args.pipeline_file).read_text()
    doc = document_service.parse_pipeline(text, source=str(args.pipeline_file))
    report = PipelineService(default_check_config(), TABLE_BUDGET).run_pipeline(doc)
    print(format_pipeline_report(report), end="")
    if args.report is not None:
        Path(args.report).write_text(dumps_json(report.model_dump(mode="json")))
        logger.info(f"Report written to {args.report}")
    return EXIT_OK if report.passed else EXIT_FAILED
