"""Helpers shared by the subcommands."""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from algebra.core.reports import CheckConfig, CheckMode
from cli.config import CHECK_BUDGET, CHECK_SAMPLES, CHECK_SEED, COORD_RANGE
from cli.services.document_service import DocumentError

MODE_ALIASES = {
    "auto": CheckMode.AUTO,
    "exhaustive": CheckMode.EXHAUSTIVE,
    "random": CheckMode.RANDOMIZED,
    "randomized": CheckMode.RANDOMIZED,
}


def default_check_config() -> CheckConfig:
    """Check settings from the environment."""
    return CheckConfig(samples=CHECK_SAMPLES, seed=CHECK_SEED, coord_range=COORD_RANGE, budget=CHECK_BUDGET)


def parse_params(pairs: Optional[List[str]]) -> Dict[str, Any]:
    """``KEY=VALUE`` pairs; VALUE is JSON when it parses, a plain string otherwise."""
    params: Dict[str, Any] = {}
    for pair in pairs or []:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise DocumentError("--param", [(pair, "expected KEY=VALUE")])
        try:
            params[key] = json.loads(raw)
        except json.JSONDecodeError:
            params[key] = raw
    return params


def write_output(text: str, path: Optional[Path]) -> None:
    if path is None:
        print(text, end="")
    else:
        Path(path).write_text(text)
