"""Configuration management for the homalg command-line tool."""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
env_path = Path(__file__).parent.parent / ".env"
if env_path.exists():
    load_dotenv(env_path)

# Tool Configuration
TOOL_NAME = "homalg"
TOOL_VERSION = "1.0.0"
TOOL_DESCRIPTION = "Exact structure-constant workbench for n-ary Hom-Nambu algebras"

# Logging Configuration
LOG_LEVEL = os.getenv("HOMALG_LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_JSON = os.getenv("HOMALG_LOG_JSON", "false").lower() == "true"

# Identity checking
CHECK_BUDGET = int(os.getenv("HOMALG_CHECK_BUDGET", 100_000_000))  # basis tuples per exhaustive check
CHECK_SAMPLES = int(os.getenv("HOMALG_SAMPLES", 200))
CHECK_SEED = int(os.getenv("HOMALG_SEED", 0))
COORD_RANGE = int(os.getenv("HOMALG_COORD_RANGE", 3))  # random coordinates in [-r, r]

# Constructions
TABLE_BUDGET = int(os.getenv("HOMALG_TABLE_BUDGET", 1_000_000))  # basis tuples materialized per construction

# Documents
FORMAT_VERSION = "1"

# Exit codes
EXIT_OK = 0
EXIT_FAILED = 1  # a check failed or a construction refused
EXIT_USAGE = 2  # bad arguments, malformed document, budget exceeded
