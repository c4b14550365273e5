"""
Configuration Management for the Van Kampen Presentation Toolkit
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent

# Determinism
RANDOM_SEED = int(os.getenv("RANDOM_SEED", "42"))

# Root certification
NEWTON_GUARD_DIGITS = int(os.getenv("NEWTON_GUARD_DIGITS", "2"))
CERTIFY_BUDGET_FACTOR = int(os.getenv("CERTIFY_BUDGET_FACTOR", "64"))  # budget = factor * n^2
CERTIFY_OVERSAMPLING = int(os.getenv("CERTIFY_OVERSAMPLING", "3"))  # start points per root

# Monodromy following
MONODROMY_MAX_ITERATIONS = int(os.getenv("MONODROMY_MAX_ITERATIONS", "100000"))
ADVANCE_MAX_HALVINGS = int(os.getenv("ADVANCE_MAX_HALVINGS", "20"))
SAFETY_SPOT_CHECKS = int(os.getenv("SAFETY_SPOT_CHECKS", "0"))

# Group computations
MAX_COSETS = int(os.getenv("MAX_COSETS", "10000000"))
SIMPLIFY_BUDGET = int(os.getenv("SIMPLIFY_BUDGET", "200"))
SIMPLIFY_PLATEAU = int(os.getenv("SIMPLIFY_PLATEAU", "10"))

# Pipeline
WORKER_JOBS = int(os.getenv("WORKER_JOBS", "1"))
OUTPUT_FORMAT = os.getenv("OUTPUT_FORMAT", "text")
PLANE_SEARCH_BOUND = int(os.getenv("PLANE_SEARCH_BOUND", "3"))
PLANE_SEARCH_LIMIT = int(os.getenv("PLANE_SEARCH_LIMIT", "64"))  # candidates checked per search
DEBUG_MODE = os.getenv("DEBUG_MODE", "False").lower() == "true"

# Data Paths
OUTPUT_DIR = PROJECT_ROOT / os.getenv("OUTPUT_DIR", "data/output")
LOG_DIR = PROJECT_ROOT / os.getenv("LOG_DIR", "logs")

# Create directories if they don't exist
OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
LOG_DIR.mkdir(parents=True, exist_ok=True)

# Packaged catalog of reflection group data
CATALOG_PATH = PROJECT_ROOT / "src" / "catalog" / "data" / "reflection_groups.yaml"

# Output formats
OUTPUT_FORMATS = ["text", "json"]

# CLI exit codes
EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_RESOURCE_LIMIT = 3
EXIT_INTERNAL = 4
