"""Configuration settings for the orelab toolkit."""

import os
from typing import Tuple
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Polynomial limits
MAX_DEGREE = int(os.getenv("ORELAB_MAX_DEGREE", "128"))
MAX_EXPONENT = int(os.getenv("ORELAB_MAX_EXPONENT", "4096"))
MAX_COEFF_BITS = int(os.getenv("ORELAB_MAX_COEFF_BITS", "65536"))

# Randomized equal-degree splitting
DEFAULT_SEED = int(os.getenv("ORELAB_SEED", "0"))

# Range scans
SCAN_WORKERS = int(os.getenv("ORELAB_WORKERS", "1"))

# Logging
DEBUG = os.getenv("ORELAB_DEBUG", "False").lower() == "true"
LOG_LEVEL = "DEBUG" if DEBUG else os.getenv("ORELAB_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"

# Reports
SCHEMA_VERSION = "1.0"
SCHEMA_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "schema", "report.schema.json")
OUTPUT_FORMATS: Tuple[str, ...] = ("text", "json", "csv")
DEFAULT_FORMAT = "text"

# Pure fields of degree 60
PURE_DEGREE = 60
PURE_PRIMES: Tuple[int, ...] = (2, 3, 5)
POWER_COPRIME_TO = 30
