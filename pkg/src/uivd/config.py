"""
Environment-driven configuration.

All knobs are read once at import time; CLI flags override them.
"""

import logging
import os

# Log level name for the CLI and the MCP server
UIVD_LOG = os.environ.get("UIVD_LOG", "WARNING")

# Largest reduced instance the verifier hands to the exact oracle
ORACLE_VERTEX_LIMIT = int(os.environ.get("UIVD_ORACLE_LIMIT", "18"))

# Default process count for batch verification
DEFAULT_WORKERS = int(os.environ.get("UIVD_WORKERS", "1"))

# Loop size of the randomized property tests
TEST_TRIALS = int(os.environ.get("UIVD_TEST_TRIALS", "200"))

STATS_SCHEMA_VERSION = 2


def configure_logging(level: str = None) -> None:
    """Configure root logging from UIVD_LOG (or an explicit level name)."""
    name = (level or UIVD_LOG).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.WARNING),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
