"""
Library defaults and the environment overrides the command line honours.
"""
import os

from symmetric_systems.core.errors import ConfigurationError

VERTEX_CAP_ENV = "SYMSYS_VERTEX_CAP"

DEFAULT_VERTEX_CAP = 5000
DEFAULT_ENUMERATION_CAP = 100_000
DEFAULT_SAMPLES = 200
DEFAULT_SEED = 20240601
DEFAULT_WITNESS_REPORT = 50

# Search-tree node budgets
DEFAULT_IMPRIMITIVE_NODE_CAP = 2_000_000
DEFAULT_ORACLE_NODE_CAP = 20_000_000

# The cross-family suite only runs the oracle where it finishes quickly
DEFAULT_SUITE_ORACLE_NODE_CAP = 300_000
DEFAULT_SUITE_FAMILY_CAP = 500


def vertex_cap() -> int:
    """Return the active vertex cap, honouring ``SYMSYS_VERTEX_CAP``."""
    raw = os.environ.get(VERTEX_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_VERTEX_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{VERTEX_CAP_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ConfigurationError(f"{VERTEX_CAP_ENV} must be a positive integer, got {raw!r}")
    return value
