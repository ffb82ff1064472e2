"""
Runtime settings for QCSAT: defaults plus the single environment override.
"""
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import dotenv

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT_ENV = "QCSAT_ENUMERATION_LIMIT"


def get_default_settings() -> Dict[str, Any]:
    """Return the default settings structure."""
    return {
        "logistic": {
            "a": 3.71,
            # log2(3.71) to four places, as used by the cited lower bound
            "cited_log2_a": 1.8912,
            "threshold": 0.5,
        },
        "enumeration_limit": 30,
        "statevector_limit": 20,
        "chunk_size": 1 << 16,
        "extended_precision_digits": 60,
    }


def load_settings(env_file: Optional[Path] = None) -> Dict[str, Any]:
    """
    Build the effective settings.

    Args:
        env_file: Optional dotenv file to load before reading the environment.
            Nothing is loaded unless a path is given.

    Returns:
        The default settings with environment overrides applied.
    """
    settings = get_default_settings()

    if env_file is not None:
        if not dotenv.load_dotenv(env_file, override=True):
            logger.warning("env file %s not found or empty", env_file)

    raw = os.getenv(ENUMERATION_LIMIT_ENV)
    if raw:
        try:
            limit = int(raw)
            if limit < 1:
                raise ValueError(limit)
            settings["enumeration_limit"] = limit
        except ValueError:
            logger.warning(
                "ignoring %s=%r, keeping enumeration limit %d",
                ENUMERATION_LIMIT_ENV, raw, settings["enumeration_limit"],
            )

    return settings


def get_enumeration_limit() -> int:
    """Largest n for which all 2^n assignments may be enumerated."""
    return load_settings()["enumeration_limit"]


def get_statevector_limit() -> int:
    """Largest n for which a dense 2^(n+1) statevector may be allocated."""
    return get_default_settings()["statevector_limit"]


def get_logistic_parameter() -> float:
    """Default logistic-map parameter a."""
    return get_default_settings()["logistic"]["a"]


def get_cited_log2_a() -> float:
    return get_default_settings()["logistic"]["cited_log2_a"]


def get_chunk_size() -> int:
    return get_default_settings()["chunk_size"]


def get_extended_precision_digits() -> int:
    return get_default_settings()["extended_precision_digits"]
