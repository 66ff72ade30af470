"""
Configuration loading utilities
"""

import json
import logging
import os
from pathlib import Path
from typing import Dict, Any

import psutil

logger = logging.getLogger(__name__)

DEFAULT_CONFIG: Dict[str, Any] = {
    "caps": {
        "resolution_cap": 32,
        "degree_cap": None,
        "max_qh_simples": 8,
    },
    "jobs": None,
    "output": {"format": "human", "reports_dir": "results/reports"},
    "log_file": "qhcheck.log",
    "fixtures_dir": "fixtures",
}

# environment variable -> (section, key, converter)
ENV_OVERRIDES = {
    "QHCHECK_RESOLUTION_CAP": ("caps", "resolution_cap", int),
    "QHCHECK_DEGREE_CAP": ("caps", "degree_cap", int),
    "QHCHECK_JOBS": (None, "jobs", int),
    "QHCHECK_FORMAT": ("output", "format", str),
}


def _merge(base: Dict[str, Any], extra: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in extra.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def default_jobs() -> int:
    """Worker count when none is configured: physical cores, at least one."""
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


def load_config(config_path: str) -> Dict[str, Any]:
    """
    Load configuration from a JSON file
    
    Args:
        config_path: Path to the configuration file
        
    Returns:
        Dictionary containing configuration, defaults filled in
    """
    config_file = Path(config_path)
    
    if not config_file.exists():
        logger.error(f"Configuration file not found: {config_path}")
        raise FileNotFoundError(f"Configuration file not found: {config_path}")
        
    try:
        with open(config_file, 'r') as f:
            config = _merge(DEFAULT_CONFIG, json.load(f))

        for env_var, (section, key, convert) in ENV_OVERRIDES.items():
            if env_var not in os.environ:
                continue
            value = convert(os.environ[env_var])
            target = config if section is None else config.setdefault(section, {})
            target[key] = value
            logger.info(f"Loaded {key} from environment variable {env_var}")

        if config.get("jobs") is None:
            config["jobs"] = default_jobs()
        return config
        
    except json.JSONDecodeError as e:
        logger.error(f"Invalid JSON in configuration file: {str(e)}")
        raise ValueError(f"Invalid JSON in configuration file: {str(e)}")
    except Exception as e:
        logger.error(f"Error loading configuration: {str(e)}")
        raise


def default_config() -> Dict[str, Any]:
    """Configuration used when no file is given (library callers, tests)."""
    config = _merge(DEFAULT_CONFIG, {})
    config["jobs"] = default_jobs()
    return config
