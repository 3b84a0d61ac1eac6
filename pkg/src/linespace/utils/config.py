"""Numerical defaults and the optional JSON run configuration."""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

# Absolute tolerance for algebraic identities at |coordinates| <= 1e3
DEFAULT_TOLERANCE = 1e-10

# Central-difference step in (Re xi, Im xi)
DEFAULT_STEP = 1e-5

# Torus evaluation rejects |xi| below this (branch points at the poles)
POLE_EXCLUSION = 1e-12

# Chart-1 evaluation of branched sections rejects |xi| above this
CHART_LIMIT = 1e12

# Significant digits written to CSV and OBJ files
FLOAT_FORMAT = "%.17g"


def load_config(config_path: Optional[Union[str, Path]]) -> Dict[str, Any]:
    """
    Load a run configuration file.

    The file is a JSON object whose keys are command-line option destinations
    (``surface``, ``a1``, ``grid``, ``seed``, ...). Command-line flags take precedence.

    Args:
        config_path: Path to the JSON file. If None, an empty configuration is returned.

    Returns:
        Dictionary of option defaults
    """
    if config_path is None:
        return {}

    config_path = Path(config_path)
    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        config = json.load(f)

    if not isinstance(config, dict):
        raise ValueError(f"Config file {config_path} must contain a JSON object")

    # Allow both "max-modulus" and "max_modulus" spellings
    return {key.replace("-", "_"): value for key, value in config.items()}
