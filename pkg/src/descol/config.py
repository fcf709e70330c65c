"""Config loading and validation for the descol workbench."""

import copy
from pathlib import Path

import yaml

DEFAULT_CONFIG_PATH = "config.yaml"

DEFAULTS: dict = {
    "seed": 20260301,
    "solver": {
        "brute_force_max_vertices": 8,
    },
    "sweep": {
        "alphabets": [2, 3, 4, 5],
        "max_prefix": 4,
        "max_cycle": 4,
    },
    "experiments": {
        "transfer": {"count": 500, "max_vertices": 50, "solver_max_vertices": 20},
        "mis": {"count": 500, "max_vertices": 30, "max_degree": 6},
        "palette": {"count": 300, "max_vertices": 12, "exhaustive_max_vertices": 5},
        "shadow": {"count": 300, "max_functions": 3, "max_vertices": 15},
        "levels": {"random_threads": 3, "max_level": 10, "max_obstruction_depth": 8},
        "solver": {"count": 200, "min_vertices": 5, "max_vertices": 8,
                   "exhaustive_vertices": 4},
        "uniformize": {"count": 200, "max_functions": 4, "max_vertices": 12,
                       "round_trip_max_vertices": 7},
    },
}


def _merge(base: dict, override: dict, where: str, errors: list[str]) -> dict:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        name = f"{where}.{key}" if where else key
        if key not in base:
            errors.append(f"unknown setting {name!r}")
            continue
        if isinstance(base[key], dict):
            if not isinstance(value, dict):
                errors.append(f"{name} must be a mapping, got {value!r}")
                continue
            merged[key] = _merge(base[key], value, name, errors)
        else:
            merged[key] = value
    return merged


def _check_int(value, name: str, minimum: int, errors: list[str]) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        errors.append(f"{name} must be an integer, got {value!r}")
    elif value < minimum:
        errors.append(f"{name} must be >= {minimum}, got {value}")


def validate_config(config: dict) -> list[str]:
    """Type and range problems in an already merged config."""
    errors: list[str] = []
    _check_int(config["seed"], "seed", 0, errors)
    _check_int(config["solver"]["brute_force_max_vertices"],
               "solver.brute_force_max_vertices", 0, errors)

    sweep = config["sweep"]
    alphabets = sweep["alphabets"]
    if not isinstance(alphabets, list) or not alphabets:
        errors.append(f"sweep.alphabets must be a nonempty list, got {alphabets!r}")
    else:
        for a in alphabets:
            _check_int(a, "sweep.alphabets entry", 2, errors)
    _check_int(sweep["max_prefix"], "sweep.max_prefix", 0, errors)
    _check_int(sweep["max_cycle"], "sweep.max_cycle", 1, errors)

    for battery, settings in config["experiments"].items():
        for key, value in settings.items():
            _check_int(value, f"experiments.{battery}.{key}", 0, errors)

    solver = config["experiments"]["solver"]
    if not errors and solver["min_vertices"] > solver["max_vertices"]:
        errors.append("experiments.solver.min_vertices exceeds max_vertices")
    return errors


def load_config(path: str | Path | None = None) -> dict:
    """Load config YAML merged over the built-in defaults.

    With no path, config.yaml in the working directory is used if present,
    otherwise the defaults. An explicit path that does not exist raises
    OSError; unknown or ill-typed settings raise ValueError.
    """
    explicit = path is not None
    path = Path(path if explicit else DEFAULT_CONFIG_PATH)
    if not path.exists():
        if explicit:
            raise FileNotFoundError(f"config file {path} not found")
        return copy.deepcopy(DEFAULTS)

    with open(path) as f:
        try:
            raw = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError(f"{path}: malformed YAML: {e}") from None
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ValueError(f"{path}: top level must be a mapping")

    errors: list[str] = []
    config = _merge(DEFAULTS, raw, "", errors)
    if not errors:
        errors = validate_config(config)
    if errors:
        raise ValueError(f"{path}: " + "; ".join(errors))
    return config
