"""Plain-text run configuration files.

Format: one ``[experiment]`` section header naming the experiment, followed
by ``key = value`` lines.  Keys are the :class:`~ebcm.experiments.ExperimentConfig`
field names; unknown keys are rejected.  Defaults come from the
per-experiment default parameter sets.  Every parse error carries the file
path and line number.
"""
from __future__ import annotations

import dataclasses
from pathlib import Path

from .experiments import EXPERIMENT_NAMES, ExperimentConfig, make_config


class ConfigError(ValueError):
    """Raised for any malformed or out-of-range configuration input."""


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(ExperimentConfig)}


def _parse_value(key: str, raw: str):
    tp = _FIELD_TYPES[key]
    if key == "sweep_values":
        return tuple(float(v) for v in raw.split(",") if v.strip())
    if tp == "bool" or tp is bool:
        low = raw.lower()
        if low in ("true", "yes", "1", "on"):
            return True
        if low in ("false", "no", "0", "off"):
            return False
        raise ValueError(f"expected a boolean, got {raw!r}")
    if tp == "int" or tp is int:
        return int(raw)
    if tp == "float" or tp is float:
        return float(raw)
    return raw


def parse_config(path) -> ExperimentConfig:
    """Parse a configuration file into a validated ExperimentConfig."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"{path}: no such config file")
    experiment: str | None = None
    overrides: dict = {}
    key_lines: dict[str, int] = {}
    section_line = 0
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if text.startswith("["):
            if not text.endswith("]"):
                raise ConfigError(f"{path}:{lineno}: malformed section header {line.strip()!r}")
            if experiment is not None:
                raise ConfigError(f"{path}:{lineno}: multiple experiment sections")
            name = text[1:-1].strip()
            if name not in EXPERIMENT_NAMES:
                raise ConfigError(f"{path}:{lineno}: unknown experiment {name!r}")
            experiment = name
            section_line = lineno
            continue
        if experiment is None:
            raise ConfigError(f"{path}:{lineno}: key before any experiment section")
        if "=" not in text:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line.strip()!r}")
        key, raw = (part.strip() for part in text.split("=", 1))
        if key == "experiment" or key not in _FIELD_TYPES:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            overrides[key] = _parse_value(key, raw)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key!r}: {exc}") from exc
        key_lines[key] = lineno
    if experiment is None:
        raise ConfigError(f"{path}: no experiment section")
    try:
        return make_config(experiment, **overrides)
    except ValueError as exc:
        # Range errors from config validation; attribute to the offending line.
        lineno = next(
            (ln for key, ln in key_lines.items() if key in str(exc)), section_line
        )
        raise ConfigError(f"{path}:{lineno}: {exc}") from exc
