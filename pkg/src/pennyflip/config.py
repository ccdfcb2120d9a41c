"""Run configuration for the verification suite and CLI defaults."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, replace
from pathlib import Path

ENV_CONFIG_PATH = "PENNYFLIP_CONFIG"

_RANGE_RE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


@dataclass(frozen=True)
class Config:
    n_min: int = 3
    n_max: int = 64
    max_rounds: int = 9
    samples: int = 10_000
    seed: int = 0
    tolerance: float = 1e-9
    output_format: str = "json"

    def __post_init__(self) -> None:
        if not 3 <= self.n_min <= self.n_max <= 1024:
            raise ValueError(f"n range [{self.n_min}, {self.n_max}] outside [3, 1024]")
        if not 2 <= self.max_rounds <= 12:
            raise ValueError(f"max_rounds {self.max_rounds} outside [2, 12]")
        if self.samples < 0 or self.seed < 0:
            raise ValueError("samples and seed must be nonnegative")
        if self.output_format not in ("json", "markdown"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def parse_n_range(text: str) -> tuple[int, int]:
    m = _RANGE_RE.match(text)
    if m is None:
        raise ValueError(f"expected a range like 3..64, got {text!r}")
    return int(m.group(1)), int(m.group(2))


_KEYS = {
    "n_range": "n_range",
    "n-range": "n_range",
    "max_rounds": "max_rounds",
    "max-rounds": "max_rounds",
    "samples": "samples",
    "seed": "seed",
    "tolerance": "tolerance",
    "output_format": "output_format",
    "output-format": "output_format",
}


def load_config_file(path: str | Path, base: Config | None = None) -> Config:
    """Read a ``key=value`` config file; unknown keys are an error.

    Flags always win over file values, so callers apply the file first.
    """
    cfg = base or Config()
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        field = _KEYS.get(key)
        if field is None:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        if field == "n_range":
            lo, hi = parse_n_range(value)
            cfg = replace(cfg, n_min=lo, n_max=hi)
        elif field in ("max_rounds", "samples", "seed"):
            cfg = replace(cfg, **{field: int(value)})
        elif field == "tolerance":
            cfg = replace(cfg, tolerance=float(value))
        else:
            cfg = replace(cfg, output_format=value)
    return cfg


def default_config() -> Config:
    """The built-in defaults, overlaid with the env-var config file if set."""
    path = os.environ.get(ENV_CONFIG_PATH)
    if path:
        return load_config_file(path)
    return Config()
