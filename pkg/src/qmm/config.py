"""Run configuration: fixed seeds and sample counts for reproducible output.

Plain key=value config files; environment variables with the QMM_ prefix
override file values, command-line flags override both.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace

ENV_PREFIX = "QMM_"


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    mc_samples: int = 100_000
    output_format: str = "text"  # text | json | csv
    state_cap: int = 200_000_000
    tolerances: dict = field(default_factory=dict)

    def override(self, **kwargs) -> "RunConfig":
        clean = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **clean)


_INT_KEYS = {"seed", "mc_samples", "state_cap"}


def _coerce(key: str, value: str):
    if key in _INT_KEYS:
        return int(float(value))
    return value


def load_config(path: str | None = None, environ=None) -> RunConfig:
    """Config file (key=value lines, # comments), then QMM_* env overrides."""
    values: dict = {}
    if path:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ValueError(f"bad config line: {line!r}")
                key, _, raw = line.partition("=")
                key = key.strip()
                values[key] = _coerce(key, raw.strip())
    env = os.environ if environ is None else environ
    for key in ("seed", "mc_samples", "output_format", "state_cap"):
        raw = env.get(ENV_PREFIX + key.upper())
        if raw is not None:
            values[key] = _coerce(key, raw)
    known = {k: v for k, v in values.items() if k in RunConfig.__dataclass_fields__}
    return RunConfig(**known)
