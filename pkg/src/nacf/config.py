"""Run configuration: defaults, config-file parsing, flag overrides.

The config file is flat "key = value" lines; '#' starts a comment.  Window
values are comma-separated pairs.  Flags always win over the file, the
file over the defaults.  The file path comes from --config or, failing
that, the NACF_CONFIG environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

_FORMATS = ("json", "tsv")


@dataclass(frozen=True)
class RunConfig:
    prime_window: tuple[int, int] = (2, 100_000)
    scan_range: tuple[int, int] = (2, 300)
    tol: float = 1e-9
    theta_nmax: int = 10_000
    output_format: str = "json"
    threads: int = 1

    def __post_init__(self):
        if self.prime_window[0] >= self.prime_window[1]:
            raise ValueError("prime window must satisfy lo < hi")
        if self.scan_range[0] > self.scan_range[1]:
            raise ValueError("scan range must satisfy lo <= hi")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.output_format not in _FORMATS:
            raise ValueError(f"output format must be one of {_FORMATS}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


def _parse_pair(value: str) -> tuple[int, int]:
    parts = [p for p in value.replace(",", " ").split() if p]
    if len(parts) != 2:
        raise ValueError(f"expected two integers, got {value!r}")
    return int(parts[0]), int(parts[1])


def load_config_file(path: str) -> dict:
    """Key/value pairs from a config file, with typed window pairs."""
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"malformed config line: {raw.rstrip()}")
            key, _, val = line.partition("=")
            key = key.strip()
            val = val.strip()
            if key in ("prime_window", "scan_range"):
                values[key] = _parse_pair(val)
            elif key == "tol":
                values[key] = float(val)
            elif key in ("theta_nmax", "threads"):
                values[key] = int(val)
            elif key == "output_format":
                values[key] = val
            else:
                raise ValueError(f"unknown config key: {key}")
    return values


def resolve_config(args) -> RunConfig:
    """Defaults, then the config file (flag or NACF_CONFIG), then flags."""
    cfg = RunConfig()
    path = getattr(args, "config", None) or os.environ.get("NACF_CONFIG")
    if path:
        cfg = replace(cfg, **load_config_file(path))
    overrides = {}
    if getattr(args, "window", None):
        overrides["prime_window"] = tuple(args.window)
    if getattr(args, "scan", None):
        overrides["scan_range"] = tuple(args.scan)
    if getattr(args, "tol", None) is not None:
        overrides["tol"] = args.tol
    if getattr(args, "theta_nmax", None) is not None:
        overrides["theta_nmax"] = args.theta_nmax
    if getattr(args, "format", None):
        overrides["output_format"] = args.format
    if getattr(args, "threads", None) is not None:
        overrides["threads"] = args.threads
    if overrides:
        cfg = replace(cfg, **overrides)
    return cfg
