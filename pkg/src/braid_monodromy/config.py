"""Run configuration shared by the tracker, the verifiers and the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

OUTPUT_DIR_ENV = "BRAID_MONODROMY_OUT"


@dataclass(frozen=True)
class RunConfig:
    root_tol: float = 1e-9
    multiplicity_tol: float = 1e-7
    collision: float = 1e-7
    r: float = 0.05
    theta: float = 0.3183
    min_steps: int = 64
    min_step: float = 1e-10
    gap_ratio: float = 2.0
    move_fraction: float = 0.25
    orbit_cap: int = 1_000_000
    identity_cap: int = 12
    conjugate_cap: int = 64
    output_dir: str = "."
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("root_tol", "multiplicity_tol", "collision", "r", "min_step", "gap_ratio", "move_fraction"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.r >= 0.5:
            raise ValueError("excursion radius r must be below 0.5")
        for name in ("min_steps", "orbit_cap", "identity_cap", "conjugate_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")

    def refined(self, factor: int = 2) -> RunConfig:
        """Same tolerances with step bounds divided by ``factor``."""
        return replace(self, min_steps=self.min_steps * factor)

    def with_overrides(self, **kw) -> RunConfig:
        kw = {k: v for k, v in kw.items() if v is not None}
        return replace(self, **kw)

    def to_json(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _coerce(name: str, value: str):
    kind = {f.name: f.type for f in fields(RunConfig)}[name]
    if kind in ("int", int):
        return int(value)
    if kind in ("float", float):
        return float(value)
    return value


def load_config(path: str | Path | None = None, **overrides) -> RunConfig:
    """Read ``key = value`` lines, then apply flag overrides.

    Blank lines and ``#`` comments are skipped.  The output directory may also
    come from the ``BRAID_MONODROMY_OUT`` environment variable; explicit
    values win over it.
    """
    values: dict = {}
    env_dir = os.environ.get(OUTPUT_DIR_ENV)
    if env_dir:
        values["output_dir"] = env_dir
    if path is not None:
        known = {f.name for f in fields(RunConfig)}
        for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, val = (s.strip() for s in line.split("=", 1))
            if key not in known:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = _coerce(key, val)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**values)
