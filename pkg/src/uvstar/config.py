"""Run configuration.

One INI file plus command-line overrides; no environment variables.
Defaults ship with the package (``data/defaults.cfg``) so the CLI works
out of the box against the bundled data snapshot.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .errors import SchemaError
from .ingest import Era


@dataclass(frozen=True)
class RunConfig:
    manifest_path: Path
    era: Era = Era.POSTWAR
    out_dir: Path = Path("out")
    output_format: str = "csv"  # csv | json
    classification_tol: float = 0.0
    max_breaks: int = 7
    min_seg_frac: float = 0.10
    ms16_eps: float = 0.9
    ms16_zeta: float = 0.26
    ms16_kappa: float = 0.92
    policy_multiplier: float = 0.5
    render_figures: bool = True

    def __post_init__(self) -> None:
        if self.output_format not in ("csv", "json"):
            raise SchemaError(f"output format must be csv or json, got {self.output_format!r}")
        if self.classification_tol < 0:
            raise SchemaError("classification tolerance must be non-negative")
        if not 0 < self.min_seg_frac < 1:
            raise SchemaError("minimum segment fraction must lie in (0, 1)")
        if self.max_breaks < 0:
            raise SchemaError("maximum break count must be non-negative")


def default_config_path() -> Path:
    return Path(str(resources.files("uvstar") / "data" / "defaults.cfg"))


def load_config(path: Path | None = None) -> RunConfig:
    """Bundled defaults, overlaid with the user's config file if given."""
    parser = configparser.ConfigParser()
    if not parser.read(default_config_path()):
        raise SchemaError("bundled defaults.cfg is missing")
    if path is not None:
        if not parser.read(path):
            raise SchemaError(f"cannot read config file {path}")

    run = parser["run"]
    ms16 = parser["ms16"]
    breaks = parser["breaks"]
    policy = parser["policy"]

    raw_manifest = run.get("manifest", "").strip()
    if not raw_manifest:
        from .ingest import bundled_manifest_path

        manifest = bundled_manifest_path()
    else:
        manifest = Path(raw_manifest)
        if not manifest.is_absolute() and path is not None:
            manifest = Path(path).parent / manifest

    return RunConfig(
        manifest_path=manifest,
        era=Era(run.get("era", "postwar")),
        out_dir=Path(run.get("out_dir", "out")),
        output_format=run.get("format", "csv"),
        classification_tol=run.getfloat("classification_tol", 0.0),
        max_breaks=breaks.getint("max_breaks", 7),
        min_seg_frac=breaks.getfloat("min_seg_frac", 0.10),
        ms16_eps=ms16.getfloat("eps", 0.9),
        ms16_zeta=ms16.getfloat("zeta", 0.26),
        ms16_kappa=ms16.getfloat("kappa", 0.92),
        policy_multiplier=policy.getfloat("multiplier", 0.5),
        render_figures=run.getboolean("figures", True),
    )


def apply_overrides(config: RunConfig, **overrides) -> RunConfig:
    """Replace any non-None override onto the config."""
    updates = {k: v for k, v in overrides.items() if v is not None}
    if "era" in updates and not isinstance(updates["era"], Era):
        updates["era"] = Era(updates["era"])
    for key in ("out_dir", "manifest_path"):
        if key in updates:
            updates[key] = Path(updates[key])
    return replace(config, **updates)
