from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import yaml


def setup_logging(level: str = "INFO") -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(message)s",
    )


def load_yaml(path: str | Path) -> Dict[str, Any]:
    p = Path(path)
    if not p.exists():
        return {}
    with open(p, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def ensure_dir(path: str | Path) -> Path:
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p


def read_text(path: str | Path) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def write_text(path: str | Path, text: str) -> None:
    p = Path(path)
    ensure_dir(p.parent)
    with open(p, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def to_json(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class SweepSettings:
    seed: int = 0
    samples: int = 1000
    exhaustive_max: int = 8
    sample_max: int = 12
    max_elements: Optional[int] = None
    n_jobs: int = 1


def sweep_settings(cfg: Dict[str, Any], **overrides: Any) -> SweepSettings:
    v = cfg.get("verifier", {}) or {}
    max_elements = v.get("max_elements")
    values: Dict[str, Any] = {
        "seed": int(v.get("seed", 0) or 0),
        "samples": int(v.get("samples", 1000) or 1000),
        "exhaustive_max": int(v.get("exhaustive_max_elements", 8) or 8),
        "sample_max": int(v.get("sample_max_elements", 12) or 12),
        "max_elements": int(max_elements) if max_elements is not None else None,
        "n_jobs": int(v.get("n_jobs", 1) or 1),
    }
    for key, value in overrides.items():
        if value is not None:
            values[key] = value
    return SweepSettings(**values)
