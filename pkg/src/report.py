from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Sequence

from jinja2 import Environment, FileSystemLoader

from .elements import format_set
from .utils import to_json
from .verifier import Certificate, VerdictReport

TEMPLATE_DIR = Path(__file__).resolve().parents[1] / "templates"
FORMATS = ("text", "json")


def bool_word(value: bool) -> str:
    return "true" if value else "false"


def cert_line(cert: Certificate) -> str:
    parts = [cert.kind]
    parts.extend(f"{name}={format_set(mask)}" for name, mask in cert.sets)
    parts.extend(f"{name}={e}" for name, e in cert.elements)
    parts.extend(f"{key}={value}" for key, value in cert.values)
    if cert.note:
        parts.append(f'note "{cert.note}"')
    return " ".join(parts)


def _environment(template_dir: Path) -> Environment:
    env = Environment(
        loader=FileSystemLoader(str(template_dir)),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    env.filters["bool_word"] = bool_word
    env.filters["cert_line"] = cert_line
    return env


def render_text(reports: Sequence[VerdictReport], *, template_dir: Path = TEMPLATE_DIR) -> str:
    passed = sum(1 for r in reports if r.passed)
    tpl = _environment(template_dir).get_template("report.txt.j2")
    return tpl.render(reports=list(reports), passed=passed, failed=len(reports) - passed)


def render_json(reports: Sequence[VerdictReport]) -> str:
    passed = sum(1 for r in reports if r.passed)
    payload: Dict[str, Any] = {
        "format": "REPORT v1",
        "reports": [r.to_dict() for r in reports],
        "summary": {"reports": len(reports), "passed": passed, "failed": len(reports) - passed},
    }
    return to_json(payload)


def render(reports: Sequence[VerdictReport], fmt: str = "text") -> str:
    if fmt == "json":
        return render_json(reports)
    if fmt == "text":
        return render_text(reports)
    raise ValueError(f"unknown report format {fmt!r}; expected one of {', '.join(FORMATS)}")
