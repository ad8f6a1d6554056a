"""MATROID v1 and GRAPH v1 text formats.

A stream may hold several blocks, each optionally preceded by a
`# name: <id>` comment; other `#` lines and blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from .elements import ids_of, mask_of
from .errors import FormatError, MatroidError
from .graph import Multigraph
from .matroid import RANK_TABLE_LIMIT, GraphRank, Matroid, bases, cycle_matroid, dual, from_bases
from .utils import read_text

NAME_PREFIX = "# name:"

Line = Tuple[int, str]


def serialize_graph(g: Multigraph) -> str:
    lines = ["graph v1", f"vertices {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    lines.append("end")
    return "\n".join(lines) + "\n"


def serialize_matroid(M: Matroid) -> str:
    lines = ["matroid v1", f"elements {M.size}", f"rank {M.full_rank}"]
    backend = M.backend
    if isinstance(backend, GraphRank) and (backend.dual or M.size > RANK_TABLE_LIMIT):
        g = backend.graph
        lines.append("cographic" if backend.dual else "graphic")
        lines.append(f"vertices {g.vertex_count}")
        lines.extend(f"{u} {v}" for u, v in g.edges)
    else:
        if M.size > RANK_TABLE_LIMIT:
            raise FormatError(f"bases are only written for at most {RANK_TABLE_LIMIT} elements")
        lines.append("bases")
        lines.extend(" ".join(str(e) for e in ids_of(b)) for b in bases(M))
    lines.append("end")
    return "\n".join(lines) + "\n"


def serialize_entry(name: str, M: Matroid) -> str:
    backend = M.backend
    if isinstance(backend, GraphRank) and not backend.dual:
        body = serialize_graph(backend.graph)
    else:
        body = serialize_matroid(M)
    return f"{NAME_PREFIX} {name}\n{body}"


def _ints(line: Line, count: Optional[int] = None) -> List[int]:
    no, text = line
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {text!r}", no) from None
    if count is not None and len(values) != count:
        raise FormatError(f"expected {count} integers, got {len(values)}", no)
    return values


def _keyed(line: Line, key: str) -> int:
    no, text = line
    parts = text.split()
    if len(parts) != 2 or parts[0] != key:
        raise FormatError(f"expected '{key} <int>', got {text!r}", no)
    return _ints((no, parts[1]), 1)[0]


def _read_graph_body(lines: Iterator[Line], header: Line) -> Multigraph:
    n = _keyed(_next(lines, header), "vertices")
    edges = []
    for line in lines:
        if line[1] == "end":
            try:
                return Multigraph(n, tuple(edges))
            except MatroidError as exc:
                raise FormatError(str(exc), line[0]) from None
        u, v = _ints(line, 2)
        edges.append((u, v))
    raise FormatError("missing 'end'", header[0])


def _next(lines: Iterator[Line], after: Line) -> Line:
    try:
        return next(lines)
    except StopIteration:
        raise FormatError("unexpected end of input", after[0]) from None


def _read_matroid_body(lines: Iterator[Line], header: Line) -> Matroid:
    m = _keyed(_next(lines, header), "elements")
    rank_line = _next(lines, header)
    r = _keyed(rank_line, "rank")
    kind_line = _next(lines, header)
    kind = kind_line[1]
    try:
        if kind in ("graphic", "cographic"):
            g = _read_graph_body(lines, kind_line)
            M = cycle_matroid(g)
            M = dual(M) if kind == "cographic" else M
        elif kind == "bases":
            family = []
            for line in lines:
                if line[1] == "end":
                    break
                ids = _ints(line)
                if any(e < 0 for e in ids):
                    raise FormatError("negative element id", line[0])
                family.append(mask_of(ids))
            else:
                raise FormatError("missing 'end'", kind_line[0])
            if r == 0 and not family:
                family = [0]
            M = from_bases(m, family)
        else:
            raise FormatError(f"expected 'bases', 'graphic' or 'cographic', got {kind!r}", kind_line[0])
    except FormatError:
        raise
    except MatroidError as exc:
        raise FormatError(str(exc), kind_line[0]) from None
    if M.size != m or M.full_rank != r:
        raise FormatError(f"declared elements {m} rank {r}, found elements {M.size} rank {M.full_rank}", rank_line[0])
    return M


def parse_stream(text: str, default_name: str = "input") -> List[Tuple[str, Matroid]]:
    """Every matroid block in `text`; graph blocks become cycle matroids."""
    content: List[Line] = []
    names = {}
    pending: Optional[str] = None
    for no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith(NAME_PREFIX):
            pending = stripped[len(NAME_PREFIX) :].strip()
            continue
        if not stripped or stripped.startswith("#"):
            continue
        if pending is not None:
            names[no] = pending
            pending = None
        content.append((no, stripped))

    out: List[Tuple[str, Matroid]] = []
    lines = iter(content)
    for header in lines:
        if header[1] == "graph v1":
            g = _read_graph_body(lines, header)
            try:
                M = cycle_matroid(g)
            except MatroidError as exc:
                raise FormatError(str(exc), header[0]) from None
        elif header[1] == "matroid v1":
            M = _read_matroid_body(lines, header)
        else:
            raise FormatError(f"expected 'graph v1' or 'matroid v1', got {header[1]!r}", header[0])
        name = names.get(header[0]) or (default_name if not out else f"{default_name}#{len(out) + 1}")
        out.append((name, M))
    if not out:
        raise FormatError("no matroid or graph block found")
    return out


def load_path(path: str | Path) -> List[Tuple[str, Matroid]]:
    p = Path(path)
    try:
        text = read_text(p)
    except OSError as exc:
        raise FormatError(f"cannot read {p}: {exc}") from None
    return parse_stream(text, default_name=p.stem)
