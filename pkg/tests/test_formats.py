from __future__ import annotations

import pytest

from src.elements import full_mask
from src.errors import FormatError
from src.formats import load_path, parse_stream, serialize_entry, serialize_graph, serialize_matroid
from src.graph import complete_graph
from src.matroid import uniform

K4_GRAPH = """graph v1
vertices 4
0 1
0 2
0 3
1 2
1 3
2 3
end
"""

U24_TEXT = """matroid v1
elements 4
rank 2
bases
0 1
0 2
0 3
1 2
1 3
2 3
end
"""


def test_graph_block_round_trip():
    assert serialize_graph(complete_graph(4)) == K4_GRAPH
    [(name, M)] = parse_stream(K4_GRAPH)
    assert name == "input"
    assert M.size == 6 and M.full_rank == 3


def test_bases_block():
    assert serialize_matroid(uniform(2, 4)) == U24_TEXT
    [(_, M)] = parse_stream(U24_TEXT)
    assert M.full_rank == 2
    assert M.rank(0b111) == 2


def test_names_and_defaults():
    text = "# name: k4\n" + K4_GRAPH + "\n# plain comment\n" + U24_TEXT
    parsed = parse_stream(text, default_name="stream")
    assert [name for name, _ in parsed] == ["k4", "stream#2"]


def test_cographic_entry(family3):
    text = serialize_entry("P*(3)", family3)
    assert text.startswith("# name: P*(3)\nmatroid v1\nelements 12\nrank 7\ncographic\n")
    [(name, M)] = parse_stream(text)
    assert name == "P*(3)"
    H = full_mask(9)
    assert M.rank(H) == family3.rank(H) == 6


@pytest.mark.parametrize(
    "text,line",
    [
        ("graph v1\nvertices 2\n0 x\nend\n", 3),
        ("graph v1\nvertices 2\n0 1\n", 1),
        ("graph v1\nvertices 2\n0 5\nend\n", 4),
        ("hello\n", 1),
        ("matroid v1\nelements 2\nrank 2\nbases\n0\nend\n", 3),
        ("matroid v1\nelements 2\nrank 1\ncircuits\nend\n", 4),
        ("\n\nmatroid v1\nelements 2\nrank 1\nbases\n0 1\n1\nend\n", 6),
    ],
)
def test_format_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as exc:
        parse_stream(text)
    assert exc.value.line == line


def test_empty_stream_rejected():
    with pytest.raises(FormatError):
        parse_stream("# nothing here\n")


def test_load_path(write_file):
    path = write_file("k4.txt", K4_GRAPH)
    [(name, M)] = load_path(path)
    assert name == "k4"
    assert M.size == 6
    with pytest.raises(FormatError):
        load_path(path.parent / "missing.txt")
