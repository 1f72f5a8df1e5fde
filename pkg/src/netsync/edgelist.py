"""Edge-list text ingestion and serialization.

Format: one edge per line, two whitespace- or comma-separated node labels;
lines starting with '#' (and blank lines) are ignored. Labels are mapped to
dense integer ids in first-appearance order, and the label <-> id mapping is
part of every ingestion result.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, ValidationError
from .graph import Graph


@dataclass
class IngestResult:
    graph: Graph
    id_to_label: list[str]
    label_to_id: dict[str, int]
    duplicate_count: int
    warnings: list[str] = field(default_factory=list)


def _split_tokens(line: str) -> list[str]:
    if "," in line:
        return [tok.strip() for tok in line.split(",") if tok.strip()]
    return line.split()


def parse_edge_list(text: str, source: str = "<string>") -> IngestResult:
    """Parse edge-list text into a simple graph.

    Duplicate pairs (in either orientation) are collapsed and counted;
    self-pairs are rejected with their line numbers.
    """
    label_to_id: dict[str, int] = {}
    id_to_label: list[str] = []
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    self_loop_lines: list[int] = []
    warnings: list[str] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = _split_tokens(line)
        if len(tokens) != 2:
            raise ParseError(
                f"{source}:{lineno}: expected two node labels, got {len(tokens)}: {raw!r}",
                line=lineno,
            )
        ids = []
        for tok in tokens:
            if tok not in label_to_id:
                label_to_id[tok] = len(id_to_label)
                id_to_label.append(tok)
            ids.append(label_to_id[tok])
        u, v = ids
        if u == v:
            self_loop_lines.append(lineno)
            continue
        key = (u, v) if u < v else (v, u)
        if key in edges:
            duplicates += 1
        else:
            edges.add(key)

    if self_loop_lines:
        shown = ", ".join(str(n) for n in self_loop_lines)
        raise ValidationError(
            f"{source}: self-loop edge(s) on line(s) {shown}"
        )
    if not edges and not id_to_label:
        warnings.append(f"{source}: no edges found, graph is empty")

    graph = Graph(len(id_to_label), sorted(edges), labels=id_to_label)
    return IngestResult(graph, id_to_label, label_to_id, duplicates, warnings)


def ingest_edge_list(path: str | Path) -> IngestResult:
    path = Path(path)
    return parse_edge_list(path.read_text(), source=str(path))


def write_edge_list(g: Graph, path: str | Path) -> None:
    path = Path(path)
    with path.open("w") as fh:
        fh.write(serialize_edge_list(g))


def serialize_edge_list(g: Graph) -> str:
    buf = io.StringIO()
    for u, v in g.edges():
        buf.write(f"{g.label_of(u)} {g.label_of(v)}\n")
    return buf.getvalue()
