"""Plain-text edge-list formats.

    vertices <n>
    u v          # unweighted line
    u v w        # weighted line, w a decimal real

``#`` starts a comment line and blank lines are skipped. A file is either
all-unweighted or all-weighted, and repeating an edge is an error.
"""

from __future__ import annotations

import re

from .digraph import Digraph
from .errors import ParseError
from .persistence import WeightedDigraph, format_real


def parse_edge_list(text: str) -> tuple[int, dict[tuple[int, int], float | None]]:
    n = None
    edges: dict[tuple[int, int], float | None] = {}
    weighted = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "vertices":
                raise ParseError(f"line {lineno}: expected header 'vertices <n>'")
            n = _int(parts[1], lineno)
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) not in (2, 3):
            raise ParseError(f"line {lineno}: expected 'u v' or 'u v w'")
        is_w = len(parts) == 3
        if weighted is None:
            weighted = is_w
        elif weighted != is_w:
            raise ParseError(f"line {lineno}: mixed weighted and unweighted lines")
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if (u, v) in edges:
            raise ParseError(f"line {lineno}: duplicate edge ({u}, {v})")
        if is_w:
            try:
                edges[(u, v)] = float(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: bad weight {parts[2]!r}") from None
        else:
            edges[(u, v)] = None
    if n is None:
        raise ParseError("missing 'vertices <n>' header")
    return n, edges


def _int(tok: str, lineno: int) -> int:
    if not re.fullmatch(r"[+-]?\d+", tok):
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}")
    return int(tok)


def read_digraph(text: str) -> Digraph:
    """Unweighted view of either format (weights are ignored)."""
    n, edges = parse_edge_list(text)
    return Digraph(n, edges)


def read_weighted(text: str, default_weight: float = 1.0) -> WeightedDigraph:
    """Weighted view; unweighted files get ``default_weight`` on every edge."""
    n, edges = parse_edge_list(text)
    weights = {e: (default_weight if w is None else w) for e, w in edges.items()}
    return WeightedDigraph(Digraph(n, weights), weights)


def write_digraph(g: Digraph) -> str:
    lines = [f"vertices {g.vertex_count}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def write_weighted(w: WeightedDigraph) -> str:
    lines = [f"vertices {w.vertex_count}"]
    lines += [f"{u} {v} {format_real(w.weight[(u, v)])}" for u, v in w.graph.edges]
    return "\n".join(lines) + "\n"


def read_connectivity(text: str) -> tuple[list[tuple[int, ...]], list[tuple[int, int]]]:
    """Inverse of ``ConnectivityDigraph.to_lines``: (vertex simplices, edges by index)."""
    verts: list[tuple[int, ...]] = []
    index: dict[tuple[int, ...], int] = {}
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("vertices"):
            continue
        toks = re.findall(r"\(([^)]*)\)", line)
        simplices = [tuple(int(x) for x in t.split()) for t in toks]
        if len(simplices) == 1:
            index[simplices[0]] = len(verts)
            verts.append(simplices[0])
        elif len(simplices) == 2:
            edges.append((index[simplices[0]], index[simplices[1]]))
        else:
            raise ParseError(f"cannot parse connectivity line {line!r}")
    return verts, edges


def read_diagram_csv(text: str):
    """Parse ``birth,death,multiplicity`` CSV (``inf`` for essential deaths)."""
    from .persistence import PersistenceDiagram

    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("birth"):
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected birth,death,multiplicity")
        try:
            pts.append((float(parts[0]), float(parts[1]), int(parts[2])))
        except ValueError:
            raise ParseError(f"line {lineno}: bad number in {line!r}") from None
    return PersistenceDiagram(tuple(pts))
