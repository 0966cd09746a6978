"""Finite simple digraphs: components, condensation, acyclicity, line digraphs."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import OutOfRangeVertex, SelfLoopForbidden

Edge = tuple[int, int]


class Digraph:
    """Immutable directed graph on the vertices ``0 .. vertex_count - 1``.

    Edges are kept as a sorted tuple of pairs, with sorted out- and
    in-adjacency lists alongside. Duplicate edges collapse. Self-loops are
    rejected unless ``allow_loops`` is set.
    """

    __slots__ = ("vertex_count", "edges", "allow_loops", "vertex_labels", "out_adj", "in_adj", "_edge_set")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Sequence[int]] = (),
        allow_loops: bool = False,
        vertex_labels: Sequence[str] | None = None,
    ):
        if vertex_count < 0:
            raise OutOfRangeVertex(f"negative vertex count {vertex_count}")
        edge_set = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise OutOfRangeVertex(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
            if u == v and not allow_loops:
                raise SelfLoopForbidden(f"self-loop at vertex {u}")
            edge_set.add((u, v))
        if vertex_labels is not None:
            vertex_labels = tuple(str(s) for s in vertex_labels)
            if len(vertex_labels) != vertex_count:
                raise ValueError("need exactly one label per vertex")
        out_adj: list[list[int]] = [[] for _ in range(vertex_count)]
        in_adj: list[list[int]] = [[] for _ in range(vertex_count)]
        sorted_edges = tuple(sorted(edge_set))
        for u, v in sorted_edges:
            out_adj[u].append(v)
        for v, u in sorted((v, u) for u, v in sorted_edges):
            in_adj[v].append(u)
        set_ = object.__setattr__
        set_(self, "vertex_count", vertex_count)
        set_(self, "edges", sorted_edges)
        set_(self, "allow_loops", bool(allow_loops))
        set_(self, "vertex_labels", vertex_labels)
        set_(self, "out_adj", tuple(tuple(a) for a in out_adj))
        set_(self, "in_adj", tuple(tuple(a) for a in in_adj))
        set_(self, "_edge_set", frozenset(edge_set))

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.vertex_count, self.edges, self.allow_loops) == (
            other.vertex_count,
            other.edges,
            other.allow_loops,
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges, self.allow_loops))

    def __repr__(self):
        return f"Digraph({self.vertex_count}, {list(self.edges)!r})"

    def __reduce__(self):
        return (Digraph, (self.vertex_count, self.edges, self.allow_loops, self.vertex_labels))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_set

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def out_masks(self) -> list[int]:
        """Out-neighbourhoods as integer bitsets."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
        return masks

    def subgraph_edges(self, keep: Iterable[Edge]) -> "Digraph":
        """Spanning subgraph with the same vertex set and the given edges."""
        return Digraph(self.vertex_count, keep, self.allow_loops, self.vertex_labels)


def digraph_new(vertex_count: int, edges: Iterable[Sequence[int]] = (), allow_loops: bool = False) -> Digraph:
    return Digraph(vertex_count, edges, allow_loops)


@dataclass(frozen=True)
class Partition:
    block_of: tuple[int, ...]
    block_count: int

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for v, b in enumerate(self.block_of):
            out[b].append(v)
        return out


def _renumber_by_min(labels: Sequence[int]) -> Partition:
    # blocks numbered in order of their smallest member
    remap: dict[int, int] = {}
    block_of = []
    for lab in labels:
        if lab not in remap:
            remap[lab] = len(remap)
        block_of.append(remap[lab])
    return Partition(tuple(block_of), len(remap))


def weak_components(g: Digraph) -> Partition:
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return _renumber_by_min([find(v) for v in range(g.vertex_count)])


def strongly_connected_components(g: Digraph) -> Partition:
    """Tarjan's algorithm, iterative so deep graphs do not hit the recursion limit."""
    n = g.vertex_count
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    n_comp = 0
    adj = g.out_adj
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            nbrs = adj[v]
            if pos < len(nbrs):
                work[-1] = (v, pos + 1)
                w = nbrs[pos]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
    return _renumber_by_min(comp)


def condensation(g: Digraph) -> tuple[Digraph, Partition]:
    part = strongly_connected_components(g)
    b = part.block_of
    edges = {(b[u], b[v]) for u, v in g.edges if b[u] != b[v]}
    cg = Digraph(part.block_count, edges)
    assert is_acyclic(cg) is not None, "condensation produced an oriented cycle"
    return cg, part


def is_acyclic(g: Digraph) -> list[int] | None:
    """Topological order (smallest available vertex first), or None if cyclic.

    Loops count as cycles.
    """
    indeg = [len(a) for a in g.in_adj]
    heap = [v for v in range(g.vertex_count) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in g.out_adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != g.vertex_count:
        return None
    return order


def find_cycle(g: Digraph) -> list[int] | None:
    """One oriented cycle as a vertex list, or None when ``g`` is acyclic."""
    for u, v in g.edges:
        if u == v:
            return [u]
    part = strongly_connected_components(g)
    sizes = [0] * part.block_count
    for b in part.block_of:
        sizes[b] += 1
    for start in range(g.vertex_count):
        blk = part.block_of[start]
        if sizes[blk] < 2:
            continue
        # BFS inside the block back to ``start``
        prev = {start: None}
        queue = [start]
        for x in queue:
            for y in g.out_adj[x]:
                if part.block_of[y] != blk:
                    continue
                if y == start:
                    path = [x]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
    return None


def line_digraph(g: Digraph) -> Digraph:
    """Vertices are the edges of ``g`` in canonical order; p -> q iff t(e_p) = s(e_q)."""
    index = {e: i for i, e in enumerate(g.edges)}
    out = []
    for p, (_, t) in enumerate(g.edges):
        for w in g.out_adj[t]:
            q = index[(t, w)]
            if p != q:
                out.append((p, q))
    return Digraph(len(g.edges), out, allow_loops=g.allow_loops)


def _refine(g: Digraph, colors: list[int]) -> list[int]:
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in g.out_adj[v])),
                tuple(sorted(colors[w] for w in g.in_adj[v])),
            )
            for v in range(g.vertex_count)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Digraph) -> tuple:
    """Isomorphism-invariant certificate of ``g``.

    Colour refinement plus individualisation; exact but exponential in the
    worst case, intended for the small graphs used in checks.
    """
    n = g.vertex_count
    best = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(g, colors)
        if len(set(colors)) == n:
            cert = (n, g.allow_loops, tuple(sorted((colors[u], colors[v]) for u, v in g.edges)))
            if best is None or cert < best:
                best = cert
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        for x in range(n):
            if colors[x] == target:
                search([2 * c + (1 if v == x else 0) if c == target else 2 * c for v, c in enumerate(colors)])

    search([0] * n)
    return best if best is not None else (0, g.allow_loops, ())


def is_isomorphic(g: Digraph, h: Digraph) -> bool:
    if (g.vertex_count, g.edge_count) != (h.vertex_count, h.edge_count):
        return False
    return canonical_form(g) == canonical_form(h)
