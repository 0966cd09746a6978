"""Connectivity digraphs built from a digraph's directed flag complex.

Two families are provided: n-path digraphs (strict ``i < j`` and relaxed
``i <= j`` face matching) and the directed q-nearness digraphs along a pair
of extended face maps, together with their undirected q-graph counterparts.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .digraph import Digraph
from .errors import NegativeDimension
from .flag import Simplex, directed_flag_complex, extended_face


@dataclass(frozen=True)
class ConnSpec:
    """Which connectivity construction to apply.

    ``kind`` is one of ``identity``, ``n_path``, ``n_path_relaxed``,
    ``q_digraph`` and ``q_graph``.
    """

    kind: str
    n: int = 0
    q: int = 0
    i: int = 0
    j: int = 1
    max_dim: int | None = None

    def __str__(self) -> str:
        if self.kind == "identity":
            return "identity"
        if self.kind in ("n_path", "n_path_relaxed"):
            return f"{'npath' if self.kind == 'n_path' else 'npathr'}:{self.n}"
        if self.kind == "q_digraph":
            return f"qdigraph:{self.q},{self.i},{self.j},{self._max_dim()}"
        return f"qgraph:{self.q},{self._max_dim()}"

    def _max_dim(self) -> int:
        return self.max_dim if self.max_dim is not None else self.q + 2

    @classmethod
    def parse(cls, text: str) -> "ConnSpec":
        """Parse ``identity``, ``npath:N``, ``npathr:N``, ``qdigraph:Q,I,J[,MAXDIM]`` or ``qgraph:Q[,MAXDIM]``."""
        name, _, args = text.strip().partition(":")
        nums = [int(a) for a in args.split(",") if a.strip()] if args else []
        name = name.lower()
        if name == "identity" and not nums:
            return cls("identity")
        if name in ("npath", "npathr") and len(nums) == 1:
            if nums[0] < 0:
                raise ValueError("n must be >= 0")
            return cls("n_path" if name == "npath" else "n_path_relaxed", n=nums[0])
        if name == "qdigraph" and len(nums) in (3, 4):
            q, i, j = nums[:3]
            md = nums[3] if len(nums) == 4 else q + 2
            if q < 0 or i < 0 or j < 0 or md < q:
                raise ValueError("need q, i, j >= 0 and max_dim >= q")
            return cls("q_digraph", q=q, i=i, j=j, max_dim=md)
        if name == "qgraph" and len(nums) in (1, 2):
            q = nums[0]
            md = nums[1] if len(nums) == 2 else q + 2
            if q < 0 or md < q:
                raise ValueError("need q >= 0 and max_dim >= q")
            return cls("q_graph", q=q, max_dim=md)
        raise ValueError(f"unrecognised connectivity spec {text!r}")


@dataclass(frozen=True)
class ConnectivityDigraph:
    graph: Digraph
    vertex_simplices: tuple[Simplex, ...]
    spec: ConnSpec

    def to_lines(self) -> list[str]:
        """Edge-list serialisation with simplex-tuple vertex names.

        A line holding one ``(v0 ... vk)`` token declares a vertex (in vertex
        order); a line holding two declares a directed edge.
        """
        names = ["(" + " ".join(map(str, s)) + ")" for s in self.vertex_simplices]
        lines = [f"# {self.spec}", f"vertices {self.graph.vertex_count}"]
        lines.extend(names)
        lines.extend(f"{names[u]} {names[v]}" for u, v in self.graph.edges)
        return lines


def apply_connectivity(g: Digraph, spec: ConnSpec) -> ConnectivityDigraph:
    if spec.kind == "identity":
        return n_path_digraph(g, 0)
    if spec.kind == "n_path":
        return n_path_digraph(g, spec.n)
    if spec.kind == "n_path_relaxed":
        return n_path_digraph(g, spec.n, relaxed=True)
    if spec.kind == "q_digraph":
        return q_digraph(g, spec.q, spec.i, spec.j, spec._max_dim())
    if spec.kind == "q_graph":
        return q_graph(g, spec.q, spec._max_dim())
    raise ValueError(f"unknown connectivity kind {spec.kind!r}")


def n_path_digraph(g: Digraph, n: int, relaxed: bool = False) -> ConnectivityDigraph:
    """Digraph on the n-simplices of dFl(g) with sigma -> tau when d_i(sigma) = d_j(tau), i < j.

    ``relaxed`` allows ``i <= j`` (for distinct simplices). n = 0 returns ``g``
    itself.
    """
    if n < 0:
        raise NegativeDimension("n must be >= 0")
    kind = "n_path_relaxed" if relaxed else "n_path"
    if n == 0:
        return ConnectivityDigraph(g, tuple((v,) for v in range(g.vertex_count)), ConnSpec(kind, n=0))
    cx = directed_flag_complex(g, n)
    simplices = cx.simplices(n)
    # shared (n-1)-face -> [(simplex id, face position)]
    buckets: dict[Simplex, list[tuple[int, int]]] = defaultdict(list)
    for sid, s in enumerate(simplices):
        for pos in range(n + 1):
            buckets[s[:pos] + s[pos + 1 :]].append((sid, pos))
    edges = set()
    for members in buckets.values():
        for a, i in members:
            for b, j in members:
                if a == b:
                    continue
                if i < j or (relaxed and i == j):
                    edges.add((a, b))
    graph = Digraph(len(simplices), edges)
    return ConnectivityDigraph(graph, simplices, ConnSpec(kind, n=n))


def _complex_range(g: Digraph, lo: int, hi: int) -> list[Simplex]:
    cx = directed_flag_complex(g, hi)
    out: list[Simplex] = []
    for d in range(lo, hi + 1):
        out.extend(cx.simplices(d))
    return out


def q_digraph(g: Digraph, q: int, i: int, j: int, max_dim: int) -> ConnectivityDigraph:
    """Directed q-nearness digraph along the extended face maps (d^_i, d^_j).

    Vertices are the simplices of dimension q..max_dim. sigma -> tau (sigma
    != tau) when sigma is a proper face of tau, or when some q-simplex is a
    face of both d^_i(sigma) and d^_j(tau). Reflexive pairs are dropped.
    """
    if q < 0 or i < 0 or j < 0:
        raise NegativeDimension("q, i and j must be >= 0")
    if max_dim < q:
        raise ValueError("max_dim must be >= q")
    verts = _complex_range(g, q, max_dim)
    vid = {s: k for k, s in enumerate(verts)}
    edges = set()
    # face inclusions between simplices both of dimension >= q
    for t in verts:
        for k in range(q + 1, len(t)):
            for s in combinations(t, k):
                edges.add((vid[s], vid[t]))
    # shared q-face alpha of d^_i(sigma) and d^_j(tau); bucketed by alpha
    left: dict[Simplex, list[int]] = defaultdict(list)
    right: dict[Simplex, list[int]] = defaultdict(list)
    for s in verts:
        if len(s) < q + 2:
            continue  # d^(s) would have dimension < q
        k = vid[s]
        for alpha in combinations(extended_face(s, i), q + 1):
            left[alpha].append(k)
        for alpha in combinations(extended_face(s, j), q + 1):
            right[alpha].append(k)
    for alpha, srcs in left.items():
        dsts = right.get(alpha)
        if not dsts:
            continue
        for a in srcs:
            for b in dsts:
                if a != b:
                    edges.add((a, b))
    graph = Digraph(len(verts), edges)
    return ConnectivityDigraph(graph, tuple(verts), ConnSpec("q_digraph", q=q, i=i, j=j, max_dim=max_dim))


def q_graph(g: Digraph, q: int, max_dim: int, min_dim: int | None = None) -> ConnectivityDigraph:
    """Undirected q-graph encoded with reciprocal edge pairs.

    Two distinct simplices of dimension in [min_dim, max_dim] (``min_dim``
    defaults to q) are joined when they share a q-face; a q-simplex counts as
    its own q-face.
    """
    if q < 0:
        raise NegativeDimension("q must be >= 0")
    lo = q if min_dim is None else min_dim
    if lo < q or max_dim < lo:
        raise ValueError("need q <= min_dim <= max_dim")
    verts = _complex_range(g, lo, max_dim)
    buckets: dict[Simplex, list[int]] = defaultdict(list)
    for k, s in enumerate(verts):
        for alpha in combinations(s, q + 1):
            buckets[alpha].append(k)
    edges = set()
    for members in buckets.values():
        for a in members:
            for b in members:
                if a != b:
                    edges.add((a, b))
    graph = Digraph(len(verts), edges)
    return ConnectivityDigraph(graph, tuple(verts), ConnSpec("q_graph", q=q, max_dim=max_dim))


def n_path_graph(g: Digraph, n: int) -> ConnectivityDigraph:
    """Undirected graph on n-simplices sharing an (n-1)-face (n >= 1)."""
    if n < 1:
        raise NegativeDimension("n must be >= 1")
    return q_graph(g, n - 1, n, min_dim=n)
