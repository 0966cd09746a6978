"""Deterministic digraph generators.

Randomness comes from a splitmix64 stream (constants below), so a given seed
produces the same graph on every platform. A uniform [0, 1) value is the top
53 bits of one 64-bit draw divided by 2**53.

Draw order for ``erdos_renyi_weighted``: ordered pairs (u, v), u != v, in
row-major order; each pair consumes one draw for presence and, when present,
one more for its weight. ``necklace_weighted`` consumes one draw per edge in
row-major order of the adjacency matrix.
"""

from __future__ import annotations

from .digraph import Digraph
from .errors import CycleTooSmall
from .persistence import WeightedDigraph

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) / 9007199254740992.0


def erdos_renyi_weighted(n: int, p: float, seed: int) -> WeightedDigraph:
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = SplitMix64(seed)
    weights = {}
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if rng.uniform() < p:
                weights[(u, v)] = rng.uniform()
    return WeightedDigraph(Digraph(n, weights), weights)


def necklace_weighted(n: int, seed: int) -> WeightedDigraph:
    """Open reciprocal chain: edges (i, i+1) and (i+1, i) with uniform weights."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = SplitMix64(seed)
    pairs = sorted([(i, i + 1) for i in range(n - 1)] + [(i + 1, i) for i in range(n - 1)])
    weights = {e: rng.uniform() for e in pairs}
    return WeightedDigraph(Digraph(n, weights), weights)


def cycle_digraph(n: int) -> Digraph:
    if n < 2:
        raise CycleTooSmall(f"a loop-free cycle needs n >= 2, got {n}")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def linear_digraph(n: int) -> Digraph:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def cone(g: Digraph) -> Digraph:
    """Add an apex vertex (numbered last) with an edge from every original vertex."""
    apex = g.vertex_count
    return Digraph(apex + 1, list(g.edges) + [(v, apex) for v in range(apex)])


def constant_weights(g: Digraph, w: float = 1.0) -> WeightedDigraph:
    return WeightedDigraph(g, {e: w for e in g.edges})


# Small digraphs used as worked examples throughout the tests and docs.
NAMED = {
    "square": (4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
    "square_diag": (4, [(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]),
    "triangle": (3, [(0, 1), (1, 2), (0, 2)]),
    # 0 -> 3 -> 1 -> 2 with shortcuts 0 -> 1 and 0 -> 2
    "kite": (4, [(0, 3), (0, 1), (1, 2), (0, 2), (3, 1)]),
    "g1": (5, [(0, 1), (0, 2), (2, 4), (1, 2), (3, 1), (3, 2), (3, 4)]),
    "g2": (5, [(0, 1), (0, 2), (2, 4), (1, 2), (1, 3), (2, 3), (4, 3)]),
    "s1": (4, [(0, 1), (0, 2), (2, 1), (1, 2), (2, 3), (1, 3)]),
    "s2": (4, [(0, 1), (0, 2), (2, 1), (1, 2), (3, 1), (3, 2)]),
}


def named_digraph(name: str) -> Digraph:
    n, edges = NAMED[name]
    return Digraph(n, edges)
