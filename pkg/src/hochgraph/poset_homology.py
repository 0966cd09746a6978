"""Order complexes of reachability posets and their mod-2 Betti numbers."""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import q_digraph
from .digraph import Digraph, condensation, find_cycle, is_acyclic
from .errors import NotAcyclic


@dataclass(frozen=True)
class Poset:
    element_count: int
    strictly_less: frozenset[tuple[int, int]]

    def up_masks(self) -> list[int]:
        masks = [0] * self.element_count
        for x, y in self.strictly_less:
            masks[x] |= 1 << y
        return masks


@dataclass(frozen=True)
class ChainComplexF2:
    """Simplices per dimension plus boundary columns as integer bitsets.

    ``boundaries[k][c]`` has bit r set when simplex r of dimension k-1 is a
    facet of simplex c of dimension k (``boundaries[0]`` is all zeros).
    ``truncated`` is True when chains above the top stored dimension exist.
    """

    simplices: tuple[tuple[tuple[int, ...], ...], ...]
    boundaries: tuple[tuple[int, ...], ...]
    truncated: bool

    @property
    def top_dim(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> list[int]:
        return [len(s) for s in self.simplices]


def reachability_poset(g: Digraph) -> Poset:
    order = is_acyclic(g)
    if order is None:
        raise NotAcyclic("reachability poset needs an acyclic digraph", find_cycle(g))
    below = [0] * g.vertex_count  # bitset of strict successors
    for v in reversed(order):
        m = 0
        for w in g.out_adj[v]:
            m |= (1 << w) | below[w]
        below[v] = m
    rel = set()
    for x in range(g.vertex_count):
        m = below[x]
        while m:
            low = m & -m
            rel.add((x, low.bit_length() - 1))
            m ^= low
    return Poset(g.vertex_count, frozenset(rel))


def order_complex(p: Poset, max_dim: int | None = None) -> ChainComplexF2:
    """Strict chains x0 < ... < xk for k <= max_dim (all chains when None)."""
    if max_dim is not None and max_dim < 0:
        raise ValueError("max_dim must be >= 0")
    cap = p.element_count if max_dim is None else max_dim
    up = p.up_masks()
    levels: list[list[tuple[int, ...]]] = [[] for _ in range(cap + 1)]
    truncated = False

    def extend(chain: tuple[int, ...], cand: int) -> None:
        nonlocal truncated
        d = len(chain)
        while cand:
            low = cand & -cand
            y = low.bit_length() - 1
            cand ^= low
            if d > cap:
                truncated = True
                return
            s = chain + (y,)
            levels[d].append(s)
            extend(s, up[y])

    for x in range(p.element_count):
        levels[0].append((x,))
        extend((x,), up[x])
    while len(levels) > 1 and not levels[-1]:
        levels.pop()
    simplices = tuple(tuple(sorted(level)) for level in levels)
    boundaries = [tuple(0 for _ in simplices[0])]
    for k in range(1, len(simplices)):
        index = {s: r for r, s in enumerate(simplices[k - 1])}
        cols = []
        for s in simplices[k]:
            col = 0
            for i in range(len(s)):
                col ^= 1 << index[s[:i] + s[i + 1 :]]
            cols.append(col)
        boundaries.append(tuple(cols))
    cx = ChainComplexF2(simplices, tuple(boundaries), truncated)
    assert boundary_squared_is_zero(cx)
    return cx


def boundary_squared_is_zero(c: ChainComplexF2) -> bool:
    for k in range(2, len(c.boundaries)):
        lower = c.boundaries[k - 1]
        for col in c.boundaries[k]:
            acc = 0
            while col:
                low = col & -col
                acc ^= lower[low.bit_length() - 1]
                col ^= low
            if acc:
                return False
    return True


def rank_f2(columns) -> int:
    """Rank over F2 of a matrix given as integer bitset columns."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            top = col.bit_length() - 1
            basis = pivots.get(top)
            if basis is None:
                pivots[top] = col
                rank += 1
                break
            col ^= basis
    return rank


def betti_f2(c: ChainComplexF2, max_deg: int | None = None) -> list[int]:
    """beta_k = dim C_k - rank d_k - rank d_{k+1} for k = 0..max_deg.

    Boundary maps above the stored dimensions count as zero maps; check
    ``c.truncated`` before trusting the top degree.
    """
    top = c.top_dim if max_deg is None else max_deg
    ranks = [rank_f2(b) for b in c.boundaries] + [0]
    out = []
    for k in range(top + 1):
        if k > c.top_dim:
            out.append(0)
            continue
        out.append(len(c.simplices[k]) - ranks[k] - ranks[k + 1])
    return out


def euler_characteristic(c: ChainComplexF2) -> int:
    return sum((-1) ** k * n for k, n in enumerate(c.counts()))


def q_homotopy_betti(g: Digraph, q: int, i: int, j: int, max_dim: int) -> list[int]:
    """Betti numbers of the order complex of the condensed (q, d^_i, d^_j)-preorder."""
    conn = q_digraph(g, q, i, j, max_dim)
    cg, _ = condensation(conn.graph)
    cx = order_complex(reachability_poset(cg))
    return betti_f2(cx)
