"""Hochschild homology dimensions of path algebras of acyclic digraphs.

For a connected acyclic digraph with n vertices, HH_0 is one-dimensional and
dim HH_1 = 1 - n + sum over edges e of #paths(s(e) -> t(e)). The path algebra
of a disjoint union is a product, so in ``per_component`` mode the formula is
summed over weak components: dim HH_1 = c - n + path_sum. ``literal`` mode
keeps the single-formula value 1 - n + path_sum regardless of connectedness.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .digraph import Digraph, find_cycle, is_acyclic, strongly_connected_components, weak_components
from .errors import CycleCapExceeded, NotAcyclic

MODES = ("per_component", "literal")


@dataclass(frozen=True)
class HHSummary:
    dim_hh0: int
    dim_hh1: int
    path_sum: int
    simple_cycles: int | None
    characteristic: int

    def record(self) -> str:
        cycles = "na" if self.simple_cycles is None else str(self.simple_cycles)
        return (
            f"hh0={self.dim_hh0} hh1={self.dim_hh1} paths={self.path_sum} "
            f"cycles={cycles} chi={self.characteristic}"
        )


def _topological_order(g: Digraph) -> list[int]:
    order = is_acyclic(g)
    if order is None:
        cyc = find_cycle(g)
        raise NotAcyclic("digraph has an oriented cycle: " + " -> ".join(map(str, cyc + cyc[:1])), cyc)
    return order


def _paths_from(g: Digraph, u: int, order: list[int], pos: list[int]) -> list[int]:
    # number of directed paths u -> w for every w, trivial path included
    cnt = [0] * g.vertex_count
    cnt[u] = 1
    in_adj = g.in_adj
    for w in order[pos[u] + 1 :]:
        total = 0
        for x in in_adj[w]:
            total += cnt[x]
        cnt[w] = total
    return cnt


def count_paths(g: Digraph, u: int, v: int) -> int:
    order = _topological_order(g)
    pos = [0] * g.vertex_count
    for k, w in enumerate(order):
        pos[w] = k
    if pos[v] < pos[u]:
        return 0
    return _paths_from(g, u, order, pos)[v]


def path_sum(g: Digraph) -> int:
    """Sum over edges (s, t) of the number of directed paths s -> t."""
    order = _topological_order(g)
    pos = [0] * g.vertex_count
    for k, w in enumerate(order):
        pos[w] = k
    total = 0
    for u in range(g.vertex_count):
        targets = g.out_adj[u]
        if not targets:
            continue
        cnt = _paths_from(g, u, order, pos)
        for t in targets:
            total += cnt[t]
    return total


def hh_dimensions(g: Digraph, mode: str = "per_component") -> HHSummary:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    sigma = path_sum(g)
    c = weak_components(g).block_count
    n = g.vertex_count
    hh1 = (c if mode == "per_component" else 1) - n + sigma
    return HHSummary(c, hh1, sigma, None, c - hh1)


def hochschild_characteristic(g: Digraph, mode: str = "per_component") -> int:
    """dim HH_0 - dim HH_1 (+ simple cycles, which vanish on acyclic input).

    Raises NotAcyclic on digraphs with oriented cycles; condense first.
    """
    return hh_dimensions(g, mode).characteristic


def count_simple_cycles(g: Digraph, cap: int | None = None) -> int:
    """Number of simple oriented cycles, Johnson-style.

    Rotations are identified, orientation is not: a reciprocal pair is one
    2-cycle and each loop is a 1-cycle. Raises CycleCapExceeded once the count
    passes ``cap``.
    """
    if cap is not None and cap <= 0:
        raise ValueError("cap must be positive")
    count = 0

    def bump(k: int = 1) -> None:
        nonlocal count
        count += k
        if cap is not None and count > cap:
            raise CycleCapExceeded(cap)

    adj: dict[int, set[int]] = {v: set(g.out_adj[v]) for v in range(g.vertex_count)}
    for v in range(g.vertex_count):
        if v in adj[v]:
            bump()
            adj[v].discard(v)

    # work list of vertex sets, each a nontrivial strongly connected piece
    pending = _nontrivial_sccs(adj, set(adj))
    while pending:
        comp = pending.pop()
        start = min(comp)
        sub = {v: adj[v] & comp for v in comp}
        _johnson_from(start, sub, bump)
        comp = comp - {start}
        pending.extend(_nontrivial_sccs(adj, comp))
    return count


def _nontrivial_sccs(adj: dict[int, set[int]], verts: set[int]) -> list[set[int]]:
    if not verts:
        return []
    ordered = sorted(verts)
    idx = {v: k for k, v in enumerate(ordered)}
    edges = [(idx[u], idx[w]) for u in ordered for w in adj[u] if w in verts]
    part = strongly_connected_components(Digraph(len(ordered), edges))
    blocks = part.blocks()
    return [{ordered[k] for k in b} for b in blocks if len(b) > 1]


def _johnson_from(start: int, sub: dict[int, set[int]], bump) -> None:
    # circuits through ``start`` inside one strongly connected piece
    blocked = {start}
    blist: dict[int, set[int]] = defaultdict(set)
    path = [start]
    stack = [iter(sorted(sub[start]))]
    closed = [False]
    while stack:
        for w in stack[-1]:
            if w == start:
                bump()
                closed[-1] = True
            elif w not in blocked:
                path.append(w)
                closed.append(False)
                stack.append(iter(sorted(sub[w])))
                blocked.add(w)
                break
        else:
            stack.pop()
            v = path.pop()
            if closed.pop():
                if closed:
                    closed[-1] = True
                todo = [v]
                while todo:
                    x = todo.pop()
                    if x in blocked:
                        blocked.discard(x)
                        todo.extend(blist[x])
                        blist[x].clear()
            else:
                for w in sub[v]:
                    blist[w].add(v)
