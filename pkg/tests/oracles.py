"""Brute-force reference implementations used only by the tests.

Each oracle works straight from the definition (enumerate everything, then
filter) and shares no code with the package beyond the Digraph container.
"""

from __future__ import annotations

import math
import random
from itertools import combinations, permutations


def edge_set(g):
    return set(g.edges)


def random_digraph(rng: random.Random, n: int, p: float):
    from hochgraph.digraph import Digraph

    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def random_dag(rng: random.Random, n: int, p: float):
    """Edges only go forward along a random vertex permutation."""
    from hochgraph.digraph import Digraph

    perm = list(range(n))
    rng.shuffle(perm)
    rank = {v: k for k, v in enumerate(perm)}
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if rank[u] < rank[v] and rng.random() < p])


def random_acyclic_filtration(rng: random.Random, n: int, p: float, levels: int | None = None):
    """Weighted DAG; every sublevel stage is a sub-DAG, hence acyclic."""
    from hochgraph.persistence import WeightedDigraph

    g = random_dag(rng, n, p)
    if levels:
        weights = {e: rng.randrange(levels) / levels for e in g.edges}
    else:
        weights = {e: rng.random() for e in g.edges}
    return WeightedDigraph(g, weights)


# -- paths, cycles, reachability -------------------------------------------

def dfs_path_count(g, u, v):
    """Enumerate every directed path u -> v explicitly (trivial path included)."""
    count = 0
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            count += 1
        stack.extend(g.out_adj[x])
    return count


def brute_simple_cycles(g):
    """All vertex sequences closing into a cycle, one per rotation class."""
    n = g.vertex_count
    adj = edge_set(g)
    found = set()
    for k in range(1, n + 1):
        for seq in permutations(range(n), k):
            if seq[0] != min(seq):
                continue
            if all((seq[i], seq[(i + 1) % k]) in adj for i in range(k)):
                found.add(seq)
    return len(found)


def brute_reach(g):
    n = g.vertex_count
    reach = [[False] * n for _ in range(n)]
    for s in range(n):
        seen = set()
        todo = list(g.out_adj[s])
        while todo:
            x = todo.pop()
            if x in seen:
                continue
            seen.add(x)
            todo.extend(g.out_adj[x])
        for x in seen:
            reach[s][x] = True
    return reach


def brute_sccs(g):
    """Blocks as frozensets via mutual reachability."""
    r = brute_reach(g)
    n = g.vertex_count
    return {frozenset(y for y in range(n) if y == x or (r[x][y] and r[y][x])) for x in range(n)}


def brute_weak_count(g):
    n = g.vertex_count
    label = list(range(n))
    changed = True
    while changed:
        changed = False
        for u, v in g.edges:
            m = min(label[u], label[v])
            if label[u] != m or label[v] != m:
                label[u] = label[v] = m
                changed = True
    return len(set(label))


def has_cycle_brute(g):
    r = brute_reach(g)
    return any(r[x][x] for x in range(g.vertex_count))


# -- complexes --------------------------------------------------------------

def brute_flag(g, max_dim):
    """Ordered cliques: every ordered tuple with an edge from each earlier to each later entry."""
    adj = edge_set(g)
    out = []
    for k in range(min(max_dim, g.vertex_count - 1) + 1):
        level = [s for s in permutations(range(g.vertex_count), k + 1) if all((s[a], s[b]) in adj for a, b in combinations(range(k + 1), 2))]
        out.append(sorted(level))
    return out


def drop(s, i):
    return s[:i] + s[i + 1 :]


def ext_drop(s, i):
    return drop(s, min(i, len(s) - 1))


def subsequences(s, length):
    return set(combinations(s, length))


def brute_n_path_edges(g, n, relaxed=False):
    """Pairs of n-simplices (as tuples) with d_i(sigma) = d_j(tau) for some i < j (i <= j when relaxed)."""
    simp = brute_flag(g, n)
    simp = simp[n] if len(simp) > n else []
    out = set()
    for s in simp:
        for t in simp:
            if s == t:
                continue
            for i in range(n + 1):
                for j in range(n + 1):
                    if (i < j or (relaxed and i == j)) and drop(s, i) == drop(t, j):
                        out.add((s, t))
    return simp, out


def brute_q_digraph_edges(g, q, i, j, max_dim):
    cx = brute_flag(g, max_dim)
    verts = [s for d in range(q, len(cx)) for s in cx[d]]
    out = set()
    for s in verts:
        for t in verts:
            if s == t:
                continue
            if len(s) < len(t) and set(combinations(t, len(s))) >= {s}:
                out.add((s, t))
                continue
            if len(s) >= q + 2 and len(t) >= q + 2:
                if subsequences(ext_drop(s, i), q + 1) & subsequences(ext_drop(t, j), q + 1):
                    out.add((s, t))
    return verts, out


def brute_chains(up_pairs, n, max_len=None):
    """Strict chains of a poset given as a set of (x, y) with x < y: subsets totally ordered."""
    less = set(up_pairs)
    chains = []
    for k in range(1, (max_len or n) + 1):
        for sub in permutations(range(n), k):
            if all((sub[a], sub[a + 1]) in less for a in range(k - 1)):
                chains.append(sub)
    return chains


def dense_rank_f2(rows):
    """Rank of a 0/1 matrix given as a list of lists, by textbook elimination."""
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                m[r] = [a ^ b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


# -- diagrams ---------------------------------------------------------------

def _pt_dist(p, q):
    db = 0.0 if p[0] == q[0] else abs(p[0] - q[0])
    if math.isinf(p[1]) and math.isinf(q[1]):
        dd = 0.0
    elif math.isinf(p[1]) or math.isinf(q[1]):
        return math.inf
    else:
        dd = abs(p[1] - q[1])
    return max(db, dd)


def _diag(p):
    return math.inf if math.isinf(p[1]) else (p[1] - p[0]) / 2


def exhaustive_bottleneck(a, b):
    """Minimum over every partial matching of A into B; leftovers pay their diagonal cost."""
    best = math.inf
    n, m = len(a), len(b)
    for k in range(min(n, m) + 1):
        for ia in combinations(range(n), k):
            for ib in permutations(range(m), k):
                cost = 0.0
                for x, y in zip(ia, ib):
                    cost = max(cost, _pt_dist(a[x], b[y]))
                for x in set(range(n)) - set(ia):
                    cost = max(cost, _diag(a[x]))
                for y in set(range(m)) - set(ib):
                    cost = max(cost, _diag(b[y]))
                best = min(best, cost)
    return best if (n or m) else 0.0


def random_finite_diagram(rng: random.Random, k: int):
    pts = []
    for _ in range(k):
        b = round(rng.uniform(0, 1), 3)
        pts.append((b, round(b + rng.uniform(0, 0.6), 3)))
    return pts
