"""Edge-weight filtrations of digraphs and their Hochschild persistence invariants.

Filtration convention: every vertex is present from the start and an edge
enters at its weight (``weight <= t`` inclusive), ties entering together.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence

from .connectivity import ConnSpec, apply_connectivity
from .digraph import Digraph, condensation, find_cycle, is_acyclic
from .errors import NegativeMultiplicity, NotAcyclicAtStage
from .hochschild import count_simple_cycles, hh_dimensions


@dataclass(frozen=True)
class WeightedDigraph:
    graph: Digraph
    weight: Mapping[tuple[int, int], float]

    def __post_init__(self):
        w = {}
        for e in self.graph.edges:
            if e not in self.weight:
                raise ValueError(f"edge {e} has no weight")
            x = float(self.weight[e])
            if not math.isfinite(x):
                raise ValueError(f"edge {e} has non-finite weight {x}")
            w[e] = x
        if len(self.weight) != len(w):
            raise ValueError("weights given for edges not in the graph")
        object.__setattr__(self, "weight", w)

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count


def critical_values(w: WeightedDigraph) -> list[float]:
    return sorted(set(w.weight.values()))


def sublevel_digraph(w: WeightedDigraph, t: float) -> Digraph:
    return w.graph.subgraph_edges(e for e in w.graph.edges if w.weight[e] <= t)


# -- Hochschild characteristic curves -------------------------------------

@dataclass(frozen=True)
class CurveRow:
    t: float
    hh0: int
    hh1: int
    cycles: int | None
    chi: int
    conn_v: int
    conn_e: int


@dataclass(frozen=True)
class PersistenceCurve:
    rows: tuple[CurveRow, ...]
    label: str = ""

    def to_csv(self) -> str:
        lines = ["t,hh0,hh1,cycles,chi,conn_v,conn_e"]
        for r in self.rows:
            cyc = "na" if r.cycles is None else str(r.cycles)
            lines.append(f"{format_real(r.t)},{r.hh0},{r.hh1},{cyc},{r.chi},{r.conn_v},{r.conn_e}")
        return "\n".join(lines) + "\n"


def format_real(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def _worker_count(threads: int | None) -> int:
    if threads is None:
        import os

        threads = int(os.environ.get("HOCHGRAPH_THREADS", "1") or 1)
    return max(1, threads)


def _curve_row(w: WeightedDigraph, t: float, conn: ConnSpec, mode: str, cycles_cap: int | None) -> CurveRow:
    stage = sublevel_digraph(w, t)
    cg = apply_connectivity(stage, conn).graph
    cycles = count_simple_cycles(cg, cycles_cap) if cycles_cap is not None else None
    condensed, _ = condensation(cg)
    hh = hh_dimensions(condensed, mode)
    return CurveRow(t, hh.dim_hh0, hh.dim_hh1, cycles, hh.characteristic, cg.vertex_count, cg.edge_count)


def characteristic_pipeline(
    w: WeightedDigraph,
    conn: ConnSpec | str = "identity",
    mode: str = "per_component",
    cycles_cap: int | None = None,
    threads: int | None = 1,
) -> PersistenceCurve:
    """Sublevel digraph -> connectivity digraph -> condensation -> characteristic, per stage.

    Rows cover the empty stage (t = -inf) and every critical value. When
    ``cycles_cap`` is set, the simple cycles of each connectivity digraph are
    counted before condensing (CycleCapExceeded past the cap).
    """
    if isinstance(conn, str):
        conn = ConnSpec.parse(conn)
    ts = [-math.inf] + critical_values(w)
    workers = _worker_count(threads)
    if workers == 1:
        rows = [_curve_row(w, t, conn, mode, cycles_cap) for t in ts]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda t: _curve_row(w, t, conn, mode, cycles_cap), ts))
    return PersistenceCurve(tuple(rows), str(conn))


# -- persistent Betti numbers and diagrams --------------------------------

@dataclass(frozen=True)
class PTable:
    """p(t_i, t_j) for i <= j over the stage values; entries with i > j are None."""

    critical_values: tuple[float, ...]
    values: tuple[tuple[int | None, ...], ...]
    degree: int

    def __call__(self, i: int, j: int) -> int:
        if i < 0:
            return 0
        v = self.values[i][j]
        if v is None:
            raise IndexError("persistence table only defined for i <= j")
        return v

    @property
    def size(self) -> int:
        return len(self.critical_values)


def _stage_values(w: WeightedDigraph) -> list[float]:
    # an edgeless filtration still has its single (empty) stage
    return critical_values(w) or [-math.inf]


def persistent_betti(w: WeightedDigraph, conn: ConnSpec | str = "identity", degree: int = 1) -> PTable:
    """Persistent Betti numbers of HH_0 or HH_1 along an acyclic filtration.

    Degree 0 counts the components at t_j that contain a vertex already
    present at t_i. Degree 1 uses injectivity of the induced maps on HH_1, so
    p(t_i, t_j) = dim HH_1 at t_i. Every stage's connectivity digraph must be
    acyclic (NotAcyclicAtStage otherwise).
    """
    if isinstance(conn, str):
        conn = ConnSpec.parse(conn)
    if degree not in (0, 1):
        raise ValueError("degree must be 0 or 1")
    ts = _stage_values(w)
    stages = []
    for t in ts:
        cd = apply_connectivity(sublevel_digraph(w, t), conn)
        if is_acyclic(cd.graph) is None:
            raise NotAcyclicAtStage(t, find_cycle(cd.graph))
        stages.append(cd)
    m = len(ts)
    table: list[list[int | None]] = [[None] * m for _ in range(m)]
    if degree == 1:
        dims = [hh_dimensions(cd.graph).dim_hh1 for cd in stages]
        for i in range(m):
            for j in range(i, m):
                table[i][j] = dims[i]
    else:
        for j in range(m):
            roots = _component_roots(stages[j])
            for i in range(j + 1):
                alive = set(stages[i].vertex_simplices)
                table[i][j] = len({roots[key] for key in alive})
    return PTable(tuple(ts), tuple(tuple(r) for r in table), degree)


def _component_roots(cd) -> dict:
    """Map each vertex key (its simplex tuple) to a component representative."""
    n = cd.graph.vertex_count
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in cd.graph.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return {cd.vertex_simplices[v]: find(v) for v in range(n)}


def is_persistence_function(p: PTable) -> bool:
    """Check both monotonicity conditions and the inclusion-exclusion inequality on all u1<=u2<=v1<=v2."""
    m = p.size
    for u1 in range(m):
        for u2 in range(u1, m):
            for v1 in range(u2, m):
                if p(u1, v1) > p(u2, v1):
                    return False
                for v2 in range(v1, m):
                    if p(u2, v2) > p(u2, v1):
                        return False
                    if p(u2, v1) - p(u1, v1) < p(u2, v2) - p(u1, v2):
                        return False
    return True


@dataclass(frozen=True)
class PersistenceDiagram:
    """Points (birth, death, multiplicity); death may be +inf. The diagonal is implicit."""

    points: tuple[tuple[float, float, int], ...]

    def __post_init__(self):
        pts = []
        for b, d, k in self.points:
            if not d >= b:
                raise ValueError(f"point ({b}, {d}) below the diagonal")
            if k < 1:
                raise ValueError("multiplicities must be >= 1")
            pts.append((float(b), float(d), int(k)))
        object.__setattr__(self, "points", tuple(sorted(pts)))

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[float, float]]) -> "PersistenceDiagram":
        counts: dict[tuple[float, float], int] = {}
        for b, d in pairs:
            counts[(b, d)] = counts.get((b, d), 0) + 1
        return cls(tuple((b, d, k) for (b, d), k in counts.items()))

    def expanded(self) -> list[tuple[float, float]]:
        return [(b, d) for b, d, k in self.points for _ in range(k)]

    def to_csv(self) -> str:
        lines = ["birth,death,multiplicity"]
        lines += [f"{format_real(b)},{format_real(d)},{k}" for b, d, k in self.points]
        return "\n".join(lines) + "\n"


def persistence_diagram(p: PTable, critical_values: Sequence[float] | None = None) -> PersistenceDiagram:
    """Multiplicities by inclusion-exclusion over consecutive stage values.

    mu(t_i, t_j) = p(i, j-1) - p(i-1, j-1) - p(i, j) + p(i-1, j) for i < j, and
    mu(t_i, inf) = p(i, m-1) - p(i-1, m-1), with p(-1, .) = 0.
    """
    ts = tuple(critical_values) if critical_values is not None else p.critical_values
    m = p.size
    if len(ts) != m:
        raise ValueError("critical values do not match the table size")
    pts = []
    for i in range(m):
        for j in range(i + 1, m):
            mu = p(i, j - 1) - p(i - 1, j - 1) - p(i, j) + p(i - 1, j)
            if mu < 0:
                raise NegativeMultiplicity(f"mu({ts[i]}, {ts[j]}) = {mu}")
            if mu:
                pts.append((ts[i], ts[j], mu))
        if m:
            mu = p(i, m - 1) - p(i - 1, m - 1)
            if mu < 0:
                raise NegativeMultiplicity(f"mu({ts[i]}, inf) = {mu}")
            if mu:
                pts.append((ts[i], math.inf, mu))
    return PersistenceDiagram(tuple(pts))


# -- bottleneck distance --------------------------------------------------

def _gap(x: float, y: float) -> float:
    # equal coordinates are 0 apart even at -inf/inf, where x - y would be nan
    return 0.0 if x == y else abs(x - y)

def _perfect_matching_exists(adj: list[list[int]], n_right: int) -> bool:
    """Kuhn's augmenting paths, iterative; every left vertex must be matched."""
    match_r = [-1] * n_right
    match_l = [-1] * len(adj)
    for root in range(len(adj)):
        seen = [False] * n_right
        via: dict[int, int] = {}
        stack = [(root, iter(adj[root]))]
        free = -1
        while stack and free < 0:
            u, it = stack[-1]
            for r in it:
                if seen[r]:
                    continue
                seen[r] = True
                via[r] = u
                if match_r[r] < 0:
                    free = r
                else:
                    stack.append((match_r[r], iter(adj[match_r[r]])))
                break
            else:
                stack.pop()
        if free < 0:
            return False
        r = free
        while r >= 0:
            u = via[r]
            nxt = match_l[u]
            match_r[r] = u
            match_l[u] = r
            r = nxt
    return True


def _finite_bottleneck(a: list[tuple[float, float]], b: list[tuple[float, float]]) -> float:
    n, m = len(a), len(b)
    if n == 0 and m == 0:
        return 0.0

    def dist(p, q):
        return max(_gap(p[0], q[0]), _gap(p[1], q[1]))

    half_a = [(d - bb) / 2 for bb, d in a]
    half_b = [(d - bb) / 2 for bb, d in b]
    cands = {0.0, *half_a, *half_b}
    cands.update(dist(p, q) for p in a for q in b)
    radii = sorted(cands)

    # left: a_0..a_{n-1}, diag(b_0)..diag(b_{m-1}); right: b_0..b_{m-1}, diag(a_0)..diag(a_{n-1})
    def feasible(r: float) -> bool:
        adj: list[list[int]] = []
        for i in range(n):
            row = [j for j in range(m) if dist(a[i], b[j]) <= r]
            if half_a[i] <= r:
                row.append(m + i)
            adj.append(row)
        for j in range(m):
            row = [j] if half_b[j] <= r else []
            row.extend(m + i for i in range(n))
            adj.append(row)
        return _perfect_matching_exists(adj, n + m)

    lo, hi = 0, len(radii) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(radii[mid]):
            hi = mid
        else:
            lo = mid + 1
    return radii[lo]


def bottleneck_distance(d1: PersistenceDiagram, d2: PersistenceDiagram) -> float:
    """Bottleneck distance; +inf when the numbers of essential points differ."""
    p1, p2 = d1.expanded(), d2.expanded()
    ess1 = sorted(b for b, d in p1 if math.isinf(d))
    ess2 = sorted(b for b, d in p2 if math.isinf(d))
    if len(ess1) != len(ess2):
        return math.inf
    # essential points sit on one line: sorted order is an optimal matching
    ess = max((_gap(x, y) for x, y in zip(ess1, ess2)), default=0.0)
    fin = _finite_bottleneck([p for p in p1 if not math.isinf(p[1])], [p for p in p2 if not math.isinf(p[1])])
    return max(ess, fin)
