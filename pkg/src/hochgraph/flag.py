"""Directed flag complexes: ordered cliques as ordered simplices."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .digraph import Digraph
from .errors import LoopsPresent, NegativeDimension

# A simplex is its vertex tuple; (v0, ..., vk) has dimension k.
Simplex = tuple[int, ...]


def face(s: Simplex, i: int) -> Simplex:
    """Remove the entry at position ``i`` (standard face map d_i)."""
    if len(s) < 2:
        raise IndexError("face map needs a simplex of dimension >= 1")
    if not 0 <= i < len(s):
        raise IndexError(f"face index {i} out of range for dimension {len(s) - 1}")
    return s[:i] + s[i + 1 :]


def extended_face(s: Simplex, i: int) -> Simplex:
    """Remove the entry at position ``min(i, dim(s))``."""
    if len(s) < 2:
        raise IndexError("extended face map needs a simplex of dimension >= 1")
    if i < 0:
        raise IndexError("face index must be non-negative")
    k = min(i, len(s) - 1)
    return s[:k] + s[k + 1 :]


def is_face_of(a: Simplex, b: Simplex) -> bool:
    """True when ``a`` is a (not necessarily proper) face of ``b``: an order-preserving subsequence."""
    if len(a) > len(b):
        return False
    it = iter(b)
    return all(x in it for x in a)


def faces_of_dim(s: Simplex, k: int) -> Iterator[Simplex]:
    """All k-dimensional faces of ``s``; ``combinations`` preserves the vertex order."""
    return combinations(s, k + 1)


@dataclass(frozen=True)
class OrderedSimplicialComplex:
    source: Digraph
    max_dim: int
    simplices_by_dim: tuple[tuple[Simplex, ...], ...]
    _index: tuple[dict, ...] = field(repr=False, compare=False, default=())

    def simplices(self, dim: int) -> tuple[Simplex, ...]:
        if 0 <= dim < len(self.simplices_by_dim):
            return self.simplices_by_dim[dim]
        return ()

    def index_of(self, s: Simplex) -> int:
        """Position of ``s`` in its dimension's sorted list; serves as the simplex ID."""
        return self._index[len(s) - 1][s]

    def __contains__(self, s) -> bool:
        d = len(s) - 1
        return 0 <= d < len(self._index) and s in self._index[d]

    def counts(self) -> list[int]:
        return [len(x) for x in self.simplices_by_dim]

    def dump_lines(self) -> list[str]:
        """Lines ``dim v0 v1 ... vk``, one per simplex."""
        return [f"{len(s) - 1} " + " ".join(map(str, s)) for level in self.simplices_by_dim for s in level]


def directed_flag_complex(g: Digraph, max_dim: int) -> OrderedSimplicialComplex:
    if max_dim < 0:
        raise NegativeDimension("max_dim must be >= 0")
    if g.has_loops():
        raise LoopsPresent("directed flag complex needs a loop-free digraph")
    n = g.vertex_count
    masks = g.out_masks()
    levels: list[list[Simplex]] = [[] for _ in range(max_dim + 1)]

    def extend(prefix: Simplex, cand: int) -> None:
        # cand: vertices w with (v, w) an edge for every v in prefix
        d = len(prefix)
        rest = cand
        while rest:
            low = rest & -rest
            w = low.bit_length() - 1
            rest ^= low
            s = prefix + (w,)
            levels[d].append(s)
            if d < max_dim:
                extend(s, cand & masks[w])

    for v in range(n):
        levels[0].append((v,))
        if max_dim >= 1:
            extend((v,), masks[v])

    # DFS from sorted roots over ascending candidates already yields lexicographic order
    by_dim = tuple(tuple(level) for level in levels)
    index = tuple({s: i for i, s in enumerate(level)} for level in by_dim)
    return OrderedSimplicialComplex(g, max_dim, by_dim, index)

