"""Instances with a known cocomparability ordering.

A cocomparability graph is the complement of the comparability graph of a
poset, and any linear extension of that poset is umbrella-free for it. The
generators draw a random DAG whose arcs all point forward in index order,
close it transitively, and return the complement of the closure together
with the identity ordering (index order is a linear extension).

Randomness: ``numpy.random.Generator(PCG64(seed))``. ``gen_random_cocomp``
draws one ``random()`` double per pair ``(i, j)``, ``i < j``, in row-major
order and keeps the arc when the draw is ``< p``. ``gen_layered_cocomp``
does the same restricted to pairs at most one layer apart, walking ``i``
upwards and ``j`` over its window.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, Ordering


@dataclass(frozen=True)
class PosetSpec:
    n: int
    p: float
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"edge probability must lie in [0, 1], got {self.p}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_dag_closure(spec: PosetSpec) -> list[int]:
    """Bitset per vertex of everything reachable from it (the strict poset above it)."""
    n, p = spec.n, spec.p
    rng = _rng(spec.seed)
    reach = [0] * n
    arcs: list[list[int]] = []
    for i in range(n):
        draws = rng.random(n - i - 1)
        arcs.append([i + 1 + int(k) for k in np.flatnonzero(draws < p)])
    for i in range(n - 1, -1, -1):
        r = 0
        for j in arcs[i]:  # increasing j, so a covered j adds nothing new
            if not r >> j & 1:
                r |= (1 << j) | reach[j]
        reach[i] = r
    return reach


def gen_random_cocomp(spec: PosetSpec) -> tuple[Graph, Ordering]:
    """Complement of the comparability graph of a random DAG's closure; O(n^2) edges checked."""
    reach = random_dag_closure(spec)
    n = spec.n
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if not reach[i] >> j & 1]
    return Graph.from_edges(n, edges), Ordering.identity(n)


def gen_layered_cocomp(n: int, width: int, p: float, seed: int = 0) -> tuple[Graph, Ordering]:
    """Sparse large instances: consecutive layers of ``width`` vertices.

    Pairs two or more layers apart are always comparable (so never edges).
    Arcs between vertices at most one layer apart are drawn with probability
    ``p``; the closure can then only add pairs that are also at most one
    layer apart, through intermediate vertices between them, so it is
    computed locally with bitsets relative to each vertex's layer start.
    Every vertex has fewer than ``2 * width`` potential neighbors, so
    ``m = O(n * width)``.
    """
    PosetSpec(n, p, seed)
    if width < 1:
        raise ValueError("width must be positive")
    rng = _rng(seed)
    layer_start = [(i // width) * width for i in range(n)]
    window_end = [min(n, s + 2 * width) for s in layer_start]  # exclusive

    arcs: list[list[int]] = []
    for i in range(n):
        lo, hi = i + 1, window_end[i]
        draws = rng.random(hi - lo)
        arcs.append([lo + int(k) for k in np.flatnonzero(draws < p)])

    # reach[i]: bit (j - layer_start[i]) for each j reachable from i within i's window.
    reach = [0] * n
    for i in range(n - 1, -1, -1):
        base = layer_start[i]
        span = window_end[i] - base
        r = 0
        for j in arcs[i]:
            off = j - base
            if r >> off & 1:
                continue
            shift = layer_start[j] - base
            r |= (1 << off) | (reach[j] << shift)
        reach[i] = r & ((1 << span) - 1)

    edges = []
    for i in range(n):
        base = layer_start[i]
        r = reach[i]
        for j in range(i + 1, window_end[i]):
            if not r >> (j - base) & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges), Ordering.identity(n)


# Worked examples, vertices a, b, c, ... numbered 0, 1, 2, ...
FIG1_NAMES = "abcde"
FIG1_EDGES = ("ad", "ac", "ab", "dc", "ce", "cb")
FIG2_NAMES = "abcdefghijk"
FIG2_EDGES = (
    "ab", "ac", "ad", "bc", "be", "cd", "de", "df",
    "dg", "ef", "fg", "fh", "gi", "hi", "hj", "hk",
)
FIXTURES = {"fig1": (FIG1_NAMES, FIG1_EDGES), "fig2": (FIG2_NAMES, FIG2_EDGES)}


def gen_fixture(name: str) -> tuple[Graph, Ordering]:
    """The small worked-example graphs with their alphabetical ordering."""
    try:
        names, edges = FIXTURES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
    idx = {c: i for i, c in enumerate(names)}
    graph = Graph.from_edges(len(names), [(idx[a], idx[b]) for a, b in edges])
    return graph, Ordering.identity(len(names))


def fixture_names(name: str) -> str:
    return FIXTURES[name][0]
