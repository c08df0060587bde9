"""Executable checks for vertex-ordering properties.

Each check returns ``None`` when the property holds and a :class:`Violation`
carrying a witness otherwise. These are test oracles: they favor a direct
reading of the definitions over speed, using Python-int bitsets to stay
usable up to a few hundred vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

from .graph import Graph, Ordering
from .layers import Partition


class ViolationKind(str, Enum):
    UMBRELLA = "umbrella"
    FOUR_POINT = "four-point"
    FLIP = "flip"
    NON_CLIQUE = "non-clique"
    NON_MAXIMAL = "non-maximal"
    LABEL_GAP = "label-gap"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    witness: tuple[int, ...]
    positions: tuple[int, ...] = ()

    def render(self) -> str:
        return f"{self.kind.value} " + " ".join(str(v) for v in self.witness)

    def __str__(self) -> str:
        return self.render()


CheckResult = Optional[Violation]


def _require_cover(graph: Graph, order: Ordering) -> None:
    if len(order) != graph.n:
        raise ValueError("ordering does not cover the graph's vertices")


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def check_umbrella_free(graph: Graph, order: Ordering) -> CheckResult:
    """No ``a < b < c`` with ``ac`` an edge and ``b`` adjacent to neither end."""
    _require_cover(graph, order)
    pos, seq = order.inv, order.seq
    # Adjacency re-expressed over positions.
    pmask = [0] * graph.n
    for i, v in enumerate(seq):
        for u in graph.adj[v]:
            pmask[i] |= 1 << pos[u]
    for i in range(graph.n):
        for k in _bits(pmask[i] >> (i + 1)):
            k += i + 1
            between = ((1 << k) - 1) & ~((1 << (i + 1)) - 1)
            free = between & ~pmask[i] & ~pmask[k]
            if free:
                j = _lowest_bit(free)
                return Violation(ViolationKind.UMBRELLA, (seq[i], seq[j], seq[k]), (i, j, k))
    return None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def check_4pc(graph: Graph, order: Ordering) -> CheckResult:
    """Four point condition: for ``a < b < c``, ``ac`` an edge, ``ab`` not, some
    ``d`` with ``a < d < b`` is adjacent to ``b`` and not to ``c``.

    For fixed ``b`` the candidates ``d`` only grow as ``a`` moves left, so the
    set of ``c`` adjacent to all of them is kept as a running intersection.
    """
    _require_cover(graph, order)
    n = graph.n
    pos, seq = order.inv, order.seq
    pmask = [0] * n
    for i, v in enumerate(seq):
        for u in graph.adj[v]:
            pmask[i] |= 1 << pos[u]
    full = (1 << n) - 1
    for j in range(n):
        after_b = full & ~((1 << (j + 1)) - 1)
        common = after_b  # c's adjacent to every d seen so far
        for i in range(j - 1, -1, -1):
            if pmask[j] >> i & 1:
                common &= pmask[i]  # i is a valid d for every a left of it
                continue
            bad = pmask[i] & common
            if bad:
                k = _lowest_bit(bad)
                return Violation(ViolationKind.FOUR_POINT, (seq[i], seq[j], seq[k]), (i, j, k))
    return None


def check_flipping(graph: Graph, sigma: Ordering, tau: Ordering) -> CheckResult:
    """Every non-edge appears in opposite relative order in ``sigma`` and ``tau``."""
    _require_cover(graph, sigma)
    _require_cover(graph, tau)
    nbrs = graph.neighbor_sets
    for u, v in combinations(range(graph.n), 2):
        if v in nbrs[u]:
            continue
        if sigma.precedes(u, v) == tau.precedes(u, v):
            a, b = (u, v) if sigma.precedes(u, v) else (v, u)
            return Violation(ViolationKind.FLIP, (a, b), (tau.position(a), tau.position(b)))
    return None


def check_partition(graph: Graph, sigma: Ordering, partition: Partition) -> CheckResult:
    """Every class is a clique, and no vertex of class ``i`` has a non-neighbor
    to its right in ``sigma`` that lies in class ``i`` or later."""
    _require_cover(graph, sigma)
    nbrs = graph.neighbor_sets
    for members in partition.classes:
        for u, v in combinations(members, 2):
            if v not in nbrs[u]:
                return Violation(ViolationKind.NON_CLIQUE, (u, v))
    class_of = partition.class_of
    seq = sigma.seq
    for i, v in enumerate(seq):
        for u in seq[i + 1:]:
            if u not in nbrs[v] and class_of[u] >= class_of[v]:
                return Violation(
                    ViolationKind.NON_MAXIMAL, (v, u), (sigma.position(v), sigma.position(u))
                )
    return None


def recheck(graph: Graph, violation: Violation, sigma: Ordering | None = None,
            order: Ordering | None = None) -> bool:
    """Whether the witness still violates its predicate (with the given orderings)."""
    has = graph.has_edge
    w = violation.witness
    kind = violation.kind
    if kind is ViolationKind.UMBRELLA:
        a, b, c = w
        return order.precedes(a, b) and order.precedes(b, c) and has(a, c) \
            and not has(a, b) and not has(b, c)
    if kind is ViolationKind.FOUR_POINT:
        a, b, c = w
        if not (order.precedes(a, b) and order.precedes(b, c) and has(a, c) and not has(a, b)):
            return False
        lo, hi = order.position(a), order.position(b)
        return not any(has(d, b) and not has(d, c) for d in order.seq[lo + 1:hi])
    if kind is ViolationKind.FLIP:
        a, b = w
        return not has(a, b) and sigma.precedes(a, b) and order.precedes(a, b)
    if kind is ViolationKind.NON_CLIQUE:
        return not has(*w)
    if kind is ViolationKind.NON_MAXIMAL:
        v, u = w
        return sigma.precedes(v, u) and not has(u, v)
    raise ValueError(f"cannot recheck {kind}")


class GraphTooLarge(ValueError):
    pass


BRUTE_FORCE_LIMIT = 10


def brute_force_cocomp_order(graph: Graph) -> Ordering | None:
    """Lexicographically first umbrella-free ordering, or ``None`` if there is none.

    Depth-first over permutations in lexicographic order; a prefix is
    abandoned as soon as appending a vertex creates an umbrella, which is
    sound because umbrellas inside a prefix survive any extension.
    """
    n = graph.n
    if n > BRUTE_FORCE_LIMIT:
        raise GraphTooLarge(f"brute-force search is limited to n <= {BRUTE_FORCE_LIMIT}, got {n}")
    nbrs = graph.neighbor_sets
    prefix: list[int] = []
    used = [False] * n

    def creates_umbrella(c: int) -> bool:
        nc = nbrs[c]
        for ia, a in enumerate(prefix):
            if a not in nc:
                continue
            na = nbrs[a]
            for b in prefix[ia + 1:]:
                if b not in na and b not in nc:
                    return True
        return False

    def extend() -> bool:
        if len(prefix) == n:
            return True
        for c in range(n):
            if used[c] or creates_umbrella(c):
                continue
            used[c] = True
            prefix.append(c)
            if extend():
                return True
            prefix.pop()
            used[c] = False
        return False

    return Ordering.from_sequence(prefix) if extend() else None
