"""Peeling a cocomparability ordering into clique layers.

Each vertex starts with the number of its non-neighbors to the right in the
ordering. Layers are emitted as "all unvisited vertices of minimum label";
emitting a layer bumps the label of every unvisited neighbor by one. Labels
live in bins ``B_0..B_{n-1}`` kept as intrusive doubly linked lists, so each
bump is O(1) and the minimum is found by one left-to-right sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator

from .counters import WorkCounters
from .graph import Graph, Ordering

NIL = -1


class ClassOrder(str, Enum):
    """How vertices are ordered inside each emitted class.

    ``BIN`` keeps the order they sit in their bin (head insertion, initial
    fill in ordering order); ``SIGMA`` sorts by the input ordering;
    ``REVERSE`` by its reverse, which is what the plus variant needs.
    """

    BIN = "bin"
    SIGMA = "sigma"
    REVERSE = "reverse"


@dataclass
class LabelState:
    label: list[int]
    visited: list[bool]


class BinArray:
    """Bins ``B_0..B_{size-1}`` as doubly linked vertex lists with counters."""

    def __init__(self, n: int, size: int | None = None):
        size = n if size is None else size
        self.head = [NIL] * size
        self.count = [0] * size
        self.nxt = [NIL] * n
        self.prv = [NIL] * n
        self.bin_of = [NIL] * n

    def push_front(self, b: int, v: int) -> None:
        h = self.head[b]
        self.nxt[v] = h
        self.prv[v] = NIL
        if h != NIL:
            self.prv[h] = v
        self.head[b] = v
        self.bin_of[v] = b
        self.count[b] += 1

    def remove(self, v: int) -> None:
        b = self.bin_of[v]
        p, q = self.prv[v], self.nxt[v]
        if p != NIL:
            self.nxt[p] = q
        else:
            self.head[b] = q
        if q != NIL:
            self.prv[q] = p
        self.bin_of[v] = NIL
        self.count[b] -= 1

    def move(self, v: int, b: int) -> None:
        self.remove(v)
        self.push_front(b, v)

    def members(self, b: int) -> Iterator[int]:
        v = self.head[b]
        while v != NIL:
            yield v
            v = self.nxt[v]

    def take(self, b: int) -> list[int]:
        """Empty bin ``b``, returning its vertices front to back."""
        out = list(self.members(b))
        for v in out:
            self.bin_of[v] = NIL
        self.head[b] = NIL
        self.count[b] = 0
        return out


@dataclass(frozen=True)
class Partition:
    """Ordered classes ``P_1..P_p`` (0-based in code) and the label each was emitted at."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    levels: tuple[int, ...] = ()

    @property
    def p(self) -> int:
        return len(self.classes)

    @classmethod
    def from_classes(cls, classes, levels=()) -> "Partition":
        classes = tuple(tuple(c) for c in classes)
        n = sum(len(c) for c in classes)
        class_of = [NIL] * n
        for i, members in enumerate(classes):
            for v in members:
                if not 0 <= v < n or class_of[v] != NIL:
                    raise ValueError("classes do not partition 0..n-1")
                class_of[v] = i
        return cls(classes, tuple(class_of), tuple(levels))

    def order(self) -> Ordering:
        """The concatenation of all classes."""
        return Ordering.from_sequence(v for c in self.classes for v in c)

    def regrouped(self, order: Ordering) -> "Partition":
        """Same classes, each rearranged to follow ``order``; O(n)."""
        buckets: list[list[int]] = [[] for _ in self.classes]
        for v in order.seq:
            buckets[self.class_of[v]].append(v)
        return Partition(tuple(tuple(b) for b in buckets), self.class_of, self.levels)

    def trace_lines(self) -> list[str]:
        """One ``"i label v1 v2 ..."`` line per class, ``i`` 1-based."""
        levels = self.levels or (NIL,) * self.p
        return [
            " ".join([str(i + 1), str(lvl), *map(str, members)])
            for i, (lvl, members) in enumerate(zip(levels, self.classes))
        ]


ClassHook = Callable[[int, int, list[int], LabelState], None]
IncrementHook = Callable[[int, int, int], None]


def compute_initial_labels(
    graph: Graph, sigma: Ordering, counters: WorkCounters | None = None
) -> LabelState:
    """Label each vertex with its number of non-neighbors to its right in ``sigma``.

    Right-to-left sweep: position ``i`` has ``n-1-i`` vertices after it, minus
    the neighbors among them.
    """
    n = graph.n
    if len(sigma) != n:
        raise ValueError("ordering does not cover the graph's vertices")
    pos = sigma.inv
    label = [0] * n
    touches = 0
    for i in range(n - 1, -1, -1):
        v = sigma.seq[i]
        later = 0
        for u in graph.adj[v]:
            if pos[u] > i:
                later += 1
        touches += 1 + len(graph.adj[v])
        label[v] = (n - 1 - i) - later
    if counters is not None:
        counters.label_touches += touches
    return LabelState(label, [False] * n)


def build_partition_classes(
    graph: Graph,
    sigma: Ordering,
    class_order: ClassOrder | str = ClassOrder.BIN,
    counters: WorkCounters | None = None,
    on_class: ClassHook | None = None,
    on_increment: IncrementHook | None = None,
) -> Partition:
    """Split ``graph`` into the layers induced by the cocomparability ordering ``sigma``.

    ``sigma`` is trusted to be umbrella-free; nothing here checks it.

    ``on_class(i, level, members, state)`` fires when class ``i`` has just
    been taken out of the bins and marked visited, before its neighbors are
    bumped, so ``state.label`` holds the labels at that iteration.
    ``on_increment(i, u, new_label)`` fires for every bump caused by class ``i``.
    """
    class_order = ClassOrder(class_order)
    n = graph.n
    state = compute_initial_labels(graph, sigma, counters)
    label, visited = state.label, state.visited
    if n == 0:
        return Partition((), (), ())

    bins = BinArray(n)
    for v in reversed(sigma.seq):
        bins.push_front(label[v], v)

    classes: list[tuple[int, ...]] = []
    levels: list[int] = []
    class_of = [NIL] * n
    adj = graph.adj
    remaining = n
    moves = 0
    b = 0
    while remaining:
        while bins.count[b] == 0:
            b += 1
        idx = len(classes)
        members = bins.take(b)
        for v in members:
            visited[v] = True
            class_of[v] = idx
        remaining -= len(members)
        if on_class is not None:
            on_class(idx, b, members, state)
        for v in members:
            for u in adj[v]:
                if not visited[u]:
                    k = label[u] + 1
                    assert k < n  # non-neighbors after u plus visited neighbors of u
                    label[u] = k
                    bins.move(u, k)
                    moves += 1
                    if on_increment is not None:
                        on_increment(idx, u, k)
        classes.append(tuple(members))
        levels.append(b)
        b += 1  # bin b is empty now and bumps only move vertices above it

    if counters is not None:
        counters.bin_moves += moves
    part = Partition(tuple(classes), tuple(class_of), tuple(levels))
    if class_order is ClassOrder.SIGMA:
        part = part.regrouped(sigma)
    elif class_order is ClassOrder.REVERSE:
        part = part.regrouped(sigma.reversed())
    return part
