"""Backwards in-situ refinement of the layers, and the complete linear-time pipeline.

Each layer is refined by the vertices of earlier layers adjacent to it, most
recently placed first: every pivot pulls its neighbors to the front of the
segment they sit in, without reordering segments. Pivots are pushed onto a
per-layer stack while earlier layers are scanned left to right, so popping
gives the required reverse priority for free.

A segment carries first/last/current cursors. While one pivot is processed,
``current`` marks the end of the pulled prefix; afterwards every touched
segment is cut behind ``current``. Work per pivot is proportional to its
number of neighbors in the layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

from .counters import WorkCounters
from .graph import Graph, Ordering, reorder_adjacency
from .layers import ClassOrder, Partition, build_partition_classes

NIL = -1


class Segment:
    __slots__ = ("first", "last", "current")

    def __init__(self, first: int, last: int, current: int = NIL):
        self.first = first
        self.last = last
        self.current = current


class SegmentView(NamedTuple):
    members: tuple[int, ...]
    current: int  # NIL when unset


class PivotStack:
    """LIFO of pivots for one layer; ``offset`` is where the pivot's
    neighbors in that layer start inside its (sorted) adjacency tuple."""

    __slots__ = ("vertices", "offsets")

    def __init__(self, entries: Sequence[int] = ()):
        self.vertices: list[int] = list(entries)
        self.offsets: list[int] = [0] * len(self.vertices)

    def push(self, v: int, offset: int = 0) -> None:
        self.vertices.append(v)
        self.offsets.append(offset)

    def pop(self) -> tuple[int, int]:
        return self.vertices.pop(), self.offsets.pop()

    def __len__(self) -> int:
        return len(self.vertices)

    def __bool__(self) -> bool:
        return bool(self.vertices)

    def pop_order(self) -> list[int]:
        return self.vertices[::-1]


class _Workspace:
    """Link and segment arrays shared by every class of one run.

    Index ``n`` is the list sentinel. Only one class is live at a time.
    """

    def __init__(self, n: int):
        self.nxt = [NIL] * (n + 1)
        self.prv = [NIL] * (n + 1)
        self.seg: list[Segment | None] = [None] * n
        self.head = n


class RefinableClass:
    """One layer as a doubly linked vertex sequence tiled by segments."""

    def __init__(self, members: Sequence[int], workspace: _Workspace):
        self.ws = ws = workspace
        self.size = len(members)
        h = ws.head
        ws.nxt[h] = ws.prv[h] = h
        if not members:
            return
        seg = Segment(members[0], members[-1])
        prev = h
        for v in members:
            ws.seg[v] = seg
            ws.nxt[prev] = v
            ws.prv[v] = prev
            prev = v
        ws.nxt[prev] = h
        ws.prv[h] = prev

    def __contains__(self, v: int) -> bool:
        return self.ws.seg[v] is not None

    def __iter__(self):
        ws = self.ws
        v = ws.nxt[ws.head]
        while v != ws.head:
            yield v
            v = ws.nxt[v]

    def sequence(self) -> tuple[int, ...]:
        return tuple(self)

    def segments(self) -> list[SegmentView]:
        out: list[SegmentView] = []
        ws = self.ws
        seg = None
        members: list[int] = []
        for v in self:
            if ws.seg[v] is not seg:
                if seg is not None:
                    out.append(SegmentView(tuple(members), seg.current))
                seg, members = ws.seg[v], []
            members.append(v)
        if seg is not None:
            out.append(SegmentView(tuple(members), seg.current))
        return out

    def release(self) -> None:
        for v in self:
            self.ws.seg[v] = None

    # linked-list primitives

    def _unlink(self, v: int) -> None:
        nxt, prv = self.ws.nxt, self.ws.prv
        p, q = prv[v], nxt[v]
        nxt[p] = q
        prv[q] = p

    def _insert_after(self, v: int, anchor: int) -> None:
        nxt, prv = self.ws.nxt, self.ws.prv
        q = nxt[anchor]
        nxt[anchor] = v
        prv[v] = anchor
        nxt[v] = q
        prv[q] = v

    def pull(self, w: int, touched: list[Segment]) -> bool:
        """Move ``w`` to the end of its segment's pulled prefix. Returns whether
        anything was recorded (False only for a settled singleton)."""
        seg = self.ws.seg[w]
        c = seg.current
        if c == NIL:
            if seg.first != w:
                if seg.last == w:
                    seg.last = self.ws.prv[w]
                self._unlink(w)
                self._insert_after(w, self.ws.prv[seg.first])
                seg.first = w
            seg.current = w
            touched.append(seg)
            return True
        if c == w:
            return False
        if self.ws.nxt[c] != w:
            if seg.last == w:
                seg.last = self.ws.prv[w]
            self._unlink(w)
            self._insert_after(w, c)
        seg.current = w
        return True

    def split(self, touched: list[Segment]) -> int:
        """Cut every touched segment behind its current cursor."""
        ws = self.ws
        splits = 0
        for seg in touched:
            c = seg.current
            if seg.first == seg.last:
                continue  # singleton: f = l = c stays set for good
            if c == seg.last:
                seg.current = NIL
                continue
            pulled = Segment(seg.first, c)
            v = seg.first
            while True:
                ws.seg[v] = pulled
                if v == c:
                    break
                v = ws.nxt[v]
            if pulled.first == c:
                pulled.current = c
            seg.first = ws.nxt[c]
            seg.current = NIL
            splits += 1
        return splits


PivotHook = Callable[[int, list[SegmentView]], None]


def _refine_in_place(
    rc: RefinableClass,
    pivots: PivotStack,
    graph: Graph,
    counters: WorkCounters | None,
    on_pivot: PivotHook | None,
) -> None:
    adj = graph.adj
    seg_of = rc.ws.seg
    moves = splits = 0
    while pivots:
        v, i = pivots.pop()
        nbrs = adj[v]
        end = len(nbrs)
        while i < end and seg_of[nbrs[i]] is None:
            i += 1
        touched: list[Segment] = []
        while i < end and seg_of[nbrs[i]] is not None:
            rc.pull(nbrs[i], touched)
            moves += 1
            i += 1
        splits += rc.split(touched)
        if on_pivot is not None:
            on_pivot(v, rc.segments())
    if counters is not None:
        counters.refine_moves += moves
        counters.segment_splits += splits


def refine(
    members: Sequence[int],
    pivots: PivotStack,
    graph: Graph,
    counters: WorkCounters | None = None,
    on_pivot: PivotHook | None = None,
) -> tuple[int, ...]:
    """Refine one class (given in layer order) by popping ``pivots`` until empty.

    ``graph`` must have adjacency tuples sorted by the layer ordering, so
    that a pivot's neighbors inside the class are contiguous and in class
    order. ``on_pivot(v, segments)`` sees the segment layout after pivot ``v``.
    """
    rc = RefinableClass(members, _Workspace(graph.n))
    _refine_in_place(rc, pivots, graph, counters, on_pivot)
    return rc.sequence()


def update_pivots(
    refined: Sequence[int],
    j: int,
    class_of: Sequence[int],
    graph: Graph,
    stacks: Sequence[PivotStack],
    counters: WorkCounters | None = None,
) -> None:
    """Push each vertex of the refined class ``j`` (left to right) once onto
    the stack of every later class it has a neighbor in."""
    adj = graph.adj
    pushes = 0
    for v in refined:
        last = j
        for k, u in enumerate(adj[v]):
            ci = class_of[u]
            if ci > last:
                stacks[ci].push(v, k)
                pushes += 1
                last = ci
    if counters is not None:
        counters.pivot_pushes += pushes


@dataclass
class RefinementStep:
    """What happened to one class: its pivots in pop order and the layouts."""

    index: int
    members: tuple[int, ...]
    pivots: list[int]
    layouts: list[list[SegmentView]] = field(default_factory=list)
    result: tuple[int, ...] = ()


def refine_partition(
    graph: Graph,
    partition: Partition,
    counters: WorkCounters | None = None,
    trace: list[RefinementStep] | None = None,
) -> Ordering:
    """Refine every class of ``partition`` in turn and concatenate the results.

    ``graph`` adjacency must already be sorted by ``partition.order()``.
    """
    ws = _Workspace(graph.n)
    stacks = [PivotStack() for _ in range(partition.p)]
    tau: list[int] = []
    for i, members in enumerate(partition.classes):
        rc = RefinableClass(members, ws)
        on_pivot = None
        if trace is not None:
            step = RefinementStep(i, tuple(members), stacks[i].pop_order())
            trace.append(step)
            on_pivot = lambda v, layout, step=step: step.layouts.append(layout)
        _refine_in_place(rc, stacks[i], graph, counters, on_pivot)
        tau_i = rc.sequence()
        rc.release()
        if trace is not None:
            step.result = tau_i
        update_pivots(tau_i, i, partition.class_of, graph, stacks, counters)
        tau.extend(tau_i)
    return Ordering.from_sequence(tau)


@dataclass
class PipelineRun:
    tau: Ordering
    partition: Partition
    counters: WorkCounters
    steps: list[RefinementStep] | None = None


def run_pipeline(
    graph: Graph,
    sigma: Ordering,
    plus: bool = False,
    class_order: ClassOrder | str | None = None,
    trace: bool = False,
) -> PipelineRun:
    """Layers, adjacency sort, refinement; returns everything a caller may inspect.

    ``plus`` orders each class by the reverse of ``sigma`` which makes the
    result the rightmost-tie-break LexDFS of ``sigma``. Otherwise the class
    order defaults to bin order.
    """
    if class_order is None:
        class_order = ClassOrder.REVERSE if plus else ClassOrder.BIN
    elif plus and ClassOrder(class_order) is not ClassOrder.REVERSE:
        raise ValueError("plus mode requires the reverse class order")
    counters = WorkCounters()
    partition = build_partition_classes(graph, sigma, class_order, counters)
    sorted_graph = reorder_adjacency(graph, partition.order(), counters)
    steps: list[RefinementStep] | None = [] if trace else None
    tau = refine_partition(sorted_graph, partition, counters, steps)
    return PipelineRun(tau, partition, counters, steps)


def cclexdfs(graph: Graph, sigma: Ordering, plus: bool = False) -> Ordering:
    """LexDFS cocomparability ordering of ``graph`` from the cocomparability ordering ``sigma``.

    Runs in O(n + m). If ``sigma`` is not umbrella-free the output is some
    permutation with no guarantees.
    """
    return run_pipeline(graph, sigma, plus=plus).tau


def refine_literal(
    members: Sequence[int], pivots_in_pop_order: Sequence[int], graph: Graph
) -> tuple[int, ...]:
    """Direct transcription of the per-pivot loop over all current parts.

    Each pivot replaces every part ``Q`` that it splits by ``Q ∩ N(v)``
    followed by ``Q \\ N(v)``, both in their existing order. Θ(#parts) per
    pivot; kept as a cross-check for :func:`refine`.
    """
    parts = [list(members)] if members else []
    for v in pivots_in_pop_order:
        nbrs = graph.neighbor_sets[v]
        new_parts = []
        for q in parts:
            inside = [x for x in q if x in nbrs]
            if 0 < len(inside) < len(q):
                new_parts.append(inside)
                new_parts.append([x for x in q if x not in nbrs])
            else:
                new_parts.append(q)
        parts = new_parts
    return tuple(x for q in parts for x in q)
