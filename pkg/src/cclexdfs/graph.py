"""Graph and vertex-ordering representations plus their plain-text file formats.

Vertices are the integers ``0..n-1``. A :class:`Graph` keeps its edges in
input order and one adjacency tuple per vertex; the neighbor order inside an
adjacency tuple is meaningful (later stages rely on it being sorted by the
layer ordering, see :func:`reorder_adjacency`).

Graph file::

    # comment lines are ignored
    n m
    u v        (m lines)

Ordering file: a single line of ``n`` whitespace separated vertex ids.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence, Union

from .counters import WorkCounters

TextSource = Union[str, bytes, IO[str], IO[bytes]]


class GraphFormatError(ValueError):
    """Raised for malformed graph or ordering input; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and out-of-range ids."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edge_list = []
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has a vertex id outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            edge_list.append((u, v))
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(edge_list), tuple(tuple(a) for a in adj))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency as Python-int bitsets, bit ``u`` set iff ``u`` is a neighbor."""
        masks = []
        for a in self.adj:
            mask = 0
            for u in a:
                mask |= 1 << u
            masks.append(mask)
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))


@dataclass(frozen=True)
class Ordering:
    """A bijection between positions and vertex ids.

    Positions are 0-based here; ``seq[i]`` is the vertex at position ``i`` and
    ``inv[v]`` the position of vertex ``v``.
    """

    seq: tuple[int, ...]
    inv: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "Ordering":
        seq = tuple(int(v) for v in seq)
        n = len(seq)
        inv = [-1] * n
        for i, v in enumerate(seq):
            if not 0 <= v < n or inv[v] != -1:
                raise ValueError(f"not a permutation of 0..{n - 1}: {list(seq)}")
            inv[v] = i
        return cls(seq, tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(tuple(range(n)), tuple(range(n)))

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self) -> Iterator[int]:
        return iter(self.seq)

    def __getitem__(self, i: int) -> int:
        return self.seq[i]

    def position(self, v: int) -> int:
        return self.inv[v]

    def precedes(self, u: int, v: int) -> bool:
        return self.inv[u] < self.inv[v]

    def reversed(self) -> "Ordering":
        return Ordering(self.seq[::-1], tuple(len(self.seq) - 1 - p for p in self.inv))


def reverse(order: Ordering) -> Ordering:
    return order.reversed()


def reorder_adjacency(graph: Graph, order: Ordering, counters: WorkCounters | None = None) -> Graph:
    """Return ``graph`` with every adjacency tuple sorted by position in ``order``.

    One pass over ``order``: for each vertex ``v`` in turn, ``v`` is appended to
    the new list of each of its neighbors, so lists come out sorted without a
    comparison sort. Touches ``n + 2m`` elements.
    """
    if len(order) != graph.n:
        raise ValueError("ordering does not cover the graph's vertices")
    new_adj: list[list[int]] = [[] for _ in range(graph.n)]
    touches = 0
    for v in order.seq:
        touches += 1
        for u in graph.adj[v]:
            new_adj[u].append(v)
            touches += 1
    if counters is not None:
        counters.reorder_touches += touches
    return Graph(graph.n, graph.edges, tuple(tuple(a) for a in new_adj))


# --- file formats ---------------------------------------------------------


def _read_text(source: TextSource) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", lineno) from None


def load_graph(source: TextSource) -> Graph:
    """Parse the edge-list format. ``source`` may be text, bytes or a file object."""
    lines = _content_lines(_read_text(source))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("missing 'n m' header") from None
    if len(header) != 2:
        raise GraphFormatError("header must be exactly 'n m'", lineno)
    n, m = (_parse_int(t, lineno) for t in header)
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be non-negative", lineno)

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        u, v = (_parse_int(t, lineno) for t in tokens)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def dump_graph(graph: Graph) -> str:
    out = io.StringIO()
    out.write(f"{graph.n} {graph.m}\n")
    for u, v in graph.edges:
        out.write(f"{u} {v}\n")
    return out.getvalue()


def save_graph(graph: Graph, path: str | Path) -> None:
    Path(path).write_text(dump_graph(graph), encoding="utf-8")


def read_graph(path: str | Path) -> Graph:
    with open(path, "rb") as fh:
        return load_graph(fh)


def load_ordering(source: TextSource, n: int | None = None) -> Ordering:
    tokens: list[str] = []
    first_line = None
    for lineno, parts in _content_lines(_read_text(source)):
        first_line = first_line or lineno
        tokens.extend(parts)
    ids = [_parse_int(t, first_line or 1) for t in tokens]
    if n is not None and len(ids) != n:
        raise GraphFormatError(f"ordering has {len(ids)} ids, expected {n}", first_line)
    try:
        return Ordering.from_sequence(ids)
    except ValueError as exc:
        raise GraphFormatError(str(exc), first_line) from None


def dump_ordering(order: Sequence[int] | Ordering) -> str:
    return " ".join(str(v) for v in order) + "\n"


def save_ordering(order: Sequence[int] | Ordering, path: str | Path) -> None:
    Path(path).write_text(dump_ordering(order), encoding="utf-8")


def read_ordering(path: str | Path, n: int | None = None) -> Ordering:
    with open(path, "rb") as fh:
        return load_ordering(fh, n)
