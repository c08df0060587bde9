"""Naive label-based LexDFS, used as the reference the fast pipeline is checked against.

Every step scans all unnumbered vertices for the lexicographically largest
label. Quadratic in ``n``; meant for correctness checks, not for speed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import total_ordering
from typing import Callable

from .graph import Graph, Ordering


@total_ordering
@dataclass
class LexLabel:
    """Visit numbers of already-numbered neighbors, most recent first.

    Stored back to front so that prepending is an append.
    """

    _rev: list[int] = field(default_factory=list)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(reversed(self._rev))

    def prepend(self, i: int) -> None:
        self._rev.append(i)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LexLabel):
            return NotImplemented
        return self._rev == other._rev

    def __lt__(self, other: "LexLabel") -> bool:
        # A proper prefix is smaller, matching tuple comparison.
        return self.entries < other.entries

    def __str__(self) -> str:
        return "".join(str(i) for i in self.entries) or "ε"


def label_key(entries: tuple[int, ...]) -> int:
    """Integer with bit ``i`` set per entry ``i``.

    Entries are distinct and strictly decreasing, so comparing two labels
    lexicographically is the same as comparing their keys: the largest entry
    present in only one label decides both comparisons.
    """
    key = 0
    for i in entries:
        key |= 1 << i
    return key


class Tie(Enum):
    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"


@dataclass(frozen=True)
class TieRule:
    kind: Tie
    reference: Ordering

    @classmethod
    def leftmost(cls, reference: Ordering) -> "TieRule":
        return cls(Tie.LEFTMOST, reference)

    @classmethod
    def rightmost(cls, reference: Ordering) -> "TieRule":
        return cls(Tie.RIGHTMOST, reference)

    def rank(self, v: int) -> int:
        """Larger rank wins a tie."""
        pos = self.reference.position(v)
        return pos if self.kind is Tie.RIGHTMOST else -pos


StepHook = Callable[[int, int, dict[int, LexLabel]], None]


def lexdfs_generic(
    graph: Graph,
    tie: TieRule,
    start: int | None = None,
    on_step: StepHook | None = None,
) -> Ordering:
    """LexDFS by explicit labels; ties among equal labels go to ``tie``.

    Visit numbers are 1-based as in the usual presentation. With ``start``
    given, that vertex is numbered first; otherwise the tie rule picks it from
    the all-empty labels. ``on_step(i, v, labels)`` is called after vertex
    ``v`` received number ``i`` and its neighbors' labels were updated;
    ``labels`` maps every still-unnumbered vertex to its label.
    """
    n = graph.n
    if len(tie.reference) != n:
        raise ValueError("tie-rule reference ordering does not cover the graph")
    labels = {v: LexLabel() for v in range(n)}
    keys = [0] * n
    ranks = [tie.rank(v) for v in range(n)]
    unnumbered = set(range(n))
    seq = []
    for i in range(1, n + 1):
        if i == 1 and start is not None:
            v = start
        else:
            v = max(unnumbered, key=lambda u: (keys[u], ranks[u]))
        unnumbered.remove(v)
        del labels[v]
        seq.append(v)
        for w in graph.adj[v]:
            if w in unnumbered:
                labels[w].prepend(i)
                keys[w] |= 1 << i
        if on_step is not None:
            on_step(i, v, labels)
    return Ordering.from_sequence(seq)


def lexdfs_from(graph: Graph, start: int, reference: Ordering | None = None) -> Ordering:
    """LexDFS from a fixed start vertex, remaining ties to the leftmost in ``reference``."""
    reference = reference or Ordering.identity(graph.n)
    return lexdfs_generic(graph, TieRule.leftmost(reference), start=start)


def lexdfs_plus_oracle(graph: Graph, sigma: Ordering) -> Ordering:
    """LexDFS+ of ``sigma``: ties go to the vertex rightmost in ``sigma``."""
    return lexdfs_generic(graph, TieRule.rightmost(sigma))
