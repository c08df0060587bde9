from __future__ import annotations

import pytest

from cclexdfs.generators import fixture_names, gen_fixture
from cclexdfs.graph import Graph, Ordering

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


class Named:
    """Translate between letter names and vertex ids for the worked examples."""

    def __init__(self, names: str):
        self.names = names
        self.index = {c: i for i, c in enumerate(names)}

    def ids(self, letters: str) -> list[int]:
        return [self.index[c] for c in letters.replace(",", "").replace(" ", "")]

    def letters(self, ids) -> str:
        return "".join(self.names[v] for v in ids)

    def order(self, letters: str) -> Ordering:
        return Ordering.from_sequence(self.ids(letters))


@pytest.fixture
def fig1() -> tuple[Graph, Ordering, Named]:
    g, s = gen_fixture("fig1")
    return g, s, Named(fixture_names("fig1"))


@pytest.fixture
def fig2() -> tuple[Graph, Ordering, Named]:
    g, s = gen_fixture("fig2")
    return g, s, Named(fixture_names("fig2"))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])
