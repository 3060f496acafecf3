from __future__ import annotations

import random
from itertools import permutations
from pathlib import Path

import pytest

import popgraph as pg

FIXTURES = Path(__file__).parent / "fixtures"


def load(name: str) -> pg.PpgDocument:
    return pg.parse_ppg((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def canonical() -> pg.POPGraph:
    return load("canonical19.ppg").pop()


@pytest.fixture(scope="session")
def layers() -> tuple[pg.POPGraph, pg.POPGraph, pg.POPGraph]:
    return tuple(load(n).pop()
                 for n in ("layer_top.ppg", "layer_mid.ppg", "layer_bot.ppg"))


@pytest.fixture(scope="session")
def suite() -> list[tuple[str, pg.POPGraph]]:
    return pg.generator_suite()


# Independent oracles.  These re-derive the definitions with none of the
# bitset machinery, so agreement with the library is evidence.

def slow_reaches(g: pg.ProgressiveGraph, a: str, b: str) -> bool:
    """Strict edge reachability by plain DFS over vertices."""
    if a == b:
        return False
    target = g.edge(b).src
    seen = set()
    stack = [g.edge(a).dst]
    while stack:
        v = stack.pop()
        if v == target:
            return True
        if v in seen:
            continue
        seen.add(v)
        stack.extend(e.dst for e in g.out_edges(v))
    return False


def slow_planar(g: pg.ProgressiveGraph, seq) -> bool:
    """Both axioms checked straight from their statements."""
    seq = list(seq)
    pos = {e: i for i, e in enumerate(seq)}
    for a in seq:
        for b in seq:
            if a != b and slow_reaches(g, a, b) and pos[a] > pos[b]:
                return False
    for a in seq:
        for c in seq:
            if a == c or not slow_reaches(g, a, c):
                continue
            for b in seq:
                if pos[a] < pos[b] < pos[c]:
                    if not slow_reaches(g, a, b) and not slow_reaches(g, b, c):
                        return False
    return True


def brute_orders(g: pg.ProgressiveGraph) -> list[tuple[str, ...]]:
    """Every planar order by filtering all permutations.  Keep it tiny."""
    assert len(g.edges) <= 6, "brute force is factorial, use small graphs"
    return [p for p in permutations(g.edge_ids) if slow_planar(g, p)]


def perturbed(pop: pg.POPGraph, rng: random.Random) -> pg.POPGraph | None:
    """A different valid planar order on the same graph, if one exists
    within an adjacent transposition."""
    seq = list(pop.order.sequence)
    idxs = list(range(len(seq) - 1))
    rng.shuffle(idxs)
    for i in idxs:
        a, b = seq[i], seq[i + 1]
        if pop.graph.strictly_reaches(a, b):
            continue
        swapped = seq[:i] + [b, a] + seq[i + 2:]
        try:
            return pg.validate_planar_order(pop.graph, swapped)
        except pg.InvalidPlanarOrder:
            continue
    return None


def spider_layer_with_outputs(rng: random.Random, tag: str, m: int) -> pg.POPGraph:
    """One spider plus bare edges, with exactly m outputs in total."""
    q = rng.randint(1, min(3, m))
    p = rng.randint(1, 3)
    bares = m - q
    at = rng.randint(0, bares)
    edges = []
    n = 0

    def bare():
        nonlocal n
        n += 1
        edges.append(pg.Edge(f"{tag}e{n}", f"{tag}s{n}", f"{tag}t{n}"))

    for _ in range(at):
        bare()
    v = f"{tag}v"
    for _ in range(p):
        n += 1
        edges.append(pg.Edge(f"{tag}e{n}", f"{tag}s{n}", v))
    for _ in range(q):
        n += 1
        edges.append(pg.Edge(f"{tag}e{n}", v, f"{tag}t{n}"))
    for _ in range(bares - at):
        bare()
    g = pg.ProgressiveGraph(pg.DirectedMultigraph(edges))
    return pg.validate_planar_order(g, [e.id for e in edges])
