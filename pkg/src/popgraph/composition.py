"""Gluing and splitting planarly ordered progressive graphs.

Composition glues the k-th output (by the order) of the first factor to the
k-th input of the second, fusing each such pair into one new edge; the
composite order shuffles the two orders around the fused edges:

    Q_1, f_1, P_1, Q_2, f_2, P_2, ..., Q_n, f_n, P_n

where Q_k collects the first factor's non-output edges before its k-th
output and P_k the second factor's non-input edges after its k-th input.
The result is re-validated; a failure there would be a bug, not bad input,
since planar orders are closed under this composition.

Decomposition is the inverse: splitting off an order-maximal internal vertex
leaves a remainder and an elementary factor (one internal vertex plus
pass-through bare edges) whose composition restores the original, and
repeating until no internal vertex is left writes the graph as a chain of
single-vertex layers.
"""

from __future__ import annotations

from .core import DirectedMultigraph, Edge, ProgressiveGraph, validate_progressive
from .errors import ArityMismatch, NoInternalVertex
from .order import POPGraph, validate_planar_order


def is_elementary(g: ProgressiveGraph) -> bool:
    """True when every connected component has at most one internal vertex.

    Components of a progressive graph are spiders (one internal vertex and
    its legs) or bare edges exactly under this condition.
    """
    parent: dict[str, str] = {v: v for v in g.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in g.edges:
        a, b = find(e.src), find(e.dst)
        if a != b:
            parent[a] = b
    count: dict[str, int] = {}
    for v in g.internal_vertices:
        r = find(v)
        count[r] = count.get(r, 0) + 1
        if count[r] > 1:
            return False
    return True


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def compose(first: POPGraph, second: POPGraph) -> POPGraph:
    """Glue the outputs of ``first`` onto the inputs of ``second``.

    Arities must match.  A fused edge keeps its id when both halves agree on
    it (which is how decomposition factors are labelled) and is otherwise
    named "lower~upper"; surviving edges keep their ids, with a "'" suffix
    appended on collision.  Vertex ids from the second factor are suffixed
    the same way when they clash with the first's.
    """
    outs = first.outputs_ordered
    ins = second.inputs_ordered
    if len(outs) != len(ins):
        raise ArityMismatch(len(outs), len(ins))
    g1, g2 = first.graph, second.graph

    sinks1 = {g1.edge(o).dst for o in outs}
    sources2 = {g2.edge(i).src for i in ins}
    vmap2: dict[str, str] = {}
    taken = {v for v in g1.vertices if v not in sinks1}
    for v in g2.vertices:
        if v not in sources2:
            vmap2[v] = _fresh(v, taken)

    survivors1 = [e for e in g1.edges if e.id not in set(outs)]
    survivors2 = [e for e in g2.edges if e.id not in set(ins)]
    used = {e.id for e in survivors1}
    fused_id: dict[str, str] = {}
    for o, i in zip(outs, ins):
        fused_id[o] = _fresh(o if o == i else f"{o}~{i}", used)
    emap2 = {e.id: _fresh(e.id, used) for e in survivors2}

    edges = list(survivors1)
    for o, i in zip(outs, ins):
        edges.append(Edge(fused_id[o], g1.edge(o).src, vmap2[g2.edge(i).dst]))
    for e in survivors2:
        edges.append(Edge(emap2[e.id], vmap2[e.src], vmap2[e.dst]))

    # Shuffle the two orders around the fused edges.
    seq1, seq2 = first.order.sequence, second.order.sequence
    out_pos = {o: k for k, o in enumerate(outs)}
    in_pos = {i: k for k, i in enumerate(ins)}
    n = len(outs)
    q_blocks: list[list[str]] = [[] for _ in range(n)]
    k = 0
    for e in seq1:
        if e in out_pos:
            assert out_pos[e] == k, "outputs out of order"
            k += 1
        else:
            q_blocks[k].append(e)
    assert k == n, "non-output edges after the last output"
    p_blocks: list[list[str]] = [[] for _ in range(n)]
    k = -1
    for e in seq2:
        if e in in_pos:
            k = in_pos[e]
            assert k >= 0
        else:
            assert k >= 0, "non-input edge before the first input"
            p_blocks[k].append(emap2[e])
    order: list[str] = []
    for k in range(n):
        order.extend(q_blocks[k])
        order.append(fused_id[outs[k]])
        order.extend(p_blocks[k])

    graph = validate_progressive(DirectedMultigraph(edges))
    return validate_planar_order(graph, order)


def glue_table(first: POPGraph, second: POPGraph) -> tuple[tuple[str, str], ...]:
    """The (output id, input id) pairs :func:`compose` would fuse, in order."""
    outs = first.outputs_ordered
    ins = second.inputs_ordered
    if len(outs) != len(ins):
        raise ArityMismatch(len(outs), len(ins))
    return tuple(zip(outs, ins))


def pop_isomorphic(a: POPGraph, b: POPGraph) -> bool:
    """Isomorphism of ordered graphs: the k-th edge of one must map to the
    k-th edge of the other, and that forced edge map must extend to a
    src/dst-preserving vertex bijection."""
    if len(a.order) != len(b.order):
        return False
    if len(a.graph.vertices) != len(b.graph.vertices):
        return False
    fwd: dict[str, str] = {}
    rev: dict[str, str] = {}
    for ea_id, eb_id in zip(a.order, b.order):
        ea, eb = a.graph.edge(ea_id), b.graph.edge(eb_id)
        for va, vb in ((ea.src, eb.src), (ea.dst, eb.dst)):
            if fwd.setdefault(va, vb) != vb or rev.setdefault(vb, va) != va:
                return False
    return True


def _split_vertex(pop: POPGraph, v: str) -> tuple[POPGraph, POPGraph]:
    """Split internal vertex v (which must be order-maximal among internal
    vertices, i.e. all its out-edges are outputs) into an elementary factor,
    leaving the remainder."""
    g = pop.graph
    spider_out = [e.id for e in g.out_edges(v)]
    spider_in = [e.id for e in g.in_edges(v)]
    assert all(o in g.outputs for o in spider_out), "vertex is not maximal"

    taken = set(g.vertices)
    remainder_edges = []
    for e in g.edges:
        if e.id in set(spider_out):
            continue
        if e.dst == v:
            remainder_edges.append(Edge(e.id, e.src, _fresh(f"t@{e.id}", taken)))
        else:
            remainder_edges.append(e)
    remainder_graph = validate_progressive(DirectedMultigraph(remainder_edges))
    remainder_order = [e for e in pop.order if not (e in set(spider_out))]
    remainder = validate_planar_order(remainder_graph, remainder_order)

    factor_ids = set(pop.outputs_ordered) | set(spider_in)
    taken = {v} | {g.edge(o).dst for o in pop.outputs_ordered}
    taken |= {e.src for e in g.edges if e.id in factor_ids and e.id in g.inputs}
    factor_edges = []
    for e in g.edges:
        if e.id not in factor_ids:
            continue
        if e.id in set(spider_out):
            factor_edges.append(Edge(e.id, v, e.dst))
        elif e.id in g.inputs:
            # tail is already a degree-one boundary source; bring it along,
            # so recomposing restores the original graph vertex for vertex
            factor_edges.append(e)
        elif e.id in set(spider_in):
            factor_edges.append(Edge(e.id, _fresh(f"s@{e.id}", taken), v))
        else:
            factor_edges.append(Edge(e.id, _fresh(f"s@{e.id}", taken), e.dst))
    factor_graph = validate_progressive(DirectedMultigraph(factor_edges))
    factor_order = [e for e in pop.order if e in factor_ids]
    factor = validate_planar_order(factor_graph, factor_order)
    return remainder, factor


def decompose_step(pop: POPGraph) -> tuple[POPGraph, POPGraph]:
    """Split off one maximal internal vertex; compose(remainder, factor)
    restores ``pop`` edge for edge.

    Among the maximal internal vertices (those whose out-edges are all
    outputs) the one whose first out-edge in the order comes earliest is
    chosen, which makes repeated decomposition deterministic.
    """
    g = pop.graph
    maximal = []
    for v in sorted(g.internal_vertices):
        if all(e.id in g.outputs for e in g.out_edges(v)):
            maximal.append(v)
    if not maximal:
        if not g.internal_vertices:
            raise NoInternalVertex()
        raise AssertionError("acyclic graph must have a maximal internal vertex")
    v = min(maximal, key=lambda u: min(pop.rank(e.id) for e in g.out_edges(u)))
    return _split_vertex(pop, v)


class ElementaryDecomposition:
    """Factors listed upstream-to-downstream, plus the interface pairings.

    ``interfaces[k]`` pairs the outputs of ``factors[k]`` with the inputs of
    ``factors[k+1]`` position by position; in a decomposition both sides of
    each pair carry the same original edge id.
    """

    def __init__(self, factors):
        self.factors: tuple[POPGraph, ...] = tuple(factors)
        self.interfaces: tuple[tuple[tuple[str, str], ...], ...] = tuple(
            glue_table(a, b) for a, b in zip(self.factors, self.factors[1:]))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __repr__(self):
        return f"ElementaryDecomposition({len(self.factors)} factors)"


def elementary_decomposition(pop: POPGraph) -> ElementaryDecomposition:
    """Peel maximal internal vertices until none remain.

    Yields exactly one factor per internal vertex (the final all-bare
    remainder is absorbed into the most upstream factor's inputs); a graph
    with no internal vertex at all is its own single factor.
    """
    if not pop.graph.internal_vertices:
        return ElementaryDecomposition([pop])
    factors: list[POPGraph] = []
    current = pop
    while current.graph.internal_vertices:
        current, factor = decompose_step(current)
        factors.append(factor)
    factors.reverse()
    return ElementaryDecomposition(factors)


def recompose(decomposition) -> POPGraph:
    """Fold :func:`compose` over the factors, upstream first."""
    factors = list(decomposition)
    result = factors[0]
    for factor in factors[1:]:
        result = compose(result, factor)
    return result
