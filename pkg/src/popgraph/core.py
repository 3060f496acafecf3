"""Directed multigraphs and the progressive-graph validity layer.

A progressive graph is a finite acyclic directed multigraph in which every
source and every sink has degree exactly one.  Degree-one vertices are the
boundary; everything else is internal.  Edges whose tail is a boundary vertex
are the graph's inputs, edges whose head is a boundary vertex are its outputs;
a bare edge (boundary at both ends) is both.  Connectivity is not required.

Reachability here is between *edges*: edge a reaches edge b when a directed
path starts with a and ends with b.  The reflexive convention reaches(e, e) is
true; the strict part (a != b) is the precedence order that planar orders must
extend.  Both the vertex-level and edge-level transitive closures are computed
once at validation time and stored as integer bitsets, so later queries are
O(1) and the objects can be treated as immutable values.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import (
    BadBoundaryDegree,
    CycleDetected,
    DuplicateId,
    IsolatedVertex,
    ReservedVertexName,
    UnknownEdge,
    UnknownVertex,
)


class Edge(NamedTuple):
    id: str
    src: str
    dst: str


class DirectedMultigraph:
    """Edge-labelled directed multigraph.

    Vertices are inferred from edge endpoints; ``extra_vertices`` may declare
    vertices with no incident edges (progressive validation rejects those).
    Edge ids must be unique.  Declaration order of edges is preserved and is
    part of the value: two graphs are equal when they have the same vertex set
    and the same edge tuple.
    """

    def __init__(self, edges: Iterable[Edge | tuple[str, str, str]],
                 extra_vertices: Iterable[str] = ()):
        out: list[Edge] = []
        seen: set[str] = set()
        for e in edges:
            e = Edge(*e)
            if e.id in seen:
                raise DuplicateId("edge", e.id)
            seen.add(e.id)
            out.append(e)
        self.edges: tuple[Edge, ...] = tuple(out)
        verts: dict[str, None] = {}  # insertion-ordered set
        for e in self.edges:
            verts.setdefault(e.src)
            verts.setdefault(e.dst)
        for v in extra_vertices:
            verts.setdefault(v)
        self.vertices: tuple[str, ...] = tuple(verts)
        self._by_id = {e.id: e for e in self.edges}

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise UnknownEdge(edge_id) from None

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._by_id

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        if v not in self.vertices:
            raise UnknownVertex(v)
        return tuple(e for e in self.edges if e.dst == v)

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        if v not in self.vertices:
            raise UnknownVertex(v)
        return tuple(e for e in self.edges if e.src == v)

    def __eq__(self, other) -> bool:
        # declaration order is presentation, not identity
        if not isinstance(other, DirectedMultigraph):
            return NotImplemented
        return (frozenset(self.edges) == frozenset(other.edges)
                and set(self.vertices) == set(other.vertices))

    def __hash__(self):
        return hash((frozenset(self.edges), frozenset(self.vertices)))

    def __repr__(self):
        return f"DirectedMultigraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def _toposort(g: DirectedMultigraph) -> list[str]:
    """Vertices in a topological order; raises CycleDetected with a witness."""
    indeg = {v: 0 for v in g.vertices}
    succs: dict[str, list[str]] = {v: [] for v in g.vertices}
    for e in g.edges:
        indeg[e.dst] += 1
        succs[e.src].append(e.dst)
    ready = [v for v in g.vertices if indeg[v] == 0]
    order: list[str] = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in succs[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) == len(g.vertices):
        return order
    # Walk predecessors inside the leftover set until a vertex repeats; every
    # stuck vertex keeps at least one unprocessed incoming edge, so the walk
    # cannot leave the set.
    stuck = {v for v in g.vertices if indeg[v] > 0}
    pred: dict[str, str] = {}
    for e in g.edges:
        if e.src in stuck and e.dst in stuck:
            pred.setdefault(e.dst, e.src)
    path: list[str] = []
    at: dict[str, int] = {}
    v = next(iter(sorted(stuck)))
    while v not in at:
        at[v] = len(path)
        path.append(v)
        v = pred[v]
    cycle = path[at[v]:]
    cycle.reverse()
    raise CycleDetected(tuple(cycle) + (cycle[0],))


class ProgressiveGraph:
    """A validated progressive graph with precomputed reachability closures.

    Build via :func:`validate_progressive`; the constructor itself performs
    the checks, so every instance is valid.  Treat instances as immutable.
    """

    def __init__(self, graph: DirectedMultigraph):
        indeg: dict[str, int] = {v: 0 for v in graph.vertices}
        outdeg: dict[str, int] = {v: 0 for v in graph.vertices}
        for e in graph.edges:
            outdeg[e.src] += 1
            indeg[e.dst] += 1
        for v in graph.vertices:
            if indeg[v] == 0 and outdeg[v] == 0:
                raise IsolatedVertex(v)
        topo = _toposort(graph)
        for v in graph.vertices:
            if indeg[v] == 0 and outdeg[v] != 1:
                raise BadBoundaryDegree(v, "source", outdeg[v])
            if outdeg[v] == 0 and indeg[v] != 1:
                raise BadBoundaryDegree(v, "sink", indeg[v])

        self.graph = graph
        self.internal_vertices: frozenset[str] = frozenset(
            v for v in graph.vertices if indeg[v] + outdeg[v] >= 2)
        self.inputs: frozenset[str] = frozenset(
            e.id for e in graph.edges if e.src not in self.internal_vertices)
        self.outputs: frozenset[str] = frozenset(
            e.id for e in graph.edges if e.dst not in self.internal_vertices)

        # Vertex closure, reflexive, as bitsets over the vertex index.
        vix = {v: i for i, v in enumerate(graph.vertices)}
        vreach = [1 << i for i in range(len(graph.vertices))]
        out_by_vertex: dict[str, list[Edge]] = {v: [] for v in graph.vertices}
        for e in graph.edges:
            out_by_vertex[e.src].append(e)
        for v in reversed(topo):
            acc = vreach[vix[v]]
            for e in out_by_vertex[v]:
                acc |= vreach[vix[e.dst]]
            vreach[vix[v]] = acc

        # edges_from[v] = bitset of edges whose tail is v; src_union[v] = all
        # edges whose tail is any vertex reachable from v (reflexively).
        eix = {e.id: i for i, e in enumerate(graph.edges)}
        edges_from = {v: 0 for v in graph.vertices}
        for e in graph.edges:
            edges_from[e.src] |= 1 << eix[e.id]
        src_union = {v: 0 for v in graph.vertices}
        for v in reversed(topo):
            acc = edges_from[v]
            for e in out_by_vertex[v]:
                acc |= src_union[e.dst]
            src_union[v] = acc

        self._vix = vix
        self._eix = eix
        self._vreach = tuple(vreach)
        # Strict edge reachability: e reaches f (e != f) iff f's tail is a
        # vertex reachable from e's head.  Acyclicity rules out e itself.
        self._ereach = tuple(src_union[e.dst] for e in graph.edges)

    # -- queries ----------------------------------------------------------

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return self.graph.edge_ids

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.graph.vertices

    def edge(self, edge_id: str) -> Edge:
        return self.graph.edge(edge_id)

    def vertex_reaches(self, v1: str, v2: str) -> bool:
        """True when a directed path (possibly empty) runs from v1 to v2."""
        for v in (v1, v2):
            if v not in self._vix:
                raise UnknownVertex(v)
        return bool(self._vreach[self._vix[v1]] >> self._vix[v2] & 1)

    def reaches(self, e1: str, e2: str) -> bool:
        """True when a directed path starts with edge e1 and ends with e2.

        Reflexive by convention; use :meth:`strictly_reaches` for the strict
        precedence relation.
        """
        return e1 == e2 or self.strictly_reaches(e1, e2)

    def strictly_reaches(self, e1: str, e2: str) -> bool:
        for e in (e1, e2):
            if e not in self._eix:
                raise UnknownEdge(e)
        return bool(self._ereach[self._eix[e1]] >> self._eix[e2] & 1)

    def reach_set(self, e1: str) -> frozenset[str]:
        """Ids of all edges strictly reachable from e1."""
        if e1 not in self._eix:
            raise UnknownEdge(e1)
        bits = self._ereach[self._eix[e1]]
        return frozenset(e.id for e in self.graph.edges if bits >> self._eix[e.id] & 1)

    def reach_bits(self, e1: str) -> int:
        """Strict reachability row as a bitset over edge declaration indexes."""
        return self._ereach[self._eix[e1]]

    def edge_index(self, e: str) -> int:
        if e not in self._eix:
            raise UnknownEdge(e)
        return self._eix[e]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        return self.graph.in_edges(v)

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        return self.graph.out_edges(v)

    def is_input(self, e: str) -> bool:
        self.graph.edge(e)
        return e in self.inputs

    def is_output(self, e: str) -> bool:
        self.graph.edge(e)
        return e in self.outputs

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProgressiveGraph):
            return NotImplemented
        return self.graph == other.graph

    def __hash__(self):
        return hash(self.graph)

    def __repr__(self):
        return (f"ProgressiveGraph({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, {len(self.internal_vertices)} internal)")


def validate_progressive(graph: DirectedMultigraph) -> ProgressiveGraph:
    """Check acyclicity and boundary degrees; reject isolated vertices."""
    return ProgressiveGraph(graph)


class StGraph:
    """A planar-st-style graph: one source ``s``, one sink ``t``, acyclic.

    ``rotation`` optionally records, per vertex, the circular order of
    incident edges as (incoming tuple, outgoing tuple); it is carried through
    parsing and emission untouched.
    """

    def __init__(self, graph: DirectedMultigraph, source: str, sink: str,
                 rotation: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] | None = None):
        if source not in graph.vertices:
            raise UnknownVertex(source)
        if sink not in graph.vertices:
            raise UnknownVertex(sink)
        _toposort(graph)
        indeg = {v: 0 for v in graph.vertices}
        outdeg = {v: 0 for v in graph.vertices}
        for e in graph.edges:
            outdeg[e.src] += 1
            indeg[e.dst] += 1
        for v in graph.vertices:
            if indeg[v] == 0 and outdeg[v] == 0:
                raise IsolatedVertex(v)
            if indeg[v] == 0 and v != source:
                raise BadBoundaryDegree(v, "source", outdeg[v])
            if outdeg[v] == 0 and v != sink:
                raise BadBoundaryDegree(v, "sink", indeg[v])
        if indeg[source] != 0:
            raise BadBoundaryDegree(source, "source", indeg[source])
        if outdeg[sink] != 0:
            raise BadBoundaryDegree(sink, "sink", outdeg[sink])
        self.graph = graph
        self.source = source
        self.sink = sink
        self.rotation = dict(rotation or {})

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    def __eq__(self, other) -> bool:
        if not isinstance(other, StGraph):
            return NotImplemented
        return (self.graph, self.source, self.sink) == (other.graph, other.source, other.sink)

    def __repr__(self):
        return (f"StGraph({len(self.graph.vertices)} vertices, "
                f"{len(self.graph.edges)} edges)")


def hat(p: ProgressiveGraph) -> StGraph:
    """Merge all boundary sources into a fresh vertex ``s`` and all boundary
    sinks into a fresh ``t``.  Edge ids are preserved; the names ``s`` and
    ``t`` must not already be in use."""
    for name in ("s", "t"):
        if name in p.vertices:
            raise ReservedVertexName(name)
    edges = []
    for e in p.edges:
        src = "s" if e.id in p.inputs else e.src
        dst = "t" if e.id in p.outputs else e.dst
        edges.append(Edge(e.id, src, dst))
    return StGraph(DirectedMultigraph(edges), "s", "t")


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def circ(st: StGraph) -> ProgressiveGraph:
    """Split ``s`` and ``t`` back off: every edge leaving the source gets its
    own fresh degree-one tail, every edge entering the sink its own fresh
    head.  Inverse of :func:`hat` up to isomorphism."""
    taken = set(st.graph.vertices)
    edges = []
    for e in st.graph.edges:
        src = _fresh(f"s@{e.id}", taken) if e.src == st.source else e.src
        dst = _fresh(f"t@{e.id}", taken) if e.dst == st.sink else e.dst
        edges.append(Edge(e.id, src, dst))
    return validate_progressive(DirectedMultigraph(edges))


def isomorphic_by_edges(a, b) -> bool:
    """Isomorphism check for graphs that share their edge ids.

    The edge map is the identity on ids; the check is whether the induced
    vertex correspondence is a well-defined bijection.  Accepts any mix of
    DirectedMultigraph, ProgressiveGraph and StGraph.
    """
    ga = a.graph if hasattr(a, "graph") else a
    gb = b.graph if hasattr(b, "graph") else b
    if sorted(ga.edge_ids) != sorted(gb.edge_ids):
        return False
    if len(ga.vertices) != len(gb.vertices):
        return False
    fwd: dict[str, str] = {}
    rev: dict[str, str] = {}
    for ea in ga.edges:
        eb = gb.edge(ea.id)
        for va, vb in ((ea.src, eb.src), (ea.dst, eb.dst)):
            if fwd.setdefault(va, vb) != vb or rev.setdefault(vb, va) != va:
                return False
    return True
