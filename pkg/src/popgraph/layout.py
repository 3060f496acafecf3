"""Layered upward drawings of planarly ordered graphs.

The layout slices a graph into its elementary factors and stacks them as
horizontal bands, flow running down the page (or up, when flipped).  At
every band boundary the edges crossing it sit at integer x positions given
by their rank in the planar order restricted to that boundary; because each
factor's spider legs form a contiguous block of its order, routing the legs
to a vertex centroid and everything else straight across keeps the drawing
planar.  All coordinates are exact rationals so the crossing checker can be
exact too.

``check_drawing`` verifies monotonicity, boundary attachment, and pairwise
non-crossing of every segment pair; ``read_back`` recovers the vertex
orders and anchors from coordinates alone, which ties the picture back to
the combinatorics it came from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .composition import elementary_decomposition
from .core import ProgressiveGraph
from .errors import ReservedVertexName
from .order import POPGraph
from .synthesis import Anchor, PAGraph, VertexOrder

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Drawing:
    """A routed drawing: polylines per edge, one point per internal vertex.

    ``flow`` says which way the y axis carries the graph ("down": tails at
    smaller y).  ``box`` frames the banded region; the source/sink apexes of
    an st drawing sit outside it.  Route points run tail to head.
    """
    flow: str
    box: tuple[Fraction, Fraction, Fraction, Fraction]
    bands: tuple[tuple[Fraction, Fraction], ...]
    vertices: dict[str, Point]
    routes: dict[str, tuple[Point, ...]]
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    st: bool = False
    source: str | None = None
    sink: str | None = None

    @property
    def width(self) -> Fraction:
        return self.box[2] - self.box[0]

    @property
    def height(self) -> Fraction:
        return self.box[3] - self.box[1]


def layout(pop: POPGraph, up: bool = False) -> Drawing:
    """Layered drawing of a planarly ordered graph, one band per factor."""
    factors = elementary_decomposition(pop).factors
    k_bands = len(factors)

    # Crossing lines y=0..K: line k carries the outputs of factor k (equally
    # the inputs of factor k+1), positioned by rank within that line.
    lines: list[tuple[str, ...]] = [factors[0].inputs_ordered]
    lines += [f.outputs_ordered for f in factors]
    pos = [{e: Fraction(i + 1) for i, e in enumerate(line)} for line in lines]
    width = Fraction(max(len(line) for line in lines) + 1)

    band_of: dict[str, int] = {}
    for k, f in enumerate(factors, 1):
        for v in f.graph.internal_vertices:
            band_of[v] = k

    vertices: dict[str, Point] = {}
    for k, f in enumerate(factors, 1):
        for v in sorted(f.graph.internal_vertices):
            xs = [pos[k - 1][e.id] for e in f.graph.in_edges(v)]
            xs += [pos[k][e.id] for e in f.graph.out_edges(v)]
            vertices[v] = (Fraction(sum(xs), len(xs)), Fraction(2 * k - 1, 2))

    routes: dict[str, tuple[Point, ...]] = {}
    for eid in pop.order.sequence:
        edge = pop.graph.edge(eid)
        first = 0 if edge.src not in band_of else band_of[edge.src]
        last = k_bands if edge.dst not in band_of else band_of[edge.dst] - 1
        pts: list[Point] = []
        if edge.src in band_of:
            pts.append(vertices[edge.src])
        pts += [(pos[k][eid], Fraction(k)) for k in range(first, last + 1)]
        if edge.dst in band_of:
            pts.append(vertices[edge.dst])
        routes[eid] = tuple(pts)

    d = Drawing(
        flow="down",
        box=(Fraction(0), Fraction(0), width, Fraction(k_bands)),
        bands=tuple((Fraction(k), Fraction(k + 1)) for k in range(k_bands)),
        vertices=vertices,
        routes=routes,
        inputs=pop.inputs_ordered,
        outputs=pop.outputs_ordered,
    )
    return _flip(d) if up else d


def layout_st(pop: POPGraph, up: bool = False) -> Drawing:
    """Drawing of the graph with its boundary gathered into apexes s and t."""
    for name in ("s", "t"):
        if name in pop.graph.vertices:
            raise ReservedVertexName(name)
    d = layout(pop)
    cx = (d.box[0] + d.box[2]) / 2
    s: Point = (cx, d.box[1] - 1)
    t: Point = (cx, d.box[3] + 1)
    routes = dict(d.routes)
    for e in d.inputs:
        routes[e] = (s,) + routes[e]
    for e in d.outputs:
        routes[e] = routes[e] + (t,)
    vertices = dict(d.vertices)
    vertices["s"] = s
    vertices["t"] = t
    d = Drawing(flow="down", box=d.box, bands=d.bands, vertices=vertices,
                routes=routes, inputs=d.inputs, outputs=d.outputs,
                st=True, source="s", sink="t")
    return _flip(d) if up else d


def _flip(d: Drawing) -> Drawing:
    """Mirror the drawing in y, so the flow runs the other way."""
    h = d.box[1] + d.box[3]

    def f(p: Point) -> Point:
        return (p[0], h - p[1])

    return Drawing(
        flow="up" if d.flow == "down" else "down",
        box=d.box,
        bands=tuple(sorted((h - b, h - a) for a, b in d.bands)),
        vertices={v: f(p) for v, p in d.vertices.items()},
        routes={e: tuple(f(p) for p in pts) for e, pts in d.routes.items()},
        inputs=d.inputs, outputs=d.outputs,
        st=d.st, source=d.source, sink=d.sink)


@dataclass(frozen=True)
class DrawingReport:
    ok: bool
    problems: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


def check_drawing(d: Drawing) -> DrawingReport:
    """Exact verification: monotone routes, boundary attachment, no crossings."""
    problems: list[str] = []
    down = d.flow == "down"
    y_in = d.box[1] if down else d.box[3]
    y_out = d.box[3] if down else d.box[1]
    allowed = set(d.vertices.values())

    for e, pts in d.routes.items():
        if len(pts) < 2:
            problems.append(f"route {e}: fewer than two points")
            continue
        for a, b in zip(pts, pts[1:]):
            if (b[1] > a[1]) != down or b[1] == a[1]:
                problems.append(f"route {e}: not monotone in the flow direction")
                break

    for e in d.inputs:
        pts = d.routes[e]
        if d.st:
            if pts[0] != d.vertices[d.source]:
                problems.append(f"input {e}: does not start at the source apex")
            elif len(pts) < 2 or pts[1][1] != y_in:
                problems.append(f"input {e}: does not meet the input boundary")
        elif pts[0][1] != y_in:
            problems.append(f"input {e}: does not start on the input boundary")
    for e in d.outputs:
        pts = d.routes[e]
        if d.st:
            if pts[-1] != d.vertices[d.sink]:
                problems.append(f"output {e}: does not end at the sink apex")
            elif len(pts) < 2 or pts[-2][1] != y_out:
                problems.append(f"output {e}: does not meet the output boundary")
        elif pts[-1][1] != y_out:
            problems.append(f"output {e}: does not end on the output boundary")

    ids = list(d.routes)
    for i, e1 in enumerate(ids):
        segs1 = list(zip(d.routes[e1], d.routes[e1][1:]))
        for e2 in ids[i + 1:]:
            for a1, b1 in segs1:
                for a2, b2 in zip(d.routes[e2], d.routes[e2][1:]):
                    hit = _segment_meet(a1, b1, a2, b2)
                    if hit is None:
                        continue
                    kind, p = hit
                    if (kind == "point" and p in allowed
                            and p in (a1, b1) and p in (a2, b2)):
                        continue
                    problems.append(
                        f"routes {e1} and {e2} cross near "
                        f"({float(p[0]):.3f}, {float(p[1]):.3f})")

    return DrawingReport(not problems, tuple(problems))


def _segment_meet(p1: Point, p2: Point, p3: Point, p4: Point):
    """Exact intersection of two closed segments.

    None when disjoint; ("point", P) for a single shared point; for
    collinear overlap beyond a point, ("overlap", P) with P in the overlap.
    """
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (p4[0] - p3[0], p4[1] - p3[1])
    w = (p3[0] - p1[0], p3[1] - p1[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if denom == 0:
        if w[0] * d1[1] - w[1] * d1[0] != 0:
            return None
        # collinear: compare parameter intervals along d1
        dot = lambda u, v: u[0] * v[0] + u[1] * v[1]
        l2 = dot(d1, d1)
        if l2 == 0:
            return None
        t3 = Fraction(dot(w, d1), l2)
        t4 = Fraction(dot((p4[0] - p1[0], p4[1] - p1[1]), d1), l2)
        lo, hi = min(t3, t4), max(t3, t4)
        lo, hi = max(lo, Fraction(0)), min(hi, Fraction(1))
        if lo > hi:
            return None
        mid = (lo + hi) / 2
        p = (p1[0] + mid * d1[0], p1[1] + mid * d1[1])
        return ("point", p) if lo == hi else ("overlap", p)
    t = Fraction(w[0] * d2[1] - w[1] * d2[0], denom)
    u = Fraction(w[0] * d1[1] - w[1] * d1[0], denom)
    if 0 <= t <= 1 and 0 <= u <= 1:
        return ("point", (p1[0] + t * d1[0], p1[1] + t * d1[1]))
    return None


def read_back(d: Drawing, g: ProgressiveGraph) -> PAGraph:
    """Recover vertex orders and anchors from coordinates alone.

    Only point positions are consulted (never the planar order), so agreement
    with the order the drawing came from is evidence, not tautology.
    """
    down = d.flow == "down"
    y_in = d.box[1] if down else d.box[3]
    y_out = d.box[3] if down else d.box[1]

    def boundary_x(e: str, start: bool, y: Fraction) -> Fraction:
        pts = d.routes[e]
        if d.st:
            pts = pts[1:] if start else pts[:-1]
        p = pts[0] if start else pts[-1]
        assert p[1] == y, f"edge {e} is not attached to the boundary"
        return p[0]

    anchor = Anchor(
        tuple(sorted(d.inputs, key=lambda e: boundary_x(e, True, y_in))),
        tuple(sorted(d.outputs, key=lambda e: boundary_x(e, False, y_out))))

    vertex_orders: dict[str, VertexOrder] = {}
    apexes = {d.source, d.sink}
    for v, p in d.vertices.items():
        if v in apexes:
            continue
        incoming = [(d.routes[e][-2][0], e) for e in d.routes
                    if d.routes[e][-1] == p]
        outgoing = [(d.routes[e][1][0], e) for e in d.routes
                    if d.routes[e][0] == p]
        vertex_orders[v] = VertexOrder(
            tuple(e for _, e in sorted(incoming)),
            tuple(e for _, e in sorted(outgoing)))
    return PAGraph(g, vertex_orders, anchor)


def _fmt(x: Fraction, scale: float = 1.0, off: float = 0.0) -> str:
    return f"{float(x) * scale + off:.2f}"


def render_svg(d: Drawing) -> str:
    """Self-contained SVG: one path per edge, arrowheads at route midpoints,
    filled circles for vertices, a dashed frame around the banded region."""
    s = 48.0
    pad = 30.0
    ys = [p[1] for pts in d.routes.values() for p in pts]
    ys += [d.box[1], d.box[3]]
    y0 = min(ys)
    w = float(d.box[2] - d.box[0]) * s + 2 * pad
    h = float(max(ys) - y0) * s + 2 * pad

    def px(p: Point) -> tuple[float, float]:
        return (float(p[0] - d.box[0]) * s + pad, float(p[1] - y0) * s + pad)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" '
           f'height="{h:.0f}" viewBox="0 0 {w:.0f} {h:.0f}">']
    bx, by = px((d.box[0], d.box[1]))
    out.append(f'<rect x="{bx:.2f}" y="{by:.2f}" '
               f'width="{float(d.width) * s:.2f}" height="{float(d.height) * s:.2f}" '
               f'fill="none" stroke="#999" stroke-dasharray="7 5"/>')
    for e, pts in d.routes.items():
        coords = " L ".join(f"{x:.2f} {y:.2f}" for x, y in map(px, pts))
        out.append(f'<path d="M {coords}" fill="none" stroke="#000" '
                   f'stroke-width="1.6"/>')
        out.append(_svg_arrow(pts, px))
    for v, p in d.vertices.items():
        x, y = px(p)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4.5" fill="#000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _svg_arrow(pts: tuple[Point, ...], px) -> str:
    i = (len(pts) - 1) // 2
    ax, ay = px(pts[i])
    bx, by = px(pts[i + 1])
    mx, my = (ax + bx) / 2, (ay + by) / 2
    dx, dy = bx - ax, by - ay
    n = (dx * dx + dy * dy) ** 0.5 or 1.0
    dx, dy = dx / n, dy / n
    ln, wd = 8.0, 3.4
    tipx, tipy = mx + dx * ln / 2, my + dy * ln / 2
    bkx, bky = tipx - dx * ln, tipy - dy * ln
    p1 = (bkx - dy * wd, bky + dx * wd)
    p2 = (bkx + dy * wd, bky - dx * wd)
    return (f'<polygon points="{tipx:.2f},{tipy:.2f} {p1[0]:.2f},{p1[1]:.2f} '
            f'{p2[0]:.2f},{p2[1]:.2f}" fill="#000"/>')


def render_tikz(d: Drawing) -> str:
    """TikZ picture with the same content; y is mirrored for TikZ's up axis."""
    out = [r"\begin{tikzpicture}[x=1.1cm,y=1.1cm,yscale=-1]"]
    out.append(rf"\draw[densely dashed, gray] ({_fmt(d.box[0])},{_fmt(d.box[1])}) "
               rf"rectangle ({_fmt(d.box[2])},{_fmt(d.box[3])});")
    for e, pts in d.routes.items():
        path = " -- ".join(f"({_fmt(p[0])},{_fmt(p[1])})" for p in pts)
        out.append(rf"\draw {path};")
        i = (len(pts) - 1) // 2
        a, b = pts[i], pts[i + 1]
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        near = ((a[0] + mid[0]) / 2, (a[1] + mid[1]) / 2)
        out.append(rf"\draw[->] ({_fmt(near[0])},{_fmt(near[1])}) -- "
                   rf"({_fmt(mid[0])},{_fmt(mid[1])});")
    for v, p in d.vertices.items():
        out.append(rf"\filldraw ({_fmt(p[0])},{_fmt(p[1])}) circle (2.2pt);")
    out.append(r"\end{tikzpicture}")
    return "\n".join(out) + "\n"
