"""Exception types shared across the package.

Every failure the library can report deliberately is a ``PpgError``; anything
else escaping the public API is a bug.  The CLI maps these onto exit codes
(see cli.py), which is why the taxonomy is flat and explicit.
"""

from __future__ import annotations


class PpgError(Exception):
    """Base class for all deliberate failures raised by this package."""


class DuplicateId(PpgError):
    def __init__(self, kind: str, name: str):
        super().__init__(f"duplicate {kind} id {name!r}")
        self.kind = kind
        self.name = name


class UnknownEdge(PpgError):
    def __init__(self, name: str):
        super().__init__(f"unknown edge id {name!r}")
        self.name = name


class UnknownVertex(PpgError):
    def __init__(self, name: str):
        super().__init__(f"unknown vertex id {name!r}")
        self.name = name


class CycleDetected(PpgError):
    """The directed graph is not acyclic.  ``cycle`` is a witness vertex loop."""

    def __init__(self, cycle: tuple[str, ...]):
        super().__init__("directed cycle: " + " -> ".join(cycle))
        self.cycle = cycle


class BadBoundaryDegree(PpgError):
    """A source or sink vertex has degree other than one."""

    def __init__(self, vertex: str, kind: str, degree: int):
        super().__init__(f"{kind} vertex {vertex!r} has degree {degree}, expected 1")
        self.vertex = vertex
        self.kind = kind
        self.degree = degree


class IsolatedVertex(PpgError):
    def __init__(self, vertex: str):
        super().__init__(f"vertex {vertex!r} has no incident edges")
        self.vertex = vertex


class ReservedVertexName(PpgError):
    """A fresh vertex name required by a construction is already taken."""

    def __init__(self, name: str):
        super().__init__(f"vertex id {name!r} is reserved by this construction")
        self.name = name


class NotAPermutation(PpgError):
    """A sequence that must list each edge exactly once does not."""

    def __init__(self, missing: tuple[str, ...], extra: tuple[str, ...],
                 duplicated: tuple[str, ...]):
        parts = []
        if missing:
            parts.append("missing " + " ".join(missing))
        if extra:
            parts.append("extra " + " ".join(extra))
        if duplicated:
            parts.append("duplicated " + " ".join(duplicated))
        super().__init__("not a permutation of the edge set: " + "; ".join(parts))
        self.missing = missing
        self.extra = extra
        self.duplicated = duplicated


class InvalidPlanarOrder(PpgError):
    """A total order on the edges fails one of the two planar-order axioms.

    ``extension_violations`` lists pairs (a, b) where a reaches b but the
    order puts b first (the order fails to extend edge precedence).
    ``betweenness_violations`` lists triples (a, b, c), increasing in the
    order, where a reaches c but b is reachability-unrelated to both, i.e.
    an unrelated edge sits between the endpoints of a precedence pair.
    All violations are enumerated, not just the first.
    """

    def __init__(self, extension_violations, betweenness_violations):
        self.extension_violations = tuple(extension_violations)
        self.betweenness_violations = tuple(betweenness_violations)
        bits = []
        for a, b in self.extension_violations:
            bits.append(f"{b} precedes {a} although {a} reaches {b}")
        for a, b, c in self.betweenness_violations:
            bits.append(f"{b} sits between {a} and {c} but relates to neither")
        super().__init__("not a planar order: " + "; ".join(bits))


class NotConjugate(PpgError):
    def __init__(self, problems: tuple[str, ...]):
        super().__init__("not a conjugate order: " + "; ".join(problems))
        self.problems = problems


class ArityMismatch(PpgError):
    """Composition requires output arity of the first factor to equal input
    arity of the second."""

    def __init__(self, outputs: int, inputs: int):
        super().__init__(f"cannot glue {outputs} outputs onto {inputs} inputs")
        self.outputs = outputs
        self.inputs = inputs


class NoInternalVertex(PpgError):
    def __init__(self):
        super().__init__("graph has no internal vertex to split off")


class NoConsistentOrder(PpgError):
    """Synthesis failed: no planar order realizes the given vertex orders and
    boundary anchors.  ``witnesses`` are human-readable conflict reports."""

    def __init__(self, witnesses: tuple[str, ...]):
        super().__init__("no consistent planar order: " + "; ".join(witnesses))
        self.witnesses = witnesses


class TooLarge(PpgError):
    """Enumeration refused: the edge count exceeds the guard bound."""

    def __init__(self, edges: int, bound: int):
        super().__init__(
            f"{edges} edges exceeds the enumeration bound {bound}; force to override")
        self.edges = edges
        self.bound = bound


class ParseError(PpgError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class UsageError(PpgError):
    """Command-line usage problem (bad flags, wrong arity of arguments)."""
