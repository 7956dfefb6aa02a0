"""Vertex classification and vertex ideals.

Every vertex of a valid algebra on at least two vertices falls into one of
eight classes, determined by its in/out degrees (both at most 2).  Sinks and
branching vertices additionally carry a vertex-ideal status whose vanishing
is what the determiner criteria consume: the ideal is zero precisely when a
forking vertex upstream reaches the vertex through a relation-free directed
path (with extra conditions at forks and crossings).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .algebra import BoundQuiverAlgebra
from .treewalk import is_linear, restricted_ideal_nonzero, walk_between


class VertexClass(Enum):
    SOURCE_LEAF = "source leaf"          # no in, one out
    SINK_LEAF = "sink leaf"              # one in, no out
    FORK_SOURCE = "fork source"          # no in, two out
    MEET_SINK = "meet sink"              # two in, no out
    FLOW_THROUGH = "flow-through"        # one in, one out
    MEET_FLOW = "meet flow"              # two in, one out
    FORK_FLOW = "fork flow"              # one in, two out
    CROSSING = "crossing"                # two in, two out


_BY_DEGREES = {
    (0, 1): VertexClass.SOURCE_LEAF,
    (1, 0): VertexClass.SINK_LEAF,
    (0, 2): VertexClass.FORK_SOURCE,
    (2, 0): VertexClass.MEET_SINK,
    (1, 1): VertexClass.FLOW_THROUGH,
    (2, 1): VertexClass.MEET_FLOW,
    (1, 2): VertexClass.FORK_FLOW,
    (2, 2): VertexClass.CROSSING,
}

#: Classes that carry a vertex ideal.
IDEAL_BEARING = frozenset({
    VertexClass.SINK_LEAF, VertexClass.MEET_SINK, VertexClass.MEET_FLOW,
    VertexClass.FORK_FLOW, VertexClass.CROSSING,
})


def classify_vertex(algebra: BoundQuiverAlgebra, v: int) -> VertexClass:
    q = algebra.quiver
    if not q.has_vertex(v):
        raise ValueError(f"unknown vertex {v}")
    key = (q.in_degree(v), q.out_degree(v))
    cls = _BY_DEGREES.get(key)
    if cls is None:
        if key == (0, 0):
            raise ValueError(
                f"vertex {v} is isolated; classification needs at least two vertices")
        raise ValueError(f"vertex {v} has degrees {key}, not a valid vertex shape")
    return cls


class IdealKind(Enum):
    ZERO = "zero"
    WHOLE_ALGEBRA = "whole algebra"          # relation-free with this unique sink
    DEFINING_IDEAL = "defining ideal"        # the full relation ideal
    NEIGHBOURHOOD_IDEAL = "neighbourhood ideal"  # restriction to the branching star


@dataclass(frozen=True)
class VertexIdealStatus:
    vertex: int
    kind: IdealKind
    witness: int | None = None  # forking vertex certifying a zero ideal

    @property
    def is_zero(self) -> bool:
        return self.kind is IdealKind.ZERO

    @property
    def is_nonzero(self) -> bool:
        return self.kind is not IdealKind.ZERO


def _linear_relation_free(algebra: BoundQuiverAlgebra, j: int, i: int) -> bool:
    walk = walk_between(algebra, j, i)
    return is_linear(walk) and not restricted_ideal_nonzero(algebra, walk)


def _fork_witness(algebra: BoundQuiverAlgebra, i: int,
                  blocked_targets: tuple[int, ...] = ()) -> int | None:
    """Smallest vertex j with two outgoing arrows and a relation-free directed
    path to i; when blocked_targets are given, the directed paths from j to
    each of them must additionally hit a relation."""
    q = algebra.quiver
    for j in q.vertices:
        if q.out_degree(j) != 2:
            continue
        if not _linear_relation_free(algebra, j, i):
            continue
        ok = True
        for t in blocked_targets:
            walk = walk_between(algebra, j, t)
            if not (is_linear(walk) and restricted_ideal_nonzero(algebra, walk)):
                ok = False
                break
        if ok:
            return j
    return None


def _unique_sink(algebra: BoundQuiverAlgebra) -> int | None:
    sinks = algebra.quiver.sinks()
    return sinks[0] if len(sinks) == 1 else None


def vertex_ideal(algebra: BoundQuiverAlgebra, v: int) -> VertexIdealStatus:
    """Vertex-ideal status for sink, meet-flow, fork-flow and crossing
    vertices.  Raises for classes that carry no ideal."""
    cls = classify_vertex(algebra, v)
    if cls not in IDEAL_BEARING:
        raise ValueError(f"vertex {v} ({cls.value}) carries no vertex ideal")

    if cls is VertexClass.MEET_FLOW:
        return VertexIdealStatus(v, IdealKind.ZERO)

    if cls in (VertexClass.SINK_LEAF, VertexClass.MEET_SINK):
        w = _fork_witness(algebra, v)
        if w is not None:
            return VertexIdealStatus(v, IdealKind.ZERO, witness=w)
        if algebra.relations.is_empty:
            if _unique_sink(algebra) == v:
                return VertexIdealStatus(v, IdealKind.WHOLE_ALGEBRA)
            # ideal equals the (empty) relation ideal
            return VertexIdealStatus(v, IdealKind.ZERO)
        return VertexIdealStatus(v, IdealKind.DEFINING_IDEAL)

    # fork flow / crossing: the witness must also see relations toward both
    # forward branches
    out_targets = tuple(a.target for a in algebra.quiver.out_arrows(v))
    w = _fork_witness(algebra, v, blocked_targets=out_targets)
    if w is not None:
        return VertexIdealStatus(v, IdealKind.ZERO, witness=w)
    return VertexIdealStatus(v, IdealKind.NEIGHBOURHOOD_IDEAL)


def fork_source_count(algebra: BoundQuiverAlgebra) -> int:
    """Number of sources with two neighbours (the p of the counting formula)."""
    return sum(1 for v in algebra.quiver.vertices
               if classify_vertex(algebra, v) is VertexClass.FORK_SOURCE)


def nonzero_ideal_count(algebra: BoundQuiverAlgebra) -> int:
    """Number of vertices with a non-zero vertex ideal (the q of the counting
    formula).  Counted per vertex, not per distinct ideal."""
    count = 0
    for v in algebra.quiver.vertices:
        if classify_vertex(algebra, v) in IDEAL_BEARING:
            if vertex_ideal(algebra, v).is_nonzero:
                count += 1
    return count
