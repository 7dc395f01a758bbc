"""Antimagic labelling of graphs with a dominating clique of order >= 4.

Edges are split into four classes and labelled class by class with
consecutive label ranges:

* ``e1``: both ends outside the clique K.
* ``e2``: K-to-outside edges not in ``e3``; labelled along maximal alternating
  paths, taking the largest free label when stepping out of K and the
  smallest when stepping into K.
* ``e3``: one K-edge per outside vertex; labelled in order of the outside
  vertices' running sums.
* ``e4``: the clique edges; labelled lexicographically after sorting K by
  running sum.

When every outside vertex has degree at most the minimum clique degree, each
clique sum ends above each outside sum, so all sums are distinct.

Arbitrary choices are pinned: ``e1`` takes labels in ascending edge order,
each outside vertex anchors to its lowest-numbered clique neighbour, paths
start or restart at the lowest-numbered eligible vertex and leave along the
edge to the lowest-numbered unlabelled neighbour, and sort ties go to the
smaller vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cliques import (
    CliqueLike,
    DominatingClique,
    PreconditionError,
    PreconditionReport,
    anchor_edges,
    check_preconditions,
    dominating_clique,
    outside_vertices,
)
from .graph import Edge, Graph
from .labelling import (
    ConstructionError,
    EdgeLabelling,
    is_c_antimagic_labelling,
    vertex_sums,
)


@dataclass(frozen=True)
class EdgePartition4:
    e1: tuple[Edge, ...]
    e2: tuple[Edge, ...]
    e3: tuple[Edge, ...]
    e4: tuple[Edge, ...]


@dataclass(frozen=True)
class AlternationStep:
    """One labelled ``e2`` edge.

    ``kind`` is ``start`` (first edge), ``extend`` (continues the current path)
    or ``restart`` (new path, same side). ``source`` is the vertex the edge is
    taken from, ``target`` where the path continues.
    """

    kind: str
    source: int
    target: int
    label: int
    from_clique: bool

    def to_line(self) -> str:
        side = "K" if self.from_clique else "out"
        return f"{self.kind} {side} {self.source} {self.target} {self.label}"


@dataclass
class AlternationState:
    e1_size: int
    e2_size: int
    gamma_small: int = 0
    gamma_large: int = 0
    current_endpoint: int | None = None

    @property
    def parity(self) -> int:
        return self.gamma_small + self.gamma_large

    @property
    def next_small(self) -> int:
        return self.e1_size + self.gamma_small + 1

    @property
    def next_large(self) -> int:
        return self.e1_size + self.e2_size - self.gamma_large


@dataclass(frozen=True)
class GammaCertificate:
    """Gap between the smallest clique sum and the largest outside sum.

    With no outside vertices ``max_outside_sum`` is 0.
    """

    min_clique_sum: int
    max_outside_sum: int

    @property
    def gamma_value(self) -> int:
        return self.min_clique_sum - self.max_outside_sum


@dataclass
class Theorem4Result:
    labelling: EdgeLabelling
    sums: list[int]
    certificate: GammaCertificate
    partition: EdgePartition4
    trace: list[AlternationStep]
    outside_order: list[int]
    clique_order: list[int]
    preconditions: PreconditionReport
    antimagic: bool = field(default=False)


def partition_edges_t4(g: Graph, kq: CliqueLike) -> EdgePartition4:
    kq = dominating_clique(g, kq)
    inside = set(kq.members)
    e3 = set(anchor_edges(g, kq).values())
    e1, e2, e4 = [], [], []
    for e in g.edges:
        u, v = e
        if u in inside and v in inside:
            e4.append(e)
        elif u not in inside and v not in inside:
            e1.append(e)
        elif e not in e3:
            e2.append(e)
    return EdgePartition4(tuple(e1), tuple(e2), tuple(sorted(e3)), tuple(e4))


def label_e2_alternating(
    g: Graph,
    kq: CliqueLike,
    partition: EdgePartition4,
    labels_used_so_far: int | None = None,
) -> tuple[dict[Edge, int], list[AlternationStep]]:
    """Label ``partition.e2`` along maximal alternating paths.

    ``labels_used_so_far`` defaults to ``len(partition.e1)``; the labels used
    are exactly ``labels_used_so_far + 1 .. labels_used_so_far + len(e2)``.
    """
    offset = len(partition.e1) if labels_used_so_far is None else labels_used_so_far
    inside = set(kq)
    nbrs: dict[int, list[int]] = {}
    for u, v in partition.e2:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    for lst in nbrs.values():
        lst.sort(reverse=True)  # pop() yields the smallest
    clique_side = sorted(v for v in nbrs if v in inside)
    outer_side = sorted(v for v in nbrs if v not in inside)

    state = AlternationState(offset, len(partition.e2))
    labels: dict[Edge, int] = {}
    trace: list[AlternationStep] = []

    def next_free(x: int) -> int | None:
        lst = nbrs[x]
        while lst and (min(x, lst[-1]), max(x, lst[-1])) in labels:
            lst.pop()
        return lst[-1] if lst else None

    while len(labels) < len(partition.e2):
        from_clique = state.parity % 2 == 0
        x = state.current_endpoint
        y = next_free(x) if x is not None else None
        if y is not None:
            kind = "extend"
        else:
            kind = "start" if not labels else "restart"
            side = clique_side if from_clique else outer_side
            x = next((w for w in side if next_free(w) is not None), None)
            if x is None:
                raise ConstructionError("no eligible vertex while e2 edges remain")
            y = next_free(x)
        if from_clique:
            label = state.next_large
            state.gamma_large += 1
        else:
            label = state.next_small
            state.gamma_small += 1
        labels[(min(x, y), max(x, y))] = label
        trace.append(AlternationStep(kind, x, y, label, from_clique))
        state.current_endpoint = y

    if state.gamma_small + state.gamma_large != len(partition.e2) or (
        partition.e2 and state.next_small != state.next_large + 1
    ):
        raise ConstructionError("e2 label pool not exhausted exactly")
    return labels, trace


def _sorted_by_sum(vertices: list[int], sums: list[int]) -> list[int]:
    return sorted(vertices, key=lambda v: (sums[v], v))


def label_theorem4(g: Graph, kq: CliqueLike, strict: bool = False) -> Theorem4Result:
    """Run the four labelling steps and verify the result.

    With ``strict=True`` the degree hypothesis (and ``|K| >= 4``) must hold.
    Otherwise the construction runs on any dominating clique and the result's
    ``antimagic`` flag reports whether it happened to succeed. A failure
    under the hypothesis raises ConstructionError.
    """
    kq = dominating_clique(g, kq)
    report = check_preconditions(g, kq)
    if strict and not report.theorem4_ok:
        raise PreconditionError("; ".join(r for r in report.reasons if r.startswith("theorem4")))

    part = partition_edges_t4(g, kq)
    labels: dict[Edge, int] = {}
    for i, e in enumerate(part.e1, start=1):
        labels[e] = i

    e2_labels, trace = label_e2_alternating(g, kq, part)
    labels.update(e2_labels)

    next_label = len(part.e1) + len(part.e2) + 1
    partial = vertex_sums(g, labels, partial=True)
    outside = outside_vertices(g, kq)
    anchors = anchor_edges(g, kq)
    outside_order = _sorted_by_sum(outside, partial)
    for v in outside_order:
        labels[anchors[v]] = next_label
        next_label += 1

    partial = vertex_sums(g, labels, partial=True)
    clique_order = _sorted_by_sum(list(kq.members), partial)
    for i, u in enumerate(clique_order):
        for w in clique_order[i + 1:]:
            labels[(min(u, w), max(u, w))] = next_label
            next_label += 1

    if next_label != g.m + 1 or len(labels) != g.m:
        raise ConstructionError("labels do not form a bijection onto 1..m")

    sums = vertex_sums(g, labels)
    cert = GammaCertificate(
        min_clique_sum=min(sums[u] for u in kq),
        max_outside_sum=max((sums[v] for v in outside), default=0),
    )
    f = EdgeLabelling(labels, slack=0)
    ok = is_c_antimagic_labelling(g, f, 0)
    if report.theorem4_ok and not (ok and cert.gamma_value > 0):
        raise ConstructionError(
            f"hypothesis holds but antimagic={ok}, gamma={cert.gamma_value}"
        )
    return Theorem4Result(
        labelling=f,
        sums=sums,
        certificate=cert,
        partition=part,
        trace=trace,
        outside_order=outside_order,
        clique_order=clique_order,
        preconditions=report,
        antimagic=ok,
    )
