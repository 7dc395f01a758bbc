"""3-antimagic injections for graphs with a dominating clique of order >= 3.

Requires ``m >= 3(n-k) - 2 + k(k-1)/2``. Labels are drawn from three pools:

* ``l2 = {1, 4, 7, ...}``, one label per outside vertex, given to its anchor
  edge in order of running sums so outside sums end pairwise >= 3 apart;
* ``l3``, the top ``k(k-1)/2`` labels, given lexicographically to the clique
  edges after sorting K by running sum;
* ``l1``, everything else, for the remaining edges.

Two repair passes follow. The first walks ``u_1 .. u_{k-2}`` (sorted clique
order) and, whenever ``u_i`` collides with an outside sum, swaps the
consecutive labels of ``u_i u_k`` and ``u_{i+1} u_{i+2}``. The second, if
``u_{k-1}`` or ``u_k`` is still in a conflict, moves ``u_{k-1} u_k`` to the
smallest of ``m+1, m+2, m+3`` that leaves every sum distinct. For ``k = 3``
the first pass is replaced by shifting ``u_1 u_3`` up to ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cliques import (
    CliqueLike,
    PreconditionError,
    PreconditionReport,
    anchor_edges,
    check_preconditions,
    dominating_clique,
    edge_bound_theorem5,
    outside_vertices,
)
from .graph import Edge, Graph
from .labelling import (
    ConstructionError,
    EdgeLabelling,
    conflicts,
    is_c_antimagic_labelling,
    vertex_sums,
)

OVERFLOW = 3


def _e(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgePartition3:
    e1: tuple[Edge, ...]
    e2: tuple[Edge, ...]
    e3: tuple[Edge, ...]


@dataclass(frozen=True)
class LabelPools:
    l1: tuple[int, ...]
    l2: tuple[int, ...]
    l3: tuple[int, ...]


def build_label_pools(n: int, k: int, m: int) -> LabelPools:
    if k < 3 or n < k:
        raise PreconditionError(f"need n >= k >= 3, got n={n}, k={k}")
    bound = edge_bound_theorem5(n, k)
    if m < bound:
        raise PreconditionError(f"m={m} below 3(n-k)-2+k(k-1)/2={bound}; pools would overlap")
    l2 = tuple(range(1, 3 * (n - k), 3))
    l3 = tuple(range(m - k * (k - 1) // 2 + 1, m + 1))
    taken = set(l2) | set(l3)
    l1 = tuple(x for x in range(1, m + 1) if x not in taken)
    return LabelPools(l1, l2, l3)


def partition_edges_t5(g: Graph, kq: CliqueLike) -> EdgePartition3:
    kq = dominating_clique(g, kq)
    inside = set(kq.members)
    e2 = set(anchor_edges(g, kq).values())
    e1, e3 = [], []
    for e in g.edges:
        if e[0] in inside and e[1] in inside:
            e3.append(e)
        elif e not in e2:
            e1.append(e)
    return EdgePartition3(tuple(e1), tuple(sorted(e2)), tuple(e3))


@dataclass
class Theorem5Steps:
    """State after the three labelling steps."""

    labels: dict[Edge, int]
    outside_order: list[int]
    clique_order: list[int]
    sums: list[int]
    partition: EdgePartition3
    pools: LabelPools

    @property
    def m(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class Swap:
    i: int  # 1-based position in the sorted clique order
    raised: Edge  # u_i u_k, label goes up by one
    lowered: Edge  # u_{i+1} u_{i+2}, label goes down by one
    raised_label: int  # label of ``raised`` after the swap

    def deltas(self) -> dict[int, int]:
        d: dict[int, int] = {}
        for v in self.raised:
            d[v] = d.get(v, 0) + 1
        for v in self.lowered:
            d[v] = d.get(v, 0) - 1
        return d


@dataclass
class PostProcessTrace:
    sigma_tilde: list[int]
    swaps: list[Swap] = field(default_factory=list)
    k3_shift: bool = False
    relabelled: bool = False
    final_uk1uk_label: int = 0  # m when the last clique edge was not moved
    lambda1: int | None = None
    mu1: int | None = None

    def to_lines(self) -> list[str]:
        lines = [
            f"swap {s.i} {s.raised[0]} {s.raised[1]} {s.lowered[0]} {s.lowered[1]}"
            for s in self.swaps
        ]
        if self.k3_shift:
            lines.append("k3-shift")
        lines.append(f"last-clique-label {self.final_uk1uk_label}")
        if self.relabelled:
            lines.append(f"lambda1 {self.lambda1}")
            lines.append(f"mu1 {self.mu1}")
        return lines


@dataclass
class Theorem5Result:
    labelling: EdgeLabelling
    c_used: int
    trace: PostProcessTrace
    steps: Theorem5Steps
    sums: list[int]
    preconditions: PreconditionReport


def _sorted_by_sum(vertices: list[int], sums: list[int]) -> list[int]:
    return sorted(vertices, key=lambda v: (sums[v], v))


def label_steps_t5(g: Graph, kq: CliqueLike) -> Theorem5Steps:
    kq = dominating_clique(g, kq)
    report = check_preconditions(g, kq)
    if not report.theorem5_ok:
        raise PreconditionError("; ".join(r for r in report.reasons if r.startswith("theorem5")))
    part = partition_edges_t5(g, kq)
    pools = build_label_pools(g.n, kq.k, g.m)

    labels = dict(zip(part.e1, pools.l1))
    partial = vertex_sums(g, labels, partial=True)
    anchors = anchor_edges(g, kq)
    outside_order = _sorted_by_sum(outside_vertices(g, kq), partial)
    for v, lab in zip(outside_order, pools.l2):
        labels[anchors[v]] = lab

    partial = vertex_sums(g, labels, partial=True)
    clique_order = _sorted_by_sum(list(kq.members), partial)
    pairs = [
        _e(u, w) for i, u in enumerate(clique_order) for w in clique_order[i + 1:]
    ]
    labels.update(zip(pairs, pools.l3))
    if len(labels) != g.m:
        raise ConstructionError("steps left edges unlabelled")
    return Theorem5Steps(
        labels=labels,
        outside_order=outside_order,
        clique_order=clique_order,
        sums=vertex_sums(g, labels),
        partition=part,
        pools=pools,
    )


def post_process_1(g: Graph, steps: Theorem5Steps) -> tuple[dict[Edge, int], PostProcessTrace]:
    """Single increasing pass over ``u_1 .. u_{k-2}``, swapping on outside collisions."""
    order = steps.clique_order
    k = len(order)
    if k < 4:
        raise ValueError("the swap pass needs a clique of order >= 4")
    labels = dict(steps.labels)
    sums = list(steps.sums)
    trace = PostProcessTrace(sigma_tilde=list(steps.sums))
    outside_sums = {sums[v] for v in steps.outside_order}
    uk = order[-1]
    for i in range(k - 2):
        ui = order[i]
        if sums[ui] not in outside_sums:
            continue
        raised, lowered = _e(ui, uk), _e(order[i + 1], order[i + 2])
        if labels[lowered] != labels[raised] + 1:
            raise ConstructionError(f"swap edges {raised}, {lowered} are not consecutive")
        labels[raised], labels[lowered] = labels[lowered], labels[raised]
        swap = Swap(i + 1, raised, lowered, labels[raised])
        for v, d in swap.deltas().items():
            sums[v] += d
        trace.swaps.append(swap)
    return labels, trace


def post_process_2(
    g: Graph,
    labels: dict[Edge, int],
    steps: Theorem5Steps,
    trace: PostProcessTrace,
    force: bool = False,
) -> tuple[dict[Edge, int], int]:
    """Move ``u_{k-1} u_k`` above m if either endpoint is still in a conflict.

    ``force`` skips the conflict test (the k = 3 shift has already vacated m).
    Returns the final labels and the slack actually used.
    """
    m = g.m
    a, b = steps.clique_order[-2], steps.clique_order[-1]
    last = _e(a, b)
    labels = dict(labels)
    clashing = any(a in p or b in p for p in conflicts(g, labels))
    if not (force or clashing):
        trace.final_uk1uk_label = m
        c_used = max(0, max(labels.values(), default=0) - m)
        return labels, c_used

    trace.relabelled = True
    for cand in range(m + 1, m + OVERFLOW + 1):
        labels[last] = cand
        if cand == m + 1:
            s = vertex_sums(g, labels)
            trace.lambda1, trace.mu1 = s[a], s[b]
        if not conflicts(g, labels):
            trace.final_uk1uk_label = cand
            return labels, cand - m
    raise ConstructionError(f"no label in m+1..m+{OVERFLOW} clears the conflicts at {last}")


def label_theorem5(g: Graph, kq: CliqueLike) -> Theorem5Result:
    kq = dominating_clique(g, kq)
    report = check_preconditions(g, kq)
    steps = label_steps_t5(g, kq)
    m = g.m
    order = steps.clique_order

    if kq.k >= 4:
        labels, trace = post_process_1(g, steps)
        labels, c_used = post_process_2(g, labels, steps, trace)
    else:
        labels = dict(steps.labels)
        trace = PostProcessTrace(sigma_tilde=list(steps.sums))
        u1, u2, u3 = order
        outside_sums = {steps.sums[v] for v in steps.outside_order}
        force = False
        if steps.sums[u1] in outside_sums:
            labels[_e(u1, u3)] = m
            labels[_e(u2, u3)] = m + 1  # provisional, settled below
            trace.k3_shift = True
            force = True
        labels, c_used = post_process_2(g, labels, steps, trace, force=force)

    f = EdgeLabelling(labels, slack=c_used)
    if not is_c_antimagic_labelling(g, f, c_used) or not 0 <= c_used <= OVERFLOW:
        raise ConstructionError(f"final labelling fails verification (C={c_used})")
    if sum(lab > m for lab in labels.values()) > 1:
        raise ConstructionError("more than one label exceeds m")
    return Theorem5Result(
        labelling=f,
        c_used=c_used,
        trace=trace,
        steps=steps,
        sums=vertex_sums(g, labels),
        preconditions=report,
    )
