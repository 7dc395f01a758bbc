"""Seeded instance families for the labellers.

All randomness comes from ``random.Random(seed)`` (Mersenne Twister), used
only through ``random()`` and ``randrange()``; both are stable across
platforms and Python versions, so a seed pins an instance byte for byte.

Repair for ``gen_precondition_instance``:

* ``theorem4``: while some outside vertex has degree above the minimum
  clique degree, drop its outside-to-outside edge to its highest-numbered
  such neighbour.
* ``theorem5``: while ``m`` is below the edge bound, add a random missing
  clique-to-outside edge, then (once those run out) a random missing
  outside-to-outside edge.

Each edge modification counts as one attempt; more than ``MAX_REPAIRS``
raises GenerationError.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .cliques import (
    DominatingClique,
    check_preconditions,
    edge_bound_theorem5,
    verify_dominating_clique,
)
from .graph import Edge, Graph
from .theorem5 import label_theorem5

MAX_REPAIRS = 1000
TARGETS = ("theorem4", "theorem5", "none")


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class BarrusSpec:
    """A/B/C structure: A independent with neighbours only in the clique B,
    every C vertex adjacent to all of B, C-internal edges by ``c_edge_prob``.

    Each A vertex gets one uniformly chosen B neighbour plus every other B
    vertex independently with ``a_edge_prob``.
    """

    a_size: int
    b_size: int
    c_size: int
    a_edge_prob: Fraction | float = 0
    c_edge_prob: Fraction | float = 0
    seed: int = 0


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    k: int
    extra_edge_prob: Fraction | float = 0
    seed: int = 0
    target: str = "theorem4"


def _check_prob(p: Fraction | float, name: str) -> float:
    p = float(p)
    if not 0 <= p <= 1:
        raise GenerationError(f"{name} must lie in [0, 1], got {p}")
    return p


def gen_barrus(spec: BarrusSpec) -> tuple[Graph, DominatingClique]:
    """Vertices are numbered B first, then A, then C; the returned clique is B."""
    if spec.b_size < 1:
        raise GenerationError("b_size must be at least 1")
    if spec.a_size < 0 or spec.c_size < 0:
        raise GenerationError("set sizes must be nonnegative")
    pa = _check_prob(spec.a_edge_prob, "a_edge_prob")
    pc = _check_prob(spec.c_edge_prob, "c_edge_prob")
    rng = random.Random(spec.seed)
    b = list(range(spec.b_size))
    a = list(range(spec.b_size, spec.b_size + spec.a_size))
    c = list(range(spec.b_size + spec.a_size, spec.b_size + spec.a_size + spec.c_size))
    edges: list[Edge] = list(combinations(b, 2))
    for v in a:
        first = rng.randrange(spec.b_size)
        for u in b:
            if u == first or rng.random() < pa:
                edges.append((u, v))
    for v in c:
        edges.extend((u, v) for u in b)
    for v, w in combinations(c, 2):
        if rng.random() < pc:
            edges.append((v, w))
    g = Graph(spec.b_size + spec.a_size + spec.c_size, edges)
    return g, DominatingClique(tuple(b))


def gen_precondition_instance(spec: InstanceSpec) -> tuple[Graph, DominatingClique]:
    """Clique on ``0..k-1``; each outside vertex tied to one random clique vertex;
    every other non-clique pair added with ``extra_edge_prob``; then repaired
    until the target's preconditions hold.
    """
    n, k = spec.n, spec.k
    if not n >= k >= 3:
        raise GenerationError(f"need n >= k >= 3, got n={n}, k={k}")
    if spec.target not in TARGETS:
        raise GenerationError(f"unknown target {spec.target!r}; choose from {TARGETS}")
    if spec.target == "theorem4" and k < 4:
        raise GenerationError("theorem4 instances need k >= 4")
    p = _check_prob(spec.extra_edge_prob, "extra_edge_prob")
    rng = random.Random(spec.seed)
    clique = list(range(k))
    outside = list(range(k, n))

    edges: set[Edge] = set(combinations(clique, 2))
    for v in outside:
        edges.add((rng.randrange(k), v))
    for u in clique:
        for v in outside:
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    for v, w in combinations(outside, 2):
        if rng.random() < p:
            edges.add((v, w))

    if spec.target == "theorem4":
        _repair_theorem4(n, k, edges)
    elif spec.target == "theorem5":
        _repair_theorem5(n, k, edges, rng)

    g = Graph(n, edges)
    kq = DominatingClique(tuple(clique))
    if not verify_dominating_clique(g, clique):
        raise GenerationError("generated clique does not dominate")
    report = check_preconditions(g, kq)
    if spec.target == "theorem4" and not report.theorem4_ok:
        raise GenerationError("; ".join(report.reasons))
    if spec.target == "theorem5" and not report.theorem5_ok:
        raise GenerationError("; ".join(report.reasons))
    return g, kq


def _degrees(n: int, edges: set[Edge]) -> list[int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def _repair_theorem4(n: int, k: int, edges: set[Edge]) -> None:
    for _ in range(MAX_REPAIRS + 1):
        deg = _degrees(n, edges)
        alpha = min(deg[:k])
        heavy = [v for v in range(k, n) if deg[v] > alpha]
        if not heavy:
            return
        v = heavy[0]
        outer = [w for w in range(k, n) if (min(v, w), max(v, w)) in edges]
        if not outer:
            raise GenerationError(f"vertex {v} exceeds alpha with no outside edge to drop")
        w = outer[-1]
        edges.discard((min(v, w), max(v, w)))
    raise GenerationError(f"theorem4 repair did not converge in {MAX_REPAIRS} steps")


def _repair_theorem5(n: int, k: int, edges: set[Edge], rng: random.Random) -> None:
    bound = edge_bound_theorem5(n, k)
    if bound > n * (n - 1) // 2:
        raise GenerationError(f"edge bound {bound} exceeds the complete graph on {n} vertices")
    cross = [(u, v) for u in range(k) for v in range(k, n) if (u, v) not in edges]
    outer = [e for e in combinations(range(k, n), 2) if e not in edges]
    steps = 0
    while len(edges) < bound:
        steps += 1
        if steps > MAX_REPAIRS:
            raise GenerationError(f"theorem5 repair did not converge in {MAX_REPAIRS} steps")
        pool = cross if cross else outer
        if not pool:
            raise GenerationError("no edges left to add")
        edges.add(pool.pop(rng.randrange(len(pool))))


def find_conflict_instances(
    want_swaps: int = 20,
    want_relabels: int = 5,
    n: int = 15,
    ks: tuple[int, ...] = (4, 5, 6),
    probs: tuple[float, ...] = (0.4, 0.6),
    max_seeds: int = 20000,
) -> list[tuple[InstanceSpec, Graph, DominatingClique]]:
    """Scan seeds for 3-antimagic instances that exercise the repair passes.

    Seed ``s`` uses ``k = ks[s % len(ks)]`` and density
    ``probs[(s // len(ks)) % len(probs)]``. An instance is kept when the swap
    pass fires or the last clique edge is moved above m; scanning stops once
    ``want_swaps`` of the first kind and ``want_relabels`` of the second
    are collected.
    """
    found: list[tuple[InstanceSpec, Graph, DominatingClique]] = []
    swaps = relabels = 0
    for seed in range(max_seeds):
        if swaps >= want_swaps and relabels >= want_relabels:
            return found
        spec = InstanceSpec(
            n, ks[seed % len(ks)], probs[(seed // len(ks)) % len(probs)], seed, "theorem5"
        )
        g, kq = gen_precondition_instance(spec)
        trace = label_theorem5(g, kq).trace
        if trace.swaps or trace.relabelled:
            found.append((spec, g, kq))
            swaps += bool(trace.swaps)
            relabels += trace.relabelled
    if swaps >= want_swaps and relabels >= want_relabels:
        return found
    raise GenerationError(f"only {swaps} swap / {relabels} relabel instances in {max_seeds} seeds")


def small_connected_graphs(max_edges: int = 8) -> Iterator[Graph]:
    """Every connected graph with 1..max_edges edges, one per isomorphism class.

    Graphs on up to 7 vertices come from the networkx graph atlas. A connected
    graph on n >= 8 vertices is a spanning tree plus ``m - n + 1`` extra
    edges, so those are built from the nonisomorphic trees on n vertices and
    deduplicated by isomorphism (bucketed by Weisfeiler-Lehman hash).
    """
    import networkx as nx

    if max_edges > 9:
        raise ValueError("enumeration beyond 9 edges is too slow to be useful here")

    def emit(h: nx.Graph) -> Graph:
        h = nx.convert_node_labels_to_integers(h, ordering="sorted")
        return Graph(h.number_of_nodes(), h.edges())

    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_edges() <= max_edges and h.number_of_nodes() >= 2 and nx.is_connected(h):
            yield emit(h)
    for size in range(8, max_edges + 2):
        seen: dict[str, list[nx.Graph]] = {}
        for t in nx.nonisomorphic_trees(size):
            missing = [e for e in combinations(range(size), 2) if not t.has_edge(*e)]
            for extra in range(max_edges - size + 2):
                for added in combinations(missing, extra):
                    h = t.copy()
                    h.add_edges_from(added)
                    bucket = seen.setdefault(nx.weisfeiler_lehman_graph_hash(h), [])
                    if any(nx.is_isomorphic(h, other) for other in bucket):
                        continue
                    bucket.append(h)
                    yield emit(h)
