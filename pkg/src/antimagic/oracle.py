"""Exhaustive search for (C-)antimagic labellings of tiny graphs.

Assignments are enumerated in lexicographic order of the label tuple, with
edges taken in ascending order. A branch is cut as soon as a vertex whose
edges are all labelled repeats the sum of another such vertex; every
completion of that branch would fail too, so the first witness found is the
same one an unpruned scan would return.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import perm

from .graph import Edge, Graph
from .labelling import EdgeLabelling, is_c_antimagic_labelling

DEFAULT_M_CAP = 10


class OracleCapExceeded(ValueError):
    pass


@dataclass
class OracleResult:
    found: bool
    witness: EdgeLabelling | None
    c_used: int | None
    search_space_size: int
    nodes_visited: int = 0


def brute_force_antimagic(g: Graph, c: int = 0, m_cap: int = DEFAULT_M_CAP) -> OracleResult:
    if c < 0:
        raise ValueError("c must be nonnegative")
    m = g.m
    if m > m_cap:
        raise OracleCapExceeded(f"m={m} exceeds the oracle cap {m_cap}")
    edges = g.edges
    top = m + c
    space = perm(top, m)

    # vertices whose last incident edge is edges[i]; isolated ones are complete from the start
    closes: list[list[int]] = [[] for _ in range(m)]
    last_edge = [-1] * g.n
    for i, (u, v) in enumerate(edges):
        last_edge[u] = i
        last_edge[v] = i
    for v, i in enumerate(last_edge):
        if i >= 0:
            closes[i].append(v)
    isolated = sum(1 for i in last_edge if i < 0)
    if isolated > 1:
        return OracleResult(False, None, None, space, 0)

    sums = [0] * g.n
    used = [False] * (top + 1)
    chosen = [0] * m
    closed: set[int] = {0} if isolated else set()
    visited = 0

    def search(i: int) -> bool:
        nonlocal visited
        if i == m:
            return True
        u, v = edges[i]
        for lab in range(1, top + 1):
            if used[lab]:
                continue
            visited += 1
            sums[u] += lab
            sums[v] += lab
            fresh = [sums[w] for w in closes[i]]
            ok = len(set(fresh)) == len(fresh) and closed.isdisjoint(fresh)
            if ok:
                used[lab] = True
                chosen[i] = lab
                closed.update(fresh)
                if search(i + 1):
                    return True
                closed.difference_update(fresh)
                used[lab] = False
            sums[u] -= lab
            sums[v] -= lab
        return False

    if m == 0:
        # at most one vertex here, so the empty labelling works
        return OracleResult(True, EdgeLabelling({}, c), c, 1, 0)
    if not search(0):
        return OracleResult(False, None, None, space, visited)

    labels: dict[Edge, int] = dict(zip(edges, chosen))
    witness = EdgeLabelling(labels, slack=c)
    if not is_c_antimagic_labelling(g, witness, c):
        raise AssertionError("oracle produced a witness that fails verification")
    return OracleResult(True, witness, c, space, visited)


def min_c(g: Graph, c_max: int = 3, m_cap: int = DEFAULT_M_CAP) -> OracleResult:
    """Smallest slack in ``0..c_max`` admitting a witness."""
    if g.m > m_cap:
        raise OracleCapExceeded(f"m={g.m} exceeds the oracle cap {m_cap}")
    total = 0
    for c in range(c_max + 1):
        res = brute_force_antimagic(g, c, m_cap)
        total += res.search_space_size
        if res.found:
            res.search_space_size = total
            return res
    return OracleResult(False, None, None, total)
