from itertools import combinations

import pytest

from antimagic.cliques import PreconditionError, CliqueError
from antimagic.generators import InstanceSpec, gen_precondition_instance
from antimagic.graph import Graph
from antimagic.labelling import is_c_antimagic_labelling, vertex_sums
from antimagic.theorem4 import label_e2_alternating, label_theorem4, partition_edges_t4

K4_EDGES = list(combinations(range(4), 2))


def _k4_with(*extra):
    n = 1 + max(max(e) for e in extra)
    return Graph(n, K4_EDGES + list(extra))


def test_partition_pendant(k4p):
    part = partition_edges_t4(k4p, [0, 1, 2, 3])
    assert part.e1 == () and part.e2 == ()
    assert part.e3 == ((0, 4),)
    assert part.e4 == tuple(K4_EDGES)


def test_partition_degree_two_a_vertices():
    g = _k4_with((0, 4), (2, 4), (1, 5), (3, 5), (2, 6), (3, 6))
    part = partition_edges_t4(g, [0, 1, 2, 3])
    assert part.e3 == ((0, 4), (1, 5), (2, 6))
    assert part.e2 == ((2, 4), (3, 5), (3, 6))
    assert part.e1 == ()
    assert len(part.e3) == g.n - 4


def test_partition_lowest_clique_neighbour():
    # clique 0..5, outside vertex 6 sees only clique vertices 3 and 5
    g = Graph(7, list(combinations(range(6), 2)) + [(5, 6), (3, 6)])
    part = partition_edges_t4(g, range(6))
    assert part.e3 == ((3, 6),)
    assert part.e2 == ((5, 6),)


def test_partition_rejects_non_dominating(k4p):
    with pytest.raises(CliqueError):
        partition_edges_t4(k4p, [1, 2, 3])


def test_e2_empty(k4p):
    part = partition_edges_t4(k4p, [0, 1, 2, 3])
    labels, trace = label_e2_alternating(k4p, [0, 1, 2, 3], part)
    assert labels == {} and trace == []


def test_e2_single_edge():
    g = _k4_with((0, 4), (1, 4))
    part = partition_edges_t4(g, [0, 1, 2, 3])
    labels, _ = label_e2_alternating(g, [0, 1, 2, 3], part)
    assert labels == {(1, 4): 1}


def test_e2_two_edge_path():
    g = _k4_with((0, 4), (1, 4), (2, 4))
    part = partition_edges_t4(g, [0, 1, 2, 3])
    labels, trace = label_e2_alternating(g, [0, 1, 2, 3], part)
    assert labels == {(1, 4): 2, (2, 4): 1}
    assert [s.kind for s in trace] == ["start", "extend"]


def test_e2_respects_offset():
    g = _k4_with((0, 4), (1, 4), (2, 4), (4, 5), (0, 5))
    part = partition_edges_t4(g, [0, 1, 2, 3])
    assert part.e1 == ((4, 5),)
    labels, _ = label_e2_alternating(g, [0, 1, 2, 3], part)
    assert sorted(labels.values()) == [2, 3]


def test_k4_pendant_full_trace(k4p):
    res = label_theorem4(k4p, [0, 1, 2, 3], strict=True)
    assert res.labelling[(0, 4)] == 1
    assert res.clique_order == [1, 2, 3, 0]
    lab = res.labelling
    assert [lab[e] for e in [(1, 2), (1, 3), (0, 1), (2, 3), (0, 2), (0, 3)]] == [2, 3, 4, 5, 6, 7]
    assert res.sums == [18, 9, 13, 15, 1]
    assert res.certificate.gamma_value == 8
    assert res.antimagic and is_c_antimagic_labelling(k4p, lab, 0)


def test_k5_only_clique_edges():
    g = Graph.complete(5)
    res = label_theorem4(g, range(5), strict=True)
    assert res.partition.e1 == res.partition.e2 == res.partition.e3 == ()
    order = res.clique_order
    assert order == [0, 1, 2, 3, 4]
    assert [res.labelling[e] for e in combinations(order, 2)] == list(range(1, 11))
    s = vertex_sums(g, res.labelling)
    assert s == sorted(s) and len(set(s)) == 5
    assert res.certificate.max_outside_sum == 0


def test_strict_rejects_heavy_outside_vertex():
    # vertex 4 has degree 5 > alpha
    edges = K4_EDGES + [(0, 4)] + [(4, w) for w in range(5, 9)] + [(1, w) for w in range(5, 9)]
    g = Graph(9, edges)
    with pytest.raises(PreconditionError, match="theorem4"):
        label_theorem4(g, [0, 1, 2, 3], strict=True)
    res = label_theorem4(g, [0, 1, 2, 3])
    assert res.antimagic == is_c_antimagic_labelling(g, res.labelling, 0)
    assert not res.preconditions.theorem4_ok


def test_non_strict_triangle_reports_outcome(paw_graph):
    res = label_theorem4(paw_graph, [0, 1, 2])
    assert sorted(res.labelling.labels.values()) == [1, 2, 3, 4]
    assert res.antimagic == is_c_antimagic_labelling(paw_graph, res.labelling, 0)


def _instances(count=150):
    for seed in range(count):
        k = 4 + seed % 5
        n = k + (seed * 7) % 30
        p = (0.0, 0.1, 0.3, 0.6, 1.0)[seed % 5]
        yield gen_precondition_instance(InstanceSpec(n, k, p, seed, "theorem4"))


@pytest.mark.parametrize("g, kq", list(_instances()))
def test_invariants_on_generated_instances(g, kq):
    res = label_theorem4(g, kq, strict=True)
    labels = res.labelling.labels
    assert sorted(labels.values()) == list(range(1, g.m + 1))
    sums = res.sums
    outside = [sums[v] for v in res.outside_order]
    assert all(a < b for a, b in zip(outside, outside[1:]))
    clique = [sums[u] for u in res.clique_order]
    assert all(a < b for a, b in zip(clique, clique[1:]))
    assert res.certificate.gamma_value > 0
    assert res.certificate.min_clique_sum - res.certificate.max_outside_sum == res.certificate.gamma_value

    e1, e2 = len(res.partition.e1), len(res.partition.e2)
    used: set[int] = set()
    small = large = 0
    prev = None
    for step in res.trace:
        used.add(step.label)
        if step.from_clique:
            large += 1
        else:
            small += 1
        expected = set(range(e1 + 1, e1 + small + 1)) | set(range(e1 + e2 - large + 1, e1 + e2 + 1))
        assert used == expected
        if step.kind == "extend" and not step.from_clique:
            # outside vertex interior to a path: consecutive labels pair up
            assert prev.label + step.label == 2 * e1 + e2 + 1
        prev = step
    assert small + large == e2
