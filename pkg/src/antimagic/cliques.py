"""Dominating cliques: verification, exhaustive search, labeller preconditions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .graph import Graph

DEFAULT_SUBSET_BUDGET = 10**7


class CliqueError(ValueError):
    pass


class PreconditionError(ValueError):
    """A labeller's hypothesis does not hold for the given graph and clique."""


class SearchBudgetExceeded(RuntimeError):
    """The exhaustive search examined more candidates than its budget allows."""


@dataclass(frozen=True)
class DominatingClique:
    members: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __str__(self) -> str:
        return " ".join(map(str, self.members))


CliqueLike = Union[DominatingClique, Sequence[int]]


def _check_members(g: Graph, members: Sequence[int]) -> None:
    for v in members:
        if not 0 <= v < g.n:
            raise CliqueError(f"vertex {v} out of range [0, {g.n - 1}]")
    if len(set(members)) != len(members):
        raise CliqueError(f"duplicate member in {list(members)}")


def verify_dominating_clique(g: Graph, members: Iterable[int]) -> bool:
    """True iff ``members`` are pairwise adjacent and every other vertex has a neighbour among them."""
    members = list(members)
    _check_members(g, members)
    for i, u in enumerate(members):
        for w in members[i + 1:]:
            if not g.has_edge(u, w):
                return False
    inside = set(members)
    return all(v in inside or not g.neighbors(v).isdisjoint(inside) for v in g.vertices())


def dominating_clique(g: Graph, members: CliqueLike) -> DominatingClique:
    """Validate ``members`` against ``g`` and wrap them; raises CliqueError if invalid."""
    members = tuple(members.members if isinstance(members, DominatingClique) else members)
    if not verify_dominating_clique(g, members):
        raise CliqueError(f"{list(members)} is not a dominating clique")
    return DominatingClique(members)


def parse_clique(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise CliqueError(f"malformed vertex list {text!r}") from None


def find_dominating_cliques(
    g: Graph, k_min: int, k_max: int, budget: int = DEFAULT_SUBSET_BUDGET
) -> list[DominatingClique]:
    """Every dominating clique with ``k_min <= k <= k_max`` members, lexicographically ordered.

    Depth-first growth over ascending vertex ids visits cliques in lexicographic
    order of their sorted member tuples; subsets that are not cliques are never
    extended. Each visited clique counts against ``budget``.
    """
    if not 1 <= k_min <= k_max <= g.n:
        raise ValueError(f"need 1 <= k_min <= k_max <= n, got {k_min}, {k_max}, n={g.n}")
    found: list[DominatingClique] = []
    visited = 0
    allv = frozenset(g.vertices())

    def grow(clique: list[int], candidates: list[int], dominated: frozenset[int]) -> None:
        nonlocal visited
        for idx, v in enumerate(candidates):
            visited += 1
            if visited > budget:
                raise SearchBudgetExceeded(f"more than {budget} candidate subsets")
            clique.append(v)
            dom = dominated | g.neighbors(v) | {v}
            if len(clique) >= k_min and dom == allv:
                found.append(DominatingClique(tuple(clique)))
            if len(clique) < k_max:
                nbrs = g.neighbors(v)
                grow(clique, [w for w in candidates[idx + 1:] if w in nbrs], dom)
            clique.pop()

    grow([], list(g.vertices()), frozenset())
    return found


@dataclass
class PreconditionReport:
    theorem4_ok: bool
    theorem5_ok: bool
    alpha: int
    beta: int
    k: int
    edge_bound: int
    reasons: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, object]:
        return {
            "theorem4_ok": self.theorem4_ok,
            "theorem5_ok": self.theorem5_ok,
            "alpha": self.alpha,
            "beta": self.beta,
            "k": self.k,
            "edge_bound": self.edge_bound,
            "reasons": list(self.reasons),
        }


def edge_bound_theorem5(n: int, k: int) -> int:
    """Smallest m for which the 3-antimagic construction applies."""
    return 3 * (n - k) - 2 + k * (k - 1) // 2


def check_preconditions(g: Graph, kq: CliqueLike) -> PreconditionReport:
    kq = dominating_clique(g, kq)
    k = kq.k
    alpha = min(g.degree(u) for u in kq) if k else 0
    inside = set(kq.members)
    reasons: list[str] = []

    t4 = True
    if k < 4:
        t4 = False
        reasons.append(f"theorem4: clique order {k} < 4")
    heavy = [v for v in g.vertices() if v not in inside and g.degree(v) > alpha]
    if heavy:
        t4 = False
        v = heavy[0]
        reasons.append(
            f"theorem4: {len(heavy)} outside vertex(es) exceed alpha={alpha}, "
            f"e.g. d({v})={g.degree(v)}"
        )

    bound = edge_bound_theorem5(g.n, k)
    t5 = True
    if k < 3:
        t5 = False
        reasons.append(f"theorem5: clique order {k} < 3")
    if g.m < bound:
        t5 = False
        reasons.append(f"theorem5: m={g.m} < 3(n-k)-2+k(k-1)/2={bound}")

    return PreconditionReport(
        theorem4_ok=t4,
        theorem5_ok=t5,
        alpha=alpha,
        beta=alpha - k + 1,
        k=k,
        edge_bound=bound,
        reasons=reasons,
    )


def outside_vertices(g: Graph, kq: CliqueLike) -> list[int]:
    inside = set(kq)
    return [v for v in g.vertices() if v not in inside]


def anchor_edges(g: Graph, kq: CliqueLike) -> dict[int, tuple[int, int]]:
    """For each outside vertex, its edge to the lowest-numbered clique neighbour."""
    inside = set(kq)
    anchors = {}
    for v in outside_vertices(g, kq):
        into = [u for u in g.neighbors(v) if u in inside]
        if not into:
            raise CliqueError(f"vertex {v} has no neighbour in the clique")
        u = min(into)
        anchors[v] = (min(u, v), max(u, v))
    return anchors
