"""Simple undirected graphs on dense vertex ids and the edge-list text format.

The format is::

    # optional comment lines anywhere
    n m
    u v        (exactly m lines, 0-based endpoints)
"""

from __future__ import annotations

from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed edge-list input; ``lineno`` is 1-based (None if not tied to a line)."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    Edges are stored as ``(u, v)`` with ``u < v``; adjacency sets are built once
    at construction so neighbour and edge queries are O(1).
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen: set[Edge] = set()
        for u, v in edges:
            _check_edge(n, u, v)
            e = normalize_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._edges = tuple(sorted(seen))
        self._adj = tuple(frozenset(s) for s in adj)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """All edges in ascending order."""
        return self._edges

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._adj[u]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def max_degree(self) -> int:
        if self._n == 0:
            raise ValueError("max degree of the empty graph is undefined")
        return max(len(a) for a in self._adj)

    def incident_edges(self, v: int) -> Iterator[Edge]:
        for w in sorted(self.neighbors(v)):
            yield normalize_edge(v, w)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise IndexError(f"vertex {v} out of range [0, {self._n - 1}]")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def _check_edge(n: int, u: int, v: int) -> None:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    for x in (u, v):
        if not 0 <= x < n:
            raise ValueError(f"endpoint {x} out of range [0, {n - 1}]")


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Graph) -> int:
    return g.max_degree()


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(line: str, count: int, lineno: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphFormatError(f"expected {what}, got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format; every error names its line."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("missing 'n m' header") from None
    n, m = _ints(header, 2, lineno, "header 'n m'")
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be nonnegative", lineno)

    seen: set[Edge] = set()
    count = 0
    for lineno, line in lines:
        count += 1
        if count > m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        u, v = _ints(line, 2, lineno, "edge 'u v'")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"endpoint {x} out of range [0, {n - 1}]", lineno)
        e = normalize_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(e)
    if count < m:
        raise GraphFormatError(f"declared {m} edges but found {count}")
    return Graph(n, seen)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
