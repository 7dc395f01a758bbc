"""Edge labellings, vertex sums and the (C-)antimagic predicate."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Union

from .graph import Edge, Graph, GraphFormatError, normalize_edge


class LabellingError(ValueError):
    pass


class ConstructionError(RuntimeError):
    """A constructive labeller broke one of its own guarantees (a bug, not bad input)."""


@dataclass(frozen=True)
class EdgeLabelling:
    """Assignment edge -> positive label, with slack ``slack`` (labels may reach m + slack).

    Keys are normalised ``(u, v)`` pairs with ``u < v``.
    """

    labels: Mapping[Edge, int]
    slack: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "labels", {normalize_edge(u, v): lab for (u, v), lab in self.labels.items()}
        )
        if self.slack < 0:
            raise LabellingError("slack must be nonnegative")

    def __getitem__(self, e: Edge) -> int:
        return self.labels[normalize_edge(*e)]

    def __len__(self) -> int:
        return len(self.labels)

    def max_label(self) -> int:
        return max(self.labels.values(), default=0)

    def sorted_items(self) -> list[tuple[Edge, int]]:
        return sorted(self.labels.items())


LabelsLike = Union[EdgeLabelling, Mapping[Edge, int]]


def _as_mapping(f: LabelsLike) -> Mapping[Edge, int]:
    if isinstance(f, EdgeLabelling):
        return f.labels
    return {normalize_edge(u, v): lab for (u, v), lab in f.items()}


def vertex_sums(g: Graph, f: LabelsLike, partial: bool = False) -> list[int]:
    """Sum of labels over the edges incident to each vertex.

    With ``partial=True`` unlabelled edges contribute 0 (the running sum used
    during construction); otherwise every edge of ``g`` must carry a label.
    """
    labels = _as_mapping(f)
    sums = [0] * g.n
    for (u, v), lab in labels.items():
        if not g.has_edge(u, v):
            raise LabellingError(f"label {lab} on non-edge ({u}, {v})")
        sums[u] += lab
        sums[v] += lab
    if not partial and len(labels) != g.m:
        missing = [e for e in g.edges if e not in labels]
        raise LabellingError(f"{len(missing)} unlabelled edge(s), first {missing[0]}")
    return sums


def conflicts(g: Graph, f: LabelsLike) -> list[Edge]:
    """All vertex pairs ``(x, y)``, ``x < y``, with equal sums, in ascending order."""
    sums = vertex_sums(g, f)
    by_sum: dict[int, list[int]] = {}
    for v, s in enumerate(sums):
        by_sum.setdefault(s, []).append(v)
    out = [pair for group in by_sum.values() for pair in combinations(group, 2)]
    out.sort()
    return out


def is_c_antimagic_labelling(g: Graph, f: LabelsLike, c: int = 0) -> bool:
    """True iff ``f`` is an injection E -> [1, m + c] with pairwise distinct vertex sums."""
    labels = _as_mapping(f)
    if len(labels) != g.m or any(not g.has_edge(u, v) for u, v in labels):
        return False
    values = list(labels.values())
    if len(set(values)) != len(values):
        return False
    if any(not 1 <= lab <= g.m + c for lab in values):
        return False
    sums = vertex_sums(g, labels)
    return len(set(sums)) == len(sums)


def is_antimagic_labelling(g: Graph, f: LabelsLike) -> bool:
    return is_c_antimagic_labelling(g, f, 0)


@dataclass
class LabellingReport:
    """Per-vertex sums plus the verdict, as printed by the CLI."""

    sums: list[int]
    antimagic: bool
    c: int
    conflicts: list[Edge] = field(default_factory=list)
    extra: dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict[str, object]:
        d: dict[str, object] = {
            "sums": self.sums,
            "antimagic": self.antimagic,
            "C": self.c,
            "conflicts": [list(p) for p in self.conflicts],
        }
        d.update(self.extra)
        return d


def make_report(g: Graph, f: LabelsLike, c: int, **extra: object) -> LabellingReport:
    return LabellingReport(
        sums=vertex_sums(g, f),
        antimagic=is_c_antimagic_labelling(g, f, c),
        c=c,
        conflicts=conflicts(g, f),
        extra=dict(extra),
    )


def format_labelling(f: LabelsLike) -> str:
    labels = _as_mapping(f)
    return "".join(f"{u} {v} {lab}\n" for (u, v), lab in sorted(labels.items()))


def format_report(report: LabellingReport) -> str:
    lines = [f"{v} {s}" for v, s in enumerate(report.sums)]
    lines.append(f"antimagic: {'yes' if report.antimagic else 'no'}")
    lines.append(f"C: {report.c}")
    for key, value in report.extra.items():
        lines.append(f"{key}: {value}")
    for x, y in report.conflicts:
        lines.append(f"conflict: {x} {y}")
    return "\n".join(lines) + "\n"


def parse_labelling(text: str, g: Graph | None = None) -> dict[Edge, int]:
    """Read ``u v label`` lines.

    Comment lines, ``key: value`` report lines and two-column ``v sum`` report
    lines are skipped, so the full output of ``label`` can be fed back in.
    """
    labels: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or ":" in line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if len(nums) == 2:
            continue
        if len(nums) != 3:
            raise GraphFormatError(f"expected 'u v label', got {line!r}", lineno)
        u, v, lab = nums
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if lab < 1:
            raise GraphFormatError(f"labels must be positive, got {lab}", lineno)
        e = normalize_edge(u, v)
        if e in labels:
            raise GraphFormatError(f"edge {u} {v} labelled twice", lineno)
        if g is not None and not g.has_edge(u, v):
            raise GraphFormatError(f"edge {u} {v} is not in the graph", lineno)
        labels[e] = lab
    return labels
