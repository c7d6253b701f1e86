"""Total labelings, induced vertex weights, and the local antimagic verifier.

A labeling assigns positive integer labels to edges and (some or all)
vertices. The induced weight of a vertex is its own label plus the labels of
its incident edges; a total labeling is local antimagic when it is a
bijection onto [1, p+q] and adjacent vertices get distinct weights.

Well-formedness (distinct labels, labels inside [1, label_bound]) is checked
by :func:`verify`, which reports violations as data instead of raising, so
bulk consumers such as the solvers and the certificate checker can triage
failures.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .graphs import EdgeKey, Graph


class IncompleteLabelingError(ValueError):
    """An operation needed a label that the labeling does not assign."""


@dataclass(frozen=True)
class PartialTotalLabeling:
    """Labeling with every edge labeled and zero or more vertices unlabeled.

    ``label_bound`` is the intended upper end of the codomain; labels are
    expected to be distinct integers in [1, label_bound].
    """

    vertex_labels: Mapping[int, int]
    edge_labels: Mapping[EdgeKey, int]
    label_bound: int

    def __post_init__(self) -> None:
        if self.label_bound < 1:
            raise ValueError("label_bound must be >= 1")
        for label in [*self.vertex_labels.values(), *self.edge_labels.values()]:
            if not isinstance(label, int) or isinstance(label, bool) or label < 1:
                raise ValueError(f"labels must be positive integers, got {label!r}")

    def label_of_vertex(self, v: int) -> int | None:
        return self.vertex_labels.get(v)

    def label_of_edge(self, key: EdgeKey) -> int | None:
        return self.edge_labels.get(key)

    def all_labels(self) -> list[int]:
        return [*self.vertex_labels.values(), *self.edge_labels.values()]


class TotalLabeling(PartialTotalLabeling):
    """Labeling meant to be a bijection V u E -> [1, p+q].

    The bijection property depends on the graph the labeling is paired with;
    :func:`verify` is the arbiter.
    """


@dataclass(frozen=True)
class WeightProfile:
    """Induced weights of the labeled vertices and their distinct values."""

    weights: dict[int, int]
    colors: tuple[int, ...]


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of verifying one (graph, labeling) pair.

    ``violations`` holds ("duplicate_label", label, multiplicity),
    ("label_out_of_range", label) and ("equal_weights", name_u, name_v)
    entries; the first two kinds break bijectivity, the last properness.
    """

    bijective: bool
    proper: bool
    color_count: int
    violations: tuple[tuple, ...]

    @property
    def ok(self) -> bool:
        return self.bijective and self.proper


def weight(graph: Graph, labeling: PartialTotalLabeling, v: int) -> int | None:
    """f(v) plus the labels of all edges at v; None while f(v) is unassigned."""
    if v not in graph.names:
        raise ValueError(f"unknown vertex id {v}")
    total = 0
    for _, key in graph.adjacency[v]:
        label = labeling.edge_labels.get(key)
        if label is None:
            raise IncompleteLabelingError(
                f"edge {graph.names[key[0]]}-{graph.names[key[1]]} has no label"
            )
        total += label
    own = labeling.vertex_labels.get(v)
    if own is None:
        return None
    return own + total


def weight_profile(graph: Graph, labeling: PartialTotalLabeling) -> WeightProfile:
    """Weights of every labeled vertex, plus the sorted set of distinct values."""
    weights = {}
    for v in graph.vertices:
        w = weight(graph, labeling, v)
        if w is not None:
            weights[v] = w
    return WeightProfile(weights=weights, colors=tuple(sorted(set(weights.values()))))


def color_set(graph: Graph, labeling: TotalLabeling) -> tuple[int, ...]:
    """Sorted distinct induced weights of a complete labeling."""
    _require_complete(graph, labeling)
    return weight_profile(graph, labeling).colors


def _require_complete(graph: Graph, labeling: PartialTotalLabeling) -> None:
    vkeys = set(labeling.vertex_labels)
    ekeys = set(labeling.edge_labels)
    gverts = set(graph.vertices)
    gedges = set(graph.edge_keys)
    if vkeys - gverts or ekeys - gedges:
        raise ValueError("labeling refers to vertices or edges not in the graph")
    missing_v = gverts - vkeys
    missing_e = gedges - ekeys
    if missing_v or missing_e:
        parts = []
        if missing_v:
            parts.append("vertices " + ", ".join(sorted(graph.names[v] for v in missing_v)))
        if missing_e:
            parts.append(
                "edges "
                + ", ".join(sorted(f"{graph.names[a]}-{graph.names[b]}" for a, b in missing_e))
            )
        raise IncompleteLabelingError("unlabeled " + "; ".join(parts))


def verify(graph: Graph, labeling: TotalLabeling) -> VerifyReport:
    """Check bijectivity onto [1, p+q] and the no-adjacent-equal-weights rule.

    The labeling must be complete on the graph; every defect beyond that is
    reported in the result rather than raised.
    """
    _require_complete(graph, labeling)
    total = graph.p + graph.q
    counts = Counter(labeling.all_labels())
    violations: list[tuple] = []
    for label in sorted(counts):
        if counts[label] > 1:
            violations.append(("duplicate_label", label, counts[label]))
    for label in sorted(counts):
        if not 1 <= label <= total:
            violations.append(("label_out_of_range", label))
    bijective = not violations
    profile = weight_profile(graph, labeling)
    ties: list[tuple] = []
    for u, v in graph.edges:
        if profile.weights[u] == profile.weights[v]:
            ties.append(("equal_weights", graph.name_of(u), graph.name_of(v)))
    return VerifyReport(
        bijective=bijective,
        proper=not ties,
        color_count=len(profile.colors),
        violations=tuple(violations + ties),
    )
