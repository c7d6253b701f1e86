"""Serialization of graphs, labelings and verdicts as re-verifiable artifacts.

A certificate bundles the graph (inline, in the text edge format), the full
labeling, and the claimed weights/color count, so any consumer can recheck
the claims without trusting the producer. Certificates serialize to JSON
with a fixed key order (integers only), so re-serialization is
byte-identical and the files diff cleanly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graphs import Graph, edge_key
from .labeling import IncompleteLabelingError, TotalLabeling, VerifyReport, verify, weight_profile

FORMAT_VERSION = 1

_CERT_KEYS = (
    "format_version",
    "provenance",
    "graph",
    "vertex_labels",
    "edge_labels",
    "claimed_weights",
    "claimed_color_count",
)


class CertificateParseError(ValueError):
    """Malformed certificate or graph text; the message carries the position."""


@dataclass(frozen=True)
class Certificate:
    """Self-contained, re-checkable (graph, labeling, claims) bundle.

    Labels and claims are keyed by role name ("x") and edge name ("x-u1", in
    the graph's stored edge orientation).
    """

    graph: Graph
    vertex_labels: dict[str, int]
    edge_labels: dict[str, int]
    claimed_weights: dict[str, int]
    claimed_color_count: int
    provenance: str
    format_version: int = field(default=FORMAT_VERSION)


def edge_name(graph: Graph, u: int, v: int) -> str:
    return f"{graph.name_of(u)}-{graph.name_of(v)}"


def make_certificate(graph: Graph, labeling: TotalLabeling, provenance: str) -> Certificate:
    """Bundle a complete labeling with its recomputed weights and color count."""
    profile = weight_profile(graph, labeling)
    return Certificate(
        graph=graph,
        vertex_labels={graph.name_of(v): labeling.vertex_labels[v] for v in graph.vertices},
        edge_labels={
            edge_name(graph, u, v): labeling.edge_labels[edge_key(u, v)] for u, v in graph.edges
        },
        claimed_weights={graph.name_of(v): profile.weights[v] for v in graph.vertices},
        claimed_color_count=len(profile.colors),
        provenance=provenance,
    )


def certificate_labeling(cert: Certificate) -> TotalLabeling:
    """The id-keyed labeling carried by a certificate."""
    graph = cert.graph
    vl = {graph.id_of(name): label for name, label in cert.vertex_labels.items()}
    el = {}
    for (u, v) in graph.edges:
        el[edge_key(u, v)] = cert.edge_labels[edge_name(graph, u, v)]
    return TotalLabeling(vl, el, label_bound=graph.p + graph.q)


def check_certificate(cert: Certificate) -> tuple[VerifyReport, bool]:
    """Re-verify a certificate: (verify report, claims-match flag).

    A loaded certificate with inconsistent claims is data, not an error; the
    claims-match flag goes false and the report describes the labeling.
    """
    labeling = certificate_labeling(cert)
    report = verify(cert.graph, labeling)
    profile = weight_profile(cert.graph, labeling)
    recomputed = {cert.graph.name_of(v): w for v, w in profile.weights.items()}
    claims_match = (
        recomputed == cert.claimed_weights
        and len(profile.colors) == cert.claimed_color_count
    )
    return report, claims_match


def certificate_payload(cert: Certificate) -> dict:
    """Canonically ordered plain-dict form of a certificate."""
    g = cert.graph
    return {
        "format_version": cert.format_version,
        "provenance": cert.provenance,
        "graph": {
            "p": g.p,
            "q": g.q,
            "edges": [[g.name_of(u), g.name_of(v)] for u, v in g.edges],
        },
        "vertex_labels": {g.name_of(v): cert.vertex_labels[g.name_of(v)] for v in g.vertices},
        "edge_labels": {
            edge_name(g, u, v): cert.edge_labels[edge_name(g, u, v)] for u, v in g.edges
        },
        "claimed_weights": {g.name_of(v): cert.claimed_weights[g.name_of(v)] for v in g.vertices},
        "claimed_color_count": cert.claimed_color_count,
    }


def write_certificate(cert: Certificate) -> str:
    return json.dumps(certificate_payload(cert), indent=2) + "\n"


def _expect_int(value, where: str, minimum: int = 0) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise CertificateParseError(f"field {where!r}: expected integer >= {minimum}, got {value!r}")
    return value


def _expect_name(value, where: str) -> str:
    if not isinstance(value, str) or not value or "-" in value or any(ch.isspace() for ch in value):
        raise CertificateParseError(
            f"field {where!r}: vertex names must be non-empty and free of '-' and whitespace"
        )
    return value


def _graph_from_edge_names(edge_pairs: list[tuple[str, str]], where: str) -> Graph:
    ids: dict[str, int] = {}
    edges = []
    for i, (na, nb) in enumerate(edge_pairs):
        for name in (na, nb):
            if name not in ids:
                ids[name] = len(ids)
        if na == nb:
            raise CertificateParseError(f"{where}[{i}]: loop edge {na}-{nb}")
        edges.append((ids[na], ids[nb]))
    vertices = tuple(range(len(ids)))
    names = {i: name for name, i in ids.items()}
    try:
        return Graph(vertices, tuple(edges), names)
    except ValueError as exc:
        raise CertificateParseError(f"{where}: {exc}") from None


def read_certificate(text: str) -> Certificate:
    """Parse a certificate; raises CertificateParseError with the offending
    line/field on malformed input. Inconsistent labels or claims load fine
    and are left for check_certificate to report."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateParseError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(data, dict):
        raise CertificateParseError("certificate must be a JSON object")
    missing = [key for key in _CERT_KEYS if key not in data]
    if missing:
        raise CertificateParseError(f"missing field(s): {', '.join(missing)}")
    version = _expect_int(data["format_version"], "format_version", 1)
    if version != FORMAT_VERSION:
        raise CertificateParseError(f"unsupported format_version {version}")
    if not isinstance(data["provenance"], str):
        raise CertificateParseError("field 'provenance': expected string")
    gdata = data["graph"]
    if not isinstance(gdata, dict):
        raise CertificateParseError("field 'graph': expected object")
    for key in ("p", "q", "edges"):
        if key not in gdata:
            raise CertificateParseError(f"missing field 'graph.{key}'")
    p = _expect_int(gdata["p"], "graph.p", 1)
    q = _expect_int(gdata["q"], "graph.q", 0)
    raw_edges = gdata["edges"]
    if not isinstance(raw_edges, list):
        raise CertificateParseError("field 'graph.edges': expected list")
    if len(raw_edges) != q:
        raise CertificateParseError(f"graph.q is {q} but graph.edges has {len(raw_edges)} entries")
    edge_pairs = []
    for i, entry in enumerate(raw_edges):
        if not isinstance(entry, list) or len(entry) != 2:
            raise CertificateParseError(f"graph.edges[{i}]: expected a [name, name] pair")
        na = _expect_name(entry[0], f"graph.edges[{i}][0]")
        nb = _expect_name(entry[1], f"graph.edges[{i}][1]")
        edge_pairs.append((na, nb))
    graph = _graph_from_edge_names(edge_pairs, "graph.edges")
    if graph.p != p:
        raise CertificateParseError(f"graph.p is {p} but the edge list spans {graph.p} vertices")

    names = set(graph.names.values())
    edge_names = {edge_name(graph, u, v) for u, v in graph.edges}

    def int_map(key: str, expected_keys: set[str]) -> dict[str, int]:
        raw = data[key]
        if not isinstance(raw, dict):
            raise CertificateParseError(f"field {key!r}: expected object")
        got = set(raw)
        if got != expected_keys:
            missing = sorted(expected_keys - got)
            extra = sorted(got - expected_keys)
            detail = []
            if missing:
                detail.append(f"missing {', '.join(missing)}")
            if extra:
                detail.append(f"unexpected {', '.join(extra)}")
            raise CertificateParseError(f"field {key!r}: {'; '.join(detail)}")
        return {k: _expect_int(v, f"{key}.{k}", 1) for k, v in raw.items()}

    vertex_labels = int_map("vertex_labels", names)
    edge_labels = int_map("edge_labels", edge_names)
    claimed_weights = int_map("claimed_weights", names)
    claimed_color_count = _expect_int(data["claimed_color_count"], "claimed_color_count", 1)
    return Certificate(
        graph=graph,
        vertex_labels=vertex_labels,
        edge_labels=edge_labels,
        claimed_weights=claimed_weights,
        claimed_color_count=claimed_color_count,
        provenance=data["provenance"],
        format_version=version,
    )


def write_graph_text(graph: Graph) -> str:
    """Graph text format: first line "p q", then q "name name" edge lines."""
    lines = [f"{graph.p} {graph.q}"]
    lines.extend(f"{graph.name_of(u)} {graph.name_of(v)}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_graph_text(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise CertificateParseError("line 1: expected 'p q' header")
    head = lines[0].split()
    if len(head) != 2:
        raise CertificateParseError("line 1: expected 'p q' header")
    try:
        p, q = int(head[0]), int(head[1])
    except ValueError:
        raise CertificateParseError("line 1: p and q must be integers") from None
    edge_pairs = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise CertificateParseError(f"line {lineno}: expected two vertex names")
        edge_pairs.append((parts[0], parts[1]))
    if len(edge_pairs) != q:
        raise CertificateParseError(f"header says q={q} but found {len(edge_pairs)} edge lines")
    graph = _graph_from_edge_names(edge_pairs, "edge list")
    if graph.p != p:
        raise CertificateParseError(f"header says p={p} but the edge list spans {graph.p} vertices")
    return graph


def export_dot(graph: Graph, labeling: TotalLabeling) -> str:
    """DOT text with nodes captioned "name / f=<label> / w=<weight>" and edges
    captioned with their labels; node and edge order is deterministic."""
    profile = weight_profile(graph, labeling)
    unlabeled = [v for v in graph.vertices if v not in labeling.vertex_labels]
    if unlabeled:
        raise IncompleteLabelingError(
            "unlabeled vertices " + ", ".join(graph.name_of(v) for v in unlabeled)
        )
    lines = ["graph {"]
    for v in graph.vertices:
        name = graph.name_of(v)
        lines.append(
            f'  "{name}" [label="{name} / f={labeling.vertex_labels[v]} / w={profile.weights[v]}"];'
        )
    for u, v in graph.edges:
        label = labeling.edge_labels[edge_key(u, v)]
        lines.append(f'  "{graph.name_of(u)}" -- "{graph.name_of(v)}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
