"""Graph families with stable role names: paths, cycles, spiders, tadpoles,
and one-point unions of two cycles.

Every vertex carries an integer id (assigned in construction order) plus a
role name such as ``"x"``, ``"u3"``, ``"v3"`` or ``"y1"``, so that labeling
constructions can address vertices symbolically. Graphs are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

EdgeKey = tuple[int, int]


def edge_key(u: int, v: int) -> EdgeKey:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple loopless undirected graph.

    ``vertices`` and ``edges`` keep construction order so serialized output is
    deterministic; edge tuples keep the orientation they were built with.
    ``names`` maps each vertex id to a unique role name.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    names: dict[int, str]

    def __post_init__(self) -> None:
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertex id")
        if set(self.names) != vset:
            raise ValueError("names must cover exactly the vertex set")
        if len(set(self.names.values())) != len(self.names):
            raise ValueError("role names must be unique")
        seen: set[EdgeKey] = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) references an unknown vertex")
            key = edge_key(u, v)
            if key in seen:
                raise ValueError(f"duplicate edge {self.names[u]}-{self.names[v]}")
            seen.add(key)

    @property
    def p(self) -> int:
        """Order (number of vertices)."""
        return len(self.vertices)

    @property
    def q(self) -> int:
        """Size (number of edges)."""
        return len(self.edges)

    @cached_property
    def edge_keys(self) -> tuple[EdgeKey, ...]:
        return tuple(edge_key(u, v) for u, v in self.edges)

    @cached_property
    def adjacency(self) -> dict[int, tuple[tuple[int, EdgeKey], ...]]:
        """Vertex id -> tuple of (neighbor id, edge key) in construction order."""
        adj: dict[int, list[tuple[int, EdgeKey]]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            key = edge_key(u, v)
            adj[u].append((v, key))
            adj[v].append((u, key))
        return {v: tuple(entries) for v, entries in adj.items()}

    @cached_property
    def _id_by_name(self) -> dict[str, int]:
        return {name: v for v, name in self.names.items()}

    def id_of(self, name: str) -> int:
        try:
            return self._id_by_name[name]
        except KeyError:
            raise ValueError(f"no vertex named {name!r}") from None

    def name_of(self, v: int) -> str:
        try:
            return self.names[v]
        except KeyError:
            raise ValueError(f"unknown vertex id {v}") from None

    def degree(self, v: int) -> int:
        if v not in self.names:
            raise ValueError(f"unknown vertex id {v}")
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        if v not in self.names:
            raise ValueError(f"unknown vertex id {v}")
        return tuple(u for u, _ in self.adjacency[v])


def incident_edges(graph: Graph, v: int) -> tuple[tuple[int, int], ...]:
    """The edges containing v, in construction order and stored orientation."""
    if v not in graph.names:
        raise ValueError(f"unknown vertex id {v}")
    return tuple(e for e in graph.edges if v in e)


def is_connected(graph: Graph) -> bool:
    if graph.p == 0:
        return True
    seen = {graph.vertices[0]}
    stack = [graph.vertices[0]]
    while stack:
        v = stack.pop()
        for u, _ in graph.adjacency[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == graph.p


def is_bipartite(graph: Graph) -> bool:
    color: dict[int, int] = {}
    for root in graph.vertices:
        if root in color:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u, _ in graph.adjacency[v]:
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


@dataclass(frozen=True)
class SpiderSpec:
    """Leg profile of a spider as ((length, count), ...) entries.

    ``SpiderSpec.of(m, n)`` describes the spider with m legs of length 1 and
    n legs of length 2.
    """

    legs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.legs:
            raise ValueError("spider needs at least one leg")
        for length, count in self.legs:
            if length < 1 or count < 1:
                raise ValueError(f"invalid leg entry ({length}, {count})")

    @classmethod
    def of(cls, m: int, n: int) -> "SpiderSpec":
        if m < 0 or n < 0 or m + n < 1:
            raise ValueError("need m, n >= 0 and m + n >= 1")
        legs = []
        if m:
            legs.append((1, m))
        if n:
            legs.append((2, n))
        return cls(tuple(legs))

    @property
    def m(self) -> int:
        """Number of length-1 legs."""
        return sum(count for length, count in self.legs if length == 1)

    @property
    def n(self) -> int:
        """Number of length-2 legs."""
        return sum(count for length, count in self.legs if length == 2)

    @property
    def total_legs(self) -> int:
        return sum(count for _, count in self.legs)


def build_path(n: int) -> Graph:
    """Path u1 - u2 - ... - un."""
    if n < 2:
        raise ValueError("path needs n >= 2")
    vertices = tuple(range(n))
    names = {i: f"u{i + 1}" for i in range(n)}
    edges = tuple((i, i + 1) for i in range(n - 1))
    return Graph(vertices, edges, names)


def build_cycle(n: int) -> Graph:
    """Cycle u1 - u2 - ... - un - u1."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    vertices = tuple(range(n))
    names = {i: f"u{i + 1}" for i in range(n)}
    edges = tuple((i, i + 1) for i in range(n - 1)) + ((n - 1, 0),)
    return Graph(vertices, edges, names)


def build_spider(spec: SpiderSpec, allow_degenerate: bool = False) -> Graph:
    """Spider with center "x"; length-1 legs contribute leaves y1..ym, length-2
    legs contribute u1/v1..un/vn, longer legs contribute w<t>_1..w<t>_<d>.

    A proper spider has at least three legs; ``allow_degenerate`` lifts that
    floor for construction-internal use (one or two legs give a path).
    """
    if spec.total_legs < 3 and not allow_degenerate:
        raise ValueError("spider needs at least 3 legs")
    vertices = [0]
    names = {0: "x"}
    edges: list[tuple[int, int]] = []
    next_id = 1
    n_y = n_uv = n_long = 0
    for length, count in spec.legs:
        for _ in range(count):
            if length == 1:
                n_y += 1
                y = next_id
                next_id += 1
                vertices.append(y)
                names[y] = f"y{n_y}"
                edges.append((0, y))
            elif length == 2:
                n_uv += 1
                u, v = next_id, next_id + 1
                next_id += 2
                vertices.extend([u, v])
                names[u] = f"u{n_uv}"
                names[v] = f"v{n_uv}"
                edges.append((0, u))
                edges.append((u, v))
            else:
                n_long += 1
                prev = 0
                for pos in range(1, length + 1):
                    w = next_id
                    next_id += 1
                    vertices.append(w)
                    names[w] = f"w{n_long}_{pos}"
                    edges.append((prev, w))
                    prev = w
    return Graph(tuple(vertices), tuple(edges), names)


def build_tadpole(a: int, b: int) -> Graph:
    """One-point union of the cycle C_a and a pendant path with b edges.

    Vertices are named u2..u(a+b+1): the cycle runs u2..u(a+1) and the path
    continues u(a+1)..u(a+b+1), so u(a+1) is the degree-3 vertex.
    """
    if a < 3:
        raise ValueError("tadpole needs cycle length a >= 3")
    if b < 1:
        raise ValueError("tadpole needs path edge count b >= 1")
    labels = list(range(2, a + b + 2))
    vertices = tuple(range(len(labels)))
    names = {i: f"u{lab}" for i, lab in enumerate(labels)}
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = [(idx[i], idx[i + 1]) for i in range(2, a + 1)]
    edges.append((idx[a + 1], idx[2]))
    edges.extend((idx[i], idx[i + 1]) for i in range(a + 1, a + b + 1))
    return Graph(vertices, tuple(edges), names)


def build_two_cycles(a: int, b: int) -> Graph:
    """One-point union of cycles C_a and C_b sharing the degree-4 vertex.

    Vertices are named u2..u(a+b): C_a runs u2..u(a+1), C_b runs
    u(a+1)..u(a+b) and closes back to u(a+1).
    """
    if a < 3 or b < 3:
        raise ValueError("both cycle lengths must be >= 3")
    labels = list(range(2, a + b + 1))
    vertices = tuple(range(len(labels)))
    names = {i: f"u{lab}" for i, lab in enumerate(labels)}
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = [(idx[i], idx[i + 1]) for i in range(2, a + 1)]
    edges.append((idx[a + 1], idx[2]))
    edges.extend((idx[i], idx[i + 1]) for i in range(a + 1, a + b))
    edges.append((idx[a + b], idx[a + 1]))
    return Graph(vertices, tuple(edges), names)
