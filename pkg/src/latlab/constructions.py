"""Closed-form local antimagic total labelings for the supported families.

Every construction returns a (graph, labeling) pair built from explicit
per-column label formulas; each must pass :func:`latlab.labeling.verify` for
every in-range parameter, and the test grids enforce exactly that. The
formulas are stated in the comments as column/block rules together with the
invariant column sums they satisfy.
"""

from __future__ import annotations

from .graphs import Graph, SpiderSpec, build_path, build_spider, build_tadpole, build_two_cycles, edge_key
from .labeling import PartialTotalLabeling, TotalLabeling


def label_sp2_even(k: int) -> tuple[Graph, TotalLabeling]:
    """3-weight labeling of Sp(2^[2k]) using labels [1, 8k+1].

    Block i in [1, k]:      f(xu_i) = 2i-1, f(u_i) = 4k+2-i,
                            f(u_iv_i) = 5k+2-i, f(v_i) = 7k+1+i.
    Block i in [k+1, 2k]:   f(xu_i) = 2(i-k), f(u_i) = 4k+1-i,
                            f(u_iv_i) = 7k+2-i, f(v_i) = 5k+1+i.
    With f(x) = 3k+1, every column satisfies f(xu_i)+f(u_i)+f(u_iv_i) = 9k+3
    and f(u_iv_i)+f(v_i) = 12k+3, so the weight classes are
    w(u_i) = 9k+3, w(v_i) = 12k+3 and w(x) = 2k^2+4k+1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    graph = build_spider(SpiderSpec.of(0, 2 * k), allow_degenerate=True)
    x = graph.id_of("x")
    vl = {x: 3 * k + 1}
    el = {}
    for i in range(1, 2 * k + 1):
        u = graph.id_of(f"u{i}")
        v = graph.id_of(f"v{i}")
        if i <= k:
            el[edge_key(x, u)] = 2 * i - 1
            vl[u] = 4 * k + 2 - i
            el[edge_key(u, v)] = 5 * k + 2 - i
            vl[v] = 7 * k + 1 + i
        else:
            el[edge_key(x, u)] = 2 * (i - k)
            vl[u] = 4 * k + 1 - i
            el[edge_key(u, v)] = 7 * k + 2 - i
            vl[v] = 5 * k + 1 + i
    return graph, TotalLabeling(vl, el, label_bound=8 * k + 1)


def label_spider_case1(m: int, k: int) -> tuple[Graph, TotalLabeling]:
    """3-weight labeling of Sp(1^[m], 2^[2k+1]) using labels [1, 2m+8k+5].

    For the n = 2k+1 length-2 legs:
      j in [1, k+1]:    f(xu_j) = 2j-1,      f(u_j) = 3k+3-j
      j in [k+2, 2k+1]: f(xu_j) = 2(j-k-1),  f(u_j) = 5k+4-j
      all j:            f(u_jv_j) = 6k+4-j,  f(v_j) = 2m+6k+3+j
    For the leaves: f(xy_i) = 6k+3+i, f(y_i) = 2m+6k+4-i, and f(x) = 2m+8k+5.
    Column sums: f(xu_j)+f(u_j)+f(u_jv_j) = 9k+6 and
    f(u_jv_j)+f(v_j) = f(xy_i)+f(y_i) = 2m+12k+7, giving weight classes
    w(u_j) = 9k+6, w(y_i) = w(v_j) = 2m+12k+7 and
    w(x) = m(m+12k+7)/2 + 2m + 2k^2 + 11k + 6.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    n = 2 * k + 1
    graph = build_spider(SpiderSpec.of(m, n), allow_degenerate=True)
    x = graph.id_of("x")
    vl = {x: 2 * m + 8 * k + 5}
    el = {}
    for j in range(1, n + 1):
        u = graph.id_of(f"u{j}")
        v = graph.id_of(f"v{j}")
        if j <= k + 1:
            el[edge_key(x, u)] = 2 * j - 1
            vl[u] = 3 * k + 3 - j
        else:
            el[edge_key(x, u)] = 2 * (j - k - 1)
            vl[u] = 5 * k + 4 - j
        el[edge_key(u, v)] = 6 * k + 4 - j
        vl[v] = 2 * m + 6 * k + 3 + j
    for i in range(1, m + 1):
        y = graph.id_of(f"y{i}")
        el[edge_key(x, y)] = 6 * k + 3 + i
        vl[y] = 2 * m + 6 * k + 4 - i
    return graph, TotalLabeling(vl, el, label_bound=2 * m + 8 * k + 5)


def label_sp2_odd(k: int) -> tuple[Graph, TotalLabeling]:
    """3-weight labeling of Sp(2^[2k+1]), the m = 0 specialization of the
    odd-leg-count table in :func:`label_spider_case1`.

    Weight classes: w(u_j) = 9k+6, w(v_j) = 12k+7, w(x) = 2k^2+11k+6.
    Rejects k = 1, where 2k^2+11k+6 = 12k+7 collapses the center weight into
    the leaf class (2k^2-k-1 = 0 exactly at k = 1).
    """
    if k < 2:
        raise ValueError(
            "k must be >= 2 (at k=1 the center weight 2k^2+11k+6 equals the leaf weight 12k+7)"
        )
    n = 2 * k + 1
    graph = build_spider(SpiderSpec.of(0, n))
    x = graph.id_of("x")
    vl = {x: 8 * k + 5}
    el = {}
    for j in range(1, n + 1):
        u = graph.id_of(f"u{j}")
        v = graph.id_of(f"v{j}")
        if j <= k + 1:
            el[edge_key(x, u)] = 2 * j - 1
            vl[u] = 3 * k + 3 - j
        else:
            el[edge_key(x, u)] = 2 * (j - k - 1)
            vl[u] = 5 * k + 4 - j
        el[edge_key(u, v)] = 6 * k + 4 - j
        vl[v] = 6 * k + 3 + j
    return graph, TotalLabeling(vl, el, label_bound=8 * k + 5)


def label_spider_case2(m: int, k: int) -> tuple[Graph, TotalLabeling]:
    """3-weight labeling of Sp(1^[m], 2^[2k]) using labels [1, 2m+8k+1].

    For the n = 2k length-2 legs:
      j in [1, k]:     f(u_j) = 2j-1,    f(xu_j) = 2m+8k+2-j,
                       f(u_jv_j) = 3k+1-j, f(v_j) = 2m+5k+j
      j in [k+1, 2k]:  f(u_j) = 2(j-k),  f(xu_j) = 2m+8k+1-j,
                       f(u_jv_j) = 5k+1-j, f(v_j) = 2m+3k+j
    For the leaves: f(y_i) = 4k+i, f(xy_i) = 2m+4k+1-i, and f(x) = 2m+7k+1.
    Column sums: f(u_j)+f(xu_j)+f(u_jv_j) = 2m+11k+2 and
    f(u_jv_j)+f(v_j) = f(y_i)+f(xy_i) = 2m+8k+1, giving weight classes
    w(u_j) = 2m+11k+2, w(y_i) = w(v_j) = 2m+8k+1 and
    w(x) = (2m+7k+1) + m(3m+8k+1)/2 + k(4m+14k+2).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 2 * k
    graph = build_spider(SpiderSpec.of(m, n), allow_degenerate=True)
    x = graph.id_of("x")
    vl = {x: 2 * m + 7 * k + 1}
    el = {}
    for j in range(1, n + 1):
        u = graph.id_of(f"u{j}")
        v = graph.id_of(f"v{j}")
        if j <= k:
            vl[u] = 2 * j - 1
            el[edge_key(x, u)] = 2 * m + 8 * k + 2 - j
            el[edge_key(u, v)] = 3 * k + 1 - j
            vl[v] = 2 * m + 5 * k + j
        else:
            vl[u] = 2 * (j - k)
            el[edge_key(x, u)] = 2 * m + 8 * k + 1 - j
            el[edge_key(u, v)] = 5 * k + 1 - j
            vl[v] = 2 * m + 3 * k + j
    for i in range(1, m + 1):
        y = graph.id_of(f"y{i}")
        vl[y] = 4 * k + i
        el[edge_key(x, y)] = 2 * m + 4 * k + 1 - i
    return graph, TotalLabeling(vl, el, label_bound=2 * m + 8 * k + 1)


def label_star(m: int) -> tuple[Graph, TotalLabeling]:
    """2-weight labeling of the star Sp(1^[m]): f(x) = 2m+1, f(xy_i) = i,
    f(y_i) = 2m+1-i, so w(y_i) = 2m+1 and w(x) = 2m+1 + m(m+1)/2."""
    if m < 3:
        raise ValueError("m must be >= 3")
    graph = build_spider(SpiderSpec.of(m, 0))
    x = graph.id_of("x")
    vl = {x: 2 * m + 1}
    el = {}
    for i in range(1, m + 1):
        y = graph.id_of(f"y{i}")
        el[edge_key(x, y)] = i
        vl[y] = 2 * m + 1 - i
    return graph, TotalLabeling(vl, el, label_bound=2 * m + 1)


def partial_path_labeling(n: int) -> tuple[Graph, PartialTotalLabeling]:
    """Partial labeling of P_n (n even, >= 6) leaving u1 unlabeled.

    f(u_i) = 2n-i for odd i >= 3, 2n-2-i for even i != n, and 2n-2 for i = n;
    f(u_i u_{i+1}) = (i+1)/2 for odd i, (n+i)/2 for even i. The assigned
    labels biject onto [1, 2n-2] and the weights are w(u_i) = 5n/2 for odd
    i >= 3 and 5n/2 - 2 for even i, while w(u1) stays undefined.
    """
    if n < 6 or n % 2:
        raise ValueError("n must be even and >= 6")
    graph = build_path(n)
    vl = {}
    el = {}
    for i in range(2, n + 1):
        u = graph.id_of(f"u{i}")
        if i % 2 == 1:
            vl[u] = 2 * n - i
        elif i != n:
            vl[u] = 2 * n - 2 - i
        else:
            vl[u] = 2 * n - 2
    for i in range(1, n):
        key = edge_key(graph.id_of(f"u{i}"), graph.id_of(f"u{i + 1}"))
        el[key] = (i + 1) // 2 if i % 2 == 1 else (n + i) // 2
    return graph, PartialTotalLabeling(vl, el, label_bound=2 * n - 2)


def _check_merge_params(a: int, n: int, min_b: int) -> int:
    if a < 3 or a % 2 == 0:
        raise ValueError("a must be odd and >= 3")
    if n % 2:
        raise ValueError("n must be even")
    b = n - a - 1
    if b < min_b:
        raise ValueError(f"need b = n-a-1 >= {min_b}")
    return b


def label_unicyclic(a: int, n: int) -> tuple[Graph, TotalLabeling]:
    """3-weight labeling of the one-point union of C_a (a odd) and a path
    with b = n-a-1 >= 2 edges, obtained by merging u1 of the partially
    labeled P_n into u(a+1).

    The merge adds f(u1u2) = 1 to the weight of u(a+1), so the colors are
    exactly {5n/2 - 2, 5n/2 - 1, 5n/2} and the labels biject onto [1, 2n-2]
    (u1 carried no label, so nothing is lost).
    """
    b = _check_merge_params(a, n, min_b=2)
    path, partial = partial_path_labeling(n)
    merged = build_tadpole(a, b)

    def target(name: str) -> str:
        return f"u{a + 1}" if name == "u1" else name

    vl = {
        merged.id_of(path.name_of(v)): label
        for v, label in partial.vertex_labels.items()
    }
    el = {}
    for (s, t) in path.edges:
        key = edge_key(merged.id_of(target(path.name_of(s))), merged.id_of(target(path.name_of(t))))
        el[key] = partial.edge_labels[edge_key(s, t)]
    return merged, TotalLabeling(vl, el, label_bound=2 * n - 2)


def label_bicyclic(a: int, n: int) -> tuple[Graph, TotalLabeling]:
    """3-weight labeling of the one-point union of C_a (a odd) and C_b with
    b = n-a-1 >= 4 even, obtained by merging both u1 and u_n of the partially
    labeled P_n into u(a+1), after dropping the vertex label of u_n.

    The merged vertex gains f(u1u2) = 1 and f(u_{n-1}u_n) = n/2 on top of
    5n/2 - 2, so its weight is 3n-1; the dropped label was 2n-2, leaving a
    bijection onto [1, 2n-3]. Colors: {5n/2 - 2, 5n/2, 3n-1}.
    """
    b = _check_merge_params(a, n, min_b=4)
    path, partial = partial_path_labeling(n)
    merged = build_two_cycles(a, b)

    def target(name: str) -> str:
        return f"u{a + 1}" if name in ("u1", f"u{n}") else name

    vl = {}
    for v, label in partial.vertex_labels.items():
        name = path.name_of(v)
        if name == f"u{n}":
            continue
        vl[merged.id_of(name)] = label
    el = {}
    for (s, t) in path.edges:
        key = edge_key(merged.id_of(target(path.name_of(s))), merged.id_of(target(path.name_of(t))))
        el[key] = partial.edge_labels[edge_key(s, t)]
    return merged, TotalLabeling(vl, el, label_bound=2 * n - 3)


# Registry used by the CLI "construct" and "table" subcommands.
CONSTRUCTIONS: dict[str, tuple[tuple[str, ...], object]] = {
    "sp2-even": (("k",), label_sp2_even),
    "sp2-odd": (("k",), label_sp2_odd),
    "case1": (("m", "k"), label_spider_case1),
    "case2": (("m", "k"), label_spider_case2),
    "star": (("m",), label_star),
    "unicyclic": (("a", "n"), label_unicyclic),
    "bicyclic": (("a", "n"), label_bicyclic),
}
