"""Counting bounds that rule out 2-weight labelings, plus the exact
chromatic lower bound (any local antimagic total labeling induces a proper
coloring, so the distinct-weight count is at least the chromatic number).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, is_bipartite

RULED_OUT = "ruled_out"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BoundReport:
    """Feasibility verdict of one counting bound: ruled_out iff value_h > 0."""

    bound_name: str
    value_h: int
    verdict: str


def _report(name: str, h: int) -> BoundReport:
    return BoundReport(bound_name=name, value_h=h, verdict=RULED_OUT if h > 0 else INCONCLUSIVE)


def sp2_two_color_bound(n: int) -> BoundReport:
    """Feasibility of a 2-weight labeling of Sp(2^[n]).

    In a 2-weight labeling the center weight equals every leaf weight, so it
    is at least the sum of the n+1 smallest labels yet at most the mean of
    the top 2n labels taken in leaf pairs. Eliminating the intermediate
    averages leaves the polynomial h = n^2 - 9n - 4, and h > 0 (i.e. n >= 10)
    rules the 2-weight labeling out.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    return _report("sp2", n * n - 9 * n - 4)


def spider_h(m: int, n: int) -> BoundReport:
    """Feasibility of a 2-weight labeling of Sp(1^[m], 2^[n]).

    Same averaging argument as :func:`sp2_two_color_bound` with m extra
    leaves: h = (m+n)^2 - 5(m+n) - 4(n+1); h > 0 rules the labeling out,
    h = 0 stays inconclusive.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    if m + n < 3:
        raise ValueError("need m + n >= 3")
    s = m + n
    return _report("spider-h", s * s - 5 * s - 4 * (n + 1))


def set_A_membership() -> tuple[tuple[int, int], ...]:
    """All (m, n) with m, n >= 1 whose 2-weight feasibility survives the
    h-bound, computed by sweeping m+n <= 9 (h > 0 for every m+n >= 10)."""
    members = []
    for s in range(3, 10):
        for m in range(1, s):
            n = s - m
            if spider_h(m, n).verdict == INCONCLUSIVE:
                members.append((m, n))
    return tuple(sorted(members, key=lambda mn: (mn[0] + mn[1], mn[0])))


def chi_lower(graph: Graph) -> int:
    """Exact chromatic number of a small graph.

    Bipartite graphs (all trees, even cycles, even-cycle unions) give 2;
    anything else is settled by a complete k-coloring search, limited to
    p <= 20.
    """
    if graph.q == 0:
        return 1
    if is_bipartite(graph):
        return 2
    if graph.p > 20:
        raise ValueError("exact coloring is limited to p <= 20 for non-bipartite graphs")
    for c in range(3, graph.p + 1):
        if _colorable(graph, c):
            return c
    return graph.p


def _colorable(graph: Graph, c: int) -> bool:
    order = sorted(graph.vertices, key=lambda v: (-graph.degree(v), v))
    colors: dict[int, int] = {}

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        limit = min(c, used + 1)  # new colors introduced in ascending order
        for col in range(limit):
            if any(colors.get(u) == col for u in graph.neighbors(v)):
                continue
            colors[v] = col
            if assign(i + 1, max(used, col + 1)):
                return True
            del colors[v]
        return False

    return assign(0, 0)
