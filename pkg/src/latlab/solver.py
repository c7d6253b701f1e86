"""Exact solvers for local antimagic total labelings.

Two engines:

* a generic depth-first engine over bijections V u E -> [1, p+q] for graphs
  with p+q up to a small hard cap. Items are ordered so that edges incident
  to high-degree vertices come first and vertex weights finalize as early as
  possible; branches are cut when a finalized weight ties an adjacent
  finalized weight or when the number of distinct finalized weights exceeds
  the target color count.

* a structure-aware engine for 2-weight labelings of spiders
  Sp(1^[m], 2^[n]). A 2-weight labeling forces the bipartition weights
  W1 = w(x) = w(v_j) and W2 = w(y_i) = w(u_j), so instead of raw bijections
  the search enumerates W1 (bounded below by the sum of the m+n+1 smallest
  labels and above by the mean of the top 2n labels), the center support
  set, the (u_jv_j, v_j) pairs, and finally an exact matching of the
  remaining labels into leaf pairs and leg triples. Nonexistence is reported
  only after this space is exhausted, and every witness is re-verified
  before it is returned.

Searches are deterministic for a fixed thread count of 1: same inputs, same
nodes_explored, same witness. With more threads the verdict is unchanged but
node counts may vary.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .bounds import chi_lower
from .certio import Certificate, make_certificate
from .graphs import Graph, SpiderSpec, build_spider, edge_key
from .labeling import TotalLabeling, verify


class SearchStatus(Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits; exceeding either yields an explicit
    budget_exceeded/unknown outcome, never a wrong answer."""

    max_nodes: int = 10**9
    max_time: float = 60.0


class BudgetExceeded(Exception):
    pass


class _Cancelled(Exception):
    pass


class _BudgetClock:
    """Shared node/time accounting, thread-safe; nodes are charged in batches."""

    def __init__(self, budget: SearchBudget):
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.max_time
        self.nodes = 0
        self._lock = threading.Lock()

    def charge(self, n: int) -> None:
        if n:
            with self._lock:
                self.nodes += n
                over = self.nodes > self.max_nodes
            if over:
                raise BudgetExceeded
        if time.monotonic() > self.deadline:
            raise BudgetExceeded

    def check(self) -> None:
        if self.nodes > self.max_nodes or time.monotonic() > self.deadline:
            raise BudgetExceeded


class _Ticker:
    """Per-branch node counter flushing to the shared clock every few nodes."""

    BATCH = 128

    def __init__(self, clock: _BudgetClock):
        self.clock = clock
        self.pending = 0

    def tick(self) -> None:
        self.pending += 1
        if self.pending >= self.BATCH:
            clock_pending, self.pending = self.pending, 0
            self.clock.charge(clock_pending)

    def close(self) -> None:
        clock_pending, self.pending = self.pending, 0
        self.clock.charge(clock_pending)


@dataclass(frozen=True)
class LevelResult:
    """Outcome of a fixed-color-count search."""

    status: SearchStatus
    certificate: Certificate | None
    nodes_explored: int
    elapsed: float


@dataclass(frozen=True)
class SolveResult:
    """Exact chromatic outcome; chi_lat is None when the budget ran out."""

    chi_lat: int | None
    witness: Certificate | None
    exhausted: bool
    nodes_explored: int
    elapsed: float


@dataclass(frozen=True)
class SpiderSearchResult:
    """Outcome of the structured 2-weight search on Sp(1^[m], 2^[n])."""

    status: SearchStatus
    certificate: Certificate | None
    w1_range: tuple[int, int]
    nodes_explored: int
    elapsed: float
    resume_state: dict | None

    @property
    def nonexistent(self) -> bool:
        return self.status is SearchStatus.EXHAUSTED


DEFAULT_HARD_CAP = 16


def _item_order(graph: Graph) -> list[tuple[str, object]]:
    """Edges incident to high-degree vertices first, then the vertex itself,
    so weights finalize as early as possible (immediately on trees)."""
    order: list[tuple[str, object]] = []
    placed: set = set()
    for v in sorted(graph.vertices, key=lambda u: (-graph.degree(u), u)):
        for _, key in graph.adjacency[v]:
            if key not in placed:
                placed.add(key)
                order.append(("e", key))
        order.append(("v", v))
    return order


def _branch(graph, c, clock, first_labels, cancel, prune_ties, prune_colors):
    """One depth-first branch; returns ('found', labeling) / ('exhausted', None)
    / ('budget', None) / ('cancelled', None)."""
    p = graph.p
    n_total = p + graph.q
    vidx = {v: i for i, v in enumerate(graph.vertices)}
    items = _item_order(graph)
    touches = []
    for kind, payload in items:
        if kind == "v":
            touches.append((vidx[payload],))
        else:
            a, b = payload
            touches.append((vidx[a], vidx[b]))
    adj = [tuple(vidx[u] for u, _ in graph.adjacency[v]) for v in graph.vertices]
    edge_pairs = [(vidx[a], vidx[b]) for a, b in graph.edges]
    wsum = [0] * p
    pending = [graph.degree(v) + 1 for v in graph.vertices]
    color_count: dict[int, int] = {}
    used = [False] * (n_total + 1)
    assignment = [0] * len(items)
    ticker = _Ticker(clock)
    solution: list[int] | None = None

    def leaf_ok() -> bool:
        if not prune_ties:
            for ia, ib in edge_pairs:
                if wsum[ia] == wsum[ib]:
                    return False
        if not prune_colors and len(color_count) > c:
            return False
        return True

    def dfs(pos: int) -> bool:
        nonlocal solution
        if cancel is not None and cancel.is_set():
            raise _Cancelled
        if pos == len(items):
            if leaf_ok():
                solution = assignment[:]
                return True
            return False
        touch = touches[pos]
        labels = first_labels if (pos == 0 and first_labels is not None) else range(1, n_total + 1)
        for lab in labels:
            if used[lab]:
                continue
            ticker.tick()
            used[lab] = True
            assignment[pos] = lab
            applied = 0
            finalized: list[int] = []
            ok = True
            for vi in touch:
                wsum[vi] += lab
                pending[vi] -= 1
                applied += 1
                if pending[vi] == 0:
                    w = wsum[vi]
                    if prune_ties:
                        for nb in adj[vi]:
                            if pending[nb] == 0 and wsum[nb] == w:
                                ok = False
                                break
                    if ok:
                        cnt = color_count.get(w, 0)
                        if prune_colors and cnt == 0 and len(color_count) >= c:
                            ok = False
                        else:
                            color_count[w] = cnt + 1
                            finalized.append(vi)
                if not ok:
                    break
            if ok and dfs(pos + 1):
                return True
            for vi in finalized:
                w = wsum[vi]
                cnt = color_count[w]
                if cnt == 1:
                    del color_count[w]
                else:
                    color_count[w] = cnt - 1
            for vi in touch[:applied]:
                wsum[vi] -= lab
                pending[vi] += 1
            used[lab] = False
        return False

    try:
        found = dfs(0)
    except BudgetExceeded:
        return "budget", None
    except _Cancelled:
        try:
            ticker.close()
        except BudgetExceeded:
            pass
        return "cancelled", None
    try:
        ticker.close()
    except BudgetExceeded:
        # The search already completed; only the final node-count flush
        # overdrew, so the verdict stands.
        pass
    if not found:
        return "exhausted", None
    vl = {}
    el = {}
    for (kind, payload), lab in zip(items, solution):
        if kind == "v":
            vl[payload] = lab
        else:
            el[payload] = lab
    return "found", TotalLabeling(vl, el, label_bound=n_total)


def _run_level(graph, c, clock, threads, prune_ties, prune_colors):
    n_total = graph.p + graph.q
    if threads <= 1:
        return _branch(graph, c, clock, None, None, prune_ties, prune_colors)
    width = min(threads, n_total)
    groups: list[list[int]] = [[] for _ in range(width)]
    for i, lab in enumerate(range(1, n_total + 1)):
        groups[i % width].append(lab)
    cancel = threading.Event()
    lock = threading.Lock()
    winner: list = []

    def work(labels):
        status, labeling = _branch(graph, c, clock, labels, cancel, prune_ties, prune_colors)
        if status == "found":
            with lock:
                if not winner:
                    winner.append(labeling)
            cancel.set()
        return status

    with ThreadPoolExecutor(max_workers=width) as pool:
        statuses = list(pool.map(work, groups))
    if winner:
        return "found", winner[0]
    if any(s == "budget" for s in statuses):
        return "budget", None
    return "exhausted", None


def _certify(graph: Graph, labeling: TotalLabeling, max_colors: int | None) -> Certificate:
    # Soundness gate: no witness leaves the solver unverified.
    report = verify(graph, labeling)
    if not (report.bijective and report.proper):
        raise RuntimeError("internal error: search produced an invalid labeling")
    if max_colors is not None and report.color_count > max_colors:
        raise RuntimeError("internal error: search exceeded the color budget")
    return make_certificate(graph, labeling, provenance="solver")


def find_labeling_with_colors(
    graph: Graph,
    c: int,
    budget: SearchBudget | None = None,
    *,
    threads: int = 1,
    hard_cap: int = DEFAULT_HARD_CAP,
    prune_ties: bool = True,
    prune_colors: bool = True,
) -> LevelResult:
    """Complete search for a total labeling with at most c distinct weights.

    EXHAUSTED means the whole space was covered and no such labeling exists;
    BUDGET_EXCEEDED makes no claim. The pruning flags exist for differential
    testing: disabling a rule moves its check to the leaves, which never
    changes the verdict, only nodes_explored.
    """
    if c < 1:
        raise ValueError("c must be >= 1")
    total = graph.p + graph.q
    if total > hard_cap:
        raise ValueError(
            f"p+q={total} exceeds the generic engine cap ({hard_cap}); "
            "use the structured spider solver (spider_two_labeling) for larger spiders"
        )
    clock = _BudgetClock(budget or SearchBudget())
    start = time.perf_counter()
    status, labeling = _run_level(graph, c, clock, threads, prune_ties, prune_colors)
    elapsed = time.perf_counter() - start
    if status == "found":
        cert = _certify(graph, labeling, c)
        return LevelResult(SearchStatus.FOUND, cert, clock.nodes, elapsed)
    if status == "budget":
        return LevelResult(SearchStatus.BUDGET_EXCEEDED, None, clock.nodes, elapsed)
    return LevelResult(SearchStatus.EXHAUSTED, None, clock.nodes, elapsed)


def exact_chi_lat(
    graph: Graph,
    budget: SearchBudget | None = None,
    *,
    threads: int = 1,
    hard_cap: int = DEFAULT_HARD_CAP,
) -> SolveResult:
    """Exact minimum number of distinct weights over all local antimagic total
    labelings, by iterating the color count upward from the chromatic number.

    The witness always verifies with exactly chi_lat colors; chi_lat is None
    with exhausted=False when the budget ran out first.
    """
    total = graph.p + graph.q
    if total > hard_cap:
        raise ValueError(
            f"p+q={total} exceeds the generic engine cap ({hard_cap}); "
            "use the structured spider solver (spider_two_labeling) for larger spiders"
        )
    clock = _BudgetClock(budget or SearchBudget())
    start = time.perf_counter()
    for c in range(chi_lower(graph), graph.p + 1):
        status, labeling = _run_level(graph, c, clock, threads, True, True)
        elapsed = time.perf_counter() - start
        if status == "found":
            cert = _certify(graph, labeling, c)
            if cert.claimed_color_count != c:
                raise RuntimeError("internal error: witness color count below an exhausted level")
            return SolveResult(c, cert, True, clock.nodes, elapsed)
        if status == "budget":
            return SolveResult(None, None, False, clock.nodes, elapsed)
    # No labeling at any feasible color count; unreachable for the supported
    # families but kept as an honest exhaustion outcome.
    return SolveResult(None, None, True, clock.nodes, time.perf_counter() - start)


def spider_weight_bounds(m: int, n: int) -> tuple[int, int]:
    """Inclusive W1 candidate range for a 2-weight labeling of Sp(1^[m], 2^[n]).

    W1 = w(x) sums m+n+1 distinct labels, so W1 >= (m+n+1)(m+n+2)/2; and
    n*W1 = sum of the n (u_jv_j, v_j) pairs <= sum of the 2n largest labels,
    so W1 <= 4m+6n+3. The range is empty exactly when the h-bound rules a
    2-weight labeling out.
    """
    return (m + n + 1) * (m + n + 2) // 2, 4 * m + 6 * n + 3


class _Found(Exception):
    def __init__(self, payload):
        self.payload = payload


def _spider_search_w1(m: int, n: int, w1: int, clock: _BudgetClock):
    """Exhaust one W1 candidate; returns a witness payload or None."""
    big_n = 2 * m + 4 * n + 1
    classes = m + n
    ticker = _Ticker(clock)
    in_sx = [False] * (big_n + 1)
    sx: list[int] = []

    def stage_match(c_labels, uv_sel, sum_rest, sum_uv):
        # For each choice of f(x), the class-2 weight W2 is forced:
        # classes * W2 = sum(C') + (W1 - f(x)) + sum(uv), since every
        # class-2 weight consumes its own label(s) plus one x-edge label
        # and, for legs, the uv label.
        order = sorted(c_labels, reverse=True)
        for fx in sx:
            numerator = sum_rest + (w1 - fx) + sum_uv
            if numerator % classes:
                continue
            w2 = numerator // classes
            if w2 == w1:
                continue
            x_avail = set(sx)
            x_avail.discard(fx)
            uv_taken = [False] * n
            y_pairs: list[tuple[int, int]] = []
            legs: list[tuple[int, int, int, int]] = []

            def match(i: int) -> None:
                ticker.tick()
                if i == len(order):
                    raise _Found((fx, w2, list(y_pairs), list(legs)))
                c_label = order[i]
                if len(y_pairs) < m:
                    xy = w2 - c_label
                    if xy in x_avail:
                        x_avail.discard(xy)
                        y_pairs.append((c_label, xy))
                        match(i + 1)
                        y_pairs.pop()
                        x_avail.add(xy)
                if len(legs) < n:
                    for t in range(n):
                        if uv_taken[t]:
                            continue
                        uv = uv_sel[t]
                        xu = w2 - c_label - uv
                        if xu >= 1 and xu in x_avail:
                            uv_taken[t] = True
                            x_avail.discard(xu)
                            legs.append((c_label, xu, uv, w1 - uv))
                            match(i + 1)
                            legs.pop()
                            x_avail.add(xu)
                            uv_taken[t] = False

            match(0)

    def stage_pairs():
        comp = [v for v in range(1, big_n + 1) if not in_sx[v]]
        comp_set = set(comp)
        cand = [e for e in comp if 1 <= w1 - e <= big_n and w1 - e != e and (w1 - e) in comp_set]
        taken = set()
        uv_sel: list[int] = []

        def pick(idx: int, chosen: int, sum_uv: int) -> None:
            ticker.tick()
            if chosen == n:
                rest = [v for v in comp if v not in taken]
                stage_match(rest, uv_sel, sum(rest), sum_uv)
                return
            for i2 in range(idx, len(cand)):
                if len(cand) - i2 < n - chosen:
                    break
                e = cand[i2]
                v = w1 - e
                if e in taken or v in taken:
                    continue
                taken.add(e)
                taken.add(v)
                uv_sel.append(e)
                pick(i2 + 1, chosen + 1, sum_uv + e)
                uv_sel.pop()
                taken.discard(e)
                taken.discard(v)

        pick(0, 0, 0)

    def choose(start: int, r: int, target: int) -> None:
        ticker.tick()
        if r == 0:
            if target == 0:
                stage_pairs()
            return
        for v in range(start, big_n - r + 2):
            rest = target - v
            rm1 = r - 1
            lo_rest = rm1 * (v + 1) + rm1 * (rm1 - 1) // 2
            if lo_rest > rest:
                break
            hi_rest = rm1 * big_n - rm1 * (rm1 - 1) // 2
            if hi_rest < rest:
                continue
            sx.append(v)
            in_sx[v] = True
            choose(v + 1, rm1, rest)
            sx.pop()
            in_sx[v] = False

    try:
        choose(1, m + n + 1, w1)
    except _Found as hit:
        try:
            ticker.close()
        except BudgetExceeded:
            pass  # witness in hand stays valid
        return hit.payload
    try:
        ticker.close()
    except BudgetExceeded:
        # This W1 is fully exhausted; only the trailing flush overdrew. The
        # caller's per-candidate check stops the search before the next W1.
        pass
    return None


def _spider_certificate(m: int, n: int, payload) -> Certificate:
    fx, _w2, y_pairs, legs = payload
    big_n = 2 * m + 4 * n + 1
    graph = build_spider(SpiderSpec.of(m, n))
    x = graph.id_of("x")
    vl = {x: fx}
    el = {}
    for i, (y, xy) in enumerate(sorted(y_pairs), start=1):
        yid = graph.id_of(f"y{i}")
        vl[yid] = y
        el[edge_key(x, yid)] = xy
    for j, (u, xu, uv, v) in enumerate(sorted(legs, key=lambda leg: leg[2]), start=1):
        uid = graph.id_of(f"u{j}")
        vid = graph.id_of(f"v{j}")
        vl[uid] = u
        vl[vid] = v
        el[edge_key(x, uid)] = xu
        el[edge_key(uid, vid)] = uv
    labeling = TotalLabeling(vl, el, label_bound=big_n)
    report = verify(graph, labeling)
    if not (report.bijective and report.proper and report.color_count == 2):
        raise RuntimeError("internal error: structured search produced an invalid labeling")
    return make_certificate(graph, labeling, provenance="solver")


RESUME_KIND = "spider2-resume"


def spider_two_labeling(
    m: int,
    n: int,
    budget: SearchBudget | None = None,
    *,
    resume: dict | None = None,
) -> SpiderSearchResult:
    """Complete structured search for a 2-weight labeling of Sp(1^[m], 2^[n]).

    FOUND carries a verified certificate; EXHAUSTED is a nonexistence proof
    over the full structured space; BUDGET_EXCEEDED carries an opaque resume
    state (W1 candidates already exhausted) accepted by the ``resume``
    argument of a later call.
    """
    if m < 0 or n < 1 or m + n < 3:
        raise ValueError("need m >= 0, n >= 1 and m + n >= 3")
    done: set[int] = set()
    if resume is not None:
        if (
            not isinstance(resume, dict)
            or resume.get("format_version") != 1
            or resume.get("kind") != RESUME_KIND
            or resume.get("m") != m
            or resume.get("n") != n
            or not isinstance(resume.get("w1_done"), list)
        ):
            raise ValueError("resume state does not match this (m, n) search")
        done = set(resume["w1_done"])
    clock = _BudgetClock(budget or SearchBudget())
    start = time.perf_counter()
    lo, hi = spider_weight_bounds(m, n)
    hit = None
    try:
        for w1 in range(lo, hi + 1):
            if w1 in done:
                continue
            clock.check()
            payload = _spider_search_w1(m, n, w1, clock)
            if payload is not None:
                hit = payload
                break
            done.add(w1)
    except BudgetExceeded:
        state = {
            "format_version": 1,
            "kind": RESUME_KIND,
            "m": m,
            "n": n,
            "w1_done": sorted(done),
        }
        return SpiderSearchResult(
            SearchStatus.BUDGET_EXCEEDED,
            None,
            (lo, hi),
            clock.nodes,
            time.perf_counter() - start,
            state,
        )
    elapsed = time.perf_counter() - start
    if hit is not None:
        cert = _spider_certificate(m, n, hit)
        return SpiderSearchResult(SearchStatus.FOUND, cert, (lo, hi), clock.nodes, elapsed, None)
    return SpiderSearchResult(SearchStatus.EXHAUSTED, None, (lo, hi), clock.nodes, elapsed, None)
