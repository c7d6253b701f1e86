"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; plain ``pytest -v`` shows the same verdicts as test outcomes.
"""

import json
import time

from latlab import (
    INCONCLUSIVE,
    SearchBudget,
    SearchStatus,
    SpiderSpec,
    build_cycle,
    build_path,
    build_spider,
    build_tadpole,
    build_two_cycles,
    check_certificate,
    color_set,
    exact_chi_lat,
    label_bicyclic,
    label_sp2_even,
    label_spider_case1,
    label_spider_case2,
    label_unicyclic,
    make_certificate,
    read_certificate,
    set_A_membership,
    sp2_two_color_bound,
    spider_two_labeling,
    verify,
    weight_profile,
    write_certificate,
)
from naive_oracle import naive_chi_lat

SET_A_PAIRS = {
    (1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (1, 4), (2, 3), (3, 2), (4, 1),
    (5, 1), (4, 2), (3, 3), (2, 4), (1, 5), (4, 3), (3, 4), (2, 5), (1, 6),
    (3, 5), (2, 6), (1, 7), (1, 8),
}


def report(num: int, ok: bool, elapsed: float, detail: str) -> None:
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {detail}")


def criterion_1_certs():
    return [(f"sp2-even k={k}", *label_sp2_even(k)) for k in range(5, 31)]


def criterion_2_certs():
    out = []
    for m in range(1, 13):
        for k in range(0, 11):
            if m + (2 * k + 1) >= 3:
                out.append((f"case1 m={m} k={k}", *label_spider_case1(m, k)))
        for k in range(1, 11):
            out.append((f"case2 m={m} k={k}", *label_spider_case2(m, k)))
    return out


def criterion_3_certs():
    out = []
    for a in range(3, 16, 2):
        for b in range(2, 17, 2):
            out.append((f"unicyclic a={a} n={a + b + 1}", *label_unicyclic(a, a + b + 1)))
        for b in range(4, 17, 2):
            out.append((f"bicyclic a={a} n={a + b + 1}", *label_bicyclic(a, a + b + 1)))
    return out


def test_criterion_1_even_spider_grid():
    start = time.perf_counter()
    ok = True
    for k in range(5, 31):
        graph, labeling = label_sp2_even(k)
        rep = verify(graph, labeling)
        expected = tuple(sorted({9 * k + 3, 12 * k + 3, 2 * k * k + 4 * k + 1}))
        ok &= rep.bijective and rep.proper and color_set(graph, labeling) == expected
    elapsed = time.perf_counter() - start
    ok &= elapsed < 2.0
    report(1, ok, elapsed, "sp2-even k=5..30: colors {9k+3, 12k+3, 2k^2+4k+1}, runtime < 2s")
    assert ok


def test_criterion_2_mixed_spider_grids():
    start = time.perf_counter()
    ok = True
    for m in range(1, 13):
        for k in range(0, 11):  # n odd in [1, 21]
            if m + (2 * k + 1) < 3:
                continue
            graph, labeling = label_spider_case1(m, k)
            rep = verify(graph, labeling)
            profile = weight_profile(graph, labeling)
            wx = m * (m + 12 * k + 7) // 2 + 2 * m + 2 * k * k + 11 * k + 6
            ok &= rep.bijective and rep.proper and rep.color_count <= 3
            ok &= profile.weights[graph.id_of("x")] == wx
            ok &= all(
                profile.weights[graph.id_of(f"u{j}")] == 9 * k + 6
                and profile.weights[graph.id_of(f"v{j}")] == 2 * m + 12 * k + 7
                for j in range(1, 2 * k + 2)
            )
            ok &= all(
                profile.weights[graph.id_of(f"y{i}")] == 2 * m + 12 * k + 7
                for i in range(1, m + 1)
            )
        for k in range(1, 11):  # n even in [2, 20]
            graph, labeling = label_spider_case2(m, k)
            rep = verify(graph, labeling)
            profile = weight_profile(graph, labeling)
            wx = (2 * m + 7 * k + 1) + m * (3 * m + 8 * k + 1) // 2 + k * (4 * m + 14 * k + 2)
            ok &= rep.bijective and rep.proper and rep.color_count <= 3
            ok &= profile.weights[graph.id_of("x")] == wx
            ok &= all(
                profile.weights[graph.id_of(f"u{j}")] == 2 * m + 11 * k + 2
                and profile.weights[graph.id_of(f"v{j}")] == 2 * m + 8 * k + 1
                for j in range(1, 2 * k + 1)
            )
            ok &= all(
                profile.weights[graph.id_of(f"y{i}")] == 2 * m + 8 * k + 1
                for i in range(1, m + 1)
            )
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    report(2, ok, elapsed, "case1/case2 grids m<=12, n<=21: class weights exact, runtime < 5s")
    assert ok


def test_criterion_3_merge_constructions():
    start = time.perf_counter()
    ok = True
    for a in range(3, 16, 2):
        for b in range(2, 17, 2):
            n = a + b + 1
            graph, labeling = label_unicyclic(a, n)
            rep = verify(graph, labeling)
            ok &= rep.bijective and rep.proper
            ok &= color_set(graph, labeling) == (5 * n // 2 - 2, 5 * n // 2 - 1, 5 * n // 2)
            ok &= sorted(labeling.all_labels()) == list(range(1, 2 * n - 1))
        for b in range(4, 17, 2):
            n = a + b + 1
            graph, labeling = label_bicyclic(a, n)
            rep = verify(graph, labeling)
            ok &= rep.bijective and rep.proper
            ok &= color_set(graph, labeling) == tuple(
                sorted({5 * n // 2 - 2, 5 * n // 2, 3 * n - 1})
            )
            ok &= sorted(labeling.all_labels()) == list(range(1, 2 * n - 2))
    elapsed = time.perf_counter() - start
    report(3, ok, elapsed, "merges a=3..15: unicyclic onto [1,2n-2], bicyclic onto [1,2n-3]")
    assert ok


def test_criterion_4_bounds():
    start = time.perf_counter()
    ok = True
    for n in range(3, 41):
        ok &= (sp2_two_color_bound(n).verdict == INCONCLUSIVE) == (n <= 9)
    members = set_A_membership()
    ok &= len(members) == 22 and set(members) == SET_A_PAIRS
    elapsed = time.perf_counter() - start
    report(4, ok, elapsed, "sp2 bound inconclusive iff n<=9; set A = 22-pair enumeration")
    assert ok


def test_criterion_5_solver_small_cases():
    start = time.perf_counter()
    ok = True
    cases = [(build_path(n), chi) for n, chi in [(2, 2), (3, 2), (4, 3), (5, 2), (6, 2)]]
    cases.append((build_spider(SpiderSpec.of(3, 0)), 2))
    for graph, expected in cases:
        result = exact_chi_lat(graph, SearchBudget(max_time=60.0), threads=1)
        ok &= result.chi_lat == expected and result.elapsed < 60.0
        rep, claims = check_certificate(result.witness)
        ok &= rep.bijective and rep.proper and claims
    elapsed = time.perf_counter() - start
    report(5, ok, elapsed, "exact chi_lat: P2..P6 -> (2,2,3,2,2), Sp(1^3) -> 2, witnesses verify")
    assert ok


def small_builder_graphs():
    """Every connected graph the builders produce with p+q <= 9."""
    graphs = []
    for n in range(2, 6):
        graphs.append((f"P{n}", build_path(n)))
    for n in (3, 4):
        graphs.append((f"C{n}", build_cycle(n)))
    for m in range(0, 5):
        for n in range(0, 3):
            if m + n >= 3 and 2 * m + 4 * n + 1 <= 9:
                graphs.append((f"Sp(1^{m},2^{n})", build_spider(SpiderSpec.of(m, n))))
    for a in range(3, 5):
        for b in range(1, 3):
            if 2 * (a + b) <= 9:
                graphs.append((f"tadpole({a},{b})", build_tadpole(a, b)))
    for a in range(3, 5):
        for b in range(3, 5):
            if 2 * (a + b) - 1 <= 9:
                graphs.append((f"twocycles({a},{b})", build_two_cycles(a, b)))
    return graphs


def test_criterion_6_solver_vs_oracle():
    start = time.perf_counter()
    ok = True
    checked = 0
    for name, graph in small_builder_graphs():
        expected = naive_chi_lat(graph)
        result = exact_chi_lat(graph, SearchBudget(max_time=120.0), threads=1)
        ok &= result.chi_lat == expected
        checked += 1
    elapsed = time.perf_counter() - start
    ok &= elapsed < 600.0
    report(6, ok, elapsed, f"exact chi_lat equals full-enumeration oracle on {checked} graphs (p+q<=9)")
    assert ok


def test_criterion_7_structured_spider_search():
    start = time.perf_counter()
    ok = True
    budget = lambda: SearchBudget(max_nodes=10**9, max_time=600.0)
    for n in (3, 4, 5):
        result = spider_two_labeling(0, n, budget())
        rep, claims = check_certificate(result.certificate) if result.certificate else (None, False)
        ok &= result.status is SearchStatus.FOUND and rep.ok and claims
        ok &= result.certificate.claimed_color_count == 2
    for n in (6, 7, 8, 9):  # stretch targets, same 10-minute budget each
        result = spider_two_labeling(0, n, budget())
        ok &= result.status is SearchStatus.FOUND
        rep, claims = check_certificate(result.certificate)
        ok &= rep.ok and claims and result.certificate.claimed_color_count == 2
    for m, n in ((4, 1), (5, 1)):
        result = spider_two_labeling(m, n, budget())
        ok &= result.status is SearchStatus.EXHAUSTED
    elapsed = time.perf_counter() - start
    report(7, ok, elapsed, "2-labelings of Sp(2^[3..9]) found; (4,1), (5,1) nonexistent by exhaustion")
    assert ok


def test_criterion_8_certificate_round_trips():
    start = time.perf_counter()
    ok = True
    count = 0
    for provenance, graph, labeling in (
        criterion_1_certs() + criterion_2_certs() + criterion_3_certs()
    ):
        cert = make_certificate(graph, labeling, provenance=provenance)
        text = write_certificate(cert)
        again = read_certificate(text)
        ok &= again == cert and write_certificate(again) == text
        payload = json.loads(text)
        keys = list(payload["edge_labels"])
        payload["edge_labels"][keys[0]] = payload["edge_labels"][keys[1]]
        tampered_report, tampered_claims = check_certificate(read_certificate(json.dumps(payload)))
        ok &= not (tampered_report.bijective and tampered_report.proper and tampered_claims)
        count += 1
    elapsed = time.perf_counter() - start
    report(8, ok, elapsed, f"byte-identical round-trip and tamper detection on {count} certificates")
    assert ok
