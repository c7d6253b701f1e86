"""Weights, the verifier, and their invariants."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latlab import (
    IncompleteLabelingError,
    PartialTotalLabeling,
    Graph,
    SpiderSpec,
    TotalLabeling,
    build_path,
    build_spider,
    chi_lower,
    color_set,
    edge_key,
    label_sp2_even,
    label_spider_case2,
    label_star,
    partial_path_labeling,
    verify,
    weight,
    weight_profile,
)
from naive_oracle import naive_weight_map


def test_p2_weights_and_two_colors():
    g = build_path(2)
    u, v = g.id_of("u1"), g.id_of("u2")
    lab = TotalLabeling({u: 1, v: 2}, {edge_key(u, v): 3}, label_bound=3)
    assert weight(g, lab, u) == 4
    assert weight(g, lab, v) == 5
    # every one of the 3! bijections is proper with exactly 2 colors, so the
    # minimum over labelings is 2
    for fu, fv, fe in permutations([1, 2, 3]):
        lab2 = TotalLabeling({u: fu, v: fv}, {edge_key(u, v): fe}, label_bound=3)
        report = verify(g, lab2)
        assert report.bijective and report.proper and report.color_count == 2


def test_leaf_weight_two_term_sum():
    g = build_spider(SpiderSpec.of(0, 3))
    u1, v1 = g.id_of("u1"), g.id_of("v1")
    edges = {key: 10 + i for i, key in enumerate(g.edge_keys)}
    edges[edge_key(u1, v1)] = 3
    partial = PartialTotalLabeling({v1: 8}, edges, label_bound=20)
    assert weight(g, partial, v1) == 11


def test_partial_path_u1_undefined():
    g, partial = partial_path_labeling(6)
    assert weight(g, partial, g.id_of("u1")) is None


def test_weight_needs_incident_edge_labels():
    g = build_path(3)
    lab = PartialTotalLabeling(
        {g.id_of("u1"): 1},
        {edge_key(g.id_of("u1"), g.id_of("u2")): 2},
        label_bound=5,
    )
    with pytest.raises(IncompleteLabelingError):
        weight(g, lab, g.id_of("u2"))


def test_verify_construction_output():
    g, lab = label_sp2_even(5)
    report = verify(g, lab)
    assert report.bijective and report.proper and report.color_count == 3


def test_verify_reports_adjacent_tie():
    g = build_path(3)
    u1, u2, u3 = (g.id_of(f"u{i}") for i in (1, 2, 3))
    lab = TotalLabeling(
        {u1: 1, u2: 3, u3: 5},
        {edge_key(u1, u2): 2, edge_key(u2, u3): 4},
        label_bound=5,
    )
    report = verify(g, lab)
    assert report.bijective
    assert not report.proper
    assert ("equal_weights", "u2", "u3") in report.violations


def test_verify_reports_duplicate_label():
    g = build_path(2)
    u, v = g.id_of("u1"), g.id_of("u2")
    lab = TotalLabeling({u: 1, v: 2}, {edge_key(u, v): 1}, label_bound=3)
    report = verify(g, lab)
    assert not report.bijective
    assert ("duplicate_label", 1, 2) in report.violations


def test_verify_reports_out_of_range_label():
    g = build_path(2)
    u, v = g.id_of("u1"), g.id_of("u2")
    lab = TotalLabeling({u: 1, v: 4}, {edge_key(u, v): 2}, label_bound=4)
    report = verify(g, lab)
    assert not report.bijective
    assert ("label_out_of_range", 4) in report.violations


def test_verify_requires_completeness():
    g = build_path(3)
    u1, u2 = g.id_of("u1"), g.id_of("u2")
    lab = TotalLabeling({u1: 1}, {edge_key(u1, u2): 2}, label_bound=5)
    with pytest.raises(IncompleteLabelingError):
        verify(g, lab)


def test_color_set_frozen_examples():
    g, lab = label_sp2_even(5)
    assert color_set(g, lab) == (48, 63, 71)
    g, lab = label_spider_case2(1, 1)
    assert color_set(g, lab) == (11, 15, 36)
    g, lab = label_star(3)
    assert color_set(g, lab) == (7, 13)


def test_weights_match_naive_recomputation():
    for g, lab in [label_sp2_even(3), label_spider_case2(2, 2), label_star(5)]:
        profile = weight_profile(g, lab)
        assert profile.weights == naive_weight_map(g, dict(lab.vertex_labels), dict(lab.edge_labels))


def test_color_count_at_least_chromatic_number():
    for g, lab in [label_sp2_even(2), label_star(4), label_spider_case2(1, 2)]:
        report = verify(g, lab)
        assert report.proper
        assert report.color_count >= chi_lower(g)


@given(delta=st.integers(min_value=1, max_value=40))
@settings(max_examples=30, deadline=None)
def test_weight_linear_in_edge_label(delta):
    g = build_spider(SpiderSpec.of(3, 0))
    x, y1 = g.id_of("x"), g.id_of("y1")
    base_edges = {edge_key(x, g.id_of(f"y{i}")): 50 + i for i in (1, 2, 3)}
    lab = PartialTotalLabeling({y1: 5}, base_edges, label_bound=200)
    bumped_edges = dict(base_edges)
    bumped_edges[edge_key(x, y1)] += delta
    bumped = PartialTotalLabeling({y1: 5}, bumped_edges, label_bound=200)
    assert weight(g, bumped, y1) == weight(g, lab, y1) + delta


@given(seed=st.integers(min_value=0, max_value=10**6))
@settings(max_examples=25, deadline=None)
def test_verify_invariant_under_id_renaming(seed):
    import random

    g, lab = label_spider_case2(1, 1)
    rng = random.Random(seed)
    new_ids = list(range(100, 100 + g.p))
    rng.shuffle(new_ids)
    remap = dict(zip(g.vertices, new_ids))
    g2 = Graph(
        tuple(remap[v] for v in g.vertices),
        tuple((remap[u], remap[v]) for u, v in g.edges),
        {remap[v]: name for v, name in g.names.items()},
    )
    lab2 = TotalLabeling(
        {remap[v]: lb for v, lb in lab.vertex_labels.items()},
        {edge_key(remap[a], remap[b]): lb for (a, b), lb in lab.edge_labels.items()},
        label_bound=lab.label_bound,
    )
    r1, r2 = verify(g, lab), verify(g2, lab2)
    assert (r1.bijective, r1.proper, r1.color_count) == (r2.bijective, r2.proper, r2.color_count)


def test_labels_must_be_positive_integers():
    g = build_path(2)
    u, v = g.id_of("u1"), g.id_of("u2")
    with pytest.raises(ValueError):
        TotalLabeling({u: 0, v: 2}, {edge_key(u, v): 3}, label_bound=3)
    with pytest.raises(ValueError):
        TotalLabeling({u: 1, v: 2}, {edge_key(u, v): True}, label_bound=3)
