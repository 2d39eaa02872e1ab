import math

import pytest

from graph_shift.graph import Graph, make_complete, make_ring
from graph_shift.mapping import BOTTOM, Mapping, full_mapping
from graph_shift.relax import (
    ScoreParams,
    composition_score,
    evaluation_pair,
    pareto_front,
    score,
    snp_violations,
)

P = ScoreParams(1.0, 0.1, 0.5, 1)


def restricted(g, domain, image):
    return Mapping(domain, set(g.vertices), image)


def test_params_validation():
    with pytest.raises(ValueError):
        ScoreParams(0, 0, 0, 1)
    with pytest.raises(ValueError):
        ScoreParams(1, 1, 1, 0)
    with pytest.raises(ValueError):
        ScoreParams(-1, 0, 1, 1)


def test_perfect_translation_scores_zero():
    g = make_ring(5)
    rot = full_mapping(g, {1: 2, 2: 3, 3: 4, 4: 5, 5: 1})
    b = score(g, rot, P)
    assert b.total == 0
    assert b.raw_loss == b.raw_ec == b.raw_def == 0


def test_all_bottom_scores_alpha():
    g = make_complete(3)
    m = restricted(g, {1, 2}, {1: BOTTOM, 2: BOTTOM})
    b = score(g, m, ScoreParams(0.7, 0.1, 0.5, 1))
    assert b.total == pytest.approx(0.7)
    assert b.ec_term == 0 and b.def_term == 0  # degenerate normalizers


def test_path4_double_hop_scores_beta():
    # both sources jump two hops; the image pair keeps its distance
    g = Graph(4, [(1, 2), (2, 3), (3, 4)])
    m = restricted(g, {1, 2}, {1: 3, 2: 4})
    b = score(g, m, ScoreParams(1.0, 0.25, 0.5, 1))
    assert b.raw_ec == 2 and b.raw_def == 0
    assert b.total == pytest.approx(0.25)


def test_single_mapped_vertex_has_no_def_term():
    g = make_ring(4)
    m = restricted(g, {1, 2}, {1: 2, 2: BOTTOM})
    b = score(g, m, P)
    assert b.def_term == 0
    assert b.total == pytest.approx(0.5)  # alpha * 1/2


def test_empty_domain_rejected():
    g = make_ring(4)
    with pytest.raises(ValueError):
        score(g, Mapping(set(), set(g.vertices), {}), P)
    with pytest.raises(ValueError):
        evaluation_pair(g, Mapping(set(), set(g.vertices), {}))


def test_total_is_sum_of_terms():
    g = make_ring(6)
    m = restricted(g, {1, 2, 3}, {1: 3, 2: BOTTOM, 3: 5})
    b = score(g, m, P)
    assert b.total == pytest.approx(b.loss_term + b.ec_term + b.def_term)
    assert b.total > 0


def test_weight_scaling_scales_total():
    g = make_ring(6)
    m = restricted(g, {1, 2, 3}, {1: 3, 2: BOTTOM, 3: 5})
    t1 = score(g, m, ScoreParams(1, 0.1, 0.5, 1)).total
    t3 = score(g, m, ScoreParams(3, 0.3, 1.5, 1)).total
    assert t3 == pytest.approx(3 * t1)


def test_snp_violations_wrapper():
    g = make_ring(4)
    m = restricted(g, {1, 2}, {1: 1, 2: 3})
    assert snp_violations(g, m) == 1


def test_composition_score_monotone():
    g = make_ring(5)
    rot = full_mapping(g, {1: 2, 2: 3, 3: 4, 4: 5, 5: 1})
    lossy = full_mapping(g, {1: 2, 2: 3, 3: 4, 4: 5, 5: BOTTOM})
    breakdowns = [score(g, m, P) for m in (rot, lossy, rot)]
    assert composition_score([]) == 0
    assert composition_score(breakdowns[:1]) == breakdowns[0].total
    prefix = [composition_score(breakdowns[: i + 1]) for i in range(3)]
    assert prefix == sorted(prefix)


def test_inverse_pair_composition_overestimates():
    # a rotation followed by its inverse nets out to the identity, yet the
    # summed score stays positive when either step is imperfect
    g = make_ring(5)
    lossy = full_mapping(g, {1: 2, 2: 3, 3: 4, 4: 5, 5: BOTTOM})
    from graph_shift.mapping import compose, inverse

    total = composition_score([score(g, lossy, P), score(g, inverse(lossy), P)])
    assert total > 0


def test_evaluation_pair_examples():
    g = make_ring(5)
    rot = full_mapping(g, {1: 2, 2: 3, 3: 4, 4: 5, 5: 1})
    assert evaluation_pair(g, rot) == (0.0, 0.0)
    allb = full_mapping(g, {v: BOTTOM for v in g.vertices})
    assert evaluation_pair(g, allb) == (1.0, 0.0)


def test_evaluation_pair_ignores_params():
    g = make_ring(6)
    m = restricted(g, {1, 2, 3}, {1: 3, 2: BOTTOM, 3: 5})
    assert evaluation_pair(g, m) == evaluation_pair(g, m)
    lr, sr = evaluation_pair(g, m)
    assert 0 <= lr <= 1 and 0 <= sr <= 1


def test_pareto_front_basic():
    pts = [(0.0, 0.1, "a"), (0.05, 0.0, "b"), (0.05, 0.1, "c")]
    assert pareto_front(pts) == pts[:2]


def test_pareto_front_keeps_duplicates_and_order():
    pts = [(0.1, 0.1, 1), (0.1, 0.1, 2)]
    assert pareto_front(pts) == pts
    assert pareto_front([(0.3, 0.4, None)]) == [(0.3, 0.4, None)]
