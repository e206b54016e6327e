import json
from fractions import Fraction

import pytest

from gkmlef import (GkmValidationError, betti, catalog, check_hypothesis,
                    emit_gkm, parse_gkm, restrict_to_circle,
                    self_indexing_normalizer)
from gkmlef.model import CircleProfile, GkmGraph, Vertex

F = Fraction


def test_parse_su3(su3):
    _, graph, _ = su3
    assert graph.rank == 2
    assert graph.n == 3
    assert len(graph.vertices) == 6
    assert len(graph.edges) == 9


def test_parse_so5(so5):
    _, graph, _ = so5
    assert graph.n == 3
    assert len(graph.vertices) == 4
    assert len(graph.edges) == 6


def test_parse_rejects_nonparallel_edge(su3):
    entry, _, _ = su3
    doc = json.loads(entry.document)
    doc["edges"][0]["weight"] = [1, 1]
    with pytest.raises(GkmValidationError, match="parallel"):
        parse_gkm(json.dumps(doc))


def test_parse_rejects_duplicate_id(su3):
    entry, _, _ = su3
    doc = json.loads(entry.document)
    doc["vertices"][1]["id"] = doc["vertices"][0]["id"]
    with pytest.raises(GkmValidationError, match="unique"):
        parse_gkm(json.dumps(doc))


def test_parse_rejects_dependent_weights(cp1):
    # two edges at one vertex with parallel weights violate the GKM condition
    doc = {
        "rank": 2, "dimension": 4,
        "vertices": [{"id": "a", "position": ["0", "0"]},
                     {"id": "b", "position": ["1", "0"]},
                     {"id": "c", "position": ["2", "0"]},
                     {"id": "d", "position": ["1", "1"]}],
        "edges": [{"v": "a", "w": "b", "weight": [1, 0]},
                  {"v": "b", "w": "c", "weight": [1, 0]},
                  {"v": "c", "w": "d", "weight": [-1, 1]},
                  {"v": "a", "w": "d", "weight": [1, 1]}],
    }
    with pytest.raises(GkmValidationError, match="gkm-independence"):
        parse_gkm(json.dumps(doc))


def test_su3_profile_matches_example(su3):
    _, _, profile = su3
    assert profile.level_constants() == [F(-2), F(-1), F(1), F(2)]
    assert profile.level(0) == ("A",)
    assert profile.level(1) == ("B", "C")
    assert profile.level(2) == ("D", "E")
    assert profile.level(3) == ("F",)
    assert betti(profile) == [1, 0, 2, 0, 2, 0, 1]


def test_so5_profile_indices(so5):
    _, _, profile = so5
    # unit square under xi = (-1, 3)
    assert profile.index == {"S": 0, "P": 2, "R": 4, "Q": 6}
    assert betti(profile) == [1, 0, 1, 0, 1, 0, 1]


def test_nongeneric_xi_names_edge(su3):
    _, graph, _ = su3
    with pytest.raises(GkmValidationError, match="pairs to zero"):
        restrict_to_circle(graph, (1, 1))


def test_check_hypothesis(su3, so5):
    for _, _, profile in (su3, so5):
        result = check_hypothesis(profile)
        assert result["constant_on_levels"] is True
        assert result["all_distinct"] is True
    entry = catalog.get("hirzebruch1")
    profile = restrict_to_circle(parse_gkm(entry.document), entry.default_xi)
    result = check_hypothesis(profile)
    assert result["constant_on_levels"] is False
    # two index-2 points at different moment values
    assert len(profile.level(1)) == 2
    assert len({profile.mu[v] for v in profile.level(1)}) == 2


def test_self_indexing_normalizer(su3, so5):
    _, _, p_su3 = su3
    assert self_indexing_normalizer(p_su3) is None  # fails at the third level
    _, _, p_so5 = so5
    assert self_indexing_normalizer(p_so5) == (F(1), F(3))


def test_normalizer_identity_case(cp1):
    # levels (0, 2, 4, 6) are already self-indexing
    entry = catalog.get("cp3")
    graph = parse_gkm(entry.document)
    profile = restrict_to_circle(graph, (2, 4, 6))
    assert profile.level_constants() == [F(0), F(2), F(4), F(6)]
    assert self_indexing_normalizer(profile) == (F(1), F(0))


def test_betti_cp1(cp1):
    _, _, profile = cp1
    assert betti(profile) == [1, 0, 1]


def test_edge_outward_weights_negate(su3):
    _, graph, _ = su3
    for e in graph.edges:
        at_v = dict(graph.outward_weights(e.v))[e.w]
        at_w = dict(graph.outward_weights(e.w))[e.v]
        assert at_w == tuple(-a for a in at_v)


def test_mu_increases_along_positive_edges(su3):
    _, graph, profile = su3
    for e in graph.edges:
        w = sum(a * b for a, b in zip(e.weight, profile.xi))
        diff = profile.mu[e.w] - profile.mu[e.v]
        assert (diff > 0) == (w > 0)


def test_relabeling_equivariance(su3):
    entry, graph, profile = su3
    doc = json.loads(entry.document)
    rename = {v["id"]: "x" + v["id"] for v in doc["vertices"]}
    for v in doc["vertices"]:
        v["id"] = rename[v["id"]]
    for e in doc["edges"]:
        e["v"], e["w"] = rename[e["v"]], rename[e["w"]]
    profile2 = restrict_to_circle(parse_gkm(json.dumps(doc)), entry.default_xi)
    for vid in profile.mu:
        assert profile2.mu[rename[vid]] == profile.mu[vid]
        assert profile2.index[rename[vid]] == profile.index[vid]
        assert profile2.weights[rename[vid]] == profile.weights[vid]


def test_affine_reparametrization_invariance(su3):
    entry, graph, profile = su3
    a, t = F(3, 2), (F(5), F(-1, 3))
    vertices = tuple(Vertex(v.id, tuple(a * p + s for p, s in zip(v.position, t)))
                     for v in graph.vertices)
    graph2 = GkmGraph(graph.rank, graph.dimension, vertices, graph.edges)
    profile2 = restrict_to_circle(graph2, entry.default_xi)
    shift = sum(s * x for s, x in zip(t, entry.default_xi))
    assert profile2.index == profile.index
    assert profile2.levels() == profile.levels()
    assert betti(profile2) == betti(profile)
    for k in range(profile.n + 1):
        assert profile2.level_constant(k) == a * profile.level_constant(k) + shift


def test_roundtrip(su3):
    entry, graph, _ = su3
    assert emit_gkm(parse_gkm(emit_gkm(graph))) == emit_gkm(graph) == entry.document
