from fractions import Fraction

import pytest

import dtg
from dtg import patterns


def test_graph_roundtrip():
    g = dtg.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4 and g.size == 3
    assert g.adjacent(1, 2) and not g.adjacent(0, 2)
    assert dtg.parse_graph6(dtg.encode_graph6(g)) == g
    assert dtg.parse_graph("4\n0 1\n1 2\n2 3\n") == g
    assert g.neighbors(1) == [0, 2]


def test_recognize_accepts_with_certificate():
    g = dtg.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    r = dtg.recognize(g)
    assert r.accepted
    cert = r.certificate
    assert cert.lb == 0 and cert.ub == 2
    assert all(isinstance(w, Fraction) for w in cert.weights)
    ok, pair = dtg.verify_certificate(g, cert)
    assert ok and pair is None
    assert dtg.WeightCertificate.from_json(cert.to_json()) == cert


def test_recognize_rejects_gem():
    r = dtg.recognize(patterns.gem())
    assert not r.accepted
    assert r.certificate is None
    assert r.witness[0] == "gem"
    assert r.reason


def test_verify_reports_failing_pair():
    g = dtg.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    c = dtg.WeightCertificate([1, 3, 5, 7], 4, Fraction(7))
    assert dtg.verify_certificate(g, c) == (False, (0, 3))


def test_normalize_and_generator():
    c = dtg.random_certificate(30, 4, denominator=8)
    g = dtg.graph_from_weights(c)
    n = dtg.normalize_certificate(c, Fraction(-1, 3), "5/2")
    assert dtg.is_normalized(n)
    assert dtg.graph_from_weights(n) == g
    assert dtg.mid_weight_set(n) == dtg.mid_weight_set(c)
    assert dtg.recognize(g).accepted


def test_small_graphs_and_oracle():
    assert [len(dtg.enumerate_small_graphs(k)) for k in range(1, 6)] == [1, 2, 4, 11, 34]
    rejects = [g for g in dtg.enumerate_small_graphs(5) if not dtg.recognize(g).accepted]
    assert len(rejects) == 4
    assert all(not dtg.brute_force_dtg(g) for g in rejects)
    assert [name for name, _ in dtg.forbidden_scan(patterns.two_k3())] == ["2K3"]


def test_permutation_and_clique():
    assert dtg.permutation_orderings(patterns.cycle(5)) is None
    o1, o2 = dtg.permutation_orderings(patterns.cycle(4))
    assert sorted(o1) == sorted(o2) == [0, 1, 2, 3]
    assert dtg.efficient_max_clique(patterns.complete(4)) == [0, 1, 2, 3]


def test_errors():
    with pytest.raises(dtg.ParseError):
        dtg.parse_edge_list("3\n0 9\n")
    with pytest.raises(dtg.ContractError):
        dtg.Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        dtg.normalize_certificate(dtg.WeightCertificate([0], -1, 1), 2, 2)
