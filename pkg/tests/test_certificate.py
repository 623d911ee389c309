import json
from itertools import combinations

import pytest
from hypothesis import given

from extendlab import oracle
from extendlab.certificate import (
    TYPE1,
    TYPE2,
    UNCLASSIFIED,
    Certificate,
    certify_all_edges,
    check_property_p,
    find_certificate,
    profile_edge,
    validate_certificate,
)
from extendlab.extendability import ExtendabilityError, extendable, is_minimal_k_extendable
from extendlab.families import complete, complete_bipartite, cycle
from extendlab.graph import ComponentSplit, GraphError, build_graph, to_mask
from extendlab.search import enumerate_graphs
from helpers import dense_graphs


def type1_graph():
    """Edge 0-3 between triangles {0,1,2} and {3,4,5}; S = {6,7,8,9} with edges 6-7, 8-9."""
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (6, 7), (8, 9)]
    edges += [(s, x) for s in (6, 7, 8, 9) for x in (1, 2, 4, 5)]
    return build_graph(10, edges)


def type2_graph():
    """Edge 0-1 whose ends both see S = {2..6} only; triangle {7,8,9} hangs off S."""
    edges = [(0, 1), (2, 3), (4, 5), (7, 8), (8, 9), (7, 9)]
    edges += [(e, s) for e in (0, 1) for s in range(2, 7)]
    edges += [(s, t) for s in range(2, 7) for t in (7, 8, 9)]
    return build_graph(10, edges)


def test_validate_k6():
    g = complete(6)
    assert validate_certificate(g, (0, 1), 2, [2, 3, 4, 5])
    for s in combinations(range(2, 6), 3):
        check = validate_certificate(g, (0, 1), 2, s)
        assert not check and check.reason.startswith("condition (i)")
    # K8: a 2-matching inside S, but G - e - S stays connected and even
    check = validate_certificate(complete(8), (0, 1), 2, [2, 3, 4, 5])
    assert not check and check.reason.startswith("condition (ii)")


def test_validate_c6():
    check = validate_certificate(cycle(6), (1, 2), 1, {3, 4})
    assert check
    assert check.witness.vertex_lists() == [[0, 1, 5], [2]]


def test_validate_reports_first_failing_condition():
    g = cycle(6)
    assert validate_certificate(g, (1, 2), 1, {0, 3}).reason.startswith("condition (i)")
    assert validate_certificate(complete(6), (0, 1), 1, {2, 3}).reason.startswith("condition (ii)")
    # condition (iii): u and v share the odd component {0, 1, 2}
    g = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4)])
    assert validate_certificate(g, (0, 1), 1, {3, 4}).reason.startswith("condition (iii)")


def test_validate_errors():
    with pytest.raises(GraphError):
        validate_certificate(cycle(6), (0, 2), 1, {3, 4})
    with pytest.raises(GraphError):
        validate_certificate(cycle(6), (0, 1), 1, {1, 4})


def test_find_c6():
    cert = find_certificate(cycle(6), (1, 2), 1)
    assert len(cert.s) == 2
    assert cert.s == oracle.smallest_certificate(cycle(6), (1, 2), 1)
    assert validate_certificate(cycle(6), (1, 2), 1, cert.s)


def test_find_k6():
    g = complete(6)
    for u, v in g.edges():
        cert = find_certificate(g, (u, v), 2)
        assert set(cert.s) == set(range(6)) - {u, v}
        assert cert.matching_size == 2


def test_find_k44_none():
    g = complete_bipartite(4, 4)
    assert all(find_certificate(g, e, 2) is None for e in g.edges())
    # confirmed by scanning every subset
    assert oracle.smallest_certificate(g, (0, 4), 2) is None


def test_find_errors():
    with pytest.raises(GraphError):
        find_certificate(cycle(6), (0, 2), 1)
    with pytest.raises(ExtendabilityError):
        find_certificate(cycle(6), (0, 1), 3)


def test_certify_all_edges_examples():
    certs = certify_all_edges(complete(6), 2)
    assert len(certs) == 15 and all(certs.values())
    certs = certify_all_edges(complete_bipartite(4, 4), 2)
    assert any(c is None for c in certs.values())
    g = complete_bipartite(3, 3)
    certs = certify_all_edges(g, 2)
    assert len(certs) == 9
    for (u, v), cert in certs.items():
        assert set(cert.s) == set(range(6)) - {u, v}
        assert [c.bit_count() for c in cert.odd_components] == [1, 1]
    with pytest.raises(ExtendabilityError):
        certify_all_edges(cycle(6), 2)


@pytest.mark.parametrize("k", [1, 2])
def test_characterization_on_order_six(k):
    seen = 0
    for g in enumerate_graphs(6):
        if not extendable(g, k):
            continue
        seen += 1
        all_certified = all(certify_all_edges(g, k).values())
        assert is_minimal_k_extendable(g, k).result == all_certified
        assert oracle.is_minimal_k_extendable(g, k) == all_certified
    assert seen > 0


@given(dense_graphs(min_order=4, max_order=8))
def test_characterization_random(g):
    for k in range(1, min(2, g.order // 2 - 1) + 1):
        if extendable(g, k):
            certs = certify_all_edges(g, k)
            assert is_minimal_k_extendable(g, k).result == all(certs.values())


@given(dense_graphs(min_order=4, max_order=8))
def test_found_certificates_are_valid_and_smallest(g):
    for k in range(1, min(2, g.order // 2 - 1) + 1):
        for e in g.edges()[:6]:
            cert = find_certificate(g, e, k)
            expected = oracle.smallest_certificate(g, e, k)
            assert (cert.s if cert else None) == expected
            if cert:
                assert validate_certificate(g, e, k, cert.s)
                assert oracle.certificate_holds(g, e, k, set(cert.s))
                survivors = g.order - len(cert.s)
                assert cert.split.odd_count % 2 == survivors % 2
                assert cert.split.odd_count == len(cert.s) - 2 * k + 2


def test_profile_k6_unclassified():
    g = complete(6)
    cert = find_certificate(g, (0, 1), 2)
    prof = profile_edge(g, cert)
    assert prof.t == 2 and prof.odd_orders == (1, 1) and len(cert.s) == 4
    assert prof.type_tag == UNCLASSIFIED
    assert prof.twin_flag


def synthetic(s, comps, u_comp, v_comp, k=2):
    split = ComponentSplit(tuple(to_mask(c) for c in comps))
    return Certificate((0, 1), k, tuple(s), 2, split, u_comp, v_comp)


def test_profile_synthetic_type1():
    c = synthetic([6, 7, 8, 9], [[0, 2, 3], [1, 4, 5]], 0, 1)
    prof = profile_edge(complete(10), c)
    assert prof.odd_orders == (3, 3) and prof.type_tag == TYPE1


def test_profile_synthetic_type2():
    c = synthetic([2, 3, 4, 5, 6], [[0], [1], [7, 8, 9]], 0, 1)
    prof = profile_edge(complete(10), c)
    assert prof.odd_orders == (1, 1, 3) and prof.even_count == 0 and prof.type_tag == TYPE2


def test_profile_rejects_other_k():
    with pytest.raises(ValueError):
        profile_edge(complete(10), synthetic([2, 3], [[0], [1]], 0, 1, k=1))


def test_realized_type1_edge():
    g = type1_graph()
    check = validate_certificate(g, (0, 3), 2, [6, 7, 8, 9])
    assert check
    split = check.witness
    cert = Certificate((0, 3), 2, (6, 7, 8, 9), 2, split, split.index_of(0), split.index_of(3))
    # the smallest certificate is a different 4-set whose odd parts are singletons
    assert find_certificate(g, (0, 3), 2).s == (1, 2, 4, 5)
    prof = profile_edge(g, cert)
    assert prof.type_tag == TYPE1 and not prof.twin_flag
    assert check_property_p(g, (0, 3), set(cert.s) | {3})
    assert check_property_p(g, (3, 0), set(cert.s) | {0})


def test_realized_type2_edge_is_twin():
    g = type2_graph()
    cert = find_certificate(g, (0, 1), 2)
    assert cert.s == (2, 3, 4, 5, 6)
    prof = profile_edge(g, cert)
    assert prof.type_tag == TYPE2
    assert prof.twin_flag


def test_property_p_k6():
    g = complete(6)
    assert check_property_p(g, (0, 1), set(range(1, 6)))
    assert check_property_p(g, (1, 0), {0, 2, 3, 4, 5})
    assert not check_property_p(g, (0, 1), {2, 3, 4, 5})
    miss = check_property_p(build_graph(7, [(0, 1), (2, 3), (4, 5), (1, 6)]), (0, 1), {2, 3, 4, 5, 6})
    assert not miss and miss.reason.startswith("condition (ii)")


def test_property_p_errors():
    with pytest.raises(GraphError):
        check_property_p(complete(6), (0, 1), {0, 2, 3, 4, 5})
    with pytest.raises(GraphError):
        check_property_p(cycle(6), (0, 3), {1, 2, 4, 5, 3})


@given(dense_graphs(min_order=6, max_order=8))
def test_four_set_certificates_give_property_p(g):
    for e in g.edges():
        cert = find_certificate(g, e, 2)
        if cert is not None and len(cert.s) == 4:
            u, v = e
            assert check_property_p(g, (u, v), set(cert.s) | {v})
            assert check_property_p(g, (v, u), set(cert.s) | {u})


def test_certificate_json_shape():
    cert = find_certificate(cycle(6), (1, 2), 1)
    blob = json.loads(json.dumps(cert.to_json("unclassified")))
    assert blob == {
        "edge": [1, 2],
        "s": [0, 5],
        "matching_size": 1,
        "odd_components": [[1], [2, 3, 4]],
        "type_tag": "unclassified",
    }
