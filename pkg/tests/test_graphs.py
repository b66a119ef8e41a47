import json

import pytest
from hypothesis import given, strategies as st

from cyclehom.graphs import (Graph, InvalidParameterError, categorical_product,
                             complete, cycle, from_json_dict, from_text,
                             induced_subgraph, make_standard, strong_complement,
                             to_json_dict, to_text)


def test_cycle_edges():
    c5 = cycle(5)
    assert c5.vertex_count == 5
    assert len(c5.edges) == 5
    assert (1, 2) in c5.edges and (1, 5) in c5.edges


def test_small_cycles_coincide_with_completes():
    assert set(cycle(3).edges) == set(complete(3).edges)
    with pytest.raises(InvalidParameterError):
        cycle(2)


def test_complete_edge_count():
    for k in range(1, 7):
        assert len(complete(k).edges) == k * (k - 1) // 2


def test_make_standard_rejects_bad_kind():
    with pytest.raises(InvalidParameterError):
        make_standard("wheel", 5)


def test_strong_complement_includes_loops():
    g = strong_complement(complete(3))
    assert set(g.edges) == {(1, 1), (2, 2), (3, 3)}


def test_strong_complement_involution_on_edge_sets():
    g = cycle(6)
    back = strong_complement(strong_complement(g))
    assert set(back.edges) == set(g.edges)


def test_categorical_product_size():
    p = categorical_product(cycle(4), complete(3))
    assert p.vertex_count == 12
    # each C4 edge pairs with each K3 edge in two orientations
    assert len(p.edges) == 4 * 3 * 2


def test_induced_subgraph_relabels():
    g, relabel = induced_subgraph(cycle(5), [2, 3, 5])
    assert g.vertex_count == 3
    assert (relabel[2], relabel[3]) in g.edges or \
        (relabel[3], relabel[2]) in g.edges


def test_text_round_trip():
    g = cycle(7)
    assert set(from_text(to_text(g)).edges) == set(g.edges)


def test_json_round_trip():
    g = complete(4)
    blob = json.dumps(to_json_dict(g))
    assert set(from_json_dict(json.loads(blob)).edges) == set(g.edges)


@given(st.integers(min_value=3, max_value=9))
def test_cycle_degrees_are_two(m):
    c = cycle(m)
    deg = {v: 0 for v in range(1, m + 1)}
    for u, v in c.edges:
        deg[u] += 1
        deg[v] += 1
    assert all(d == 2 for d in deg.values())


@given(st.integers(min_value=2, max_value=6), st.integers(min_value=2, max_value=6))
def test_product_vertex_count(a, b):
    p = categorical_product(cycle(max(a, 3)), complete(b))
    assert p.vertex_count == max(a, 3) * b
