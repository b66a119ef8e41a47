from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from cyclehom.chainalg import homology_integer, homology_mod_p, verify_acyclic
from cyclehom.graphs import InvalidParameterError
from cyclehom.torusfront import (FrontParams, build_band_front_complex,
                                 build_phi, cell_winding, cube_members,
                                 cycle_component, gap_ok, garland_census,
                                 grind, phi_front_dictionary, thin_garland,
                                 width_spread)


def test_gap_ok_basics():
    assert gap_ok("NEEN", 1)
    assert gap_ok("NEENEE", 3)
    assert not gap_ok("NENEEE", 3)
    assert not gap_ok("NN", 2)
    assert gap_ok("EEEE", 5)


def test_vertex_count_no_gap():
    # no gap condition: every word with the given letter counts appears
    params = FrontParams(north=2, east=3, g=1)
    cx = build_band_front_complex(params)
    assert len(cx.cells[0]) == 10


def test_width_flip_raises_by_length():
    params = FrontParams(north=2, east=2, g=1)
    plain = width_spread(params, "NENE", ())
    flipped = width_spread(params, "NENE", (1,))
    assert flipped > plain


def test_cube_members_count():
    params = FrontParams(north=2, east=4, g=1)
    cx = build_band_front_complex(params)
    for d, keys in cx.cells.items():
        for key in keys:
            assert len(cube_members(params, key)) == 2 ** d


def test_boundary_squares_to_zero():
    params = FrontParams(north=3, east=5, g=2)
    cx = build_band_front_complex(params)
    cx.chain_complex(augmented=True, check=True).validate()


def test_phi_point_sets():
    for m, g in [(2, 3), (3, 2), (2, 4)]:
        cx = build_phi(m, g * m, g)
        assert cx.f_vector() == {0: g}


def test_phi_cycles():
    for m, g in [(2, 3), (3, 2), (2, 4)]:
        n = g * m + 1
        cx = build_phi(m, n, g)
        assert cx.f_vector() == {0: n, 1: n}
        h = homology_integer(cx.chain_complex(augmented=True))
        assert {d: v for d, v in h.groups.items() if v != (0, ())} == \
            {1: (1, ())}


def test_phi_dimension_formula():
    for m in range(0, 5):
        for g in range(1, 4):
            for n in range(max(1, g * m), 15):
                cx = build_phi(m, n, g)
                assert cx.dimension() == min(m, n - g * m), (m, n, g)


def test_phi_front_dictionary_is_bijection():
    mapping = phi_front_dictionary(3, 9, 2)
    phi = build_phi(3, 9, 2)
    front = build_band_front_complex(FrontParams(north=3, east=6, g=2))
    assert len(mapping) == phi.total_cells() == front.total_cells()
    assert len(set(mapping.values())) == len(mapping)


@pytest.mark.parametrize("north,east,g", [(2, 4, 2), (3, 6, 2), (2, 5, 3),
                                          (4, 4, 1)])
def test_grind_preserves_homology(north, east, g):
    params = FrontParams(north=north, east=east, g=g)
    cx = build_band_front_complex(params)
    chain = cx.chain_complex(augmented=True)
    result = grind(cx, params)
    ok, witness = verify_acyclic(chain, result.matching)
    assert ok, witness
    full = homology_integer(chain)
    thin = homology_integer(result.thin.chain_complex(augmented=True))
    assert {d: v for d, v in full.groups.items() if v != (0, ())} == \
        {d: v for d, v in thin.groups.items() if v != (0, ())}
    assert homology_mod_p(chain, 2) == \
        homology_mod_p(result.thin.chain_complex(augmented=True), 2)


def test_grind_trace_format():
    params = FrontParams(north=2, east=4, g=1)
    cx = build_band_front_complex(params)
    result = grind(cx, params)
    for line in result.trace_lines:
        assert line.startswith("collapse ")
        assert " -> " in line


def test_thin_garland_band_one():
    desc = thin_garland(FrontParams(north=2, east=4, g=1))
    assert (desc.cube_count, desc.cube_dim, desc.circle_count) == (3, 2, 1)
    desc = thin_garland(FrontParams(north=3, east=5, g=1))
    assert (desc.cube_count, desc.cube_dim) == (8, 1)


def test_garland_census_matches_descriptor():
    params = FrontParams(north=2, east=4, g=2)
    cx = build_band_front_complex(params)
    result = grind(cx, params)
    maximal, dims, circles, very_thin = garland_census(result.thin, params)
    desc = thin_garland(params)
    assert len(maximal) == desc.cube_count
    assert set(dims) == {desc.cube_dim}
    assert circles == desc.circle_count
    for counts in very_thin:
        assert len(counts) == 2


def test_cycle_component_homotopy_types():
    # disjoint unions of points and circles: torsion-free, nothing above dim 1
    for m, n, w in [(5, 3, 1), (5, 3, -1), (6, 3, 0), (6, 3, 2), (7, 3, 1)]:
        cx = cycle_component(m, n, w, check=True)
        h = homology_integer(cx.chain_complex(augmented=False))
        nonzero = {d: v for d, v in h.groups.items() if v != (0, ())}
        assert set(nonzero) <= {0, 1}, (m, n, w, nonzero)
        assert all(t == () for _, t in nonzero.values()), (m, n, w, nonzero)


def test_cell_winding_constant_on_winding_class():
    from cyclehom.graphs import cycle as cycle_graph
    from cyclehom.homspaces import hom_complex
    hom = hom_complex(cycle_graph(7), cycle_graph(3))
    windings = {cell_winding(hom, key, 3)
                for keys in hom.cells.values() for key in keys}
    assert windings == {-1, 1}


def test_invalid_params_rejected():
    with pytest.raises(InvalidParameterError):
        FrontParams(north=0, east=0)
    with pytest.raises(InvalidParameterError):
        build_phi(2, 0, 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=6),
       st.integers(min_value=1, max_value=3))
def test_every_cube_has_thin_or_wide_verdict(north, east, g):
    params = FrontParams(north=north, east=east, g=g)
    cx = build_band_front_complex(params)
    L = north + east
    for d, keys in cx.cells.items():
        for key in keys:
            delta, kind = width_spread(params, key[1], key[2])
            assert delta >= 0
            assert (kind == "wide") == (delta > L)
            assert (kind == "very_thin") == (delta < L)
