import pytest
from hypothesis import given, settings, strategies as st

from cyclehom.chainalg import homology_integer
from cyclehom.graphs import Graph, complete, cycle, make_standard
from cyclehom.homspaces import (ComplexTooLargeError, SimplicialComplex,
                                filtration_by_support, hom_complex, hom_plus,
                                independence_complex, join_complex, rho_check,
                                support_census)


def test_ind_cycle_spheres():
    # Ind(C_m) is one sphere, or a wedge of two when 3 | m
    for m, degree, count in [(4, 0, 1), (5, 1, 1), (6, 1, 2), (7, 1, 1),
                             (9, 2, 2)]:
        h = independence_complex(cycle(m)).homology()
        assert h.groups.get(degree, (0, ()))[0] == count, (m, h.groups)
        assert all(t == () for _, t in h.groups.values())


def test_ind_complete_is_discrete():
    cx = independence_complex(complete(5))
    assert cx.face_counts() == [5]


def test_ind_ignores_looped_vertices():
    g = Graph.build(3, [(1, 1), (2, 3)])
    cx = independence_complex(g)
    assert 1 not in cx.vertices()


def test_join_of_spheres():
    # S^0 * S^0 is a circle
    s0 = SimplicialComplex.from_faces({0: [(0,), (1,)]})
    circle = join_complex(s0, s0)
    h = circle.homology()
    assert h.groups.get(1, (0, ()))[0] == 1


def random_graph(rng_seed: int, nv: int) -> Graph:
    import random
    rng = random.Random(rng_seed)
    edges = [(u, v) for u in range(1, nv + 1) for v in range(u + 1, nv + 1)
             if rng.random() < 0.5]
    return Graph.build(nv, edges)


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6),
       st.integers(min_value=2, max_value=4),
       st.integers(min_value=2, max_value=4))
def test_join_euler_multiplies(seed, a, b):
    x = independence_complex(random_graph(seed, a))
    y = independence_complex(random_graph(seed + 1, b))
    if not x.face_counts() or not y.face_counts():
        return
    j = join_complex(x, y)
    assert j.euler_reduced() == -x.euler_reduced() * y.euler_reduced()


def test_hom_vertices_are_homomorphisms():
    cx = hom_complex(cycle(5), complete(3))
    # homomorphisms C5 -> K3: 3-colorings of a 5-cycle
    assert len(cx.cells[0]) == 2 ** 5 + 2 * (-1) ** 5


def test_hom_boundary_squares_to_zero():
    cx = hom_complex(cycle(5), complete(4))
    cx.chain_complex(augmented=True, check=True).validate()


def test_hom_c5_k4():
    h = homology_integer(
        hom_complex(cycle(5), complete(4)).chain_complex(augmented=True))
    nonzero = {d: g for d, g in h.groups.items() if g != (0, ())}
    assert nonzero == {1: (0, (2,)), 3: (1, ())}
    coh = {d: g for d, g in h.cohomology_groups().items() if g != (0, ())}
    assert coh == {2: (0, (2,)), 3: (1, ())}


def test_hom_plus_matches_independence_of_product():
    from cyclehom.graphs import categorical_product, strong_complement
    t, g = cycle(4), complete(3)
    plus = hom_plus(t, g)
    ind = independence_complex(
        categorical_product(t, strong_complement(g)))
    assert plus.f_vector() == {d: c for d, c in enumerate(ind.face_counts())}
    h1 = homology_integer(plus.chain_complex(augmented=True))
    h2 = ind.homology()
    assert h1.groups == h2.groups


def test_hom_plus_c4_k3_wedge():
    h = homology_integer(
        hom_plus(cycle(4), complete(3)).chain_complex(augmented=True))
    nonzero = {d: g for d, g in h.groups.items() if g != (0, ())}
    # a single sphere S^2 when 3 does not divide m
    assert nonzero == {2: (1, ())}


def test_support_census_levels():
    plus = hom_plus(cycle(4), complete(3))
    census = support_census(plus)
    # level p counts (p+q)-cells coming from supports of size p+1
    assert census[(0, 0)] == 4 * 3  # one vertex mapped to one color
    assert all(p <= deg for (p, deg) in census)


def test_filtration_levels_monotone():
    plus = hom_plus(cycle(4), complete(3))
    filtered = filtration_by_support(plus)
    filtered.validate()


def test_rho_sign_intertwines():
    ok, witness = rho_check(cycle(5), complete(3))
    assert ok, witness
    ok, witness = rho_check(make_standard("path", 4), complete(3))
    assert ok, witness


def test_max_cells_guard():
    with pytest.raises(ComplexTooLargeError):
        hom_complex(cycle(5), complete(9), max_cells=100)
