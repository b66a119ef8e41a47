import random

import pytest
from hypothesis import given, settings, strategies as st

from cyclehom.chainalg import euler_characteristic, homology_integer
from cyclehom.formulas import (UnsupportedParameterError, euler_complete,
                               euler_cycle, euler_hom_kn,
                               euler_hom_plus_identity, euler_hom_via_mobius,
                               hom_cycle_alternating_count,
                               hom_cycle_cohomology, homplus_cycle_formula,
                               ind_cycle_formula, reduced_euler,
                               vanishing_check)
from cyclehom.graphs import Graph, complete, cycle
from cyclehom.homspaces import hom_complex, hom_plus, independence_complex


def test_ind_cycle_formula_values():
    assert ind_cycle_formula(6).groups() == {1: (2, ())}
    assert ind_cycle_formula(7).groups() == {1: (1, ())}
    assert ind_cycle_formula(9).groups() == {2: (2, ())}
    assert ind_cycle_formula(4).groups() == {0: (1, ())}


def test_ind_cycle_formula_matches_brute_force():
    for m in range(3, 13):
        got = {d: g for d, g in
               independence_complex(cycle(m)).homology().groups.items()
               if g != (0, ())}
        assert got == ind_cycle_formula(m).groups(), m


def test_homplus_cycle_formula_values():
    # wedge of 2^n spheres when 3 | m, one sphere otherwise
    assert homplus_cycle_formula(6, 4).groups() == {7: (16, ())}
    assert homplus_cycle_formula(4, 3).groups() == {2: (1, ())}


def test_homplus_formula_matches_brute_force():
    for m, n in [(4, 3), (5, 3), (4, 4)]:
        h = homology_integer(
            hom_plus(cycle(m), complete(n)).chain_complex(augmented=True))
        got = {d: g for d, g in h.groups.items() if g != (0, ())}
        assert got == homplus_cycle_formula(m, n).groups(), (m, n)


def test_hom_cycle_cohomology_anchor():
    # the (6,4) example: Z in degree 1, Z^14 in degree 2
    assert hom_cycle_cohomology(6, 4).groups() == {1: (1, ()), 2: (14, ())}


def test_hom_cycle_cohomology_matches_brute_force():
    for m, n in [(5, 4), (6, 4), (7, 4)]:
        cx = hom_complex(cycle(m), complete(n))
        h = homology_integer(cx.chain_complex(augmented=True))
        got = {d: g for d, g in h.cohomology_groups().items() if g != (0, ())}
        assert got == hom_cycle_cohomology(m, n).groups(), (m, n)


def test_vanishing_bound():
    assert vanishing_check(6, 4, 5)
    with pytest.raises(UnsupportedParameterError):
        vanishing_check(6, 4, 7)


def test_euler_cycle_value():
    assert euler_cycle(6, 4) == 13


def test_euler_cycle_matches_alternating_count():
    for m in range(5, 12):
        for n in range(4, 6):
            assert euler_cycle(m, n) == hom_cycle_alternating_count(m, n), \
                (m, n)


def test_euler_cycle_matches_brute_force():
    for m, n in [(5, 4), (6, 4), (5, 5)]:
        cx = hom_complex(cycle(m), complete(n))
        assert euler_cycle(m, n) == euler_characteristic(
            cx.chain_complex(augmented=True)), (m, n)


def test_euler_complete_small():
    for m, n in [(2, 3), (2, 4), (3, 3), (3, 4), (3, 5)]:
        cx = hom_complex(complete(m), complete(n))
        assert euler_complete(m, n) == euler_characteristic(
            cx.chain_complex(augmented=True)), (m, n)


def _random_graph(seed: int, nv: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, nv + 1) for v in range(u + 1, nv + 1)
             if rng.random() < 0.5]
    return Graph.build(nv, edges)


@settings(max_examples=12, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6),
       st.integers(min_value=1, max_value=4),
       st.integers(min_value=1, max_value=4))
def test_euler_identities_random(seed, a, b):
    t = _random_graph(seed, a)
    g = _random_graph(seed + 1, b)
    lhs, rhs = euler_hom_plus_identity(t, g)
    assert lhs == rhs
    cx = hom_complex(t, g, max_cells=200_000)
    assert euler_hom_via_mobius(t, g) == euler_characteristic(
        cx.chain_complex(augmented=True))


def test_euler_hom_kn_matches_direct():
    t = cycle(5)
    cx = hom_complex(t, complete(4))
    assert euler_hom_kn(t, 4) == euler_characteristic(
        cx.chain_complex(augmented=True))


def test_reduced_euler_of_cell_complex():
    from cyclehom.torusfront import build_phi
    assert reduced_euler(build_phi(2, 7, 3)) == -1  # a circle
    assert reduced_euler(build_phi(2, 6, 3)) == 3 - 1  # three points
