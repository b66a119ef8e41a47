import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form
from hypothesis import given, settings, strategies as st

from cyclehom._exact import invariant_factors, rank_mod_p
from cyclehom.cells import CellComplex
from cyclehom.chainalg import (ChainComplex, ContractViolationError,
                               MorseMatching, euler_characteristic,
                               homology_integer, homology_mod_p, morse_reduce,
                               spectral_pages, verify_acyclic)


def circle_chain() -> ChainComplex:
    # triangle boundary: 3 vertices, 3 edges
    return ChainComplex(
        ranks={0: 3, 1: 3},
        boundaries={1: [(0, 0, -1), (1, 0, 1),
                        (1, 1, -1), (2, 1, 1),
                        (0, 2, 1), (2, 2, -1)]})


def test_circle_homology():
    h = homology_integer(circle_chain())
    assert h.groups[0] == (1, ())
    assert h.groups[1] == (1, ())


def test_projective_plane_torsion():
    # minimal CW model: one cell per dimension, degree-2 attaching map
    chain = ChainComplex(ranks={0: 1, 1: 1, 2: 1},
                         boundaries={1: [], 2: [(0, 0, 2)]})
    h = homology_integer(chain)
    assert h.groups[1] == (0, (2,))
    assert h.groups.get(2, (0, ())) == (0, ())
    assert homology_mod_p(chain, 2) == {0: 1, 1: 1, 2: 1}
    coh = h.cohomology_groups()
    assert coh[2] == (0, (2,))


def test_dd_nonzero_rejected():
    bad = ChainComplex(ranks={0: 1, 1: 1, 2: 1},
                       boundaries={1: [(0, 0, 1)], 2: [(0, 0, 1)]})
    with pytest.raises(ContractViolationError):
        bad.validate()


def test_euler_is_exact_int():
    chi = euler_characteristic(circle_chain())
    assert chi == 0 and isinstance(chi, int)


matrix_strategy = st.integers(min_value=1, max_value=4).flatmap(
    lambda ncols: st.lists(
        st.lists(st.integers(min_value=-4, max_value=4),
                 min_size=ncols, max_size=ncols),
        min_size=1, max_size=4))


@settings(max_examples=60, deadline=None)
@given(matrix_strategy)
def test_invariant_factors_match_sympy(rows):
    nrows, ncols = len(rows), len(rows[0])
    entries = [(i, j, rows[i][j]) for i in range(nrows) for j in range(ncols)
               if rows[i][j]]
    got = invariant_factors(entries, nrows, ncols)
    snf = smith_normal_form(sympy.Matrix(rows))
    diag = sorted(abs(snf[i, i]) for i in range(min(snf.rows, snf.cols))
                  if snf[i, i] != 0)
    assert sorted(got) == diag


@settings(max_examples=40, deadline=None)
@given(matrix_strategy, st.sampled_from([2, 3, 5]))
def test_rank_mod_p_matches_sympy(rows, p):
    nrows, ncols = len(rows), len(rows[0])
    entries = [(i, j, rows[i][j]) for i in range(nrows) for j in range(ncols)
               if rows[i][j] % p]
    mat = sympy.Matrix(rows).applyfunc(lambda x: x % p)
    expected = mat.rank(iszerofunc=lambda x: x % p == 0)
    assert rank_mod_p(entries, nrows, ncols, p) == expected


def interval_chain() -> ChainComplex:
    # path with 3 vertices, 2 edges; contractible
    return ChainComplex(ranks={0: 3, 1: 2},
                        boundaries={1: [(0, 0, -1), (1, 0, 1),
                                        (1, 1, -1), (2, 1, 1)]})


def test_morse_reduce_interval_to_point():
    chain = interval_chain()
    matching = MorseMatching(pairs=((0, 1, 0, 1), (0, 2, 1, 1)))
    ok, witness = verify_acyclic(chain, matching)
    assert ok and witness is None
    reduced = morse_reduce(chain, matching)
    assert {d: r for d, r in reduced.ranks.items() if r} == {0: 1}
    assert homology_integer(reduced).groups[0] == (1, ())


def test_morse_cycle_detected():
    chain = circle_chain()
    # matching vertex i with edge i for all i is not acyclic
    matching = MorseMatching(pairs=((0, 0, 0, -1), (0, 1, 1, -1),
                                    (0, 2, 2, -1)))
    ok, witness = verify_acyclic(chain, matching)
    assert not ok and witness


def sphere_cells(level_split: bool) -> "CellComplex":
    # boundary of a tetrahedron as a simplicial complex
    cx = CellComplex()
    verts = [1, 2, 3, 4]
    for v in verts:
        cx.add_cell(0, (v,), level=0 if level_split and v < 3 else 1)
    import itertools
    for e in itertools.combinations(verts, 2):
        lvl = 0 if level_split and e[1] < 3 else 1
        cx.add_cell(1, e, [((e[1],), 1), ((e[0],), -1)], level=lvl)
    for f in itertools.combinations(verts, 3):
        bnd = []
        for j, v in enumerate(f):
            face = tuple(x for x in f if x != v)
            bnd.append((face, (-1) ** j))
        cx.add_cell(2, f, bnd, level=1)
    return cx


def test_spectral_pages_converge_to_sphere():
    cx = sphere_cells(level_split=True)
    filtered = cx.filtered_chain_complex()
    pages = spectral_pages(filtered, 2, 4)
    final = pages[4]
    totals = {}
    for (p, q), dim in final.items():
        totals[p + q] = totals.get(p + q, 0) + dim
    assert totals == {0: 1, 2: 1}
