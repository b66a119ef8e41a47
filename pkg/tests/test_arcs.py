import pytest

from cyclehom.arcs import (alpha_parity, arc_degree_to_page_column,
                           build_arc_complex, e2_table, e2_table_json,
                           enumerate_arc_pictures, full_row_complex,
                           full_row_matching)
from cyclehom.chainalg import (homology_integer, homology_mod_p,
                               morse_reduce, verify_acyclic)
from cyclehom.torusfront import build_phi


def test_pictures_match_spaced_blocks():
    for m, t in [(6, 1), (7, 2), (9, 3), (10, 2)]:
        pictures = enumerate_arc_pictures(m, t)
        phi = build_phi(t, m, 3)
        assert {d: len(keys) for d, keys in pictures.items() if keys} == \
            phi.f_vector()


def test_arc_complex_dd_zero():
    for m in range(6, 12):
        for t in range(1, m // 3 + 1):
            build_arc_complex(m, 4, t).chain_complex(check=True).validate()


def test_mod_two_reduction_matches():
    for m, n, t in [(7, 4, 2), (8, 5, 2), (9, 4, 3)]:
        over_z = build_arc_complex(m, n, t, ring="Z")
        over_z2 = build_arc_complex(m, n, t, ring="Z2")
        assert over_z.cells == over_z2.cells
        for key, bnd in over_z.boundary_map.items():
            lhs = sorted((k, c % 2) for k, c in bnd if c % 2)
            rhs = sorted((k, c % 2) for k, c in over_z2.boundary_map[key]
                         if c % 2)
            assert lhs == rhs, (m, n, t, key)


def test_known_torsion_entry():
    # (8,6), t=2: the top arc degree carries 2-torsion
    h = homology_integer(build_arc_complex(8, 6, 2).chain_complex())
    assert any((2,) == t for _, t in h.groups.values())


def test_alpha_parity_formula():
    for m in range(6, 11):
        for n in range(4, 7):
            for t in range(2, m // 3 + 1):
                expected = "odd" if (m + t + 1) * (n + 1) % 2 else "even"
                assert alpha_parity(m, n, t) == expected


def test_page_column_conversion():
    assert arc_degree_to_page_column(8, 2, 0) == 5
    assert arc_degree_to_page_column(8, 2, 1) == 4


def test_e2_closed_table_mod_two():
    entries = {(p, q): grp for p, q, grp in e2_table(6, 4, ring="Z2")}
    assert entries[(0, 0)] == "Z2"
    assert entries[(3, 2)] == "Z2"
    assert entries[(3, 4)] == "Z2^3"  # 3 | m contribution


def test_e2_closed_table_integral():
    entries = {(p, q): grp for p, q, grp in e2_table(6, 4, ring="Z")}
    assert entries[(3, 2)] == "Z"  # m(n+1) even
    assert (2, 2) not in entries


def test_e2_json_shape():
    obj = e2_table_json(7, 5, ring="Z2")
    assert obj["m"] == 7 and obj["n"] == 5 and obj["ring"] == "Z2"
    assert all({"p", "q", "group"} == set(e) for e in obj["entries"])


def test_full_row_collapses_to_arc_complex():
    for m, t in [(7, 2), (8, 2), (9, 3)]:
        chain, basis = full_row_complex(m, t)
        matching = full_row_matching(m, t, basis)
        ok, witness = verify_acyclic(chain, matching)
        assert ok, witness
        reduced = morse_reduce(chain, matching)
        arc = build_arc_complex(m, 4, t, ring="Z2").chain_complex(check=False)
        # row degree = arc degree + t - 1
        shifted = {d - (t - 1): b
                   for d, b in homology_mod_p(reduced, 2).items() if b}
        assert shifted == {d: b
                           for d, b in homology_mod_p(arc, 2).items() if b}
