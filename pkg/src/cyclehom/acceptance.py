"""The verification suite: ten independent checks pitting brute-force builds
against closed forms.  Each criterion returns (ok, elapsed_seconds, detail)
and has a pinned runtime budget; run_all prints one line per criterion.
"""

from __future__ import annotations

import random
import time
from itertools import combinations
from math import gcd

from .arcs import (
    alpha_parity,
    arc_degree_to_page_column,
    build_arc_complex,
    e2_table,
)
from .chainalg import (
    e_infinity,
    homology_integer,
    homology_mod_p,
    spectral_pages,
    verify_acyclic,
)
from .formulas import (
    euler_complete,
    euler_cycle,
    euler_hom_plus_identity,
    euler_hom_via_mobius,
    hom_cycle_alternating_count,
    hom_cycle_cohomology,
    homplus_cycle_formula,
    ind_cycle_formula,
    reduced_euler,
)
from .graphs import Graph, categorical_product, make_standard, strong_complement
from .homspaces import (
    ComplexTooLargeError,
    filtration_by_support,
    hom_complex,
    hom_plus,
    independence_complex,
)
from .torusfront import (
    FrontParams,
    build_band_front_complex,
    build_phi,
    cycle_component,
    garland_census,
    grind,
    phi_front_dictionary,
    thin_garland,
    width_spread,
)

BUDGETS = {1: 1, 2: 30, 3: 300, 4: 600, 5: 300,
           6: 10, 7: 60, 8: 120, 9: 300, 10: 120}


def _nonzero(result) -> dict:
    return {d: result.groups[d] for d in result.nonzero_degrees()}


def criterion_1():
    """Independent-set complexes of cycles match the sphere formula."""
    for m in range(3, 13):
        got = _nonzero(independence_complex(make_standard("cycle", m)).homology())
        want = ind_cycle_formula(m).groups()
        if got != want:
            return False, f"m={m}: {got} != {want}"
    return True, "m=3..12 all match"


def _random_graph(rng: random.Random) -> Graph:
    n = rng.randint(1, 5)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < 0.5]
    return Graph(n, frozenset(edges))


def criterion_2():
    """Partial-map complexes match product independence complexes in
    homology for 20 random graph pairs."""
    rng = random.Random(20240)
    done = 0
    while done < 20:
        t_graph, g_graph = _random_graph(rng), _random_graph(rng)
        try:
            plus = hom_plus(t_graph, g_graph, max_cells=150_000,
                            assert_product=False)
        except ComplexTooLargeError:
            continue
        product = categorical_product(t_graph, strong_complement(g_graph))
        got = _nonzero(homology_integer(plus.chain_complex(augmented=True)))
        want = _nonzero(independence_complex(product).homology())
        if got != want:
            return False, f"pair {t_graph}, {g_graph}: {got} != {want}"
        done += 1
    return True, "20 random pairs match"


def criterion_3():
    """Partial-map complexes of cycles are wedges of spheres as predicted."""
    for (m, n) in [(4, 3), (5, 3), (4, 4), (5, 4), (6, 4)]:
        plus = hom_plus(make_standard("cycle", m), make_standard("complete", n),
                        assert_product=False)
        got = _nonzero(homology_integer(
            plus.chain_complex(augmented=True, check=False), check=False))
        want = homplus_cycle_formula(m, n).groups()
        if got != want:
            return False, f"({m},{n}): {got} != {want}"
    return True, "5 cases incl. rank 16 at (6,4)"


def criterion_4():
    """Integral cohomology of coloring complexes of cycles matches the
    assembled closed form."""
    for (m, n) in [(5, 4), (6, 4), (7, 4), (5, 5), (6, 5)]:
        cx = hom_complex(make_standard("cycle", m), make_standard("complete", n))
        h = homology_integer(cx.chain_complex(augmented=True, check=False),
                             check=False)
        got = {d: g for d, g in h.cohomology_groups().items() if g != (0, ())}
        want = hom_cycle_cohomology(m, n).groups()
        if got != want:
            return False, f"({m},{n}): {got} != {want}"
    return True, "5 cases incl. Z(1)+Z^14(2) at (6,4)"


def criterion_5():
    """Euler-characteristic identities: transfer-matrix counts, the complete
    graph sum, and the two inclusion-exclusion identities."""
    for m in range(5, 10):
        for n in (4, 5):
            if euler_cycle(m, n) != hom_cycle_alternating_count(m, n):
                return False, f"cycle count mismatch at ({m},{n})"
    for (m, n) in [(2, 3), (2, 4), (3, 3), (3, 4), (3, 5)]:
        brute = reduced_euler(hom_complex(make_standard("complete", m),
                                          make_standard("complete", n)))
        if euler_complete(m, n) != brute:
            return False, f"complete-graph mismatch at ({m},{n})"
    rng = random.Random(5)
    done = 0
    while done < 20:
        t_graph, g_graph = _random_graph(rng), _random_graph(rng)
        if t_graph.vertex_count > 4 or g_graph.vertex_count > 4:
            continue
        lhs, rhs = euler_hom_plus_identity(t_graph, g_graph)
        if lhs != rhs:
            return False, f"subset identity fails for {t_graph}, {g_graph}"
        direct = reduced_euler(hom_complex(t_graph, g_graph))
        if euler_hom_via_mobius(t_graph, g_graph) != direct:
            return False, f"inversion identity fails for {t_graph}, {g_graph}"
        done += 1
    return True, "counts, complete sums, 20 random identities"


def criterion_6():
    """Structure of the spaced circular subset complexes."""
    for (m, g) in [(2, 3), (3, 2), (2, 4)]:
        tight = build_phi(m, g * m, g)
        if tight.f_vector() != {0: g}:
            return False, f"({m},{g*m},{g}): {tight.f_vector()} != {{0: {g}}}"
        loose = build_phi(m, g * m + 1, g)
        if loose.f_vector() != {0: g * m + 1, 1: g * m + 1}:
            return False, f"({m},{g*m+1},{g}) is not a {g*m+1}-cycle"
        h = homology_integer(loose.chain_complex(augmented=True))
        if _nonzero(h) != {1: (1, ())}:
            return False, f"({m},{g*m+1},{g}) homology {_nonzero(h)}"
    for m in range(1, 5):
        for g in range(1, 4):
            for n in range(g * m, 15):
                cx = build_phi(m, n, g)
                want = min(m, n - g * m)
                if cx.dimension() != want:
                    return False, f"dim ({m},{n},{g}) = {cx.dimension()} != {want}"
    return True, "point sets, cycles, dimension grid"


def criterion_7():
    """Grinding: acyclic matching, homology preservation, garland census."""
    checked = 0
    for m in range(1, 5):
        for g in range(1, 4):
            for n in range(g * m, 15):
                params = FrontParams(north=m, east=n - m, g=g, band=1)
                if n > m:
                    mapping = phi_front_dictionary(m, n, g)
                    cx = build_band_front_complex(params)
                    if set(mapping.values()) != {
                            k for ks in cx.cells.values() for k in ks}:
                        return False, f"dictionary mismatch at ({m},{n},{g})"
                else:
                    cx = build_band_front_complex(params)
                result = grind(cx, params)
                chain = cx.chain_complex(augmented=True)
                ok, witness = verify_acyclic(chain, result.matching)
                if not ok:
                    return False, f"matching cycle at ({m},{n},{g}): {witness}"
                h_full = _nonzero(homology_integer(chain))
                h_thin = _nonzero(homology_integer(
                    result.thin.chain_complex(augmented=True)))
                if h_full != h_thin:
                    return False, f"homology changed at ({m},{n},{g})"
                full2 = homology_mod_p(chain, 2)
                thin2 = homology_mod_p(result.thin.chain_complex(augmented=True), 2)
                if full2 != thin2:
                    return False, f"mod-2 homology changed at ({m},{n},{g})"
                if n - m > m * (g - 1):
                    want = thin_garland(params)
                    maximal, dims, comps, very_thin = garland_census(
                        result.thin, params)
                    if (len(maximal) != want.cube_count
                            or dims != [want.cube_dim]
                            or comps != want.circle_count):
                        return False, (f"census ({m},{n},{g}): {len(maximal)} "
                                       f"cells of dims {dims}, {comps} comps")
                    for key, (count, pair) in zip(maximal, very_thin):
                        if count != 2:
                            return False, f"very-thin count wrong at ({m},{n},{g})"
                        if (pair[0] & pair[1]
                                or pair[0] | pair[1] != set(key[2])):
                            return False, f"very-thin pair not antipodal at ({m},{n},{g})"
                checked += 1
    return True, f"{checked} parameter triples ground"


def criterion_8():
    """Arc complexes: integer dd=0, mod-2 match with the cubical complex,
    homology at the covered page entries, and the torsion parity rule."""
    for m in range(6, 11):
        for n in range(4, 7):
            for t in range(1, m // 3 + 1):
                cx = build_arc_complex(m, n, t, "Z")
                chain = cx.chain_complex()  # validates dd=0 over Z
                phi = build_phi(t, m, 3)
                for d, keys in phi.cells.items():
                    if cx.cells.get(d, []) != keys:
                        return False, f"basis mismatch ({m},{n},{t})"
                    for key in keys:
                        lhs = sorted((k, c % 2) for k, c in cx.boundary_map[key])
                        rhs = sorted((k, c % 2) for k, c in phi.boundary_map[key])
                        if lhs != rhs:
                            return False, f"mod-2 boundary mismatch ({m},{n},{t})"
                h = homology_integer(chain, check=False)
                by_p = {arc_degree_to_page_column(m, t, i): g
                        for i, g in h.groups.items()}
                table = {(p, q): grp for p, q, grp in e2_table(m, n)}
                covered = ([(m - 3, "t1")] if t == 1
                           else [(m - t - 2, "lo"), (m - t - 1, "hi")])
                for p, _ in covered:
                    want = table.get((p, t * (n - 2)), "0")
                    got = by_p.get(p, (0, ()))
                    translated = {"0": (0, ()), "Z": (1, ()), "Z2": (0, (2,)),
                                  "Z^3": (3, ())}[want]
                    if got != translated:
                        return False, (f"({m},{n},{t}) p={p}: {got} != "
                                       f"{translated}")
                parity = alpha_parity(m, n, t)
                top = h.groups.get(0, (0, ()))
                if t <= (m - 1) // 3 and t >= 2:
                    torsion_case = parity == "odd"
                    if torsion_case != (top == (0, (2,))):
                        return False, f"parity mismatch at ({m},{n},{t})"
    return True, "grid m=6..10, n=4..6 verified"


def criterion_9():
    """Mod-2 spectral pages of the support filtration: second page matches
    the closed-form table on covered columns; the stable page totals match
    the sphere-wedge Betti numbers."""
    for (m, n) in [(5, 4), (6, 4)]:
        plus = hom_plus(make_standard("cycle", m), make_standard("complete", n),
                        assert_product=False)
        filt = filtration_by_support(plus)
        page2 = spectral_pages(filt, 2, 2, check=False)[2]
        table = {(p, q): {"Z2": 1, "Z2^3": 3}[grp]
                 for p, q, grp in e2_table(m, n, "Z2") if grp != "0"}
        got = {(p, q): dim for (p, q), dim in page2.items() if p <= m - 2}
        if got != table:
            return False, f"({m},{n}) second page {got} != {table}"
        stable = e_infinity(filt, 2, check=False)
        totals: dict[int, int] = {}
        for (p, q), dim in stable.items():
            totals[p + q] = totals.get(p + q, 0) + dim
        want = {0: 1}
        for d, b, _ in homplus_cycle_formula(m, n).entries:
            want[d] = want.get(d, 0) + b
        if totals != want:
            return False, f"({m},{n}) stable totals {totals} != {want}"
    return True, "(5,4) and (6,4) pages verified"


def criterion_10():
    """Cycle-to-cycle map components: point or circle homology, and garland
    censuses with the two-circle parity rule."""
    for (m, n) in [(5, 3), (6, 3), (7, 3), (6, 6), (5, 5)]:
        for w in range(-(m // n) - 1, m // n + 2):
            rem = m - n * abs(w)
            if rem < 0 or rem % 2:
                continue
            cx = cycle_component(m, n, w)
            r = rem // 2
            h = _nonzero(homology_integer(cx.chain_complex(augmented=True)))
            if r == 0:
                if set(h) - {0}:
                    return False, f"degenerate ({m},{n},{w}) not discrete: {h}"
                continue
            expected_circles = 2 if m % 2 == 0 and n % 2 == 0 else 1
            want = ({1: (1, ())} if expected_circles == 1
                    else {0: (1, ()), 1: (2, ())})
            if h != want:
                return False, f"({m},{n},{w}) homology {h} != {want}"
            params = FrontParams(north=r, east=m - r, g=1, band=n)
            result = grind(cx, params)
            ok, witness = verify_acyclic(cx.chain_complex(), result.matching)
            if not ok:
                return False, f"matching cycle at ({m},{n},{w})"
            desc = thin_garland(params)
            maximal, dims, comps, very_thin = garland_census(result.thin, params)
            if (len(maximal), dims, comps) != (
                    desc.cube_count, [desc.cube_dim], desc.circle_count):
                return False, (f"census ({m},{n},{w}): {len(maximal)} cells "
                               f"dims {dims} comps {comps} vs {desc}")
            if desc.cube_count != m * n // gcd(m, r):
                return False, f"cube count formula broken at ({m},{n},{w})"
            if any(count != 2 for count, _ in very_thin):
                return False, f"very-thin count wrong at ({m},{n},{w})"
    return True, "windings of 5 cycle pairs verified"


CRITERIA = {i: fn for i, fn in enumerate(
    [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
     criterion_6, criterion_7, criterion_8, criterion_9, criterion_10],
    start=1)}


def run_criterion(i: int):
    start = time.monotonic()
    ok, detail = CRITERIA[i]()
    elapsed = time.monotonic() - start
    return ok, elapsed, detail


def run_all(selected=None, out=print) -> bool:
    all_ok = True
    for i in sorted(selected or CRITERIA):
        ok, elapsed, detail = run_criterion(i)
        within = elapsed <= BUDGETS[i]
        all_ok = all_ok and ok and within
        status = "PASS" if ok and within else "FAIL"
        out(f"{status} criterion {i}: {detail} "
            f"[{elapsed:.1f}s / budget {BUDGETS[i]}s]")
    return all_ok
