"""Arc pictures on a cycle and their signed cochain complexes.

A picture is a decomposition of the m-cycle into t arcs (runs of length >= 2)
separated by t gaps of size 1 or 2; pictures are keyed by their gap blocks,
which makes them literally the cells of the spaced-subset complex with gap
parameter 3.  The degree-raising differential fills one element of a 2-gap.
Over the integers each term carries a sign depending on a parameter n (the
number of colors), followed by a renormalization sign when the filled vertex
becomes a new arc left endpoint.  The complexes compute one row of a
spectral-sequence page; closed forms for those entries live in e2_table.
"""

from __future__ import annotations

from itertools import combinations

from .cells import CellComplex
from .chainalg import ChainComplex, MorseMatching
from .graphs import InvalidParameterError
from .torusfront import build_phi

# --- pictures ------------------------------------------------------------------


def enumerate_arc_pictures(m: int, t: int) -> dict[int, list[tuple]]:
    """Pictures keyed by gap blocks, grouped by the number of 2-gaps."""
    if m < 3 or t < 1:
        raise InvalidParameterError("need m >= 3, t >= 1")
    phi = build_phi(t, m, 3)
    return {d: list(keys) for d, keys in phi.cells.items() if keys}


def _s_set(m: int, gaps) -> set[int]:
    out = set(range(1, m + 1))
    for blk in gaps:
        out.difference_update(blk)
    return out


def _left_endpoints(m: int, gaps) -> set[int]:
    return {blk[-1] % m + 1 for blk in gaps}


def _fill_sign(m: int, n: int, gaps, w: int) -> int:
    """(-1)^(number of S-elements below w + n * representatives below w)."""
    s = _s_set(m, gaps)
    v = _left_endpoints(m, gaps)
    below_s = sum(1 for x in s if x < w)
    below_v = sum(1 for x in v if x < w)
    return (-1) ** ((below_s + n * below_v) % 2)


def representative_shift_sign(m: int, n: int, t: int, new_s_size: int,
                              from_vertex: int, to_vertex: int) -> int:
    """Sign for moving an arc's representative one step left within the arc;
    the wrap move from 1 to m carries an extra n-dependent parity."""
    if (from_vertex - to_vertex) % m not in (1, m - 1):
        raise InvalidParameterError("representative moves are between neighbors")
    if (from_vertex, to_vertex) == (1, m):
        b = new_s_size - 2
        return (-1) ** ((n * t + n * b + n + 1) % 2)
    return -1


def _replace_block(gaps, old, new) -> tuple:
    rest = [b for b in gaps if b != old]
    return tuple(sorted(rest + [new], key=lambda blk: blk[0]))


def build_arc_complex(m: int, n: int, t: int, ring: str = "Z") -> CellComplex:
    """Complex of pictures, chain degree = number of 2-gaps; the boundary of
    a picture fills one element of one 2-gap (two terms per 2-gap)."""
    if ring not in ("Z", "Z2"):
        raise InvalidParameterError("ring must be Z or Z2")
    pictures = enumerate_arc_pictures(m, t)
    cx = CellComplex()
    for i in sorted(pictures):
        for gaps in pictures[i]:
            bnd = []
            for blk in gaps:
                if len(blk) != 2:
                    continue
                u, v = blk
                s_size = m - sum(len(b) for b in gaps)
                # fill u: the arc left of the gap grows rightwards
                coeff = _fill_sign(m, n, gaps, u)
                bnd.append((_replace_block(gaps, blk, (v,)), coeff))
                # fill v: v becomes the new left endpoint of the next arc
                coeff = _fill_sign(m, n, gaps, v)
                coeff *= representative_shift_sign(
                    m, n, t, s_size + 1, from_vertex=v % m + 1, to_vertex=v)
                bnd.append((_replace_block(gaps, blk, (u,)), coeff))
            if ring == "Z2":
                bnd = [(k, 1) for k, _ in bnd]
            cx.add_cell(i, gaps, bnd)
    return cx


def arc_degree_to_page_column(m: int, t: int, i: int) -> int:
    """Chain degree i (2-gap count) sits in page column p = m - t - 1 - i."""
    return m - t - 1 - i


def alpha_parity(m: int, n: int, t: int) -> str:
    """Parity deciding torsion vs free top entry: odd iff (m+t+1)(n+1) odd."""
    return "odd" if ((m + t + 1) * (n + 1)) % 2 else "even"


# --- closed-form page tables -----------------------------------------------------


def e2_table(m: int, n: int, ring: str = "Z") -> list[tuple[int, int, str]]:
    """All covered entries (p, q, group) of the second page, columns p != m-1."""
    if m < 5 or n < 4:
        raise InvalidParameterError("table needs m >= 5, n >= 4")
    if ring not in ("Z", "Z2"):
        raise InvalidParameterError("ring must be Z or Z2")
    entries: list[tuple[int, int, str]] = [(0, 0, "Z2" if ring == "Z2" else "Z")]
    if ring == "Z2":
        entries.append((m - 3, n - 2, "Z2"))
        for t in range(2, (m - 1) // 3 + 1):
            entries.append((m - t - 2, t * (n - 2), "Z2"))
            entries.append((m - t - 1, t * (n - 2), "Z2"))
        if m % 3 == 0:
            entries.append((2 * m // 3 - 1, m * (n - 2) // 3, "Z2^3"))
    else:
        entries.append((m - 3, n - 2, "Z" if (m * (n + 1)) % 2 == 0 else "0"))
        entries.append((m - 2, n - 2, "0"))
        for t in range(2, (m - 1) // 3 + 1):
            if n % 2 == 1 or (m + t) % 2 == 1:
                pair = ("Z", "Z")
            else:
                pair = ("0", "Z2")
            entries.append((m - t - 2, t * (n - 2), pair[0]))
            entries.append((m - t - 1, t * (n - 2), pair[1]))
        if m % 3 == 0:
            entries.append((2 * m // 3 - 1, m * (n - 2) // 3, "Z^3"))
    return sorted(entries)


def e2_table_json(m: int, n: int, ring: str = "Z") -> dict:
    return {
        "m": m, "n": n, "ring": ring,
        "entries": [{"p": p, "q": q, "group": g}
                    for p, q, g in e2_table(m, n, ring)],
    }


# --- the full spectral row and its collapse --------------------------------------


def _cyclic_components(m: int, s: frozenset[int]) -> list[list[int]]:
    if len(s) == m:
        return [sorted(s)]
    comps = []
    for x in sorted(s):
        if (x - 2) % m + 1 in s:
            continue
        comp = [x]
        y = x % m + 1
        while y in s:
            comp.append(y)
            y = y % m + 1
        comps.append(comp)
    return comps


def full_row_complex(m: int, t: int):
    """Mod-2 complex on pairs (S, A): S a proper subset, A a set of t marked
    runs of S with length >= 2; chain degree m - 1 - |S|; the boundary adds
    one vertex without merging two marked runs (the marks follow their runs).
    Returns (ChainComplex, basis keyed by degree)."""
    basis: dict[int, list[tuple]] = {}
    for size in range(2 * t, m):
        degree = m - 1 - size
        keys = []
        for combo in combinations(range(1, m + 1), size):
            s = frozenset(combo)
            arcs = [tuple(c) for c in _cyclic_components(m, s) if len(c) >= 2]
            for marked in combinations(arcs, t):
                keys.append((s, frozenset(marked)))
        if keys:
            basis[degree] = keys

    def fill(key, w):
        """The pair after adding w, or None when two marked runs merge."""
        s, marked = key
        bigger = s | {w}
        comps = {tuple(c) for c in _cyclic_components(m, bigger)}
        new_marked = set()
        for arc in marked:
            holder = next(c for c in comps if arc[0] in c)
            if holder in new_marked:
                return None
            new_marked.add(holder)
        return bigger, frozenset(new_marked)

    ranks = {d: len(keys) for d, keys in basis.items()}
    boundaries: dict[int, list[tuple[int, int, int]]] = {}
    for d, keys in basis.items():
        if d - 1 not in basis:
            continue
        target = {key: i for i, key in enumerate(basis[d - 1])}
        triples = []
        for col, key in enumerate(keys):
            for w in range(1, m + 1):
                if w in key[0]:
                    continue
                filled = fill(key, w)
                if filled is not None and filled in target:
                    triples.append((target[filled], col, 1))
        if triples:
            boundaries[d] = triples
    return ChainComplex(ranks, boundaries), basis


def full_row_matching(m: int, t: int, basis) -> MorseMatching:
    """Toggle the smallest vertex not in or next to any marked run; critical
    cells are exactly the pictures whose marked runs plus their neighbors
    cover the whole cycle."""
    index = {d: {key: i for i, key in enumerate(keys)}
             for d, keys in basis.items()}
    pairs = []
    for d, keys in basis.items():
        for key in keys:
            s, marked = key
            hull = set()
            for arc in marked:
                hull.update(arc)
                hull.add((arc[0] - 2) % m + 1)
                hull.add(arc[-1] % m + 1)
            free = [x for x in range(1, m + 1) if x not in hull]
            if not free:
                continue
            x = min(free)
            if x in s:
                continue  # upper member of its pair
            partner = (s | {x}, marked)
            pairs.append((d - 1, index[d - 1][partner], index[d][key], 1))
    return MorseMatching(tuple(pairs))
