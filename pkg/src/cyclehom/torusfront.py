"""Cubical complexes of circular spaced subsets and of torus fronts.

A front is a cyclic word over {N, E} (a monotone grid path on a torus) plus a
band offset; a cube is a front together with a set of pairwise non-adjacent
sharp-corner positions that may each be flipped between their NW and SE
resolutions.  Width is measured by the exact integer spread of the linear
form c = north*x - east*y along the path; "thin" means spread <= word length.
The grind operation removes all wide cells through an acyclic Morse matching
(a collapse sequence), leaving the thin garland core.  The same machinery
models the connected components of the complex of cycle-to-cycle graph maps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .cells import CellComplex
from .chainalg import ContractViolationError, MorseMatching
from .graphs import InvalidParameterError, make_standard
from .homspaces import hom_complex


@dataclass(frozen=True)
class FrontParams:
    north: int
    east: int
    g: int = 1
    band: int = 1

    def __post_init__(self):
        if self.north < 0 or self.east < 0 or self.north + self.east == 0:
            raise InvalidParameterError("need north, east >= 0 with positive length")
        if self.g < 1 or self.band < 1:
            raise InvalidParameterError("need g >= 1 and band >= 1")

    @property
    def length(self) -> int:
        return self.north + self.east

    def is_nonempty(self) -> bool:
        return self.east >= self.north * (self.g - 1)


@dataclass(frozen=True)
class GarlandDescriptor:
    cube_count: int
    cube_dim: int
    circle_count: int
    degenerate: bool = False

    def to_json_dict(self) -> dict:
        return {"cubes": self.cube_count, "dim": self.cube_dim,
                "circles": self.circle_count}


# --- words and width -----------------------------------------------------------


def gap_ok(word: str, g: int) -> bool:
    """Every cyclic stretch of E's between consecutive N's has length >= g-1."""
    if g <= 1 or 'N' not in word:
        return True
    i = word.index('N')
    rotated = word[i + 1:] + word[:i + 1]  # ends with N
    segments = rotated.split('N')[:-1]
    return all(len(seg) >= g - 1 for seg in segments)


def _c_walk(params: FrontParams, word: str) -> list[int]:
    c = [0]
    for ch in word[:-1]:
        c.append(c[-1] + (params.north if ch == 'E' else -params.east))
    return c


def _swap(word: str, p: int) -> str:
    """Toggle the letters at cyclic positions p-1 and p."""
    L = len(word)
    q = (p - 1) % L
    chars = list(word)
    chars[q], chars[p] = chars[p], chars[q]
    return "".join(chars)


def _is_nw_corner(word: str, p: int) -> bool:
    return word[(p - 1) % len(word)] == 'N' and word[p] == 'E'


def _is_se_corner(word: str, p: int) -> bool:
    return word[(p - 1) % len(word)] == 'E' and word[p] == 'N'


def width_spread(params: FrontParams, word: str,
                 positions: tuple[int, ...] = ()):
    """(spread, kind) with kind in {wide, thin, very_thin}; for a cube the
    spread ranges over all member fronts."""
    c = _c_walk(params, word)
    L = params.length
    pos = set(positions)
    cmin = min(c)
    cmax = max(max((c[i] for i in range(L) if i not in pos), default=cmin),
               max((c[p] + L for p in pos), default=cmin))
    delta = cmax - cmin
    kind = "very_thin" if delta < L else ("thin" if delta == L else "wide")
    return delta, kind


def extreme_corners(params: FrontParams, word: str,
                    positions: tuple[int, ...] = ()):
    """Positions achieving the minimal (northwest) and maximal (southeast)
    c-value over the cell's member fronts."""
    c = _c_walk(params, word)
    L = params.length
    pos = set(positions)
    cmin = min(c)
    cmax = max(max((c[i] for i in range(L) if i not in pos), default=cmin),
               max((c[p] + L for p in pos), default=cmin))
    nw = [i for i in range(L) if c[i] == cmin]
    se = [i for i in range(L)
          if (i in pos and c[i] + L == cmax) or (i not in pos and c[i] == cmax)]
    return nw, se


# --- the band front complex ----------------------------------------------------


def _enumerate_words(params: FrontParams) -> list[str]:
    L, a = params.length, params.north
    words = []
    for npos in combinations(range(L), a):
        chars = ['E'] * L
        for i in npos:
            chars[i] = 'N'
        word = "".join(chars)
        if gap_ok(word, params.g):
            words.append(word)
    return words


def _cyclic_distance(p: int, q: int, L: int) -> int:
    d = (p - q) % L
    return min(d, L - d)


def _flip_sets(params: FrontParams, word: str) -> list[tuple[int, ...]]:
    """All non-interfering sharp-corner sets whose members all satisfy the
    gap condition (includes the empty set)."""
    L = params.length
    corners = [p for p in range(L) if _is_nw_corner(word, p)]
    out: list[tuple[int, ...]] = []

    def fat_ok(chosen: tuple[int, ...]) -> bool:
        # widen each flipped corner to cover both of its resolutions; every
        # remaining stretch of E's must still have length >= g - 1
        if params.g <= 1:
            return True
        chars = list(word)
        for p in chosen:
            chars[p] = 'N'
        fat = "".join(chars)
        if 'N' not in fat:
            return True
        if 'E' not in fat:
            return params.g <= 1
        i = next(j for j in range(len(fat))
                 if fat[j] == 'N' and fat[j - 1] == 'E')
        rot = fat[i:] + fat[:i]
        return all(len(seg) >= params.g - 1
                   for seg in re.split('N+', rot)[1:])

    def extend(idx: int, chosen: tuple[int, ...], members: list[str]) -> None:
        out.append(chosen)
        for k in range(idx, len(corners)):
            p = corners[k]
            if any(_cyclic_distance(p, q, L) < 2 for q in chosen):
                continue
            new_members = [_swap(mw, p) for mw in members]
            if (all(gap_ok(mw, params.g) for mw in new_members)
                    and fat_ok(chosen + (p,))):
                extend(k + 1, chosen + (p,), members + new_members)

    extend(0, (), [word])
    return out


def _high_resolution(params: FrontParams, offset: int, word: str, p: int):
    """Resolve the flip at p to its SE state; the wrap position shifts the
    band offset by two color steps."""
    new_offset = (offset + 2) % params.band if p == 0 else offset
    return new_offset, _swap(word, p)


def _low_of(key, p):
    offset, word, positions = key
    return offset, word, tuple(q for q in positions if q != p)


def _high_of(params: FrontParams, key, p):
    offset, word, positions = key
    o2, w2 = _high_resolution(params, offset, word, p)
    return o2, w2, tuple(q for q in positions if q != p)


def _direction_order(params: FrontParams, positions: tuple[int, ...]) -> list[int]:
    L = params.length
    return sorted(positions, key=lambda p: (p - 1) % L)


def _cube_boundary(params: FrontParams, key):
    bnd = []
    for j, p in enumerate(_direction_order(params, key[2])):
        sign = (-1) ** j
        bnd.append((_high_of(params, key, p), sign))
        bnd.append((_low_of(key, p), -sign))
    return bnd


def build_band_front_complex(params: FrontParams) -> CellComplex:
    """Cells keyed (offset, word, flip positions); cubical boundary."""
    cx = CellComplex()
    items = []
    for word in _enumerate_words(params):
        for positions in _flip_sets(params, word):
            for offset in range(params.band):
                items.append((len(positions), (offset, word, tuple(sorted(positions)))))
    items.sort()
    for d, key in items:
        cx.add_cell(d, key, _cube_boundary(params, key) if d else [])
    return cx


def cube_members(params: FrontParams, key):
    """All 2^dim member vertices as (vertex key, SE-resolved subset)."""
    offset, word, positions = key
    members = [((offset, word, ()), ())]
    for p in positions:
        extended = []
        for (o, w, _), subset in members:
            extended.append(((o, w, ()), subset))
            o2, w2 = _high_resolution(params, o, w, p)
            extended.append(((o2, w2, ()), subset + (p,)))
        members = extended
    return members


# --- the spaced circular subset complex -----------------------------------------


def _circ_distance(x: int, y: int, n: int) -> int:
    d = (x - y) % n
    return min(d, n - d)


def _block_distance(b1: tuple[int, ...], b2: tuple[int, ...], n: int) -> int:
    return min(_circ_distance(x, y, n) for x in b1 for y in b2)


def _phi_key(blocks) -> tuple:
    return tuple(sorted(blocks, key=lambda blk: blk[0]))


def build_phi(m: int, n: int, g: int) -> CellComplex:
    """Cubical complex of m blocks (singletons or adjacent pairs) on the
    circular n-set, pairwise at circular distance >= g."""
    if n < 1 or m < 0 or g < 1:
        raise InvalidParameterError("need n >= 1, m >= 0, g >= 1")
    cx = CellComplex()
    if m == 0:
        cx.add_cell(0, ())
        return cx
    # a block must also clear distance g from itself the long way around,
    # which only bites when m == 1
    blocks = [(s,) for s in range(1, n + 1)] if n >= g else []
    if n >= 2:
        blocks += [(s, s % n + 1) for s in range(1, n + 1) if n - 1 >= g]
    items = []
    for combo in combinations(blocks, m):
        if all(_block_distance(b1, b2, n) >= g
               for b1, b2 in combinations(combo, 2)):
            key = _phi_key(combo)
            items.append((sum(len(b) - 1 for b in key), key))
    items.sort()
    for d, key in items:
        bnd = []
        if d:
            pairs = [b for b in key if len(b) == 2]
            rest = [b for b in key if len(b) == 1]
            for j, blk in enumerate(pairs):
                others = rest + [b for b in pairs if b is not blk]
                sign = (-1) ** j
                bnd.append((_phi_key(others + [(blk[1],)]), sign))
                bnd.append((_phi_key(others + [(blk[0],)]), -sign))
        cx.add_cell(d, key, bnd)
    return cx


def phi_front_dictionary(m: int, n: int, g: int) -> dict:
    """Bijection from spaced-subset cells to front cells with north=m,
    east=n-m, band=1: element i becomes an N step at index i-1; a pair block
    starting at s becomes the flip at cyclic position s mod n."""
    if n <= m:
        raise InvalidParameterError("need n > m for the front encoding")
    phi = build_phi(m, n, g)
    mapping = {}
    for d, keys in phi.cells.items():
        for key in keys:
            starts = [blk[0] for blk in key]
            chars = ['E'] * n
            for s in starts:
                chars[s - 1] = 'N'
            positions = tuple(sorted(blk[0] % n for blk in key if len(blk) == 2))
            mapping[key] = (0, "".join(chars), positions)
    return mapping


# --- garlands and grinding -------------------------------------------------------


@dataclass
class GrindResult:
    matching: MorseMatching
    thin: CellComplex
    trace_lines: list[str]
    interval_count: int


def _sigma_down(params: FrontParams, key, nw_ext, se_ext):
    offset, word, positions = key
    pos = set(positions)
    for p in se_ext:
        if p in pos:
            offset, word = _high_resolution(params, offset, word, p)
    ext = set(nw_ext) | set(se_ext)
    return offset, word, tuple(sorted(pos - ext))


def _sigma_up(params: FrontParams, key, nw_ext, se_ext):
    offset, word, positions = key
    pos = set(positions)
    for p in se_ext:
        if p not in pos:
            if not _is_se_corner(word, p):
                raise ContractViolationError(
                    f"non-corner extreme at {p} in {key}")
            # re-base so the new flip direction sits at its NW resolution
            offset = (offset - 2) % params.band if p == 0 else offset
            word = _swap(word, p)
    ext = set(nw_ext) | set(se_ext)
    new_pos = tuple(sorted(pos | ext))
    L = params.length
    for p, q in combinations(new_pos, 2):
        if _cyclic_distance(p, q, L) < 2:
            raise ContractViolationError(
                f"interfering extreme flips {p},{q} for {key}")
    return offset, word, new_pos


def _toggle_extreme(params: FrontParams, key, e0, nw_ext, se_ext):
    offset, word, positions = key
    if e0 in positions:
        return (_low_of(key, e0) if e0 in nw_ext
                else _high_of(params, key, e0))
    if e0 in nw_ext:
        return offset, word, tuple(sorted(positions + (e0,)))
    o2 = (offset - 2) % params.band if e0 == 0 else offset
    return o2, _swap(word, e0), tuple(sorted(positions + (e0,)))


def grind(cx: CellComplex, params: FrontParams) -> GrindResult:
    """Morse matching that removes every wide cell; thin cells are critical.

    Wide cells of a common width partition into Boolean intervals between a
    minimal face (all extreme flips resolved) and a maximal cube (all extreme
    corners flipped); the matching toggles the smallest-index extreme corner
    within each interval.
    """
    L = params.length
    intervals: dict[tuple, list] = {}
    geometry: dict[tuple, tuple] = {}
    for d, keys in cx.cells.items():
        for key in keys:
            delta, kind = width_spread(params, key[1], key[2])
            if kind != "wide":
                continue
            nw, se = extreme_corners(params, key[1], key[2])
            down = _sigma_down(params, key, nw, se)
            up = _sigma_up(params, key, nw, se)
            intervals.setdefault((down, up), []).append(key)
            geometry[key] = (delta, tuple(nw), tuple(se))

    pairs = []
    trace_entries = []
    for (down, up), members in intervals.items():
        ext_count = len(up[2]) - len(down[2])
        if len(members) != 1 << ext_count:
            raise ContractViolationError(
                f"interval {down} -> {up} has {len(members)} members, "
                f"expected {1 << ext_count}")
        delta, nw, se = geometry[members[0]]
        e0 = min(set(nw) | set(se))
        for key in members:
            if e0 in key[2]:
                continue
            partner = _toggle_extreme(params, key, e0, nw, se)
            if not cx.has_cell(partner):
                raise ContractViolationError(
                    f"matched partner {partner} of {key} is not a cell")
            d = cx.dim_of(key)
            coeff = sum(v for fkey, v in cx.boundary_map[partner] if fkey == key)
            pairs.append((d, cx.index_of(key), cx.index_of(partner), coeff))
        trace_entries.append((delta, cx.dim_of(up), up, down))

    trace_entries.sort(key=lambda e: (-e[0], e[1], e[2]))
    trace_lines = [f"collapse {delta} {down} -> {up}"
                   for delta, _, up, down in trace_entries]

    thin = CellComplex()
    for d in sorted(cx.cells):
        for key in cx.cells[d]:
            if width_spread(params, key[1], key[2])[1] != "wide":
                thin.add_cell(d, key, cx.boundary_map[key])
    return GrindResult(MorseMatching(tuple(pairs)), thin, trace_lines,
                       len(intervals))


def thin_garland(params: FrontParams) -> GarlandDescriptor:
    """Closed-form census of the thin core."""
    a, b = params.north, params.east
    if a == 0:
        return GarlandDescriptor(params.band, 0, 0, degenerate=True)
    if params.band == 1:
        if b <= a * (params.g - 1):
            raise InvalidParameterError(
                "garland statement needs east > north*(g-1)")
        d = gcd(a, b)
        return GarlandDescriptor((a + b) // d, d, 1)
    # band case: source cycle length m = a + b, target cycle length n = band
    m, n = params.length, params.band
    d = gcd(m, a)
    circles = 2 if m % 2 == 0 and n % 2 == 0 else 1
    return GarlandDescriptor(m * n // d, d, circles)


def garland_census(thin: CellComplex, params: FrontParams):
    """Measured (maximal cell count, their dimensions, component count,
    very-thin-vertex counts per maximal cell)."""
    is_face = set()
    for key, bnd in thin.boundary_map.items():
        for fkey, _ in bnd:
            is_face.add(fkey)
    maximal = [key for d, keys in thin.cells.items() for key in keys
               if key not in is_face]
    dims = sorted({thin.dim_of(key) for key in maximal})

    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d, keys in thin.cells.items():
        for key in keys:
            for fkey, _ in thin.boundary_map[key]:
                parent[find(key)] = find(fkey)
    components = len({find(k) for keys in thin.cells.values() for k in keys})

    very_thin_counts = []
    for key in maximal:
        count = 0
        seen = set()
        antipodal_pair = []
        for vkey, subset in cube_members(params, key):
            if vkey in seen:
                continue
            seen.add(vkey)
            if width_spread(params, vkey[1])[1] == "very_thin":
                count += 1
                antipodal_pair.append(set(subset))
        very_thin_counts.append((count, antipodal_pair))
    return maximal, dims, components, very_thin_counts


# --- cycle-to-cycle map components ----------------------------------------------


def _front_to_colors(params: FrontParams, offset: int, word: str,
                     sign: int) -> list[int]:
    n = params.band
    colors = [(sign * offset) % n]
    for ch in word[:-1]:
        step = 1 if ch == 'E' else -1
        colors.append((colors[-1] + sign * step) % n)
    return colors


def front_to_map_cell(params: FrontParams, key, sign: int = 1):
    """The graph-map cell of a band front: singleton values along the color
    walk, two-element values (two colors apart) at flipped positions."""
    offset, word, positions = key
    n = params.band
    colors = _front_to_colors(params, offset, word, sign)
    values = []
    for j, col in enumerate(colors):
        if j in positions:
            other = (col + sign * 2) % n
            values.append(tuple(sorted((col + 1, other + 1))))
        else:
            values.append((col + 1,))
    return tuple(values)


def vertex_winding(eta, n: int) -> int:
    """Net signed traversal count of a map cell's single-valued vertex."""
    phi = [v[0] for v in eta]
    total = 0
    for i in range(len(phi)):
        step = (phi[(i + 1) % len(phi)] - phi[i]) % n
        if step == 1:
            total += 1
        elif step == n - 1:
            total -= 1
        else:
            raise InvalidParameterError("not a cycle-to-cycle map vertex")
    if total % n:
        raise ContractViolationError("winding not an integer multiple")
    return total // n


def cell_winding(cx: CellComplex, key, n: int) -> int:
    """Winding of any member vertex (take the minimal elements)."""
    eta = tuple((v[0],) for v in key)
    return vertex_winding(eta, n)


def cycle_component(m: int, n: int, w: int, check: bool = True) -> CellComplex:
    """The component(s) of the cycle-to-cycle map complex with winding w,
    realized as a band front complex; certified against the direct build."""
    if m < 3 or n < 3:
        raise InvalidParameterError("need cycle lengths >= 3")
    rem = m - n * abs(w)
    if rem < 0 or rem % 2:
        raise InvalidParameterError(
            f"no maps: m - n*|w| = {rem} must be even and >= 0")
    r = rem // 2
    sign = -1 if w < 0 else 1
    params = FrontParams(north=r, east=m - r, g=1, band=n)
    cx = build_band_front_complex(params)
    if check:
        hom = hom_complex(make_standard("cycle", m), make_standard("cycle", n))
        target = set()
        for d, keys in hom.cells.items():
            for key in keys:
                if cell_winding(hom, key, n) == w:
                    target.add(key)
        image = {}
        for d, keys in cx.cells.items():
            for key in keys:
                image[key] = front_to_map_cell(params, key, sign)
        if set(image.values()) != target or len(image) != len(set(image.values())):
            raise ContractViolationError(
                "front complex does not match the winding-w map cells")
        # mod-2 boundary agreement certifies the cell bijection respects faces
        for key, eta in image.items():
            lhs = sorted(image[fk] for fk, _ in cx.boundary_map[key])
            rhs = sorted(fk for fk, _ in hom.boundary_map[eta])
            if lhs != rhs:
                raise ContractViolationError(
                    f"boundary mismatch at {key}")
    return cx
