"""Exact chain-complex algebra: integer and mod-p homology, Euler
characteristics, discrete Morse reduction, and spectral-sequence pages of
filtered complexes over a prime field.

Conventions.  A ChainComplex stores boundary maps d_d : C_d -> C_{d-1} as
sparse (row, col, coeff) triples.  Homology is computed and stored; for the
finite free complexes built here, cohomology has the same free part per
degree and the torsion of H^d equals the torsion of H_{d-1}.  Reduced
homology is obtained through an explicit augmentation cell in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._exact import (
    column_reduction_pivots,
    invariant_factors,
    is_prime,
    rank_mod_p,
    sort_by_divisibility,
)


class ContractViolationError(RuntimeError):
    """An input broke a documented precondition (e.g. dd != 0)."""


class InvalidParameterError(ValueError):
    pass


@dataclass(frozen=True)
class ChainComplex:
    """Graded free Z-modules with integer boundary maps.

    ranks[d] is the basis size in degree d; boundaries[d] holds the triples
    of d_d : C_d -> C_{d-1}.  Degree -1 is the augmentation cell.
    """

    ranks: dict[int, int]
    boundaries: dict[int, list[tuple[int, int, int]]]
    augmented: bool = False

    def rank(self, d: int) -> int:
        return self.ranks.get(d, 0)

    def boundary(self, d: int) -> list[tuple[int, int, int]]:
        return self.boundaries.get(d, [])

    def degrees(self) -> list[int]:
        return sorted(self.ranks)

    def total_cells(self) -> int:
        return sum(self.ranks.values())

    def validate(self, modulus: int = 0) -> None:
        """Check matrix shapes and dd = 0 (mod modulus when nonzero);
        raises ContractViolationError."""
        for d, triples in self.boundaries.items():
            nr, nc = self.rank(d - 1), self.rank(d)
            for r, c, v in triples:
                if not (0 <= r < nr and 0 <= c < nc):
                    raise ContractViolationError(
                        f"boundary {d}: entry ({r},{c}) outside {nr}x{nc}")
        for d in self.degrees():
            upper = self.boundaries.get(d + 1)
            lower = self.boundaries.get(d)
            if not upper or not lower:
                continue
            lower_cols: dict[int, list[tuple[int, int]]] = {}
            for r, c, v in lower:
                lower_cols.setdefault(c, []).append((r, v))
            acc: dict[tuple[int, int], int] = {}
            for r, c, v in upper:
                for rr, vv in lower_cols.get(r, ()):
                    key = (rr, c)
                    nv = acc.get(key, 0) + v * vv
                    if modulus:
                        nv %= modulus
                    if nv:
                        acc[key] = nv
                    elif key in acc:
                        del acc[key]
            if acc:
                key = next(iter(acc))
                raise ContractViolationError(
                    f"dd != 0 from degree {d + 1}: entry {key} = {acc[key]}")

    def to_cochain_matrix(self, s: int) -> list[tuple[int, int, int]]:
        """Cochain differential C^s -> C^{s+1} as triples (row in deg s+1)."""
        return [(c, r, v) for r, c, v in self.boundary(s + 1)]


@dataclass(frozen=True)
class HomologyResult:
    reduced: bool
    groups: dict[int, tuple[int, tuple[int, ...]]]

    def betti(self, d: int) -> int:
        return self.groups.get(d, (0, ()))[0]

    def torsion(self, d: int) -> tuple[int, ...]:
        return self.groups.get(d, (0, ()))[1]

    def nonzero_degrees(self) -> list[int]:
        return sorted(d for d, (b, t) in self.groups.items() if b or t)

    def cohomology_groups(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        """Free part per degree coincides; torsion of H^d is that of H_{d-1}."""
        degs = set(self.groups) | {d + 1 for d in self.groups}
        out = {}
        for d in degs:
            b = self.betti(d)
            t = self.torsion(d - 1)
            if b or t:
                out[d] = (b, t)
        return out

    def to_json_dict(self) -> dict:
        return {
            "reduced": self.reduced,
            "groups": [
                {"dim": d, "betti": b, "torsion": list(t)}
                for d, (b, t) in sorted(self.groups.items())
            ],
        }

    def __str__(self) -> str:
        parts = []
        for d in self.nonzero_degrees():
            b, t = self.groups[d]
            terms = []
            if b == 1:
                terms.append("Z")
            elif b > 1:
                terms.append(f"Z^{b}")
            terms += [f"Z/{k}" for k in t]
            parts.append(f"H_{d} = " + ("+".join(terms) or "0"))
        return "; ".join(parts) if parts else "trivial"


def homology_integer(chain: ChainComplex, check: bool = True) -> HomologyResult:
    """Betti numbers and torsion coefficients via Smith normal form."""
    if check:
        chain.validate()
    factors: dict[int, list[int]] = {}
    for d in chain.degrees():
        factors[d] = invariant_factors(
            chain.boundary(d), chain.rank(d - 1), chain.rank(d))
    groups = {}
    for d in chain.degrees():
        if d < 0:
            continue
        rank_d = len(factors.get(d, []))
        rank_up = len(factors.get(d + 1, []))
        betti = chain.rank(d) - rank_d - rank_up
        torsion = tuple(sort_by_divisibility(
            [f for f in factors.get(d + 1, []) if f > 1]))
        if betti < 0:
            raise ContractViolationError(f"negative betti in degree {d}")
        groups[d] = (betti, torsion)
    # an empty augmented complex has H~_{-1} = Z
    if chain.augmented and chain.rank(0) == 0:
        groups[-1] = (1, ())
    return HomologyResult(reduced=chain.augmented, groups=groups)


def homology_mod_p(chain: ChainComplex, p: int, check: bool = True) -> dict[int, int]:
    """Per-degree Betti numbers over GF(p)."""
    if not is_prime(p):
        raise InvalidParameterError(f"{p} is not prime")
    if check:
        chain.validate(modulus=p)
    ranks = {}
    for d in chain.degrees():
        ranks[d] = rank_mod_p(chain.boundary(d), chain.rank(d - 1), chain.rank(d), p)
    out = {}
    for d in chain.degrees():
        if d < 0:
            continue
        b = chain.rank(d) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    if chain.augmented and chain.rank(0) == 0:
        out[-1] = 1
    return out


def euler_characteristic(chain: ChainComplex) -> int:
    """Alternating sum of ranks; reduced (includes degree -1) iff augmented."""
    return sum((-1) ** (d % 2) * r for d, r in chain.ranks.items() if r)


# --- discrete Morse theory ----------------------------------------------------


@dataclass(frozen=True)
class MorseMatching:
    """Matched cell pairs ((d, low_index), (d+1, up_index)) with unit incidence."""

    pairs: tuple[tuple[int, int, int, int], ...]  # (d, low, up, coeff)

    def __len__(self) -> int:
        return len(self.pairs)


def _boundary_columns(chain: ChainComplex, d: int) -> dict[int, list[tuple[int, int]]]:
    cols: dict[int, list[tuple[int, int]]] = {}
    for r, c, v in chain.boundary(d):
        cols.setdefault(c, []).append((r, v))
    return cols


def _check_matching(chain: ChainComplex, matching: MorseMatching):
    seen = set()
    for d, low, up, coeff in matching.pairs:
        if not (0 <= low < chain.rank(d) and 0 <= up < chain.rank(d + 1)):
            raise ContractViolationError(f"matching pair out of range in degree {d}")
        for cell in ((d, low), (d + 1, up)):
            if cell in seen:
                raise ContractViolationError(f"cell {cell} matched twice")
            seen.add(cell)
        if coeff not in (1, -1):
            raise ContractViolationError(
                f"pair ({d},{low})-({d + 1},{up}) has non-unit coefficient {coeff}")
        actual = 0
        for r, c, v in chain.boundary(d + 1):
            if c == up and r == low:
                actual += v
        if actual != coeff:
            raise ContractViolationError(
                f"pair ({d},{low})-({d + 1},{up}): stored coefficient {coeff} "
                f"!= boundary entry {actual}")


def verify_acyclic(chain: ChainComplex, matching: MorseMatching):
    """True iff the matched incidence digraph has no directed cycle.

    Returns (ok, witness); the witness is one directed cycle given as an
    alternating list of (degree, index) cells.
    """
    _check_matching(chain, matching)
    by_degree: dict[int, list[tuple[int, int, int]]] = {}
    for d, low, up, coeff in matching.pairs:
        by_degree.setdefault(d, []).append((low, up, coeff))
    for d, pairs in by_degree.items():
        up_of = {low: up for low, up, _ in pairs}
        cols = _boundary_columns(chain, d + 1)
        # digraph on matched low cells: low_i -> low_j if low_j is a facet of
        # up_i other than low_i itself
        succ = {
            low: [r for r, v in cols.get(up, ()) if r != low and r in up_of]
            for low, up, _ in pairs
        }
        state = {low: 0 for low in succ}  # 0 new, 1 active, 2 done
        for start in succ:
            if state[start]:
                continue
            stack = [(start, iter(succ[start]))]
            state[start] = 1
            trail = [start]
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    if state[nxt] == 1:
                        i = trail.index(nxt)
                        cycle = []
                        for low in trail[i:]:
                            cycle.append((d, low))
                            cycle.append((d + 1, up_of[low]))
                        return False, cycle
                    if state[nxt] == 0:
                        state[nxt] = 1
                        trail.append(nxt)
                        stack.append((nxt, iter(succ[nxt])))
                        advanced = True
                        break
                if not advanced:
                    state[node] = 2
                    trail.pop()
                    stack.pop()
    return True, None


def morse_reduce(chain: ChainComplex, matching: MorseMatching) -> ChainComplex:
    """Chain complex on the critical cells with the zig-zag differential.

    The result carries a `critical` attribute mapping each degree to the list
    of original cell indices that survived.  Homology is preserved exactly.
    """
    ok, witness = verify_acyclic(chain, matching)
    if not ok:
        raise ContractViolationError(f"matching is not acyclic; witness {witness}")

    up_partner = {}    # (d, low) -> (up, coeff)
    down_partner = set()  # cells that are the upper member of a pair
    for d, low, up, coeff in matching.pairs:
        up_partner[(d, low)] = (up, coeff)
        down_partner.add((d + 1, up))

    critical: dict[int, list[int]] = {}
    crit_pos: dict[tuple[int, int], int] = {}
    for d in chain.degrees():
        cells = [
            i for i in range(chain.rank(d))
            if (d, i) not in up_partner and (d, i) not in down_partner
        ]
        critical[d] = cells
        for pos, i in enumerate(cells):
            crit_pos[(d, i)] = pos

    cols_by_degree = {d: _boundary_columns(chain, d) for d in chain.degrees()}

    # resolve (flow) each degree-d cell into critical degree-d cells
    memo: dict[tuple[int, int], dict[int, int]] = {}

    def resolve(d: int, i: int) -> dict[int, int]:
        key = (d, i)
        if key in memo:
            return memo[key]
        if key in down_partner:
            memo[key] = {}
            return memo[key]
        if key not in up_partner:
            memo[key] = {i: 1}
            return memo[key]
        # iterative post-order evaluation along the acyclic flow digraph
        stack = [key]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            cd, ci = cur
            up, eps = up_partner[cur]
            deps = [
                (cd, r) for r, v in cols_by_degree[cd + 1].get(up, ())
                if r != ci and (cd, r) in up_partner and (cd, r) not in memo
            ]
            if deps:
                stack.extend(deps)
                continue
            out: dict[int, int] = {}
            for r, v in cols_by_degree[cd + 1].get(up, ()):
                if r == ci:
                    continue
                sub = (cd, r)
                if sub in down_partner:
                    continue
                if sub in up_partner:
                    for j, w in memo[sub].items():
                        nv = out.get(j, 0) - eps * v * w
                        if nv:
                            out[j] = nv
                        else:
                            del out[j]
                else:
                    nv = out.get(r, 0) - eps * v
                    if nv:
                        out[r] = nv
                    else:
                        del out[r]
            memo[cur] = out
            stack.pop()
        return memo[key]

    new_ranks = {d: len(cells) for d, cells in critical.items()}
    new_boundaries: dict[int, list[tuple[int, int, int]]] = {}
    for d in chain.degrees():
        if d - 1 not in new_ranks:
            continue
        triples = []
        for pos, i in enumerate(critical.get(d, [])):
            acc: dict[int, int] = {}
            for r, v in cols_by_degree[d].get(i, ()):
                for j, w in resolve(d - 1, r).items():
                    nv = acc.get(j, 0) + v * w
                    if nv:
                        acc[j] = nv
                    else:
                        del acc[j]
            for j, w in acc.items():
                triples.append((crit_pos[(d - 1, j)], pos, w))
        if triples:
            new_boundaries[d] = triples
    reduced = ChainComplex(new_ranks, new_boundaries, augmented=chain.augmented)
    object.__setattr__(reduced, "critical", critical)
    return reduced


# --- spectral sequence of a filtered complex ----------------------------------


@dataclass(frozen=True)
class FilteredChainComplex:
    """A ChainComplex plus a filtration level per cell (cochain convention:
    the coboundary never decreases the level)."""

    chain: ChainComplex
    levels: dict[int, list[int]]  # degree -> level per cell

    def validate(self) -> None:
        self.chain.validate()
        if self.chain.augmented:
            raise InvalidParameterError("spectral filtration wants the unaugmented complex")
        for d in self.chain.degrees():
            if len(self.levels.get(d, [])) != self.chain.rank(d):
                raise ContractViolationError(f"level list length mismatch in degree {d}")
        for d, triples in self.chain.boundaries.items():
            lv_lo = self.levels.get(d - 1, [])
            lv_hi = self.levels.get(d, [])
            for r, c, v in triples:
                if lv_lo[r] > lv_hi[c]:
                    raise ContractViolationError(
                        f"filtration violated by boundary entry ({r},{c}) in degree {d}")

    def max_level(self) -> int:
        return max((lv for lvs in self.levels.values() for lv in lvs), default=0)


def spectral_pages(filtered: FilteredChainComplex, p: int, r_max: int,
                   check: bool = True) -> dict[int, dict[tuple[int, int], int]]:
    """Dimension tables of the pages E_r^{p,q} over GF(p), r = 0..r_max.

    Everything reduces to corner ranks of the per-degree cochain matrices
    with rows and columns sorted by filtration level; one column reduction
    per degree yields every corner rank at once.
    """
    if not is_prime(p):
        raise InvalidParameterError(f"{p} is not prime")
    if check:
        filtered.validate()
    chain = filtered.chain
    top = filtered.max_level()
    degrees = [d for d in chain.degrees() if d >= 0]

    # per degree: counts of cells with level >= a, and the pivot corner table
    count_ge: dict[int, list[int]] = {}
    corner: dict[int, list[list[int]]] = {}
    for s in degrees:
        lv = filtered.levels.get(s, [])
        cnt = [0] * (top + 2)
        for x in lv:
            cnt[x] += 1
        for a in range(top - 1, -1, -1):
            cnt[a] += cnt[a + 1]
        count_ge[s] = cnt

        lv_hi = filtered.levels.get(s + 1, [])
        # column order: cells of degree s by descending level; row order: cells
        # of degree s+1 by descending level (so "level <= b" rows are a suffix)
        col_order = sorted(range(len(lv)), key=lambda i: (-lv[i], i))
        row_order = sorted(range(len(lv_hi)), key=lambda i: (-lv_hi[i], i))
        row_pos = {i: k for k, i in enumerate(row_order)}
        # cochain matrix: column = degree-s cell, rows = degree-(s+1) cells
        by_source: dict[int, dict[int, int]] = {}
        for r, c, v in chain.boundary(s + 1):
            by_source.setdefault(r, {})[row_pos[c]] = v
        columns = [by_source.get(i, {}) for i in col_order]
        pivots = column_reduction_pivots(columns, p)
        table = [[0] * (top + 2) for _ in range(top + 2)]  # [a][b+1]
        for low, j in pivots:
            a = lv[col_order[j]]
            b = lv_hi[row_order[low]]
            table[a][b + 1] += 1
        # cumulative: col level >= a, row level <= b
        for a in range(top, -1, -1):
            for b1 in range(top + 2):
                table[a][b1] += table[a + 1][b1] if a + 1 <= top + 1 else 0
        for a in range(top + 2):
            for b1 in range(1, top + 2):
                table[a][b1] += table[a][b1 - 1]
        corner[s] = table

    def z(r: int, pp: int, s: int) -> int:
        if s not in count_ge:
            return 0
        if pp > top:
            return 0
        a = max(pp, 0)
        b = min(pp + r - 1, top)
        rank = corner[s][a][b + 1] if b >= 0 else 0
        return count_ge[s][a] - rank

    pages: dict[int, dict[tuple[int, int], int]] = {}
    for r in range(r_max + 1):
        page: dict[tuple[int, int], int] = {}
        for s in degrees:
            for pp in range(0, top + 1):
                dim = (z(r, pp, s) - z(r - 1, pp + 1, s)
                       - z(r - 1, pp - r + 1, s - 1) + z(r, pp - r + 1, s - 1))
                if dim:
                    page[(pp, s - pp)] = dim
        pages[r] = page
    return pages


def e_infinity(filtered: FilteredChainComplex, p: int,
               check: bool = True) -> dict[tuple[int, int], int]:
    """The stable page (r = max level + 2)."""
    r = filtered.max_level() + 2
    return spectral_pages(filtered, p, r, check=check)[r]


def spectral_page_json(r: int, page: dict[tuple[int, int], int]) -> dict:
    return {
        "page": r,
        "entries": [
            {"p": pp, "q": q, "dim": dim}
            for (pp, q), dim in sorted(page.items())
        ],
    }
