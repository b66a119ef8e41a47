"""Exact sparse linear algebra over Z and GF(p).

All integer work uses Python's arbitrary-precision ints.  The integer
elimination keeps pivoting on +-1 entries (Markowitz score, lazy heap) for as
long as possible, which costs no coefficient growth; whatever survives is
finished off by a dense Smith normal form.
"""

from __future__ import annotations

import heapq
from math import gcd


def _to_rows(entries, nrows, ncols):
    rows: dict[int, dict[int, int]] = {}
    for r, c, v in entries:
        if not (0 <= r < nrows and 0 <= c < ncols):
            raise ValueError(f"entry ({r},{c}) outside {nrows}x{ncols}")
        if v == 0:
            continue
        row = rows.setdefault(r, {})
        nv = row.get(c, 0) + v
        if nv:
            row[c] = nv
        else:
            del row[c]
    return {r: row for r, row in rows.items() if row}


def smith_normal_form_dense(mat: list[list[int]]) -> list[int]:
    """Invariant factors (positive, divisibility chain) of a dense matrix."""
    m = [row[:] for row in mat]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    factors = []
    top = 0
    while True:
        pr = pc = -1
        best = None
        for i in range(top, nr):
            for j in range(top, nc):
                v = m[i][j]
                if v and (best is None or abs(v) < best):
                    best, pr, pc = abs(v), i, j
        if best is None:
            break
        m[top], m[pr] = m[pr], m[top]
        for row in m:
            row[top], row[pc] = row[pc], row[top]
        # clear row and column of the corner, restarting when a smaller
        # remainder shows up
        while True:
            piv = m[top][top]
            done = True
            for i in range(top + 1, nr):
                if m[i][top]:
                    q = m[i][top] // piv
                    if q:
                        for j in range(top, nc):
                            m[i][j] -= q * m[top][j]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        done = False
                        break
            if not done:
                continue
            for j in range(top + 1, nc):
                if m[top][j]:
                    q = m[top][j] // piv
                    if q:
                        for i in range(top, nr):
                            m[i][j] -= q * m[i][top]
                    if m[top][j]:
                        for row in m:
                            row[top], row[j] = row[j], row[top]
                        done = False
                        break
            if done:
                break
        # force the corner to divide the rest of the matrix
        piv = m[top][top]
        offender = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if m[i][j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, nc):
                m[top][j] += m[offender][j]
            continue
        factors.append(abs(piv))
        top += 1
        if top >= nr or top >= nc:
            break
    return factors


def invariant_factors(entries, nrows, ncols) -> list[int]:
    """Invariant factors of a sparse integer matrix given as (r, c, v) triples."""
    rows = _to_rows(entries, nrows, ncols)
    cols: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)

    def score(r, c):
        return (len(rows[r]) - 1) * (len(cols[c]) - 1)

    heap = []
    for r, row in rows.items():
        for c, v in row.items():
            if v == 1 or v == -1:
                heapq.heappush(heap, (score(r, c), r, c))

    unit_pivots = 0
    while heap:
        s, r0, c0 = heapq.heappop(heap)
        row0 = rows.get(r0)
        if row0 is None:
            continue
        v0 = row0.get(c0, 0)
        if v0 != 1 and v0 != -1:
            continue
        cur = score(r0, c0)
        if cur > s:
            heapq.heappush(heap, (cur, r0, c0))
            continue
        # eliminate: pivot value is its own inverse
        del rows[r0]
        for c in row0:
            cols[c].discard(r0)
            if not cols[c]:
                del cols[c]
        for r in list(cols.get(c0, ())):
            row = rows[r]
            f = row[c0] * v0
            for c, v in row0.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    if c not in row:
                        cols.setdefault(c, set()).add(r)
                    row[c] = nv
                    if nv == 1 or nv == -1:
                        heapq.heappush(heap, (score(r, c), r, c))
                else:
                    del row[c]
                    cols[c].discard(r)
                    if not cols[c]:
                        del cols[c]
            if not row:
                del rows[r]
        unit_pivots += 1

    factors = [1] * unit_pivots
    if rows:
        live_rows = sorted(rows)
        live_cols = sorted({c for row in rows.values() for c in row})
        cmap = {c: j for j, c in enumerate(live_cols)}
        dense = [[0] * len(live_cols) for _ in live_rows]
        for i, r in enumerate(live_rows):
            for c, v in rows[r].items():
                dense[i][cmap[c]] = v
        factors += smith_normal_form_dense(dense)
    return factors


def rank_over_z(entries, nrows, ncols) -> int:
    return len(invariant_factors(entries, nrows, ncols))


def rank_mod_p(entries, nrows, ncols, p: int) -> int:
    """Rank over GF(p) by sparse Gaussian elimination with Markowitz pivoting."""
    rows: dict[int, dict[int, int]] = {}
    for r, c, v in entries:
        v %= p
        if v == 0:
            continue
        row = rows.setdefault(r, {})
        nv = (row.get(c, 0) + v) % p
        if nv:
            row[c] = nv
        else:
            del row[c]
    rows = {r: row for r, row in rows.items() if row}
    cols: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)

    def score(r, c):
        return (len(rows[r]) - 1) * (len(cols[c]) - 1)

    heap = [(score(r, c), r, c) for r, row in rows.items() for c in row]
    heapq.heapify(heap)
    rank = 0
    while heap:
        s, r0, c0 = heapq.heappop(heap)
        row0 = rows.get(r0)
        if row0 is None or c0 not in row0:
            continue
        cur = score(r0, c0)
        if cur > s:
            heapq.heappush(heap, (cur, r0, c0))
            continue
        inv = pow(row0[c0], p - 2, p) if p > 2 else 1
        del rows[r0]
        for c in row0:
            cols[c].discard(r0)
            if not cols[c]:
                del cols[c]
        for r in list(cols.get(c0, ())):
            row = rows[r]
            f = (row[c0] * inv) % p
            for c, v in row0.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    if c not in row:
                        cols.setdefault(c, set()).add(r)
                    row[c] = nv
                else:
                    del row[c]
                    cols[c].discard(r)
                    if not cols[c]:
                        del cols[c]
            if not row:
                del rows[r]
            else:
                heapq.heappush(heap, (score(r, min(row)), r, min(row)))
        rank += 1
    return rank


def column_reduction_pivots(columns: list[dict[int, int]], p: int):
    """Left-to-right column reduction over GF(p); returns (low_row, col) pivots.

    By the standard pairing lemma the pivot positions determine the rank of
    every lower-left corner submatrix: rank(rows >= i, cols <= j) equals the
    number of pivots (low, col) with low >= i and col <= j.
    """
    if p == 2:
        bitcols = []
        for col in columns:
            x = 0
            for r, v in col.items():
                if v % 2:
                    x |= 1 << r
            bitcols.append(x)
        pivots = {}
        out = []
        for j, x in enumerate(bitcols):
            while x:
                low = x.bit_length() - 1
                if low not in pivots:
                    pivots[low] = x
                    out.append((low, j))
                    break
                x ^= pivots[low]
        return out

    pivots = {}
    out = []
    for j, col in enumerate(columns):
        col = {r: v % p for r, v in col.items() if v % p}
        while col:
            low = max(col)
            if low not in pivots:
                pivots[low] = col
                out.append((low, j))
                break
            piv = pivots[low]
            f = (col[low] * pow(piv[low], p - 2, p)) % p
            for r, v in piv.items():
                nv = (col.get(r, 0) - f * v) % p
                if nv:
                    col[r] = nv
                elif r in col:
                    del col[r]
        # fully reduced to zero: no pivot
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def sort_by_divisibility(factors: list[int]) -> list[int]:
    """Normalize a list of invariant factors into a divisibility chain."""
    out = [f for f in factors if f]
    changed = True
    while changed:
        changed = False
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                a, b = out[i], out[j]
                if b % a:
                    g = gcd(a, b)
                    out[i], out[j] = g, a * b // g
                    changed = True
    return sorted(out)
