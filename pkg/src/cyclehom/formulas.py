"""Closed-form integer evaluators: expected homology of the cycle complexes,
Euler-characteristic identities, and vanishing ranges.  These are pure
arithmetic (no topology) and serve as the expected side of every
verification; brute-force builds are the other side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .cells import CellComplex
from .graphs import Graph, InvalidParameterError, induced_subgraph
from .homspaces import hom_complex, hom_plus, independence_complex


class UnsupportedParameterError(ValueError):
    """The closed form does not cover these parameters."""


@dataclass(frozen=True)
class GradedGroupList:
    """Graded abelian groups: (dimension, free rank, torsion orders)."""

    entries: tuple[tuple[int, int, tuple[int, ...]], ...]

    @staticmethod
    def from_summands(summands) -> "GradedGroupList":
        acc: dict[int, tuple[int, list[int]]] = {}
        for dim, free, torsion in summands:
            b, t = acc.get(dim, (0, []))
            acc[dim] = (b + free, sorted(t + list(torsion)))
        return GradedGroupList(tuple(
            (d, b, tuple(t)) for d, (b, t) in sorted(acc.items()) if b or t))

    def groups(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        return {d: (b, t) for d, b, t in self.entries}

    def to_json_list(self) -> list[dict]:
        return [{"dim": d, "free_rank": b, "torsion": list(t)}
                for d, b, t in self.entries]

    def __str__(self) -> str:
        parts = []
        for d, b, t in self.entries:
            terms = []
            if b == 1:
                terms.append("Z")
            elif b > 1:
                terms.append(f"Z^{b}")
            terms += [f"Z/{k}" for k in t]
            parts.append(f"{'+'.join(terms)}({d})")
        return " + ".join(parts) if parts else "0"


def _wedge_k(m: int) -> int:
    """k with m = 3k or m = 3k +/- 1."""
    return (m + 1) // 3


def ind_cycle_formula(m: int) -> GradedGroupList:
    """Reduced homology of the independent-set complex of the m-cycle."""
    if m < 2:
        raise UnsupportedParameterError("need m >= 2")
    k = _wedge_k(m)
    rank = 2 if m % 3 == 0 else 1
    return GradedGroupList(((k - 1, rank, ()),))


def homplus_cycle_formula(m: int, n: int) -> GradedGroupList:
    """Reduced homology of the partial-map complex from an m-cycle to n
    colors: a wedge of 2^n spheres when 3 | m, one sphere otherwise."""
    if m < 2 or n < 1:
        raise UnsupportedParameterError("need m >= 2, n >= 1")
    k = _wedge_k(m)
    rank = 2 ** n if m % 3 == 0 else 1
    return GradedGroupList(((n * k - 1, rank, ()),))


def hom_cycle_cohomology(m: int, n: int) -> GradedGroupList:
    """Reduced integral cohomology of the coloring complex of an m-cycle
    with n colors, assembled from the per-t summands plus the top part."""
    if m < 5 or n < 4:
        raise UnsupportedParameterError("closed form covers m >= 5, n >= 4")
    summands = []
    for t in range(1, (m - 2) // 3 + 1):
        if n % 2 == 1 or (m + t) % 2 == 1:
            summands.append((t * n - 3 * t, 1, ()))
            summands.append((t * n - 3 * t + 1, 1, ()))
        else:
            summands.append((t * n - 3 * t + 1, 0, (2,)))
    k = _wedge_k(m)
    if m % 3 == 0:
        summands.append((n * k - m, 2 ** n - 3, ()))
    elif m % 3 == 1:
        summands.append((n * k - m + 2, 1, ()))
    else:
        summands.append((n * k - m, 1, ()))
    return GradedGroupList.from_summands(summands)


def vanishing_check(m: int, n: int, i: int) -> bool:
    """Whether reduced cohomology of the partial-map complex is promised to
    vanish in degree i; only degrees i <= m + n - 4 are covered."""
    if m < 5 or n < 4:
        raise UnsupportedParameterError("covered for m >= 5, n >= 4")
    if i > m + n - 4:
        raise UnsupportedParameterError(f"degree {i} > {m + n - 4} not covered")
    return (m, n, i) != (7, 4, 7)


# --- Euler characteristics -------------------------------------------------------


def reduced_euler(cx: CellComplex) -> int:
    return sum((-1) ** d * len(keys) for d, keys in cx.cells.items()) - 1


def _subsets(vertices):
    for size in range(1, len(vertices) + 1):
        yield from combinations(vertices, size)


def euler_hom_plus_identity(t_graph: Graph, g_graph: Graph):
    """(lhs, rhs): reduced Euler characteristic of the partial-map complex
    versus the inclusion-exclusion sum of full-map complexes over induced
    subgraphs."""
    lhs = reduced_euler(hom_plus(t_graph, g_graph, assert_product=False))
    rhs = 0
    for subset in _subsets(range(1, t_graph.vertex_count + 1)):
        sub, _ = induced_subgraph(t_graph, subset)
        rhs += (-1) ** (len(subset) + 1) * reduced_euler(hom_complex(sub, g_graph))
    return lhs, rhs


def euler_hom_via_mobius(t_graph: Graph, g_graph: Graph) -> int:
    """Reduced Euler characteristic of the full-map complex from the signed
    sum of partial-map complexes over induced subgraphs."""
    total = 0
    for subset in _subsets(range(1, t_graph.vertex_count + 1)):
        sub, _ = induced_subgraph(t_graph, subset)
        total += (-1) ** (len(subset) + 1) * reduced_euler(
            hom_plus(sub, g_graph, assert_product=False))
    return total


def euler_hom_kn(t_graph: Graph, n: int) -> int:
    """Reduced Euler characteristic of the n-coloring complex of T via the
    independence complexes of induced subgraphs."""
    if n < 1:
        raise InvalidParameterError("need n >= 1")
    total = 0
    for subset in _subsets(range(1, t_graph.vertex_count + 1)):
        sub, _ = induced_subgraph(t_graph, subset)
        chi = reduced_euler(independence_complex(sub).cell_complex())
        total += (-1) ** ((n + len(subset)) % 2) * chi ** n
    return total


def euler_complete(m: int, n: int) -> int:
    """Reduced Euler characteristic of the n-coloring complex of the
    complete graph on m vertices, as a single binomial sum."""
    if m < 1 or n < m:
        raise UnsupportedParameterError("need n >= m >= 1")
    return sum((-1) ** ((n + k + 1) % 2) * comb(m, k + 1) * k ** n
               for k in range(1, m))


def hom_cycle_alternating_count(m: int, n: int) -> int:
    """Reduced alternating cell count of the n-coloring complex of an
    m-cycle, via the transfer matrix over nonempty color sets: the entry for
    (A, B) is (-1)^(|B|-1) when A and B are disjoint.  Agrees with direct
    enumeration but needs no cell storage."""
    if m < 3 or n < 1:
        raise InvalidParameterError("need m >= 3, n >= 1")
    masks = list(range(1, 1 << n))
    sign = [(-1) ** ((bin(b).count("1") - 1) % 2) for b in masks]
    size = len(masks)
    mat = [[sign[j] if masks[i] & masks[j] == 0 else 0
            for j in range(size)] for i in range(size)]
    power = [row[:] for row in mat]
    for _ in range(m - 1):
        power = [[sum(power[i][k] * mat[k][j] for k in range(size) if power[i][k])
                  for j in range(size)] for i in range(size)]
    return sum(power[i][i] for i in range(size)) - 1


def euler_cycle(m: int, n: int) -> int:
    """Reduced Euler characteristic of the n-coloring complex of an m-cycle."""
    if m < 5 or n < 4:
        raise UnsupportedParameterError("covered for m >= 5, n >= 4")
    k = _wedge_k(m)
    sign = (-1) ** ((n * k - m) % 2)
    return sign * (2 ** n - 3) if m % 3 == 0 else sign
