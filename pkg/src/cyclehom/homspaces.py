"""Independence complexes, joins, and graph-map complexes.

hom_complex(T, G) enumerates the cells eta: V(T) -> nonempty subsets of V(G)
such that adjacent vertices of T map to fully cross-adjacent set pairs, with
an explicit integer orientation.  hom_plus(T, G) is the simplicial variant
allowing empty values; it coincides with the independence complex of the
categorical product of T with the strong complement of G, and carries the
support filtration used by the spectral-sequence machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import CellComplex
from .chainalg import (
    ChainComplex,
    ContractViolationError,
    FilteredChainComplex,
    HomologyResult,
    homology_integer,
)
from .graphs import Graph, InvalidParameterError, categorical_product, \
    product_vertex_label, strong_complement

DEFAULT_MAX_CELLS = 5_000_000


class ComplexTooLargeError(RuntimeError):
    """Construction would exceed the configured cell budget."""


# --- simplicial complexes ------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """All faces, stored per dimension as sorted vertex tuples (empty face
    implicit)."""

    faces: tuple[tuple[tuple[int, ...], ...], ...]  # faces[d] = dim-d faces

    @staticmethod
    def from_faces(faces_by_dim: dict[int, list[tuple[int, ...]]]) -> "SimplicialComplex":
        top = max(faces_by_dim, default=-1)
        return SimplicialComplex(tuple(
            tuple(sorted(set(faces_by_dim.get(d, ())))) for d in range(top + 1)
        ))

    def dimension(self) -> int:
        return len(self.faces) - 1

    def face_counts(self) -> list[int]:
        return [len(fs) for fs in self.faces]

    def total_faces(self) -> int:
        return sum(self.face_counts())

    def vertices(self) -> list[int]:
        return [f[0] for f in self.faces[0]] if self.faces else []

    def euler_reduced(self) -> int:
        return sum((-1) ** d * len(fs) for d, fs in enumerate(self.faces)) - 1

    def cell_complex(self) -> CellComplex:
        cx = CellComplex()
        for d, fs in enumerate(self.faces):
            for face in fs:
                bnd = []
                if d > 0:
                    for i in range(len(face)):
                        bnd.append((face[:i] + face[i + 1:], (-1) ** i))
                cx.add_cell(d, face, bnd)
        return cx

    def chain_complex(self, augmented: bool = True) -> ChainComplex:
        return self.cell_complex().chain_complex(augmented=augmented)

    def homology(self, reduced: bool = True) -> HomologyResult:
        return homology_integer(self.chain_complex(augmented=reduced))


def independence_complex(graph: Graph) -> SimplicialComplex:
    """Faces are the independent vertex sets; looped vertices never appear."""
    n = graph.vertex_count
    adj = [0] * (n + 1)
    looped = set()
    for u, v in graph.edges:
        if u == v:
            looped.add(u)
        else:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    order = [v for v in range(1, n + 1) if v not in looped]
    faces: dict[int, list[tuple[int, ...]]] = {}

    def extend(start: int, chosen: tuple[int, ...], blocked: int) -> None:
        for idx in range(start, len(order)):
            v = order[idx]
            if blocked >> v & 1:
                continue
            face = chosen + (v,)
            faces.setdefault(len(face) - 1, []).append(face)
            extend(idx + 1, face, blocked | adj[v])

    extend(0, (), 0)
    return SimplicialComplex.from_faces(faces)


def join_complex(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """Join: faces are unions after shifting the second vertex set."""
    shift = max(x.vertices(), default=-1) + 1 - min(y.vertices(), default=0)
    faces: dict[int, list[tuple[int, ...]]] = {}
    x_faces = [()] + [f for fs in x.faces for f in fs]
    y_faces = [()] + [f for fs in y.faces for f in fs]
    for fx in x_faces:
        for fy in y_faces:
            face = fx + tuple(v + shift for v in fy)
            if face:
                faces.setdefault(len(face) - 1, []).append(face)
    return SimplicialComplex.from_faces(faces)


# --- Hom complexes -------------------------------------------------------------


def _common_neighbors_mask(gadj: list[int], value: tuple[int, ...]) -> int:
    mask = -1
    for y in value:
        mask &= gadj[y]
    return mask


def _submasks_nonempty(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def hom_complex(t_graph: Graph, g_graph: Graph,
                max_cells: int = DEFAULT_MAX_CELLS) -> CellComplex:
    """Cells are the maps eta with the cross-adjacency condition, keyed by the
    tuple of sorted value tuples; oriented boundary per removed element."""
    m, n = t_graph.vertex_count, g_graph.vertex_count
    if m == 0 or n == 0:
        raise InvalidParameterError("both graphs need at least one vertex")
    gadj = [0] * (n + 1)
    for u, v in g_graph.edges:
        gadj[u] |= 1 << v
        gadj[v] |= 1 << u
    back_neighbors: list[list[int]] = [[] for _ in range(m + 1)]
    loop_at = [False] * (m + 1)
    for u, v in t_graph.edges:
        if u == v:
            loop_at[u] = True
        else:
            lo, hi = (u, v) if u < v else (v, u)
            back_neighbors[hi].append(lo)

    full = ((1 << n) - 1) << 1  # bits 1..n
    cells: list[tuple[tuple[int, ...], ...]] = []

    def extend(t: int, chosen: tuple[tuple[int, ...], ...],
               masks: tuple[int, ...]) -> None:
        if t > m:
            cells.append(chosen)
            if len(cells) > max_cells:
                raise ComplexTooLargeError(
                    f"cell budget {max_cells} exceeded while enumerating")
            return
        allowed = full
        for t2 in back_neighbors[t]:
            allowed &= masks[t2 - 1]
        for sub in _submasks_nonempty(allowed):
            value = _mask_to_tuple(sub)
            if loop_at[t] and _common_neighbors_mask(gadj, value) & sub != sub:
                continue
            extend(t + 1, chosen + (value,),
                   masks + (_common_neighbors_mask(gadj, value) & full,))

    extend(1, (), ())

    def cell_dim(eta: tuple[tuple[int, ...], ...]) -> int:
        return sum(len(v) - 1 for v in eta)

    cells.sort(key=lambda eta: (cell_dim(eta), eta))
    cx = CellComplex()
    for eta in cells:
        d = cell_dim(eta)
        bnd = []
        size_prefix = 0
        for t in range(1, m + 1):
            value = eta[t - 1]
            if len(value) >= 2:
                sign_base = 1 - t + size_prefix  # the 'd' of the incidence rule
                for k, v in enumerate(value, start=1):
                    facet = eta[:t - 1] + (value[:k - 1] + value[k:],) + eta[t:]
                    bnd.append((facet, (-1) ** ((k + sign_base - 1) % 2)))
            size_prefix += len(value)
        cx.add_cell(d, eta, bnd)
    return cx


def hom_plus(t_graph: Graph, g_graph: Graph,
             max_cells: int = DEFAULT_MAX_CELLS,
             assert_product: bool = True) -> CellComplex:
    """Simplicial complex of partial maps, as faces on the pair vertices
    (x, y) labeled via product_vertex_label; equals the independence complex
    of categorical_product(T, strong_complement(G)) face-by-face."""
    m, n = t_graph.vertex_count, g_graph.vertex_count
    product = categorical_product(t_graph, strong_complement(g_graph))
    nv = product.vertex_count
    adj = [0] * (nv + 1)
    looped = set()
    for u, v in product.edges:
        if u == v:
            looped.add(u)
        else:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    order = [v for v in range(1, nv + 1) if v not in looped]

    cx = CellComplex()
    count = 0

    def eta_of(face: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
        vals: list[list[int]] = [[] for _ in range(m)]
        for label in face:
            x, y = divmod(label - 1, n)
            vals[x].append(y + 1)
        return tuple(tuple(v) for v in vals)

    def support_size(face: tuple[int, ...]) -> int:
        return len({(label - 1) // n for label in face})

    def extend(start: int, chosen: tuple[int, ...], blocked: int) -> None:
        nonlocal count
        for idx in range(start, len(order)):
            v = order[idx]
            if blocked >> v & 1:
                continue
            face = chosen + (v,)
            count += 1
            if count > max_cells:
                raise ComplexTooLargeError(
                    f"cell budget {max_cells} exceeded while enumerating")
            bnd = []
            if len(face) > 1:
                for i in range(len(face)):
                    bnd.append((face[:i] + face[i + 1:], (-1) ** i))
            cx.add_cell(len(face) - 1, face, bnd,
                        payload=eta_of(face), level=support_size(face) - 1)
            extend(idx + 1, face, blocked | adj[v])

    extend(0, (), 0)

    if assert_product:
        ind = independence_complex(product)
        if cx.f_vector() != {d: len(fs) for d, fs in enumerate(ind.faces) if fs}:
            raise ContractViolationError(
                "partial-map complex disagrees with the product independence complex")
    return cx


def filtration_by_support(homplus_cx: CellComplex) -> FilteredChainComplex:
    """Filter the chain complex by support-size level (set at build time)."""
    return homplus_cx.filtered_chain_complex()


def support_census(homplus_cx: CellComplex) -> dict[tuple[int, int], int]:
    """Count of cells by (level, total degree)."""
    census: dict[tuple[int, int], int] = {}
    for d, keys in homplus_cx.cells.items():
        for key in keys:
            lv = homplus_cx.level[key]
            census[(lv, d)] = census.get((lv, d), 0) + 1
    return census


# --- the sign-twisted comparison of full-support cells --------------------------


def _c_value(eta: tuple[tuple[int, ...], ...]) -> int:
    """Sum of value sizes over even-indexed source vertices (1-based)."""
    return sum(len(v) for i, v in enumerate(eta, start=1) if i % 2 == 0)


def rho_check(t_graph: Graph, g_graph: Graph,
              max_cells: int = 200_000):
    """Verify that eta -> (-1)^{c(eta)} eta_+ intertwines the coboundary of
    the full-map complex with that of the partial-map complex restricted to
    full-support faces.  Returns (ok, witness_pair_or_None)."""
    m, n = t_graph.vertex_count, g_graph.vertex_count
    hom = hom_complex(t_graph, g_graph, max_cells=max_cells)
    plus = hom_plus(t_graph, g_graph, max_cells=max_cells)

    def plus_key(eta: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
        labels = []
        for x, value in enumerate(eta, start=1):
            for y in value:
                labels.append(product_vertex_label(m, n, x, y))
        return tuple(sorted(labels))

    # coboundary coefficients within full-support faces, indexed by eta keys
    plus_cob: dict[tuple, dict[tuple, int]] = {}
    for d, keys in plus.cells.items():
        for key in keys:
            if plus.level[key] != m - 1:
                continue
            for fkey, coeff in plus.boundary_map[key]:
                if plus.level[fkey] != m - 1:
                    continue
                plus_cob.setdefault(fkey, {})[key] = coeff

    hom_cob: dict[tuple, dict[tuple, int]] = {}
    for d, keys in hom.cells.items():
        for key in keys:
            for fkey, coeff in hom.boundary_map[key]:
                acc = hom_cob.setdefault(fkey, {})
                acc[key] = acc.get(key, 0) + coeff

    for d, keys in hom.cells.items():
        for eta in keys:
            eta_key = plus_key(eta)
            sign_eta = (-1) ** (_c_value(eta) % 2)
            seen = set()
            for up_eta, coeff in hom_cob.get(eta, {}).items():
                up_key = plus_key(up_eta)
                seen.add(up_key)
                sign_up = (-1) ** (_c_value(up_eta) % 2)
                lhs = sign_eta * plus_cob.get(eta_key, {}).get(up_key, 0)
                if lhs != sign_up * coeff:
                    return False, (eta, up_eta)
            for up_key, coeff in plus_cob.get(eta_key, {}).items():
                if up_key not in seen and coeff:
                    return False, (eta, up_key)
    return True, None
