"""Generic finite cell complexes with hashable cell keys.

A CellComplex stores, per dimension, an ordered list of cell keys together
with the integer boundary of each cell as a list of (facet key, coefficient)
pairs.  It converts to a ChainComplex (optionally augmented) and can carry a
filtration level per cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable

from .chainalg import ChainComplex, ContractViolationError, FilteredChainComplex

# complexes at or below this many cells get a dd = 0 check on conversion
VALIDATE_CELL_LIMIT = 60_000


@dataclass
class CellComplex:
    cells: dict[int, list[Hashable]] = field(default_factory=dict)
    boundary_map: dict[Hashable, list[tuple[Hashable, int]]] = field(default_factory=dict)
    payload: dict[Hashable, Any] = field(default_factory=dict)
    level: dict[Hashable, int] = field(default_factory=dict)
    _index: dict[Hashable, tuple[int, int]] = field(default_factory=dict)

    def add_cell(self, dim: int, key: Hashable,
                 boundary: list[tuple[Hashable, int]] | None = None,
                 payload: Any = None, level: int | None = None) -> None:
        if key in self._index:
            raise ContractViolationError(f"duplicate cell key {key!r}")
        lst = self.cells.setdefault(dim, [])
        self._index[key] = (dim, len(lst))
        lst.append(key)
        self.boundary_map[key] = list(boundary or [])
        if payload is not None:
            self.payload[key] = payload
        if level is not None:
            self.level[key] = level

    def dim_of(self, key: Hashable) -> int:
        return self._index[key][0]

    def index_of(self, key: Hashable) -> int:
        return self._index[key][1]

    def has_cell(self, key: Hashable) -> bool:
        return key in self._index

    def dimension(self) -> int:
        return max((d for d, lst in self.cells.items() if lst), default=-1)

    def total_cells(self) -> int:
        return sum(len(lst) for lst in self.cells.values())

    def f_vector(self) -> dict[int, int]:
        return {d: len(lst) for d, lst in sorted(self.cells.items()) if lst}

    def chain_complex(self, augmented: bool = False,
                      check: bool | None = None) -> ChainComplex:
        """Assemble the boundary triples; check dd = 0 unless the complex is
        large and check was not forced."""
        ranks = {d: len(lst) for d, lst in self.cells.items() if lst}
        boundaries: dict[int, list[tuple[int, int, int]]] = {}
        for d in sorted(ranks):
            if d - 1 not in ranks and not (augmented and d == 0):
                continue
            triples = []
            for col, key in enumerate(self.cells[d]):
                for fkey, coeff in self.boundary_map[key]:
                    fd, row = self._index[fkey]
                    if fd != d - 1:
                        raise ContractViolationError(
                            f"cell {key!r} (dim {d}) lists facet {fkey!r} of dim {fd}")
                    triples.append((row, col, coeff))
            if triples:
                boundaries[d] = triples
        if augmented:
            ranks[-1] = 1
            if ranks.get(0):
                boundaries[0] = [(0, i, 1) for i in range(ranks[0])]
        chain = ChainComplex(ranks, boundaries, augmented=augmented)
        if check is None:
            check = self.total_cells() <= VALIDATE_CELL_LIMIT
        if check:
            chain.validate()
        return chain

    def filtered_chain_complex(self, check: bool | None = None) -> FilteredChainComplex:
        chain = self.chain_complex(augmented=False, check=check)
        levels = {
            d: [self.level[key] for key in lst]
            for d, lst in self.cells.items() if lst
        }
        return FilteredChainComplex(chain, levels)

    def to_json_dict(self) -> dict:
        return {
            "cells": {
                str(d): [repr(k) for k in lst]
                for d, lst in sorted(self.cells.items()) if lst
            },
            "f_vector": {str(d): n for d, n in self.f_vector().items()},
        }
