"""Sparse exact linear algebra over an arbitrary coefficient field.

Vectors are dicts mapping coordinate index to a nonzero field element.
The workhorse is an incremental forward echelon (`EchelonSolver`) that
can optionally track how each inserted vector was reduced, which yields
kernels, membership certificates and particular solutions from the same
loop.  Pivot choice is deterministic: the smallest coordinate index.
"""

from __future__ import annotations

import heapq
from typing import Hashable, Iterable, Optional


def vec_add_scaled(dst: dict, scale, src: dict) -> None:
    """dst += scale * src, dropping entries that become zero."""
    if not scale:
        return
    get = dst.get
    for c, v in src.items():
        nv = get(c)
        nv = scale * v if nv is None else nv + scale * v
        if nv:
            dst[c] = nv
        else:
            del dst[c]


def vec_scale(vec: dict, scale) -> dict:
    return {c: scale * v for c, v in vec.items()} if scale else {}


class EchelonSolver:
    """Incremental echelon form with optional combination tracking.

    Maintains the invariant that every stored row has its smallest
    coordinate as pivot, with pivot coefficient one.  Rows are only
    forward reduced; `reduce` still terminates with a remainder free of
    pivot coordinates because row entries never precede their pivot.
    """

    def __init__(self, field, track: bool = False):
        self.field = field
        self.track = track
        self.rows: dict[int, dict] = {}
        self.combos: dict[int, dict] = {}
        self.insertion_order: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict, combo: Optional[dict] = None):
        """Return (remainder, combo') after eliminating all pivot coordinates.

        Tracking invariant: remainder - sum(combo'[t] * original_t) stays
        equal to vec - sum(combo[t] * original_t) for the initial combo.
        """
        vec = dict(vec)
        combo = dict(combo) if combo is not None else ({} if self.track else None)
        if not vec:
            return vec, combo
        rows = self.rows
        combos = self.combos
        heap = list(vec)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            v = vec.get(c)
            if not v:
                continue
            row = rows.get(c)
            if row is None:
                continue
            del vec[c]
            for cc, rv in row.items():
                if cc == c:
                    continue
                nv = vec.get(cc)
                if nv is None:
                    nv = -v * rv
                    if nv:
                        vec[cc] = nv
                        heapq.heappush(heap, cc)
                else:
                    nv = nv - v * rv
                    if nv:
                        vec[cc] = nv
                    else:
                        del vec[cc]
            if combo is not None:
                vec_add_scaled(combo, -v, combos[c])
        return vec, combo

    def add(self, vec: dict, tag: Hashable = None):
        """Insert a vector into the echelon.

        Returns None when the vector was independent (a new pivot row).
        Otherwise returns the dependency: a dict {tag: coeff} with
        vec = sum(coeff * previously added vector).  Requires track=True
        for a meaningful dependency; untracked solvers return {}.
        """
        start = {tag: self.field.one} if self.track else None
        rem, combo = self.reduce(vec, start)
        if not rem:
            if combo is None:
                return {}
            # 0 = vec + sum over earlier tags, so vec = -that sum
            combo.pop(tag, None)
            return {t: -c for t, c in combo.items()}
        pivot = min(rem)
        pv = rem[pivot]
        if pv != self.field.one:
            inv = self.field.one / pv
            rem = {c: v * inv for c, v in rem.items()}
            if combo is not None:
                combo = {t: v * inv for t, v in combo.items()}
        self.rows[pivot] = rem
        if combo is not None:
            self.combos[pivot] = combo
        self.insertion_order.append(pivot)
        return None

    def contains(self, vec: dict) -> bool:
        rem, _ = self.reduce(vec, None)
        return not rem

    def solve(self, target: dict):
        """Express target in the inserted vectors: {tag: coeff} or None."""
        if not self.track:
            raise ValueError("solver was built without tracking")
        rem, combo = self.reduce(target, {})
        if rem:
            return None
        return {t: -c for t, c in combo.items() if c}


class Subspace:
    """A subspace of a coordinate space, stored as an echelon basis."""

    def __init__(self, field, vectors: Iterable[dict] = ()):
        self.field = field
        self._solver = EchelonSolver(field, track=False)
        for v in vectors:
            self._solver.add(v)

    @property
    def dim(self) -> int:
        return self._solver.rank

    def extend(self, vec: dict) -> bool:
        """Add a vector; True if the dimension grew."""
        return self._solver.add(vec) is None

    def extend_all(self, vectors: Iterable[dict]) -> None:
        for v in vectors:
            self._solver.add(v)

    def contains(self, vec: dict) -> bool:
        return self._solver.contains(vec)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis_rows())

    def reduce(self, vec: dict) -> dict:
        rem, _ = self._solver.reduce(vec, None)
        return rem

    def basis_rows(self) -> list[dict]:
        """Echelon basis rows ordered by pivot coordinate."""
        return [self._solver.rows[p] for p in sorted(self._solver.rows)]

    def reduced_basis_rows(self) -> list[dict]:
        """Fully reduced (RREF) basis: canonical for the subspace."""
        pivots = sorted(self._solver.rows)
        out = {}
        # back-eliminate, highest pivot first so later rows are final
        for p in reversed(pivots):
            row = dict(self._solver.rows[p])
            for q in pivots:
                if q <= p or q not in row:
                    continue
                vec_add_scaled(row, -row[q] / out[q][q], out[q])
            out[p] = row
        return [out[p] for p in pivots]

    def sum(self, other: "Subspace") -> "Subspace":
        s = Subspace(self.field, self.basis_rows())
        s.extend_all(other.basis_rows())
        return s


def kernel_of_columns(columns: list[dict], field) -> list[dict]:
    """Null space of the linear map whose j-th column is columns[j].

    Returns kernel vectors over the source indices, in ascending order of
    their leading (free) index; each has coefficient one there.  This is
    the reduced-echelon null basis with free variables set to zero.
    """
    solver = EchelonSolver(field, track=True)
    kernel = []
    one = field.one
    for j, col in enumerate(columns):
        dep = solver.add(col, tag=j)
        if dep is not None:
            vec = {t: -c for t, c in dep.items()}
            vec[j] = one
            kernel.append(vec)
    return kernel


class LinearSystem:
    """Solve A x = b repeatedly for the same columns A."""

    def __init__(self, columns: list[dict], field):
        self.solver = EchelonSolver(field, track=True)
        for j, col in enumerate(columns):
            self.solver.add(col, tag=j)

    def solve(self, target: dict):
        """A particular solution {col_index: coeff}, or None."""
        return self.solver.solve(target)
