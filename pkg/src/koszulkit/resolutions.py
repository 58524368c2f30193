"""Minimal free resolutions by exact linear algebra.

Graded resolutions are swept one internal degree at a time: the kernel
of the current differential is computed in each finite-dimensional
component, and the minimal generators are the part of the kernel not
reached by multiplying the previous degree's kernel by the variables.
Ungraded artinian rings get the same extraction on whole components.

Every sweep needs a certified stopping degree.  Over an artinian ring
components vanish above maxgen + top degree.  Over the polynomial ring
the regularity of a finite-length module (its top degree) or the Taylor
bound of a monomial ideal caps generator degrees.  For a non-artinian
graded quotient with finite Koszul homology the coefficientwise bound
P^R_M(z,w) <= P^Q_M(z,w) / (1 - sum h_{i,j} z^{i+1} w^j) turns into a
knapsack over the homology bidegrees, giving a proven cutoff for every
homological degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import InputError, NotArtinianError, PreconditionError
from .linalg import LinearSystem, Subspace, kernel_of_columns
from .poly import Polynomial
from .quotient import QuotientRing
from .tables import BettiTable


# -- module presentations ---------------------------------------------


@dataclass(frozen=True)
class ModulePresentation:
    """A module given by generators: a cokernel or a submodule of R^rank."""

    ring: QuotientRing
    mode: str  # "cokernel" | "submodule"
    rank: int
    shifts: tuple
    columns: tuple  # tuple of columns; column = tuple of rank polynomials
    kind: str = "custom"  # "k" | "power" | "cyclic" | "custom"
    power: int = 0

    def __post_init__(self):
        if self.mode not in ("cokernel", "submodule"):
            raise InputError("mode must be 'cokernel' or 'submodule'")
        if len(self.shifts) != self.rank:
            raise InputError("one degree shift per ambient generator required")
        for col in self.columns:
            if len(col) != self.rank:
                raise InputError("column length does not match ambient rank")

    @classmethod
    def residue_field(cls, ring: QuotientRing) -> "ModulePresentation":
        cols = tuple((ring.variable(i),) for i in range(ring.n))
        return cls(ring, "cokernel", 1, (0,), cols, kind="k")

    @classmethod
    def power_module(cls, ring: QuotientRing, t: int) -> "ModulePresentation":
        """The ideal m^t as a submodule of R."""
        if t < 0:
            raise InputError("power must be nonnegative")
        if t == 0:
            gens = [ring.one_poly()]
        elif ring.graded:
            gens = [Polynomial.from_monomial(ring.n, ring.field, ring.order, m)
                    for m in ring.std_basis(t)]
        else:
            gens = ring.power_ideal_basis(t)
        cols = tuple((g,) for g in gens)
        return cls(ring, "submodule", 1, (0,), cols, kind="power", power=t)

    @classmethod
    def cyclic_quotient(cls, ring: QuotientRing,
                        relations: Sequence[Polynomial]) -> "ModulePresentation":
        cols = tuple((r,) for r in relations)
        return cls(ring, "cokernel", 1, (0,), cols, kind="cyclic")


# -- free modules -----------------------------------------------------


class FreeModule:
    """A free module: generator degrees when graded, a bare rank when not."""

    def __init__(self, ring: QuotientRing, degrees: Optional[list], rank: int = 0):
        self.ring = ring
        self.degrees = None if degrees is None else list(degrees)
        self._rank = rank
        self._components: dict[int, tuple] = {}

    @property
    def rank(self) -> int:
        return self._rank if self.degrees is None else len(self.degrees)

    def component(self, j: int):
        """(offset per generator, total dimension) of the degree-j piece."""
        cached = self._components.get(j)
        if cached is None:
            offsets = []
            total = 0
            for d in self.degrees:
                offsets.append(total)
                if j - d >= 0:
                    total += len(self.ring.std_basis(j - d))
            cached = (tuple(offsets), total)
            self._components[j] = cached
        return cached

    def max_degree(self) -> int:
        return max(self.degrees) if self.degrees else 0


# -- cached multiplication index maps ---------------------------------


def _var_action(ring: QuotientRing, l: int, deg: int):
    """Multiplication by x_l as index pairs out of std_basis(deg)."""
    cache = getattr(ring, "_var_action_cache", None)
    if cache is None:
        cache = {}
        ring._var_action_cache = cache
    key = (l, deg)
    if key not in cache:
        tgt_index = {m: i for i, m in enumerate(ring.std_basis(deg + 1))}
        var = ring._var_monomial(l)
        rows = []
        for m in ring.std_basis(deg):
            prod = ring.mono_product(var, m)
            rows.append(tuple((tgt_index[mm], c) for mm, c in prod.terms))
        cache[key] = tuple(rows)
    return cache[key]


def _whole_var_action(ring: QuotientRing, l: int):
    cache = getattr(ring, "_whole_var_action_cache", None)
    if cache is None:
        cache = {}
        ring._whole_var_action_cache = cache
    if l not in cache:
        index = ring.basis_index()
        var = ring._var_monomial(l)
        rows = []
        for m in ring.std_monomials:
            prod = ring.mono_product(var, m)
            rows.append(tuple((index[mm], c) for mm, c in prod.terms))
        cache[l] = tuple(rows)
    return cache[l]


def _poly_action(ring: QuotientRing, p: Polynomial, deg: int):
    """Multiplication by p as index pairs out of std_basis(deg)."""
    out = []
    tgt_cache: dict[int, dict] = {}
    for m in ring.std_basis(deg):
        acc: dict = {}
        for mm, c in p.terms:
            tdeg = mm.degree + m.degree
            tgt_index = tgt_cache.get(tdeg)
            if tgt_index is None:
                tgt_index = {b: i for i, b in enumerate(ring.std_basis(tdeg))}
                tgt_cache[tdeg] = tgt_index
            for bm, bc in ring.mono_product(mm, m).terms:
                i = tgt_index[bm]
                v = acc.get(i)
                v = c * bc if v is None else v + c * bc
                if v:
                    acc[i] = v
                elif i in acc:
                    del acc[i]
        out.append(tuple(acc.items()))
    return tuple(out)


def _whole_poly_action(ring: QuotientRing, p: Polynomial):
    index = ring.basis_index()
    out = []
    for m in ring.std_monomials:
        acc: dict = {}
        for mm, c in p.terms:
            for bm, bc in ring.mono_product(mm, m).terms:
                i = index[bm]
                v = acc.get(i)
                v = c * bc if v is None else v + c * bc
                if v:
                    acc[i] = v
                elif i in acc:
                    del acc[i]
        out.append(tuple(acc.items()))
    return tuple(out)


# -- graded component plumbing ----------------------------------------


def _component_pairs(module: FreeModule, j: int):
    """Coordinate -> (generator, local index) for the degree-j component."""
    pairs = []
    for g, d in enumerate(module.degrees):
        if j - d < 0:
            continue
        for local in range(len(module.ring.std_basis(j - d))):
            pairs.append((g, local))
    return pairs


def _shift_vector(ring, module: FreeModule, vec: dict, j: int, l: int) -> dict:
    """x_l times a degree-j component vector, in degree j+1 coordinates."""
    pairs = _component_pairs(module, j)
    tgt_offsets, _ = module.component(j + 1)
    degrees = module.degrees
    actions: dict[int, tuple] = {}
    out: dict = {}
    for coord, coeff in vec.items():
        g, local = pairs[coord]
        deg = j - degrees[g]
        act = actions.get(deg)
        if act is None:
            act = _var_action(ring, l, deg)
            actions[deg] = act
        base = tgt_offsets[g]
        for ti, c in act[local]:
            k = base + ti
            v = out.get(k)
            v = coeff * c if v is None else v + coeff * c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def _column_images(ring, source: FreeModule, target: FreeModule,
                   columns, j: int, action_cache: dict) -> list[dict]:
    """Images of the degree-j component basis of the source."""
    tgt_offsets, _ = target.component(j)
    out = []
    for g, d in enumerate(source.degrees):
        e = j - d
        if e < 0:
            continue
        acts = []
        for tg, p in columns[g].items():
            key = (g, tg, e)
            act = action_cache.get(key)
            if act is None:
                act = _poly_action(ring, p, e)
                action_cache[key] = act
            acts.append((tgt_offsets[tg], act))
        for local in range(len(ring.std_basis(e))):
            vec: dict = {}
            for base, act in acts:
                for ti, c in act[local]:
                    k = base + ti
                    v = vec.get(k)
                    v = c if v is None else v + c
                    if v:
                        vec[k] = v
                    elif k in vec:
                        del vec[k]
            out.append(vec)
    return out


def _vector_to_column(ring, source: FreeModule, vec: dict, j: int) -> dict:
    """Component vector -> polynomial column over the source generators."""
    pairs = _component_pairs(source, j)
    per_gen: dict[int, list] = {}
    for coord, coeff in vec.items():
        g, local = pairs[coord]
        per_gen.setdefault(g, []).append((local, coeff))
    out = {}
    for g, entries in sorted(per_gen.items()):
        basis = ring.std_basis(j - source.degrees[g])
        terms = [(basis[local], coeff) for local, coeff in entries]
        out[g] = Polynomial(ring.n, ring.field, ring.order, terms)
    return out


def _column_component(ring, target: FreeModule, column: dict, j: int) -> dict:
    """Polynomial column -> component vector at internal degree j."""
    offsets, _ = target.component(j)
    vec: dict = {}
    for tg, p in column.items():
        e = j - target.degrees[tg]
        if e < 0:
            raise AssertionError("column entry below its generator degree")
        index = {m: i for i, m in enumerate(ring.std_basis(e))}
        for m, c in p.terms:
            k = offsets[tg] + index[m]
            v = vec.get(k)
            v = c if v is None else v + c
            if v:
                vec[k] = v
            elif k in vec:
                del vec[k]
    return vec


# -- certified sweep windows ------------------------------------------


def _taylor_bounds(degs: list, n: int) -> list:
    """Taylor-complex degree caps for a monomial ideal with those gens."""
    degs = sorted(degs, reverse=True)
    out = []
    for i in range(n + 2):
        out.append(sum(degs[:i]) if i <= len(degs) else sum(degs))
    return out


def _serre_window(ring: QuotientRing, pres: ModulePresentation,
                  max_tor: int) -> Callable:
    """Degree cutoffs for Tor^R(M, k) over a non-artinian graded ring."""
    from .koszul import homology_algebra
    n = ring.n
    hdims = homology_algebra(ring).bigraded_dims()
    steps = [(i + 1, j) for (i, j) in hdims]
    hbest: list = [None] * (max_tor + 1)
    hbest[0] = 0
    for m in range(1, max_tor + 1):
        cur = None
        for size, deg in steps:
            if size <= m and hbest[m - size] is not None:
                cand = hbest[m - size] + deg
                if cur is None or cand > cur:
                    cur = cand
        hbest[m] = cur

    if pres.kind == "power":
        if not ring.is_monomial_ideal:
            raise NotArtinianError(
                "power-module resolutions over a non-artinian quotient need "
                "a monomial ideal for a certified degree bound")
        taylor = _taylor_bounds([g.lead_monomial.degree
                                 for g in ring.groebner_basis], n)

        def q_bound(m):
            # m^t sits between R and R/m^t in the ambient Tor long exact
            # sequence; R/m^t has regularity below t
            return max(m + pres.power, taylor[m]) if m <= n else None
    elif pres.kind == "k":
        def q_bound(m):
            return m if m <= n else None
    else:
        raise PreconditionError(
            "no certified degree window for this module over a "
            "non-artinian quotient")

    bounds = []
    for i in range(max_tor + 1):
        best = -1
        for m in range(0, i + 1):
            qb = q_bound(m)
            if qb is None or hbest[i - m] is None:
                continue
            if qb + hbest[i - m] > best:
                best = qb + hbest[i - m]
        bounds.append(best)

    return lambda tor_i, prev_maxgen: bounds[tor_i]


def _q_mode_window(ring: QuotientRing, pres: ModulePresentation,
                   module_top: Optional[int] = None) -> Callable:
    """Degree cutoffs for resolutions over the polynomial ring itself."""
    top = module_top
    taylor = None
    if pres.kind == "k":
        top = 0
    elif pres.kind == "cyclic":
        gens = [c[0] for c in pres.columns if c[0].terms]
        if all(p.is_monomial() for p in gens):
            taylor = _taylor_bounds([p.lead_monomial.degree for p in gens], ring.n)
        if top is None:
            probe = QuotientRing(ring.field, ring.var_names, gens, ring.order)
            if probe.is_artinian:
                top = probe.top_degree
    if top is None and taylor is None:
        raise PreconditionError(
            "resolution over the polynomial ring needs a finite-length "
            "module or a monomial ideal for a degree window")

    def window(tor_i, prev_maxgen):
        cands = []
        if top is not None:
            cands.append(tor_i + top)
        if taylor is not None:
            cands.append(taylor[min(tor_i, len(taylor) - 1)])
        return min(cands)

    return window


# -- resolution data --------------------------------------------------


class ResolutionData:
    """A minimal free resolution: modules, differentials, Betti numbers.

    `chain` starts at the ambient free module; `maps[p]` holds the
    polynomial columns of the map chain[p+1] -> chain[p].  For a
    cokernel the resolved module has chain[0] as its zeroth step; for a
    submodule the chain is shifted by one and maps[0] is the evaluation
    into the ambient module.
    """

    def __init__(self, ring: QuotientRing, pres: ModulePresentation, limit: int):
        self.ring = ring
        self.presentation = pres
        self.limit = limit
        self.ambient: Optional[FreeModule] = None
        self.chain: list[FreeModule] = []
        self.maps: list[list[dict]] = []
        self.exactness_log: list[tuple] = []

    @property
    def graded(self) -> bool:
        return self.chain[0].degrees is not None

    def _tor_offset(self) -> int:
        return 0 if self.presentation.mode == "cokernel" else 1

    def module(self, i: int) -> FreeModule:
        return self.chain[i + self._tor_offset()]

    def differential(self, i: int) -> list[dict]:
        """Columns of the i-th differential of the resolved module, i >= 1."""
        return self.maps[i - 1 + self._tor_offset()]

    def betti_numbers(self) -> list[int]:
        off = self._tor_offset()
        return [m.rank for m in self.chain[off:off + self.limit + 1]]

    def bigraded_betti(self) -> dict:
        if not self.graded:
            raise PreconditionError("bigraded Betti numbers need a grading")
        off = self._tor_offset()
        out: dict = {}
        for i, mod in enumerate(self.chain[off:off + self.limit + 1]):
            for d in mod.degrees:
                out[(i, d)] = out.get((i, d), 0) + 1
        return out

    def table(self, label: str = "") -> BettiTable:
        return BettiTable(self.bigraded_betti(), label=label)

    def is_linear(self) -> bool:
        """True when every i-th step generator sits in internal degree i."""
        off = self._tor_offset()
        shift = self.presentation.power if self.presentation.kind == "power" else 0
        for i, mod in enumerate(self.chain[off:off + self.limit + 1]):
            if any(d != i + shift for d in mod.degrees):
                return False
        return True


# -- the graded engine ------------------------------------------------


def _graded_extract(ring, target: FreeModule, vectors_at, jmin, jmax):
    """Sweep degrees collecting generators not absorbed by saturation.

    vectors_at(j) spans the degree-j piece of the module being generated
    together with R_1 times the previous piece; the generators are the
    vectors that still grow the span.  Returns (degree, vector) pairs
    plus a per-degree log of (j, saturated dim, new, total).
    """
    gens = []
    prev_basis: list[dict] = []
    log = []
    for j in range(jmin, jmax + 1):
        span = Subspace(ring.field)
        for v in prev_basis:
            for l in range(ring.n):
                span.extend(_shift_vector(ring, target, v, j - 1, l))
        sat_dim = span.dim
        new = 0
        for v in vectors_at(j):
            if span.extend(v):
                gens.append((j, v))
                new += 1
        log.append((j, sat_dim, new, span.dim))
        prev_basis = span.basis_rows()
    return gens, log


def _resolve_graded(ring: QuotientRing, pres: ModulePresentation, limit: int,
                    window: Callable) -> ResolutionData:
    data = ResolutionData(ring, pres, limit)
    ambient = FreeModule(ring, list(pres.shifts))
    data.ambient = ambient

    col_degrees = []
    for col in pres.columns:
        degs = set()
        for p, sh in zip(col, pres.shifts):
            if not p.terms:
                continue
            if not p.is_homogeneous():
                raise PreconditionError("graded resolutions need homogeneous columns")
            degs.add(p.max_term_degree() + sh)
        if len(degs) > 1:
            raise PreconditionError("graded resolutions need homogeneous columns")
        if degs:
            col_degrees.append((degs.pop(), col))
        if pres.mode == "cokernel":
            for p in col:
                if p.terms and p.min_term_degree() == 0:
                    raise PreconditionError(
                        "cokernel columns must lie in the maximal ideal")

    # chain positions to build: limit for a cokernel, one extra shifted
    positions = limit + (0 if pres.mode == "cokernel" else 1)
    tor_of = (lambda p: p) if pres.mode == "cokernel" else (lambda p: p - 1)

    # step one: minimal generators of the span of the given columns
    if col_degrees and positions >= 1:
        by_degree: dict[int, list] = {}
        for d, col in col_degrees:
            by_degree.setdefault(d, []).append(
                _column_component(ring, ambient, _as_column(col), d))
        jmin = min(by_degree)
        jmax = max(by_degree)
        gens, log = _graded_extract(ring, ambient,
                                    lambda j: by_degree.get(j, ()), jmin, jmax)
    else:
        gens, log = [], []

    data.chain = [ambient]
    if positions >= 1:
        first = FreeModule(ring, [d for d, _v in gens])
        data.chain.append(first)
        data.maps.append([_vector_to_column(ring, ambient, v, d) for d, v in gens])
        data.exactness_log.append((tor_of(1), log))

    while len(data.chain) - 1 < positions:
        src = data.chain[-1]
        tgt = data.chain[-2]
        cols = data.maps[-1]
        pos = len(data.chain)
        if src.rank == 0:
            data.chain.append(FreeModule(ring, []))
            data.maps.append([])
            continue
        jmin = min(src.degrees)
        jmax = window(tor_of(pos), src.max_degree())
        action_cache: dict = {}

        def kernel_at(j, _src=src, _tgt=tgt, _cols=cols, _cache=action_cache):
            images = _column_images(ring, _src, _tgt, _cols, j, _cache)
            return kernel_of_columns(images, ring.field)

        gens, log = _graded_extract(ring, src, kernel_at, jmin, jmax)
        data.exactness_log.append((tor_of(pos), log))
        new_cols = [_vector_to_column(ring, src, v, d) for d, v in gens]
        for col in new_cols:
            for p in col.values():
                if p.terms and p.min_term_degree() == 0:
                    raise AssertionError("resolution lost minimality")
        data.chain.append(FreeModule(ring, [d for d, _v in gens]))
        data.maps.append(new_cols)
    return data


def _as_column(col) -> dict:
    return {i: p for i, p in enumerate(col) if p.terms}


# -- the ungraded engine ----------------------------------------------


def _whole_vector(ring, col: dict) -> dict:
    index = ring.basis_index()
    dim = ring.dim
    vec: dict = {}
    for tg, p in col.items():
        for m, c in ring.normal_form(p).terms:
            vec[tg * dim + index[m]] = c
    return vec


def _whole_shift(ring, vec: dict, l: int) -> dict:
    act = _whole_var_action(ring, l)
    dim = ring.dim
    out: dict = {}
    for coord, coeff in vec.items():
        g, local = divmod(coord, dim)
        base = g * dim
        for ti, c in act[local]:
            k = base + ti
            v = out.get(k)
            v = coeff * c if v is None else v + coeff * c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def _whole_to_column(ring, vec: dict) -> dict:
    dim = ring.dim
    per_gen: dict[int, list] = {}
    for coord, coeff in vec.items():
        g, local = divmod(coord, dim)
        per_gen.setdefault(g, []).append((ring.std_monomials[local], coeff))
    return {g: Polynomial(ring.n, ring.field, ring.order, terms)
            for g, terms in sorted(per_gen.items())}


def _whole_images(ring, source: FreeModule, columns) -> list[dict]:
    dim = ring.dim
    out = []
    for g in range(source.rank):
        acts = [(tg * dim, _whole_poly_action(ring, p))
                for tg, p in columns[g].items()]
        for local in range(dim):
            vec: dict = {}
            for base, act in acts:
                for ti, c in act[local]:
                    k = base + ti
                    v = vec.get(k)
                    v = c if v is None else v + c
                    if v:
                        vec[k] = v
                    elif k in vec:
                        del vec[k]
            out.append(vec)
    return out


def _whole_minimal_gens(ring, vectors: list[dict]):
    """Vectors of span(vectors) surviving modulo m * span(vectors)."""
    sat = Subspace(ring.field)
    for v in vectors:
        for l in range(ring.n):
            sat.extend(_whole_shift(ring, v, l))
    sat_dim = sat.dim
    gens = [v for v in vectors if sat.extend(v)]
    return gens, sat_dim, sat.dim


def _resolve_whole(ring: QuotientRing, pres: ModulePresentation,
                   limit: int) -> ResolutionData:
    ring.require_artinian("a resolution without a grading")
    data = ResolutionData(ring, pres, limit)
    ambient = FreeModule(ring, None, pres.rank)
    data.ambient = ambient

    col_vecs = []
    for col in pres.columns:
        vec = _whole_vector(ring, _as_column(col))
        if vec:
            col_vecs.append(vec)
    if pres.mode == "cokernel":
        for v in col_vecs:
            col = _whole_to_column(ring, v)
            if any(p.constant_term() for p in col.values()):
                raise PreconditionError("cokernel columns must lie in the "
                                        "maximal ideal")

    # saturate the column span into a submodule, then drop the part
    # reached by the maximal ideal; survivors among the original
    # columns are the minimal generators
    span = Subspace(ring.field)
    queue = []
    for v in col_vecs:
        if span.extend(v):
            queue.append(v)
    while queue:
        v = queue.pop()
        for l in range(ring.n):
            w = _whole_shift(ring, v, l)
            if w and span.extend(w):
                queue.append(w)
    sat = Subspace(ring.field)
    for v in span.basis_rows():
        for l in range(ring.n):
            sat.extend(_whole_shift(ring, v, l))
    sat_dim = sat.dim
    gens = [v for v in col_vecs if sat.extend(v)]
    if sat.dim != span.dim:
        raise AssertionError("given columns fail to generate their span")

    positions = limit + (0 if pres.mode == "cokernel" else 1)
    tor_of = (lambda p: p) if pres.mode == "cokernel" else (lambda p: p - 1)

    data.chain = [ambient]
    if positions >= 1:
        data.chain.append(FreeModule(ring, None, len(gens)))
        data.maps.append([_whole_to_column(ring, v) for v in gens])
        data.exactness_log.append((tor_of(1), [(None, sat_dim, len(gens), sat.dim)]))

    while len(data.chain) - 1 < positions:
        src = data.chain[-1]
        cols = data.maps[-1]
        pos = len(data.chain)
        if src.rank == 0:
            data.chain.append(FreeModule(ring, None, 0))
            data.maps.append([])
            continue
        images = _whole_images(ring, src, cols)
        kernel = kernel_of_columns(images, ring.field)
        new_gens, ker_sat, total = _whole_minimal_gens(ring, kernel)
        data.exactness_log.append(
            (tor_of(pos), [(None, ker_sat, len(new_gens), total)]))
        new_cols = [_whole_to_column(ring, v) for v in new_gens]
        for col in new_cols:
            for p in col.values():
                if p.constant_term():
                    raise AssertionError("resolution lost minimality")
        data.chain.append(FreeModule(ring, None, len(new_gens)))
        data.maps.append(new_cols)
    return data


# -- public operations ------------------------------------------------


def polynomial_ambient(ring: QuotientRing) -> QuotientRing:
    """The ambient polynomial ring of a presented quotient, relation free."""
    cached = getattr(ring, "_ambient_ring", None)
    if cached is None:
        cached = QuotientRing(ring.field, ring.var_names, [], ring.order,
                              label="ambient polynomial ring")
        ring._ambient_ring = cached
    return cached


def minimal_resolution(ring: QuotientRing, pres: ModulePresentation,
                       limit: int) -> ResolutionData:
    """Minimal free resolution of the presented module out to step `limit`."""
    if limit < 0:
        raise InputError("resolution limit must be nonnegative")
    if pres.ring is not ring:
        raise InputError("presentation belongs to a different ring")
    if not ring.graded:
        return _resolve_whole(ring, pres, limit)
    if not ring.relations:
        window = _q_mode_window(ring, pres)
        return _resolve_graded(ring, pres, limit, window)
    if ring.is_artinian:
        top = ring.top_degree
        return _resolve_graded(ring, pres, limit,
                               lambda tor_i, prev_maxgen: prev_maxgen + top)
    max_tor = limit + (0 if pres.mode == "cokernel" else 1)
    window = _serre_window(ring, pres, max_tor)
    return _resolve_graded(ring, pres, limit, window)


def betti_numbers_k(ring: QuotientRing, limit: int) -> ResolutionData:
    """Resolution of the residue field over R out to step `limit`."""
    return minimal_resolution(ring, ModulePresentation.residue_field(ring), limit)


def betti_table_R_over_Q(ring: QuotientRing, via: str = "homology") -> BettiTable:
    """Betti table of R over its polynomial ring, by either route."""
    from .koszul import homology_algebra
    label = ring.label or "R"
    if via == "homology":
        entries = dict(homology_algebra(ring).bigraded_dims())
        entries[(0, 0)] = 1
        return BettiTable(entries, label=label)
    if via == "resolution":
        ambient = polynomial_ambient(ring)
        pres = ModulePresentation.cyclic_quotient(ambient, ring.relations)
        data = minimal_resolution(ambient, pres, ambient.n + 1)
        return BettiTable(data.bigraded_betti(), label=label)
    raise InputError("via must be 'homology' or 'resolution'")


# -- comparison maps between power ideals -----------------------------


@dataclass(frozen=True)
class TorMapReport:
    """Outcome of reducing a lifted inclusion m^s -> m^b modulo m."""

    s: int
    b: int
    limit: int
    vanishes: bool
    degrees: tuple  # per homological degree: True if the reduced map is zero
    witnesses: tuple  # (degree, source gen, target gen, coefficient repr)


def tor_map_vanishes(ring: QuotientRing, s: int, b: int, limit: int) -> TorMapReport:
    """Whether Tor of the inclusion m^s -> m^b vanishes up to `limit`.

    The inclusion is lifted to a chain map between the minimal
    resolutions; the induced map on Tor is the lift reduced modulo the
    maximal ideal, read off from the constant coefficients.
    """
    if s < b:
        raise InputError("the inclusion of m^s into m^b needs s >= b")
    if limit < 0:
        raise InputError("limit must be nonnegative")
    res_s = minimal_resolution(ring, ModulePresentation.power_module(ring, s), limit)
    res_b = minimal_resolution(ring, ModulePresentation.power_module(ring, b), limit)
    if res_s.graded:
        lifts = _lift_graded(ring, res_s, res_b, limit)
    else:
        lifts = _lift_whole(ring, res_s, res_b, limit)

    degrees = []
    witnesses = []
    for i in range(limit + 1):
        ok = True
        for gi, col in enumerate(lifts[i + 1]):
            for bg, p in col.items():
                c = p.constant_term()
                if c:
                    ok = False
                    witnesses.append((i, gi, bg, repr(c)))
        degrees.append(ok)
    return TorMapReport(s, b, limit, all(degrees), tuple(degrees), tuple(witnesses))


def _compose_map(ring, lift_prev: list[dict], column: dict) -> dict:
    """A previously lifted map applied to one differential column."""
    acc: dict[int, Polynomial] = {}
    for tg, p in column.items():
        for bg, q in lift_prev[tg].items():
            prod = ring.multiply(p, q)
            if not prod.terms:
                continue
            cur = acc.get(bg)
            acc[bg] = prod if cur is None else cur + prod
    return {bg: p for bg, p in acc.items() if p.terms}


def _lift_graded(ring, res_s, res_b, limit):
    # position 0 is the shared ambient copy of R; the lift starts as
    # the identity and is pushed up the two chains one step at a time
    one = ring.one_poly()
    lifts = [[{0: one}]]
    systems: dict = {}
    for p in range(1, limit + 2):
        src = res_s.chain[p]
        prev = lifts[p - 1]
        cur = []
        for gi in range(src.rank):
            d = src.degrees[gi]
            target_col = _compose_map(ring, prev, res_s.maps[p - 1][gi])
            tvec = _column_component(ring, res_b.chain[p - 1], target_col, d)
            if not tvec:
                cur.append({})
                continue
            key = (p, d)
            system = systems.get(key)
            if system is None:
                images = _column_images(ring, res_b.chain[p], res_b.chain[p - 1],
                                        res_b.maps[p - 1], d, {})
                system = LinearSystem(images, ring.field)
                systems[key] = system
            sol = system.solve(tvec)
            if sol is None:
                raise AssertionError("chain map lift failed; resolution not exact")
            cur.append(_vector_to_column(ring, res_b.chain[p], dict(sol), d))
        lifts.append(cur)
    return lifts


def _lift_whole(ring, res_s, res_b, limit):
    one = ring.one_poly()
    lifts = [[{0: one}]]
    systems: dict = {}
    for p in range(1, limit + 2):
        src = res_s.chain[p]
        prev = lifts[p - 1]
        cur = []
        for gi in range(src.rank):
            target_col = _compose_map(ring, prev, res_s.maps[p - 1][gi])
            tvec = _whole_vector(ring, target_col)
            if not tvec:
                cur.append({})
                continue
            system = systems.get(p)
            if system is None:
                system = LinearSystem(
                    _whole_images(ring, res_b.chain[p], res_b.maps[p - 1]),
                    ring.field)
                systems[p] = system
            sol = system.solve(tvec)
            if sol is None:
                raise AssertionError("chain map lift failed; resolution not exact")
            cur.append(_whole_to_column(ring, dict(sol)))
        lifts.append(cur)
    return lifts
