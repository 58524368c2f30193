"""Quotient rings R = k[x1..xn]/I with finite-dimensional tooling.

A QuotientRing owns the reduced Groebner basis of its defining ideal,
the standard-monomial basis (for artinian quotients), normal forms with
memoized monomial reduction, power-ideal subspaces and the socle.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import InputError, NotArtinianError
from .groebner import buchberger, normal_form
from .linalg import Subspace, kernel_of_columns
from .poly import Monomial, MonomialOrder, Polynomial, monomials_of_degree


class QuotientRing:
    """k[x1..xn]/I for an ideal I contained in the square of the maximal ideal."""

    def __init__(self, field, var_names: Sequence[str], relations: Sequence[Polynomial],
                 order: MonomialOrder = MonomialOrder.GREVLEX, label: Optional[str] = None):
        names = tuple(var_names)
        if len(set(names)) != len(names):
            raise InputError("duplicate variable names in %r" % (names,))
        if not names:
            raise InputError("a ring needs at least one variable")
        self.field = field
        self.var_names = names
        self.n = len(names)
        self.order = order
        self.label = label
        rels = []
        for rel in relations:
            if rel.arity != self.n:
                raise InputError("relation arity %d does not match %d variables"
                                 % (rel.arity, self.n))
            rel = rel.with_order(order)
            if rel.is_zero():
                continue
            if rel.min_term_degree() < 2:
                raise InputError("relation %r has a term of degree < 2; "
                                 "the ideal must sit inside the square of the maximal ideal"
                                 % (rel,))
            rels.append(rel)
        self.relations = tuple(rels)
        self.graded = all(r.is_homogeneous() for r in rels)
        self.groebner_basis = tuple(buchberger(list(rels), order))
        self.lead_monomials = tuple(g.lead_monomial for g in self.groebner_basis)
        self.is_monomial_ideal = all(g.is_monomial() for g in self.groebner_basis)
        self._std_cache: dict[int, tuple[Monomial, ...]] = {}
        self._mono_nf: dict[Monomial, Polynomial] = {}
        self._pair_nf: dict[tuple[Monomial, Monomial], Polynomial] = {}
        self._power_subspaces: dict[int, Subspace] = {}
        self._basis_index: Optional[dict[Monomial, int]] = None
        self._socle = None
        self._homology = None
        self._artinian = all(
            any(lm.exponents[i] and lm.degree == lm.exponents[i] for lm in self.lead_monomials)
            for i in range(self.n))
        if self._artinian:
            self._enumerate_basis()

    # -- basics -------------------------------------------------------

    def __repr__(self):
        tag = self.label or ",".join(self.var_names)
        return "<QuotientRing %s (%d relations)>" % (tag, len(self.relations))

    @property
    def is_artinian(self) -> bool:
        return self._artinian

    def require_artinian(self, what: str = "this operation"):
        if not self._artinian:
            raise NotArtinianError(
                "%s needs a finite-dimensional quotient; no pure variable power "
                "appears among the leading monomials" % what)

    def zero_poly(self) -> Polynomial:
        return Polynomial.zero(self.n, self.field, self.order)

    def one_poly(self) -> Polynomial:
        return Polynomial.constant(self.n, self.field, self.order, 1)

    def variable(self, i: int) -> Polynomial:
        return Polynomial.variable(self.n, self.field, self.order, i)

    # -- standard monomials -------------------------------------------

    def std_basis(self, degree: int) -> tuple[Monomial, ...]:
        """Standard monomials of the given total degree, largest first."""
        cached = self._std_cache.get(degree)
        if cached is None:
            monos = [m for m in monomials_of_degree(self.n, degree)
                     if not any(lm.divides(m) for lm in self.lead_monomials)]
            monos.sort(key=self.order.key, reverse=True)
            cached = tuple(monos)
            self._std_cache[degree] = cached
        return cached

    def _enumerate_basis(self):
        degree = 0
        monos = []
        while True:
            layer = self.std_basis(degree)
            if not layer:
                break
            monos.extend(layer)
            degree += 1
        self.top_degree = degree - 1
        self.std_monomials = tuple(monos)
        self.dim = len(monos)
        self._basis_index = {m: i for i, m in enumerate(monos)}

    def hilbert_coefficients(self) -> list[int]:
        self.require_artinian("the Hilbert function table")
        return [len(self.std_basis(d)) for d in range(self.top_degree + 1)]

    # -- normal forms -------------------------------------------------

    def reduce_monomial(self, mono: Monomial) -> Polynomial:
        nf = self._mono_nf.get(mono)
        if nf is None:
            p = Polynomial.from_monomial(self.n, self.field, self.order, mono)
            nf = normal_form(p, list(self.groebner_basis))
            self._mono_nf[mono] = nf
        return nf

    def normal_form(self, p: Polynomial) -> Polynomial:
        p = p.with_order(self.order)
        acc = Polynomial.zero(self.n, self.field, self.order)
        for mono, coeff in p.terms:
            acc = acc + self.reduce_monomial(mono) * coeff
        return acc

    def mono_product(self, a: Monomial, b: Monomial) -> Polynomial:
        """Normal form of the product of two monomials, memoized."""
        key = (a, b) if self.order.key(a) >= self.order.key(b) else (b, a)
        nf = self._pair_nf.get(key)
        if nf is None:
            nf = self.reduce_monomial(a * b)
            self._pair_nf[key] = nf
        return nf

    def multiply(self, p: Polynomial, q: Polynomial) -> Polynomial:
        """Product in R of two normal forms."""
        acc = Polynomial.zero(self.n, self.field, self.order)
        for ma, ca in p.terms:
            for mb, cb in q.terms:
                acc = acc + self.mono_product(ma, mb) * (ca * cb)
        return acc

    # -- vector coordinates over the standard basis -------------------

    def basis_index(self) -> dict[Monomial, int]:
        self.require_artinian("coordinate vectors over the standard basis")
        return self._basis_index

    def poly_to_vec(self, p: Polynomial) -> dict[int, object]:
        idx = self.basis_index()
        vec = {}
        for mono, coeff in p.terms:
            i = idx.get(mono)
            if i is None:
                raise ValueError("monomial %r is not in normal form" % (mono,))
            vec[i] = coeff
        return vec

    def vec_to_poly(self, vec: dict) -> Polynomial:
        monos = self.std_monomials
        return Polynomial(self.n, self.field, self.order,
                          [(monos[i], c) for i, c in vec.items()])

    # -- invariants ---------------------------------------------------

    def v_invariant(self) -> int:
        """Largest j with I inside the j-th power of the maximal ideal.

        Equals the minimum over the presented generators of their minimum
        term degree, since membership in a monomial-span ideal is
        term-by-term.
        """
        if not self.relations:
            raise InputError("v is undefined for the zero ideal")
        return min(r.min_term_degree() for r in self.relations)

    def power_ideal_subspace(self, t: int) -> Subspace:
        """The image of the t-th power of the maximal ideal, as a subspace of R."""
        self.require_artinian("powers of the maximal ideal")
        if t <= 0:
            space = Subspace(self.field)
            for i in range(self.dim):
                space.extend({i: self.field.one})
            return space
        cached = self._power_subspaces.get(t)
        if cached is not None:
            return cached
        space = Subspace(self.field)
        if self.graded:
            one = self.field.one
            idx = self.basis_index()
            for d in range(t, self.top_degree + 1):
                for m in self.std_basis(d):
                    space.extend({idx[m]: one})
        else:
            # span of normal forms of all monomials of degree >= t:
            # seed with degree-t products, then saturate under the variables
            seeds = [self.reduce_monomial(m) for m in monomials_of_degree(self.n, t)]
            queue = [p for p in seeds if p.terms]
            while queue:
                p = queue.pop()
                if not space.extend(self.poly_to_vec(p)):
                    continue
                for i in range(self.n):
                    q = self.multiply(self.variable(i), p)
                    if q.terms:
                        queue.append(q)
        self._power_subspaces[t] = space
        return space

    def power_ideal_basis(self, t: int) -> list[Polynomial]:
        space = self.power_ideal_subspace(t)
        return [self.vec_to_poly(row) for row in space.reduced_basis_rows()]

    def ideal_span(self, gens: Sequence[Polynomial]) -> Subspace:
        """Subspace of R spanned by the ideal the given elements generate."""
        self.require_artinian("ideal spans")
        space = Subspace(self.field)
        queue = [self.normal_form(g) for g in gens]
        queue = [p for p in queue if p.terms]
        while queue:
            p = queue.pop()
            if not space.extend(self.poly_to_vec(p)):
                continue
            for i in range(self.n):
                q = self.multiply(self.variable(i), p)
                if q.terms:
                    queue.append(q)
        return space

    def socle(self) -> list[Polynomial]:
        """Basis of the annihilator of the maximal ideal, canonical form."""
        if self._socle is not None:
            return list(self._socle)
        self.require_artinian("the socle")
        columns = []
        for b in self.std_monomials:
            col = {}
            for l in range(self.n):
                prod = self.mono_product(self._var_monomial(l), b)
                for mono, coeff in prod.terms:
                    col[l * self.dim + self._basis_index[mono]] = coeff
            columns.append(col)
        kernel = kernel_of_columns(columns, self.field)
        space = Subspace(self.field, kernel)
        self._socle = [self.vec_to_poly(row) for row in space.reduced_basis_rows()]
        return list(self._socle)

    def socle_dim(self) -> int:
        return len(self.socle())

    def _var_monomial(self, i: int) -> Monomial:
        exps = [0] * self.n
        exps[i] = 1
        return Monomial(exps)

    def max_ideal_spans(self) -> list[int]:
        """Dimensions of the powers of the maximal ideal, index t."""
        self.require_artinian("power dimensions")
        dims = []
        t = 0
        while True:
            d = self.power_ideal_subspace(t).dim
            dims.append(d)
            if d == 0:
                break
            t += 1
        return dims

    def embedding_dimension(self) -> int:
        """dim of m/m^2; equals n because I sits inside n^2."""
        return self.n


def truncated_ring(ring: QuotientRing, s: int) -> QuotientRing:
    """R/m^s presented over the same variables: add every degree-s monomial."""
    if s < 1:
        raise InputError("truncation power must be positive")
    extra = [Polynomial.from_monomial(ring.n, ring.field, ring.order, m)
             for m in monomials_of_degree(ring.n, s)]
    label = "%s mod m^%d" % (ring.label or "R", s)
    return QuotientRing(ring.field, ring.var_names, list(ring.relations) + extra,
                        ring.order, label=label)
