"""Ideals, submodules of free modules, presented modules, and derived operations.

All objects are immutable after construction; Groebner bases are cached
write-once per order.  Derived operations (elimination, colon, saturation,
intersection, annihilator, Fitting minors, dimension) reduce to the engine's
kernel and membership primitives.
"""

from __future__ import annotations

from .engine import (
    TOPOrder,
    buchberger,
    graph_basis,
    groebner_criterion_holds,
    kernel_of_columns,
    reduce_vec,
    vec_lead,
    _leads_by_pos,
)
from .matrices import FreeModuleMatrix
from .ring import BlockElim, Polynomial, PolynomialRing


def poly_to_vec(p: Polynomial):
    return {(0, e): c for e, c in p.terms}


def vec_to_poly(ring: PolynomialRing, v) -> Polynomial:
    return ring.from_dict({e: c for (_p, e), c in v.items()})


def vec_component(ring: PolynomialRing, v, pos: int) -> Polynomial:
    return ring.from_dict({e: c for (p, e), c in v.items() if p == pos})


class Ideal:
    """An ideal given by generators, with cached reduced Groebner bases."""

    def __init__(self, ring: PolynomialRing, generators):
        self.ring = ring
        gens = []
        for g in generators:
            g = ring(g)
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self._gb = {}
        self._cache = {}

    # -- basics ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def groebner_basis(self, order=None):
        """Reduced, lead-monic Groebner basis, sorted by ascending lead term."""
        order = order if order is not None else self.ring.order
        cached = self._gb.get(order)
        if cached is None:
            ring = self.ring.with_order(order)
            vecs = [poly_to_vec(g.in_ring(ring)) for g in self.generators]
            gb = buchberger(vecs, TOPOrder(order), ring.field)
            cached = tuple(vec_to_poly(ring, v) for v in gb)
            self._gb[order] = cached
        return cached

    def normal_form(self, f: Polynomial, order=None) -> Polynomial:
        order = order if order is not None else self.ring.order
        ring = self.ring.with_order(order)
        gb = self.groebner_basis(order)
        if not gb:
            return f.in_ring(ring)
        mod_order = TOPOrder(order)
        basis = [poly_to_vec(g) for g in gb]
        leads = [vec_lead(v, mod_order.key) for v in basis]
        nf = reduce_vec(
            poly_to_vec(f.in_ring(ring)), basis, _leads_by_pos(leads), mod_order.key, ring.field
        )
        return vec_to_poly(ring, nf)

    def contains(self, f) -> bool:
        f = self.ring(f)
        if f.is_zero():
            return True
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.ring != self.ring:
            return False
        return self.equals(other)

    __hash__ = None

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].constant_value() is not None

    def is_proper(self) -> bool:
        return not self.is_unit()

    # -- arithmetic on ideals ----------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check_same_ring(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check_same_ring(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, [])
        return Ideal(self.ring, [a * b for a in self.generators for b in other.generators])

    def power(self, k: int) -> "Ideal":
        if k < 0:
            raise ValueError("negative ideal power")
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(k):
            out = out * self
        return out

    def _check_same_ring(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise ValueError("ideals from different rings")

    # -- elimination / intersection / colon ----------------------------------------

    def eliminate(self, var_indices) -> "Ideal":
        """Generators of the intersection with the subring omitting the variables."""
        block = tuple(sorted(set(var_indices)))
        if not block:
            return Ideal(self.ring, self.generators)
        order = BlockElim(block, self.ring.n)
        gb = self.groebner_basis(order)
        kept = []
        for g in gb:
            if all(all(e[i] == 0 for i in block) for e, _c in g.terms):
                kept.append(g.in_ring(self.ring))
        return Ideal(self.ring, kept)

    def intersect(self, other: "Ideal") -> "Ideal":
        """I cap J via one auxiliary variable: eliminate t from t*I + (1-t)*J."""
        self._check_same_ring(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, [])
        ring = self.ring
        aux = PolynomialRing(ring.variables + ("@t",), ring.field, ring.order)
        t = aux.gen(ring.n)
        lift = [aux.gen(i) for i in range(ring.n)]
        gens = [g.substitute(aux, lift) * t for g in self.generators]
        one_minus_t = aux.one() - t
        gens += [g.substitute(aux, lift) * one_minus_t for g in other.generators]
        elim = Ideal(aux, gens).eliminate([ring.n])
        back = []
        for g in elim.generators:
            back.append(ring.from_dict({e[: ring.n]: c for e, c in g.terms}))
        return Ideal(ring, back)

    def quotient_by_element(self, f: Polynomial) -> "Ideal":
        """I : f through syzygies of (f, generators of I)."""
        f = self.ring(f)
        if f.is_zero():
            return Ideal(self.ring, [self.ring.one()])
        cols = [poly_to_vec(f)] + [poly_to_vec(g) for g in self.generators]
        syz = kernel_of_columns(cols, 1, self.ring)
        gens = []
        for v in syz:
            first = vec_component(self.ring, v, 0)
            if not first.is_zero():
                gens.append(first)
        return Ideal(self.ring, gens)

    def quotient(self, other) -> "Ideal":
        """I : J as the intersection of the single-element colons."""
        if isinstance(other, Polynomial):
            return self.quotient_by_element(other)
        self._check_same_ring(other)
        if other.is_zero():
            return Ideal(self.ring, [self.ring.one()])
        out = None
        for f in other.generators:
            q = self.quotient_by_element(f)
            out = q if out is None else out.intersect(q)
        return out

    def saturation(self, f: Polynomial) -> "Ideal":
        """Union of the colon chain I : f^k, iterated until stable."""
        f = self.ring(f)
        if f.is_zero():
            raise ValueError("saturation by zero")
        current = self
        while True:
            nxt = current.quotient_by_element(f)
            if current.contains_ideal(nxt):
                return current
            current = nxt

    # -- syzygies -------------------------------------------------------------------

    def syzygies(self) -> "Submodule":
        """Kernel of R^k -> R sending the basis to the generators."""
        if not self.generators:
            return Submodule(self.ring, 0, [])
        cols = [poly_to_vec(g) for g in self.generators]
        syz = kernel_of_columns(cols, 1, self.ring)
        twists = [g.degree() for g in self.generators] if self.is_homogeneous() else None
        return Submodule(self.ring, len(self.generators), syz, ambient_twists=twists)

    def minimal_generators(self):
        """Minimal homogeneous generating set (graded Nakayama greedy)."""
        if not self.is_homogeneous():
            raise ValueError("minimal generators require homogeneous input")
        items = sorted(self.generators, key=lambda g: (g.degree(), self.ring.order.key(g.lead_exponent())))
        kept = []
        current = Ideal(self.ring, [])
        for g in items:
            if not current.contains(g):
                kept.append(g)
                current = Ideal(self.ring, kept)
        return kept

    # -- numerical invariants ----------------------------------------------------------

    def dimension(self):
        """Krull dimension of R/I; -inf for the unit ideal."""
        cached = self._cache.get("dimension")
        if cached is None:
            cached = self._dimension()
            self._cache["dimension"] = cached
        return cached

    def _dimension(self):
        if self.is_zero():
            return self.ring.n
        gb = self.groebner_basis()
        supports = []
        for g in gb:
            e = g.lead_exponent()
            supports.append(frozenset(i for i, x in enumerate(e) if x))
        if frozenset() in supports:
            return float("-inf")  # unit ideal
        n = self.ring.n
        best = 0
        from itertools import combinations

        for size in range(n, 0, -1):
            for subset in combinations(range(n), size):
                s = set(subset)
                if all(not sup <= s for sup in supports):
                    return size
        return best

    def height(self) -> int:
        """Codimension n - dim(R/I); equals the grade over this base ring."""
        if self.is_zero():
            raise ValueError("height of the zero ideal")
        if self.is_unit():
            raise ValueError("height of the unit ideal")
        return self.ring.n - self.dimension()

    def grade(self) -> int:
        return self.height()

    def height_or_inf(self):
        """Height with the convention height(R) = +inf (residual-intersection use)."""
        if self.is_unit():
            return float("inf")
        return self.height()

    # -- modules -----------------------------------------------------------------------

    def quotient_module(self) -> "PresentedModule":
        """R/I as a presented module (1-row presentation)."""
        ring = self.ring
        if not self.generators:
            mat = FreeModuleMatrix(ring, [[]], source_twists=(), target_twists=(0,))
        elif self.is_homogeneous():
            mat = FreeModuleMatrix(
                ring,
                [list(self.generators)],
                source_twists=[g.degree() for g in self.generators],
                target_twists=[0],
            )
        else:
            mat = FreeModuleMatrix(ring, [list(self.generators)])
        return PresentedModule(mat)

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.generators) or "0"
        return f"ideal({inside})"


class Submodule:
    """Submodule of R^m given by generating vectors (engine dicts)."""

    def __init__(self, ring: PolynomialRing, ambient_rank: int, gens, ambient_twists=None):
        self.ring = ring
        self.ambient_rank = ambient_rank
        self.gens = [dict(v) for v in gens if v]
        for v in self.gens:
            for (p, _e) in v:
                if p < 0 or p >= ambient_rank:
                    raise ValueError("generator outside the ambient free module")
        self.ambient_twists = tuple(ambient_twists) if ambient_twists is not None else None
        self._gb = None

    def groebner_basis(self):
        if self._gb is None:
            order = TOPOrder(self.ring.order)
            self._gb = buchberger(self.gens, order, self.ring.field)
        return self._gb

    def contains(self, vec) -> bool:
        if not vec:
            return True
        gb = self.groebner_basis()
        if not gb:
            return False
        order = TOPOrder(self.ring.order)
        leads = [vec_lead(v, order.key) for v in gb]
        nf = reduce_vec(dict(vec), gb, _leads_by_pos(leads), order.key, self.ring.field)
        return not nf

    def contains_submodule(self, other: "Submodule") -> bool:
        return all(self.contains(v) for v in other.gens)

    def equals(self, other: "Submodule") -> bool:
        return self.contains_submodule(other) and other.contains_submodule(self)

    def is_zero(self) -> bool:
        return not self.gens

    def vector_degree(self, v):
        """Degree of a homogeneous vector (twists included); None when inconsistent."""
        if not v:
            return None
        degs = set()
        for (p, e), _c in v.items():
            t = self.ambient_twists[p] if self.ambient_twists is not None else 0
            degs.add(sum(e) + t)
        if len(degs) != 1:
            return None
        return degs.pop()

    def minimal_generators(self):
        """Minimal generating vectors, graded greedy (homogeneous gens required)."""
        degs = [self.vector_degree(v) for v in self.gens]
        if any(d is None for d in degs):
            raise ValueError("minimal generators require homogeneous vectors")
        order = TOPOrder(self.ring.order)
        tagged = sorted(
            zip(degs, range(len(self.gens))),
            key=lambda t: (t[0], order.key(vec_lead(self.gens[t[1]], order.key))),
        )
        kept = []
        current = Submodule(self.ring, self.ambient_rank, [], self.ambient_twists)
        for _d, idx in tagged:
            v = self.gens[idx]
            if not current.contains(v):
                kept.append(v)
                current = Submodule(self.ring, self.ambient_rank, kept, self.ambient_twists)
        return kept

    def syzygies(self) -> "Submodule":
        """Kernel of R^k -> R^m sending the basis to the generators."""
        syz = kernel_of_columns(self.gens, self.ambient_rank, self.ring)
        twists = None
        if self.ambient_twists is not None:
            degs = [self.vector_degree(v) for v in self.gens]
            twists = degs if all(d is not None for d in degs) else None
        return Submodule(self.ring, len(self.gens), syz, ambient_twists=twists)

    def matrix(self) -> FreeModuleMatrix:
        source = None
        if self.ambient_twists is not None:
            degs = [self.vector_degree(v) for v in self.gens]
            source = degs if all(d is not None for d in degs) else None
        return FreeModuleMatrix.from_columns(
            self.ring,
            self.gens,
            self.ambient_rank,
            source_twists=source,
            target_twists=self.ambient_twists,
        )

    def __repr__(self):
        return f"<submodule of R^{self.ambient_rank} with {len(self.gens)} generators>"


class PresentedModule:
    """Finitely presented module coker(presentation), graded via target twists."""

    def __init__(self, presentation: FreeModuleMatrix):
        self.presentation = presentation
        self.ring = presentation.ring
        self.ambient_rank = presentation.rows
        self.ambient_twists = presentation.target_twists
        self._cache = {}

    @classmethod
    def free(cls, ring, rank, twists=None):
        mat = FreeModuleMatrix.from_columns(
            ring, [], rank, source_twists=(), target_twists=twists if twists is not None else (0,) * rank
        )
        return cls(mat)

    def relations(self) -> Submodule:
        sub = self._cache.get("relations")
        if sub is None:
            sub = Submodule(
                self.ring,
                self.ambient_rank,
                self.presentation.column_vectors(),
                ambient_twists=self.ambient_twists,
            )
            self._cache["relations"] = sub
        return sub

    def is_zero(self) -> bool:
        if self.ambient_rank == 0:
            return True
        rel = self.relations()
        unit_vecs = [{(i, (0,) * self.ring.n): self.ring.field.one} for i in range(self.ambient_rank)]
        return all(rel.contains(v) for v in unit_vecs)

    def annihilator(self) -> Ideal:
        """{r : r M = 0} as the intersection over ambient basis vectors."""
        cached = self._cache.get("annihilator")
        if cached is not None:
            return cached
        if self.ambient_rank == 0:
            ann = Ideal(self.ring, [self.ring.one()])
        else:
            rel_cols = self.presentation.column_vectors()
            ann = None
            zero_exp = (0,) * self.ring.n
            for i in range(self.ambient_rank):
                cols = [{(i, zero_exp): self.ring.field.one}] + rel_cols
                syz = kernel_of_columns(cols, self.ambient_rank, self.ring)
                gens = []
                for v in syz:
                    first = vec_component(self.ring, v, 0)
                    if not first.is_zero():
                        gens.append(first)
                qi = Ideal(self.ring, gens)
                ann = qi if ann is None else ann.intersect(qi)
        self._cache["annihilator"] = ann
        return ann

    def is_homogeneous(self) -> bool:
        if self.ambient_twists is None:
            return False
        return self.presentation.cols == 0 or self.presentation.is_graded()

    def __repr__(self):
        return f"<module: coker of {self.presentation.rows}x{self.presentation.cols} presentation>"


# ---------------------------------------------------------------------------
# free-standing operations


def syzygy_module(gens) -> Submodule:
    """Syzygies of a list of polynomials (kernel of the generator map)."""
    gens = list(gens)
    if not gens:
        raise ValueError("no generators")
    ring = gens[0].ring
    for g in gens:
        if g.is_zero():
            raise ValueError("zero generator")
        if g.ring != ring:
            raise ValueError("generators from different rings")
    return Ideal(ring, gens).syzygies()


def minors_ideal(matrix: FreeModuleMatrix, t: int) -> Ideal:
    """Ideal of all t x t minors; I_0 = (1), oversize t gives (0)."""
    ring = matrix.ring
    if t == 0:
        return Ideal(ring, [ring.one()])
    if t > min(matrix.rows, matrix.cols):
        return Ideal(ring, [])
    return Ideal(ring, matrix.minors(t))


def kernel_of_matrix(matrix: FreeModuleMatrix) -> Submodule:
    """Kernel of the free-module map the matrix presents."""
    cols = matrix.column_vectors()
    syz = kernel_of_columns(cols, matrix.rows, matrix.ring)
    return Submodule(matrix.ring, matrix.cols, syz, ambient_twists=matrix.source_twists)


def lift_through(columns_matrix: FreeModuleMatrix, vec) -> dict | None:
    """Coefficients expressing vec in the column span, or None."""
    gb = graph_basis(columns_matrix.column_vectors(), columns_matrix.rows, columns_matrix.ring)
    remainder, lift = gb.reduce_with_certificate(vec)
    return None if remainder else lift


def ideal_groebner_check(ideal: Ideal) -> bool:
    """Direct Buchberger-criterion check of a cached basis (test hook)."""
    gb = [poly_to_vec(g) for g in ideal.groebner_basis()]
    return groebner_criterion_holds(gb, TOPOrder(ideal.ring.order), ideal.ring.field)
