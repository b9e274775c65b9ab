"""Koszul complexes and homology, Ext into R, canonical modules, Bass numbers,
equidimensional hulls, and the sliding-depth test.

Homology of complexes of presented modules is handled through subquotients of
free modules: the numerator is a preimage module computed with one kernel run,
the denominator collects the incoming image and the coefficient relations.
"""

from __future__ import annotations

from itertools import combinations

from .engine import TOPOrder, buchberger, vec_lead
from .ideals import (
    Ideal,
    PresentedModule,
    Submodule,
    kernel_of_columns,
    vec_component,
)
from .matrices import FreeModuleMatrix
from .resolutions import depth, free_resolution, is_cohen_macaulay  # noqa: F401  (re-exported users)


# ---------------------------------------------------------------------------
# Koszul complexes


class KoszulComplex:
    """Exterior-algebra differentials on a sequence f_1..f_r."""

    def __init__(self, sequence):
        sequence = list(sequence)
        if not sequence:
            raise ValueError("empty Koszul sequence")
        ring = sequence[0].ring
        for f in sequence:
            if f.ring != ring:
                raise ValueError("sequence from different rings")
        self.ring = ring
        self.sequence = sequence
        self.r = len(sequence)
        degrees = [f.degree() for f in sequence]
        self.homogeneous = all(f.is_homogeneous() and not f.is_zero() for f in sequence)
        self.subsets = [list(combinations(range(self.r), p)) for p in range(self.r + 1)]
        self.index = [{s: i for i, s in enumerate(level)} for level in self.subsets]
        self.twists = None
        if self.homogeneous:
            self.twists = [
                tuple(sum(degrees[i] for i in s) for s in level) for level in self.subsets
            ]
        self.maps = [self._differential(p) for p in range(1, self.r + 1)]

    def rank(self, p: int) -> int:
        if 0 <= p <= self.r:
            return len(self.subsets[p])
        return 0

    def _differential(self, p: int) -> FreeModuleMatrix:
        ring = self.ring
        rows = self.rank(p - 1)
        cols = self.rank(p)
        entries = [[ring.zero() for _ in range(cols)] for _ in range(rows)]
        for c, s in enumerate(self.subsets[p]):
            for j, var in enumerate(s):
                t = s[:j] + s[j + 1 :]
                r_idx = self.index[p - 1][t]
                f = self.sequence[var] if j % 2 == 0 else -self.sequence[var]
                entries[r_idx][c] = f
        return FreeModuleMatrix(
            ring,
            entries,
            source_twists=self.twists[p] if self.twists else None,
            target_twists=self.twists[p - 1] if self.twists else None,
        )

    def differential(self, p: int) -> FreeModuleMatrix:
        """d_p : K_p -> K_{p-1}."""
        return self.maps[p - 1]

    def is_complex(self) -> bool:
        return all(
            self.maps[p].compose(self.maps[p + 1]).is_zero() for p in range(len(self.maps) - 1)
        )


def koszul_complex(sequence) -> KoszulComplex:
    return KoszulComplex(sequence)


# ---------------------------------------------------------------------------
# subquotients


class SubquotientModule:
    """U/V for submodules V <= U <= R^m, given by generator lists."""

    def __init__(self, ring, ambient_rank, numerator, denominator, ambient_twists=None, check=False):
        self.ring = ring
        self.ambient_rank = ambient_rank
        self.numerator = [dict(v) for v in numerator if v]
        self.denominator = [dict(v) for v in denominator if v]
        self.ambient_twists = tuple(ambient_twists) if ambient_twists is not None else None
        self._cache = {}
        if check:
            num = self._numerator_sub()
            for v in self.denominator:
                if not num.contains(v):
                    raise ValueError("denominator not contained in numerator")

    def _numerator_sub(self) -> Submodule:
        sub = self._cache.get("num")
        if sub is None:
            sub = Submodule(self.ring, self.ambient_rank, self.numerator, self.ambient_twists)
            self._cache["num"] = sub
        return sub

    def _denominator_sub(self) -> Submodule:
        sub = self._cache.get("den")
        if sub is None:
            sub = Submodule(self.ring, self.ambient_rank, self.denominator, self.ambient_twists)
            self._cache["den"] = sub
        return sub

    def is_zero(self) -> bool:
        den = self._denominator_sub()
        return all(den.contains(v) for v in self.numerator)

    def reduced_generators(self):
        """Numerator generators with members of <kept> + V greedily dropped."""
        cached = self._cache.get("reduced")
        if cached is not None:
            return cached
        den = self.denominator
        degs = []
        hom = True
        num_sub = Submodule(self.ring, self.ambient_rank, self.numerator, self.ambient_twists)
        for v in self.numerator:
            d = num_sub.vector_degree(v)
            degs.append(d)
            hom = hom and d is not None
        order = TOPOrder(self.ring.order)
        idx = list(range(len(self.numerator)))
        if hom:
            idx.sort(key=lambda i: (degs[i], order.key(vec_lead(self.numerator[i], order.key))))
        kept = []
        for i in idx:
            v = self.numerator[i]
            test = Submodule(self.ring, self.ambient_rank, kept + den)
            if not test.contains(v):
                kept.append(v)
        self._cache["reduced"] = kept
        return kept

    def presentation(self) -> PresentedModule:
        """Presented module with generators the (reduced) numerator images."""
        cached = self._cache.get("presentation")
        if cached is not None:
            return cached
        gens = self.reduced_generators()
        k = len(gens)
        if k == 0:
            mod = PresentedModule(FreeModuleMatrix(self.ring, [], source_twists=(), target_twists=()))
            self._cache["presentation"] = mod
            return mod
        cols = gens + self.denominator
        syz = kernel_of_columns(cols, self.ambient_rank, self.ring)
        rel = []
        for v in syz:
            first = {(p, e): c for (p, e), c in v.items() if p < k}
            if first:
                rel.append(first)
        num_sub = Submodule(self.ring, self.ambient_rank, gens, self.ambient_twists)
        tw = [num_sub.vector_degree(v) for v in gens]
        twists = tuple(tw) if all(t is not None for t in tw) else None
        src = None
        if twists is not None:
            relsub = Submodule(self.ring, k, rel, twists)
            sd = [relsub.vector_degree(v) for v in rel]
            src = tuple(sd) if all(t is not None for t in sd) else None
            if src is None:
                twists = None
        mat = FreeModuleMatrix.from_columns(
            self.ring, rel, k, source_twists=src, target_twists=twists
        )
        mod = PresentedModule(mat)
        self._cache["presentation"] = mod
        return mod

    def annihilator(self) -> Ideal:
        """{r : r U <= V}, intersected over the numerator generators."""
        cached = self._cache.get("annihilator")
        if cached is not None:
            return cached
        gens = self.reduced_generators()
        if not gens:
            ann = Ideal(self.ring, [self.ring.one()])
        else:
            ann = None
            for u in gens:
                cols = [u] + self.denominator
                syz = kernel_of_columns(cols, self.ambient_rank, self.ring)
                q = []
                for v in syz:
                    first = vec_component(self.ring, v, 0)
                    if not first.is_zero():
                        q.append(first)
                qi = Ideal(self.ring, q)
                ann = qi if ann is None else ann.intersect(qi)
        self._cache["annihilator"] = ann
        return ann

    def length(self) -> int:
        """dim_k when finite; raises for infinite length."""
        cached = self._cache.get("length")
        if cached is None:
            cached = _coker_length(self.presentation())
            self._cache["length"] = cached
        return cached

    def __repr__(self):
        return f"<subquotient of R^{self.ambient_rank}: {len(self.numerator)} gens mod {len(self.denominator)}>"


def present_subquotient(s: SubquotientModule) -> PresentedModule:
    """Presentation whose cokernel is isomorphic to the subquotient."""
    num = s._numerator_sub()
    for v in s.denominator:
        if not num.contains(v):
            raise ValueError("denominator is not contained in the numerator")
    return s.presentation()


def _coker_length(module: PresentedModule) -> int:
    """Vector-space dimension of a finite-length cokernel by monomial counting."""
    k = module.ambient_rank
    if k == 0:
        return 0
    ring = module.ring
    rel = module.presentation.column_vectors()
    gb = buchberger(rel, TOPOrder(ring.order), ring.field)
    keyf = TOPOrder(ring.order).key
    leads_by_pos = {}
    for v in gb:
        p, e = vec_lead(v, keyf)
        leads_by_pos.setdefault(p, []).append(e)
    n = ring.n
    total = 0
    for pos in range(k):
        leads = leads_by_pos.get(pos, [])
        if any(not any(e) for e in leads):
            continue  # unit lead: this position contributes nothing
        bounds = []
        for v in range(n):
            pure = [e[v] for e in leads if all(e[w] == 0 for w in range(n) if w != v) and e[v] > 0]
            if not pure:
                raise ValueError("module has infinite length")
            bounds.append(min(pure))
        box = 1
        for b in bounds:
            box *= b
        if box > 5_000_000:
            raise ValueError("length computation too large")
        from itertools import product

        for exps in product(*[range(b) for b in bounds]):
            if not any(all(x >= y for x, y in zip(exps, lead)) for lead in leads):
                total += 1
    return total


# ---------------------------------------------------------------------------
# homology of complexes of presented modules


def _spot_homology(ring, spot_rank, spot_rels, out_cols, out_rank, out_rels, in_cols, twists):
    """ker/im at one spot: {v : OUT v in <out_rels>} / (<in_cols> + <spot_rels>)."""
    if out_cols is None:
        zero_exp = (0,) * ring.n
        numerator = [{(i, zero_exp): ring.field.one} for i in range(spot_rank)]
    else:
        cols = list(out_cols) + list(out_rels)
        syz = kernel_of_columns(cols, out_rank, ring)
        a = len(out_cols)
        numerator = []
        for v in syz:
            first = {(p, e): c for (p, e), c in v.items() if p < a}
            if first:
                numerator.append(first)
    denominator = list(in_cols) + list(spot_rels)
    return SubquotientModule(ring, spot_rank, numerator, denominator, ambient_twists=twists)


def _tensor_block_data(kos: KoszulComplex, module: PresentedModule | None, p: int):
    """Ambient rank, relation vectors, and twists of (K_p tensor M)."""
    ring = kos.ring
    m = 1 if module is None else module.ambient_rank
    rank = kos.rank(p) * m
    rels = []
    if module is not None:
        rel_cols = module.presentation.column_vectors()
        for s in range(kos.rank(p)):
            base = s * m
            for w in rel_cols:
                rels.append({(base + q, e): c for (q, e), c in w.items()})
    twists = None
    if kos.twists is not None:
        if module is None:
            twists = kos.twists[p]
        elif module.ambient_twists is not None:
            twists = tuple(
                kos.twists[p][s] + module.ambient_twists[q]
                for s in range(kos.rank(p))
                for q in range(m)
            )
    return rank, rels, twists


def _tensor_map_cols(kos: KoszulComplex, module: PresentedModule | None, p: int, transpose=False):
    """Columns of d_p tensor Id_M (or its transpose)."""
    m = 1 if module is None else module.ambient_rank
    mat = kos.differential(p)
    entries = mat.entries
    rows, cols = mat.rows, mat.cols
    if transpose:
        entries = [[entries[r][c] for r in range(rows)] for c in range(cols)]
        rows, cols = cols, rows
    out = []
    for c in range(cols):
        for t in range(m):
            col = {}
            for r in range(rows):
                poly = entries[r][c]
                for e, cf in poly.terms:
                    col[(r * m + t, e)] = cf
            out.append(col)
    return out


def koszul_homology(sequence, module: PresentedModule | None = None):
    """H_0..H_r of the Koszul complex on the sequence, with coefficients in M (default R)."""
    kos = koszul_complex(sequence)
    ring = kos.ring
    out = []
    for p in range(kos.r + 1):
        rank_p, rels_p, twists_p = _tensor_block_data(kos, module, p)
        if p == 0:
            out_cols = None
            out_rank, out_rels = 0, []
        else:
            out_cols = _tensor_map_cols(kos, module, p)
            out_rank, out_rels, _ = _tensor_block_data(kos, module, p - 1)
        if p < kos.r:
            in_cols = _tensor_map_cols(kos, module, p + 1)
        else:
            in_cols = []
        out.append(
            _spot_homology(ring, rank_p, rels_p, out_cols, out_rank, out_rels, in_cols, twists_p)
        )
    return out


# ---------------------------------------------------------------------------
# Ext into R, canonical module, hull


def ext_subquotient(module: PresentedModule, i: int) -> SubquotientModule:
    """Ext^i(M, R) as a subquotient of the dualised resolution spot."""
    if i < 0:
        raise ValueError("negative cohomological degree")
    ring = module.ring
    res = free_resolution(module)
    pd = res.length()
    if i > pd or res.rank(i) == 0:
        return SubquotientModule(ring, 0, [], [])
    rank_i = res.rank(i)
    twists_i = res.twists(i)
    dual_twists = tuple(-t for t in twists_i) if twists_i is not None else None
    if i < pd:
        dual_out = res.maps[i].transpose_dual()  # R^{b_i} -> R^{b_{i+1}}
        out_cols = dual_out.column_vectors()
        out_rank = dual_out.rows
    else:
        out_cols = None
        out_rank = 0
    if i >= 1:
        dual_in = res.maps[i - 1].transpose_dual()  # R^{b_{i-1}} -> R^{b_i}
        in_cols = dual_in.column_vectors()
    else:
        in_cols = []
    return _spot_homology(ring, rank_i, [], out_cols, out_rank, [], in_cols, dual_twists)


def ext_module(module: PresentedModule, i: int) -> PresentedModule:
    """Ext^i_R(M, R) as a presented module."""
    return ext_subquotient(module, i).presentation()


def canonical_module(ideal: Ideal) -> PresentedModule:
    """Ext^g(R/J, R) with g = height(J) (dualising twist suppressed)."""
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("canonical module needs a proper nonzero ideal")
    cached = ideal._cache.get("canonical")
    if cached is None:
        g = ideal.height()
        cached = ext_module(ideal.quotient_module(), g)
        ideal._cache["canonical"] = cached
    return cached


def equidimensional_hull(ideal: Ideal) -> Ideal:
    """Unmixed part I^unm = ann Ext^height(R/I, R)."""
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("hull needs a proper nonzero ideal")
    cached = ideal._cache.get("hull")
    if cached is None:
        c = ideal.height()
        ext = ext_subquotient(ideal.quotient_module(), c)
        cached = ext.annihilator()
        ideal._cache["hull"] = cached
    return cached


# ---------------------------------------------------------------------------
# Bass numbers


class BassTable:
    """mu^i = dim_k Ext^i(k, M) for 0 <= i <= up_to."""

    def __init__(self, values: dict):
        self.values = dict(values)

    def mu(self, i: int) -> int:
        return self.values.get(i, 0)

    def to_json_dict(self):
        return {str(i): v for i, v in sorted(self.values.items())}

    def __repr__(self):
        return f"BassTable({self.values})"


def bass_numbers(module: PresentedModule, up_to: int | None = None) -> BassTable:
    """Bass numbers via Koszul self-duality: mu^i = dim_k H_{n-i}(x_1..x_n; M)."""
    ring = module.ring
    if module.is_zero():
        raise ValueError("Bass numbers of the zero module")
    n = ring.n
    up_to = n if up_to is None else min(up_to, n)
    hom = koszul_homology(ring.gens(), module)
    values = {}
    for i in range(up_to + 1):
        j = n - i
        values[i] = hom[j].length() if 0 <= j <= n else 0
    return BassTable(values)


def bass_numbers_hom_oracle(module: PresentedModule, up_to: int | None = None) -> BassTable:
    """Independent pipeline: Ext^i(k, M) as cohomology of Hom(Koszul(x), M)."""
    ring = module.ring
    if module.is_zero():
        raise ValueError("Bass numbers of the zero module")
    n = ring.n
    up_to = n if up_to is None else min(up_to, n)
    kos = koszul_complex(ring.gens())
    values = {}
    for i in range(up_to + 1):
        rank_i, rels_i, _ = _tensor_block_data(kos, module, i)
        if i < n:
            out_cols = _tensor_map_cols(kos, module, i + 1, transpose=True)
            out_rank, out_rels, _ = _tensor_block_data(kos, module, i + 1)
        else:
            out_cols, out_rank, out_rels = None, 0, []
        if i >= 1:
            in_cols = _tensor_map_cols(kos, module, i, transpose=True)
        else:
            in_cols = []
        spot = _spot_homology(ring, rank_i, rels_i, out_cols, out_rank, out_rels, in_cols, None)
        values[i] = spot.length()
    return BassTable(values)


def tor_dimensions(module: PresentedModule, up_to: int | None = None):
    """dim_k Tor_i(k, M) by Koszul tensor; the independent Betti-number oracle."""
    ring = module.ring
    n = ring.n
    up_to = n if up_to is None else min(up_to, n)
    hom = koszul_homology(ring.gens(), module)
    return [hom[i].length() for i in range(up_to + 1)]


# ---------------------------------------------------------------------------
# sliding depth


def sliding_depth_check(ideal: Ideal, generators=None) -> dict:
    """depth H_i >= d - r + i for all i; reports the first failure."""
    gens = list(generators) if generators is not None else list(ideal.generators)
    if not gens:
        raise ValueError("no generators")
    if Ideal(ideal.ring, gens) != ideal:
        raise ValueError("generators do not generate the ideal")
    r = len(gens)
    d = ideal.ring.n
    hom = koszul_homology(gens)
    rows = []
    holds = True
    witness = None
    for i in range(r + 1):
        h = hom[i]
        bound = d - r + i
        if h.is_zero():
            rows.append({"i": i, "nonzero": False, "depth": None, "bound": bound, "ok": True})
            continue
        dep = depth(h.presentation())
        ok = dep >= bound
        rows.append({"i": i, "nonzero": True, "depth": dep, "bound": bound, "ok": ok})
        if not ok and holds:
            holds = False
            witness = (i, dep, bound)
    return {"holds": holds, "witness": witness, "rows": rows}
