"""Free resolutions, Betti tables, and the numerical invariants built on them.

Resolutions are computed as Schreyer towers: one Buchberger run for the
module's relations, then syzygies of each level's Groebner basis from S-pair
standard representations (already a Groebner basis for the induced order, so
no further completions are needed).  Explicit minimisation by cancelling
constant entries then yields the minimal graded resolution.
"""

from __future__ import annotations

from .engine import TOPOrder, buchberger, schreyer_syzygies, vec_lead
from .ideals import Ideal, PresentedModule, Submodule
from .matrices import FreeModuleMatrix


class ChainComplex:
    """F_0 <- F_1 <- ... given by maps d_i: F_i -> F_{i-1}."""

    def __init__(self, ring, maps, f0_rank, f0_twists=None, homogeneous=True, minimal=False, augmentation=None):
        self.ring = ring
        self.maps = tuple(maps)
        self.f0_rank = f0_rank
        self.f0_twists = tuple(f0_twists) if f0_twists is not None else None
        self.homogeneous = homogeneous
        self.minimal = minimal
        self.augmentation = augmentation  # matrix realising F_0 -> M for ideal-type targets

    def length(self) -> int:
        return len(self.maps)

    def rank(self, i: int) -> int:
        if i == 0:
            return self.f0_rank
        if i <= len(self.maps):
            return self.maps[i - 1].cols
        return 0

    def ranks(self):
        return [self.rank(i) for i in range(len(self.maps) + 1)]

    def twists(self, i: int):
        if i == 0:
            return self.f0_twists
        if i <= len(self.maps):
            return self.maps[i - 1].source_twists
        return ()

    def is_complex(self) -> bool:
        """Consecutive maps compose to zero."""
        for i in range(len(self.maps) - 1):
            if not self.maps[i].compose(self.maps[i + 1]).is_zero():
                return False
        return True

    def is_graded(self) -> bool:
        return all(m.source_twists is not None and m.target_twists is not None and m.is_graded() for m in self.maps)

    def __repr__(self):
        arrow = " <- ".join(f"F{i}(rank {r})" for i, r in enumerate(self.ranks()))
        return f"<complex {arrow}>"


# ---------------------------------------------------------------------------
# Schreyer tower


def _vector_degree(v, twists):
    degs = set()
    for (p, e), _c in v.items():
        t = twists[p] if twists is not None else 0
        degs.add(sum(e) + t)
    if len(degs) != 1:
        return None
    return degs.pop()


def _tower(ring, gens, ambient_rank, ambient_twists):
    """Matrices [L0, L1, ...]: L0 presents the Groebner basis of <gens> in
    R^ambient_rank, and each later level the syzygies of the previous basis."""
    field = ring.field
    order = TOPOrder(ring.order)
    basis = buchberger(list(gens), order, field)
    levels = []
    twists = ambient_twists
    homogeneous = twists is not None
    while basis:
        keyf = order.key

        def schreyer_sort(v):
            p, e = vec_lead(v, keyf)
            return (p, tuple(-x for x in e))

        basis = sorted(basis, key=schreyer_sort)
        if homogeneous:
            new_twists = []
            for v in basis:
                d = _vector_degree(v, twists)
                if d is None:
                    homogeneous = False
                    new_twists = None
                    break
                new_twists.append(d)
        else:
            new_twists = None
        levels.append(
            FreeModuleMatrix.from_columns(
                ring,
                basis,
                ambient_rank,
                source_twists=new_twists,
                target_twists=twists,
            )
        )
        if len(levels) > ring.n + 3:
            raise RuntimeError("Schreyer tower failed to terminate within the syzygy bound")
        syz, induced = schreyer_syzygies(basis, order, field)
        if not syz:
            break
        ambient_rank = len(basis)
        twists = new_twists
        basis, order = syz, induced
    return levels, homogeneous


def schreyer_complex(target) -> ChainComplex:
    """Exact (generally non-minimal) free resolution of the target module."""
    if isinstance(target, Ideal):
        ring = target.ring
        if target.is_zero():
            return ChainComplex(ring, [], 0, (), True, True)
        hom = target.is_homogeneous()
        gens = [_ideal_vec(g) for g in target.groebner_basis()]
        levels, homogeneous = _tower(ring, gens, 1, (0,) if hom else None)
        # levels[0] realises F_0 -> R by the basis; the resolution of the
        # module I itself starts at the syzygies.
        aug = levels[0]
        maps = levels[1:]
        return ChainComplex(
            ring,
            maps,
            f0_rank=aug.cols,
            f0_twists=aug.source_twists,
            homogeneous=homogeneous,
            minimal=False,
            augmentation=aug,
        )
    if isinstance(target, Submodule):
        target = PresentedModule(target.matrix())
    if isinstance(target, PresentedModule):
        ring = target.ring
        cols = target.presentation.column_vectors()
        twists = target.ambient_twists
        if not any(cols):
            return ChainComplex(ring, [], target.ambient_rank, twists, twists is not None, True)
        levels, homogeneous = _tower(ring, [c for c in cols if c], target.ambient_rank, twists)
        return ChainComplex(
            ring,
            levels,
            f0_rank=target.ambient_rank,
            f0_twists=twists,
            homogeneous=homogeneous,
            minimal=False,
        )
    raise TypeError(f"cannot resolve {target!r}")


def _ideal_vec(p):
    return {(0, e): c for e, c in p.terms}


# ---------------------------------------------------------------------------
# minimisation


def minimize(complex_: ChainComplex) -> ChainComplex:
    """Cancel constant entries (Gaussian pruning of contractible summands).

    Homotopy-equivalent output; for a homogeneous exact complex the result is
    the minimal resolution, whose ranks and twists are the Betti data.
    """
    ring = complex_.ring
    entries = [[list(row) for row in m.entries] for m in complex_.maps]
    twists = [list(complex_.f0_twists) if complex_.f0_twists is not None else None]
    for m in complex_.maps:
        twists.append(list(m.source_twists) if m.source_twists is not None else None)

    def find_unit():
        for k, mat in enumerate(entries):
            for r, row in enumerate(mat):
                for c, p in enumerate(row):
                    if not p.is_zero() and p.constant_value() is not None:
                        return k, r, c
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        k, r, c = hit
        mat = entries[k]
        u = mat[r][c].constant_value()
        inv = ring.field.inv(u)
        rows = len(mat)
        cols = len(mat[0]) if mat else 0
        # Schur complement on d_{k+1}
        for r2 in range(rows):
            if r2 == r:
                continue
            a = mat[r2][c]
            if a.is_zero():
                continue
            factor = a.scale(inv)
            for c2 in range(cols):
                if c2 == c:
                    continue
                b = mat[r][c2]
                if not b.is_zero():
                    mat[r2][c2] = mat[r2][c2] - factor * b
        for r2 in range(rows):
            del mat[r2][c]
        del mat[r]
        # d_{k+2} loses row c (its target basis vector is cancelled)
        if k + 1 < len(entries):
            del entries[k + 1][c]
        # d_k loses column r (a target basis vector of d_{k+1} is cancelled)
        if k - 1 >= 0:
            for row in entries[k - 1]:
                del row[r]
        if twists[k] is not None:
            del twists[k][r]
        if twists[k + 1] is not None:
            del twists[k + 1][c]

    # rebuild matrices, truncating trailing zero ranks
    maps = []
    f0_rank = len(twists[0]) if twists[0] is not None else (len(entries[0]) if entries else complex_.f0_rank)
    ranks = [f0_rank]
    for k, mat in enumerate(entries):
        cols = len(mat[0]) if mat else 0
        if complex_.f0_twists is None:
            src = tgt = None
        else:
            src = twists[k + 1]
            tgt = twists[k]
        if cols == 0:
            break
        if not mat:
            # rank-0 target with live source cannot occur in an exact complex
            raise RuntimeError("pruning produced a map into a zero module")
        maps.append(FreeModuleMatrix(ring, mat, source_twists=src, target_twists=tgt))
        ranks.append(cols)
    return ChainComplex(
        complex_.ring,
        maps,
        f0_rank=f0_rank,
        f0_twists=tuple(twists[0]) if twists[0] is not None else None,
        homogeneous=complex_.homogeneous,
        minimal=complex_.homogeneous,
    )


def free_resolution(target) -> ChainComplex:
    """Minimal graded free resolution (minimised Schreyer tower); cached."""
    cache = getattr(target, "_cache", None)
    if cache is not None and "resolution" in cache:
        return cache["resolution"]
    res = minimize(schreyer_complex(target))
    if cache is not None:
        cache["resolution"] = res
    return res


# ---------------------------------------------------------------------------
# Betti tables and invariants


class BettiTable:
    """Graded Betti numbers beta_{i,j} with totals and partial Poincare sums."""

    def __init__(self, graded, totals, rank=None):
        self.graded = dict(graded) if graded is not None else None
        self.totals = list(totals)
        while self.totals and self.totals[-1] == 0:
            self.totals.pop()
        self.rank = rank

    @classmethod
    def from_complex(cls, complex_: ChainComplex) -> "BettiTable":
        if not complex_.minimal:
            raise ValueError("Betti numbers require a minimised resolution")
        totals = complex_.ranks()
        graded = None
        if complex_.homogeneous:
            graded = {}
            for i in range(len(totals)):
                tw = complex_.twists(i)
                if tw is None:
                    graded = None
                    break
                for j in tw:
                    graded[(i, j)] = graded.get((i, j), 0) + 1
        return cls(graded, totals)

    def total(self, i: int) -> int:
        if 0 <= i < len(self.totals):
            return self.totals[i]
        return 0

    def entry(self, i: int, j: int) -> int:
        if self.graded is None:
            raise ValueError("no graded data")
        return self.graded.get((i, j), 0)

    def projective_dimension(self):
        return len(self.totals) - 1 if self.totals else float("-inf")

    def poincare_partial(self, s: int, t: int) -> int:
        """sum_{i<=s} beta_i t^i, evaluated exactly."""
        if s < 0:
            raise ValueError("negative truncation")
        return sum(self.total(i) * t**i for i in range(s + 1))

    def alternating_sum(self) -> int:
        return self.poincare_partial(max(len(self.totals) - 1, 0), -1)

    def to_json_dict(self):
        out = {"total": list(self.totals)}
        if self.graded is not None:
            out["graded"] = {f"{i},{j}": v for (i, j), v in sorted(self.graded.items())}
        return out

    def text_triangle(self) -> str:
        """Conventional Betti triangle: row j-i, column i."""
        if self.graded is None:
            return "total: " + " ".join(str(t) for t in self.totals)
        if not self.graded:
            return "total: 0"
        pd = len(self.totals) - 1
        rows = sorted({j - i for (i, j) in self.graded})
        lines = ["       " + "".join(f"{i:>6}" for i in range(pd + 1))]
        lines.append("total: " + "".join(f"{self.total(i):>6}" for i in range(pd + 1)))
        for r in range(rows[0], rows[-1] + 1):
            cells = []
            for i in range(pd + 1):
                v = self.graded.get((i, i + r), 0)
                cells.append(f"{v if v else '.':>6}")
            lines.append(f"{r:>5}: " + "".join(cells))
        return "\n".join(lines)

    def __repr__(self):
        return f"BettiTable(totals={self.totals})"


def betti_table(target) -> BettiTable:
    cache = getattr(target, "_cache", None)
    if cache is not None and "betti" in cache:
        return cache["betti"]
    table = BettiTable.from_complex(free_resolution(target))
    if isinstance(target, Ideal) and not target.is_zero():
        table.rank = 1
    if cache is not None:
        cache["betti"] = table
    return table


def projective_dimension(target):
    """Index of the last nonzero free module in the minimal resolution."""
    return betti_table(target).projective_dimension()


def is_zero_module(target) -> bool:
    if isinstance(target, Ideal):
        return target.is_zero()
    if isinstance(target, PresentedModule):
        return target.is_zero()
    if isinstance(target, Submodule):
        return target.is_zero()
    raise TypeError(f"unsupported target {target!r}")


def depth(target):
    """n - pd (Auslander-Buchsbaum); +inf for the zero module."""
    if is_zero_module(target):
        return float("inf")
    ring = target.ring
    return ring.n - projective_dimension(target)


def module_rank(target):
    """Alternating sum of the Betti numbers (generic rank; 1 for ideals)."""
    table = betti_table(target)
    return sum((-1) ** i * table.total(i) for i in range(len(table.totals)))


def dimension_of_module(module: PresentedModule):
    """Krull dimension of R/ann(M); -inf for the zero module."""
    return module.annihilator().dimension()


def is_cohen_macaulay(module: PresentedModule) -> bool:
    if module.is_zero():
        raise ValueError("Cohen-Macaulay predicate on the zero module")
    return depth(module) == dimension_of_module(module)


def quotient_is_cohen_macaulay(ideal: Ideal) -> bool:
    """R/I Cohen-Macaulay (I proper)."""
    if ideal.is_unit():
        raise ValueError("Cohen-Macaulay predicate on the zero ring")
    if ideal.is_zero():
        return True
    return depth(ideal.quotient_module()) == ideal.dimension()

def is_perfect_ideal(ideal: Ideal) -> bool:
    """pd(R/I) = height(I), i.e. R/I Cohen-Macaulay of finite projective dimension."""
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("perfection of the zero or unit ideal")
    return projective_dimension(ideal.quotient_module()) == ideal.height()


def hilbert_numerator(target):
    """Numerator of the Hilbert series over (1-t)^n, from the minimal resolution.

    Returned as a dict degree -> integer coefficient; equal modules have equal
    numerators, which is the cheap half of any isomorphism consistency check.
    """
    res = free_resolution(target)
    if not res.homogeneous:
        raise ValueError("Hilbert data requires homogeneous input")
    out = {}
    for i in range(res.length() + 1):
        for j in res.twists(i) or ():
            out[j] = out.get(j, 0) + (-1) ** i
    return {j: c for j, c in sorted(out.items()) if c != 0}


def check_exactness(target) -> bool:
    """Homology of the raw tower vanishes at every positive spot.

    At spot i this compares ker(d_i) with im(d_{i+1}) using independently
    computed kernel generators.
    """
    from .ideals import kernel_of_matrix

    raw = schreyer_complex(target)
    if not raw.is_complex():
        return False
    for i in range(len(raw.maps)):
        ker = kernel_of_matrix(raw.maps[i])
        if i + 1 < len(raw.maps):
            image = Submodule(raw.ring, raw.maps[i].cols, raw.maps[i + 1].column_vectors())
        else:
            image = Submodule(raw.ring, raw.maps[i].cols, [])
        if not image.contains_submodule(ker):
            return False
    # spot 0 for ideal targets: the first map's image is the kernel of the augmentation
    if raw.augmentation is not None and raw.maps:
        ker0 = kernel_of_matrix(raw.augmentation)
        image0 = Submodule(raw.ring, raw.augmentation.cols, raw.maps[0].column_vectors())
        if not image0.contains_submodule(ker0):
            return False
    return True
