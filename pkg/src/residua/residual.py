"""Rees algebra equations, analytic spread, G_s tests, residual intersections,
linkage, minimal reductions, and the mapping-cone presentation of I/a.

"Generic" choices are seeded splitmix64 combinations; genericity is never
assumed: every constructed object is re-verified (heights, regularity,
reduction equalities) and failures surface as explicit reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .homology import koszul_homology
from .ideals import Ideal
from .matrices import FreeModuleMatrix
from .ring import PolynomialRing
from .rng import SeedStream


# ---------------------------------------------------------------------------
# generic homogeneous combinations


def _degree_monomials(ring, deg):
    if deg == 0:
        return [ring.one()]
    out = []
    for combo in combinations_with_replacement(range(ring.n), deg):
        e = [0] * ring.n
        for i in combo:
            e[i] += 1
        out.append(ring.monomial(e))
    return out


def generic_combinations(generators, count, stream: SeedStream, degree=None):
    """count seeded combinations of the generators, homogeneous when they are.

    Equigenerated input gets scalar coefficients in [-99, 99]; mixed degrees
    get coefficient forms of the right degree with seeded scalar coefficients.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("no generators to combine")
    ring = gens[0].ring
    homogeneous = all(g.is_homogeneous() for g in gens)
    target = None
    if homogeneous:
        target = degree if degree is not None else max(g.degree() for g in gens)
    out = []
    for _ in range(count):
        acc = ring.zero()
        for g in gens:
            if homogeneous:
                gap = target - g.degree()
                if gap < 0:
                    continue
                coeff = ring.zero()
                for mon in _degree_monomials(ring, gap):
                    coeff = coeff + mon.scale(stream.coefficient())
                acc = acc + coeff * g
            else:
                acc = acc + g.scale(stream.coefficient())
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# Rees algebra and analytic spread


def _fresh_names(base_names, wanted):
    taken = set(base_names)
    out = []
    for name in wanted:
        candidate = name
        while candidate in taken:
            candidate = candidate + "_"
        taken.add(candidate)
        out.append(candidate)
    return out


@dataclass
class ReesData:
    base: Ideal
    rees_ring: PolynomialRing  # k[t_1..t_r, x_1..x_n]
    presentation: Ideal  # P, the defining ideal of the Rees algebra
    fiber_ring: PolynomialRing  # k[t_1..t_r]
    fiber_ideal: Ideal  # P with the x-block set to zero
    spread: int

    def validate(self) -> bool:
        """P vanishes under t_i -> g_i and P meets k[x] trivially."""
        base_ring = self.base.ring
        r = len(self.base.generators)
        images = list(self.base.generators) + [base_ring.gen(i) for i in range(base_ring.n)]
        for p in self.presentation.generators:
            if not p.substitute(base_ring, images).is_zero():
                return False
        t_block = list(range(r))
        in_x_only = self.presentation.eliminate(t_block)
        return in_x_only.is_zero()


def rees_equations(ideal: Ideal) -> ReesData:
    """Defining equations of the Rees algebra by eliminating u from (t_i - u g_i)."""
    cached = ideal._cache.get("rees")
    if cached is not None:
        return cached
    ring = ideal.ring
    gens = list(ideal.generators)
    r = len(gens)
    if r == 0:
        raise ValueError("Rees algebra of the zero ideal")
    t_names = _fresh_names(ring.variables, [f"t{i+1}" for i in range(r)])
    (u_name,) = _fresh_names(tuple(ring.variables) + tuple(t_names), ["u"])
    big = PolynomialRing(tuple(t_names) + ring.variables + (u_name,), ring.field)
    x_images = [big.gen(r + i) for i in range(ring.n)]
    u = big.gen(r + ring.n)
    graph_gens = [big.gen(i) - u * gens[i].substitute(big, x_images) for i in range(r)]
    no_u = Ideal(big, graph_gens).eliminate([r + ring.n])

    ktx = PolynomialRing(tuple(t_names) + ring.variables, ring.field)
    p_gens = [ktx.from_dict({e[:-1]: c for e, c in g.terms}) for g in no_u.generators]
    weights = None
    if all(g.is_homogeneous() for g in gens):
        weights = [g.degree() for g in gens] + [1] * ring.n
    p_ideal = Ideal(ktx, _minimalize(ktx, p_gens, weights))

    kt = PolynomialRing(tuple(t_names), ring.field)
    fiber_gens = []
    for g in p_ideal.generators:
        kept = {e[:r]: c for e, c in g.terms if all(x == 0 for x in e[r:])}
        f = kt.from_dict(kept)
        if not f.is_zero():
            fiber_gens.append(f)
    fiber = Ideal(kt, fiber_gens)
    spread = fiber.dimension()
    data = ReesData(ideal, ktx, p_ideal, kt, fiber, int(spread))
    ideal._cache["rees"] = data
    return data


def _minimalize(ring, gens, weights):
    """Irredundant generating subset; minimal when weighted-homogeneous."""
    gens = [g for g in gens if not g.is_zero()]
    if weights is not None and all(g.is_homogeneous(weights) for g in gens):
        gens = sorted(gens, key=lambda g: (g.weighted_degree(weights), ring.order.key(g.lead_exponent())))
    kept = []
    for g in gens:
        if not kept or not Ideal(ring, kept).contains(g):
            kept.append(g)
    return kept


def analytic_spread(ideal: Ideal) -> int:
    """Krull dimension of the special fiber ring of the Rees algebra."""
    return rees_equations(ideal).spread


# ---------------------------------------------------------------------------
# G_s condition through Fitting-ideal heights


def g_s_check(ideal: Ideal, s: int, convention: str = "paper") -> dict:
    """G_{s+1} test: ht Fitt_h(I) >= h+1 for the relevant h range.

    convention="paper" checks h = 1..s (primes of height <= s, the quoted
    inequality); "strict" checks h = 1..s-1.  h = 0 amounts to I != 0.
    """
    if convention not in ("paper", "strict"):
        raise ValueError("convention must be 'paper' or 'strict'")
    if ideal.is_zero():
        return {"holds": False, "failed_h": 0, "convention": convention, "heights": []}
    mu = len(ideal.generators)
    syz = ideal.syzygies().matrix()  # mu x q presentation of I
    hmax = s if convention == "paper" else s - 1
    hmax = min(hmax, ideal.ring.n)
    heights = []
    holds = True
    failed = None
    from .ideals import minors_ideal

    for h in range(1, hmax + 1):
        size = mu - h
        fitt = minors_ideal(syz, size) if size > 0 else Ideal(ideal.ring, [ideal.ring.one()])
        if fitt.is_zero():
            ht = 0
        else:
            ht = fitt.height_or_inf()
        heights.append((h, ht))
        if ht < h + 1 and holds:
            holds = False
            failed = h
    return {"holds": holds, "failed_h": failed, "convention": convention, "heights": heights}


def g_infinity_check(ideal: Ideal, convention: str = "paper") -> dict:
    return g_s_check(ideal, ideal.ring.n, convention)


# ---------------------------------------------------------------------------
# mapping cone presentation of I/a


def mapping_cone_psi(ideal: Ideal, a_elements) -> FreeModuleMatrix:
    """Presentation of I/a: first-syzygy columns of I followed by lifts of a.

    The cokernel of the returned matrix is I/a on the generators of I, so its
    annihilator is a : I (verified separately by callers).
    """
    from .engine import graph_basis
    from .ideals import poly_to_vec

    gens = list(ideal.generators)
    if not gens:
        raise ValueError("mapping cone of the zero ideal")
    ring = ideal.ring
    mu = len(gens)
    graph = graph_basis([poly_to_vec(g) for g in gens], 1, ring)
    lift_cols = []
    for a in a_elements:
        a = ring(a)
        remainder, lift = graph.reduce_with_certificate(poly_to_vec(a))
        if remainder:
            raise ValueError(f"{a} is not in the ideal")
        lift_cols.append(lift)
    syz = ideal.syzygies()
    if ideal.is_homogeneous():
        syz_cols = syz.minimal_generators()
    else:
        syz_cols = syz.gens
    columns = list(syz_cols) + list(lift_cols)
    hom = ideal.is_homogeneous() and all(ring(a).is_homogeneous() for a in a_elements)
    target = [g.degree() for g in gens] if hom else None
    source = None
    if hom:
        sub = syz if syz.ambient_twists is not None else None
        source = [syz.vector_degree(v) for v in syz_cols] + [ring(a).degree() for a in a_elements]
        if any(d is None for d in source):
            source = None
            target = None
    return FreeModuleMatrix.from_columns(ring, columns, mu, source_twists=source, target_twists=target)


# ---------------------------------------------------------------------------
# residual intersections


@dataclass
class ResidualData:
    base: Ideal
    s: int
    seed: int
    found: bool
    attempts: int
    a_generators: list = field(default_factory=list)
    residual: Ideal | None = None
    valid: bool = False
    geometric: bool = False
    unit_residual: bool = False
    psi: FreeModuleMatrix | None = None

    def describe(self) -> dict:
        out = {
            "s": self.s,
            "seed": self.seed,
            "found": self.found,
            "attempts": self.attempts,
            "valid": self.valid,
            "geometric": self.geometric,
            "unit_residual": self.unit_residual,
        }
        if self.found:
            out["a"] = [str(a) for a in self.a_generators]
            out["residual_gb"] = [str(g) for g in self.residual.groebner_basis()]
        return out


def residual_intersection(
    ideal: Ideal, s: int, seed: int, max_attempts: int = 5, require_geometric: bool = False
) -> ResidualData:
    """Seeded construction of an s-residual intersection J = a : I.

    a is generated by s combinations of the generators; validity
    (height J >= s) and geometricity (height(I+J) >= s+1) are computed, never
    assumed.  Retries derive fresh streams from (seed, attempt).
    """
    if ideal.is_zero():
        raise ValueError("residual intersection of the zero ideal")
    height = ideal.height()
    n = ideal.ring.n
    if not height <= s <= n:
        raise ValueError(f"need height(I) = {height} <= s <= {n}")
    for attempt in range(max_attempts):
        stream = SeedStream(seed, attempt)
        combos = generic_combinations(ideal.generators, s, stream)
        if any(c.is_zero() for c in combos):
            continue
        a_ideal = Ideal(ideal.ring, combos)
        residual = a_ideal.quotient(ideal)
        valid = residual.height_or_inf() >= s
        geometric = valid and (ideal + residual).height_or_inf() >= s + 1
        if valid and (geometric or not require_geometric):
            psi = mapping_cone_psi(ideal, combos)
            return ResidualData(
                base=ideal,
                s=s,
                seed=seed,
                found=True,
                attempts=attempt + 1,
                a_generators=combos,
                residual=residual,
                valid=True,
                geometric=geometric,
                unit_residual=residual.is_unit(),
                psi=psi,
            )
    return ResidualData(base=ideal, s=s, seed=seed, found=False, attempts=max_attempts)


# ---------------------------------------------------------------------------
# linkage


def link(ideal: Ideal, alpha) -> Ideal:
    """(alpha) : I for a maximal regular sequence alpha inside I."""
    alpha = [ideal.ring(a) for a in alpha]
    if len(alpha) != ideal.height():
        raise ValueError("alpha must have length height(I)")
    for a in alpha:
        if not ideal.contains(a):
            raise ValueError("alpha is not contained in the ideal")
    if not is_regular_sequence(alpha):
        raise ValueError("alpha is not a regular sequence")
    return Ideal(ideal.ring, alpha).quotient(ideal)


def is_regular_sequence(elements) -> bool:
    """Koszul depth-sensitivity: H_1 of the sequence vanishes."""
    elements = list(elements)
    if not elements or any(e.is_zero() for e in elements):
        return False
    if len(elements) == 1:
        return True  # a nonzero element of a domain is a nonzerodivisor
    hom = koszul_homology(elements)
    return hom[1].is_zero()


# ---------------------------------------------------------------------------
# minimal reductions


@dataclass
class ReductionData:
    base: Ideal
    seed: int
    found: bool
    attempts: int
    reduction: Ideal | None = None
    r_stable: int | None = None

    def describe(self) -> dict:
        out = {"seed": self.seed, "found": self.found, "attempts": self.attempts}
        if self.found:
            out["a"] = [str(g) for g in self.reduction.generators]
            out["r"] = self.r_stable
        return out


def minimal_reduction(ideal: Ideal, seed: int, r_bound: int = 10, max_attempts: int = 5) -> ReductionData:
    """Seeded reduction a with I^{r+1} = a I^r, r minimal up to r_bound."""
    if ideal.is_zero():
        raise ValueError("reduction of the zero ideal")
    ell = analytic_spread(ideal)
    mu = len(ideal.generators)
    if ell == mu:
        return ReductionData(ideal, seed, True, 0, Ideal(ideal.ring, ideal.generators), 0)
    for attempt in range(max_attempts):
        stream = SeedStream(seed, attempt)
        combos = generic_combinations(ideal.generators, ell, stream)
        if any(c.is_zero() for c in combos):
            continue
        a_ideal = Ideal(ideal.ring, combos)
        power = Ideal(ideal.ring, [ideal.ring.one()])  # I^0
        for r in range(r_bound + 1):
            target = a_ideal * power  # a I^r
            next_power = power * ideal  # I^{r+1}
            if target.contains_ideal(next_power):
                return ReductionData(ideal, seed, True, attempt + 1, a_ideal, r)
            power = next_power
    return ReductionData(ideal, seed, False, max_attempts)
