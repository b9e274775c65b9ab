"""Statement verifiers over the ideal corpus, with SKIP/FAIL discipline.

A report can only FAIL when every hypothesis of the quoted statement was
verified true on the instance; an inapplicable instance yields SKIP.  All
numerical checks are exact integer comparisons; generic choices are seeded
and re-verified.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .corpus import corpus
from .homology import (
    bass_numbers,
    bass_numbers_hom_oracle,
    canonical_module,
    equidimensional_hull,
    koszul_homology,
    present_subquotient,
    sliding_depth_check,
)
from .ideals import Ideal, minors_ideal
from .resolutions import (
    betti_table,
    depth,
    is_perfect_ideal,
    projective_dimension,
    quotient_is_cohen_macaulay,
)
from .residual import (
    analytic_spread,
    g_s_check,
    generic_combinations,
    is_regular_sequence,
    rees_equations,
    residual_intersection,
)
from .ring import QQ
from .rng import SeedStream


@dataclass
class VerificationReport:
    statement: str
    ideal_name: str
    hypotheses: list = field(default_factory=list)  # [(name, bool)]
    checks: list = field(default_factory=list)  # [(name, bool)], evaluated clauses
    witness: dict = field(default_factory=dict)
    seed: int | None = None
    elapsed: float = 0.0

    def applicable(self) -> bool:
        return all(ok for _n, ok in self.hypotheses)

    @property
    def conclusion(self):
        if not self.applicable():
            return None
        return all(ok for _n, ok in self.checks)

    @property
    def status(self) -> str:
        if not self.applicable():
            return "SKIP"
        return "PASS" if self.conclusion else "FAIL"

    def to_json_dict(self) -> dict:
        return {
            "statement": self.statement,
            "ideal": self.ideal_name,
            "status": self.status,
            "hypotheses": [[n, ok] for n, ok in self.hypotheses],
            "checks": [[n, ok] for n, ok in self.checks],
            "conclusion": self.conclusion,
            "witness": _json_safe(self.witness),
            "seed": self.seed,
        }

    def text_line(self) -> str:
        mark = {"PASS": "PASS", "FAIL": "FAIL", "SKIP": "skip"}[self.status]
        detail = ""
        if self.status == "SKIP":
            failed = [n for n, ok in self.hypotheses if not ok]
            detail = f"  [hypothesis: {', '.join(failed)}]"
        elif self.status == "FAIL":
            failed = [n for n, ok in self.checks if not ok]
            detail = f"  [failed: {', '.join(failed)}]"
        return f"{mark:4}  {self.statement:16} {self.ideal_name:20} ({self.elapsed:.2f}s){detail}"


def _json_safe(value):
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        if value == float("inf"):
            return "inf"
        if value == float("-inf"):
            return "-inf"
        return value
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


def _beta_diff(ideal: Ideal) -> int:
    table = betti_table(ideal)
    return table.total(1) - table.total(0)


# ---------------------------------------------------------------------------
# Proposition 1 and the rank lemma


def verify_prop1(ideal: Ideal, name: str, n_max: int | None = None) -> VerificationReport:
    """Alternating partial-sum bounds on the Betti numbers of an ideal."""
    start = time.time()
    rep = VerificationReport("prop1", name)
    rep.hypotheses = [
        ("nonzero", not ideal.is_zero()),
        ("homogeneous", ideal.is_homogeneous()),
    ]
    if rep.applicable():
        table = betti_table(ideal)
        pd = max(table.projective_dimension(), 0)
        top = pd + 2 if n_max is None else min(n_max, pd + 2)
        odd_sums = {}
        even_sums = {}
        for i in range(top + 1):
            s = -table.poincare_partial(i, -1)  # sum (-1)^{j+1} beta_j
            if i % 2 == 1:
                odd_sums[i] = s
            else:
                even_sums[i] = s
        positive_grade = ideal.height_or_inf() >= 1
        rep.hypotheses.append(("positive-grade-for-c", positive_grade))
        rep.checks = [
            ("a-odd-sums-ge-minus-1", all(v >= -1 for v in odd_sums.values())),
            ("c-even-sums-le-minus-1", all(v <= -1 for v in even_sums.values())),
        ]
        rep.witness = {"betti": table.totals, "odd_sums": odd_sums, "even_sums": even_sums}
    rep.elapsed = time.time() - start
    return rep


def verify_lemma_rank(ideal: Ideal, name: str) -> VerificationReport:
    """beta_i - beta_{i+1} bounded by the syzygy rank, equality iff beta_{i+2} = 0."""
    start = time.time()
    rep = VerificationReport("lemma-rank", name)
    rep.hypotheses = [
        ("nonzero", not ideal.is_zero()),
        ("homogeneous", ideal.is_homogeneous()),
    ]
    if rep.applicable():
        table = betti_table(ideal)
        rank = sum((-1) ** i * table.total(i) for i in range(len(table.totals)))
        pd = max(table.projective_dimension(), 0)
        ineq_ok = True
        equality_ok = True
        rows = []
        for i in range(pd + 2):
            lhs = table.total(i) - table.total(i + 1)
            rhs = sum((-1) ** (j - 1) * table.total(i - j) for j in range(1, i + 1)) + (-1) ** i * rank
            equal = lhs == rhs
            vanish = table.total(i + 2) == 0
            rows.append({"i": i, "lhs": lhs, "rhs": rhs})
            ineq_ok = ineq_ok and lhs <= rhs
            equality_ok = equality_ok and (equal == vanish)
        rep.checks = [
            ("difference-bounded", ineq_ok),
            ("equality-iff-next-betti-vanishes", equality_ok),
        ]
        rep.witness = {"rank": rank, "rows": rows}
    rep.elapsed = time.time() - start
    return rep


# ---------------------------------------------------------------------------
# Theorem 2


def verify_thm2a(ideal: Ideal, name: str, s: int, seed: int) -> VerificationReport:
    """s-residual intersections of ideals with beta1 - beta0 = -1 are perfect."""
    start = time.time()
    rep = VerificationReport(f"thm2a-s{s}", name, seed=seed)
    nonzero = not ideal.is_zero()
    proper = nonzero and ideal.is_proper()
    hom = nonzero and ideal.is_homogeneous()
    rep.hypotheses = [("nonzero-proper", proper), ("homogeneous", hom)]
    if not rep.applicable():
        rep.elapsed = time.time() - start
        return rep
    table = betti_table(ideal)
    beta0 = table.total(0)
    rep.hypotheses += [
        ("positive-grade", ideal.height() >= 1),
        ("beta-diff-is-minus-1", _beta_diff(ideal) == -1),
        ("s-in-range", ideal.height() <= s <= ideal.ring.n),
        ("generators-minimal", beta0 == len(ideal.generators)),
    ]
    if not rep.applicable():
        rep.elapsed = time.time() - start
        return rep
    data = residual_intersection(ideal, s, seed)
    rep.hypotheses.append(("residual-found", data.found))
    rep.hypotheses.append(("proper-residual", data.found and not data.unit_residual))
    rep.witness["attempts"] = data.attempts
    if not rep.applicable():
        rep.elapsed = time.time() - start
        return rep
    residual = data.residual
    cm = quotient_is_cohen_macaulay(residual)
    pd_quot = projective_dimension(residual.quotient_module())
    pd_ideal = projective_dimension(residual)
    fitting = minors_ideal(data.psi, beta0)
    rep.checks = [
        ("height-at-least-s", residual.height_or_inf() >= s),
        ("quotient-cohen-macaulay", cm),
        ("pd-pair", (pd_ideal, pd_quot) == (s - 1, s)),
        ("maximal-minors-of-psi-equal-residual", fitting == residual),
    ]
    rep.witness.update(
        {
            "a": [str(g) for g in data.a_generators],
            "residual_gb": [str(g) for g in residual.groebner_basis()],
            "height": residual.height_or_inf(),
            "pd_pair": [pd_ideal, pd_quot],
            "psi_shape": [data.psi.rows, data.psi.cols],
        }
    )
    rep.elapsed = time.time() - start
    return rep


def verify_thm2b(ideal: Ideal, name: str) -> VerificationReport:
    """The unmixed part of an ideal with beta1 - beta0 = -1 is perfect."""
    start = time.time()
    rep = VerificationReport("thm2b", name)
    nonzero = not ideal.is_zero()
    proper = nonzero and ideal.is_proper()
    hom = nonzero and ideal.is_homogeneous()
    rep.hypotheses = [
        ("nonzero-proper", proper),
        ("homogeneous", hom),
        ("gorenstein-base", True),  # the polynomial ring
    ]
    if rep.applicable():
        rep.hypotheses.append(("beta-diff-is-minus-1", _beta_diff(ideal) == -1))
    if rep.applicable():
        hull = equidimensional_hull(ideal)
        perfect = is_perfect_ideal(hull)
        rep.checks = [("unmixed-part-perfect", perfect)]
        rep.witness = {
            "hull_gb": [str(g) for g in hull.groebner_basis()],
            "hull_height": hull.height(),
            "hull_pd_quotient": projective_dimension(hull.quotient_module()),
        }
    rep.elapsed = time.time() - start
    return rep


def verify_thm2c(ideal: Ideal, name: str, seed: int) -> VerificationReport:
    """Under G_{ell+1} and beta1 = beta0, a CM geometric ell-residual exists."""
    start = time.time()
    rep = VerificationReport("thm2c", name, seed=seed)
    nonzero = not ideal.is_zero()
    proper = nonzero and ideal.is_proper()
    hom = nonzero and ideal.is_homogeneous()
    rep.hypotheses = [("nonzero-proper", proper), ("homogeneous", hom)]
    if not rep.applicable():
        rep.elapsed = time.time() - start
        return rep
    rep.hypotheses += [
        ("positive-grade", ideal.height_or_inf() >= 1),
        ("beta-diff-is-0", _beta_diff(ideal) == 0),
    ]
    if not rep.applicable():
        rep.elapsed = time.time() - start
        return rep
    ell = analytic_spread(ideal)
    gcheck = g_s_check(ideal, ell)
    rep.hypotheses.append((f"G_{ell + 1}", gcheck["holds"]))
    rep.witness["spread"] = ell
    rep.witness["g_check"] = gcheck
    if not rep.applicable():
        rep.elapsed = time.time() - start
        return rep
    data = residual_intersection(ideal, ell, seed, require_geometric=True)
    rep.hypotheses.append(("geometric-witness-found", data.found and data.geometric))
    rep.witness["attempts"] = data.attempts
    if not rep.applicable():
        rep.elapsed = time.time() - start
        return rep
    residual = data.residual
    unit = data.unit_residual
    rep.witness["unit_residual"] = unit
    if unit:
        # degenerate witness J = R: the zero ring is trivially CM; heights are +inf
        rep.checks = [
            ("valid-ell-residual", True),
            ("geometric", True),
            ("quotient-cohen-macaulay", True),
        ]
        rep.witness["note"] = "witness is the unit ideal (a = I); conventions: ht R = inf, zero ring CM"
    else:
        cm = quotient_is_cohen_macaulay(residual)
        pd_quot = projective_dimension(residual.quotient_module())
        pd_ideal = projective_dimension(residual)
        rep.checks = [
            ("valid-ell-residual", residual.height_or_inf() >= ell),
            ("geometric", (ideal + residual).height_or_inf() >= ell + 1),
            ("quotient-cohen-macaulay", cm),
            ("pd-pair-consistent", pd_ideal == pd_quot - 1),
        ]
        rep.witness.update(
            {
                "residual_gb": [str(g) for g in residual.groebner_basis()],
                "height": residual.height_or_inf(),
                "pd_pair": [pd_ideal, pd_quot],
            }
        )
    rep.elapsed = time.time() - start
    return rep


# ---------------------------------------------------------------------------
# classification propositions


def verify_prop_c1(ideal: Ideal, name: str) -> VerificationReport:
    """beta1 - beta0 = -1, beta1 != 0: pd 1 and perfect-grade-2 xor grade-1 non-unmixed."""
    start = time.time()
    rep = VerificationReport("prop-c1", name)
    nonzero = not ideal.is_zero()
    proper = nonzero and ideal.is_proper()
    hom = nonzero and ideal.is_homogeneous()
    rep.hypotheses = [("nonzero-proper", proper), ("homogeneous", hom)]
    if rep.applicable():
        table = betti_table(ideal)
        rep.hypotheses += [
            ("beta-diff-is-minus-1", table.total(1) - table.total(0) == -1),
            ("beta1-nonzero", table.total(1) != 0),
        ]
    if rep.applicable():
        pd_ok = projective_dimension(ideal) == 1
        grade = ideal.height()
        branch_perfect = grade == 2 and is_perfect_ideal(ideal)
        hull = equidimensional_hull(ideal)
        branch_grade1 = grade == 1 and not ideal.equals(hull)
        rep.checks = [
            ("pd-is-1", pd_ok),
            ("exactly-one-branch", branch_perfect != branch_grade1),
        ]
        rep.witness = {
            "grade": grade,
            "branch": "perfect-grade-2" if branch_perfect else ("grade-1-non-unmixed" if branch_grade1 else "none"),
            "hull_gb": [str(g) for g in hull.groebner_basis()],
        }
    rep.elapsed = time.time() - start
    return rep


def verify_prop_canonical(ideal: Ideal, name: str) -> VerificationReport:
    """Grade-1 branch: omega_{R/I} is cyclic with annihilator the unmixed part."""
    start = time.time()
    rep = VerificationReport("prop-canonical", name)
    nonzero = not ideal.is_zero()
    proper = nonzero and ideal.is_proper()
    hom = nonzero and ideal.is_homogeneous()
    rep.hypotheses = [("nonzero-proper", proper), ("homogeneous", hom)]
    if rep.applicable():
        rep.hypotheses += [
            ("beta-diff-is-minus-1", _beta_diff(ideal) == -1),
            ("grade-is-1", ideal.height() == 1),
        ]
    if rep.applicable():
        omega = canonical_module(ideal)
        b0 = betti_table(omega).total(0)
        ann = omega.annihilator()
        hull = equidimensional_hull(ideal)
        rep.checks = [
            ("omega-cyclic", b0 == 1),
            ("annihilator-is-unmixed-part", ann == hull),
        ]
        rep.witness = {
            "omega_betti": betti_table(omega).totals,
            "ann_gb": [str(g) for g in ann.groebner_basis()],
            "hull_gb": [str(g) for g in hull.groebner_basis()],
        }
    rep.elapsed = time.time() - start
    return rep


# ---------------------------------------------------------------------------
# Theorem 3 and the sign corollary


_MU_TOP_CACHE = {}


def _mu_top_of_ring(ring) -> int:
    cached = _MU_TOP_CACHE.get(ring)
    if cached is None:
        free = Ideal(ring, []).quotient_module()
        cached = bass_numbers(free).mu(ring.n)
        _MU_TOP_CACHE[ring] = cached
    return cached


def verify_thm3_and_cor(ideal: Ideal, name: str, seed: int, bass_oracle: bool = True) -> VerificationReport:
    """Betti numbers of the canonical module against the linked ideal and Bass numbers."""
    start = time.time()
    rep = VerificationReport("thm3", name, seed=seed)
    nonzero = not ideal.is_zero()
    proper = nonzero and ideal.is_proper()
    hom = nonzero and ideal.is_homogeneous()
    rep.hypotheses = [("nonzero-proper", proper), ("homogeneous", hom)]
    if not rep.applicable():
        rep.elapsed = time.time() - start
        return rep
    g = ideal.height()
    n = ideal.ring.n
    alpha = None
    for attempt in range(5):
        stream = SeedStream(seed, 1000 + attempt)
        candidate = generic_combinations(ideal.generators, g, stream)
        if any(c.is_zero() for c in candidate):
            continue
        if is_regular_sequence(candidate):
            alpha = candidate
            break
    rep.hypotheses.append(("regular-sequence-found", alpha is not None))
    if not rep.applicable():
        rep.elapsed = time.time() - start
        return rep
    linked = Ideal(ideal.ring, alpha).quotient(ideal)  # I = alpha : J
    omega = canonical_module(ideal)
    bw = betti_table(omega)
    bri = betti_table(linked.quotient_module())
    checks = []
    a_ok = all(bw.total(i) == bri.total(i + 1) for i in range(g + 1, n + 2))
    checks.append(("a-omega-betti-shifted", a_ok))
    lhs_b = bw.poincare_partial(g, -1)
    rhs_b = (-1) ** g * bri.total(g + 1) - bri.poincare_partial(g, -1)
    checks.append(("b-partial-poincare-identity", lhs_b == rhs_b))
    cm = quotient_is_cohen_macaulay(ideal)
    rep.witness.update(
        {
            "grade": g,
            "alpha": [str(a) for a in alpha],
            "omega_betti": bw.totals,
            "linked_quotient_betti": bri.totals,
            "poincare_partial_omega": lhs_b,
            "cm": cm,
        }
    )
    if cm:
        bass = bass_numbers(ideal.quotient_module())
        c_ok = all(bw.total(i) == bass.mu(n - g + i) for i in range(0, g + 2))
        checks.append(("c-omega-betti-equal-bass", c_ok))
        mu_top = _mu_top_of_ring(ideal.ring)
        d_ok = bw.total(0) == bass.mu(n - g) * mu_top
        checks.append(("d-type-product-formula", d_ok))
        rep.witness["bass"] = bass.to_json_dict()
        rep.witness["mu_top_of_R"] = mu_top
        if bass_oracle:
            oracle = bass_numbers_hom_oracle(ideal.quotient_module())
            checks.append(("bass-pipelines-agree", oracle.values == bass.values))
    else:
        rep.witness["note"] = "R/J not CM: parts (c),(d) not applicable"
    if g >= 1:
        if g % 2 == 1:
            checks.append(("cor-odd-grade-nonpositive", lhs_b <= 0))
            if g == 1:
                checks.append(("cor-grade1-beta1-ge-beta0", bw.total(1) >= bw.total(0)))
        else:
            checks.append(("cor-even-grade-nonnegative", lhs_b >= 0))
    rep.checks = checks
    rep.elapsed = time.time() - start
    return rep


# ---------------------------------------------------------------------------
# the worked example, reproduced end to end


def reproduce_example(coefficient_field=QQ, seed: int = 0) -> VerificationReport:
    """All quoted values of the worked example, asserted in order."""
    start = time.time()
    rep = VerificationReport("example", "paper-example", seed=seed)
    from .ring import PolynomialRing

    ring = PolynomialRing(("x", "y", "z"), coefficient_field)
    x, y, z = ring.gens()
    ideal = Ideal(ring, [x**2, x * y, z**2])
    rep.hypotheses = [("constructed", True)]
    checks = []
    witness = {}

    table = betti_table(ideal)
    resolution_ok = table.totals == [3, 3, 1] and table.graded == {
        (0, 2): 3,
        (1, 3): 1,
        (1, 4): 2,
        (2, 5): 1,
    }
    checks.append(("resolution-shape", resolution_ok))
    witness["betti"] = table.to_json_dict()

    checks.append(("beta-diff-0", table.total(1) - table.total(0) == 0))
    checks.append(("height-2", ideal.height() == 2))

    from .residual import g_infinity_check

    checks.append(("G-infinity", g_infinity_check(ideal)["holds"]))

    colon = ideal.quotient_by_element(x * z)
    colon_ok = colon == Ideal(ring, [x, y, z])
    checks.append(("colon-xz-is-maximal-ideal", colon_ok))
    witness["colon_gb"] = [str(g) for g in colon.groebner_basis()]

    # Koszul H1 against the quoted subquotient (x, z^2)/I: non-cyclic
    # isomorphism claims are tested for consistency (annihilator, Betti
    # table, Hilbert numerator), a complete criterion for cyclic modules
    from .resolutions import hilbert_numerator

    hom = koszul_homology(list(ideal.generators))
    h1 = hom[1]
    quoted = _subquotient_of_ideals(Ideal(ring, [x, z**2]), ideal)
    h1_ann = h1.annihilator()
    quoted_ann = quoted.annihilator()
    h1_pres = present_subquotient(h1)
    quoted_pres = present_subquotient(quoted)
    h1_betti = betti_table(h1_pres).totals
    quoted_betti = betti_table(quoted_pres).totals
    h1_consistent = (
        h1_ann == quoted_ann
        and h1_betti == quoted_betti
        and hilbert_numerator(h1_pres) == hilbert_numerator(quoted_pres)
    )
    checks.append(("h1-consistent-with-quoted-subquotient", h1_consistent))
    witness["h1"] = {
        "ann_gb": [str(g) for g in h1_ann.groebner_basis()],
        "betti": h1_betti,
        "quoted_ann_gb": [str(g) for g in quoted_ann.groebner_basis()],
        "quoted_betti": quoted_betti,
    }

    sd = sliding_depth_check(ideal)
    h1_depth = depth(present_subquotient(h1))
    sd_fails_quoted = (h1_depth == 0) and (not sd["holds"]) and sd["witness"] == (1, 0, 1)
    checks.append(("sliding-depth-fails-at-1-with-depth-0", sd_fails_quoted))
    witness["sliding_depth"] = {"holds": sd["holds"], "h1_depth": h1_depth, "rows": sd["rows"]}

    # Rees equations, in the quoted generator order (x^2, z^2, xy)
    rees_input = Ideal(ring, [x**2, z**2, x * y])
    rees = rees_equations(rees_input)
    t_ring = rees.rees_ring
    quoted_p = Ideal(
        t_ring,
        [
            t_ring.parse("-t3*x + t1*y"),
            t_ring.parse("-t2*x^2 + t1*z^2"),
            t_ring.parse("t2*x*y - t3*z^2"),
        ],
    )
    checks.append(("rees-ideal-matches", rees.presentation == quoted_p))
    witness["rees_gens"] = [str(g) for g in rees.presentation.generators]

    checks.append(("analytic-spread-3", rees.spread == 3))

    found_cm = False
    for s_try in range(5):
        data = residual_intersection(ideal, 3, seed + s_try, require_geometric=True)
        if data.found and data.geometric:
            if data.unit_residual:
                found_cm = True  # zero ring, trivially CM (degenerate witness)
            else:
                found_cm = quotient_is_cohen_macaulay(data.residual)
            witness["residual"] = data.describe()
            break
    checks.append(("geometric-3-residual-with-cm-quotient", found_cm))

    rep.checks = checks
    rep.witness = witness
    rep.elapsed = time.time() - start
    return rep


def _subquotient_of_ideals(numerator: Ideal, denominator: Ideal):
    """(N + D)/D as a subquotient of R^1 (denominator need not be inside N)."""
    from .homology import SubquotientModule
    from .ideals import poly_to_vec

    ring = numerator.ring
    num = [poly_to_vec(g) for g in numerator.generators] + [poly_to_vec(g) for g in denominator.generators]
    den = [poly_to_vec(g) for g in denominator.generators]
    return SubquotientModule(ring, 1, num, den, ambient_twists=(0,))


# ---------------------------------------------------------------------------
# suite driver


STATEMENTS = (
    "prop1",
    "lemma-rank",
    "thm2a",
    "thm2b",
    "thm2c",
    "prop-c1",
    "prop-canonical",
    "thm3",
)


def run_entry(entry, statement: str, seed: int):
    ideal = entry.ideal()
    name = entry.name
    if statement == "prop1":
        return [verify_prop1(ideal, name)]
    if statement == "lemma-rank":
        return [verify_lemma_rank(ideal, name)]
    if statement == "thm2a":
        if ideal.is_zero() or ideal.is_unit():
            return [verify_thm2a(ideal, name, 1, seed)]
        h = ideal.height()
        out = []
        for s in (h, h + 1):
            if s <= ideal.ring.n:
                out.append(verify_thm2a(ideal, name, s, seed))
        return out
    if statement == "thm2b":
        return [verify_thm2b(ideal, name)]
    if statement == "thm2c":
        return [verify_thm2c(ideal, name, seed)]
    if statement == "prop-c1":
        return [verify_prop_c1(ideal, name)]
    if statement == "prop-canonical":
        return [verify_prop_canonical(ideal, name)]
    if statement == "thm3":
        return [verify_thm3_and_cor(ideal, name, seed)]
    raise ValueError(f"unknown statement {statement!r}")


def run_all(seed: int = 0, statements=STATEMENTS, entries=None):
    """All reports, sorted by (ideal name, statement) for order stability."""
    entries = corpus() if entries is None else entries
    reports = []
    for entry in sorted(entries, key=lambda e: e.name):
        for statement in statements:
            reports.extend(run_entry(entry, statement, seed))
    reports.sort(key=lambda r: (r.ideal_name, r.statement))
    return reports


def reports_json(reports, seed: int) -> dict:
    return {
        "schema": 1,
        "seed": seed,
        "reports": [r.to_json_dict() for r in reports],
    }


def exit_code(reports) -> int:
    return 1 if any(r.status == "FAIL" for r in reports) else 0
