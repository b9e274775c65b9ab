"""The optimised Buchberger (coprime-lead + chain criteria) against a
criteria-free reference: reduced bases are unique, so outputs must be equal.
Also pins verifier behaviour on degenerate inputs."""

import heapq

from residua import Ideal, PolynomialRing
from residua.engine import (
    TOPOrder,
    _leads_by_pos,
    buchberger,
    interreduce,
    reduce_vec,
    vec_lead,
    vec_monic,
    _iadd_scaled,
)
from residua.ring import exp_div, exp_lcm
from residua.rng import SeedStream

from test_crosschecks import random_homogeneous


def buchberger_reference(gens, order, field):
    """Plain Buchberger: every pair processed, no criteria."""
    keyf = order.key
    basis = [vec_monic(dict(g), field, keyf) for g in gens if g]
    leads = [vec_lead(v, keyf) for v in basis]
    queue = []
    counter = 0
    for j in range(len(basis)):
        for i in range(j):
            if leads[i][0] == leads[j][0]:
                heapq.heappush(queue, (counter, i, j))
                counter += 1
    while queue:
        _n, i, j = heapq.heappop(queue)
        pi, ei = leads[i]
        _pj, ej = leads[j]
        lcm = exp_lcm(ei, ej)
        s = {}
        _iadd_scaled(s, basis[i], exp_div(lcm, ei), field.one, field)
        _iadd_scaled(s, basis[j], exp_div(lcm, ej), field.neg(field.one), field)
        nf = reduce_vec(s, basis, _leads_by_pos(leads), keyf, field)
        if nf:
            basis.append(vec_monic(nf, field, keyf))
            leads.append(vec_lead(basis[-1], keyf))
            j2 = len(basis) - 1
            for i2 in range(j2):
                if leads[i2][0] == leads[j2][0]:
                    heapq.heappush(queue, (counter, i2, j2))
                    counter += 1
    return interreduce(basis, order, field)


def _random_ideal_gens(ring, stream, count):
    gens = []
    for _ in range(count):
        f = random_homogeneous(ring, stream, stream.randint(1, 3), terms=3)
        if not f.is_zero():
            gens.append({(0, e): c for e, c in f.terms})
    return gens


def _random_module_gens(ring, stream, rank, count):
    gens = []
    for _ in range(count):
        vec = {}
        for pos in range(rank):
            f = random_homogeneous(ring, stream, stream.randint(1, 2), terms=2)
            for e, c in f.terms:
                vec[(pos, e)] = c
        if vec:
            gens.append(vec)
    return gens


def test_criteria_agree_with_reference_for_ideals():
    ring = PolynomialRing(("x", "y", "z"))
    order = TOPOrder(ring.order)
    stream = SeedStream(139)
    for _ in range(12):
        gens = _random_ideal_gens(ring, stream, stream.randint(2, 4))
        if not gens:
            continue
        fast = buchberger(gens, order, ring.field)
        slow = buchberger_reference(gens, order, ring.field)
        assert fast == slow


def test_criteria_agree_with_reference_for_modules():
    ring = PolynomialRing(("x", "y"))
    order = TOPOrder(ring.order)
    stream = SeedStream(149)
    for _ in range(10):
        gens = _random_module_gens(ring, stream, 2, stream.randint(2, 4))
        if not gens:
            continue
        fast = buchberger(gens, order, ring.field)
        slow = buchberger_reference(gens, order, ring.field)
        assert fast == slow


def test_verifiers_skip_on_degenerate_inputs():
    from residua import (
        verify_lemma_rank,
        verify_prop1,
        verify_prop_c1,
        verify_prop_canonical,
        verify_thm2a,
        verify_thm2b,
        verify_thm2c,
        verify_thm3_and_cor,
    )

    ring = PolynomialRing(("x", "y"))
    unit = Ideal(ring, [ring.one()])
    zero = Ideal(ring, [])
    inhom = Ideal(ring, [ring.gen(0) + ring.one()])
    for ideal, label in ((unit, "unit"), (zero, "zero"), (inhom, "inhomogeneous")):
        for fn in (verify_prop1, verify_lemma_rank, verify_thm2b, verify_prop_c1, verify_prop_canonical):
            assert fn(ideal, label).status in ("SKIP", "PASS")
        assert verify_thm2a(ideal, label, 1, 0).status == "SKIP"
        assert verify_thm2c(ideal, label, 0).status == "SKIP"
        assert verify_thm3_and_cor(ideal, label, 0).status == "SKIP"
