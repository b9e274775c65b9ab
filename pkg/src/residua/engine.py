"""Buchberger kernel over free modules.

Elements of R^m are dicts mapping a module term (position, exponent tuple) to
a nonzero coefficient.  All routines work relative to a module order object
exposing ``key((pos, exps))``; rank-1 dicts double as polynomials.

The kernel provides: full normal forms (with optional quotient tracking),
reduced Groebner bases with Buchberger's coprime-lead (rank 1 only) and chain
criteria, Schreyer syzygies of a Groebner basis, and kernels of free-module
maps via the graph-module construction.
"""

from __future__ import annotations

import heapq

from .ring import exp_div, exp_lcm, exp_mul

# ---------------------------------------------------------------------------
# module orders


class TOPOrder:
    """Term-over-position; ties broken toward the lower position."""

    def __init__(self, ring_order):
        self.ring_order = ring_order

    def key(self, term):
        pos, exps = term
        return (self.ring_order.key(exps), -pos)

    def __eq__(self, other):
        return isinstance(other, TOPOrder) and other.ring_order == self.ring_order

    def __hash__(self):
        return hash(("TOP", self.ring_order))


class POTOrder:
    """Position-over-term; position 0 is the largest."""

    def __init__(self, ring_order):
        self.ring_order = ring_order

    def key(self, term):
        pos, exps = term
        return (-pos, self.ring_order.key(exps))

    def __eq__(self, other):
        return isinstance(other, POTOrder) and other.ring_order == self.ring_order

    def __hash__(self):
        return hash(("POT", self.ring_order))


class GraphOrder:
    """Every term in the first ``front_rank`` positions dominates the rest.

    This is the module analogue of an elimination order: in a Groebner basis
    of the graph module {(f(a), a)} the elements with vanishing front block
    have second components generating the syzygy module.
    """

    def __init__(self, ring_order, front_rank: int):
        self.ring_order = ring_order
        self.front_rank = front_rank

    def key(self, term):
        pos, exps = term
        return (1 if pos < self.front_rank else 0, self.ring_order.key(exps), -pos)

    def __eq__(self, other):
        return (
            isinstance(other, GraphOrder)
            and other.ring_order == self.ring_order
            and other.front_rank == self.front_rank
        )

    def __hash__(self):
        return hash(("graph", self.ring_order, self.front_rank))


class SchreyerOrder:
    """Order on R^t induced by the lead terms of a Groebner basis.

    (pos, e) is compared by the parent-order value of e * lead(g_pos); ties go
    to the smaller position.
    """

    def __init__(self, parent, leads):
        self.parent = parent
        self.leads = list(leads)

    def key(self, term):
        pos, exps = term
        lp, le = self.leads[pos]
        return (self.parent.key((lp, exp_mul(exps, le))), -pos)


# ---------------------------------------------------------------------------
# vector helpers


def vec_is_zero(v) -> bool:
    return not v


def vec_scale(v, coeff, field):
    if coeff == field.zero:
        return {}
    return {t: field.mul(c, coeff) for t, c in v.items()}


def vec_monomial_mul(v, exps, coeff, field):
    return {(p, exp_mul(e, exps)): field.mul(c, coeff) for (p, e), c in v.items()}

def vec_add(u, v, field):
    out = dict(u)
    zero = field.zero
    for t, c in v.items():
        s = field.add(out.get(t, zero), c)
        if s == zero:
            out.pop(t, None)
        else:
            out[t] = s
    return out


def _iadd_scaled(u, v, exps, coeff, field):
    """u += coeff * x^exps * v, in place."""
    zero = field.zero
    for (p, e), c in v.items():
        t = (p, exp_mul(e, exps))
        s = field.add(u.get(t, zero), field.mul(c, coeff))
        if s == zero:
            u.pop(t, None)
        else:
            u[t] = s


def vec_lead(v, keyf):
    return max(v, key=keyf)


def vec_monic(v, field, keyf):
    lc = v[vec_lead(v, keyf)]
    if lc == field.one:
        return dict(v)
    inv = field.inv(lc)
    return {t: field.mul(c, inv) for t, c in v.items()}


def reduce_vec(v, basis, leads_by_pos, keyf, field, quotients=None):
    """Full normal form of v against a monic basis.

    ``leads_by_pos`` maps a position to [(index, lead exponent)], scanned in
    index order so the reduction is deterministic.  When ``quotients`` is a
    list of dicts, entry i accumulates the polynomial q_i with
    v = sum q_i basis[i] + remainder.
    """
    work = dict(v)
    remainder = {}
    while work:
        t = max(work, key=keyf)
        pos, exps = t
        c = work[t]
        hit = None
        for idx, lead_exps in leads_by_pos.get(pos, ()):
            q = exp_div(exps, lead_exps)
            if q is not None:
                hit = (idx, q)
                break
        if hit is None:
            remainder[t] = c
            del work[t]
        else:
            idx, q = hit
            _iadd_scaled(work, basis[idx], q, field.neg(c), field)
            if quotients is not None:
                qd = quotients[idx]
                qd[q] = field.add(qd.get(q, field.zero), c)
    return remainder


def _leads_by_pos(leads):
    table = {}
    for idx, (pos, exps) in enumerate(leads):
        table.setdefault(pos, []).append((idx, exps))
    return table


# ---------------------------------------------------------------------------
# Buchberger


def _pair_sort_key(lcm_exps, pos, keyf):
    return (sum(lcm_exps), keyf((pos, lcm_exps)))


def buchberger(gens, order, field, interreduced=True):
    """Reduced Groebner basis of the submodule generated by ``gens``.

    Deterministic for a fixed input sequence and order: normal pair selection
    (degree of the lcm, then its order key), first-divisor reduction, and the
    final basis sorted by ascending lead term.
    """
    keyf = order.key
    basis = []
    leads = []
    rank_one = True
    for g in gens:
        if not g:
            continue
        v = vec_monic(g, field, keyf)
        basis.append(v)
        lead = vec_lead(v, keyf)
        leads.append(lead)
        if any(p != 0 for (p, _e) in v):
            rank_one = False

    pending = []
    counter = 0

    def push_pairs(j):
        nonlocal counter
        pj, ej = leads[j]
        for i in range(j):
            pi, ei = leads[i]
            if pi != pj:
                continue
            lcm = exp_lcm(ei, ej)
            heapq.heappush(pending, (_pair_sort_key(lcm, pj, keyf), counter, i, j))
            counter += 1

    for j in range(len(basis)):
        push_pairs(j)

    treated = set()
    while pending:
        _, _, i, j = heapq.heappop(pending)
        treated.add((i, j))
        pi, ei = leads[i]
        pj, ej = leads[j]
        lcm = exp_lcm(ei, ej)
        if rank_one and exp_mul(ei, ej) == lcm:
            continue  # coprime leads (sound for ideals only)
        skip = False
        for k, (pk, ek) in enumerate(leads):
            if k == i or k == j or pk != pi:
                continue
            if exp_div(lcm, ek) is None:
                continue
            a, b = (i, k) if i < k else (k, i)
            c, d = (j, k) if j < k else (k, j)
            if (a, b) in treated and (c, d) in treated:
                skip = True
                break
        if skip:
            continue
        s = {}
        _iadd_scaled(s, basis[i], exp_div(lcm, ei), field.one, field)
        _iadd_scaled(s, basis[j], exp_div(lcm, ej), field.neg(field.one), field)
        nf = reduce_vec(s, basis, _leads_by_pos(leads), keyf, field)
        if nf:
            basis.append(vec_monic(nf, field, keyf))
            leads.append(vec_lead(basis[-1], keyf))
            push_pairs(len(basis) - 1)

    if interreduced:
        return interreduce(basis, order, field)
    return basis


def interreduce(basis, order, field):
    """Canonical reduced form of a Groebner basis (auto-reduced, monic, sorted)."""
    keyf = order.key
    items = [vec_monic(v, field, keyf) for v in basis if v]
    items.sort(key=lambda v: keyf(vec_lead(v, keyf)))
    kept = []
    kept_leads = []
    for v in items:
        pos, exps = vec_lead(v, keyf)
        redundant = any(p == pos and exp_div(exps, e) is not None for (p, e) in kept_leads)
        if not redundant:
            kept.append(v)
            kept_leads.append((pos, exps))

    changed = True
    passes = 0
    while changed:
        changed = False
        passes += 1
        if passes > 50:
            raise RuntimeError("interreduction did not stabilise")
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1 :]
            other_leads = kept_leads[:idx] + kept_leads[idx + 1 :]
            nf = reduce_vec(kept[idx], others, _leads_by_pos(other_leads), keyf, field)
            nf = vec_monic(nf, field, keyf)
            if nf != kept[idx]:
                kept[idx] = nf
                changed = True
    return kept


def groebner_criterion_holds(basis, order, field) -> bool:
    """Every S-vector of same-position pairs reduces to zero (Buchberger's test)."""
    keyf = order.key
    leads = [vec_lead(v, keyf) for v in basis]
    table = _leads_by_pos(leads)
    for j in range(len(basis)):
        pj, ej = leads[j]
        for i in range(j):
            pi, ei = leads[i]
            if pi != pj:
                continue
            lcm = exp_lcm(ei, ej)
            s = {}
            ci = basis[i][leads[i]]
            cj = basis[j][leads[j]]
            _iadd_scaled(s, basis[i], exp_div(lcm, ei), field.inv(ci), field)
            _iadd_scaled(s, basis[j], exp_div(lcm, ej), field.neg(field.inv(cj)), field)
            if reduce_vec(s, basis, table, keyf, field):
                return False
    return True


# ---------------------------------------------------------------------------
# Schreyer syzygies


def schreyer_syzygies(gb, order, field):
    """Syzygies of a Groebner basis from its S-pair standard representations.

    Returns (syzygy vectors in R^len(gb), induced Schreyer order).  By
    Schreyer's theorem the returned vectors are themselves a Groebner basis
    with respect to the induced order, so iterating this map builds an exact
    free resolution with no further Buchberger runs.
    """
    keyf = order.key
    leads = [vec_lead(v, keyf) for v in gb]
    table = _leads_by_pos(leads)
    induced = SchreyerOrder(order, leads)
    syzygies = []
    for j in range(len(gb)):
        pj, ej = leads[j]
        cj = gb[j][leads[j]]
        for i in range(j):
            pi, ei = leads[i]
            if pi != pj:
                continue
            ci = gb[i][leads[i]]
            lcm = exp_lcm(ei, ej)
            ti, tj = exp_div(lcm, ei), exp_div(lcm, ej)
            s = {}
            _iadd_scaled(s, gb[i], ti, field.inv(ci), field)
            _iadd_scaled(s, gb[j], tj, field.neg(field.inv(cj)), field)
            quotients = [{} for _ in gb]
            nf = reduce_vec(s, gb, table, keyf, field, quotients=quotients)
            if nf:
                raise ValueError("input is not a Groebner basis")
            syz = {(i, ti): field.inv(ci), (j, tj): field.neg(field.inv(cj))}
            for idx, q in enumerate(quotients):
                for exps, c in q.items():
                    t = (idx, exps)
                    s2 = field.sub(syz.get(t, field.zero), c)
                    if s2 == field.zero:
                        syz.pop(t, None)
                    else:
                        syz[t] = s2
            syzygies.append(syz)
    return interreduce(syzygies, induced, field), induced


# ---------------------------------------------------------------------------
# graph-module computations: kernels, lifts, membership with certificates


class GraphBasis:
    """Groebner data for the module generated by {(col_i, e_i)} in R^(m+k).

    Built via :func:`graph_basis`; ``columns`` live in R^ambient_rank and the
    auxiliary block records how each basis element is assembled from them.
    """

    def __init__(self, columns, ambient_rank, ring):
        self.columns = list(columns)
        self.ambient_rank = ambient_rank
        self.field = ring.field
        self.order = GraphOrder(ring.order, ambient_rank)
        zero_exp = (0,) * ring.n
        gens = []
        for i, col in enumerate(self.columns):
            g = {(ambient_rank + i, zero_exp): self.field.one}
            for t, c in col.items():
                g[t] = c
            gens.append(g)
        self.gb = buchberger(gens, self.order, self.field)
        self.leads = [vec_lead(v, self.order.key) for v in self.gb]
        self.table = _leads_by_pos(self.leads)

    def kernel_generators(self):
        """Vectors a in R^k with sum a_i col_i = 0."""
        m = self.ambient_rank
        out = []
        for v in self.gb:
            if all(p >= m for (p, _e) in v):
                out.append({(p - m, e): c for (p, e), c in v.items()})
        return out

    def reduce_with_certificate(self, vec):
        """Normal form of a front-block vector; returns (remainder, lift).

        remainder is the normal form of ``vec`` against the column span; when
        it is zero, ``lift`` satisfies vec = sum lift_i col_i.
        """
        work = {(p, e): c for (p, e), c in vec.items()}
        nf = reduce_vec(work, self.gb, self.table, self.order.key, self.field)
        m = self.ambient_rank
        remainder = {}
        lift = {}
        for (p, e), c in nf.items():
            if p < m:
                remainder[(p, e)] = c
            else:
                lift[(p - m, e)] = self.field.neg(c)
        return remainder, lift

    def contains(self, vec) -> bool:
        remainder, _ = self.reduce_with_certificate(vec)
        return not remainder


def kernel_of_columns(columns, ambient_rank, ring):
    """Generators of {a : sum a_i columns_i = 0} inside R^k."""
    columns = list(columns)
    zero_exp = (0,) * ring.n
    # zero columns contribute their basis vector directly
    zero_syz = []
    live = []
    live_index = []
    for i, col in enumerate(columns):
        if col:
            live.append(col)
            live_index.append(i)
        else:
            zero_syz.append({(i, zero_exp): ring.field.one})
    if not live:
        return zero_syz
    graph = GraphBasis(live, ambient_rank, ring)
    out = list(zero_syz)
    for v in graph.kernel_generators():
        out.append({(live_index[p], e): c for (p, e), c in v.items()})
    return out


def graph_basis(columns, ambient_rank, ring) -> GraphBasis:
    """Graph-module Groebner data for lifts/membership with certificates."""
    return GraphBasis(columns, ambient_rank, ring)
