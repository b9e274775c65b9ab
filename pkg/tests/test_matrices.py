"""Free-module matrices: composition, grading, minors."""

from itertools import combinations

import pytest

from residua import FreeModuleMatrix, Ideal, koszul_complex, matrix_compose
from residua.rng import SeedStream

from test_ring import random_poly


def test_identity_composition(R3):
    x, y, z = R3.gens()
    a = FreeModuleMatrix(R3, [[x, y], [z, x]])
    ident = FreeModuleMatrix.identity(R3, 2)
    assert matrix_compose(ident, a).entries == a.entries
    assert matrix_compose(a, ident).entries == a.entries


def test_koszul_differentials_compose_to_zero(R3):
    x, y, _z = R3.gens()
    kos = koszul_complex([x, y])
    assert matrix_compose(kos.differential(1), kos.differential(2)).is_zero()


def test_one_by_one(R3):
    x, y, _z = R3.gens()
    a = FreeModuleMatrix(R3, [[x]])
    b = FreeModuleMatrix(R3, [[y]])
    assert matrix_compose(a, b).entry(0, 0) == x * y


def test_shape_mismatch(R3):
    x, _y, _z = R3.gens()
    a = FreeModuleMatrix(R3, [[x, x]])
    with pytest.raises(ValueError):
        matrix_compose(a, a)


def _random_graded_matrix(ring, stream, rows, cols):
    target = [stream.randint(0, 1) for _ in range(rows)]
    source = [stream.randint(2, 3) for _ in range(cols)]
    entries = []
    for r in range(rows):
        row = []
        for c in range(cols):
            want = source[c] - target[r]
            acc = ring.zero()
            f = random_poly(ring, stream, max_deg=want, terms=3)
            for e, coeff in f.terms:
                if sum(e) == want:
                    acc = acc + ring.monomial(e, coeff)
            row.append(acc)
        entries.append(row)
    return FreeModuleMatrix(ring, entries, source_twists=source, target_twists=target)


def test_graded_invariant_preserved_by_compose(R3):
    stream = SeedStream(43)
    for _ in range(10):
        b = _random_graded_matrix(R3, stream, 2, 2)
        # a must have source twists equal to b's target twists
        target = [stream.randint(-1, 0) for _ in range(2)]
        entries = []
        for r in range(2):
            row = []
            for c in range(2):
                want = b.target_twists[c] - target[r]
                f = random_poly(R3, stream, max_deg=want, terms=3)
                acc = R3.zero()
                for e, coeff in f.terms:
                    if sum(e) == want:
                        acc = acc + R3.monomial(e, coeff)
                row.append(acc)
            entries.append(row)
        a = FreeModuleMatrix(R3, entries, source_twists=b.target_twists, target_twists=target)
        assert a.is_graded() and b.is_graded()
        assert matrix_compose(a, b).is_graded()


def test_transpose_dual_twists(R3):
    x, _y, _z = R3.gens()
    a = FreeModuleMatrix(R3, [[x]], source_twists=[1], target_twists=[0])
    d = a.transpose_dual()
    assert d.source_twists == (0,) and d.target_twists == (-1,)
    assert d.is_graded()


# ---------------------------------------------------------------------------
# minors


def brute_force_minors(matrix, t):
    """Leibniz-formula determinants, fully independent of Laplace expansion."""
    from itertools import permutations

    ring = matrix.ring
    out = []
    for rows in combinations(range(matrix.rows), t):
        for cols in combinations(range(matrix.cols), t):
            det = ring.zero()
            for perm in permutations(range(t)):
                sign = 1
                for i in range(t):
                    for j in range(i + 1, t):
                        if perm[i] > perm[j]:
                            sign = -sign
                prod = ring.one()
                for i in range(t):
                    prod = prod * matrix.entry(rows[i], cols[perm[i]])
                det = det + prod.scale(sign)
            out.append(det)
    return out


def test_two_by_two_determinant(R4):
    x, y, z, w = R4.gens()
    m = FreeModuleMatrix(R4, [[x, y], [z, w]])
    assert [str(p) for p in m.minors(2)] == [str(x * w - y * z)]


def test_minors_zero_size_convention(R3):
    from residua import minors_ideal

    x, _y, _z = R3.gens()
    m = FreeModuleMatrix(R3, [[x]])
    assert minors_ideal(m, 0).is_unit()
    assert minors_ideal(m, 5).is_zero()


def test_koszul_syzygy_minors_against_brute_force(R3):
    # DERIVED: 2x2 minors of the Koszul syzygy matrix of (x, y, z), checked
    # against Leibniz-formula determinants
    x, y, z = R3.gens()
    kos = koszul_complex([x, y, z])
    d2 = kos.differential(2)
    laplace = d2.minors(2)
    leibniz = brute_force_minors(d2, 2)
    assert [str(p) for p in laplace] == [str(p) for p in leibniz]
    ideal = Ideal(R3, laplace)
    # the 2-minors of the syzygy matrix cut out (x,y,z)-primary behaviour:
    # every product of two variables squared lands inside
    for f in (x**2, y**2, z**2, x * y, x * z, y * z):
        assert ideal.contains(f * f) or ideal.contains(f**2)


def test_random_minors_match_brute_force(R3):
    stream = SeedStream(47)
    for _ in range(5):
        entries = [[random_poly(R3, stream, max_deg=2, terms=2) for _ in range(3)] for _ in range(3)]
        m = FreeModuleMatrix(R3, entries)
        for t in (1, 2, 3):
            assert [str(p) for p in m.minors(t)] == [str(p) for p in brute_force_minors(m, t)]
