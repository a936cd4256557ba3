"""Permutation arithmetic, generator words, and group tables."""

import math
import random

import pytest

from spinspread import perms
from spinspread.perms import CayleyTable, GroupTableError, Perm


def inversion_parity(p: Perm) -> int:
    inv = 0
    for i in range(p.degree):
        for j in range(i + 1, p.degree):
            if p.images[i] > p.images[j]:
                inv += 1
    return inv % 2


def random_perm(rng, n):
    images = list(range(n))
    rng.shuffle(images)
    return Perm(images)


def element_order(t: CayleyTable, a: int) -> int:
    x, k = a, 1
    while x != 0:
        x = t.table[x][a]
        k += 1
    return k


def test_composition_order():
    # (p * q)(x) = p(q(x))
    p = Perm.from_cycles(3, [(0, 1)])
    q = Perm.from_cycles(3, [(1, 2)])
    assert (p * q).images == (1, 2, 0)
    assert (q * p).images == (2, 0, 1)


def test_inverse_and_identity():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randrange(1, 12)
        p = random_perm(rng, n)
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()


def test_parity_matches_inversion_count():
    rng = random.Random(2)
    for _ in range(80):
        p = random_perm(rng, rng.randrange(1, 10))
        assert perms.parity(p) == inversion_parity(p)


def test_parity_is_a_homomorphism():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randrange(2, 10)
        p, q = random_perm(rng, n), random_perm(rng, n)
        assert perms.parity(p * q) == (perms.parity(p) + perms.parity(q)) % 2


def test_from_cycles_one_based_printing():
    p = Perm.from_cycles(5, [(0, 1), (2, 3, 4)])
    assert p.cycle_string() == "(1 2)(3 4 5)"


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_coxeter_gens_generate_symmetric_group(n):
    assert len(perms.closure(perms.coxeter_gens(n))) == math.factorial(n)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_alternating_gens_generate_alternating_group(n):
    els = perms.closure(perms.alternating_gens(n))
    assert len(els) == math.factorial(n) // 2
    assert all(p.is_even() for p in els)


@pytest.mark.parametrize("even_only", [False, True])
def test_coset_reps_hit_every_point(even_only):
    for n in range(4, 9):
        reps = perms.coset_reps_point_stabilizer(n, even_only=even_only)
        assert len(reps) == n
        assert reps[0].is_identity()
        # g runs over cosets of the stabilizer of the last point exactly when
        # the images of that point are pairwise distinct
        assert sorted(r(n - 1) for r in reps) == list(range(n))
        if even_only:
            assert all(r.is_even() for r in reps)


def test_coxeter_word_reconstructs():
    rng = random.Random(4)
    s_cache = {}
    for _ in range(80):
        n = rng.randrange(2, 10)
        if n not in s_cache:
            s_cache[n] = perms.coxeter_gens(n)
        s = s_cache[n]
        p = random_perm(rng, n)
        q = Perm.identity(n)
        for i in perms.coxeter_word(p):
            q = q * s[i]
        assert q == p


def test_alternating_word_reconstructs():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randrange(4, 10)
        p = random_perm(rng, n)
        if not p.is_even():
            p = p * Perm.transposition(n, 0, 1)
        t = perms.alternating_gens(n)
        q = Perm.identity(n)
        for tok in perms.alternating_word(p):
            q = q * (t[tok] if tok >= 0 else t[-tok - 1].inverse())
        assert q == p


def test_alternating_word_rejects_odd():
    with pytest.raises(ValueError):
        perms.alternating_word(Perm.transposition(4, 0, 1))


def test_cyclic_table():
    t = CayleyTable.cyclic(6)
    assert t.order == 6
    t.validate()
    assert t.table[2][5] == 1


def test_elementary_abelian_table():
    t = CayleyTable.elementary_abelian(2, 3)
    t.validate()
    assert t.order == 8
    # every nonidentity element squares to the identity
    assert all(t.table[a][a] == 0 for a in range(8))
    t3 = CayleyTable.elementary_abelian(3, 2)
    t3.validate()
    assert all(t3.table[a][t3.table[a][a]] == 0 for a in range(9))


def test_dihedral_table():
    t = CayleyTable.dihedral(4)
    t.validate()
    assert t.order == 8
    k = 4
    # flips are involutions, the rotation has order k
    assert all(element_order(t, k + r) == 2 for r in range(k))
    assert element_order(t, 1) == k


def test_quaternion_table():
    t = CayleyTable.quaternion8()
    t.validate()
    # exactly one involution (-1), all other nonidentity elements have order 4
    invol = [a for a in range(1, 8) if t.table[a][a] == 0]
    assert invol == [1]
    for a in range(2, 8):
        sq = t.table[a][a]
        assert sq == 1
        assert t.table[sq][sq] == 0


def test_direct_product_table():
    t = CayleyTable.direct_product(CayleyTable.cyclic(4), CayleyTable.cyclic(2))
    t.validate()
    assert t.order == 8
    assert sorted(element_order(t, a) for a in range(8)) == [1, 2, 2, 2, 4, 4, 4, 4]


def test_table_validation_catches_bad_tables():
    with pytest.raises(GroupTableError) as info:
        CayleyTable([[0, 1], [1, 1]])
    assert info.value.axiom == "latin"
    with pytest.raises(GroupTableError) as info:
        CayleyTable([[1, 0], [0, 1]])
    assert info.value.axiom == "identity"
    # Latin square with identity that is not associative
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupTableError) as info:
        CayleyTable(t)
    assert info.value.axiom == "associativity"


def test_regular_embedding_is_faithful_left_action():
    for t in (
        CayleyTable.cyclic(6),
        CayleyTable.dihedral(3),
        CayleyTable.quaternion8(),
    ):
        ps = perms.regular_embedding(t)
        assert ps[0].is_identity()
        assert len(set(ps)) == t.order
        for a in range(t.order):
            for b in range(t.order):
                assert ps[a] * ps[b] == ps[t.table[a][b]]


def test_pad_to_degree():
    p = Perm.from_cycles(3, [(0, 1, 2)])
    q = perms.pad_to_degree(p, 6)
    assert q.degree == 6
    assert q.images[:3] == p.images
    assert all(q(i) == i for i in range(3, 6))
