"""Two-row Specht modules over GF(2) and their irreducible quotients.

A tabloid of shape (a, b) is recorded by its second-row entries, a b-subset
of {0, ..., n-1} with n = a + b; tabloids are indexed in lexicographic order
of those subsets.  Polytabloids of standard tableaux span the Specht module
inside the tabloid permutation module, and the quotient by the radical of
the intersection-parity form gives the irreducible head.

All matrices act on column vectors, v -> G.v, so rho(gh) = rho(g).rho(h).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import gf2, kernels
from .gf2 import BitMat
from .perms import Perm, coxeter_gens


@dataclass(frozen=True)
class GroupRep:
    """A group presented by generator matrices over GF(2).

    degree is the dimension of the space acted on.  When the group is a
    symmetric or alternating group, perms carries the permutation behind
    each generator so arbitrary elements can be rebuilt from words; for
    table-defined groups it is None.
    """

    group: str
    gens: Tuple[BitMat, ...]
    labels: Tuple[str, ...]
    perms: Optional[Tuple[Perm, ...]] = None

    def __post_init__(self):
        if not self.gens:
            raise ValueError("a representation needs at least one generator")
        d = self.gens[0].n_rows
        for g in self.gens:
            if g.n_rows != d or g.n_cols != d:
                raise ValueError("generator matrices must be square, same size")
        if len(self.labels) != len(self.gens):
            raise ValueError("one label per generator")
        if self.perms is not None and len(self.perms) != len(self.gens):
            raise ValueError("one permutation per generator")

    @property
    def degree(self) -> int:
        return self.gens[0].n_rows


def two_row_tabloids(n: int, b: int) -> List[Tuple[int, ...]]:
    """Second-row subsets in lexicographic order."""
    return list(itertools.combinations(range(n), b))


def enumerate_tabloids(shape: Tuple[int, int]) -> List[Tuple[int, ...]]:
    """All tabloids of a two-row shape, as lex-ordered second-row subsets."""
    a, b = shape
    if a < b or b < 1:
        raise ValueError("need a >= b >= 1")
    return two_row_tabloids(a + b, b)


def tabloid_perm_matrix(shape: Tuple[int, int], p: Perm) -> BitMat:
    """Permutation matrix of p on the tabloids of the given shape.

    Column t holds the image of tabloid t, so the map is a homomorphism
    under the column-vector convention: matrix(pq) = matrix(p).matrix(q).
    """
    a, b = shape
    n = a + b
    if p.degree != n:
        raise ValueError(f"permutation degree {p.degree} does not match n = {n}")
    tabloids = enumerate_tabloids(shape)
    index = {t: i for i, t in enumerate(tabloids)}
    rows = [0] * len(tabloids)
    for c, t in enumerate(tabloids):
        rows[index[tuple(sorted(p(x) for x in t))]] |= 1 << c
    return BitMat.from_ints(rows, len(tabloids))


def standard_tableaux(a: int, b: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(row1, row2) pairs with rows and columns increasing.

    A second row r_0 < ... < r_{b-1} is standard exactly when r_k >= 2k + 1
    for every k (the ballot condition).
    """
    if a < b or b < 1:
        raise ValueError("need a >= b >= 1")
    n = a + b
    out = []
    for row2 in itertools.combinations(range(n), b):
        if all(r >= 2 * k + 1 for k, r in enumerate(row2)):
            row1 = tuple(sorted(set(range(n)) - set(row2)))
            out.append((row1, row2))
    return out


def _polytabloid_bits(
    row1: Tuple[int, ...],
    row2: Tuple[int, ...],
    index: Dict[Tuple[int, ...], int],
) -> int:
    """Column-group orbit sum of a tableau, as a bitmask over tabloids.

    Over GF(2) the signs disappear, so the polytabloid is the sum of the
    2^b tabloids obtained by swapping the two entries of any subset of
    columns.  All of them are distinct, so the result has weight 2^b.
    """
    b = len(row2)
    val = 0
    for mask in range(1 << b):
        r2 = list(row2)
        for j in range(b):
            if (mask >> j) & 1:
                r2[j] = row1[j]
        val |= 1 << index[tuple(sorted(r2))]
    return val


def polytabloid(
    shape: Tuple[int, int],
    tableau: Tuple[Tuple[int, ...], Tuple[int, ...]],
) -> gf2.BitVec:
    """The polytabloid of a tableau, as a vector over the tabloid basis."""
    a, b = shape
    row1, row2 = tableau
    if len(row1) != a or len(row2) != b:
        raise ValueError("tableau rows do not match the shape")
    n = a + b
    if sorted(row1 + row2) != list(range(n)):
        raise ValueError("tableau entries must be 0..n-1, each exactly once")
    tabloids = enumerate_tabloids(shape)
    index = {t: i for i, t in enumerate(tabloids)}
    bits = _polytabloid_bits(tuple(row1), tuple(row2), index)
    return gf2.BitVec.from_int(len(tabloids), bits)


@dataclass(frozen=True)
class SpechtData:
    """The Specht module of a two-row shape, spelled out over tabloids."""

    shape: Tuple[int, int]
    tabloids: Tuple[Tuple[int, ...], ...]
    tableaux: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]
    matrix: BitMat  # standard polytabloids as rows, one per tableau
    gram: BitMat  # parities of pairwise tabloid-support intersections
    radical_dim: int


@lru_cache(maxsize=None)
def specht_data(a: int, b: int) -> SpechtData:
    tabloids = tuple(two_row_tabloids(a + b, b))
    index = {t: i for i, t in enumerate(tabloids)}
    tableaux = tuple(standard_tableaux(a, b))
    rows = [_polytabloid_bits(r1, r2, index) for r1, r2 in tableaux]
    matrix = BitMat.from_ints(rows, len(tabloids))
    if matrix.rank() != len(tableaux):
        raise AssertionError("standard polytabloids came out dependent")
    gram = BitMat(
        len(tableaux),
        len(tableaux),
        kernels.mul_bt(matrix.words, matrix.words, len(tabloids)),
    )
    radical_dim = len(tableaux) - gram.rank()
    return SpechtData((a, b), tabloids, tableaux, matrix, gram, radical_dim)


def specht_dim(a: int, b: int) -> int:
    """Number of standard tableaux: C(n, b) - C(n, b - 1)."""
    n = a + b
    return comb(n, b) - comb(n, b - 1)


def _tabloid_action(data: SpechtData, p: Perm) -> np.ndarray:
    """inv[j] = index of the tabloid that p carries onto tabloid j."""
    index = {t: i for i, t in enumerate(data.tabloids)}
    inv = np.empty(len(data.tabloids), dtype=np.int64)
    for i, t in enumerate(data.tabloids):
        inv[index[tuple(sorted(p(x) for x in t))]] = i
    return inv


def _standard_basis_mats(data: SpechtData, perms: Tuple[Perm, ...]) -> Tuple[BitMat, ...]:
    """Matrices of the given permutations on the standard polytabloid basis."""
    d = len(data.tableaux)
    n_tab = len(data.tabloids)
    p_words = data.matrix.words

    # Row-reduce [P | I] once; the pivot columns J and the transform T with
    # T.P in reduced form let every permuted copy of P be re-expressed in
    # the standard basis by reading off its entries at J.
    aug = gf2._augment(p_words, n_tab, BitMat.identity(d).words, d)
    piv = kernels.echelonize(aug, n_tab)
    if len(piv) != d:
        raise AssertionError("polytabloid matrix lost rank")
    piv_arr = np.asarray(piv, dtype=np.int64)
    t0 = kernels.gather_columns(aug, n_tab + d, np.arange(n_tab, n_tab + d))

    mats = []
    for s in perms:
        inv = _tabloid_action(data, s)
        bw = kernels.gather_columns(p_words, n_tab, inv)
        bj = kernels.gather_columns(bw, n_tab, piv_arr)
        y = kernels.mul(bj, d, t0, d)
        if not np.array_equal(kernels.mul(y, d, p_words, n_tab), bw):
            raise AssertionError("permuted polytabloids left the Specht module")
        mats.append(BitMat(d, d, kernels.transpose(y, d)))
    return tuple(mats)


@lru_cache(maxsize=None)
def _specht_action(a: int, b: int) -> Tuple[SpechtData, Tuple[BitMat, ...]]:
    """Matrices of the adjacent transpositions on the standard basis."""
    data = specht_data(a, b)
    return data, _standard_basis_mats(data, tuple(coxeter_gens(a + b)))


@lru_cache(maxsize=None)
def specht_rep(a: int, b: int) -> GroupRep:
    """Action of the symmetric group on the Specht module itself."""
    n = a + b
    _, mats = _specht_action(a, b)
    return GroupRep(
        group=f"S{n}",
        gens=mats,
        labels=tuple(f"s{i}" for i in range(1, n)),
        perms=tuple(coxeter_gens(n)),
    )


def _radical_quotient(data: SpechtData, mats: Tuple[BitMat, ...]) -> Tuple[BitMat, ...]:
    """Push standard-basis matrices down to the quotient by the form radical."""
    d = len(data.tableaux)
    rad = gf2.kernel(data.gram)
    if rad.dim == 0:
        return mats
    piv_set = set(rad.pivots)
    section = [j for j in range(d) if j not in piv_set]
    k_cols = rad.basis.gather_columns(section)
    out = []
    for x in mats:
        # generators must carry the radical into itself
        imgs = BitMat(rad.dim, d, kernels.mul_bt(rad.basis.words, x.words, d))
        if not (imgs @ data.gram).is_zero():
            raise AssertionError("radical was not preserved by the action")
        a11 = x.take_rows(section).gather_columns(section)
        a21 = x.take_rows(rad.pivots).gather_columns(section)
        out.append(a11 ^ (k_cols.transpose() @ a21))
    return tuple(out)


def irreducible_quotient(
    a: int,
    b: int,
    perms: Optional[Tuple[Perm, ...]] = None,
    labels: Optional[Tuple[str, ...]] = None,
    group: Optional[str] = None,
) -> GroupRep:
    """Quotient of the Specht module by the radical of its invariant form.

    By default the generators are the adjacent transpositions of S_n; any
    other family of degree-n permutations may be supplied instead, with a
    label per generator and a group name.
    """
    if a <= b:
        raise ValueError("the quotient needs a strict two-row shape (a > b)")
    if perms is None:
        return _irreducible_quotient_coxeter(a, b)
    data = specht_data(a, b)
    mats = _radical_quotient(data, _standard_basis_mats(data, tuple(perms)))
    if labels is None:
        labels = tuple(f"g{i}" for i in range(1, len(mats) + 1))
    return GroupRep(
        group=group if group is not None else "custom",
        gens=mats,
        labels=tuple(labels),
        perms=tuple(perms),
    )


@lru_cache(maxsize=None)
def _irreducible_quotient_coxeter(a: int, b: int) -> GroupRep:
    n = a + b
    data, mats = _specht_action(a, b)
    return GroupRep(
        group=f"S{n}",
        gens=_radical_quotient(data, mats),
        labels=tuple(f"s{i}" for i in range(1, n)),
        perms=tuple(coxeter_gens(n)),
    )


def spin_shape(n: int) -> Tuple[int, int]:
    """The two-row shape whose irreducible head has dimension 2^floor((n-1)/2)."""
    if n < 3:
        raise ValueError("need n >= 3")
    m = n // 2
    if n % 2:
        return (m + 1, m)
    return (m + 1, m - 1)


@lru_cache(maxsize=None)
def spin_rep(n: int) -> GroupRep:
    """The basic spin representation of the symmetric group on n points."""
    a, b = spin_shape(n)
    rep = irreducible_quotient(a, b)
    expect = 1 << ((n - 1) // 2)
    if rep.degree != expect:
        raise AssertionError(
            f"spin module of S{n} has dimension {rep.degree}, expected {expect}"
        )
    return rep
