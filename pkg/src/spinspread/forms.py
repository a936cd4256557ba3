"""Quadratic and bilinear forms over GF(2): invariant forms of a matrix
group, Witt index by peeling hyperbolic pairs, and singular-vector counts.

A quadratic form is stored through an upper-triangular matrix B, with
Q(v) = sum of B[i][j] v_i v_j and polarization F = B + B^T.  In
characteristic two the polarization is alternating and carries the
associated bilinear structure f(u, v) = Q(u + v) + Q(u) + Q(v).
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import gf2, kernels
from ._kernels_py import _pack, _unpack
from .gf2 import BitMat, BitVec, EchelonBasis, Subspace
from .meataxe import dual_rep, hom_space
from .specht import GroupRep

VecLike = Union[BitVec, int]


def _as_int(v: VecLike) -> int:
    return v.to_int() if isinstance(v, BitVec) else v


class QuadForm:
    """A quadratic form given by its upper-triangular coefficient matrix."""

    __slots__ = ("n", "upper", "_rows", "_f_rows")

    def __init__(self, upper: BitMat):
        if upper.n_rows != upper.n_cols:
            raise ValueError("coefficient matrix must be square")
        rows = upper.rows_as_ints()
        for i, r in enumerate(rows):
            if r & ((1 << i) - 1):
                raise ValueError("coefficients must sit on or above the diagonal")
        self.n = upper.n_rows
        self.upper = upper
        self._rows = rows
        f = upper ^ upper.transpose()
        self._f_rows = f.rows_as_ints()

    @classmethod
    def from_ints(cls, rows: Sequence[int], n: int) -> "QuadForm":
        return cls(BitMat.from_ints(rows, n))

    @classmethod
    def hyperbolic(cls, m: int) -> "QuadForm":
        """The sum of m products of coordinate pairs, Witt index m."""
        rows = [0] * (2 * m)
        for i in range(m):
            rows[2 * i] = 1 << (2 * i + 1)
        return cls.from_ints(rows, 2 * m)

    def polarization(self) -> BitMat:
        return self.upper ^ self.upper.transpose()

    def evaluate(self, v: VecLike) -> int:
        x = _as_int(v)
        acc = 0
        y = x
        while y:
            i = (y & -y).bit_length() - 1
            y &= y - 1
            acc ^= (self._rows[i] & x).bit_count() & 1
        return acc

    def bilinear(self, u: VecLike, v: VecLike) -> int:
        x, y = _as_int(u), _as_int(v)
        acc = 0
        while x:
            i = (x & -x).bit_length() - 1
            x &= x - 1
            acc ^= (self._f_rows[i] & y).bit_count() & 1
        return acc

    def is_nondegenerate(self) -> bool:
        return self.polarization().rank() == self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadForm) and self.upper == other.upper

    def __repr__(self) -> str:
        return f"QuadForm(n={self.n})"


def invariant_bilinear_space(rep: GroupRep) -> List[BitMat]:
    """Bilinear forms F with F = g^T F g for every generator."""
    return list(hom_space(rep, dual_rep(rep)).basis)


def _alternating_combos(basis: List[BitMat], d: int) -> List[BitMat]:
    """Basis of the alternating part of a space of bilinear forms."""
    if not basis:
        return []
    # coefficient conditions: the combination must equal its transpose and
    # carry a zero diagonal
    cond_rows = []
    for f in basis:
        sym = _unpack((f ^ f.transpose()).words, d).reshape(-1)
        diag = np.array([f.get(i, i) for i in range(d)], dtype=np.uint8)
        cond_rows.append(np.concatenate([sym, diag]))
    system = BitMat(len(basis), d * d + d, _pack(np.stack(cond_rows, axis=0)))
    sol = gf2.kernel(system.transpose())
    out = []
    for i in range(sol.dim):
        coeffs = sol.basis.row(i)
        f = None
        for j in range(len(basis)):
            if coeffs[j]:
                f = basis[j] if f is None else f ^ basis[j]
        out.append(f)
    return out


def _diag_matrix(bits: int, d: int) -> BitMat:
    return BitMat.from_ints([(bits >> i & 1) << i for i in range(d)], d)


def _strict_upper(f: BitMat) -> BitMat:
    rows = f.rows_as_ints()
    return BitMat.from_ints(
        [r & ~((1 << (i + 1)) - 1) for i, r in enumerate(rows)], f.n_rows
    )


def invariant_quadratic(rep: GroupRep) -> Optional[QuadForm]:
    """A group-invariant quadratic form with nondegenerate polarization.

    Scans the invariant alternating bilinear forms in order and, for each
    invertible one, solves for a diagonal that makes the upper-triangular
    half invariant.  Returns the first form found, or None when no choice
    of polarization supports one.
    """
    d = rep.degree
    alt = _alternating_combos(invariant_bilinear_space(rep), d)
    if not alt:
        return None
    ident = BitMat.identity(d)
    for mask in range(1, 1 << len(alt)):
        f = None
        for i in range(len(alt)):
            if (mask >> i) & 1:
                f = alt[i] if f is None else f ^ alt[i]
        if f.rank() < d:
            continue
        base = QuadForm(_strict_upper(f))
        lhs_parts, rhs_parts = [], []
        for g in rep.gens:
            cols = g.transpose()  # row i holds column i of g
            lhs_parts.append(cols ^ ident)
            rhs_parts.append([base.evaluate(c) for c in cols.rows_as_ints()])
        lhs = lhs_parts[0]
        for part in lhs_parts[1:]:
            lhs = lhs.vstack(part)
        rhs = BitVec.from_bits([b for part in rhs_parts for b in part])
        delta = gf2.solve(lhs, rhs)
        if delta is None:
            continue
        q = QuadForm(_strict_upper(f) ^ _diag_matrix(delta.to_int(), d))
        _check_invariance(q, rep)
        return q
    return None


def _check_invariance(q: QuadForm, rep: GroupRep) -> None:
    f = q.polarization()
    for g in rep.gens:
        if (g.transpose() @ f) @ g != f:
            raise AssertionError("polarization is not invariant")
        for i, col in enumerate(g.transpose().rows_as_ints()):
            if q.evaluate(col) != q.evaluate(1 << i):
                raise AssertionError("form values moved under the action")


def is_quadratic_type_tworow(a: int, b: int) -> bool:
    """Whether the irreducible head of the two-row shape (a, b) carries an
    invariant quadratic form with nondegenerate polarization.

    The head fails to be of quadratic type exactly when b is a power of two,
    say b = 2^r, and a + b is congruent to one of 3*2^r - 1, ..., 4*2^r - 2
    modulo 2^(r+2).
    """
    if a <= b or b < 1:
        raise ValueError("need a strict two-row shape")
    if b & (b - 1):
        return True
    n = a + b
    return not (3 * b - 1 <= n % (4 * b) <= 4 * b - 2)


def count_invariant_pairs(rep: GroupRep) -> int:
    """Number of invariant quadratic forms whose polarization is nonzero.

    Counts pairs (F, diagonal): for each nonzero invariant alternating F the
    diagonals solving the invariance system form a coset of the common fixed
    space of the transposed generators.
    """
    d = rep.degree
    alt = _alternating_combos(invariant_bilinear_space(rep), d)
    if not alt:
        return 0
    ident = BitMat.identity(d)
    total = 0
    for mask in range(1, 1 << len(alt)):
        f = None
        for i in range(len(alt)):
            if (mask >> i) & 1:
                f = alt[i] if f is None else f ^ alt[i]
        base = QuadForm(_strict_upper(f))
        lhs_parts, rhs_parts = [], []
        for g in rep.gens:
            cols = g.transpose()
            lhs_parts.append(cols ^ ident)
            rhs_parts.append([base.evaluate(c) for c in cols.rows_as_ints()])
        lhs = lhs_parts[0]
        for part in lhs_parts[1:]:
            lhs = lhs.vstack(part)
        rhs = BitVec.from_bits([b for part in rhs_parts for b in part])
        if gf2.solve(lhs, rhs) is not None:
            total += 1 << gf2.kernel(lhs).dim
    return total


def witt_index(q: QuadForm) -> int:
    """Number of hyperbolic planes split off by the form.

    Requires a nondegenerate polarization.  Repeatedly finds a singular
    vector (a three-dimensional window always holds one, since anisotropic
    forms over GF(2) stop at dimension two), completes it to a hyperbolic
    pair, and passes to the perpendicular complement.
    """
    if not q.is_nondegenerate():
        raise ValueError("polarization is degenerate")
    basis = [1 << i for i in range(q.n)]
    index = 0
    while basis:
        u = 0
        window = min(3, len(basis))
        for mask in range(1, 1 << window):
            v = 0
            for i in range(window):
                if (mask >> i) & 1:
                    v ^= basis[i]
            if q.evaluate(v) == 0:
                u = v
                break
        if u == 0:
            break  # anisotropic remainder
        z = next(w for w in basis if q.bilinear(u, w))
        if q.evaluate(z):
            z ^= u
        index += 1
        eb = EchelonBasis()
        for w in basis:
            w2 = w
            if q.bilinear(w2, z):
                w2 ^= u
            if q.bilinear(w2, u):
                w2 ^= z
            eb.insert(w2)
        if len(eb.rows) != len(basis) - 2:
            raise AssertionError("hyperbolic pair did not reduce the space by two")
        basis = eb.rows
    return index


def count_singular(q: QuadForm, max_dim: int = 24) -> int:
    """Number of nonzero singular vectors, by direct enumeration."""
    if q.n > max_dim:
        raise ValueError(f"enumeration capped at dimension {max_dim}")
    bf = _unpack(q.upper.words, q.n).astype(np.float64)
    total = 0
    chunk = 1 << 18
    for start in range(0, 1 << q.n, chunk):
        stop = min(start + chunk, 1 << q.n)
        vals = np.arange(start, stop, dtype=np.uint32)
        bits = np.unpackbits(
            vals.view(np.uint8).reshape(-1, 4), axis=1, bitorder="little"
        )[:, : q.n].astype(np.float64)
        qv = (bits * (bits @ bf)).sum(axis=1).astype(np.int64) & 1
        total += int((qv == 0).sum())
    return total - 1  # drop the zero vector


def singular_vectors(q: QuadForm, max_dim: int = 16) -> List[int]:
    """All nonzero singular vectors as bitmasks, in increasing order."""
    if q.n > max_dim:
        raise ValueError(f"enumeration capped at dimension {max_dim}")
    return [v for v in range(1, 1 << q.n) if q.evaluate(v) == 0]


def is_totally_singular(q: QuadForm, sub: Subspace) -> bool:
    """Whether the form and its polarization vanish on the whole subspace."""
    rows = sub.basis.rows_as_ints()
    for i, u in enumerate(rows):
        if q.evaluate(u):
            return False
        for v in rows[i + 1 :]:
            if q.bilinear(u, v):
                return False
    return True


def perp(q: QuadForm, sub: Subspace) -> Subspace:
    """Perpendicular complement under the polarization."""
    m = BitMat(
        sub.dim, q.n, kernels.mul(sub.basis.words, q.n, q.polarization().words, q.n)
    )
    return gf2.kernel(m)
