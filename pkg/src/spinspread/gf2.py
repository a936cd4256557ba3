"""Dense linear algebra over GF(2) on bit-packed vectors and matrices.

Entries are packed into uint64 words, coordinate 0 first (least significant
bit of word 0).  Vectors are column vectors: a matrix acts on the left,
``m.mul_vec(v)`` is m*v.  Subspaces are stored as reduced-row-echelon bases,
so equal subspaces have bit-identical bases and compare equal.

Values are immutable after construction; every operation returns a fresh
object.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from . import kernels
from .kernels import words_for

RowLike = Union["BitVec", str, int, Sequence[int]]


def _own(words: np.ndarray, n_cols: int, n_rows: Optional[int] = None) -> np.ndarray:
    """Adopt a word array: right shape, tail bits cleared, marked read-only."""
    words = np.asarray(words, dtype=np.uint64)
    if n_rows is None:
        if words.ndim != 1:
            raise ValueError("expected a 1-d word array")
        want = (words_for(n_cols),)
    else:
        if words.ndim != 2:
            raise ValueError("expected a 2-d word array")
        want = (n_rows, words_for(n_cols))
    if words.shape != want:
        raise ValueError(f"word array has shape {words.shape}, expected {want}")
    if not words.flags.c_contiguous:
        words = np.ascontiguousarray(words)
    tail = n_cols & 63
    if tail and words.size:
        mask = np.uint64((1 << tail) - 1)
        if (words[..., -1] & ~mask).any():
            if not words.flags.writeable:
                words = words.copy()
            words[..., -1] &= mask
    if words.flags.writeable:
        words.setflags(write=False)
    return words


def _bits_to_words(bits: Sequence[int], n_cols: int) -> np.ndarray:
    x = 0
    for i, b in enumerate(bits):
        if b:
            x |= 1 << i
    return _int_to_words(x, n_cols)


def _int_to_words(x: int, n_cols: int) -> np.ndarray:
    nw = words_for(n_cols)
    raw = x.to_bytes(nw * 8, "little")
    return np.frombuffer(raw, dtype=np.uint64).copy()


class BitVec:
    """An immutable GF(2) vector of fixed length."""

    __slots__ = ("n", "words")

    def __init__(self, n: int, words: Optional[np.ndarray] = None):
        if n < 0:
            raise ValueError("negative length")
        self.n = n
        if words is None:
            words = np.zeros(words_for(n), dtype=np.uint64)
        self.words = _own(words, n)

    @classmethod
    def zeros(cls, n: int) -> "BitVec":
        return cls(n)

    @classmethod
    def basis(cls, n: int, i: int) -> "BitVec":
        return cls.from_int(n, 1 << i)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVec":
        bits = list(bits)
        return cls(len(bits), _bits_to_words(bits, len(bits)))

    @classmethod
    def from_string(cls, s: str) -> "BitVec":
        if set(s) - {"0", "1"}:
            raise ValueError("bit string must contain only 0 and 1")
        return cls.from_bits([int(c) for c in s])

    @classmethod
    def from_int(cls, n: int, x: int) -> "BitVec":
        if x < 0 or x >> n:
            raise ValueError("integer does not fit the vector length")
        return cls(n, _int_to_words(x, n))

    def to_int(self) -> int:
        return int.from_bytes(self.words.tobytes(), "little")

    def to01(self) -> str:
        x = self.to_int()
        return "".join("1" if (x >> i) & 1 else "0" for i in range(self.n))

    def weight(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def is_zero(self) -> bool:
        return not self.words.any()

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return int((self.words[i >> 6] >> np.uint64(i & 63)) & np.uint64(1))

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVec(self.n, self.words ^ other.words)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVec)
            and self.n == other.n
            and bool(np.array_equal(self.words, other.words))
        )

    def __hash__(self) -> int:
        return hash((self.n, self.words.tobytes()))

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        s = self.to01()
        if len(s) > 64:
            s = s[:61] + "..."
        return f"BitVec({s})"


class BitMat:
    """An immutable GF(2) matrix with bit-packed rows."""

    __slots__ = ("n_rows", "n_cols", "words")

    def __init__(self, n_rows: int, n_cols: int, words: Optional[np.ndarray] = None):
        if n_rows < 0 or n_cols < 0:
            raise ValueError("negative dimension")
        self.n_rows = n_rows
        self.n_cols = n_cols
        if words is None:
            words = np.zeros((n_rows, words_for(n_cols)), dtype=np.uint64)
        self.words = _own(words, n_cols, n_rows)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BitMat":
        return cls(n_rows, n_cols)

    @classmethod
    def identity(cls, n: int) -> "BitMat":
        w = np.zeros((n, words_for(n)), dtype=np.uint64)
        for i in range(n):
            w[i, i >> 6] = np.uint64(1) << np.uint64(i & 63)
        return cls(n, n, w)

    @classmethod
    def from_rows(cls, rows: Sequence[RowLike], n_cols: Optional[int] = None) -> "BitMat":
        vecs = []
        for r in rows:
            if isinstance(r, BitVec):
                vecs.append(r)
            elif isinstance(r, str):
                vecs.append(BitVec.from_string(r))
            elif isinstance(r, int):
                if n_cols is None:
                    raise ValueError("n_cols is required for integer rows")
                vecs.append(BitVec.from_int(n_cols, r))
            else:
                vecs.append(BitVec.from_bits(r))
        if n_cols is None:
            if not vecs:
                raise ValueError("n_cols is required for an empty matrix")
            n_cols = vecs[0].n
        if any(v.n != n_cols for v in vecs):
            raise ValueError("rows have mixed lengths")
        w = np.zeros((len(vecs), words_for(n_cols)), dtype=np.uint64)
        for i, v in enumerate(vecs):
            w[i] = v.words
        return cls(len(vecs), n_cols, w)

    @classmethod
    def from_ints(cls, ints: Sequence[int], n_cols: int) -> "BitMat":
        w = np.zeros((len(ints), words_for(n_cols)), dtype=np.uint64)
        for i, x in enumerate(ints):
            if x < 0 or x >> n_cols:
                raise ValueError("integer row does not fit the column count")
            w[i] = _int_to_words(x, n_cols)
        return cls(len(ints), n_cols, w)

    def row(self, i: int) -> BitVec:
        if not 0 <= i < self.n_rows:
            raise IndexError(i)
        return BitVec(self.n_cols, self.words[i])

    def rows_as_ints(self) -> list:
        by = self.words.tobytes()
        step = self.words.shape[1] * 8
        return [
            int.from_bytes(by[i * step : (i + 1) * step], "little")
            for i in range(self.n_rows)
        ]

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError((i, j))
        return int((self.words[i, j >> 6] >> np.uint64(j & 63)) & np.uint64(1))

    def __matmul__(self, other: "BitMat") -> "BitMat":
        if self.n_cols != other.n_rows:
            raise ValueError("inner dimensions do not match")
        w = kernels.mul(self.words, self.n_cols, other.words, other.n_cols)
        return BitMat(self.n_rows, other.n_cols, w)

    def mul_vec(self, v: BitVec) -> BitVec:
        """Matrix times column vector."""
        if v.n != self.n_cols:
            raise ValueError("vector length does not match column count")
        w = kernels.mul_bt(v.words.reshape(1, -1), self.words, self.n_cols)
        return BitVec(self.n_rows, w[0])

    def transpose(self) -> "BitMat":
        w = kernels.transpose(self.words, self.n_cols)
        return BitMat(self.n_cols, self.n_rows, w)

    def gather_columns(self, cols: Sequence[int]) -> "BitMat":
        cols = np.asarray(cols, dtype=np.int64)
        if cols.size and (cols.min() < 0 or cols.max() >= self.n_cols):
            raise IndexError("column index out of range")
        w = kernels.gather_columns(self.words, self.n_cols, cols)
        return BitMat(self.n_rows, len(cols), w)

    def take_rows(self, rows: Sequence[int]) -> "BitMat":
        idx = np.asarray(rows, dtype=np.intp)
        return BitMat(len(rows), self.n_cols, self.words[idx].copy())

    def vstack(self, other: "BitMat") -> "BitMat":
        if self.n_cols != other.n_cols:
            raise ValueError("column counts differ")
        w = np.vstack([self.words, other.words])
        return BitMat(self.n_rows + other.n_rows, self.n_cols, w)

    def __xor__(self, other: "BitMat") -> "BitMat":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ValueError("shape mismatch")
        return BitMat(self.n_rows, self.n_cols, self.words ^ other.words)

    def rank(self) -> int:
        w = self.words.copy()
        return len(kernels.echelonize(w, self.n_cols))

    def is_zero(self) -> bool:
        return not self.words.any()

    def to_strings(self) -> list:
        return [self.row(i).to01() for i in range(self.n_rows)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMat)
            and self.n_rows == other.n_rows
            and self.n_cols == other.n_cols
            and bool(np.array_equal(self.words, other.words))
        )

    def __hash__(self) -> int:
        return hash((self.n_rows, self.n_cols, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"BitMat({self.n_rows}x{self.n_cols})"


def rref(m: BitMat) -> tuple:
    """Reduced row echelon form: returns (R, rank, pivot columns)."""
    w = m.words.copy()
    pivots = kernels.echelonize(w, m.n_cols)
    return BitMat(m.n_rows, m.n_cols, w), len(pivots), pivots


def mat_mul(a: BitMat, b: BitMat) -> BitMat:
    return a @ b


def mat_inverse(m: BitMat) -> BitMat:
    """Inverse of a square matrix; raises ValueError if singular."""
    n = m.n_rows
    if m.n_cols != n:
        raise ValueError("matrix is not square")
    aug = _augment(m.words, n, BitMat.identity(n).words, n)
    pivots = kernels.echelonize(aug, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    inv = kernels.gather_columns(aug, 2 * n, np.arange(n, 2 * n, dtype=np.int64))
    return BitMat(n, n, inv)


def _augment(aw: np.ndarray, a_cols: int, bw: np.ndarray, b_cols: int) -> np.ndarray:
    """Pack [A | B] into one writable word array."""
    n_rows = aw.shape[0]
    width = a_cols + b_cols
    out = np.zeros((n_rows, words_for(width)), dtype=np.uint64)
    out[:, : aw.shape[1]] = aw
    if b_cols == 0 or n_rows == 0:
        return out
    if a_cols & 63 == 0:
        out[:, aw.shape[1] : aw.shape[1] + bw.shape[1]] = bw
        return out
    # Shift B left by (a_cols mod 64) bits across word boundaries.
    sh = np.uint64(a_cols & 63)
    co = np.uint64(64) - sh
    base = a_cols >> 6
    lo = bw << sh
    hi = bw >> co
    out[:, base : base + bw.shape[1]] |= lo
    out[:, base + 1 : base + 1 + bw.shape[1]] |= hi[:, : out.shape[1] - base - 1]
    return out


def solve(a: BitMat, b: BitVec) -> Optional[BitVec]:
    """One solution x of a*x = b, or None if the system is inconsistent."""
    if b.n != a.n_rows:
        raise ValueError("right-hand side length must equal the row count")
    col = kernels.transpose(b.words.reshape(1, -1), b.n)
    aug = _augment(a.words, a.n_cols, col, 1)
    pivots = kernels.echelonize(aug, a.n_cols)
    rank = len(pivots)
    w = a.n_cols >> 6
    bit = np.uint64(a.n_cols & 63)
    rhs = (aug[:, w] >> bit) & np.uint64(1)
    if rhs[rank:].any():
        return None
    x = 0
    for r, c in enumerate(pivots):
        if rhs[r]:
            x |= 1 << c
    return BitVec.from_int(a.n_cols, x)


def kernel(m: BitMat) -> "Subspace":
    """Right kernel {x : m*x = 0} as a canonical subspace."""
    r, rank, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.n_cols) if c not in pivot_set]
    rows = []
    for f in free:
        x = 1 << f
        for i, p in enumerate(pivots):
            if r.get(i, f):
                x |= 1 << p
        rows.append(x)
    return Subspace.from_matrix(BitMat.from_ints(rows, m.n_cols))


class Subspace:
    """A subspace of GF(2)^n held as a reduced-row-echelon basis.

    Equal subspaces have identical basis matrices, so == and hash are exact
    membership-free comparisons.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: BitMat, pivots: Sequence[int]):
        # Trusted constructor: basis must already be in RREF with the given
        # pivot columns.  Use from_matrix / from_vectors to canonicalize.
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def from_matrix(cls, m: BitMat) -> "Subspace":
        r, rank, pivots = rref(m)
        return cls(m.n_cols, r.take_rows(range(rank)), pivots)

    @classmethod
    def from_vectors(cls, vecs: Sequence[BitVec], ambient_dim: Optional[int] = None) -> "Subspace":
        if not vecs:
            if ambient_dim is None:
                raise ValueError("ambient_dim is required for an empty vector list")
            return cls.zero(ambient_dim)
        return cls.from_matrix(BitMat.from_rows(vecs))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, BitMat.zeros(0, ambient_dim), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, BitMat.identity(ambient_dim), range(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.n_rows

    def contains(self, v: BitVec) -> bool:
        if v.n != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        x = v.to_int()
        for i, p in enumerate(self.pivots):
            if (x >> p) & 1:
                x ^= self.basis.row(i).to_int()
        return x == 0

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(other.basis.row(i)) for i in range(other.dim))

    def vectors(self) -> Iterator[BitVec]:
        """All 2^dim vectors; only sensible for small dimensions."""
        ints = self.basis.rows_as_ints()
        for mask in range(1 << self.dim):
            x = 0
            m = mask
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                x ^= ints[i]
            yield BitVec.from_int(self.ambient_dim, x)

    def vector_ints(self) -> list:
        return [v.to_int() for v in self.vectors()]

    def sort_key(self) -> tuple:
        """Deterministic ordering key: dimension, then basis row strings."""
        return (self.dim, tuple(self.basis.to_strings()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    if u.ambient_dim != w.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return Subspace.from_matrix(u.basis.vstack(w.basis))


def intersect(u: Subspace, w: Subspace) -> Subspace:
    """Subspace intersection via the two-block (Zassenhaus) elimination."""
    if u.ambient_dim != w.ambient_dim:
        raise ValueError("ambient dimensions differ")
    d = u.ambient_dim
    left = u.basis.vstack(w.basis)
    right = u.basis.vstack(BitMat.zeros(w.dim, d))
    aug = _augment(left.words, d, right.words, d)
    pivots = kernels.echelonize(aug, 2 * d)
    take = [i for i, p in enumerate(pivots) if p >= d]
    if not take:
        return Subspace.zero(d)
    sub = aug[np.asarray(take, dtype=np.intp)]
    rows = kernels.gather_columns(sub, 2 * d, np.arange(d, 2 * d, dtype=np.int64))
    return Subspace.from_matrix(BitMat(len(take), d, rows))


def random_bitmat(rng: random.Random, n_rows: int, n_cols: int) -> BitMat:
    """Uniform random matrix from a seeded Random instance."""
    return BitMat.from_ints(
        [rng.getrandbits(n_cols) if n_cols else 0 for _ in range(n_rows)], n_cols
    )


def random_bitvec(rng: random.Random, n: int) -> BitVec:
    return BitVec.from_int(n, rng.getrandbits(n) if n else 0)


class EchelonBasis:
    """Mutable integer-based echelon accumulator for closure computations."""

    __slots__ = ("rows", "_by_pivot")

    def __init__(self):
        self.rows = []
        self._by_pivot = {}

    def reduce(self, x: int) -> int:
        while x:
            p = (x & -x).bit_length() - 1
            row = self._by_pivot.get(p)
            if row is None:
                return x
            x ^= row
        return 0

    def insert(self, x: int) -> bool:
        """Add a vector; returns True if it enlarged the span."""
        x = self.reduce(x)
        if x == 0:
            return False
        p = (x & -x).bit_length() - 1
        self._by_pivot[p] = x
        self.rows.append(x)
        return True

    def __len__(self) -> int:
        return len(self.rows)

    def to_subspace(self, ambient_dim: int) -> Subspace:
        return Subspace.from_matrix(BitMat.from_ints(self.rows, ambient_dim))
