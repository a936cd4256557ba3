"""Permutations, Coxeter generators, coset representatives, and small group
tables with regular embeddings.

Points are 0-based internally; cycle notation in parsing and printing is
1-based, matching the usual convention.  Products compose right-to-left:
(p * q)(x) = p(q(x)).
"""

from __future__ import annotations

import json
from typing import Iterable, List, Optional, Sequence, Tuple


class Perm:
    """A permutation of {0, ..., n-1} stored by its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images are not a permutation")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Perm":
        return cls.from_cycles(n, [(i, j)])

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build from 0-based cycles."""
        images = list(range(n))
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise ValueError("repeated point in cycle")
            for k, pt in enumerate(cyc):
                images[pt] = cyc[(k + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Perm(tuple(self.images[other.images[i]] for i in range(self.degree)))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, im in enumerate(self.images):
            inv[im] = i
        return Perm(inv)

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def is_identity(self) -> bool:
        return all(im == i for i, im in enumerate(self.images))

    def cycle_string(self) -> str:
        """1-based cycle notation, e.g. "(1 2)(3 4 5)"."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Perm({self.cycle_string()}, n={self.degree})"


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return p * q


def parity(p: Perm) -> int:
    """0 for even, 1 for odd."""
    return 0 if p.is_even() else 1


def pad_to_degree(p: Perm, n: int) -> Perm:
    """Extend with fixed points up to degree n."""
    if n < p.degree:
        raise ValueError("cannot shrink a permutation")
    return Perm(p.images + tuple(range(p.degree, n)))


def coxeter_gens(n: int) -> List[Perm]:
    """Adjacent transpositions (i, i+1) generating the symmetric group."""
    if n < 2:
        raise ValueError("need at least two points")
    return [Perm.transposition(n, i, i + 1) for i in range(n - 1)]


def alternating_gens(n: int) -> List[Perm]:
    """Products s_1*s_i (first Coxeter generator times each later one)."""
    if n < 3:
        raise ValueError("need at least three points")
    s = coxeter_gens(n)
    return [s[0] * s[i] for i in range(1, n - 1)]


def coset_reps_point_stabilizer(n: int, even_only: bool = False) -> List[Perm]:
    """Representatives for cosets of the stabilizer of the last point.

    The identity comes first.  With even_only the representatives are the
    identity and 3-cycles, giving coset representatives inside the
    alternating group.
    """
    reps = [Perm.identity(n)]
    if not even_only:
        for i in range(n - 1):
            reps.append(Perm.transposition(n, i, n - 1))
        return reps
    if n < 4:
        raise ValueError("even representatives need at least four points")
    for i in range(n - 1):
        j = 0 if i != 0 else 1
        reps.append(Perm.from_cycles(n, [(n - 1, i, j)]))
    return reps


def coxeter_word(p: Perm) -> List[int]:
    """Indices i1..ik with p = s_{i1} * ... * s_{ik} (adjacent transpositions).

    Produced by bubble-sorting the image list, so the word length is at most
    n(n-1)/2 and the decomposition is deterministic.
    """
    arr = list(p.images)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                word.append(i)
                changed = True
    word.reverse()
    return word


def alternating_word(p: Perm) -> List[int]:
    """Decompose an even permutation over the alternating generators.

    Token k >= 0 means generator k (that is s_1*s_{k+2} in 1-based Coxeter
    numbering); token k < 0 means the inverse of generator (-k - 1).
    """
    if not p.is_even():
        raise ValueError("permutation is odd; it has no alternating word")
    w = coxeter_word(p)
    tokens: List[int] = []
    for a, b in zip(w[0::2], w[1::2]):
        if a == b:
            continue
        if a != 0:
            tokens.append(-(a - 1) - 1)
        if b != 0:
            tokens.append(b - 1)
    return tokens


def closure(gens: Sequence[Perm], limit: int = 10_000_000) -> List[Perm]:
    """All elements generated by gens (breadth-first products)."""
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].degree
    seen = {Perm.identity(n)}
    frontier = [Perm.identity(n)]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = g * p
                if q not in seen:
                    seen.add(q)
                    new.append(q)
                    if len(seen) > limit:
                        raise RuntimeError("closure exceeded the element limit")
        frontier = new
    return sorted(seen, key=lambda p: p.images)


class GroupTableError(ValueError):
    """A multiplication table violating a group axiom; .axiom names it."""

    def __init__(self, axiom: str, detail: str = ""):
        self.axiom = axiom
        msg = f"not a group table: {axiom} fails"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class CayleyTable:
    """A finite group as a multiplication table.

    table[a][b] is the index of the product a*b; element 0 is the identity.
    """

    __slots__ = ("order", "table")

    def __init__(self, table: Sequence[Sequence[int]], check: bool = True):
        self.table = [list(row) for row in table]
        self.order = len(self.table)
        if check:
            self.validate()

    def validate(self) -> None:
        n = self.order
        if any(len(row) != n for row in self.table):
            raise GroupTableError("shape", "table is not square")
        rng = range(n)
        for row in self.table:
            for v in row:
                if not (isinstance(v, int) and 0 <= v < n):
                    raise GroupTableError("shape", f"entry {v!r} out of range")
        if any(self.table[0][b] != b for b in rng) or any(
            self.table[a][0] != a for a in rng
        ):
            raise GroupTableError("identity", "element 0 is not an identity")
        for a in rng:
            if sorted(self.table[a]) != list(rng):
                raise GroupTableError("latin", f"row {a} is not a permutation")
            if sorted(self.table[b][a] for b in rng) != list(rng):
                raise GroupTableError("latin", f"column {a} is not a permutation")
        for a in rng:
            for b in rng:
                ab = self.table[a][b]
                for c in rng:
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise GroupTableError(
                            "associativity", f"(a,b,c)=({a},{b},{c})"
                        )

    @classmethod
    def cyclic(cls, n: int) -> "CayleyTable":
        if n < 1:
            raise ValueError("order must be positive")
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], check=False)

    @classmethod
    def elementary_abelian(cls, p: int, k: int) -> "CayleyTable":
        """(Z/p)^k with elements indexed by base-p digit strings."""
        if p < 2 or k < 1:
            raise ValueError("need a prime p >= 2 and k >= 1")
        if any(p % d == 0 for d in range(2, p)):
            raise ValueError("p must be prime")
        n = p**k

        def add(a: int, b: int) -> int:
            out = 0
            mult = 1
            for _ in range(k):
                out += ((a % p + b % p) % p) * mult
                a //= p
                b //= p
                mult *= p
            return out

        return cls([[add(a, b) for b in range(n)] for a in range(n)], check=False)

    @classmethod
    def dihedral(cls, k: int) -> "CayleyTable":
        """Symmetries of the k-gon, order 2k; index f*k + r encodes flip^f rot^r."""
        if k < 2:
            raise ValueError("need k >= 2")

        def mul(x: int, y: int) -> int:
            f1, r1 = divmod(x, k)
            f2, r2 = divmod(y, k)
            r = (r2 + (k - r1 if f2 else r1)) % k
            return (f1 ^ f2) * k + r

        n = 2 * k
        return cls([[mul(a, b) for b in range(n)] for a in range(n)], check=False)

    @classmethod
    def quaternion8(cls) -> "CayleyTable":
        """The quaternion group {1,-1,i,-i,j,-j,k,-k} in that element order."""
        # axis 0 is the real unit; (sign, axis) has index 2*axis + sign.
        mul_axis = {
            (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
            (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
            (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
            (1, 2): (0, 3), (2, 1): (1, 3),
            (2, 3): (0, 1), (3, 2): (1, 1),
            (3, 1): (0, 2), (1, 3): (1, 2),
        }

        def mul(x: int, y: int) -> int:
            ax, sx = divmod(x, 2)
            ay, sy = divmod(y, 2)
            s, a = mul_axis[(ax, ay)]
            return 2 * a + (sx ^ sy ^ s)

        return cls([[mul(a, b) for b in range(8)] for a in range(8)], check=False)

    @classmethod
    def direct_product(cls, t1: "CayleyTable", t2: "CayleyTable") -> "CayleyTable":
        n1, n2 = t1.order, t2.order
        table = []
        for a in range(n1 * n2):
            a1, a2 = divmod(a, n2)
            row = []
            for b in range(n1 * n2):
                b1, b2 = divmod(b, n2)
                row.append(t1.table[a1][b1] * n2 + t2.table[a2][b2])
            table.append(row)
        return cls(table, check=False)

    @classmethod
    def from_json_file(cls, path: str) -> "CayleyTable":
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, list):
            raise GroupTableError("shape", "JSON root must be an array of arrays")
        return cls(data, check=True)

    def __eq__(self, other) -> bool:
        return isinstance(other, CayleyTable) and self.table == other.table


def regular_embedding(table: CayleyTable) -> List[Perm]:
    """Left-translation permutations of the element set, one per element.

    The image list is indexed like the table, so perms[a] maps x to a*x; the
    identity element gives the identity permutation.
    """
    table.validate()
    return [Perm(row) for row in table.table]
