"""Group-invariant partial and complete orthogonal spreads over GF(2).

A spread here is a family of totally singular subspaces of a quadratic
space, any two of which meet only in zero.  The constructors translate one
invariant subspace around by coset representatives and certify the outcome
from scratch; the verifier recomputes every certificate so stored spreads
can be rechecked independently.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

from . import forms, gf2, kernels, meataxe
from .forms import QuadForm
from .gf2 import BitMat, Subspace
from .meataxe import (
    MeatAxeError,
    are_isomorphic,
    column_space,
    dual_rep,
    hom_space,
    irreducible_socle_component,
    is_irreducible,
    matrix_of_perm,
    restrict_drop_last,
    restrict_to_alternating,
    split_by_idempotent,
    sub_rep,
)
from .perms import Perm, coset_reps_point_stabilizer, pad_to_degree
from .specht import GroupRep, spin_rep


class SpreadError(RuntimeError):
    """A spread construction or certification that failed."""


@dataclass(frozen=True)
class SpreadReport:
    """Outcome of recomputing a spread's certificates.

    set_invariant_under lists the generator labels whose translation maps
    the member set onto itself; complete compares the member count with the
    counting bound 2^(r-1) + 1 for members of dimension r.
    """

    member_count: int
    member_dim: int
    pairwise_trivial: bool
    totally_singular: bool
    set_invariant_under: Tuple[str, ...]
    complete: bool
    singular_coverage: Optional[int]


@dataclass(frozen=True)
class Spread:
    """A family of totally singular subspaces with its acting group.

    Members are kept in canonical reduced-row-echelon bases, so membership
    and distinctness are plain equality.  The generator matrices and labels
    pin down the group whose translations must preserve the member set.
    """

    ambient_dim: int
    members: Tuple[Subspace, ...]
    form: QuadForm
    generators: Tuple[BitMat, ...]
    labels: Tuple[str, ...]
    provenance: Dict[str, object]
    report: Optional[SpreadReport] = None


def translate_subspace(w: Subspace, g: BitMat) -> Subspace:
    """Canonical basis of {g.v : v in W} under the column-vector action."""
    if g.n_cols != w.ambient_dim or g.n_rows != g.n_cols:
        raise ValueError("matrix does not act on the ambient space")
    img = BitMat(w.dim, g.n_rows, kernels.mul_bt(w.basis.words, g.words, g.n_cols))
    return Subspace.from_matrix(img)


def verify_spread(s: Spread) -> SpreadReport:
    """Recompute every certificate of a spread from its stored data."""
    members = s.members
    count = len(members)
    dim = members[0].dim if members else 0
    pairwise = len(set(members)) == count and all(w.dim == dim for w in members)
    if pairwise:
        for i in range(count):
            for j in range(i + 1, count):
                if gf2.intersect(members[i], members[j]).dim != 0:
                    pairwise = False
    singular = all(forms.is_totally_singular(s.form, w) for w in members)
    lookup = set(members)
    invariant_under = tuple(
        lab
        for g, lab in zip(s.generators, s.labels)
        if all(translate_subspace(w, g) in lookup for w in members)
    )
    complete = dim >= 1 and count == (1 << (dim - 1)) + 1
    coverage = None
    if s.ambient_dim <= 24:
        pts = set()
        for w in members:
            pts.update(v for v in w.vector_ints() if v)
        coverage = len(pts)
    if (
        pairwise
        and singular
        and s.form.is_nondegenerate()
        and dim == forms.witt_index(s.form)
    ):
        # counting bound for pairwise-trivial maximal totally singular families
        assert count <= (1 << (dim - 1)) + 1, "spread exceeds the counting bound"
    return SpreadReport(
        member_count=count,
        member_dim=dim,
        pairwise_trivial=pairwise,
        totally_singular=singular,
        set_invariant_under=invariant_under,
        complete=complete,
        singular_coverage=coverage,
    )


def _certify(s: Spread, expect_complete: Optional[bool] = None) -> Spread:
    """Attach a freshly computed report, aborting on any failed predicate."""
    rep = verify_spread(s)
    if not rep.pairwise_trivial:
        raise SpreadError("pairwise intersections are not all trivial")
    if not rep.totally_singular:
        raise SpreadError("some member is not totally singular")
    if rep.set_invariant_under != s.labels:
        missing = set(s.labels) - set(rep.set_invariant_under)
        raise SpreadError(f"member set moves under generators {sorted(missing)}")
    if expect_complete is not None and rep.complete != expect_complete:
        raise SpreadError("completeness came out other than expected")
    if rep.complete and rep.singular_coverage is not None:
        if rep.singular_coverage != forms.count_singular(s.form):
            raise SpreadError("complete spread does not cover the singular vectors")
    return replace(s, report=rep)


def sigma_spread(m: int) -> Tuple[Spread, GroupRep, QuadForm]:
    """The 2m+1 translates of the restriction socle, for the symmetric group.

    Builds the spin module of S_{2m+1}, its invariant quadratic form, and
    the socle U of the restriction to S_{2m}; the translates of U by coset
    representatives of S_{2m} form the spread.
    """
    if m < 3:
        raise ValueError("spin module not of quadratic type")
    n = 2 * m + 1
    rep = spin_rep(n)
    q = forms.invariant_quadratic(rep)
    if q is None:
        raise SpreadError("no invariant quadratic form on the spin module")
    u = irreducible_socle_component(restrict_drop_last(rep))
    if u.dim != 1 << (m - 1):
        raise SpreadError(f"socle has dimension {u.dim}, expected {1 << (m - 1)}")
    if not forms.is_totally_singular(q, u):
        raise SpreadError("socle is not totally singular")
    if forms.perp(q, u) != u:
        raise SpreadError("socle is not its own polar perpendicular")
    reps = coset_reps_point_stabilizer(n)
    members = tuple(translate_subspace(u, matrix_of_perm(rep, p)) for p in reps)
    prov: Dict[str, object] = {
        "constructor": "sigma_spread",
        "m": m,
        "group": rep.group,
        "coset_reps": [p.cycle_string() for p in reps],
    }
    s = Spread(rep.degree, members, q, rep.gens, rep.labels, prov)
    return _certify(s), rep, q


def extend_spread(m: int) -> Spread:
    """Adjoin the two alternating-group summands to the symmetric spread.

    Only applies when m = 3 mod 4: then the restriction to A_{2m+1} splits
    into two non-isomorphic irreducible halves, each totally singular, which
    every odd generator swaps.  The result has 2m+3 members.
    """
    if m < 3 or m % 4 != 3:
        raise ValueError("extension applies only when m is 3 mod 4")
    base, rep, q = sigma_spread(m)
    u1, u2, r1, r2 = split_by_idempotent(restrict_to_alternating(rep))
    for name, u, r in (("U1", u1, r1), ("U2", u2, r2)):
        if not is_irreducible(r):
            raise SpreadError(f"summand {name} is not irreducible")
        if not forms.is_totally_singular(q, u):
            raise SpreadError(f"summand {name} is not totally singular")
    if are_isomorphic(r1, r2):
        raise SpreadError("the two summands are isomorphic")
    if are_isomorphic(r1, dual_rep(r1)) or are_isomorphic(r2, dual_rep(r2)):
        raise SpreadError("a summand is self-dual")
    if not are_isomorphic(dual_rep(r1), r2):
        raise SpreadError("duality does not exchange the summands")
    swapping = []
    for g, lab in zip(rep.gens, rep.labels):
        if translate_subspace(u1, g) == u2 and translate_subspace(u2, g) == u1:
            swapping.append(lab)
    if tuple(swapping) != rep.labels:
        raise SpreadError("an odd generator fails to swap the two summands")
    prov: Dict[str, object] = dict(base.provenance)
    prov["constructor"] = "extend_spread"
    prov["odd_generators_swap"] = swapping
    s = Spread(
        rep.degree,
        base.members + (u1, u2),
        q,
        rep.gens,
        rep.labels,
        prov,
    )
    return _certify(s)


def a9_spread() -> Tuple[Spread, GroupRep, QuadForm]:
    """A complete spread of nine 4-dimensional subspaces for A9.

    The spin module of S9 restricted to A9 splits into two 8-dimensional
    halves; the lex-first half carries an invariant quadratic form, and its
    restriction to A8 exposes a 4-dimensional totally singular irreducible
    submodule U whose nine even-coset translates tile the singular vectors.
    """
    w1, w2, rep, _ = split_by_idempotent(restrict_to_alternating(spin_rep(9)))
    q = forms.invariant_quadratic(rep)
    if q is None:
        raise SpreadError("no invariant quadratic form on the chosen summand")
    res = restrict_drop_last(rep)
    ends = hom_space(res, res)
    if ends.dim == 2:
        ident = BitMat.identity(res.degree)
        x = meataxe._nonscalar_end(ends, res.degree)
        a, b = meataxe._square_decomposition(x)
        if b == 1 and a == 0:
            structure = "split"
            candidates = sorted(
                [column_space(x), column_space(x ^ ident)], key=Subspace.sort_key
            )
        elif b == 0:
            structure = "uniserial"
            eta = x if a == 0 else x ^ ident
            candidates = [column_space(eta)]
        else:
            raise SpreadError("restriction exposes no proper submodule")
    elif ends.dim == 1:
        # scalar endomorphisms still allow a uniserial module whose socle
        # and head are non-isomorphic; hunt the submodule directly
        sub = meataxe.proper_submodule(res)
        if sub is None:
            raise SpreadError("restriction is irreducible, no proper submodule")
        structure = "uniserial"
        candidates = [sub]
    else:
        raise SpreadError(
            f"restriction has endomorphism dimension {ends.dim}, expected 1 or 2"
        )
    u = next(
        (c for c in candidates if forms.is_totally_singular(q, c)), None
    )
    if u is None:
        raise SpreadError("no irreducible submodule is totally singular")
    if u.dim != 4:
        raise SpreadError(f"submodule has dimension {u.dim}, expected 4")
    u_rep = sub_rep(res, u)
    if not is_irreducible(u_rep):
        raise SpreadError("the submodule is not irreducible over A8")
    if not is_irreducible(restrict_drop_last(u_rep)):
        raise SpreadError("the submodule does not stay irreducible over A7")
    reps = coset_reps_point_stabilizer(9, even_only=True)
    members = tuple(translate_subspace(u, matrix_of_perm(rep, p)) for p in reps)
    prov: Dict[str, object] = {
        "constructor": "a9_spread",
        "group": rep.group,
        "summand_choice": "lex-first",
        "a8_restriction": structure,
        "coset_reps": [p.cycle_string() for p in reps],
    }
    s = Spread(rep.degree, members, q, rep.gens, rep.labels, prov)
    return _certify(s, expect_complete=True), rep, q


@dataclass(frozen=True)
class ActionReport:
    """Orbit data for a permutation group acting on spread members.

    Orbits are listed by their smallest member index; stabilizer orders are
    per orbit (they agree along an orbit).  The action is regular when it is
    transitive with trivial stabilizers.
    """

    group_order: int
    member_count: int
    orbits: Tuple[Tuple[int, ...], ...]
    stabilizer_orders: Tuple[int, ...]
    transitive: bool
    regular: bool


def group_action_on_spread(
    s: Spread, perms: Sequence[Perm], rep: GroupRep
) -> ActionReport:
    """Act on the members by every element of a permutation group.

    perms must list all the group's elements, living inside the ambient
    symmetric or alternating group of rep (smaller degrees are padded with
    fixed points).  Raises when some translate leaves the member set.
    """
    if rep.perms is None:
        raise ValueError("ambient representation carries no permutations")
    npts = rep.perms[0].degree
    lookup = {w: i for i, w in enumerate(s.members)}
    count = len(s.members)
    images: List[Tuple[int, ...]] = []
    for p in perms:
        g = matrix_of_perm(rep, pad_to_degree(p, npts))
        row = []
        for w in s.members:
            img = translate_subspace(w, g)
            if img not in lookup:
                raise SpreadError("set not invariant under given subgroup")
            row.append(lookup[img])
        images.append(tuple(row))
    seen = [False] * count
    orbits = []
    stab_orders = []
    for start in range(count):
        if seen[start]:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for row in images:
                j = row[i]
                if j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
        for i in orbit:
            seen[i] = True
        orbits.append(tuple(sorted(orbit)))
        stab_orders.append(sum(1 for row in images if row[start] == start))
    transitive = len(orbits) == 1
    regular = transitive and all(o == 1 for o in stab_orders)
    return ActionReport(
        group_order=len(images),
        member_count=count,
        orbits=tuple(orbits),
        stabilizer_orders=tuple(stab_orders),
        transitive=transitive,
        regular=regular,
    )


@dataclass(frozen=True)
class ImprimitivityReport:
    """Block structure of the group action on the nonzero singular vectors."""

    singular_count: int
    transitive_on_singular: bool
    block_count: int
    block_size: int
    blocks_preserved: bool
    block_orbit_size: int
    pair_orbit_count: int
    block_stabilizer_doubly_transitive: bool


def imprimitivity_report(s: Spread, rep: GroupRep) -> ImprimitivityReport:
    """How the spread's group permutes singular vectors in blocks.

    The members' nonzero vectors must partition the singular vectors; the
    generators are checked to permute those blocks, and the stabilizer of
    the first block (generated by all but the last generator) is tested for
    double transitivity on the block by an orbit count on ordered pairs.
    """
    if s.ambient_dim > 16:
        raise ValueError("singular-vector enumeration is for small dimensions")
    if s.report is None or not s.report.complete:
        raise ValueError("needs a certified complete spread")
    singular = forms.singular_vectors(s.form)
    sing_set = set(singular)
    maps = []
    for g in s.generators:
        img = {
            v: g.mul_vec(gf2.BitVec.from_int(s.ambient_dim, v)).to_int()
            for v in singular
        }
        if set(img.values()) != sing_set:
            raise SpreadError("a generator does not preserve the singular vectors")
        maps.append(img)
    orbit = {singular[0]}
    frontier = [singular[0]]
    while frontier:
        v = frontier.pop()
        for img in maps:
            w = img[v]
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    transitive = orbit == sing_set

    blocks = [frozenset(v for v in w.vector_ints() if v) for w in s.members]
    block_index = {b: i for i, b in enumerate(blocks)}
    preserved = True
    block_maps = []
    for img in maps:
        row = []
        for b in blocks:
            image = frozenset(img[v] for v in b)
            if image not in block_index:
                preserved = False
                break
            row.append(block_index[image])
        if not preserved:
            break
        block_maps.append(row)
    block_orbit = {0}
    if preserved:
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for row in block_maps:
                j = row[i]
                if j not in block_orbit:
                    block_orbit.add(j)
                    frontier.append(j)

    # stabilizer of the first block: all generators but the last fix the
    # last point, hence fix U; sweep its ordered pairs of distinct vectors
    stab_maps = maps[:-1]
    first = sorted(blocks[0])
    for img in stab_maps:
        if frozenset(img[v] for v in blocks[0]) != blocks[0]:
            raise SpreadError("claimed stabilizer generators move the first block")
    pairs = {(u, v) for u in first for v in first if u != v}
    pair_orbits = 0
    unseen = set(pairs)
    while unseen:
        pair_orbits += 1
        start = min(unseen)
        orb = {start}
        frontier = [start]
        while frontier:
            u, v = frontier.pop()
            for img in stab_maps:
                nxt = (img[u], img[v])
                if nxt not in orb:
                    orb.add(nxt)
                    frontier.append(nxt)
        unseen -= orb
    return ImprimitivityReport(
        singular_count=len(singular),
        transitive_on_singular=transitive,
        block_count=len(blocks),
        block_size=len(blocks[0]),
        blocks_preserved=preserved,
        block_orbit_size=len(block_orbit),
        pair_orbit_count=pair_orbits,
        block_stabilizer_doubly_transitive=pair_orbits == 1,
    )


def max_partial_spread_bruteforce(q: QuadForm) -> int:
    """Largest pairwise-trivial family of maximal totally singular subspaces,
    by exhaustive enumeration and maximum clique.  Only for dimension <= 6."""
    if q.n > 6:
        raise ValueError("dimension too large for exhaustive search")
    r = forms.witt_index(q)
    singular = forms.singular_vectors(q)
    sing_set = set(singular)
    level = {frozenset((0, v)) for v in singular}
    for _ in range(r - 1):
        grown = set()
        for span in level:
            for v in singular:
                if v in span:
                    continue
                new = span | {x ^ v for x in span}
                if all(x in sing_set or x == 0 for x in new):
                    grown.add(frozenset(new))
        level = grown
    nodes = sorted(level, key=sorted)
    adj = [
        [i != j and (a & b) == {0} for j, b in enumerate(nodes)]
        for i, a in enumerate(nodes)
    ]
    best = 0

    def grow(size: int, cands: List[int]) -> None:
        nonlocal best
        if size > best:
            best = size
        for k, c in enumerate(cands):
            if size + len(cands) - k <= best:
                return
            grow(size + 1, [d for d in cands[k + 1 :] if adj[c][d]])

    grow(0, list(range(len(nodes))))
    return best
