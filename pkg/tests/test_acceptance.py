"""Acceptance suite: one test per headline claim, one verdict line each.

Every test funnels through _report, which prints and records a single
"criterion N: PASS/FAIL" line (echoed after the run summary), then asserts.
The checks recompute everything from scratch rather than trusting any
intermediate certificate.
"""

import itertools
import math
import random

import pytest

from spinspread import gf2
from spinspread.forms import (
    QuadForm,
    count_singular,
    invariant_quadratic,
    is_quadratic_type_tworow,
    is_totally_singular,
    perp,
    witt_index,
)
from spinspread.gf2 import BitMat, BitVec, Subspace
from spinspread.meataxe import (
    are_isomorphic,
    dual_rep,
    end_algebra,
    irreducible_socle_component,
    is_irreducible,
    restrict_drop_last,
    restrict_to_alternating,
    split_by_idempotent,
    sub_rep,
)
from spinspread.perms import CayleyTable, regular_embedding
from spinspread.specht import (
    enumerate_tabloids,
    irreducible_quotient,
    spin_rep,
    spin_shape,
    standard_tableaux,
)
from spinspread.spreads import (
    a9_spread,
    extend_spread,
    group_action_on_spread,
    imprimitivity_report,
    max_partial_spread_bruteforce,
    sigma_spread,
    translate_subspace,
)

REPORT_LINES = []


def _report(num, checks, detail):
    """Print and record the verdict line, then fail on any false check."""
    failed = [name for name, ok in checks.items() if not ok]
    status = "PASS" if not failed else "FAIL"
    suffix = detail if not failed else f"failed: {', '.join(failed)}"
    line = f"criterion {num}: {status} - {suffix}"
    print(line)
    REPORT_LINES.append(line)
    assert not failed, line


@pytest.fixture(scope="module")
def spin7():
    return spin_rep(7)


@pytest.fixture(scope="module")
def q7(spin7):
    return invariant_quadratic(spin7)


@pytest.fixture(scope="module")
def sigma3():
    return sigma_spread(3)


@pytest.fixture(scope="module")
def a9():
    return a9_spread()


def test_criterion_1_dimension_pipeline():
    degrees = {n: spin_rep(n).degree for n in (7, 9, 11)}
    # independent oracles for shape (4,3): subsets for tabloids, a direct
    # column-increase scan for standard tableaux
    tabloid_oracle = sum(1 for _ in itertools.combinations(range(7), 3))
    standard_oracle = sum(
        1
        for row2 in itertools.combinations(range(7), 3)
        if all(
            row2[k] > row1[k]
            for row1 in [sorted(set(range(7)) - set(row2))[:3]]
            for k in range(3)
        )
    )
    checks = {
        "spin_degrees": degrees == {7: 8, 9: 16, 11: 32},
        "tabloid_count": len(enumerate_tabloids((4, 3))) == tabloid_oracle == 35,
        "standard_tableaux": len(standard_tableaux(4, 3)) == standard_oracle == 14,
        "binomial_cross_check": math.comb(7, 3) == 35
        and math.comb(7, 3) - math.comb(7, 2) == 14,
        "quotient_dim": irreducible_quotient(4, 3).degree == 8,
    }
    _report(1, checks, f"degrees {degrees}, shape (4,3) dims 35/14/8")


def test_criterion_2_quadratic_type_agreement():
    agreements = 0
    mismatch = []
    for n in range(3, 11):
        for b in range(1, (n - 1) // 2 + 1):
            a = n - b
            built = invariant_quadratic(irreducible_quotient(a, b)) is not None
            if built == is_quadratic_type_tworow(a, b):
                agreements += 1
            else:
                mismatch.append((a, b))
    failures = [
        n for n in range(3, 42) if not is_quadratic_type_tworow(*spin_shape(n))
    ]
    checks = {
        "formula_matches_construction": not mismatch,
        "spin_failures_exactly_5_and_6": failures == [5, 6],
    }
    _report(
        2,
        checks,
        f"{agreements} partitions agree, spin shapes fail only at n={failures}",
    )


def test_criterion_3_form_certification(spin7, q7):
    rng = random.Random(1)
    pairs = 1000
    polar_ok = all(
        q7.evaluate(u ^ v) == (q7.evaluate(u) ^ q7.evaluate(v) ^ q7.bilinear(u, v))
        for u, v in (
            (gf2.random_bitvec(rng, 8), gf2.random_bitvec(rng, 8))
            for _ in range(pairs)
        )
    )
    checks = {
        "form_exists": q7 is not None,
        "nondegenerate": q7.is_nondegenerate(),
        "witt_index_4": witt_index(q7) == 4,
        "singular_count_135": count_singular(q7) == 135,
        "polarization_identity": polar_ok,
    }
    _report(3, checks, f"Witt index 4, 135 singular, {pairs} seeded pairs")


def test_criterion_4_restriction_socles():
    checks = {}
    for m in (3, 4, 5):
        rep = spin_rep(2 * m + 1)
        q = invariant_quadratic(rep)
        res = restrict_drop_last(rep)
        alg = end_algebra(res)
        eye = BitMat.identity(res.degree)
        x = next(b for b in alg.basis if b != eye)
        eta = x if (x @ x).is_zero() else x ^ eye
        socle = irreducible_socle_component(res)
        checks[f"m{m}_end_dim_2"] = alg.dim == 2
        checks[f"m{m}_nilpotent_witness"] = (
            not eta.is_zero() and (eta @ eta).is_zero()
        )
        checks[f"m{m}_socle_dim"] = socle.dim == 1 << (m - 1)
        checks[f"m{m}_socle_is_nilpotent_image"] = (
            Subspace.from_matrix(eta.transpose()) == socle
        )
        checks[f"m{m}_totally_singular"] = is_totally_singular(q, socle)
        checks[f"m{m}_self_perpendicular"] = perp(q, socle) == socle
        checks[f"m{m}_socle_is_smaller_spin"] = are_isomorphic(
            sub_rep(res, socle), spin_rep(2 * m)
        )
    _report(4, checks, "m=3,4,5: End dim 2, socle 2^(m-1) = spin of S_2m")


def test_criterion_5_symmetric_spreads():
    checks = {}
    for m in (3, 4, 5):
        s, rep, _ = sigma_spread(m)
        r = s.report
        checks[f"m{m}_member_count"] = (
            len(s.members) == len(set(s.members)) == 2 * m + 1
        )
        checks[f"m{m}_pairwise_trivial"] = r.pairwise_trivial
        checks[f"m{m}_totally_singular"] = r.totally_singular
        checks[f"m{m}_invariant"] = r.set_invariant_under == rep.labels
    _report(5, checks, "m=3,4,5: 7/9/11 members, certified invariant")


def _summand_checks(m, tag, checks):
    rep = spin_rep(2 * m + 1)
    u1, u2, r1, r2 = split_by_idempotent(restrict_to_alternating(rep))
    checks[f"{tag}_irreducible"] = is_irreducible(r1) and is_irreducible(r2)
    checks[f"{tag}_not_isomorphic"] = not are_isomorphic(r1, r2)
    checks[f"{tag}_swapped_by_odd"] = (
        translate_subspace(u1, rep.gens[0]) == u2
        and translate_subspace(u2, rep.gens[0]) == u1
    )
    checks[f"{tag}_not_self_dual"] = not are_isomorphic(r1, dual_rep(r1))
    checks[f"{tag}_dual_pair"] = are_isomorphic(dual_rep(r1), r2)
    return extend_spread(m)


def test_criterion_6_extension_m3():
    checks = {}
    s = _summand_checks(3, "m3", checks)
    r = s.report
    checks["m3_member_count"] = len(s.members) == 9
    checks["m3_complete"] = r.complete
    checks["m3_coverage"] = r.singular_coverage == 9 * 15 == 135
    _report(6, checks, "m=3: two dual summands, complete 9-spread covering 135")


@pytest.mark.large
def test_criterion_6_extension_m7_large():
    checks = {}
    s = _summand_checks(7, "m7", checks)
    checks["m7_member_count"] = len(s.members) == 17
    checks["m7_invariant"] = s.report.set_invariant_under == s.labels
    _report("6 (large)", checks, "m=7: 17 members of dimension 64 certified")


def test_criterion_7_contrast_m4():
    a9rest = restrict_to_alternating(spin_rep(9))
    u1, u2, r1, r2 = split_by_idempotent(a9rest)
    refused = False
    try:
        extend_spread(4)
    except ValueError:
        refused = True
    checks = {
        "summand_dims_8_8": (u1.dim, u2.dim) == (8, 8),
        "both_self_dual": are_isomorphic(r1, dual_rep(r1))
        and are_isomorphic(r2, dual_rep(r2)),
        "extension_refuses": refused,
    }
    _report(7, checks, "m=4: both 8-dim summands self-dual, extension refused")


def test_criterion_8_alternating_nine(a9):
    s, rep, _ = a9
    imp = imprimitivity_report(s, rep)
    u_rep = sub_rep(restrict_drop_last(rep), s.members[0])
    checks = {
        "nine_members_dim_4": len(s.members) == 9
        and all(w.dim == 4 for w in s.members),
        "complete": s.report.complete,
        "u_irreducible_down_to_a7": is_irreducible(u_rep)
        and is_irreducible(restrict_drop_last(u_rep)),
        "transitive_on_135": imp.singular_count == 135
        and imp.transitive_on_singular,
        "nine_blocks": imp.block_count == 9 and imp.blocks_preserved,
        "block_orbit_9": imp.block_orbit_size == 9,
        "doubly_transitive_on_15": imp.block_size == 15
        and imp.block_stabilizer_doubly_transitive,
    }
    _report(8, checks, "9 members, blocks of 15, stabilizer doubly transitive")


def test_criterion_9_group_actions(sigma3, a9):
    s7, rep7, _ = sigma3
    s9, rep9, _ = a9

    def act(spread, rep, table):
        return group_action_on_spread(spread, regular_embedding(table), rep)

    c7 = act(s7, rep7, CayleyTable.cyclic(7))
    c6 = act(s7, rep7, CayleyTable.cyclic(6))
    c9 = act(s9, rep9, CayleyTable.cyclic(9))
    c33 = act(s9, rep9, CayleyTable.elementary_abelian(3, 2))
    order8 = [
        act(s9, rep9, t)
        for t in (
            CayleyTable.elementary_abelian(2, 3),
            CayleyTable.direct_product(CayleyTable.cyclic(4), CayleyTable.cyclic(2)),
            CayleyTable.dihedral(4),
            CayleyTable.quaternion8(),
        )
    ]
    small = {k: act(s7, rep7, CayleyTable.cyclic(k)) for k in (3, 4, 5)}
    checks = {
        "c7_regular_on_7": c7.regular and c7.member_count == 7,
        "c6_fixes_one_regular_on_6": sorted(len(o) for o in c6.orbits) == [1, 6]
        and sorted(c6.stabilizer_orders) == [1, 6],
        "c9_regular_on_9": c9.regular,
        "c3xc3_regular_on_9": c33.regular,
        "order8_fix_one_regular_on_8": all(
            sorted(len(o) for o in r.orbits) == [1, 8]
            and sorted(r.stabilizer_orders) == [1, 8]
            for r in order8
        ),
        "small_groups_free_suborbit": all(
            any(len(o) == k and st == 1
                for o, st in zip(r.orbits, r.stabilizer_orders))
            for k, r in small.items()
        ),
    }
    _report(9, checks, "C7, C6, order 9 and order 8 groups act as predicted")


def test_criterion_10_bruteforce_bounds(sigma3, a9):
    small_max = max_partial_spread_bruteforce(QuadForm.hyperbolic(2))
    big_max = max_partial_spread_bruteforce(QuadForm.hyperbolic(3))
    reports = [sigma3[0].report, a9[0].report, extend_spread(3).report]
    checks = {
        "dim4_max_3": small_max == 3,
        "dim6_max_2": big_max == 2,
        "bound_in_reports": all(
            r.member_count <= (1 << (r.member_dim - 1)) + 1 for r in reports
        ),
    }
    _report(10, checks, "exhaustive maxima 3 (dim 4) and 2 (dim 6), bounds hold")


def test_criterion_11_kernel_properties():
    rng = random.Random(1)
    instances = 500
    rank_nullity = zassenhaus = idempotent = True
    for _ in range(instances):
        rows, cols = rng.randrange(0, 18), rng.randrange(1, 18)
        a = gf2.random_bitmat(rng, rows, cols)
        r, rank, _ = gf2.rref(a)
        rank_nullity &= rank + gf2.kernel(a).dim == cols
        r2, rank2, _ = gf2.rref(r)
        idempotent &= r2 == r and rank2 == rank
        amb = rng.randrange(1, 14)
        u = Subspace.from_matrix(gf2.random_bitmat(rng, rng.randrange(0, 8), amb))
        w = Subspace.from_matrix(gf2.random_bitmat(rng, rng.randrange(0, 8), amb))
        total = gf2.subspace_sum(u, w).dim + gf2.intersect(u, w).dim
        zassenhaus &= total == u.dim + w.dim
    checks = {
        "rank_nullity": rank_nullity,
        "zassenhaus_dimension_identity": zassenhaus,
        "rref_idempotent": idempotent,
    }
    _report(11, checks, f"{instances} seeded instances per property")
