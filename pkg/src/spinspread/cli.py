"""Command-line front end.

Each subcommand prints a short human-readable report, optionally writes a
JSON artifact carrying a certificate, and exits 0 when every check passed,
1 when a mathematical check failed, and 2 on a usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional, Tuple

from spinspread import __version__

from . import meataxe, serialize
from .forms import is_quadratic_type_tworow
from .perms import CayleyTable, regular_embedding
from .specht import spin_rep
from .spreads import (
    SpreadError,
    a9_spread,
    extend_spread,
    group_action_on_spread,
    imprimitivity_report,
    sigma_spread,
    verify_spread,
)

Check = Tuple[str, bool, str]


def _certificate(
    command: str,
    inputs: Dict[str, object],
    outputs: Dict[str, object],
    checks: List[Check],
    seed: int,
) -> Dict[str, object]:
    return {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "checks": [
            {"name": name, "passed": passed, "details": details}
            for name, passed, details in checks
        ],
        "tool_version": __version__,
        "seed": seed,
    }


def _print_checks(checks: List[Check]) -> bool:
    ok = True
    for name, passed, details in checks:
        status = "pass" if passed else "FAIL"
        print(f"  [{status}] {name}: {details}")
        ok = ok and passed
    return ok


def _coxeter_relation_checks(rep) -> List[Check]:
    """Involutions, braid relations, and distant commuting for s-generators."""
    from .gf2 import BitMat

    eye = BitMat.identity(rep.degree)
    gens = rep.gens
    involutions = all((g @ g) == eye for g in gens)
    braids = all(
        _power(gens[i] @ gens[i + 1], 3, rep.degree) == eye
        for i in range(len(gens) - 1)
    )
    distant = all(
        (gens[i] @ gens[j]) == (gens[j] @ gens[i])
        for i in range(len(gens))
        for j in range(i + 2, len(gens))
    )
    return [
        ("generators_are_involutions", involutions, f"{len(gens)} generators"),
        ("braid_relations_hold", braids, "(s_i s_{i+1})^3 = 1"),
        ("distant_generators_commute", distant, "|i-j| >= 2"),
    ]


def _power(m, k: int, n: int):
    from .gf2 import BitMat

    acc = BitMat.identity(n)
    for _ in range(k):
        acc = acc @ m
    return acc


def cmd_spin(args: argparse.Namespace) -> int:
    n = args.n
    if n < 3:
        print(f"error: --n must be at least 3, got {n}", file=sys.stderr)
        return 2
    rep = spin_rep(n)
    expected = 1 << ((n - 1) // 2)
    checks: List[Check] = [
        (
            "degree_matches_formula",
            rep.degree == expected,
            f"degree {rep.degree}, formula gives {expected}",
        )
    ]
    checks.extend(_coxeter_relation_checks(rep))
    print(f"spin module of S{n}: degree {rep.degree}")
    ok = _print_checks(checks)
    if args.out:
        obj = serialize.rep_to_json(rep)
        obj["certificate"] = _certificate(
            "spin",
            {"n": n},
            {"degree": rep.degree, "group": rep.group, "labels": list(rep.labels)},
            checks,
            args.seed,
        )
        serialize.save(args.out, obj)
        print(f"wrote {args.out}")
    return 0 if ok else 1


def _spread_checks(s) -> List[Check]:
    r = s.report
    bound = (1 << (r.member_dim - 1)) + 1
    return [
        (
            "pairwise_trivial_intersections",
            r.pairwise_trivial,
            f"{r.member_count} members of dimension {r.member_dim}",
        ),
        ("members_totally_singular", r.totally_singular, "all member vectors singular"),
        (
            "set_invariant_under_generators",
            set(r.set_invariant_under) == set(s.labels),
            ", ".join(r.set_invariant_under),
        ),
        (
            "within_counting_bound",
            r.member_count <= bound,
            f"{r.member_count} <= {bound}",
        ),
    ]


def _write_spread(path: str, s, command: str, inputs: Dict[str, object],
                  checks: List[Check], seed: int) -> None:
    obj = serialize.spread_to_json(s)
    obj["certificate"] = _certificate(
        command,
        inputs,
        {
            "member_count": s.report.member_count,
            "member_dim": s.report.member_dim,
            "ambient_dim": s.ambient_dim,
            "complete": s.report.complete,
        },
        checks,
        seed,
    )
    serialize.save(path, obj)
    print(f"wrote {path}")


def cmd_spread(args: argparse.Namespace) -> int:
    m = args.m
    if m < 3:
        print(f"error: --m must be at least 3, got {m}", file=sys.stderr)
        return 2
    if args.extend and m % 4 != 3:
        print(
            f"error: --extend needs m = 3 mod 4, got {m}",
            file=sys.stderr,
        )
        return 2
    if args.extend:
        s = extend_spread(m)
    else:
        s, _, _ = sigma_spread(m)
    r = s.report
    kind = "complete" if r.complete else "partial"
    print(
        f"{kind} spread of {r.member_count} subspaces of dimension "
        f"{r.member_dim} in dimension {s.ambient_dim}"
    )
    checks = _spread_checks(s)
    if args.extend:
        checks.append(
            (
                "extension_is_complete",
                r.complete,
                f"{r.member_count} = 2^{r.member_dim - 1} + 1",
            )
        )
    ok = _print_checks(checks)
    if args.out:
        _write_spread(
            args.out, s, "spread", {"m": m, "extend": args.extend}, checks, args.seed
        )
    return 0 if ok else 1


def cmd_a9(args: argparse.Namespace) -> int:
    s, rep, _ = a9_spread()
    imp = imprimitivity_report(s, rep)
    r = s.report
    print(
        f"complete spread of {r.member_count} subspaces of dimension "
        f"{r.member_dim} in dimension {s.ambient_dim}, covering "
        f"{r.singular_coverage} singular vectors"
    )
    checks = _spread_checks(s)
    checks.extend(
        [
            ("spread_is_complete", r.complete, f"{r.member_count} members"),
            (
                "covers_all_singular_vectors",
                r.singular_coverage == imp.singular_count,
                f"{r.singular_coverage} of {imp.singular_count}",
            ),
            (
                "transitive_on_singular_vectors",
                imp.transitive_on_singular,
                f"one orbit of length {imp.singular_count}",
            ),
            (
                "members_form_imprimitivity_blocks",
                imp.blocks_preserved and imp.block_orbit_size == imp.block_count,
                f"{imp.block_count} blocks of size {imp.block_size}",
            ),
            (
                "block_stabilizer_doubly_transitive",
                imp.block_stabilizer_doubly_transitive,
                f"{imp.pair_orbit_count} orbit on ordered pairs",
            ),
        ]
    )
    ok = _print_checks(checks)
    if args.out:
        obj = serialize.spread_to_json(s)
        obj["certificate"] = _certificate(
            "a9",
            {},
            {
                "member_count": r.member_count,
                "member_dim": r.member_dim,
                "ambient_dim": s.ambient_dim,
                "complete": r.complete,
                "singular_count": imp.singular_count,
                "block_count": imp.block_count,
                "block_size": imp.block_size,
            },
            checks,
            args.seed,
        )
        serialize.save(args.out, obj)
        print(f"wrote {args.out}")
    return 0 if ok else 1


def cmd_quadtype(args: argparse.Namespace) -> int:
    parts = args.parts.split(",")
    if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
        print(
            f"error: --parts expects two comma-separated integers, got {args.parts!r}",
            file=sys.stderr,
        )
        return 2
    a, b = (int(p) for p in parts)
    if not (a > b >= 1 and a - b >= 1):
        print(
            f"error: parts must satisfy a > b >= 1, got ({a},{b})", file=sys.stderr
        )
        return 2
    print("true" if is_quadratic_type_tworow(a, b) else "false")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    s = serialize.json_to_spread(serialize.load(args.spread))
    stored = s.report
    from dataclasses import replace

    recomputed = verify_spread(replace(s, report=None))
    checks = _spread_checks(replace(s, report=recomputed))
    if stored is not None:
        checks.append(
            (
                "stored_report_reproduced",
                stored == recomputed,
                "recomputation matches the stored report",
            )
        )
    ok = _print_checks(checks)
    if args.out:
        obj = serialize.spread_to_json(replace(s, report=recomputed))
        obj["certificate"] = _certificate(
            "verify",
            {"spread": args.spread},
            serialize.report_to_json(recomputed),
            checks,
            args.seed,
        )
        serialize.save(args.out, obj)
        print(f"wrote {args.out}")
    return 0 if ok else 1


def parse_group_spec(spec: str) -> CayleyTable:
    """Build a multiplication table from specs like cyclic:7 or elemabelian:9."""
    kind, _, arg = spec.partition(":")
    if kind == "quaternion8":
        if arg:
            raise ValueError("quaternion8 takes no argument")
        return CayleyTable.quaternion8()
    if kind == "cayley":
        if not arg:
            raise ValueError("cayley needs a path to a JSON multiplication table")
        return CayleyTable.from_json_file(arg)
    if kind in ("cyclic", "elemabelian", "dihedral"):
        if not arg.isdigit() or int(arg) < 1:
            raise ValueError(f"{kind} needs a positive integer argument")
        k = int(arg)
        if kind == "cyclic":
            return CayleyTable.cyclic(k)
        if kind == "dihedral":
            return CayleyTable.dihedral(k)
        if k == 1:
            return CayleyTable.cyclic(1)
        p = next(d for d in range(2, k + 1) if k % d == 0)
        e, rest = 0, k
        while rest % p == 0:
            rest //= p
            e += 1
        if rest != 1:
            raise ValueError(f"elemabelian order {k} is not a prime power")
        return CayleyTable.elementary_abelian(p, e)
    raise ValueError(f"unknown group spec {spec!r}")


def cmd_action(args: argparse.Namespace) -> int:
    s = serialize.json_to_spread(serialize.load(args.spread))
    table = parse_group_spec(args.group)
    perms = regular_embedding(table)
    group_name = s.provenance.get("group")
    if not isinstance(group_name, str):
        raise ValueError("spread file does not record its ambient group")
    from .specht import GroupRep

    rep = GroupRep(
        group=group_name,
        gens=s.generators,
        labels=s.labels,
        perms=tuple(serialize.ambient_perm_gens(group_name)),
    )
    report = group_action_on_spread(s, perms, rep)
    print(
        f"group of order {report.group_order} acting on {report.member_count} members"
    )
    orbit_sizes = [len(o) for o in report.orbits]
    checks: List[Check] = [
        (
            "orbits_partition_members",
            sum(orbit_sizes) == report.member_count,
            f"orbit sizes {orbit_sizes}",
        ),
        (
            "orbit_stabilizer_products",
            all(
                len(o) * st == report.group_order
                for o, st in zip(report.orbits, report.stabilizer_orders)
            ),
            f"stabilizer orders {list(report.stabilizer_orders)}",
        ),
    ]
    ok = _print_checks(checks)
    print(f"  transitive: {str(report.transitive).lower()}")
    print(f"  regular: {str(report.regular).lower()}")
    if args.out:
        obj = {
            "group_order": report.group_order,
            "member_count": report.member_count,
            "orbits": [list(o) for o in report.orbits],
            "stabilizer_orders": list(report.stabilizer_orders),
            "transitive": report.transitive,
            "regular": report.regular,
        }
        obj["certificate"] = _certificate(
            "action",
            {"group": args.group, "spread": args.spread},
            {
                "orbit_sizes": orbit_sizes,
                "transitive": report.transitive,
                "regular": report.regular,
            },
            checks,
            args.seed,
        )
        serialize.save(args.out, obj)
        print(f"wrote {args.out}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinspread",
        description="Spin representations of symmetric groups over GF(2) "
        "and the orthogonal spreads they carry.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=1,
        help="seed for randomized searches (default 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spin", help="construct a spin module and check relations")
    p.add_argument("--n", type=int, required=True, help="number of points, n >= 3")
    p.add_argument("--out", help="write the representation as JSON")
    p.set_defaults(func=cmd_spin)

    p = sub.add_parser("spread", help="build an invariant orthogonal spread")
    p.add_argument("--m", type=int, required=True, help="half-rank, m >= 3")
    p.add_argument(
        "--extend",
        action="store_true",
        help="adjoin the two alternating-group summands (needs m = 3 mod 4)",
    )
    p.add_argument("--out", help="write the spread and certificate as JSON")
    p.set_defaults(func=cmd_spread)

    p = sub.add_parser(
        "a9", help="the complete nine-member spread in dimension eight"
    )
    p.add_argument("--out", help="write the spread and certificate as JSON")
    p.set_defaults(func=cmd_a9)

    p = sub.add_parser(
        "quadtype",
        help="decide from the partition whether an invariant quadratic form exists",
    )
    p.add_argument(
        "--parts", required=True, help="two-row partition as a,b with a > b >= 1"
    )
    p.set_defaults(func=cmd_quadtype)

    p = sub.add_parser("verify", help="re-check a stored spread from its JSON file")
    p.add_argument("spread", help="path to a spread JSON file")
    p.add_argument("--out", help="write the recomputed report as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "action", help="orbit and stabilizer report for a subgroup acting on a spread"
    )
    p.add_argument(
        "--group",
        required=True,
        help="cyclic:k, elemabelian:q, dihedral:k, quaternion8, or cayley:file",
    )
    p.add_argument("--spread", required=True, help="path to a spread JSON file")
    p.add_argument("--out", help="write the orbit report as JSON")
    p.set_defaults(func=cmd_action)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    previous_seed = meataxe.DEFAULT_SEED
    meataxe.DEFAULT_SEED = args.seed
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SpreadError, meataxe.MeatAxeError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    finally:
        meataxe.DEFAULT_SEED = previous_seed


if __name__ == "__main__":
    sys.exit(main())
