"""JSON encoding for representations, forms, spreads, and reports.

Vectors are written as strings of '0' and '1' with coordinate 0 first, and
matrices as lists of such row strings.  Dumps sort their keys, so equal
objects serialize to identical bytes.
"""

from __future__ import annotations

import json
from typing import Dict, List, Optional

from .forms import QuadForm
from .gf2 import BitMat, BitVec, Subspace
from .perms import Perm, alternating_gens, coxeter_gens
from .specht import GroupRep
from .spreads import Spread, SpreadReport


def mat_to_rows(m: BitMat) -> List[str]:
    return list(m.to_strings())


def rows_to_mat(rows: List[str], n_cols: Optional[int] = None) -> BitMat:
    if not rows and n_cols is None:
        raise ValueError("empty matrix needs an explicit column count")
    vecs = [BitVec.from_string(r) for r in rows]
    return BitMat.from_rows(vecs, n_cols=n_cols if n_cols is not None else len(rows[0]))


def quadform_to_json(q: QuadForm) -> Dict[str, object]:
    return {"dim": q.n, "upper": mat_to_rows(q.upper)}


def json_to_quadform(obj: Dict[str, object]) -> QuadForm:
    return QuadForm(rows_to_mat(obj["upper"], n_cols=obj["dim"]))


def rep_to_json(rep: GroupRep) -> Dict[str, object]:
    out: Dict[str, object] = {
        "group": rep.group,
        "degree": rep.degree,
        "labels": list(rep.labels),
        "generators": [mat_to_rows(g) for g in rep.gens],
    }
    if rep.perms is not None:
        out["perms"] = [list(p.images) for p in rep.perms]
    return out


def json_to_rep(obj: Dict[str, object]) -> GroupRep:
    degree = obj["degree"]
    gens = tuple(rows_to_mat(rows, n_cols=degree) for rows in obj["generators"])
    perms = None
    if "perms" in obj:
        perms = tuple(Perm(tuple(images)) for images in obj["perms"])
    return GroupRep(
        group=obj["group"],
        gens=gens,
        labels=tuple(obj["labels"]),
        perms=perms,
    )


def report_to_json(r: SpreadReport) -> Dict[str, object]:
    return {
        "member_count": r.member_count,
        "member_dim": r.member_dim,
        "pairwise_trivial": r.pairwise_trivial,
        "totally_singular": r.totally_singular,
        "set_invariant_under": list(r.set_invariant_under),
        "complete": r.complete,
        "singular_coverage": r.singular_coverage,
    }


def json_to_report(obj: Dict[str, object]) -> SpreadReport:
    return SpreadReport(
        member_count=obj["member_count"],
        member_dim=obj["member_dim"],
        pairwise_trivial=obj["pairwise_trivial"],
        totally_singular=obj["totally_singular"],
        set_invariant_under=tuple(obj["set_invariant_under"]),
        complete=obj["complete"],
        singular_coverage=obj["singular_coverage"],
    )


def spread_to_json(s: Spread) -> Dict[str, object]:
    provenance = dict(s.provenance)
    provenance["generators"] = [mat_to_rows(g) for g in s.generators]
    provenance["generator_labels"] = list(s.labels)
    return {
        "ambient_dim": s.ambient_dim,
        "form": mat_to_rows(s.form.upper),
        "members": [mat_to_rows(w.basis) for w in s.members],
        "provenance": provenance,
        "report": None if s.report is None else report_to_json(s.report),
    }


def json_to_spread(obj: Dict[str, object]) -> Spread:
    n = obj["ambient_dim"]
    provenance = dict(obj["provenance"])
    gens = tuple(rows_to_mat(rows, n_cols=n) for rows in provenance.pop("generators"))
    labels = tuple(provenance.pop("generator_labels"))
    members = tuple(
        Subspace.from_matrix(rows_to_mat(rows, n_cols=n)) for rows in obj["members"]
    )
    report = None if obj.get("report") is None else json_to_report(obj["report"])
    return Spread(
        ambient_dim=n,
        members=members,
        form=QuadForm(rows_to_mat(obj["form"], n_cols=n)),
        generators=gens,
        labels=labels,
        provenance=provenance,
        report=report,
    )


def ambient_perm_gens(group: str) -> List[Perm]:
    """The permutations behind a named symmetric or alternating group."""
    kind, size = group[:1], group[1:]
    if kind == "S" and size.isdigit():
        return coxeter_gens(int(size))
    if kind == "A" and size.isdigit():
        return alternating_gens(int(size))
    raise ValueError(f"group {group!r} does not name a symmetric or alternating group")


def dumps(obj: Dict[str, object]) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def save(path: str, obj: Dict[str, object]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def load(path: str) -> Dict[str, object]:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
