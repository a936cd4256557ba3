"""GF(2) spin representations of symmetric groups and invariant orthogonal spreads."""

__version__ = "0.1.0"

from .forms import (
    QuadForm,
    count_singular,
    invariant_quadratic,
    is_quadratic_type_tworow,
    is_totally_singular,
    witt_index,
)
from .gf2 import BitMat, BitVec, Subspace
from .kernels import backend
from .meataxe import (
    are_isomorphic,
    end_algebra,
    hom_space,
    irreducible_socle_component,
    is_irreducible,
    restrict_drop_last,
    restrict_to_alternating,
    split_by_idempotent,
    sub_rep,
)
from .perms import CayleyTable, Perm, regular_embedding
from .specht import GroupRep, irreducible_quotient, specht_rep, spin_rep, spin_shape
from .spreads import (
    Spread,
    SpreadReport,
    a9_spread,
    extend_spread,
    group_action_on_spread,
    imprimitivity_report,
    max_partial_spread_bruteforce,
    sigma_spread,
    verify_spread,
)

__all__ = [
    "__version__",
    "backend",
    "BitVec",
    "BitMat",
    "Subspace",
    "Perm",
    "CayleyTable",
    "regular_embedding",
    "GroupRep",
    "specht_rep",
    "irreducible_quotient",
    "spin_shape",
    "spin_rep",
    "QuadForm",
    "invariant_quadratic",
    "is_quadratic_type_tworow",
    "witt_index",
    "count_singular",
    "is_totally_singular",
    "hom_space",
    "end_algebra",
    "is_irreducible",
    "irreducible_socle_component",
    "split_by_idempotent",
    "sub_rep",
    "are_isomorphic",
    "restrict_drop_last",
    "restrict_to_alternating",
    "Spread",
    "SpreadReport",
    "sigma_spread",
    "extend_spread",
    "a9_spread",
    "verify_spread",
    "group_action_on_spread",
    "imprimitivity_report",
    "max_partial_spread_bruteforce",
]
