"""Construct and verify skew braces on finite and infinite carriers, together
with the Yang-Baxter maps they define."""

from .brace import (
    DEFAULT_SEED,
    FiniteBrace,
    Rejection,
    SkewBrace,
    Strategy,
    Verdict,
    brace_isomorphic,
    check_brace,
    check_brace_axiom,
    construct_from_lambda,
    is_lambda_cyclic,
    is_lambda_homomorphic,
    is_symmetric,
    kernel_subbrace,
)
from .groups import FiniteGroup, cyclic, dihedral, direct_product, elementary_abelian, quaternion, validate_group
from .holomorph import Holomorph, brace_from_regular, enumerate_regular_subgroups, regular_from_brace

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SEED", "FiniteBrace", "Rejection", "SkewBrace", "Strategy", "Verdict", "brace_isomorphic",
    "check_brace", "check_brace_axiom", "construct_from_lambda", "is_lambda_cyclic", "is_lambda_homomorphic",
    "is_symmetric", "kernel_subbrace", "FiniteGroup", "cyclic", "dihedral", "direct_product",
    "elementary_abelian", "quaternion", "validate_group", "Holomorph", "brace_from_regular",
    "enumerate_regular_subgroups", "regular_from_brace",
]
