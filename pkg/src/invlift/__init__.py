"""Distinguished lifts of Weyl group involutions to the torus normalizer.

For an involution w, the package computes the cocharacter r_w (sum of the
Kostant cascade of the roots negated by w) and the mod-2 correction b_w^{S'}
attached to a halving S' of the simple reflections.  It builds the lifts
n_{w,c,S'} = w_dot r_w(c) b_w(eps) and checks their identities exactly: in
the eps-torsion Tits extension, and over F_{p^2} with a Frobenius.
"""
from .cascade import Cascade, kostant_cascade, r_from_cascade
from .lifting import (
    Halving,
    all_halvings,
    b_flip,
    b_recursive,
    b_typeD_oracle,
    b_weak,
    canonical_halving,
    colon,
    colon_branch_rule,
    r_recursive,
)
from .rational_points import (
    NormalizerPoint,
    build_lift,
    frobenius,
    make_field,
    normalizer_mul,
    special_c,
    verify_family_identity,
    verify_antifixed_lift,
)
from .root_datum import CartanSpec, RootDatum, build_root_datum, pairing
from .tits_arithmetic import TitsElem, tits_dot, tits_mul, tits_square, verify_central_square
from .weyl_group import (
    WeylElem,
    eigen_subsystem,
    enumerate_involutions,
    longest_element,
    parse_word,
    word_str,
)

__version__ = "0.1.0"

__all__ = [
    "CartanSpec", "RootDatum", "build_root_datum", "pairing",
    "WeylElem", "eigen_subsystem", "enumerate_involutions", "longest_element", "parse_word", "word_str",
    "Cascade", "kostant_cascade", "r_from_cascade",
    "Halving", "all_halvings", "canonical_halving", "r_recursive", "b_recursive", "b_weak", "b_flip",
    "b_typeD_oracle", "colon", "colon_branch_rule",
    "TitsElem", "tits_dot", "tits_mul", "tits_square", "verify_central_square",
    "NormalizerPoint", "build_lift", "frobenius", "make_field", "normalizer_mul", "special_c",
    "verify_family_identity", "verify_antifixed_lift",
]
