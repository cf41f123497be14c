"""Finite posets, sectional pseudocomplements and relative residuation."""

from ._ordalg import (
    OrdalgError,
    Poset,
    check_divisible,
    check_rrl,
    classify,
    commands,
    congruences,
    direct_product,
    enumerate,
    fixture,
    isomorphic,
    relative_pc_table,
    sectional_pc_table,
    synthesize,
    theorem2_suite,
)

__all__ = [
    "OrdalgError",
    "Poset",
    "check_divisible",
    "check_rrl",
    "classify",
    "commands",
    "congruences",
    "direct_product",
    "enumerate",
    "fixture",
    "isomorphic",
    "relative_pc_table",
    "sectional_pc_table",
    "synthesize",
    "theorem2_suite",
]
