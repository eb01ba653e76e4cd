"""Finite-group checks for nonsolvability-related triple conditions.

Decide Thompson, Kaplan-Levy, 3PO, 3PPO and 3SS conditions on fully
enumerated permutation and matrix groups, convert between 3PPO triples and
3SS witnesses, and count class triples either by brute force or from an exact
character table.
"""
from .algebraic import AlgebraicValue, parse_algebraic
from .characters import (
    CharacterTable,
    character_sum,
    character_sum_terms,
    load_character_table,
    match_classes,
    structure_constant_count,
)
from .conditions import (
    SylowWitness,
    TripleWitness,
    brute_count_triples,
    collision_to_ppo_triple,
    find_3po_triple,
    find_3ppo_triple,
    find_3ss_witness,
    find_kaplan_levy_triple,
    find_thompson_triple,
    is_3po,
    is_3ppo,
    is_3ss,
    ppo_triple_to_sylow_witness,
    product_set_size,
    triple_order_profiles,
)
from .elements import MatrixElement, Permutation, element_order, inverse, multiply
from .group import DEFAULT_CAP, FiniteGroup, generate_group, group_from_definition, load_group
from .structure import (
    ConjugacyClass,
    Subgroup,
    centralizer_order,
    conjugacy_classes,
    derived_series,
    derived_subgroup,
    is_simple,
    is_solvable,
    normalizer,
    subgroup_generated,
    sylow_conjugates,
    sylow_containing,
    sylow_subgroup,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicValue",
    "CharacterTable",
    "ConjugacyClass",
    "DEFAULT_CAP",
    "FiniteGroup",
    "MatrixElement",
    "Permutation",
    "Subgroup",
    "SylowWitness",
    "TripleWitness",
    "brute_count_triples",
    "centralizer_order",
    "character_sum",
    "character_sum_terms",
    "collision_to_ppo_triple",
    "conjugacy_classes",
    "derived_series",
    "derived_subgroup",
    "element_order",
    "find_3po_triple",
    "find_3ppo_triple",
    "find_3ss_witness",
    "find_kaplan_levy_triple",
    "find_thompson_triple",
    "generate_group",
    "group_from_definition",
    "inverse",
    "is_3po",
    "is_3ppo",
    "is_3ss",
    "is_simple",
    "is_solvable",
    "load_character_table",
    "load_group",
    "match_classes",
    "multiply",
    "normalizer",
    "parse_algebraic",
    "ppo_triple_to_sylow_witness",
    "product_set_size",
    "structure_constant_count",
    "subgroup_generated",
    "sylow_conjugates",
    "sylow_containing",
    "sylow_subgroup",
    "triple_order_profiles",
]
