"""Decide whether a finite measure is determined by its level sets, with exact certificates."""

from .constructions import (
    BlockSelection,
    cantor_signed,
    lemma31_blocks,
    leth_geometric,
    paper_example,
)
from .errors import (
    InsufficientMassError,
    InvalidInputError,
    LevelSetError,
    LogicError,
    ResourceLimitError,
    WellDefinednessError,
)
from .measures import (
    AtomicMeasure,
    CandidateMeasure,
    SignedAtomicMeasure,
    absolute_measure,
    format_rational,
    hahn_decompose,
    measure_from_json,
    parse_rational,
    transform_nu,
)
from .ranges import (
    RangeSet,
    bullies,
    is_arithmetic_progression,
    is_interval,
    measure_range,
    signed_range,
    subset_sums,
)
from .relations import (
    AugmentedRelation,
    RelationBasis,
    SignVector,
    brute_force_relations,
    enumerate_relations,
    kappa_relations,
    relation_basis,
    relation_rank,
)
from .uniqueness import (
    LevelFunction,
    UniquenessCertificate,
    check_L,
    check_O,
    decide_L_unique,
    leth_witness,
    level_function,
    witness,
)

__all__ = [
    "AtomicMeasure",
    "AugmentedRelation",
    "BlockSelection",
    "CandidateMeasure",
    "InsufficientMassError",
    "InvalidInputError",
    "LevelFunction",
    "LevelSetError",
    "LogicError",
    "RangeSet",
    "RelationBasis",
    "ResourceLimitError",
    "SignVector",
    "SignedAtomicMeasure",
    "UniquenessCertificate",
    "WellDefinednessError",
    "absolute_measure",
    "brute_force_relations",
    "bullies",
    "cantor_signed",
    "check_L",
    "check_O",
    "decide_L_unique",
    "enumerate_relations",
    "format_rational",
    "hahn_decompose",
    "is_arithmetic_progression",
    "is_interval",
    "kappa_relations",
    "lemma31_blocks",
    "leth_geometric",
    "leth_witness",
    "level_function",
    "measure_from_json",
    "measure_range",
    "paper_example",
    "parse_rational",
    "relation_basis",
    "relation_rank",
    "signed_range",
    "subset_sums",
    "transform_nu",
    "witness",
]
