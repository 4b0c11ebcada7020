"""Invariants of Lefschetz fibrations over the sphere.

A fibration is presented as a positive word of Dehn twists whose product
acts trivially on the homology of the fibre.  The package computes the
homology, signature, and moduli-space pairings of the total space, and
checks the numerical conditions a realizable word must satisfy.
"""

from .families import (
    fibre_sum,
    genus1_word,
    hyperelliptic_word,
    word_A,
    word_B,
    word_C,
    word_power,
)
from .meyer_signature import (
    SignatureBreakdown,
    boundary_signature,
    cocycle,
    form_signature,
    total_signature,
)
from .moduli_invariants import (
    InvariantReport,
    NonIntegralHodgeDegreeError,
    Verdict,
    WordStats,
    divisibility_verdict,
    endo_check,
    euler_characteristic,
    full_report,
    genus2_double_cover_base,
    genus2_fractional_signature,
    hodge_degree,
    torelli_check,
    word_stats,
    wp_pairing,
)
from .monodromy import (
    Nonseparating,
    RelationError,
    Separating,
    Twist,
    Word,
    apply_twist,
    check_global_relation,
    conjugate_word,
    hurwitz_move,
    rotate_word,
    transvection_matrix,
    word_monodromy,
)
from .surface import (
    CycleKind,
    chain_curve_class,
    intersection,
    intersection_matrix,
    standard_basis,
    validate_cycle_class,
)
from .word_dsl import ParseError, parse, serialize
from .zariski_homology import (
    HomologyReport,
    SmithDecomposition,
    ZariskiComplex,
    build_complex,
    homology_report,
    invariant_factors,
    matrix_rank,
    smith_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "CycleKind",
    "HomologyReport",
    "InvariantReport",
    "NonIntegralHodgeDegreeError",
    "Nonseparating",
    "ParseError",
    "RelationError",
    "Separating",
    "SignatureBreakdown",
    "SmithDecomposition",
    "Twist",
    "Verdict",
    "Word",
    "WordStats",
    "ZariskiComplex",
    "apply_twist",
    "boundary_signature",
    "build_complex",
    "chain_curve_class",
    "check_global_relation",
    "cocycle",
    "conjugate_word",
    "divisibility_verdict",
    "endo_check",
    "euler_characteristic",
    "fibre_sum",
    "form_signature",
    "full_report",
    "genus1_word",
    "genus2_double_cover_base",
    "genus2_fractional_signature",
    "hodge_degree",
    "homology_report",
    "hurwitz_move",
    "hyperelliptic_word",
    "intersection",
    "intersection_matrix",
    "invariant_factors",
    "matrix_rank",
    "parse",
    "rotate_word",
    "serialize",
    "smith_normal_form",
    "standard_basis",
    "torelli_check",
    "total_signature",
    "transvection_matrix",
    "validate_cycle_class",
    "word_A",
    "word_B",
    "word_C",
    "word_monodromy",
    "word_power",
    "word_stats",
    "wp_pairing",
]
