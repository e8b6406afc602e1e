"""Freely braided elements, Schubert smoothness and content-maximal censuses
in simply laced Coxeter groups."""

from ._core import (
    CoxeterGraph,
    ResourceLimitError,
    all_reduced_words,
    avoids,
    bruhat_leq,
    canonical_word,
    census,
    classify,
    commutation_class,
    content_maximal_length_bound,
    contracted_expression,
    count_content_maximal,
    deletion_reduced_positions,
    enumerate_words_up_to_length,
    freely_braided_by_patterns,
    inversion_set,
    is_reduced,
    ls_smooth,
    one_line,
    poincare_polynomial,
    recurrence,
    root_sequence,
    series,
    verify,
)

__all__ = [
    "CoxeterGraph",
    "ResourceLimitError",
    "all_reduced_words",
    "avoids",
    "bruhat_leq",
    "canonical_word",
    "census",
    "classify",
    "commutation_class",
    "content_maximal_length_bound",
    "contracted_expression",
    "count_content_maximal",
    "deletion_reduced_positions",
    "enumerate_words_up_to_length",
    "freely_braided_by_patterns",
    "inversion_set",
    "is_reduced",
    "ls_smooth",
    "one_line",
    "poincare_polynomial",
    "recurrence",
    "root_sequence",
    "series",
    "verify",
]
