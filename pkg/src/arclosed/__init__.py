"""Closed and open factor complexity of Arnoux-Rauzy and Sturmian words."""

from .arformula import (
    Interval,
    ReturnTable,
    boundary_distance,
    closed_complexity,
    closed_complexity_profile,
    closed_complexity_terms,
    interval_I,
    liminf_witness,
    open_complexity,
    return_table,
    sturmian_closed_complexity,
)
from .errors import BudgetExceeded, DirectiveError, HorizonError, WordError
from .factorlab import (
    ClosedAnalysis,
    FactorCensus,
    classify_closed,
    closed_census,
    complete_first_returns,
    frontier,
    is_closed,
    is_rich,
    longest_border,
    phi_fiber,
    phi_index,
    special_factors,
)
from .openstur import PrefixSuffixProfile, decompose_open, prefix_suffix_profile, special_counts
from .wordgen import (
    FIBONACCI,
    TRIBONACCI,
    DirectiveSpec,
    bispecial_prefixes,
    characteristic_prefix,
    corpus_word,
    factors,
    longest_palindromic_suffix,
    palindromic_closure,
    parse_directive,
    sturmian_directive_from_cf,
)

__version__ = "0.1.0"
