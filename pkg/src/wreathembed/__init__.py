"""Embedding of an oracle base group into a two-generator group built from
nested shift extensions, with decision procedures for triviality and
embedded-subgroup membership, a brute-force differential evaluator, and
query instrumentation."""

from .bruteforce import brute_is_trivial, brute_membership, candidate_support
from .embed import (
    ConjugateNormalForm,
    KNormalForm,
    MembershipResult,
    class_sums,
    conjugate_normal_form,
    evaluate_section,
    g_is_trivial,
    k_evaluate_at,
    k_is_trivial,
    k_normal_form,
    membership,
    phi,
)
from .oracles import (
    CyclicSumOracle,
    FreeAbelianOracle,
    FreeGroupOracle,
    InstrumentedOracle,
    Oracle,
    OracleError,
    OracleStats,
    OracleVerdict,
    TrivialGroupOracle,
    oracle_by_name,
    oracle_is_trivial,
    wrap_delayed,
    wrap_instrumented,
)
from .words import (
    CSWord,
    HWord,
    WordError,
    decode_hword,
    encode_hword,
    lg,
    parse_cs_word,
    parse_h_word,
)

__version__ = "0.1.0"
