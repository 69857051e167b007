"""Synchronizing-word toolkit: oracles, commutative and idempotent solvers."""

from .automata import (
    Alphabet,
    AutomatonFormatError,
    Dcsa,
    Pdfa,
    SccDecomposition,
    Word,
    is_empty,
    parse_automaton,
    product,
    scc_decompose,
    serialize,
    step,
    to_dot,
)
from .commutative import (
    AcceptedVectorSet,
    ThresholdVector,
    accepted_vectors,
    commutative_is_synchronizing,
    constrained_sync_commutative,
    counting_automaton,
    intersect_wac,
    is_commutative,
    is_weakly_acyclic,
    scc_quotient,
    sync_language_automaton,
    threshold_vector,
)
from .families import (
    GenerationError,
    Seed,
    case2_automaton,
    cerny,
    figure_commutative,
    figure_commutative_nonsync,
    figure_noncommutative_sync_counterpart,
    fixture_path,
    load_fixture,
    random_commutative,
    random_simple_idempotents,
    sink_cycle_automaton,
)
from .idempotent import (
    OTHER,
    PERMUTATION,
    SIMPLE_IDEMPOTENT,
    Case1,
    Case2,
    ConstraintCase,
    LetterClass,
    NotStructured,
    StructureForm,
    classify_letters,
    constraint_case,
    decide_constrained,
    proof_witness_catalog,
    structure_classify,
)
from .regexes import (
    RegexSyntaxError,
    SigmaSets,
    UnknownRegexSymbol,
    ast_matches,
    compile,
    parse_regex,
    regex_symbols,
    sigma_sets,
)
from .search import (
    BudgetExceededError,
    SearchBudget,
    SyncReport,
    constrained_sync_oracle,
    idempotent_count_check,
    is_synchronizing,
    shortest_sync_word,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AutomatonFormatError",
    "Dcsa",
    "Pdfa",
    "SccDecomposition",
    "Word",
    "is_empty",
    "parse_automaton",
    "product",
    "scc_decompose",
    "serialize",
    "step",
    "to_dot",
    "AcceptedVectorSet",
    "ThresholdVector",
    "accepted_vectors",
    "commutative_is_synchronizing",
    "constrained_sync_commutative",
    "counting_automaton",
    "intersect_wac",
    "is_commutative",
    "is_weakly_acyclic",
    "scc_quotient",
    "sync_language_automaton",
    "threshold_vector",
    "GenerationError",
    "Seed",
    "case2_automaton",
    "cerny",
    "figure_commutative",
    "figure_commutative_nonsync",
    "figure_noncommutative_sync_counterpart",
    "fixture_path",
    "load_fixture",
    "random_commutative",
    "random_simple_idempotents",
    "sink_cycle_automaton",
    "OTHER",
    "PERMUTATION",
    "SIMPLE_IDEMPOTENT",
    "Case1",
    "Case2",
    "ConstraintCase",
    "LetterClass",
    "NotStructured",
    "StructureForm",
    "classify_letters",
    "constraint_case",
    "decide_constrained",
    "proof_witness_catalog",
    "structure_classify",
    "RegexSyntaxError",
    "SigmaSets",
    "UnknownRegexSymbol",
    "ast_matches",
    "compile",
    "parse_regex",
    "regex_symbols",
    "sigma_sets",
    "BudgetExceededError",
    "SearchBudget",
    "SyncReport",
    "constrained_sync_oracle",
    "idempotent_count_check",
    "is_synchronizing",
    "shortest_sync_word",
    "__version__",
]
