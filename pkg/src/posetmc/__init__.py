"""Model checking quantified conjunctive sentences on finite posets."""

from .errors import (
    BudgetExceededError,
    CycleError,
    DuplicateVariableError,
    EmptyDomainError,
    IllFormedHypergraphError,
    PosetFormatError,
    SentenceSyntaxError,
    TrivialPosetError,
    UnboundVariableError,
)
from .poset import (
    Poset,
    antichain,
    bottom,
    bowtie,
    chain,
    cover_degree,
    degree,
    downset,
    dumps_poset,
    from_order_pairs,
    hub,
    load_poset,
    loads_poset,
    maximals,
    minimals,
    top,
    upset,
    width,
)
from .sentence import (
    EXISTS,
    FORALL,
    Quantifier,
    RelativizedDomains,
    Sentence,
    brute_force_check,
    format_sentence,
    parse,
    relativized_check,
    restrict,
)
from .reducer import Decided, Reduced, ReducedSentence, hub_accept, reduce
from .depth import LevelSets, Side, VariableDepths, level_sets, variable_depths
from .solver import CheckResult, check, check_both

__version__ = "0.1.0"
