"""Defeasible logic with revision by superiority-relation editing."""

from .agm import (
    ALWAYS_HOLD,
    CATALOGUE,
    VIOLABLE,
    PostulateId,
    Verdict,
    VerdictStatus,
    agm_contract,
    agm_expand,
    agm_revise,
    check_harper,
    check_levi,
    check_postulate,
)
from .analysis import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Decisiveness,
    Refutability,
    RefutabilityClass,
    SupportTree,
    classify_refutability,
    conflicting_pairs,
    depends_on,
    enumerate_superiorities,
    is_decisive,
    is_unreachable,
    support_trees,
    unreachable_literals,
)
from .engine import (
    BeliefSet,
    Evaluator,
    Extension,
    Family,
    ProofTag,
    Sign,
    Status,
    TagAssignment,
    belief_set,
    compute_tags,
    extension,
    format_tags,
    is_consistent,
    proves,
)
from .revision import (
    InstanceClass,
    OutcomeStatus,
    RevisionError,
    RevisionGoal,
    GoalKind,
    RevisionOutcome,
    Strategy,
    classify_instance,
    contract,
    expand,
    revise,
    search_revision,
)
from .sat import CnfFormula, gamma_transform, parse_dimacs, sat_via_refutability, truth_table_sat
from .theory import (
    Literal,
    ParseError,
    Restrict,
    Rule,
    RuleKind,
    Theory,
    TheoryError,
    check_acyclic,
    complement,
    lit,
    parse_theory,
    rules_for,
    serialize_theory,
)

__version__ = "0.1.0"
