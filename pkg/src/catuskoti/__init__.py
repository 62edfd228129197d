"""Classical and four-valued semantics for tetralemma formalizations."""

from .formula import And, Formula, Implies, Letter, Not, Or, letters, parse, render
from .kernel import BACKEND_NAME
from .koti import (
    KotiKind,
    KotiTuple,
    Quadrant,
    build_koti,
    check_representatives,
    classify_formula,
    dilemma_partition,
    duality_check,
    exhaustiveness,
    mutual_exclusion,
    negate_tuple,
    partition_report,
)
from .manyvalued import (
    Connective,
    FourValue,
    Semantics,
    ValuationPair,
    apply4,
    audit_paper_tables,
    b4_correspondence,
    diff_tables,
    full_table,
    pair_eval,
    verify_compositionality,
)
from .predicate import (
    FiniteModel,
    enumerate_models,
    equivalent_fin,
    eval_model,
    parse_predicate,
    predicate_koti_check,
)
from .semantics import (
    SemanticStatus,
    Status,
    Valuation,
    Verdict,
    are_separable,
    entails,
    enumerate_valuations,
    equivalent,
    evaluate,
    semantic_status,
)

__version__ = "0.1.0"
