"""George Boole's algebra of logic as an executable computer algebra system.

Multilinear integer polynomials carry the algebra; on top of them sit
Boole's development, reduction, elimination and solution theorems, a
term language with parsing and set-expression translation, two
executable semantics over finite universes, and the Rule of 0 and 1
decision procedure for equational Horn sentences.
"""

from .development import (
    DevelopmentTable,
    constituent,
    constituent_equations,
    develop,
    develop_partial,
    equal_by_development,
    first_difference,
    from_table,
    interpretable_core,
    sigma_assignment,
    sigma_strings,
)
from .models import (
    ClassAssignment,
    Defined,
    Multiset,
    Undefined,
    Universe,
    chi,
    eval_multiset,
    eval_partial,
    holds_in_idempotents,
)
from .polynomial import (
    DEFAULT_VARIABLE_LIMIT,
    ONE,
    ZERO,
    Polynomial,
    VariableLimitError,
    variables,
)
from .r01 import HornSentence, Verdict, check_equation, check_r01, parse_horn
from .terms import (
    Add,
    IntLit,
    Mul,
    Neg,
    NotTotallyInterpretableError,
    One,
    ParseError,
    Pow,
    SetExpr,
    Sub,
    Term,
    Var,
    Zero,
    eval_set_expression,
    format_set_expression,
    format_term,
    is_totally_interpretable,
    parse,
    poly,
    term_to_poly,
    to_set_expression,
    to_term,
)
from .theorems import Solution, eliminate, reduce_system, solve

__version__ = "0.1.0"

__all__ = [
    "Add",
    "ClassAssignment",
    "DEFAULT_VARIABLE_LIMIT",
    "Defined",
    "DevelopmentTable",
    "HornSentence",
    "IntLit",
    "Mul",
    "Multiset",
    "Neg",
    "NotTotallyInterpretableError",
    "ONE",
    "One",
    "ParseError",
    "Polynomial",
    "Pow",
    "SetExpr",
    "Solution",
    "Sub",
    "Term",
    "Undefined",
    "Universe",
    "Var",
    "VariableLimitError",
    "Verdict",
    "ZERO",
    "Zero",
    "check_equation",
    "check_r01",
    "chi",
    "constituent",
    "constituent_equations",
    "develop",
    "develop_partial",
    "eliminate",
    "equal_by_development",
    "eval_multiset",
    "eval_partial",
    "eval_set_expression",
    "first_difference",
    "format_set_expression",
    "format_term",
    "from_table",
    "holds_in_idempotents",
    "interpretable_core",
    "is_totally_interpretable",
    "parse",
    "parse_horn",
    "poly",
    "reduce_system",
    "sigma_assignment",
    "sigma_strings",
    "solve",
    "term_to_poly",
    "to_set_expression",
    "to_term",
    "variables",
]
