"""
Formula language: AST, parser, closure and fully expanded sets.
"""
from epitab.formula.expansion import (
    closure,
    decision_candidates,
    eventualities_of,
    extended_closure,
    is_fully_expanded,
    is_patently_inconsistent,
    minimal_fully_expanded_extensions,
)
from epitab.formula.parser import parse
from epitab.formula.syntax import (
    AgentSet,
    And,
    Atom,
    Common,
    Dist,
    Eventuality,
    Formula,
    FormulaSet,
    Knows,
    Not,
    agents_of,
    atoms_of,
    connective_count,
    disj,
    iff,
    implies,
    is_negated_knowledge,
    render,
    subformulae,
)

__all__ = [
    'AgentSet',
    'And',
    'Atom',
    'Common',
    'Dist',
    'Eventuality',
    'Formula',
    'FormulaSet',
    'Knows',
    'Not',
    'agents_of',
    'atoms_of',
    'closure',
    'connective_count',
    'decision_candidates',
    'disj',
    'eventualities_of',
    'extended_closure',
    'iff',
    'implies',
    'is_fully_expanded',
    'is_negated_knowledge',
    'is_patently_inconsistent',
    'minimal_fully_expanded_extensions',
    'parse',
    'render',
    'subformulae',
]
