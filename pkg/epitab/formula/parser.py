"""
ASCII formula grammar built with pyparsing.

    formula := iff
    iff     := imp ("<->" imp)*       left-associative
    imp     := or ("->" or)*          right-associative
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "~" unary | "K" "{" agent "}" unary | "D" unary | "C" unary
             | atom | "(" formula ")"

Derived connectives are desugared by the parse actions, so the returned
AST only contains Atom, Not, And, Knows, Dist and Common nodes.
"""
import re
from typing import List, Optional

import pyparsing as pp

from epitab.errors import FormulaSyntaxError, UnknownAgentError
from epitab.formula.syntax import (
    AgentSet,
    And,
    Atom,
    Common,
    Dist,
    Formula,
    Knows,
    Not,
    agents_of,
    disj,
    iff,
    implies,
)
from epitab.utils.logging_config import get_logger

logger = get_logger(__name__)

pp.ParserElement.enable_packrat()

IDENTIFIER = r'[a-z][a-zA-Z0-9_]*'
TOKEN = re.compile(r"[A-Za-z0-9_]+|<->|->|\S")


class _KnowsOperator:
    """Marker token for a parsed ``K{agent}`` prefix."""

    def __init__(self, agent: str):
        self.agent = agent


def _apply_unary(operator, operand: Formula) -> Formula:
    if isinstance(operator, _KnowsOperator):
        return Knows(operator.agent, operand)
    if operator == '~':
        return Not(operand)
    if operator == 'D':
        return Dist(operand)
    if operator == 'C':
        return Common(operand)
    raise FormulaSyntaxError(f"Unknown operator {operator!r}", 0, str(operator))


def _unary_action(tokens):
    # prefix operators are right-associative: fold from the innermost one
    items = list(tokens[0])
    result = items[-1]
    for operator in reversed(items[:-1]):
        result = _apply_unary(operator, result)
    return result


def _left_fold(builder):
    def action(tokens):
        operands = list(tokens[0])[0::2]
        result = operands[0]
        for operand in operands[1:]:
            result = builder(result, operand)
        return result
    return action


def _right_fold(builder):
    def action(tokens):
        operands = list(tokens[0])[0::2]
        result = operands[-1]
        for operand in reversed(operands[:-1]):
            result = builder(operand, result)
        return result
    return action


def _build_grammar() -> pp.ParserElement:
    atom = pp.Regex(IDENTIFIER).set_parse_action(lambda t: Atom(t[0]))
    agent = pp.Regex(IDENTIFIER)

    knows_op = (pp.Suppress('K') + pp.Suppress('{') + agent + pp.Suppress('}')).set_parse_action(
        lambda t: _KnowsOperator(t[0])
    )
    prefix_op = pp.Literal('~') | knows_op | pp.Literal('D') | pp.Literal('C')

    return pp.infix_notation(
        atom,
        [
            (prefix_op, 1, pp.OpAssoc.RIGHT, _unary_action),
            (pp.Literal('&'), 2, pp.OpAssoc.LEFT, _left_fold(And)),
            (pp.Literal('|'), 2, pp.OpAssoc.LEFT, _left_fold(disj)),
            (pp.Literal('->'), 2, pp.OpAssoc.RIGHT, _right_fold(implies)),
            (pp.Literal('<->'), 2, pp.OpAssoc.LEFT, _left_fold(iff)),
        ],
    )


def _syntax_message(text: str, position: int) -> str:
    rest = text[position:].lstrip()
    if not rest:
        return "Syntax error: expected formula"
    return f"Syntax error: unexpected token {TOKEN.match(rest).group()!r}"


_GRAMMAR: Optional[pp.ParserElement] = None


def _grammar() -> pp.ParserElement:
    global _GRAMMAR
    if _GRAMMAR is None:
        _GRAMMAR = _build_grammar()
    return _GRAMMAR


def parse(text: str, agents: Optional[AgentSet] = None) -> Formula:
    """
    Parse formula text into a desugared AST.

    Args:
        text: Formula in the ASCII grammar, e.g. ``K{a} p & ~D C p``
        agents: Declared agent set; when given, every K{x} must name a member

    Returns:
        Parsed Formula

    Raises:
        FormulaSyntaxError: If the text does not conform to the grammar
        UnknownAgentError: If the formula names an undeclared agent
    """
    try:
        result = _grammar().parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise FormulaSyntaxError(_syntax_message(text, e.loc), e.loc, text) from None

    formula = result[0]
    if agents is not None:
        unknown: List[str] = sorted(agents_of(formula) - set(agents))
        if unknown:
            raise UnknownAgentError(unknown[0], list(agents))

    logger.debug(f"Parsed {text!r} as {formula}")
    return formula
