"""
Tests for the formula language: parsing, rendering, agent sets and closures.
"""
import pytest

from epitab.errors import AgentSetError, FormulaSyntaxError, UnknownAgentError
from epitab.formula import (
    AgentSet,
    And,
    Atom,
    Common,
    Dist,
    Eventuality,
    FormulaSet,
    Knows,
    Not,
    agents_of,
    atoms_of,
    closure,
    connective_count,
    disj,
    extended_closure,
    iff,
    implies,
    parse,
    render,
    subformulae,
)

p, q, r = Atom('p'), Atom('q'), Atom('r')


def test_parse_example():
    """Prefix operators bind tighter than conjunction, which associates left."""
    formula = parse("K{a} p & K{b} p & ~D C p")
    assert formula == And(And(Knows('a', p), Knows('b', p)), Not(Dist(Common(p))))


def test_parse_derived_connectives():
    """Disjunction, implication and equivalence are desugared."""
    assert parse("p | q") == disj(p, q)
    assert parse("p | q") == Not(And(Not(p), Not(q)))
    assert parse("p -> q") == Not(And(p, Not(q)))
    assert parse("p -> q -> r") == implies(p, implies(q, r))
    assert parse("p <-> q") == iff(p, q)


def test_parse_precedence():
    """& binds tighter than |, which binds tighter than ->."""
    assert parse("p & q | r") == disj(And(p, q), r)
    assert parse("p | q -> r") == implies(disj(p, q), r)
    assert parse("~p & q") == And(Not(p), q)
    assert parse("~(p & q)") == Not(And(p, q))


def test_parse_nested_prefix_operators():
    """Prefix operators stack right to left."""
    assert parse("~~p") == Not(Not(p))
    assert parse("K{a} ~D C p") == Knows('a', Not(Dist(Common(p))))
    assert parse("C K{b} q") == Common(Knows('b', q))


def test_parse_whitespace_insensitive():
    assert parse("K{a}p&~Dp") == parse("K{a} p & ~D p")


@pytest.mark.parametrize("text", [
    "K{a} p & K{b} p & ~D C p",
    "~(p & q)",
    "p & (q & r)",
    "~K{a} (p & C p)",
    "C ~~p",
    "D (p & q) & ~C q",
])
def test_render_parses_back(text):
    """Rendering yields the canonical text, which parses to the same AST."""
    formula = parse(text)
    assert render(formula) == text
    assert parse(render(formula)) == formula
    assert str(formula) == text


def test_render_left_conjunction_without_parentheses():
    assert render(And(And(p, q), r)) == "p & q & r"
    assert render(And(p, And(q, r))) == "p & (q & r)"


@pytest.mark.parametrize("text", ["p &", "K{a p", "(p", "p q", "", "K{} p", "P"])
def test_syntax_errors(text):
    """Malformed input raises a syntax error carrying a position."""
    with pytest.raises(FormulaSyntaxError) as exc_info:
        parse(text)
    assert isinstance(exc_info.value.position, int)
    assert 0 <= exc_info.value.position <= len(text)
    assert exc_info.value.text == text


@pytest.mark.parametrize("text", ["K{a}", "p &", "p q", "", "(p"])
def test_syntax_error_message_is_plain(text):
    with pytest.raises(FormulaSyntaxError) as exc_info:
        parse(text)
    message = str(exc_info.value)
    assert "Expected" not in message
    assert "unexpected token" in message or "expected formula" in message


def test_syntax_error_at_end_of_input():
    with pytest.raises(FormulaSyntaxError) as exc_info:
        parse("")
    assert str(exc_info.value).startswith("Syntax error: expected formula (at position 0)")


def test_syntax_error_is_value_error():
    with pytest.raises(ValueError):
        parse("p &")


def test_unknown_agent(ab):
    with pytest.raises(UnknownAgentError) as exc_info:
        parse("K{a} p & K{c} p", ab)
    assert exc_info.value.agent == 'c'
    assert "c" in str(exc_info.value)


def test_agent_set_ordering_and_validation():
    agents = AgentSet(['b', 'a', 'b'])
    assert list(agents) == ['a', 'b']
    assert len(agents) == 2
    assert 'a' in agents
    assert str(agents) == "a,b"
    assert AgentSet.parse("b, a") == agents

    with pytest.raises(AgentSetError):
        AgentSet([])
    with pytest.raises(AgentSetError):
        AgentSet(['Alice'])


def test_formula_set_identity():
    """Formula sets compare by contents and iterate in rendering order."""
    first = FormulaSet([q, p, Not(p)])
    second = FormulaSet([Not(p), p, q])
    assert first == second
    assert hash(first) == hash(second)
    assert [render(f) for f in first] == ["p", "q", "~p"]
    assert first.render() == "{p, q, ~p}"
    assert FormulaSet([p]) <= first


def test_eventuality():
    ev = Eventuality(Not(Common(p)))
    assert ev.body == p
    assert ev.witness == Not(p)
    with pytest.raises(ValueError):
        Eventuality(Common(p))


def test_structural_queries():
    formula = parse("K{a} p & ~D C q")
    assert agents_of(formula) == {'a'}
    assert atoms_of(formula) == {'p', 'q'}
    assert connective_count(formula) == 5
    assert len(subformulae(formula)) == 7


def test_closure_of_example(ab, example):
    """The closure adds D for K and the fixpoint unfolding K_x(phi & C phi) for C."""
    cl = closure(example, ab)
    assert len(cl) == 13
    c_p = Common(p)
    for expected in [Dist(p), Knows('a', And(p, c_p)), Knows('b', And(p, c_p)),
                     Dist(And(p, c_p)), And(p, c_p)]:
        assert expected in cl


def test_extended_closure_of_example(ab, example):
    """D C p and ~D C p are both in the closure, so negating adds only 12 formulas."""
    ecl = extended_closure(example, ab)
    assert len(ecl) == 25
    assert closure(example, ab) <= ecl


def test_extended_closure_doubles_negation_free_closure(ab):
    formula = parse("K{a} p & C q")
    assert len(extended_closure(formula, ab)) == 2 * len(closure(formula, ab))


def test_extended_closure_with_negated_atom(ab):
    """A closure holding p and ~p extends by one formula only."""
    formula = parse("~p")
    assert len(closure(formula, ab)) == 2
    assert len(extended_closure(formula, ab)) == 3
