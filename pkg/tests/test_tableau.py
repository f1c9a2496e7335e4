"""
Tests for pretableau construction, prestate elimination, state elimination
and DOT export.
"""
import pytest

from epitab.errors import InvariantBreach
from epitab.formula import (
    Atom,
    Dist,
    Eventuality,
    FormulaSet,
    Knows,
    Not,
    extended_closure,
    parse,
)
from epitab.tableau import (
    MinRankPolicy,
    NodeKind,
    StrictRankPolicy,
    TableauGraph,
    Verdict,
    apply_dr,
    apply_kr,
    apply_sr,
    build_pretableau,
    compute_ranks,
    eliminate_prestates,
    eliminate_states,
    export_dot,
    replay_trace,
    verdict,
)

p, q, r, s = Atom('p'), Atom('q'), Atom('r'), Atom('s')
NKA_P = Not(Knows('a', p))


def _run(text, agents, scope='closure', policy=None):
    theta = parse(text, agents)
    pretableau = build_pretableau(theta, agents, scope)
    initial = eliminate_prestates(pretableau)
    final, trace = eliminate_states(initial, policy)
    return theta, pretableau, initial, final, trace


def test_kr_successor_contents(ab):
    """KR carries ~phi and the K_a / ~K_a formulas of the same agent."""
    graph = TableauGraph(p, ab)
    state, _ = graph.add_node(NodeKind.STATE, FormulaSet([
        NKA_P, Knows('a', q), Not(Knows('b', r)), Dist(s), p,
    ]))
    prestate = apply_kr(graph, state, NKA_P)
    assert graph.formulas(prestate) == FormulaSet([Not(p), NKA_P, Knows('a', q)])
    assert graph.marked_successors(state, NKA_P) == [prestate]


def test_dr_successor_contents(ab):
    """DR carries ~phi with every D, ~D, K_x and ~K_x formula."""
    graph = TableauGraph(p, ab)
    state, _ = graph.add_node(NodeKind.STATE, FormulaSet([
        Not(Dist(p)), Knows('a', q), Not(Knows('b', r)), Dist(s), Atom('t'),
    ]))
    prestate = apply_dr(graph, state, Not(Dist(p)))
    assert graph.formulas(prestate) == FormulaSet([
        Not(p), Not(Dist(p)), Knows('a', q), Not(Knows('b', r)), Dist(s),
    ])


def test_successor_prestates_are_reused(ab):
    graph = TableauGraph(p, ab)
    first, _ = graph.add_node(NodeKind.STATE, FormulaSet([NKA_P]))
    second, _ = graph.add_node(NodeKind.STATE, FormulaSet([NKA_P, q]))
    assert apply_kr(graph, first, NKA_P) == apply_kr(graph, second, NKA_P)
    assert len(graph.prestates()) == 1


def test_rule_preconditions(ab):
    graph = TableauGraph(p, ab)
    prestate, _ = graph.add_node(NodeKind.PRESTATE, FormulaSet([NKA_P]))
    state, _ = graph.add_node(NodeKind.STATE, FormulaSet([NKA_P]))
    broken, _ = graph.add_node(NodeKind.STATE, FormulaSet([NKA_P, p, Not(p)]))

    with pytest.raises(InvariantBreach):
        apply_kr(graph, prestate, NKA_P)
    with pytest.raises(InvariantBreach):
        apply_kr(graph, state, Not(Knows('b', p)))
    with pytest.raises(InvariantBreach):
        apply_dr(graph, state, NKA_P)
    with pytest.raises(InvariantBreach):
        apply_kr(graph, broken, NKA_P)
    with pytest.raises(InvariantBreach):
        apply_sr(graph, state)


def test_pretableau_of_negated_knowledge(ab):
    """Nodes are numbered breadth-first and reused by contents."""
    theta, pretableau, initial, final, trace = _run("~K{a} p", ab)
    not_dp = Not(Dist(p))

    assert [n.formulas for n in pretableau.prestates()] == [
        FormulaSet([NKA_P]),
        FormulaSet([Not(p), NKA_P]),
        FormulaSet([Not(p), not_dp, NKA_P]),
    ]
    assert [n.formulas for n in pretableau.states()] == [
        FormulaSet([NKA_P, Dist(p), p]),
        FormulaSet([NKA_P, not_dp]),
        FormulaSet([Not(p), NKA_P, Dist(p), p]),
        FormulaSet([Not(p), NKA_P, not_dp]),
    ]
    assert pretableau.root == 0
    assert pretableau.double_successors(0) == [1, 2]

    # only the inconsistent state goes, by E1
    assert [(rec.rule, rec.reason) for rec in trace] == [('E1', p)]
    assert len(final.states()) == 3
    assert verdict(final, theta) is Verdict.OPEN


def test_prestate_elimination_redirects_marked_edges(ab):
    _, pretableau, initial, _, _ = _run("~K{a} p", ab)
    assert initial.prestates() == []
    assert initial.root is None
    for edge in pretableau.marked_edges():
        for state in pretableau.double_successors(edge.target):
            assert state in initial.marked_successors(edge.source, edge.label)
    for edge in initial.marked_edges():
        assert initial.node(edge.target).is_state


def test_nodes_stay_inside_extended_closure(ab, example):
    pretableau = build_pretableau(example, ab)
    ecl = extended_closure(example, ab)
    assert all(node.formulas.issubset(ecl) for node in pretableau.nodes())
    assert len(pretableau) <= 2 * 2 ** len(ecl)


def test_e1_trace_text(ab):
    _, _, _, final, trace = _run("p & ~p", ab)
    assert trace.to_text() == "stage=1 rule=E1 node=1 reason=p\n"
    assert final.states() == []


def test_e2_removes_state_without_successor(ab):
    theta, _, _, final, trace = _run("C p & ~K{a} p", ab)
    rules = [rec.rule for rec in trace]
    assert 'E1' in rules
    assert 'E2' in rules
    assert verdict(final, theta) is Verdict.CLOSED


@pytest.mark.parametrize("policy", [MinRankPolicy(), StrictRankPolicy()])
def test_e3_removes_unrealizable_eventuality(ab, policy):
    """Everybody commonly knowing p leaves no way to refute C p."""
    theta, _, _, final, trace = _run("~C p & C (K{a} p & K{b} p)", ab, policy=policy)
    assert trace.removed_by('E3')
    assert all(rec.reason == Not(parse("C p")) for rec in trace if rec.rule == 'E3')
    assert verdict(final, theta) is Verdict.CLOSED


def test_replay_trace_reproduces_final(ab):
    _, _, initial, final, trace = _run("K{a} p & K{b} p & ~D C p", ab)
    assert replay_trace(initial, trace).same_as(final)


def test_elimination_leaves_initial_untouched(ab):
    _, _, initial, final, trace = _run("p & ~p", ab)
    assert len(initial.states()) == 1
    assert len(final.states()) == 0


def test_ranks_on_realizable_eventuality(ab):
    """In a ~C p state that also holds ~p, the rank is 0."""
    _, _, initial, _, _ = _run("~C p & ~p", ab)
    ev = Eventuality(Not(parse("C p")))
    for policy in (MinRankPolicy(), StrictRankPolicy()):
        ranks = policy.compute(initial, ev)
        for node in initial.states():
            if Not(p) in node.formulas:
                assert ranks[node.id] == 0


def test_compute_ranks_selects_policy(ab):
    _, _, initial, _, _ = _run("~C p & K{a} p", ab)
    ev = Eventuality(Not(parse("C p")))
    assert compute_ranks(initial, ev) == MinRankPolicy().compute(initial, ev)
    assert compute_ranks(initial, ev, strict=True) == StrictRankPolicy().compute(initial, ev)


def test_dot_export(ab):
    _, pretableau, initial, final, _ = _run("~K{a} p", ab)
    dot = export_dot(pretableau, 'pretableau')
    assert dot.startswith("digraph pretableau {\n")
    assert dot.endswith("}\n")
    assert 'n0 [label="pre0: {~K{a} p}" style=dashed];' in dot
    assert 'n0 -> n1 [color="black:black"];' in dot
    assert 'n1 -> n3 [label="~K{a} p"];' in dot

    assert export_dot(final, 'final').startswith("digraph final {\n")
    assert export_dot(initial, 'initial') == export_dot(initial, 'initial')
    with pytest.raises(ValueError):
        export_dot(final, 'middle')
