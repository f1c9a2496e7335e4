"""
Tests for the solver, its factory and run configuration.
"""
from pathlib import Path

import pytest

from epitab import create_rank_policy, create_solver
from epitab.config import RunConfig, load_run_config
from epitab.errors import AgentSetError, InvariantBreach, UnknownAgentError
from epitab.formula import AgentSet, parse
from epitab.model import NotFoundWithinBound, brute_force_sat, satisfies
from epitab.solver import TableauSolver, eventuality_count, resolve_agents
from epitab.tableau import MinRankPolicy, StrictRankPolicy, Verdict

SATISFIABLE = [
    "K{a} p & K{b} p & ~D C p",
    "p",
    "C p",
    "~K{a} p",
    "~C p",
    "K{a} p & ~K{b} p",
    "D p & ~K{a} p & ~K{b} p",
]

UNSATISFIABLE = [
    "p & ~p",
    "K{a} p & ~D p",
    "C p & ~p",
    "C p & ~K{a} p",
    "K{a} p & ~K{a} K{a} p",
    "~K{a} p & K{a} K{a} p",
]


@pytest.fixture
def solver(ab):
    return TableauSolver(ab)


@pytest.mark.parametrize("text", SATISFIABLE)
def test_satisfiable_inputs(solver, ab, text):
    theta = parse(text, ab)
    result = solver.solve(theta)
    assert result.verdict is Verdict.OPEN
    witness = solver.extract_witness(result)
    assert witness.world == 'w0'
    assert satisfies(witness.model, witness.world, theta)


@pytest.mark.parametrize("text", UNSATISFIABLE)
def test_unsatisfiable_inputs(solver, ab, text):
    theta = parse(text, ab)
    result = solver.solve(theta)
    assert result.verdict is Verdict.CLOSED
    assert not result.satisfiable
    assert brute_force_sat(theta, ab, 4) == NotFoundWithinBound(4)


def test_closed_run_has_no_witness(solver, ab):
    result = solver.solve(parse("p & ~p", ab))
    with pytest.raises(InvariantBreach):
        solver.extract_witness(result)


@pytest.mark.parametrize("text, valid", [
    ("K{a} p -> p", True),
    ("K{a} p -> D p", True),
    ("C p -> K{b} p", True),
    ("p -> K{a} p", False),
    ("D p -> K{a} p", False),
    ("K{a} p | ~K{a} p", True),
])
def test_validity(solver, ab, text, valid):
    result = solver.is_valid(parse(text, ab))
    assert (result.verdict is Verdict.CLOSED) == valid


def test_result_records_settings(ab, example):
    result = TableauSolver(ab, StrictRankPolicy(), 'subformulae').solve(example)
    assert result.agents == ab
    assert result.rank_policy == 'strict'
    assert result.decision_scope == 'subformulae'
    assert eventuality_count(result) == 1


def test_statistics_lines(solver, example):
    result = solver.solve(example)
    lines = result.statistics().lines()
    assert lines[0] == "ecl_size: 25"
    assert [line.split(':')[0] for line in lines] == [
        'ecl_size', 'prestates', 'states', 'live_states', 'marked_edges', 'node_bound', 'stages',
    ]


def test_decision_scope_changes_the_verdict(ab):
    """Under the subformula scope the successor of ~K{a} ~C p can skip a decision."""
    theta = parse("~p & ~K{a} ~C p", ab)
    assert not TableauSolver(ab, decision_scope='closure').solve(theta).satisfiable
    assert TableauSolver(ab, decision_scope='subformulae').solve(theta).satisfiable


def test_unknown_decision_scope(ab):
    with pytest.raises(ValueError):
        TableauSolver(ab, decision_scope='everything')


def test_rank_modes_agree_without_divergence(solver, ab):
    comparison = solver.compare_rank_modes(parse("~C p", ab))
    assert not comparison.diverges
    assert comparison.min_verdict is comparison.strict_verdict


# ============================================================================
# Agent sets
# ============================================================================

def test_agents_taken_from_formula():
    theta = parse("K{b} p & ~K{a} p")
    assert resolve_agents(theta) == AgentSet(['a', 'b'])
    assert TableauSolver().solve(theta).agents == AgentSet(['a', 'b'])


def test_formula_without_agents_needs_declaration():
    with pytest.raises(AgentSetError):
        resolve_agents(parse("p"))


def test_undeclared_agent(ab):
    with pytest.raises(UnknownAgentError):
        resolve_agents(parse("K{c} p"), ab)


def test_single_agent_is_rejected():
    with pytest.raises(AgentSetError) as exc_info:
        resolve_agents(parse("K{a} p"))
    assert "At least two agents" in str(exc_info.value)


def test_single_agent_warning(caplog):
    with caplog.at_level('WARNING', logger='epitab'):
        agents = resolve_agents(parse("K{a} p"), single_agent_policy='warn')
    assert agents == AgentSet(['a'])
    assert "At least two agents" in caplog.text

    solver = TableauSolver(single_agent_policy='warn')
    assert solver.solve(parse("K{a} p & ~D p")).verdict is Verdict.CLOSED


# ============================================================================
# Factory
# ============================================================================

def test_create_solver_from_names():
    solver = create_solver(agents='b, a', strict_rank=True, decision_scope='subformulae')
    assert solver.agents == AgentSet(['a', 'b'])
    assert isinstance(solver.rank_policy, StrictRankPolicy)
    assert solver.decision_scope == 'subformulae'


def test_create_solver_defaults():
    solver = create_solver(strict_rank=False)
    assert solver.agents is None
    assert isinstance(solver.rank_policy, MinRankPolicy)


def test_create_solver_rejects_unknown_policy():
    with pytest.raises(ValueError) as exc_info:
        create_solver(single_agent_policy='maybe')
    assert "single-agent policy" in str(exc_info.value)


@pytest.mark.parametrize("name, expected", [
    ('min', MinRankPolicy),
    ('path', MinRankPolicy),
    ('strict', StrictRankPolicy),
    ('MAX', StrictRankPolicy),
])
def test_create_rank_policy(name, expected):
    assert isinstance(create_rank_policy(name), expected)


# ============================================================================
# Run configuration
# ============================================================================

def test_run_config_overrides():
    run = load_run_config(agents="a, b", strict_rank=True, oracle_max_states=None)
    assert isinstance(run, RunConfig)
    assert run.agents == ('a', 'b')
    assert run.strict_rank
    assert 1 <= run.oracle_max_states <= 5
    assert run.export_paths() == {}


@pytest.mark.parametrize("overrides", [
    {'decision_scope': 'everything'},
    {'oracle_max_states': 0},
    {'oracle_max_states': 6},
])
def test_run_config_rejects_bad_values(overrides):
    with pytest.raises(ValueError):
        load_run_config(**overrides)


def test_run_config_export_paths(tmp_path):
    run = load_run_config(dot_final=str(tmp_path / "final.dot"), trace=tmp_path / "trace.txt")
    assert run.export_paths() == {
        'dot_final': tmp_path / "final.dot",
        'trace': tmp_path / "trace.txt",
    }
    assert isinstance(run.dot_final, Path)


def test_run_config_hintikka_path(tmp_path):
    run = load_run_config(hintikka=tmp_path / "structure.json")
    assert run.export_paths() == {'hintikka': tmp_path / "structure.json"}


def test_run_config_rejects_unwritable_paths(tmp_path):
    with pytest.raises(ValueError) as exc_info:
        load_run_config(witness=tmp_path / "missing" / "model.json")
    assert "Cannot write witness" in str(exc_info.value)
    with pytest.raises(ValueError) as exc_info:
        load_run_config(trace=tmp_path)
    assert "is a directory" in str(exc_info.value)
