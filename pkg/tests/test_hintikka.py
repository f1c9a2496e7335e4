"""
Tests for final tree components, stitching and Hintikka validation.
"""
import json

import pytest

from epitab.errors import HintikkaValidationError, ModelFormatError
from epitab.formula import And, Atom, Common, Dist, Eventuality, FormulaSet, Knows, Not, parse
from epitab.hintikka import (
    HintikkaStructure,
    build_component,
    deferred_eventualities,
    stitch_hintikka,
    validate_hintikka,
)
from epitab.model import (
    brute_force_sat,
    hintikka_from_model,
    pseudo_model_from_hintikka,
    satisfies,
    truth_lemma_violations,
)
from epitab.solver import TableauSolver
from epitab.tableau import MinRankPolicy

p, q = Atom('p'), Atom('q')
EXAMPLE = "K{a} p & K{b} p & ~D C p"

STITCH_CORPUS = [
    EXAMPLE,
    "~K{a} p",
    "C p",
    "~C p",
    "~C p & K{a} p",
    "~D p & K{b} q",
    "~C ~K{a} p",
]


def _conditions(report):
    return {line.split(':')[0] for line in report.violations}


def _structure(ab, labels, relations=None, rd=frozenset()):
    worlds = list(labels)
    return HintikkaStructure(
        agents=ab,
        worlds=worlds,
        relations={a: frozenset(pairs) for a, pairs in (relations or {}).items()},
        rd=frozenset(rd),
        labels={w: FormulaSet(fs) for w, fs in labels.items()},
        designated=worlds[0],
    )


@pytest.mark.parametrize("text", STITCH_CORPUS)
def test_stitched_structure_is_valid(ab, text):
    theta = parse(text, ab)
    result = TableauSolver(ab).solve(theta)
    assert result.satisfiable

    structure = stitch_hintikka(result.final, theta)
    assert structure.designated == 'w0'
    assert theta in structure.labels['w0']
    report = validate_hintikka(structure, theta, 'closure')
    assert report.ok, report.violations

    model = pseudo_model_from_hintikka(structure, theta, 'closure')
    assert truth_lemma_violations(model, structure) == []
    assert satisfies(model, 'w0', theta)


def test_stitching_is_deterministic(ab, example):
    result = TableauSolver(ab).solve(example)
    first = stitch_hintikka(result.final, example)
    second = stitch_hintikka(result.final, example)
    assert first.worlds == second.worlds
    assert first.edges() == second.edges()
    assert first.labels == second.labels


def test_components_realize_eventuality(ab):
    theta = parse("~C p", ab)
    result = TableauSolver(ab).solve(theta)
    ev = Eventuality(theta)
    ranks = MinRankPolicy().compute(result.final, ev)

    for node in result.final.states():
        if theta not in node.formulas:
            continue
        component = build_component(result.final, node.id, ev, ranks)
        assert component.realizing
        last = component.states[component.spine[-1]]
        assert ev.witness in result.final.formulas(last)
        assert len(component.spine) == ranks[node.id] + 1


def test_simple_components_defer_eventualities_to_a_leaf(ab):
    theta = parse("~C p & ~C q", ab)
    result = TableauSolver(ab).solve(theta)
    assert result.satisfiable
    for node in result.final.states():
        component = build_component(result.final, node.id, None)
        assert not component.realizing
        assert deferred_eventualities(component, result.final) == []


def test_validation_accepts_single_world(ab):
    structure = _structure(ab, {'w0': {p, Not(q)}})
    assert validate_hintikka(structure, p).ok


def test_validation_reports_inconsistent_label(ab):
    structure = _structure(ab, {'w0': {p, Not(p)}})
    assert 'H1' in _conditions(validate_hintikka(structure))


def test_validation_reports_unexpanded_label(ab):
    structure = _structure(ab, {'w0': {And(p, q)}})
    assert 'H2' in _conditions(validate_hintikka(structure))


def test_validation_reports_knowledge_violations(ab):
    ka = Knows('a', p)
    structure = _structure(
        ab,
        {'w0': {ka, Dist(p), p}, 'w1': {Not(p)}},
        relations={'a': {('w0', 'w1')}},
    )
    conditions = _conditions(validate_hintikka(structure))
    assert 'H3' in conditions
    assert 'H5' in conditions


def test_validation_reports_missing_witnesses(ab):
    structure = _structure(ab, {'w0': {Not(Knows('a', p)), Not(Dist(q))}})
    conditions = _conditions(validate_hintikka(structure))
    assert 'H4' in conditions
    assert 'H7' in conditions


def test_validation_reports_unrealized_common_knowledge(ab):
    c_p = Common(p)
    structure = _structure(ab, {'w0': {Not(c_p), Not(Knows('a', And(p, c_p)))}})
    assert 'H9' in _conditions(validate_hintikka(structure))


def test_validation_reports_distributed_disagreement(ab):
    structure = _structure(
        ab,
        {'w0': {Dist(p), p}, 'w1': {p}},
        rd={('w0', 'w1')},
    )
    assert 'H8' in _conditions(validate_hintikka(structure))


def test_validation_requires_theta(ab):
    structure = _structure(ab, {'w0': {p}})
    assert 'theta' in _conditions(validate_hintikka(structure, q))


def test_pseudo_model_rejects_invalid_structure(ab):
    structure = _structure(ab, {'w0': {p, Not(p)}})
    with pytest.raises(HintikkaValidationError) as exc_info:
        pseudo_model_from_hintikka(structure)
    assert exc_info.value.violations


def test_pseudo_model_closes_relations(ab):
    ka = Not(Knows('a', p))
    structure = _structure(
        ab,
        {'w0': {ka, Dist(p), p}, 'w1': {Not(p)}},
        relations={'a': {('w0', 'w1')}},
    )
    model = pseudo_model_from_hintikka(structure, ka)
    assert ('w1', 'w0') in model.relations['a']
    assert ('w1', 'w1') in model.relations['a']
    assert model.rd == frozenset({('w0', 'w0'), ('w1', 'w1')})
    assert satisfies(model, 'w0', ka)


@pytest.mark.parametrize("text", [EXAMPLE, "~C p", "K{a} p & ~K{b} p"])
def test_labels_of_oracle_model_form_hintikka_structure(ab, text):
    theta = parse(text, ab)
    witness = brute_force_sat(theta, ab, 3)
    structure = hintikka_from_model(witness.model, witness.world, theta)
    assert theta in structure.labels[witness.world]
    assert validate_hintikka(structure, theta, 'closure').ok
    assert truth_lemma_violations(witness.model, structure) == []


# ============================================================================
# JSON form
# ============================================================================

def test_structure_json_round_trip(ab, example, tmp_path):
    result = TableauSolver(ab).solve(example)
    structure = stitch_hintikka(result.final, example)
    path = tmp_path / "structure.json"
    structure.save(path)

    data = json.loads(path.read_text())
    assert set(data) == {
        'agents', 'states', 'atoms', 'valuation', 'relations', 'rd', 'genuine', 'labels',
    }
    model = pseudo_model_from_hintikka(structure, example, 'closure')
    assert data['genuine'] is model.genuine

    loaded = HintikkaStructure.load(path)
    assert loaded.worlds == structure.worlds
    assert loaded.designated == 'w0'
    for agent in ab:
        assert loaded.relations[agent] == frozenset(structure.relations[agent])
    assert loaded.rd == frozenset(structure.rd)
    assert loaded.labels == structure.labels
    assert validate_hintikka(loaded, example, 'closure').ok


def test_structure_genuine_flag(ab):
    one_world = _structure(ab, {'w0': {p}})
    assert one_world.genuine
    assert one_world.to_json()['genuine'] is True

    shared = _structure(
        ab,
        {'w0': {p}, 'w1': {p}},
        relations={'a': {('w0', 'w1')}, 'b': {('w0', 'w1')}},
    )
    assert not shared.genuine
    assert shared.to_json()['genuine'] is False


@pytest.mark.parametrize("data, message", [
    ({'agents': ['a', 'b'], 'states': ['w0'], 'relations': {}}, "missing field"),
    ({'agents': ['a', 'b'], 'states': [], 'relations': {}, 'labels': {}}, "no states"),
    ({'agents': ['a', 'b'], 'states': ['w0'], 'relations': {'c': []}, 'labels': {}},
     "undeclared agent"),
    ({'agents': ['a', 'b'], 'states': ['w0'], 'relations': {'a': [['w0', 'w1']]},
      'labels': {}}, "Unknown world"),
    ({'agents': ['a', 'b'], 'states': ['w0'], 'relations': {}, 'labels': {'w9': ['p']}},
     "Unknown world"),
])
def test_structure_from_json_errors(data, message):
    with pytest.raises(ModelFormatError) as exc_info:
        HintikkaStructure.from_json(data)
    assert message in str(exc_info.value)


def test_structure_load_missing_file(tmp_path):
    with pytest.raises(ModelFormatError):
        HintikkaStructure.load(tmp_path / "absent.json")
