"""
Bridges between Hintikka structures and models.

``pseudo_model_from_hintikka`` closes the relations of a valid Hintikka
structure into a pseudo-model and checks the truth lemma on every label
member. ``hintikka_from_model`` goes the other way: it labels each world of a
model with the formulas of the extended closure that are true there.
"""
from typing import Dict, List, Optional

from epitab.errors import HintikkaValidationError
from epitab.formula.expansion import extended_closure
from epitab.formula.syntax import Atom, Formula, FormulaSet, Not, render
from epitab.hintikka.structure import HintikkaStructure
from epitab.hintikka.validation import validate_hintikka
from epitab.model.checker import ModelChecker
from epitab.model.structure import PseudoModel
from epitab.utils.logging_config import get_logger
from epitab.utils.relations import equivalence_closure

logger = get_logger(__name__)


def truth_lemma_violations(model: PseudoModel, structure: HintikkaStructure) -> List[str]:
    """
    Label members that the model evaluates the wrong way.

    Every formula in a world's label must hold at that world, and the body of
    every negated label member must fail there.
    """
    checker = ModelChecker(model)
    violations: List[str] = []
    for world in structure.worlds:
        for formula in structure.labels[world]:
            if not checker.holds(world, formula):
                violations.append(f"{render(formula)} is in the label of {world} but false there")
            if isinstance(formula, Not) and checker.holds(world, formula.child):
                violations.append(
                    f"{render(formula)} is in the label of {world} but "
                    f"{render(formula.child)} is true there"
                )
    return violations


def pseudo_model_from_hintikka(
    structure: HintikkaStructure,
    theta: Optional[Formula] = None,
    scope: str = None
) -> PseudoModel:
    """
    Turn a valid Hintikka structure into a pseudo-model.

    R'_a is the reflexive, symmetric and transitive closure of R_a together
    with R_D, R'_D that of R_D, and the valuation keeps the atoms of each
    label.

    Args:
        structure: Hintikka structure
        theta: Input formula the structure must contain (optional)
        scope: Decision clause scope used to validate the labels

    Returns:
        PseudoModel carrying the structure's labels

    Raises:
        HintikkaValidationError: If the structure is invalid or the truth lemma fails
    """
    report = validate_hintikka(structure, theta, scope)
    if not report.ok:
        raise HintikkaValidationError("Invalid Hintikka structure", report.violations)

    worlds = list(structure.worlds)
    relations = {
        agent: equivalence_closure(worlds, set(structure.relations[agent]) | set(structure.rd))
        for agent in structure.agents
    }
    valuation = {
        w: frozenset(f.name for f in structure.labels[w] if isinstance(f, Atom)) for w in worlds
    }
    model = PseudoModel(
        agents=structure.agents,
        worlds=worlds,
        relations=relations,
        rd=equivalence_closure(worlds, structure.rd),
        valuation=valuation,
        atoms=structure.atoms(),
        labels=dict(structure.labels),
    )

    violations = truth_lemma_violations(model, structure)
    if violations:
        raise HintikkaValidationError("Truth lemma fails on the derived pseudo-model", violations)

    logger.info(
        f"Pseudo-model with {len(worlds)} world(s) derived "
        f"({'genuine' if model.genuine else 'pseudo'})"
    )
    return model


def hintikka_from_model(
    model: PseudoModel,
    world: str,
    theta: Formula
) -> HintikkaStructure:
    """
    Label every world of a model with the true members of ecl(theta).

    Args:
        model: Genuine model
        world: World to designate
        theta: Formula whose extended closure provides the labels

    Returns:
        HintikkaStructure over the model's worlds and relations
    """
    model.require_world(world)
    checker = ModelChecker(model)
    ecl = extended_closure(theta, model.agents)
    labels: Dict[str, FormulaSet] = {}
    for w in model.worlds:
        labels[w] = FormulaSet(f for f in ecl if checker.holds(w, f))
    return HintikkaStructure(
        agents=model.agents,
        worlds=list(model.worlds),
        relations=dict(model.relations),
        rd=model.rd,
        labels=labels,
        designated=world,
    )
