"""
Frame condition checks on (pseudo-)models.
"""
from dataclasses import dataclass, field
from typing import List

from epitab.model.structure import PseudoModel
from epitab.utils.relations import (
    Relation,
    reflexivity_violation,
    symmetry_violation,
    transitive_closure,
    transitivity_violation,
)


@dataclass
class FrameReport:
    violations: List[str] = field(default_factory=list)
    genuine: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def kind(self) -> str:
        if not self.ok:
            return "invalid"
        return "genuine" if self.genuine else "pseudo"


def _check_equivalence(report: FrameReport, name: str, worlds, relation: Relation):
    pair = reflexivity_violation(worlds, relation)
    if pair is not None:
        report.violations.append(f"{name} is not reflexive: missing ({pair[0]}, {pair[1]})")
    pair = symmetry_violation(relation)
    if pair is not None:
        report.violations.append(
            f"{name} is not symmetric: ({pair[0]}, {pair[1]}) without ({pair[1]}, {pair[0]})"
        )
    triple = transitivity_violation(worlds, relation)
    if triple is not None:
        s, t, u = triple
        report.violations.append(
            f"{name} is not transitive: ({s}, {t}), ({t}, {u}) without ({s}, {u})"
        )


def check_frame_conditions(model: PseudoModel) -> FrameReport:
    """
    Verify the (pseudo-)frame conditions of a model.

    Every R_a and R_D must be an equivalence relation, R_D must be contained
    in the intersection of the agent relations, and R_C must be the transitive
    closure of their union. The model is genuine when R_D equals the
    intersection.

    Args:
        model: Model to check

    Returns:
        FrameReport listing each violation with the offending pair
    """
    report = FrameReport()
    worlds = model.worlds
    for agent in model.agents:
        _check_equivalence(report, f"R_{agent}", worlds, model.relations[agent])
    _check_equivalence(report, "R_D", worlds, model.rd)

    intersection = model.intersection()
    extra = sorted(model.rd - intersection)
    if extra:
        s, t = extra[0]
        report.violations.append(f"R_D is not contained in the agent relations: ({s}, {t})")

    if model.rc != transitive_closure(worlds, model.union()):
        report.violations.append("R_C is not the transitive closure of the agent relations")

    report.genuine = model.rd == intersection
    return report
