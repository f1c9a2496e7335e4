"""
Checks of the Hintikka conditions H1-H9 on a labeled structure.

    H1  no label holds a formula together with its negation
    H2  every label is fully expanded
    H3  K_a phi at s and (s,t) in R_a  =>  phi at t
    H4  ~K_a phi at s  =>  some R_a-successor holds ~phi
    H5  (s,t) in R_a  =>  K_a phi at s iff K_a phi at t
    H6  D phi at s and (s,t) in R_D  =>  phi at t
    H7  ~D phi at s  =>  some R_D-successor holds ~phi
    H8  (s,t) in R_D  =>  D phi and every K_x phi agree between s and t
    H9  ~C phi at s  =>  some R_C-successor holds ~phi

On top of these the structure must have R_C equal to the transitive closure
of the other relations, and some label must hold the input formula.
"""
from dataclasses import dataclass, field
from typing import List, Optional

from epitab.formula.expansion import is_fully_expanded
from epitab.formula.syntax import Common, Dist, Formula, Knows, Not, render
from epitab.hintikka.structure import HintikkaStructure, common_relation
from epitab.utils.logging_config import get_logger
from epitab.utils.relations import successor_map

logger = get_logger(__name__)


@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, condition: str, message: str):
        self.violations.append(f"{condition}: {message}")

    def __len__(self) -> int:
        return len(self.violations)


def _agree(label_s, label_t, shape) -> Optional[Formula]:
    for formula in list(label_s) + list(label_t):
        if shape(formula) and ((formula in label_s) != (formula in label_t)):
            return formula
    return None


def validate_hintikka(
    structure: HintikkaStructure,
    theta: Optional[Formula] = None,
    scope: str = None
) -> ValidationReport:
    """
    Check a structure against H1-H9, the R_C condition and (optionally) theta.

    Args:
        structure: Structure to check
        theta: Formula some label must contain (skipped when None)
        scope: Decision clause scope used for H2

    Returns:
        ValidationReport, empty when every condition holds
    """
    report = ValidationReport()
    worlds = structure.worlds
    labels = structure.labels
    r_a = {a: successor_map(worlds, structure.relations[a]) for a in structure.agents}
    r_d = successor_map(worlds, structure.rd)
    r_c = successor_map(worlds, structure.rc)

    if structure.rc != common_relation(worlds, structure.relations, structure.rd):
        report.add('MAES', "R_C is not the transitive closure of R_D and the agent relations")

    for s in worlds:
        label = labels[s]
        for formula in label:
            if Not(formula) in label:
                report.add('H1', f"{s} holds {render(formula)} and its negation")

        if not is_fully_expanded(label, structure.agents, scope):
            report.add('H2', f"label of {s} is not fully expanded: {label}")

        for formula in label:
            if isinstance(formula, Knows):
                for t in sorted(r_a[formula.agent][s]):
                    if formula.child not in labels[t]:
                        report.add('H3', f"{render(formula)} at {s} but {render(formula.child)} "
                                         f"missing at {formula.agent}-successor {t}")
            elif isinstance(formula, Dist):
                for t in sorted(r_d[s]):
                    if formula.child not in labels[t]:
                        report.add('H6', f"{render(formula)} at {s} but {render(formula.child)} "
                                         f"missing at D-successor {t}")
            elif isinstance(formula, Not):
                inner = formula.child
                witness = Not(inner.child) if isinstance(inner, (Knows, Dist, Common)) else None
                if isinstance(inner, Knows):
                    successors, condition = r_a[inner.agent][s], 'H4'
                elif isinstance(inner, Dist):
                    successors, condition = r_d[s], 'H7'
                elif isinstance(inner, Common):
                    successors, condition = r_c[s], 'H9'
                else:
                    continue
                if not any(witness in labels[t] for t in successors):
                    report.add(condition, f"{render(formula)} at {s} has no successor holding "
                                          f"{render(witness)}")

        for agent in structure.agents:
            def knows_of_agent(f, a=agent):
                return isinstance(f, Knows) and f.agent == a

            for t in sorted(r_a[agent][s]):
                differs = _agree(label, labels[t], knows_of_agent)
                if differs is not None:
                    report.add('H5', f"{render(differs)} differs between {s} and {t}")
        for t in sorted(r_d[s]):
            differs = _agree(label, labels[t], lambda f: isinstance(f, (Knows, Dist)))
            if differs is not None:
                report.add('H8', f"{render(differs)} differs between {s} and D-successor {t}")

    if theta is not None and not any(theta in labels[w] for w in worlds):
        report.add('theta', f"no label contains {render(theta)}")

    if report.violations:
        logger.debug(f"Hintikka validation found {len(report)} violation(s)")
    return report
