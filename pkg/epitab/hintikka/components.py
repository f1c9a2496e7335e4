"""
Final tree components.

A component is a small tree of final-tableau states rooted at one state. If
the component's eventuality is not in the root (or there is none), the tree
is the root plus one child per ``~K_a``/``~D`` formula of the root. Otherwise
the tree follows a realizing path down the min ranks to a state holding the
eventuality's witness, and every node of that path gets one child per
``~K_a``/``~D`` formula as well. Children that are not on the path are the
component's leaves.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from epitab.base import OMEGA, Rank
from epitab.errors import InvariantBreach
from epitab.formula.expansion import eventualities_of
from epitab.formula.syntax import Eventuality, Formula, Knows, is_negated_knowledge
from epitab.tableau.graph import TableauGraph
from epitab.utils.logging_config import get_logger

logger = get_logger(__name__)


@dataclass
class FinalTreeComponent:
    """
    Attributes:
        root_state: Final-tableau state id at the root
        eventuality: Eventuality the component realizes (None for a simple tree)
        states: Final-tableau state id of every local node; node 0 is the root
        edges: (parent, relation, child) triples on local nodes; relation is an
            agent name, or None for R_D
        leaves: Local nodes left to be served by other components
        spine: Local nodes of the realizing path, root first
    """
    root_state: int
    eventuality: Optional[Eventuality]
    states: List[int] = field(default_factory=list)
    edges: List[Tuple[int, Optional[str], int]] = field(default_factory=list)
    leaves: List[int] = field(default_factory=list)
    spine: List[int] = field(default_factory=list)

    def _add(self, state: int) -> int:
        self.states.append(state)
        return len(self.states) - 1

    @property
    def realizing(self) -> bool:
        return bool(self.spine)


def _relation_of(chi: Formula) -> Optional[str]:
    return chi.child.agent if isinstance(chi.child, Knows) else None


def _successor(final: TableauGraph, state: int, chi: Formula) -> int:
    targets = final.marked_successors(state, chi)
    if not targets:
        raise InvariantBreach(f"State {state} has no surviving successor for {chi}")
    return targets[0]


def _descend(final: TableauGraph, state: int, ranks: Dict[int, Rank]) -> Tuple[Formula, int]:
    """Label and successor one rank closer to the witness, ties by label then id."""
    wanted = ranks[state] - 1
    for chi in final.iter_labels(state):
        for target in final.marked_successors(state, chi):
            if ranks.get(target, OMEGA) == wanted:
                return chi, target
    raise InvariantBreach(f"State {state} of rank {ranks[state]} has no successor of rank {wanted}")


def _equip(component: FinalTreeComponent, final: TableauGraph, local: int,
           skip: Optional[Formula] = None):
    state = component.states[local]
    for chi in final.formulas(state):
        if not is_negated_knowledge(chi) or chi == skip:
            continue
        child = component._add(_successor(final, state, chi))
        component.edges.append((local, _relation_of(chi), child))
        component.leaves.append(child)


def build_component(
    final: TableauGraph,
    state: int,
    eventuality: Optional[Eventuality],
    ranks: Optional[Dict[int, Rank]] = None
) -> FinalTreeComponent:
    """
    Build the component rooted at a final-tableau state.

    Args:
        final: Final tableau of an open run
        state: Root state id
        eventuality: Eventuality to realize, or None
        ranks: Min ranks of the final tableau for that eventuality

    Returns:
        The component

    Raises:
        InvariantBreach: If a required successor or realizing path is missing
    """
    component = FinalTreeComponent(state, eventuality)
    root = component._add(state)

    if eventuality is None or eventuality.formula not in final.formulas(state):
        _equip(component, final, root)
        return component

    if ranks is None or ranks.get(state, OMEGA) == OMEGA:
        raise InvariantBreach(f"Eventuality {eventuality} is not realized at state {state}")

    current = root
    component.spine.append(root)
    while ranks[component.states[current]] > 0:
        chi, target = _descend(final, component.states[current], ranks)
        _equip(component, final, current, skip=chi)
        following = component._add(target)
        component.edges.append((current, _relation_of(chi), following))
        component.spine.append(following)
        current = following
    _equip(component, final, current)

    logger.debug(
        f"Component at state {state} realizes {eventuality} along "
        f"{[component.states[n] for n in component.spine]}"
    )
    return component


def deferred_eventualities(component: FinalTreeComponent, final: TableauGraph) -> List[str]:
    """
    Check that the root's eventualities are realized in the component or
    carried on to at least one leaf.

    Returns:
        Rendered eventualities for which neither holds (empty when all is well)
    """
    labels = [final.formulas(s) for s in component.states]
    leaf_labels = [labels[n] for n in component.leaves]
    missing = []
    for eventuality in eventualities_of([labels[0]]):
        if any(eventuality.witness in label for label in labels):
            continue
        if not any(eventuality.formula in label for label in leaf_labels):
            missing.append(str(eventuality))
    return missing
