"""
Pretableau construction (rules SR, KR, DR) and prestate elimination (PR).
"""
from collections import deque
from typing import Deque, List, Set

from epitab.errors import InvariantBreach
from epitab.formula.expansion import (
    extended_closure,
    is_patently_inconsistent,
    minimal_fully_expanded_extensions,
)
from epitab.formula.syntax import (
    AgentSet,
    Dist,
    Formula,
    FormulaSet,
    Knows,
    Not,
    is_negated_knowledge,
)
from epitab.tableau.graph import NodeKind, TableauGraph
from epitab.utils.logging_config import get_logger

logger = get_logger(__name__)


def apply_sr(graph: TableauGraph, prestate: int, scope: str = None) -> List[int]:
    """
    Rule SR: connect a prestate to a state for each of its fully expanded
    extensions, reusing existing states with equal contents.

    Args:
        graph: Pretableau under construction
        prestate: Id of the prestate to expand
        scope: Decision clause scope

    Returns:
        Ids of the extension states, in discovery order
    """
    node = graph.node(prestate)
    if node.kind is not NodeKind.PRESTATE:
        raise InvariantBreach(f"SR applied to non-prestate {prestate}")

    targets: List[int] = []
    for extension in minimal_fully_expanded_extensions(node.formulas, graph.agents, scope):
        state, created = graph.add_node(NodeKind.STATE, extension)
        graph.add_double_edge(prestate, state)
        targets.append(state)
        if created:
            logger.debug(f"SR: prestate {prestate} => new state {state} {extension}")
    return targets


def _successor_prestate(graph: TableauGraph, state: int, chi: Formula) -> FormulaSet:
    members = graph.formulas(state)
    modal = chi.child
    carried = {Not(modal.child)}

    if isinstance(modal, Knows):
        for formula in members:
            if isinstance(formula, Knows) and formula.agent == modal.agent:
                carried.add(formula)
            elif is_negated_knowledge(formula) and isinstance(formula.child, Knows) \
                    and formula.child.agent == modal.agent:
                carried.add(formula)
    else:
        for formula in members:
            if isinstance(formula, (Knows, Dist)) or is_negated_knowledge(formula):
                carried.add(formula)
    return FormulaSet(carried)


def _connect(graph: TableauGraph, state: int, chi: Formula, rule: str) -> int:
    node = graph.node(state)
    if not node.is_state:
        raise InvariantBreach(f"{rule} applied to non-state {state}")
    if chi not in node.formulas:
        raise InvariantBreach(f"{rule}: {chi} is not a member of state {state}")
    if is_patently_inconsistent(node.formulas):
        raise InvariantBreach(f"{rule} applied to inconsistent state {state}")

    contents = _successor_prestate(graph, state, chi)
    prestate, created = graph.add_node(NodeKind.PRESTATE, contents)
    graph.add_marked_edge(state, chi, prestate)
    if created:
        logger.debug(f"{rule}: state {state} --{chi}--> new prestate {prestate} {contents}")
    return prestate


def apply_kr(graph: TableauGraph, state: int, chi: Formula) -> int:
    """
    Rule KR for ``chi = ~K_a phi``: successor prestate holding ``~phi`` and
    every K_a and ~K_a formula of the state.

    Returns:
        Id of the (new or reused) prestate
    """
    if not (isinstance(chi, Not) and isinstance(chi.child, Knows)):
        raise InvariantBreach(f"KR needs a ~K formula, got {chi}")
    return _connect(graph, state, chi, 'KR')


def apply_dr(graph: TableauGraph, state: int, chi: Formula) -> int:
    """
    Rule DR for ``chi = ~D phi``: successor prestate holding ``~phi`` and
    every D, ~D, K_x and ~K_x formula of the state, for all agents x.

    Returns:
        Id of the (new or reused) prestate
    """
    if not (isinstance(chi, Not) and isinstance(chi.child, Dist)):
        raise InvariantBreach(f"DR needs a ~D formula, got {chi}")
    return _connect(graph, state, chi, 'DR')


def build_pretableau(theta: Formula, agents: AgentSet, scope: str = None) -> TableauGraph:
    """
    Build the pretableau for theta: start from the prestate {theta} and
    alternate SR with KR/DR until no rule adds a node.

    States are processed in creation order; a patently inconsistent state
    gets no successors.

    Args:
        theta: Input formula
        agents: Agent set
        scope: Decision clause scope

    Returns:
        The completed pretableau
    """
    graph = TableauGraph(theta, agents)
    root, _ = graph.add_node(NodeKind.PRESTATE, FormulaSet([theta]))
    graph.root = root

    ecl = extended_closure(theta, agents)
    queue: Deque[int] = deque([root])
    processed: Set[int] = set()

    while queue:
        node_id = queue.popleft()
        if node_id in processed:
            continue
        processed.add(node_id)
        node = graph.node(node_id)

        if not node.formulas.issubset(ecl):
            raise InvariantBreach(f"Node {node_id} leaves the extended closure: {node.formulas}")

        if node.kind is NodeKind.PRESTATE:
            queue.extend(apply_sr(graph, node_id, scope))
            continue

        if is_patently_inconsistent(node.formulas):
            continue
        for chi in node.formulas:
            if not is_negated_knowledge(chi):
                continue
            if isinstance(chi.child, Knows):
                queue.append(apply_kr(graph, node_id, chi))
            else:
                queue.append(apply_dr(graph, node_id, chi))

    logger.info(
        f"Pretableau for {theta}: {len(graph.prestates())} prestates, "
        f"{len(graph.states())} states, |ecl| = {len(ecl)}"
    )
    return graph


def eliminate_prestates(pretableau: TableauGraph) -> TableauGraph:
    """
    Rule PR: drop all prestates, redirecting every marked edge that pointed at
    a prestate to each state of that prestate.

    Args:
        pretableau: Completed pretableau (left unchanged)

    Returns:
        The initial tableau: states only, marked edges between states
    """
    initial = pretableau.states_only()
    for edge in pretableau.marked_edges():
        targets = pretableau.double_successors(edge.target)
        if not targets:
            raise InvariantBreach(f"Prestate {edge.target} has no states")
        for state in targets:
            initial.add_marked_edge(edge.source, edge.label, state)

    logger.info(
        f"Initial tableau: {len(initial.states())} states, "
        f"{len(initial.marked_edges())} marked edges"
    )
    return initial
