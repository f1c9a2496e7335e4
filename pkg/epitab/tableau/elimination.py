"""
State elimination (rules E1, E2, E3) and the open/closed verdict.

E1 runs once over all states. The procedure then cycles through the
eventualities in rendering order; for each one it removes the states where
the eventuality is unrealized (E3), then removes states with a marked
formula that lost all of its successors (E2) until none is left. Cycles are
repeated until a full cycle removes nothing. Every removal is one stage of
the elimination trace.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from epitab.base import BaseRankPolicy
from epitab.formula.expansion import eventualities_of
from epitab.formula.syntax import Eventuality, Formula, Not, is_negated_knowledge, render
from epitab.tableau.graph import TableauGraph
from epitab.tableau.ranks import MinRankPolicy
from epitab.utils.logging_config import get_logger

logger = get_logger(__name__)


class Verdict(Enum):
    OPEN = "open"
    CLOSED = "closed"

    @property
    def satisfiable(self) -> bool:
        return self is Verdict.OPEN


@dataclass(frozen=True)
class EliminationRecord:
    """One stage of the elimination: which rule removed which state, and why."""
    stage: int
    rule: str
    removed: int
    reason: Optional[Formula] = None

    def to_line(self) -> str:
        reason = render(self.reason) if self.reason is not None else "-"
        return f"stage={self.stage} rule={self.rule} node={self.removed} reason={reason}"


@dataclass
class EliminationTrace:
    records: List[EliminationRecord] = field(default_factory=list)

    def record(self, rule: str, removed: int, reason: Optional[Formula]) -> EliminationRecord:
        entry = EliminationRecord(len(self.records) + 1, rule, removed, reason)
        self.records.append(entry)
        return entry

    def removed_by(self, rule: str) -> List[int]:
        return [r.removed for r in self.records if r.rule == rule]

    def to_text(self) -> str:
        return "".join(record.to_line() + "\n" for record in self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


# ============================================================================
# Rules
# ============================================================================

def inconsistency_witness(formulas) -> Optional[Formula]:
    """First formula (in rendering order) that occurs together with its negation."""
    for formula in formulas:
        if Not(formula) in formulas:
            return formula
    return None


def missing_successor(graph: TableauGraph, state: int) -> Optional[Formula]:
    """First ~K/~D member of the state that has no surviving successor, if any."""
    for chi in graph.formulas(state):
        if is_negated_knowledge(chi) and not graph.marked_successors(state, chi):
            return chi
    return None


def _apply_e1(graph: TableauGraph, trace: EliminationTrace):
    for node in graph.states():
        witness = inconsistency_witness(node.formulas)
        if witness is not None:
            graph.remove_node(node.id)
            trace.record('E1', node.id, witness)
            logger.debug(f"E1 removed state {node.id} ({witness} and its negation)")


def _apply_e2(graph: TableauGraph, trace: EliminationTrace) -> int:
    removed = 0
    while True:
        victim: Optional[Tuple[int, Formula]] = None
        for node in graph.states():
            chi = missing_successor(graph, node.id)
            if chi is not None:
                victim = (node.id, chi)
                break
        if victim is None:
            return removed
        graph.remove_node(victim[0])
        trace.record('E2', victim[0], victim[1])
        logger.debug(f"E2 removed state {victim[0]} (no successor for {victim[1]})")
        removed += 1


def _apply_e3(
    graph: TableauGraph,
    eventuality: Eventuality,
    policy: BaseRankPolicy,
    trace: EliminationTrace
) -> int:
    # ranks only grow as states disappear, so one computation per pass suffices
    victims = policy.unrealized(graph, eventuality)
    for node_id in victims:
        graph.remove_node(node_id)
        trace.record('E3', node_id, eventuality.formula)
        logger.debug(f"E3 removed state {node_id} ({eventuality} not realized)")
    return len(victims)


def eliminate_states(
    initial: TableauGraph,
    policy: Optional[BaseRankPolicy] = None
) -> Tuple[TableauGraph, EliminationTrace]:
    """
    Run E1, then E3/E2 cycles over the eventualities until nothing changes.

    Args:
        initial: Initial tableau (left unchanged)
        policy: Rank policy for E3 (default: min ranks)

    Returns:
        Tuple of (final tableau, elimination trace)
    """
    policy = policy or MinRankPolicy()
    graph = initial.copy()
    trace = EliminationTrace()

    _apply_e1(graph, trace)

    eventualities = eventualities_of(node.formulas for node in initial.states())
    if not eventualities:
        _apply_e2(graph, trace)
    else:
        while True:
            removed = 0
            for eventuality in eventualities:
                removed += _apply_e3(graph, eventuality, policy, trace)
                removed += _apply_e2(graph, trace)
            if removed == 0:
                break

    logger.info(
        f"Elimination ({policy.name} ranks): {len(trace)} stages, "
        f"{len(graph.states())} states survive"
    )
    return graph, trace


def replay_trace(initial: TableauGraph, trace: EliminationTrace) -> TableauGraph:
    """Remove the traced states from a copy of the initial tableau, in stage order."""
    graph = initial.copy()
    for record in trace:
        graph.remove_node(record.removed)
    return graph


def verdict(final: TableauGraph, theta: Formula) -> Verdict:
    """Open iff some surviving state contains theta."""
    if any(theta in node.formulas for node in final.states()):
        return Verdict.OPEN
    return Verdict.CLOSED
