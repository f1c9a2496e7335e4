"""
End-to-end satisfiability runs.

``TableauSolver`` wires the phases together: pretableau construction,
prestate elimination, state elimination and the verdict, followed (for open
tableaux) by Hintikka extraction and a re-check of the pseudo-model witness.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from epitab import config
from epitab.base import BaseRankPolicy
from epitab.errors import AgentSetError, HintikkaValidationError, InvariantBreach, UnknownAgentError
from epitab.formula.expansion import eventualities_of, extended_closure
from epitab.formula.syntax import AgentSet, Formula, Not, agents_of
from epitab.hintikka.stitching import stitch_hintikka
from epitab.hintikka.structure import HintikkaStructure
from epitab.model.checker import satisfies
from epitab.model.structure import PseudoModel
from epitab.model.witness import pseudo_model_from_hintikka
from epitab.tableau.construction import build_pretableau, eliminate_prestates
from epitab.tableau.elimination import EliminationTrace, Verdict, eliminate_states, verdict
from epitab.tableau.graph import TableauGraph
from epitab.tableau.ranks import MinRankPolicy, StrictRankPolicy
from epitab.utils.logging_config import get_logger

logger = get_logger(__name__)


@dataclass
class TableauStatistics:
    ecl_size: int
    prestates: int
    states: int
    live_states: int
    marked_edges: int
    node_bound: int
    stages: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ecl_size': self.ecl_size,
            'prestates': self.prestates,
            'states': self.states,
            'live_states': self.live_states,
            'marked_edges': self.marked_edges,
            'node_bound': self.node_bound,
            'stages': self.stages,
        }

    def lines(self) -> List[str]:
        return [f"{key}: {value}" for key, value in self.to_dict().items()]


@dataclass
class TableauResult:
    """All artifacts of one tableau run."""
    theta: Formula
    agents: AgentSet
    decision_scope: str
    rank_policy: str
    pretableau: TableauGraph
    initial: TableauGraph
    final: TableauGraph
    trace: EliminationTrace
    verdict: Verdict

    @property
    def satisfiable(self) -> bool:
        return self.verdict.satisfiable

    def statistics(self) -> TableauStatistics:
        ecl_size = len(extended_closure(self.theta, self.agents))
        return TableauStatistics(
            ecl_size=ecl_size,
            prestates=len(self.pretableau.prestates()),
            states=len(self.pretableau.states()),
            live_states=len(self.final.states()),
            marked_edges=len(self.initial.marked_edges()),
            node_bound=2 * 2 ** ecl_size,
            stages=len(self.trace),
        )


@dataclass
class SolverWitness:
    """Witness of an open run: the Hintikka structure and its pseudo-model."""
    structure: HintikkaStructure
    model: PseudoModel
    world: str


@dataclass
class RankComparison:
    """Outcome of running both rank policies on the same initial tableau."""
    min_verdict: Verdict
    strict_verdict: Verdict
    only_min: List[Tuple[int, str]] = field(default_factory=list)
    only_strict: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def diverges(self) -> bool:
        return bool(self.only_min or self.only_strict) or self.min_verdict != self.strict_verdict


def resolve_agents(
    theta: Formula,
    agents: Optional[AgentSet] = None,
    single_agent_policy: Optional[str] = None
) -> AgentSet:
    """
    Determine the agent set of a run and enforce the size policy.

    Args:
        theta: Input formula
        agents: Declared agents, or None to use the agents occurring in theta
        single_agent_policy: 'error' or 'warn' (config default)

    Returns:
        The agent set

    Raises:
        UnknownAgentError: If theta names an undeclared agent
        AgentSetError: If fewer than two agents remain under the 'error' policy
    """
    policy = single_agent_policy or config.SINGLE_AGENT_POLICY
    if agents is None:
        mentioned = agents_of(theta)
        if not mentioned:
            raise AgentSetError("No agents declared and none occur in the formula")
        agents = AgentSet(mentioned)
    else:
        unknown = sorted(agents_of(theta) - set(agents))
        if unknown:
            raise UnknownAgentError(unknown[0], list(agents))

    if len(agents) < 2:
        message = f"At least two agents are required, got {{{agents}}}"
        if policy == 'warn':
            logger.warning(f"{message}; continuing")
        else:
            raise AgentSetError(message)
    return agents


class TableauSolver:
    """
    Satisfiability solver for MAEL(CD).

    Args:
        agents: Agent set (None: agents occurring in each input formula)
        rank_policy: Rank policy for E3 (default: min ranks)
        decision_scope: 'closure' or 'subformulae' (config default)
        single_agent_policy: 'error' or 'warn' (config default)
    """

    def __init__(
        self,
        agents: Optional[AgentSet] = None,
        rank_policy: Optional[BaseRankPolicy] = None,
        decision_scope: Optional[str] = None,
        single_agent_policy: Optional[str] = None
    ):
        self.agents = agents
        self.rank_policy = rank_policy or MinRankPolicy()
        self.decision_scope = decision_scope or config.DECISION_SCOPE
        if self.decision_scope not in config.DECISION_SCOPES:
            raise ValueError(
                f"Unknown decision scope: {self.decision_scope}. "
                f"Choose from: {config.DECISION_SCOPES}"
            )
        self.single_agent_policy = single_agent_policy or config.SINGLE_AGENT_POLICY

    def agents_for(self, theta: Formula) -> AgentSet:
        return resolve_agents(theta, self.agents, self.single_agent_policy)

    def solve(self, theta: Formula) -> TableauResult:
        """
        Run the tableau procedure on theta.

        Args:
            theta: Input formula

        Returns:
            TableauResult with every phase's graph, the trace and the verdict
        """
        agents = self.agents_for(theta)
        pretableau = build_pretableau(theta, agents, self.decision_scope)
        initial = eliminate_prestates(pretableau)
        final, trace = eliminate_states(initial, self.rank_policy)
        outcome = verdict(final, theta)
        logger.info(f"Verdict for {theta}: {outcome.value}")
        return TableauResult(
            theta=theta,
            agents=agents,
            decision_scope=self.decision_scope,
            rank_policy=self.rank_policy.name,
            pretableau=pretableau,
            initial=initial,
            final=final,
            trace=trace,
            verdict=outcome,
        )

    def extract_witness(self, result: TableauResult) -> SolverWitness:
        """
        Build and re-check the witness of an open run.

        Raises:
            InvariantBreach: If the run is closed or the witness does not check out
        """
        if not result.satisfiable:
            raise InvariantBreach("No witness exists for a closed tableau")
        structure = stitch_hintikka(result.final, result.theta)
        try:
            model = pseudo_model_from_hintikka(structure, result.theta, result.decision_scope)
        except HintikkaValidationError as e:
            raise InvariantBreach(f"Witness extraction failed: {e}") from e

        world = structure.designated
        if not satisfies(model, world, result.theta):
            raise InvariantBreach(f"Witness does not satisfy {result.theta} at {world}")
        return SolverWitness(structure, model, world)

    def is_valid(self, theta: Formula) -> TableauResult:
        """
        Decide validity of theta by solving its negation.

        Returns:
            TableauResult of ``~theta``; theta is valid iff that run is closed
        """
        agents = self.agents_for(theta)
        solver = TableauSolver(agents, self.rank_policy, self.decision_scope,
                               self.single_agent_policy)
        return solver.solve(Not(theta))

    def compare_rank_modes(self, theta: Formula) -> RankComparison:
        """
        Eliminate states of the same initial tableau under both rank policies.

        Every (state, eventuality) pair removed by E3 in one mode only is
        reported and logged.
        """
        agents = self.agents_for(theta)
        initial = eliminate_prestates(build_pretableau(theta, agents, self.decision_scope))
        final_min, trace_min = eliminate_states(initial, MinRankPolicy())
        final_strict, trace_strict = eliminate_states(initial, StrictRankPolicy())

        def e3_pairs(trace: EliminationTrace):
            return {(r.removed, str(r.reason)) for r in trace if r.rule == 'E3'}

        removed_min, removed_strict = e3_pairs(trace_min), e3_pairs(trace_strict)
        comparison = RankComparison(
            min_verdict=verdict(final_min, theta),
            strict_verdict=verdict(final_strict, theta),
            only_min=sorted(removed_min - removed_strict),
            only_strict=sorted(removed_strict - removed_min),
        )
        for state, eventuality in comparison.only_strict:
            logger.warning(
                f"Rank modes diverge: strict ranks remove state {state} for {eventuality}"
            )
        for state, eventuality in comparison.only_min:
            logger.warning(f"Rank modes diverge: min ranks remove state {state} for {eventuality}")
        if comparison.min_verdict != comparison.strict_verdict:
            logger.warning(
                f"Rank modes give different verdicts for {theta}: "
                f"min={comparison.min_verdict.value}, strict={comparison.strict_verdict.value}"
            )
        return comparison


def eventuality_count(result: TableauResult) -> int:
    return len(eventualities_of(node.formulas for node in result.initial.states()))
