"""
Factory for creating rank policies and configured solvers.

This module provides factory functions that build a TableauSolver from
explicit arguments, falling back to the configured defaults.
"""
from typing import Optional, Union

from epitab import config
from epitab.base import BaseRankPolicy
from epitab.formula.syntax import AgentSet
from epitab.solver import TableauSolver
from epitab.tableau.ranks import MinRankPolicy, StrictRankPolicy
from epitab.utils.logging_config import get_logger

logger = get_logger(__name__)


def create_rank_policy(name: Optional[str] = None) -> BaseRankPolicy:
    """
    Create the rank policy used by elimination rule E3.

    Args:
        name: 'min' or 'strict' (uses config.STRICT_RANK when not provided)

    Returns:
        BaseRankPolicy instance

    Raises:
        ValueError: If the policy name is unknown
    """
    if name is None:
        name = 'strict' if config.STRICT_RANK else 'min'
    name = name.lower()

    if name in ('min', 'path'):
        return MinRankPolicy()
    elif name in ('strict', 'max'):
        return StrictRankPolicy()
    else:
        error_msg = f"Unknown rank policy: {name}. Supported policies: 'min', 'strict'"
        logger.error(error_msg)
        raise ValueError(error_msg)


def create_solver(
    agents: Union[AgentSet, str, None] = None,
    strict_rank: Optional[bool] = None,
    decision_scope: Optional[str] = None,
    single_agent_policy: Optional[str] = None
) -> TableauSolver:
    """
    Create a TableauSolver.

    Args:
        agents: Agent set, comma-separated agent names, or None to take the
            agents of each input formula
        strict_rank: Use strict ranks (config default when not provided)
        decision_scope: 'closure' or 'subformulae' (config default)
        single_agent_policy: 'error' or 'warn' (config default)

    Returns:
        Configured TableauSolver

    Raises:
        ValueError: If an option is unknown or the agent names are malformed

    Example:
        solver = create_solver(agents='a,b')
        result = solver.solve(parse('K{a} p & ~D C p', solver.agents))
    """
    if isinstance(agents, str):
        agents = AgentSet.parse(agents)
    if strict_rank is None:
        strict_rank = config.STRICT_RANK
    policy = single_agent_policy or config.SINGLE_AGENT_POLICY
    if policy not in ('error', 'warn'):
        error_msg = f"Unknown single-agent policy: {policy}. Supported policies: 'error', 'warn'"
        logger.error(error_msg)
        raise ValueError(error_msg)

    rank_policy = create_rank_policy('strict' if strict_rank else 'min')
    solver = TableauSolver(
        agents=agents,
        rank_policy=rank_policy,
        decision_scope=decision_scope,
        single_agent_policy=policy,
    )
    logger.debug(
        f"Solver created - agents: {agents if agents is not None else 'from formula'}, "
        f"ranks: {rank_policy.name}, scope: {solver.decision_scope}"
    )
    return solver
