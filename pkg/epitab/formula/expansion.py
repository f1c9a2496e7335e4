"""
Closure, extended closure and fully expanded formula sets.

A set of formulas is fully expanded when it is saturated under the
expansion clauses:

    ~~phi          => phi
    phi & psi      => phi and psi
    ~(phi & psi)   => ~phi or ~psi
    K_a phi        => D phi
    D phi          => phi
    C phi          => K_a(phi & C phi) for every agent a
    ~C phi         => ~K_a(phi & C phi) for some agent a
    decision       => for every member phi and every K/D formula psi in the
                      decision scope of phi, psi or ~psi is a member

The decision scope is either the subformulae of phi or its closure; see
``config.DECISION_SCOPE``.
"""
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from epitab import config
from epitab.formula.syntax import (
    AgentSet,
    And,
    Common,
    Dist,
    Eventuality,
    Formula,
    FormulaSet,
    Knows,
    Not,
    _subformula_members,
    sort_key,
)
from epitab.utils.logging_config import get_logger

logger = get_logger(__name__)


# ============================================================================
# Closure
# ============================================================================

@lru_cache(maxsize=4096)
def _closure_members(theta: Formula, agents: AgentSet) -> FrozenSet[Formula]:
    found: Set[Formula] = set()
    work: List[Formula] = [theta]
    while work:
        current = work.pop()
        if current in found:
            continue
        found.add(current)
        work.extend(current.children())
        if isinstance(current, Knows):
            work.append(Dist(current.child))
        elif isinstance(current, Common):
            for agent in agents:
                work.append(Knows(agent, And(current.child, current)))
    return frozenset(found)


def closure(theta: Formula, agents: AgentSet) -> FormulaSet:
    """
    Least set containing theta that is closed under subformulae and under
    ``K_a phi => D phi`` and ``C phi => K_a(phi & C phi)`` for every agent.

    Args:
        theta: Input formula
        agents: Agent set the C operator quantifies over

    Returns:
        The closure as a FormulaSet
    """
    return FormulaSet(_closure_members(theta, agents))


def extended_closure(theta: Formula, agents: AgentSet) -> FormulaSet:
    """
    Closure plus the negation of each of its members.

    Every tableau node built for theta is a subset of this set. The size is
    at most twice the closure; it is smaller when the closure already holds a
    formula together with its negation (e.g. ``~p`` and ``p``).
    """
    members = _closure_members(theta, agents)
    return FormulaSet(members | {Not(f) for f in members})


def _closure_of_set(formulas: Iterable[Formula], agents: AgentSet) -> FrozenSet[Formula]:
    result: Set[Formula] = set()
    for formula in formulas:
        result |= _closure_members(formula, agents)
    return frozenset(result)


# ============================================================================
# Fully expanded sets
# ============================================================================

def _is_decidable(formula: Formula) -> bool:
    return isinstance(formula, (Knows, Dist))


def decision_candidates(formula: Formula, agents: AgentSet, scope: str) -> FrozenSet[Formula]:
    """K_a and D formulas a fully expanded set containing ``formula`` must decide."""
    if scope == 'closure':
        pool = _closure_members(formula, agents)
    elif scope == 'subformulae':
        pool = _subformula_members(formula)
    else:
        raise ValueError(f"Unknown decision scope: {scope}. Choose from: {config.DECISION_SCOPES}")
    return frozenset(f for f in pool if _is_decidable(f))


def _resolve_scope(scope) -> str:
    scope = scope or config.DECISION_SCOPE
    if scope not in config.DECISION_SCOPES:
        raise ValueError(f"Unknown decision scope: {scope}. Choose from: {config.DECISION_SCOPES}")
    return scope


def is_fully_expanded(delta: Iterable[Formula], agents: AgentSet, scope: str = None) -> bool:
    """
    Check all eight expansion clauses on a formula set.

    Args:
        delta: Formula set to check
        agents: Agent set (C and ~C clauses quantify over it)
        scope: Decision clause scope, 'closure' or 'subformulae' (config default)

    Returns:
        True if the set is fully expanded
    """
    scope = _resolve_scope(scope)
    members = frozenset(delta)

    for formula in members:
        if isinstance(formula, Not):
            inner = formula.child
            if isinstance(inner, Not) and inner.child not in members:
                return False
            if isinstance(inner, And) and Not(inner.left) not in members \
                    and Not(inner.right) not in members:
                return False
            if isinstance(inner, Common) and not any(
                Not(Knows(a, And(inner.child, inner))) in members for a in agents
            ):
                return False
        elif isinstance(formula, And):
            if formula.left not in members or formula.right not in members:
                return False
        elif isinstance(formula, Knows):
            if Dist(formula.child) not in members:
                return False
        elif isinstance(formula, Dist):
            if formula.child not in members:
                return False
        elif isinstance(formula, Common):
            if any(Knows(a, And(formula.child, formula)) not in members for a in agents):
                return False

        for candidate in decision_candidates(formula, agents, scope):
            if candidate not in members and Not(candidate) not in members:
                return False

    return True


def _alternatives(formula: Formula, agents: AgentSet) -> List[Tuple[Formula, ...]]:
    """Ways of satisfying the expansion clause triggered by ``formula``."""
    if isinstance(formula, And):
        return [(formula.left, formula.right)]
    if isinstance(formula, Knows):
        return [(Dist(formula.child),)]
    if isinstance(formula, Dist):
        return [(formula.child,)]
    if isinstance(formula, Common):
        return [tuple(Knows(a, And(formula.child, formula)) for a in agents)]
    if isinstance(formula, Not):
        inner = formula.child
        if isinstance(inner, Not):
            return [(inner.child,)]
        if isinstance(inner, And):
            return [(Not(inner.left),), (Not(inner.right),)]
        if isinstance(inner, Common):
            return [(Not(Knows(a, And(inner.child, inner))),) for a in agents]
    return [()]


def _first_undecided(members: FrozenSet[Formula], agents: AgentSet, scope: str):
    pool: Set[Formula] = set()
    if scope == 'closure':
        pool = {f for f in _closure_of_set(members, agents) if _is_decidable(f)}
    else:
        for formula in members:
            pool |= decision_candidates(formula, agents, scope)
    undecided = [f for f in pool if f not in members and Not(f) not in members]
    return min(undecided, key=sort_key) if undecided else None


def minimal_fully_expanded_extensions(
    gamma: Iterable[Formula],
    agents: AgentSet,
    scope: str = None
) -> List[FormulaSet]:
    """
    Compute the fully expanded extensions of a prestate.

    Saturation is a depth-first search. Every member is processed once per
    branch in rendering order; disjunctive clauses (``~(phi & psi)`` and
    ``~C phi``) branch over all of their disjuncts, and once nothing is left
    to process the first undecided K/D formula of the decision scope is
    branched on, positive literal first.

    Each result is the least fully expanded superset of gamma together with
    one choice of disjuncts, so every subset-minimal extension is among the
    results (the family may additionally hold choice-minimal supersets of
    them).

    Args:
        gamma: Prestate contents
        agents: Agent set
        scope: Decision clause scope (config default)

    Returns:
        Duplicate-free list of extensions in discovery order
    """
    scope = _resolve_scope(scope)
    start = frozenset(gamma)

    results: List[FormulaSet] = []
    seen_results: Set[FrozenSet[Formula]] = set()
    visited: Set[Tuple[FrozenSet[Formula], FrozenSet[Formula]]] = set()
    stack: List[Tuple[FrozenSet[Formula], FrozenSet[Formula]]] = [(start, frozenset())]

    while stack:
        members, done = stack.pop()
        if (members, done) in visited:
            continue
        visited.add((members, done))

        pending = [f for f in members if f not in done]
        if pending:
            formula = min(pending, key=sort_key)
            next_done = done | {formula}
            branches = [members | set(choice) for choice in _alternatives(formula, agents)]
            for branch in reversed(branches):
                stack.append((frozenset(branch), next_done))
            continue

        undecided = _first_undecided(members, agents, scope)
        if undecided is not None:
            stack.append((members | {Not(undecided)}, done))
            stack.append((members | {undecided}, done))
            continue

        if members not in seen_results:
            seen_results.add(members)
            results.append(FormulaSet(members))

    logger.debug(f"{FormulaSet(start)} has {len(results)} fully expanded extension(s)")
    return results


# ============================================================================
# Consistency and eventualities
# ============================================================================

def is_patently_inconsistent(delta: Iterable[Formula]) -> bool:
    """True iff the set contains some formula together with its negation."""
    members = frozenset(delta)
    return any(isinstance(f, Not) and f.child in members for f in members)


def eventualities_of(sets: Iterable[Iterable[Formula]]) -> List[Eventuality]:
    """
    Collect all ``~C phi`` formulas occurring in any of the given sets.

    Args:
        sets: Formula sets to scan

    Returns:
        Deduplicated eventualities in rendering order
    """
    found: Dict[Formula, Eventuality] = {}
    for formulas in sets:
        for formula in formulas:
            if isinstance(formula, Not) and isinstance(formula.child, Common):
                found.setdefault(formula, Eventuality(formula))
    return [found[f] for f in sorted(found, key=sort_key)]
