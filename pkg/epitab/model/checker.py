"""
Model checking for MAEL(CD) formulas.

Formulas are evaluated bottom-up into their extensions (the set of worlds
where they hold). K_a and D quantify over R_a and R_D successors. C is
evaluated twice, over R_C and over reachability along the agent relations,
and the two results must agree.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional

from epitab.errors import InvariantBreach
from epitab.formula.syntax import (
    And,
    Atom,
    Common,
    Dist,
    Formula,
    Knows,
    Not,
    render,
)
from epitab.model.structure import PseudoModel
from epitab.utils.relations import reachable, successor_map


@dataclass(frozen=True)
class SatReport:
    """Truth of a formula at a world, with both C evaluations when relevant."""
    formula: Formula
    world: str
    value: bool
    common_relational: Optional[bool] = None
    common_reachability: Optional[bool] = None


class ModelChecker:
    """
    Evaluates formulas on one model, caching extensions.

    Attributes:
        model: The model being checked
    """

    def __init__(self, model: PseudoModel):
        self.model = model
        self._worlds = frozenset(model.worlds)
        self._agent_succ = {
            a: successor_map(model.worlds, model.relations[a]) for a in model.agents
        }
        self._rd_succ = successor_map(model.worlds, model.rd)
        self._rc_succ = successor_map(model.worlds, model.rc)
        self._union = model.union()
        self._reach: Dict[str, FrozenSet[str]] = {}
        self._cache: Dict[Formula, FrozenSet[str]] = {}
        self._reachability_cache: Dict[Formula, FrozenSet[str]] = {}

    def _reachable(self, world: str) -> FrozenSet[str]:
        if world not in self._reach:
            self._reach[world] = frozenset(reachable(self.model.worlds, self._union, world))
        return self._reach[world]

    @staticmethod
    def _box(successors: Dict[str, set], inner: FrozenSet[str], worlds) -> FrozenSet[str]:
        return frozenset(w for w in worlds if successors.get(w, set()) <= inner)

    def extension(self, formula: Formula) -> FrozenSet[str]:
        """
        Worlds where the formula holds.

        Raises:
            InvariantBreach: If the two evaluations of a C subformula disagree
        """
        cached = self._cache.get(formula)
        if cached is not None:
            return cached

        worlds = self.model.worlds
        if isinstance(formula, Atom):
            result = frozenset(w for w in worlds if formula.name in self.model.valuation[w])
        elif isinstance(formula, Not):
            result = self._worlds - self.extension(formula.child)
        elif isinstance(formula, And):
            result = self.extension(formula.left) & self.extension(formula.right)
        elif isinstance(formula, Knows):
            successors = self._agent_succ.get(formula.agent, {})
            result = self._box(successors, self.extension(formula.child), worlds)
        elif isinstance(formula, Dist):
            result = self._box(self._rd_succ, self.extension(formula.child), worlds)
        elif isinstance(formula, Common):
            inner = self.extension(formula.child)
            result = self._box(self._rc_succ, inner, worlds)
            by_reach = frozenset(w for w in worlds if self._reachable(w) <= inner)
            if result != by_reach:
                raise InvariantBreach(
                    f"R_C and reachability disagree on {render(formula)}: "
                    f"{sorted(result)} vs {sorted(by_reach)}"
                )
            self._reachability_cache[formula] = by_reach
        else:
            raise TypeError(f"Not a formula: {formula!r}")

        self._cache[formula] = result
        return result

    def holds(self, world: str, formula: Formula) -> bool:
        self.model.require_world(world)
        return world in self.extension(formula)

    def report(self, world: str, formula: Formula) -> SatReport:
        value = self.holds(world, formula)
        if isinstance(formula, Common):
            return SatReport(
                formula, world, value,
                common_relational=value,
                common_reachability=world in self._reachability_cache[formula],
            )
        return SatReport(formula, world, value)


def satisfies(model: PseudoModel, world: str, formula: Formula) -> bool:
    """
    Decide whether ``formula`` holds at ``world``.

    Args:
        model: Model to evaluate on
        world: World id
        formula: Formula to evaluate

    Returns:
        Truth value

    Raises:
        ModelFormatError: If the world does not exist
    """
    return ModelChecker(model).holds(world, formula)


def sat_report(model: PseudoModel, world: str, formula: Formula) -> SatReport:
    return ModelChecker(model).report(world, formula)
