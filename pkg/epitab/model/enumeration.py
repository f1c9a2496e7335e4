"""
Brute-force enumeration of genuine models, used as an independent oracle.

Every agent relation ranges over the set partitions of the world set, R_D is
the intersection of the agent relations and valuations range over all
assignments. Models are produced by increasing size, so the first witness
found is one of least size. Isomorphic copies are not filtered out.
"""
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from epitab import config
from epitab.errors import OracleBoundError
from epitab.formula.syntax import AgentSet, Formula, atoms_of
from epitab.model.checker import ModelChecker
from epitab.model.structure import PseudoModel
from epitab.utils.logging_config import get_logger
from epitab.utils.relations import partition_relation, set_partitions

logger = get_logger(__name__)


@dataclass(frozen=True)
class Witness:
    """A model together with a world satisfying the formula."""
    model: PseudoModel
    world: str

    @property
    def size(self) -> int:
        return len(self.model.worlds)


@dataclass(frozen=True)
class NotFoundWithinBound:
    """No model up to ``bound`` worlds satisfies the formula (not an unsatisfiability verdict)."""
    bound: int


def check_bounds(atoms: Iterable[str], max_states: int):
    atoms = list(atoms)
    if max_states < 1:
        raise OracleBoundError(f"State bound must be at least 1, got {max_states}")
    if max_states > config.ORACLE_STATE_LIMIT:
        raise OracleBoundError(
            f"State bound {max_states} exceeds the limit of {config.ORACLE_STATE_LIMIT}"
        )
    if len(atoms) > config.ORACLE_MAX_ATOMS:
        raise OracleBoundError(
            f"{len(atoms)} atoms exceed the oracle limit of {config.ORACLE_MAX_ATOMS}"
        )


def models_of_size(agents: AgentSet, atoms: Iterable[str], size: int) -> Iterator[PseudoModel]:
    """All genuine models with exactly ``size`` worlds, in a fixed order."""
    atoms = sorted(set(atoms))
    worlds = [f"s{i}" for i in range(size)]
    partitions = [partition_relation(p) for p in set_partitions(worlds)]
    cells = [(w, a) for w in worlds for a in atoms]

    for combination in itertools.product(partitions, repeat=len(agents)):
        relations = dict(zip(agents, combination))
        rd = frozenset.intersection(*combination)
        for bits in itertools.product((False, True), repeat=len(cells)):
            valuation = {w: set() for w in worlds}
            for (world, atom), bit in zip(cells, bits):
                if bit:
                    valuation[world].add(atom)
            yield PseudoModel(
                agents=agents,
                worlds=worlds,
                relations=dict(relations),
                rd=rd,
                valuation={w: frozenset(v) for w, v in valuation.items()},
                atoms=frozenset(atoms),
            )


def enumerate_models(
    agents: AgentSet,
    atoms: Iterable[str],
    max_states: Optional[int] = None
) -> Iterator[PseudoModel]:
    """
    Enumerate every genuine model with 1 to ``max_states`` worlds.

    Args:
        agents: Agent set
        atoms: Atom vocabulary (at most ``config.ORACLE_MAX_ATOMS``)
        max_states: Largest model size (config default)

    Raises:
        OracleBoundError: If the bound or the atom count exceeds the limits
    """
    atoms = sorted(set(atoms))
    if max_states is None:
        max_states = config.ORACLE_MAX_STATES
    check_bounds(atoms, max_states)
    for size in range(1, max_states + 1):
        yield from models_of_size(agents, atoms, size)


def brute_force_sat(
    formula: Formula,
    agents: AgentSet,
    max_states: Optional[int] = None
) -> Union[Witness, NotFoundWithinBound]:
    """
    Search the enumerated models for one satisfying the formula.

    Args:
        formula: Formula to satisfy
        agents: Agent set
        max_states: Largest model size to try (config default)

    Returns:
        Witness of least size, or NotFoundWithinBound
    """
    if max_states is None:
        max_states = config.ORACLE_MAX_STATES
    atoms = sorted(atoms_of(formula))
    check_bounds(atoms, max_states)

    for size in range(1, max_states + 1):
        for model in models_of_size(agents, atoms, size):
            extension = ModelChecker(model).extension(formula)
            if extension:
                world = next(w for w in model.worlds if w in extension)
                logger.debug(f"Oracle witness for {formula} at {size} world(s)")
                return Witness(model, world)
    logger.debug(f"Oracle found no model of {formula} up to {max_states} world(s)")
    return NotFoundWithinBound(max_states)
