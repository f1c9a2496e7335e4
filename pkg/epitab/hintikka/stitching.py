"""
Stitching final tree components into a finite Hintikka structure.

Components are indexed by (row, column): the row is an eventuality (one row
of simple trees when there are none), the column a final-tableau state. The
construction starts with the component of the least state containing theta,
then serves leaves first-in first-out: a leaf produced by a row-i component
is replaced by the component of row (i+1) mod m for the leaf's state. When
that component already exists, the leaf's parent is connected to its root and
the leaf is dropped, so each grid cell is instantiated at most once.
"""
from collections import deque
from typing import Deque, Dict, List, Optional, Set, Tuple

from epitab.errors import InvariantBreach
from epitab.formula.expansion import eventualities_of
from epitab.formula.syntax import Formula
from epitab.hintikka.components import build_component
from epitab.hintikka.structure import HintikkaStructure
from epitab.tableau.graph import TableauGraph
from epitab.tableau.ranks import MinRankPolicy
from epitab.utils.logging_config import get_logger

logger = get_logger(__name__)


class _Builder:
    """Mutable world graph used while components are being stitched."""

    def __init__(self):
        self.state_of: Dict[int, int] = {}
        self.edges: Set[Tuple[int, Optional[str], int]] = set()
        self._next = 0

    def new_world(self, state: int) -> int:
        world = self._next
        self._next += 1
        self.state_of[world] = state
        return world

    def redirect(self, leaf: int, root: int):
        incoming = [e for e in self.edges if e[2] == leaf]
        for source, relation, _ in incoming:
            self.edges.discard((source, relation, leaf))
            self.edges.add((source, relation, root))
        del self.state_of[leaf]


def stitch_hintikka(final: TableauGraph, theta: Formula) -> HintikkaStructure:
    """
    Build a Hintikka structure from an open final tableau.

    Args:
        final: Final tableau whose verdict is open
        theta: Input formula

    Returns:
        HintikkaStructure whose designated world is labeled by a state holding theta

    Raises:
        InvariantBreach: If no surviving state holds theta or a component cannot be built
    """
    states = [node.id for node in final.states()]
    column = {state: index for index, state in enumerate(states)}
    start = next((s for s in states if theta in final.formulas(s)), None)
    if start is None:
        raise InvariantBreach(f"No surviving state contains {theta}")

    eventualities = eventualities_of(final.formulas(s) for s in states)
    policy = MinRankPolicy()
    ranks = [policy.compute(final, ev) for ev in eventualities]
    rows = max(1, len(eventualities))
    start_row = next((i for i, ev in enumerate(eventualities) if ev.formula == theta), 0)

    builder = _Builder()
    instances: Dict[Tuple[int, int], int] = {}
    queue: Deque[Tuple[int, int]] = deque()

    def instantiate(row: int, state: int, root: Optional[int] = None) -> int:
        eventuality = eventualities[row] if eventualities else None
        component = build_component(final, state, eventuality, ranks[row] if ranks else None)
        worlds: List[int] = []
        for local, local_state in enumerate(component.states):
            if local == 0 and root is not None:
                worlds.append(root)
            else:
                worlds.append(builder.new_world(local_state))
        for parent, relation, child in component.edges:
            builder.edges.add((worlds[parent], relation, worlds[child]))
        instances[(row, column[state])] = worlds[0]
        for leaf in component.leaves:
            queue.append((worlds[leaf], row))
        return worlds[0]

    designated = instantiate(start_row, start)

    while queue:
        leaf, row = queue.popleft()
        next_row = (row + 1) % rows
        state = builder.state_of[leaf]
        existing = instances.get((next_row, column[state]))
        if existing is not None:
            builder.redirect(leaf, existing)
        else:
            instantiate(next_row, state, root=leaf)

    structure = _to_structure(builder, final, designated)
    logger.info(
        f"Stitched Hintikka structure: {len(structure.worlds)} worlds from "
        f"{len(instances)} component instance(s)"
    )
    return structure


def _to_structure(builder: _Builder, final: TableauGraph, designated: int) -> HintikkaStructure:
    # surviving worlds are renamed w0, w1, ... in creation order
    names = {world: f"w{index}" for index, world in enumerate(sorted(builder.state_of))}
    agents = final.agents
    relations: Dict[str, set] = {agent: set() for agent in agents}
    rd: set = set()
    for source, relation, target in builder.edges:
        pair = (names[source], names[target])
        if relation is None:
            rd.add(pair)
        else:
            relations[relation].add(pair)

    return HintikkaStructure(
        agents=agents,
        worlds=[names[w] for w in sorted(builder.state_of)],
        relations={agent: frozenset(pairs) for agent, pairs in relations.items()},
        rd=frozenset(rd),
        labels={names[w]: final.formulas(s) for w, s in builder.state_of.items()},
        designated=names[designated],
    )
