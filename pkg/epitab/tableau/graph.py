"""
Tableau graph storage.

Nodes are states and prestates identified by dense integer ids that are never
reused. Edges live in a networkx MultiDiGraph: unmarked double edges from a
prestate to its states, and marked edges labeled with a ``~K_a phi`` or
``~D phi`` formula. Within each node kind, formula sets are unique.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx

from epitab.formula.syntax import AgentSet, Formula, FormulaSet, render

DOUBLE = 'double'
MARKED = 'marked'


class NodeKind(Enum):
    """Node varieties of a tableau."""
    STATE = "state"
    PRESTATE = "prestate"


@dataclass(frozen=True)
class Node:
    id: int
    kind: NodeKind
    formulas: FormulaSet

    @property
    def is_state(self) -> bool:
        return self.kind is NodeKind.STATE


@dataclass(frozen=True)
class MarkedEdge:
    source: int
    label: Formula
    target: int

    def sort_key(self) -> Tuple[int, str, int]:
        return (self.source, render(self.label), self.target)


class TableauGraph:
    """
    Graph of tableau nodes for one input formula.

    Attributes:
        theta: Input formula
        agents: Agent set of the run
        root: Id of the initial prestate (None once prestates are eliminated)
    """

    def __init__(self, theta: Formula, agents: AgentSet):
        self.theta = theta
        self.agents = agents
        self.root: Optional[int] = None
        self.graph = nx.MultiDiGraph()
        self._next_id = 0
        self._index: Dict[Tuple[NodeKind, FormulaSet], int] = {}

    # ------------------------------------------------------------------
    # Nodes
    # ------------------------------------------------------------------

    def add_node(self, kind: NodeKind, formulas: FormulaSet) -> Tuple[int, bool]:
        """
        Add a node, or find the live node of the same kind with equal contents.

        Args:
            kind: State or prestate
            formulas: Node contents

        Returns:
            Tuple of (node id, True if the node was created)
        """
        key = (kind, formulas)
        existing = self._index.get(key)
        if existing is not None:
            return existing, False
        node_id = self._next_id
        self._next_id += 1
        self.graph.add_node(node_id, node=Node(node_id, kind, formulas))
        self._index[key] = node_id
        return node_id, True

    def _restore_node(self, node: Node):
        self.graph.add_node(node.id, node=node)
        self._index[(node.kind, node.formulas)] = node.id
        self._next_id = max(self._next_id, node.id + 1)

    def node(self, node_id: int) -> Node:
        return self.graph.nodes[node_id]['node']

    def formulas(self, node_id: int) -> FormulaSet:
        return self.node(node_id).formulas

    def __contains__(self, node_id: object) -> bool:
        return node_id in self.graph

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def nodes(self, kind: Optional[NodeKind] = None) -> List[Node]:
        """Live nodes in id order, optionally of one kind."""
        found = [self.node(n) for n in sorted(self.graph.nodes)]
        if kind is None:
            return found
        return [n for n in found if n.kind is kind]

    def states(self) -> List[Node]:
        return self.nodes(NodeKind.STATE)

    def prestates(self) -> List[Node]:
        return self.nodes(NodeKind.PRESTATE)

    def remove_node(self, node_id: int):
        node = self.node(node_id)
        self.graph.remove_node(node_id)
        del self._index[(node.kind, node.formulas)]

    # ------------------------------------------------------------------
    # Edges
    # ------------------------------------------------------------------

    def add_double_edge(self, prestate: int, state: int):
        self.graph.add_edge(prestate, state, key=DOUBLE, kind=DOUBLE)

    def add_marked_edge(self, source: int, label: Formula, target: int):
        self.graph.add_edge(source, target, key=render(label), kind=MARKED, label=label)

    def double_successors(self, prestate: int) -> List[int]:
        return sorted(
            target for _, target, data in self.graph.out_edges(prestate, data=True)
            if data['kind'] == DOUBLE
        )

    def marked_successors(self, source: int, label: Optional[Formula] = None) -> List[int]:
        """Targets of marked edges leaving ``source``, optionally with one label."""
        targets = {
            target for _, target, data in self.graph.out_edges(source, data=True)
            if data['kind'] == MARKED and (label is None or data['label'] == label)
        }
        return sorted(targets)

    def marked_edges(self) -> List[MarkedEdge]:
        edges = [
            MarkedEdge(source, data['label'], target)
            for source, target, data in self.graph.edges(data=True)
            if data['kind'] == MARKED
        ]
        return sorted(edges, key=MarkedEdge.sort_key)

    def double_edges(self) -> List[Tuple[int, int]]:
        return sorted(
            (source, target) for source, target, data in self.graph.edges(data=True)
            if data['kind'] == DOUBLE
        )

    def iter_labels(self, source: int) -> Iterator[Formula]:
        """Distinct marked-edge labels leaving ``source`` in rendering order."""
        labels = {
            data['label'] for _, _, data in self.graph.out_edges(source, data=True)
            if data['kind'] == MARKED
        }
        return iter(sorted(labels, key=render))

    def successor_graph(self) -> nx.DiGraph:
        """Plain directed graph of the marked edges, labels dropped."""
        digraph = nx.DiGraph()
        digraph.add_nodes_from(self.graph.nodes)
        for edge in self.marked_edges():
            digraph.add_edge(edge.source, edge.target)
        return digraph

    # ------------------------------------------------------------------
    # Copies
    # ------------------------------------------------------------------

    def copy(self) -> 'TableauGraph':
        clone = TableauGraph(self.theta, self.agents)
        clone.root = self.root
        clone.graph = self.graph.copy()
        clone._next_id = self._next_id
        clone._index = dict(self._index)
        return clone

    def states_only(self) -> 'TableauGraph':
        """Empty-edged copy holding the live states with their ids."""
        clone = TableauGraph(self.theta, self.agents)
        for node in self.states():
            clone._restore_node(node)
        clone._next_id = self._next_id
        return clone

    def same_as(self, other: 'TableauGraph') -> bool:
        """Node-for-node and edge-for-edge equality."""
        return (
            [(n.id, n.kind, n.formulas) for n in self.nodes()]
            == [(n.id, n.kind, n.formulas) for n in other.nodes()]
            and self.marked_edges() == other.marked_edges()
            and self.double_edges() == other.double_edges()
        )
