"""
Rank policies.

``MinRankPolicy`` pools all marked successors, so a finite rank means a
marked-edge path to a state containing the eventuality's witness exists.
``StrictRankPolicy`` takes, per label, the best successor and then the worst
label, which is the stronger variant selected with ``--strict-rank``.
"""
from typing import Dict

import networkx as nx

from epitab.base import OMEGA, BaseRankPolicy, Rank
from epitab.formula.syntax import Eventuality
from epitab.utils.logging_config import get_logger

logger = get_logger(__name__)


def _base_ranks(graph, eventuality: Eventuality) -> Dict[int, Rank]:
    witness = eventuality.witness
    return {
        node.id: 0 if witness in node.formulas else OMEGA
        for node in graph.states()
    }


class MinRankPolicy(BaseRankPolicy):
    """Rank = 1 + least rank over all marked successors (path existence)."""

    name = "min"

    def compute(self, graph, eventuality: Eventuality) -> Dict[int, Rank]:
        ranks = _base_ranks(graph, eventuality)
        sources = [node_id for node_id, rank in ranks.items() if rank == 0]
        if not sources:
            return ranks

        # distance to the nearest witness state, read on the reversed edges
        reverse = graph.successor_graph().reverse(copy=True)
        distances = nx.multi_source_dijkstra_path_length(reverse, sources)
        for node_id, distance in distances.items():
            ranks[node_id] = int(distance)
        return ranks


class StrictRankPolicy(BaseRankPolicy):
    """Rank = 1 + max over labels of the least rank among that label's successors."""

    name = "strict"

    def compute(self, graph, eventuality: Eventuality) -> Dict[int, Rank]:
        ranks = _base_ranks(graph, eventuality)
        states = [node.id for node in graph.states()]

        # least fixpoint: ranks only decrease, at most one round per state
        for _ in range(len(states) + 1):
            changed = False
            for node_id in states:
                if ranks[node_id] == 0:
                    continue
                candidate = self._update(graph, node_id, ranks)
                if candidate < ranks[node_id]:
                    ranks[node_id] = candidate
                    changed = True
            if not changed:
                break
        return ranks

    @staticmethod
    def _update(graph, node_id: int, ranks: Dict[int, Rank]) -> Rank:
        worst: Rank = -1
        for label in graph.iter_labels(node_id):
            best = min((ranks[t] for t in graph.marked_successors(node_id, label)), default=OMEGA)
            worst = max(worst, best)
        if worst < 0 or worst == OMEGA:
            return OMEGA
        return 1 + worst


def compute_ranks(graph, eventuality: Eventuality, strict: bool = False) -> Dict[int, Rank]:
    """Ranks of every state of ``graph`` for ``eventuality`` in the chosen mode."""
    policy = StrictRankPolicy() if strict else MinRankPolicy()
    return policy.compute(graph, eventuality)
