"""
Base abstract classes for epitab.

The elimination procedure needs a rank for every state and eventuality: the
length of a shortest marked-edge route to a state that refutes the
eventuality's body, or OMEGA when there is none. How successors are combined
into a rank is pluggable; this module defines the interface both rank
policies implement.
"""
import math
from abc import ABC, abstractmethod
from typing import Dict, Union

from epitab.formula.syntax import Eventuality

# Rank of a state at which an eventuality is not realized
OMEGA = math.inf

Rank = Union[int, float]


class BaseRankPolicy(ABC):
    """
    Abstract base class for rank computations over a tableau.

    A rank policy is stateless; it reads a tableau graph that has no prestates
    and returns one rank per live state.
    """

    name: str = "base"

    @abstractmethod
    def compute(self, graph, eventuality: Eventuality) -> Dict[int, Rank]:
        """
        Compute the rank of every live state for one eventuality.

        Args:
            graph: TableauGraph without prestates
            eventuality: The ``~C phi`` formula being realized

        Returns:
            Mapping from state id to rank (an int, or OMEGA)
        """
        pass

    def unrealized(self, graph, eventuality: Eventuality):
        """
        States that contain the eventuality but have rank OMEGA.

        Returns:
            Sorted list of state ids
        """
        ranks = self.compute(graph, eventuality)
        return sorted(
            node.id for node in graph.states()
            if eventuality.formula in node.formulas and ranks[node.id] == OMEGA
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"
