"""
Binary relations on world ids, backed by networkx.

Relations are frozensets of (source, target) pairs; closures are computed
on networkx graphs built over an explicit world list so that isolated worlds
are not lost.
"""
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from epitab.errors import ModelFormatError

Pair = Tuple[str, str]
Relation = FrozenSet[Pair]


def read_pairs(items: Iterable, known: Iterable[str], what: str) -> List[Pair]:
    """
    Read a JSON list of [source, target] pairs over the ``known`` worlds.

    Raises:
        ModelFormatError: On a malformed pair or an unknown world
    """
    known = set(known)
    result = []
    for item in items:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ModelFormatError(f"Malformed pair in {what}: {item!r}")
        s, t = str(item[0]), str(item[1])
        for world in (s, t):
            if world not in known:
                raise ModelFormatError(f"Unknown world {world!r} in {what}")
        result.append((s, t))
    return result


def relation_graph(worlds: Iterable[str], pairs: Iterable[Pair]) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(worlds)
    graph.add_edges_from(pairs)
    return graph


def transitive_closure(worlds: Iterable[str], pairs: Iterable[Pair]) -> Relation:
    """Least transitive relation containing the pairs (no reflexive pairs added)."""
    closed = nx.transitive_closure(relation_graph(worlds, pairs), reflexive=False)
    return frozenset(closed.edges())


def equivalence_closure(worlds: Sequence[str], pairs: Iterable[Pair]) -> Relation:
    """Least equivalence relation on ``worlds`` containing the pairs."""
    graph = nx.Graph()
    graph.add_nodes_from(worlds)
    graph.add_edges_from(pairs)
    result: Set[Pair] = set()
    for component in nx.connected_components(graph):
        result.update((s, t) for s in component for t in component)
    return frozenset(result)


def partition_relation(blocks: Iterable[Iterable[str]]) -> Relation:
    """Equivalence relation whose classes are the given blocks."""
    result: Set[Pair] = set()
    for block in blocks:
        members = list(block)
        result.update((s, t) for s in members for t in members)
    return frozenset(result)


def successor_map(worlds: Iterable[str], pairs: Iterable[Pair]) -> Dict[str, Set[str]]:
    successors: Dict[str, Set[str]] = {w: set() for w in worlds}
    for source, target in pairs:
        successors.setdefault(source, set()).add(target)
    return successors


def reachable(worlds: Iterable[str], pairs: Iterable[Pair], source: str) -> Set[str]:
    """Worlds reachable from ``source`` in one or more steps."""
    graph = relation_graph(worlds, pairs)
    found: Set[str] = set()
    for _, target in graph.out_edges(source):
        found.add(target)
        found |= nx.descendants(graph, target)
    return found


def reflexivity_violation(worlds: Iterable[str], relation: Relation) -> Optional[Pair]:
    for world in worlds:
        if (world, world) not in relation:
            return (world, world)
    return None


def symmetry_violation(relation: Relation) -> Optional[Pair]:
    for source, target in sorted(relation):
        if (target, source) not in relation:
            return (source, target)
    return None


def transitivity_violation(
    worlds: Iterable[str],
    relation: Relation
) -> Optional[Tuple[str, str, str]]:
    successors = successor_map(worlds, relation)
    for source, middle in sorted(relation):
        for target in sorted(successors.get(middle, ())):
            if (source, target) not in relation:
                return (source, middle, target)
    return None


def set_partitions(items: Sequence[str]) -> List[List[List[str]]]:
    """
    All partitions of ``items`` into non-empty blocks, in a fixed order.

    The first item is placed into each existing block of a partition of the
    rest, or into a new singleton block.
    """
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    result: List[List[List[str]]] = []
    for partition in set_partitions(rest):
        result.append([[first]] + partition)
        for index in range(len(partition)):
            result.append(
                partition[:index] + [[first] + partition[index]] + partition[index + 1:]
            )
    return result
