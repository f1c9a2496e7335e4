"""
Multi-agent epistemic Hintikka structures.

A Hintikka structure is a graph of worlds, each labeled with a set of
formulas, with one relation per agent, a distributed-knowledge relation R_D
and the common-knowledge relation R_C (the transitive closure of the union of
all others).
"""
import json
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Tuple

from epitab.errors import ModelFormatError
from epitab.formula.parser import parse
from epitab.formula.syntax import AgentSet, Atom, FormulaSet, render
from epitab.utils.logging_config import get_logger
from epitab.utils.relations import (
    Relation,
    equivalence_closure,
    read_pairs,
    transitive_closure,
)

logger = get_logger(__name__)


@dataclass
class HintikkaStructure:
    """
    Attributes:
        agents: Agent set
        worlds: World ids in creation order
        relations: Per-agent relation R_a
        rd: Distributed-knowledge relation R_D
        labels: Formula set of every world
        designated: World whose label is expected to hold the input formula
        rc: Common-knowledge relation (computed)
    """
    agents: AgentSet
    worlds: List[str]
    relations: Dict[str, Relation]
    rd: Relation
    labels: Dict[str, FormulaSet]
    designated: Optional[str] = None
    rc: Relation = field(default=frozenset())

    def __post_init__(self):
        for agent in self.agents:
            self.relations.setdefault(agent, frozenset())
        self.rc = common_relation(self.worlds, self.relations, self.rd)

    def atoms(self) -> FrozenSet[str]:
        return frozenset(
            f.name for label in self.labels.values() for f in label if isinstance(f, Atom)
        )

    def edges(self) -> List[Tuple[str, str, str]]:
        """All (source, relation name, target) triples; R_D is named ``D``."""
        result = [(s, agent, t) for agent in self.agents for s, t in self.relations[agent]]
        result.extend((s, 'D', t) for s, t in self.rd)
        return sorted(result)

    @property
    def genuine(self) -> bool:
        """Whether the pseudo-model this structure induces is a genuine model."""
        closed_rd = equivalence_closure(self.worlds, self.rd)
        closed = [
            equivalence_closure(self.worlds, set(self.relations[a]) | set(self.rd))
            for a in self.agents
        ]
        return closed_rd == frozenset.intersection(*closed)

    def to_json(self) -> Dict[str, Any]:
        """Serialize in the JSON model format, labels included."""
        return {
            'agents': list(self.agents),
            'states': list(self.worlds),
            'atoms': sorted(self.atoms()),
            'valuation': {
                w: sorted(f.name for f in self.labels[w] if isinstance(f, Atom))
                for w in self.worlds
            },
            'relations': {a: sorted([s, t] for s, t in self.relations[a]) for a in self.agents},
            'rd': sorted([s, t] for s, t in self.rd),
            'genuine': self.genuine,
            'labels': {w: [render(f) for f in self.labels[w]] for w in self.worlds},
        }

    def save(self, path):
        with open(path, 'w') as f:
            json.dump(self.to_json(), f, indent=2)
            f.write("\n")
        logger.info(f"Hintikka structure with {len(self.worlds)} world(s) written to {path}")

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> 'HintikkaStructure':
        """
        Rebuild a structure from its JSON form; relations are taken as listed.

        The first state is designated.

        Raises:
            ModelFormatError: On missing fields or references to unknown worlds
        """
        try:
            agents = AgentSet(data['agents'])
            worlds = [str(w) for w in data['states']]
            raw_relations = data['relations']
            raw_labels = data['labels']
        except (KeyError, TypeError) as e:
            raise ModelFormatError(f"Malformed Hintikka structure: missing field {e}") from None
        if not worlds:
            raise ModelFormatError("Hintikka structure has no states")
        known = set(worlds)

        for agent in raw_relations:
            if agent not in agents:
                raise ModelFormatError(f"Relation given for undeclared agent {agent!r}")
        for world in raw_labels:
            if world not in known:
                raise ModelFormatError(f"Unknown world {world!r} in labels")
        relations = {
            a: frozenset(read_pairs(raw_relations.get(a, []), known, f"relation {a}"))
            for a in agents
        }
        labels = {
            w: FormulaSet(parse(text, agents) for text in raw_labels.get(w, [])) for w in worlds
        }
        return cls(
            agents=agents,
            worlds=worlds,
            relations=relations,
            rd=frozenset(read_pairs(data.get('rd', []), known, "rd")),
            labels=labels,
            designated=worlds[0],
        )

    @classmethod
    def load(cls, path) -> 'HintikkaStructure':
        try:
            with open(path) as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ModelFormatError(f"Cannot read Hintikka structure from {path}: {e}") from None
        return cls.from_json(data)

def common_relation(worlds: List[str], relations: Dict[str, Relation], rd: Relation) -> Relation:
    """Transitive closure of R_D together with every R_a."""
    union: set = set(rd)
    for pairs in relations.values():
        union.update(pairs)
    return transitive_closure(worlds, union)

