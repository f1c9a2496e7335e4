"""
Epistemic (pseudo-)models and their JSON format.

A model has one relation per agent, a distributed-knowledge relation R_D and
the common-knowledge relation R_C, which is always recomputed as the
transitive closure of the union of the agent relations. In a genuine model
R_D is exactly the intersection of the agent relations; in a pseudo-model it
may be smaller.

JSON format::

    {"agents": [...], "states": [...], "atoms": [...],
     "valuation": {state: [atoms]}, "relations": {agent: [[s, t], ...]},
     "rd": [[s, t], ...], "genuine": bool, "labels": {state: [formulas]}}

Relations are stored as unordered pair lists; loading takes their
equivalence closure.
"""
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Sequence

from epitab.errors import ModelFormatError
from epitab.formula.parser import parse
from epitab.formula.syntax import AgentSet, FormulaSet, render
from epitab.utils.logging_config import get_logger
from epitab.utils.relations import (
    Relation,
    equivalence_closure,
    read_pairs,
    transitive_closure,
)

logger = get_logger(__name__)


@dataclass
class PseudoModel:
    """
    Attributes:
        agents: Agent set
        worlds: World ids in a fixed order
        relations: Relation R_a per agent
        rd: Distributed-knowledge relation R_D
        valuation: Atoms true at each world
        atoms: Atom vocabulary AP (atoms outside it are false everywhere)
        labels: Optional formula labels carried over from a Hintikka structure
        rc: Common-knowledge relation (computed)
    """
    agents: AgentSet
    worlds: Sequence[str]
    relations: Dict[str, Relation]
    rd: Relation
    valuation: Dict[str, FrozenSet[str]]
    atoms: FrozenSet[str] = frozenset()
    labels: Optional[Dict[str, FormulaSet]] = None
    rc: Relation = field(default=frozenset())

    def __post_init__(self):
        self.worlds = tuple(self.worlds)
        for agent in self.agents:
            self.relations.setdefault(agent, frozenset())
        for world in self.worlds:
            self.valuation.setdefault(world, frozenset())
        if not self.atoms:
            self.atoms = frozenset(a for atoms in self.valuation.values() for a in atoms)
        self.rc = transitive_closure(self.worlds, self.union())

    def union(self) -> Relation:
        """Union of all agent relations."""
        result: set = set()
        for agent in self.agents:
            result.update(self.relations[agent])
        return frozenset(result)

    def intersection(self) -> Relation:
        """Intersection of all agent relations."""
        relations = [self.relations[a] for a in self.agents]
        result = set(relations[0])
        for relation in relations[1:]:
            result &= relation
        return frozenset(result)

    @property
    def genuine(self) -> bool:
        return self.rd == self.intersection()

    def require_world(self, world: str):
        if world not in self.worlds:
            raise ModelFormatError(f"Unknown world: {world!r} (worlds: {', '.join(self.worlds)})")

    # ------------------------------------------------------------------
    # JSON
    # ------------------------------------------------------------------

    def to_json(self) -> Dict[str, Any]:
        order = {w: i for i, w in enumerate(self.worlds)}

        def unordered(relation: Relation) -> List[List[str]]:
            pairs = {tuple(sorted((s, t), key=order.get)) for s, t in relation if s != t}
            return [list(p) for p in sorted(pairs, key=lambda p: (order[p[0]], order[p[1]]))]

        data: Dict[str, Any] = {
            'agents': list(self.agents),
            'states': list(self.worlds),
            'atoms': sorted(self.atoms),
            'valuation': {w: sorted(self.valuation[w]) for w in self.worlds},
            'relations': {a: unordered(self.relations[a]) for a in self.agents},
            'rd': unordered(self.rd),
            'genuine': self.genuine,
        }
        if self.labels is not None:
            data['labels'] = {w: [render(f) for f in self.labels[w]] for w in self.worlds}
        return data

    def save(self, path):
        with open(path, 'w') as f:
            json.dump(self.to_json(), f, indent=2)
            f.write("\n")
        logger.info(f"Model with {len(self.worlds)} world(s) written to {path}")

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> 'PseudoModel':
        """
        Build a model from its JSON form, closing every relation.

        Raises:
            ModelFormatError: On missing fields, unknown worlds or agents, or a
                ``genuine`` flag that does not match the relations
        """
        try:
            agents = AgentSet(data['agents'])
            worlds = [str(w) for w in data['states']]
            raw_relations = data.get('relations', {})
            valuation_data = data.get('valuation', {})
        except (KeyError, TypeError) as e:
            raise ModelFormatError(f"Malformed model: missing or invalid field {e}") from None

        if not worlds:
            raise ModelFormatError("Model has no states")
        if len(set(worlds)) != len(worlds):
            raise ModelFormatError("Duplicate state ids in model")
        known = set(worlds)

        for agent in raw_relations:
            if agent not in agents:
                raise ModelFormatError(f"Relation given for undeclared agent {agent!r}")
        relations = {}
        for agent in agents:
            listed = read_pairs(raw_relations.get(agent, []), known, f"relation {agent}")
            relations[agent] = equivalence_closure(worlds, listed)

        valuation: Dict[str, FrozenSet[str]] = {}
        for world, atoms in valuation_data.items():
            if str(world) not in known:
                raise ModelFormatError(f"Unknown world {world!r} in valuation")
            valuation[str(world)] = frozenset(atoms)
        atoms = frozenset(data.get('atoms', [])) | frozenset(
            a for values in valuation.values() for a in values
        )

        labels = None
        if 'labels' in data:
            labels = {}
            for world, texts in data['labels'].items():
                if str(world) not in known:
                    raise ModelFormatError(f"Unknown world {world!r} in labels")
                labels[str(world)] = FormulaSet(parse(text, agents) for text in texts)

        model = cls(agents, worlds, relations, frozenset(), valuation, atoms, labels)
        if 'rd' in data:
            model.rd = equivalence_closure(worlds, read_pairs(data['rd'], known, "rd"))
        else:
            model.rd = model.intersection()

        if not model.rd <= model.intersection():
            raise ModelFormatError(
                "R_D is not contained in the intersection of the agent relations"
            )
        declared = data.get('genuine')
        if declared is not None and bool(declared) != model.genuine:
            raise ModelFormatError(
                f"Model declares genuine={bool(declared)} but its relations give "
                f"genuine={model.genuine}"
            )
        return model

    @classmethod
    def load(cls, path) -> 'PseudoModel':
        try:
            with open(path, 'r') as f:
                data = json.load(f)
        except (json.JSONDecodeError, IOError) as e:
            raise ModelFormatError(f"Cannot read model file {path}: {e}") from None
        model = cls.from_json(data)
        logger.debug(f"Loaded model with {len(model.worlds)} world(s) from {Path(path)}")
        return model
