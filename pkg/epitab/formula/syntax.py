"""
Formula abstract syntax for MAEL(CD).

The AST has six node types: atoms, negation, conjunction, individual
knowledge K_a, distributed knowledge D and common knowledge C. Disjunction,
implication and equivalence are only sugar; the helpers at the bottom build
them out of negation and conjunction.

Formulas are immutable and compare structurally, so they can be used as
dictionary keys and set members throughout the tableau.
"""
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from epitab.errors import AgentSetError

IDENTIFIER_PATTERN = re.compile(r'[a-z][a-zA-Z0-9_]*\Z')


@dataclass(frozen=True)
class Formula:
    """Base class of all formula nodes."""

    def __str__(self) -> str:
        return render(self)

    def children(self) -> Tuple['Formula', ...]:
        return ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    child: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.child,)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True)
class Knows(Formula):
    agent: str
    child: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.child,)


@dataclass(frozen=True)
class Dist(Formula):
    child: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.child,)


@dataclass(frozen=True)
class Common(Formula):
    child: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.child,)


# ============================================================================
# Rendering
# ============================================================================

def _render_operand(formula: Formula) -> str:
    text = render(formula)
    return f"({text})" if isinstance(formula, And) else text


@lru_cache(maxsize=None)
def render(formula: Formula) -> str:
    """
    Render a formula in the ASCII input grammar.

    The output parses back to the same AST: conjunction is left-associative,
    so only a conjunction in right position (or under a unary operator) gets
    parentheses.

    Args:
        formula: Formula to render

    Returns:
        Canonical text, e.g. ``K{a} p & ~D C p``
    """
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Not):
        return f"~{_render_operand(formula.child)}"
    if isinstance(formula, And):
        return f"{render(formula.left)} & {_render_operand(formula.right)}"
    if isinstance(formula, Knows):
        return f"K{{{formula.agent}}} {_render_operand(formula.child)}"
    if isinstance(formula, Dist):
        return f"D {_render_operand(formula.child)}"
    if isinstance(formula, Common):
        return f"C {_render_operand(formula.child)}"
    raise TypeError(f"Not a formula: {formula!r}")


def sort_key(formula: Formula) -> str:
    """Canonical ordering key: lexicographic order of the rendering."""
    return render(formula)


# ============================================================================
# Derived connectives
# ============================================================================

def disj(left: Formula, right: Formula) -> Formula:
    return Not(And(Not(left), Not(right)))


def implies(left: Formula, right: Formula) -> Formula:
    return Not(And(left, Not(right)))


def iff(left: Formula, right: Formula) -> Formula:
    return And(implies(left, right), implies(right, left))


# ============================================================================
# Agent and formula sets
# ============================================================================

class AgentSet:
    """
    Deterministically ordered, duplicate-free set of agent names.

    The size constraint (at least two agents) belongs to the solver, not to
    this class: the model oracle legitimately works with a single agent.
    """

    __slots__ = ('_agents',)

    def __init__(self, agents: Iterable[str]):
        names = sorted(set(agents))
        if not names:
            raise AgentSetError("Agent set must not be empty")
        for name in names:
            if not IDENTIFIER_PATTERN.match(name):
                raise AgentSetError(f"Invalid agent name: {name!r}")
        self._agents = tuple(names)

    @classmethod
    def parse(cls, text: str) -> 'AgentSet':
        """Build an agent set from a comma-separated list such as ``a,b``."""
        names = [part.strip() for part in text.split(',') if part.strip()]
        return cls(names)

    @property
    def agents(self) -> Tuple[str, ...]:
        return self._agents

    def __iter__(self) -> Iterator[str]:
        return iter(self._agents)

    def __len__(self) -> int:
        return len(self._agents)

    def __contains__(self, agent: object) -> bool:
        return agent in self._agents

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AgentSet) and self._agents == other._agents

    def __hash__(self) -> int:
        return hash(self._agents)

    def __repr__(self) -> str:
        return f"AgentSet({list(self._agents)!r})"

    def __str__(self) -> str:
        return ",".join(self._agents)


class FormulaSet:
    """
    Immutable set of formulas iterated in canonical (rendering) order.

    Two formula sets are equal iff they hold the same formulas, which makes
    them usable as the identity of tableau nodes.
    """

    __slots__ = ('_members', '_ordered')

    def __init__(self, formulas: Iterable[Formula] = ()):
        self._members: FrozenSet[Formula] = frozenset(formulas)
        self._ordered: Optional[Tuple[Formula, ...]] = None

    @property
    def members(self) -> FrozenSet[Formula]:
        return self._members

    @property
    def ordered(self) -> Tuple[Formula, ...]:
        if self._ordered is None:
            self._ordered = tuple(sorted(self._members, key=sort_key))
        return self._ordered

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.ordered)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, formula: object) -> bool:
        return formula in self._members

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FormulaSet):
            return self._members == other._members
        if isinstance(other, (set, frozenset)):
            return self._members == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._members)

    def __le__(self, other: 'FormulaSet') -> bool:
        return self._members <= _members_of(other)

    def __lt__(self, other: 'FormulaSet') -> bool:
        return self._members < _members_of(other)

    def __or__(self, other: Iterable[Formula]) -> 'FormulaSet':
        return FormulaSet(self._members | _members_of(other))

    def __sub__(self, other: Iterable[Formula]) -> 'FormulaSet':
        return FormulaSet(self._members - _members_of(other))

    def __and__(self, other: Iterable[Formula]) -> 'FormulaSet':
        return FormulaSet(self._members & _members_of(other))

    def issubset(self, other: Iterable[Formula]) -> bool:
        return self._members <= _members_of(other)

    def render(self) -> str:
        return "{" + ", ".join(render(f) for f in self.ordered) + "}"

    def __repr__(self) -> str:
        return f"FormulaSet({self.render()})"

    def __str__(self) -> str:
        return self.render()


def _members_of(value: Iterable[Formula]) -> FrozenSet[Formula]:
    if isinstance(value, FormulaSet):
        return value.members
    return frozenset(value)


@dataclass(frozen=True)
class Eventuality:
    """A formula of shape ~C phi, which demands a reachable world refuting phi."""

    formula: Formula

    def __post_init__(self):
        if not (isinstance(self.formula, Not) and isinstance(self.formula.child, Common)):
            raise ValueError(f"Not an eventuality: {render(self.formula)}")

    @property
    def body(self) -> Formula:
        """The formula phi under ~C."""
        return self.formula.child.child

    @property
    def witness(self) -> Formula:
        """The formula ~phi that realizes the eventuality."""
        return Not(self.body)

    def __str__(self) -> str:
        return render(self.formula)


# ============================================================================
# Structural queries
# ============================================================================

def subformulae(formula: Formula) -> FormulaSet:
    """
    All subformulae of a formula, the formula itself included.

    Args:
        formula: Formula to decompose

    Returns:
        FormulaSet closed under the immediate-subformula relation
    """
    return FormulaSet(_subformula_members(formula))


@lru_cache(maxsize=4096)
def _subformula_members(formula: Formula) -> FrozenSet[Formula]:
    found: Set[Formula] = set()
    stack: List[Formula] = [formula]
    while stack:
        current = stack.pop()
        if current in found:
            continue
        found.add(current)
        stack.extend(current.children())
    return frozenset(found)


def agents_of(formula: Formula) -> Set[str]:
    """Agents named by K operators inside a formula."""
    return {f.agent for f in _subformula_members(formula) if isinstance(f, Knows)}


def atoms_of(formula: Formula) -> Set[str]:
    """Proposition names occurring in a formula."""
    return {f.name for f in _subformula_members(formula) if isinstance(f, Atom)}


def connective_count(formula: Formula) -> int:
    """Number of operator occurrences (atoms count zero)."""
    if isinstance(formula, Atom):
        return 0
    return 1 + sum(connective_count(child) for child in formula.children())


def is_negated_knowledge(formula: Formula) -> bool:
    """True for the diamond shapes ~K_a phi and ~D phi that get successor nodes."""
    return isinstance(formula, Not) and isinstance(formula.child, (Knows, Dist))
