"""
Tableau procedure: pretableau construction, prestate elimination, state
elimination and verdict.
"""
from epitab.tableau.construction import (
    apply_dr,
    apply_kr,
    apply_sr,
    build_pretableau,
    eliminate_prestates,
)
from epitab.tableau.dot import export_dot
from epitab.tableau.elimination import (
    EliminationRecord,
    EliminationTrace,
    Verdict,
    eliminate_states,
    replay_trace,
    verdict,
)
from epitab.tableau.graph import MarkedEdge, Node, NodeKind, TableauGraph
from epitab.tableau.ranks import MinRankPolicy, StrictRankPolicy, compute_ranks

__all__ = [
    'EliminationRecord',
    'EliminationTrace',
    'MarkedEdge',
    'MinRankPolicy',
    'Node',
    'NodeKind',
    'StrictRankPolicy',
    'TableauGraph',
    'Verdict',
    'apply_dr',
    'apply_kr',
    'apply_sr',
    'build_pretableau',
    'compute_ranks',
    'eliminate_prestates',
    'eliminate_states',
    'export_dot',
    'replay_trace',
    'verdict',
]
