"""
epitab - Tableau decision procedure for multi-agent epistemic logic

Decides satisfiability of formulas with individual knowledge (K{a}),
distributed knowledge (D) and common knowledge (C) over a set of agents,
and produces checkable witness models for satisfiable inputs.

Example usage:
    from epitab import create_solver, parse

    solver = create_solver(agents='a,b')
    result = solver.solve(parse('K{a} p & K{b} p & ~D C p'))
    if result.satisfiable:
        witness = solver.extract_witness(result)
        witness.model.save('witness.json')
"""

__version__ = "0.1.0"

from .base import BaseRankPolicy
from .factory import create_rank_policy, create_solver
from .formula import AgentSet, Formula, parse
from .solver import TableauResult, TableauSolver

__all__ = [
    'AgentSet',
    'BaseRankPolicy',
    'Formula',
    'TableauResult',
    'TableauSolver',
    'create_rank_policy',
    'create_solver',
    'parse',
]
