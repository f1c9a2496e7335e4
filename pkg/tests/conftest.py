"""
Shared fixtures for the epitab test suite.
"""
import pytest

from epitab.formula import AgentSet, parse

# Satisfiable input of the worked example: both agents know p, yet p is not
# distributed common knowledge.
EXAMPLE = "K{a} p & K{b} p & ~D C p"


@pytest.fixture
def ab():
    """The two-agent set {a, b}."""
    return AgentSet(['a', 'b'])


@pytest.fixture
def example(ab):
    """Parsed worked-example formula."""
    return parse(EXAMPLE, ab)


@pytest.fixture
def one_world_model_data():
    """JSON form of a single reflexive world where p holds."""
    return {
        "agents": ["a", "b"],
        "states": ["s0"],
        "atoms": ["p"],
        "valuation": {"s0": ["p"]},
        "relations": {"a": [], "b": []},
        "rd": [],
        "genuine": True,
    }
