"""
Basic import tests for the epitab package.
"""
import pytest


def test_import_epitab():
    """Test that the main package can be imported."""
    import epitab
    assert epitab.__version__ == "0.1.0"


def test_import_base_classes():
    """Test that the rank policy base class can be imported."""
    from epitab import BaseRankPolicy
    assert BaseRankPolicy is not None


def test_import_factory():
    """Test that factory functions can be imported."""
    from epitab import create_rank_policy, create_solver
    assert create_solver is not None
    assert create_rank_policy is not None


def test_import_config():
    """Test that config module can be imported."""
    from epitab import config
    assert hasattr(config, 'STRICT_RANK')
    assert hasattr(config, 'DECISION_SCOPE')
    assert config.DECISION_SCOPE in config.DECISION_SCOPES


def test_import_subpackages():
    """Test that the library subpackages exist."""
    from epitab import cli, formula, hintikka, model, tableau

    assert formula is not None
    assert tableau is not None
    assert hintikka is not None
    assert model is not None
    assert cli is not None


def test_import_utils():
    """Test that utility modules can be imported."""
    from epitab.utils import equivalence_closure, get_logger
    assert get_logger is not None
    assert equivalence_closure is not None


def test_get_logger_namespace():
    """Module loggers live under the epitab logger."""
    from epitab.utils import get_logger
    assert get_logger('epitab.solver').name == 'epitab.solver'
    assert get_logger('solver').name == 'epitab.solver'


def test_factory_error_handling():
    """Test that factory raises appropriate errors."""
    from epitab import create_rank_policy, create_solver

    with pytest.raises(ValueError) as exc_info:
        create_rank_policy('invalid_policy')
    assert 'Unknown rank policy' in str(exc_info.value)

    with pytest.raises(ValueError) as exc_info:
        create_solver(decision_scope='everything')
    assert 'Unknown decision scope' in str(exc_info.value)


def test_base_classes_are_abstract():
    """Test that the base class cannot be instantiated directly."""
    from epitab.base import BaseRankPolicy

    with pytest.raises(TypeError):
        BaseRankPolicy()
