"""
Utility modules for epitab.
"""

from .logging_config import setup_logging, get_logger
from .relations import equivalence_closure, transitive_closure

__all__ = [
    'setup_logging',
    'get_logger',
    'equivalence_closure',
    'transitive_closure',
]
