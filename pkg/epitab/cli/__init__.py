"""
epitab CLI - satisfiability, validity, model checking and oracle commands.
"""
from epitab.cli.main import build_parser, main

__all__ = ['build_parser', 'main']
