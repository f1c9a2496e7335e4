"""
Hintikka structures: extraction from an open final tableau and validation.
"""
from epitab.hintikka.components import FinalTreeComponent, build_component, deferred_eventualities
from epitab.hintikka.stitching import stitch_hintikka
from epitab.hintikka.structure import HintikkaStructure, common_relation
from epitab.hintikka.validation import ValidationReport, validate_hintikka

__all__ = [
    'FinalTreeComponent',
    'HintikkaStructure',
    'ValidationReport',
    'build_component',
    'common_relation',
    'deferred_eventualities',
    'stitch_hintikka',
    'validate_hintikka',
]
