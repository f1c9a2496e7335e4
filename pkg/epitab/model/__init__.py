"""
Semantics: models, model checking, frame conditions and the brute-force oracle.
"""
from epitab.model.checker import ModelChecker, SatReport, sat_report, satisfies
from epitab.model.enumeration import (
    NotFoundWithinBound,
    Witness,
    brute_force_sat,
    enumerate_models,
    models_of_size,
)
from epitab.model.frames import FrameReport, check_frame_conditions
from epitab.model.structure import PseudoModel
from epitab.model.witness import (
    hintikka_from_model,
    pseudo_model_from_hintikka,
    truth_lemma_violations,
)

__all__ = [
    'FrameReport',
    'ModelChecker',
    'NotFoundWithinBound',
    'PseudoModel',
    'SatReport',
    'Witness',
    'brute_force_sat',
    'check_frame_conditions',
    'enumerate_models',
    'hintikka_from_model',
    'models_of_size',
    'pseudo_model_from_hintikka',
    'sat_report',
    'satisfies',
    'truth_lemma_violations',
]
