"""
Invariant forms for vertex-forms: the adjoint, the canonical form, its
radical and the quotient by it.
"""

from .adjoint import ModeWord, adjoint_mode, adjoint_word, verify_antihom, verify_involution, verify_lemma_dst
from .invariant_form import (
    GramBlock,
    InvariantForm,
    QSpace,
    ScalarFunctional,
    forms_dimension,
    forms_dimension_exact,
    gram_block,
    i0_basis,
    pair,
    verify_symmetry_and_bijection,
)
from .quotient import QuotientModel, quotient_model, verify_rad0
from .radical import RadicalEntry, RadicalReport, radical, radical_block, verify_lemma_i, verify_negative_ideal

__all__ = [
    'ModeWord', 'adjoint_mode', 'adjoint_word', 'verify_antihom', 'verify_involution', 'verify_lemma_dst',
    'GramBlock', 'InvariantForm', 'QSpace', 'ScalarFunctional', 'forms_dimension', 'forms_dimension_exact', 'gram_block',
    'i0_basis', 'pair', 'verify_symmetry_and_bijection',
    'QuotientModel', 'quotient_model', 'verify_rad0',
    'RadicalEntry', 'RadicalReport', 'radical', 'radical_block', 'verify_lemma_i', 'verify_negative_ideal',
]
