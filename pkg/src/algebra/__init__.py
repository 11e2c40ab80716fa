"""
Graded vertex algebra core for vertex-forms.
Elements, the model interface with its product engine, errors, reports and
the identity suites.
"""

from .element import BasisState, Block, Element, Weight, add_weights, sub_weights, weight_len
from .errors import (
    ConfigError,
    CutoffExceeded,
    DegenerateLattice,
    InvalidFunctional,
    NotHomogeneous,
    VertexFormsError,
)
from .model import Cutoffs, GradedModel, StateModel, dstar_image, generalized_binomial
from .report import DimensionRow, Report, ReportModel, dimension_rows
from .verification import (
    central_charge,
    verify_adD,
    verify_assoc,
    verify_axioms,
    verify_prop_sl2,
    verify_quasisym,
    verify_sl2,
    verify_virasoro,
)

__all__ = [
    'BasisState', 'Block', 'Element', 'Weight', 'add_weights', 'sub_weights', 'weight_len',
    'ConfigError', 'CutoffExceeded', 'DegenerateLattice', 'InvalidFunctional',
    'NotHomogeneous', 'VertexFormsError',
    'Cutoffs', 'GradedModel', 'StateModel', 'dstar_image', 'generalized_binomial',
    'DimensionRow', 'Report', 'ReportModel', 'dimension_rows',
    'central_charge', 'verify_adD', 'verify_assoc', 'verify_axioms', 'verify_prop_sl2',
    'verify_quasisym', 'verify_sl2', 'verify_virasoro',
]
