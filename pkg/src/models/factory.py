"""
Builds a model from a validated model spec.
File name and location: vertex-forms/src/models/factory.py
"""

import logging

from src.algebra.model import Cutoffs, GradedModel
from src.config.run_config import ModelSpec
from src.linalg import parse_scalar
from src.models.free_va import generate_subalgebra
from src.models.heisenberg import make_heisenberg
from src.models.lattice import LocalityMatrix, make_lattice_model

logger = logging.getLogger("vertex_forms.factory")


def build_model(spec: ModelSpec, cutoffs: Cutoffs) -> GradedModel:
    """
    Args:
        spec: Validated model section of the run configuration
        cutoffs: Degree and weight-length cutoffs

    Returns:
        The Heisenberg, lattice or free model

    Raises:
        DegenerateLattice: If N does not define an even nondegenerate lattice
    """
    if spec.type == "heisenberg":
        model = make_heisenberg(parse_scalar(spec.k), cutoffs)
        model.scan_excess = spec.scan_excess
        return model
    locality = LocalityMatrix.of(spec.generators, spec.N)
    flips = [(tuple(a), tuple(b)) for a, b in spec.cocycle_flips]
    lattice = make_lattice_model(locality, cutoffs, flips)
    lattice.scan_excess = spec.scan_excess
    if spec.type == "lattice":
        return lattice
    logger.info(f"Generating the free vertex algebra inside {lattice.name}")
    return generate_subalgebra(lattice, spec.source_degree)
