"""
Concrete vertex algebras for vertex-forms: the Heisenberg algebra, lattice
vertex algebras and free vertex algebras generated inside them.
"""

from .combinatorics import colored_partitions, partition_count, partitions_of
from .factory import build_model
from .free_va import (
    GeneratedSubspace,
    check_weight_zero,
    colored_partition_dim,
    compare_dims,
    dmin,
    f0bar_product_table,
    generate_subalgebra,
)
from .heisenberg import FockState, HeisenbergModel, fock_basis, make_heisenberg, omega
from .lattice import (
    LatticeModel,
    LatticeState,
    LocalityMatrix,
    conformal_vector,
    make_lattice_model,
    verify_generator_localities,
)

__all__ = [
    'colored_partitions', 'partition_count', 'partitions_of',
    'build_model',
    'GeneratedSubspace', 'check_weight_zero', 'colored_partition_dim', 'compare_dims', 'dmin',
    'f0bar_product_table', 'generate_subalgebra',
    'FockState', 'HeisenbergModel', 'fock_basis', 'make_heisenberg', 'omega',
    'LatticeModel', 'LatticeState', 'LocalityMatrix', 'conformal_vector', 'make_lattice_model',
    'verify_generator_localities',
]
