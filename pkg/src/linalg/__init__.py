"""
Exact linear algebra over the rationals.
Every other package builds its Gram blocks, spans and kernels on this module.
"""

from .exact import (
    Mat,
    Scalar,
    format_scalar,
    kernel_basis,
    parse_scalar,
    rank,
    reduce_by_rows,
    row_space,
    rref,
    solve,
)

__all__ = [
    'Mat',
    'Scalar',
    'format_scalar',
    'kernel_basis',
    'parse_scalar',
    'rank',
    'reduce_by_rows',
    'row_space',
    'rref',
    'solve',
]
