"""
Exact rational matrices, row reduction, kernels and linear solves.
File name and location: vertex-forms/src/linalg/exact.py
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger("vertex_forms.linalg")

Scalar = Fraction
Vector = List[Fraction]


def parse_scalar(value: Union[str, int, Fraction]) -> Fraction:
    """
    Parse a rational given as an integer, a Fraction or a "p/q" string.

    Args:
        value: The value to parse

    Returns:
        The value as a Fraction in lowest terms
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"Rationals must be written as p/q, got {value!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError as e:
            raise ValueError(f"Zero denominator in {value!r}") from e
    raise ValueError(f"Not a rational: {value!r}")


def format_scalar(value: Fraction) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass
class Mat:
    """Dense row-major matrix of Fractions."""
    rows: int
    cols: int
    entries: List[Fraction] = field(default_factory=list)

    def __post_init__(self):
        if not self.entries:
            self.entries = [Fraction(0)] * (self.rows * self.cols)
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"Matrix of shape {self.rows}x{self.cols} needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        self.entries = [Fraction(x) for x in self.entries]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Mat":
        """
        Build a matrix from a list of rows.

        Args:
            rows: Row vectors, all of the same length
            cols: Column count, needed only when there are no rows

        Returns:
            The matrix
        """
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError(f"Ragged row of length {len(r)}, expected {cols}")
        return cls(len(rows), cols, [Fraction(x) for r in rows for x in r])

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)


def _to_domain(m: Mat) -> DomainMatrix:
    rows = [[QQ(x.numerator, x.denominator) for x in m.row(i)] for i in range(m.rows)]
    return DomainMatrix(rows, (m.rows, m.cols), QQ)


def _from_domain(dm: DomainMatrix, rows: int, cols: int) -> Mat:
    sm = dm.to_Matrix()
    return Mat(rows, cols, [Fraction(int(x.p), int(x.q)) for x in sm])


def rref(m: Mat) -> Tuple[Mat, List[int]]:
    """
    Reduced row-echelon form.

    Args:
        m: The matrix

    Returns:
        Tuple of the reduced matrix and the list of pivot columns
    """
    if m.rows == 0 or m.cols == 0:
        return Mat(m.rows, m.cols, list(m.entries)), []
    reduced, pivots = _to_domain(m).rref()
    return _from_domain(reduced, m.rows, m.cols), list(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Mat) -> List[Vector]:
    """
    Canonical basis of the right null space.

    One vector per free column, in increasing column order: the free
    coordinate is 1, the other free coordinates are 0 and the pivot
    coordinates are read off the reduced rows.

    Args:
        m: The matrix

    Returns:
        List of kernel vectors, empty when the columns are independent
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, free]
        basis.append(v)
    return basis


def solve(m: Mat, b: Sequence) -> Optional[Vector]:
    """
    Solve m·x = b exactly.

    Args:
        m: Coefficient matrix
        b: Right-hand side, one entry per row

    Returns:
        The particular solution with all free variables zero, or None when
        the system is inconsistent
    """
    if len(b) != m.rows:
        raise ValueError(f"Right-hand side of length {len(b)} does not match {m.rows} rows")
    augmented = Mat.from_rows([m.row(i) + [Fraction(b[i])] for i in range(m.rows)], m.cols + 1)
    reduced, pivots = rref(augmented)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = reduced[i, m.cols]
    return x


def row_space(vectors: Iterable[Sequence], length: int) -> Tuple[List[Vector], List[int]]:
    """
    Canonical basis of the span of some vectors.

    Args:
        vectors: Vectors of the given length
        length: Ambient dimension

    Returns:
        Tuple of the nonzero reduced rows and their pivot columns
    """
    rows = [list(v) for v in vectors]
    if not rows:
        return [], []
    reduced, pivots = rref(Mat.from_rows(rows, length))
    return [reduced.row(i) for i in range(len(pivots))], pivots


def reduce_by_rows(coords: Sequence, rows: Sequence[Sequence], pivots: Sequence[int]) -> Vector:
    """
    Clear the pivot coordinates of a vector against reduced rows.

    Args:
        coords: The vector
        rows: Rows in reduced row-echelon form
        pivots: Pivot column of each row

    Returns:
        The vector minus its component along the rows; zero exactly when it lies in their span
    """
    v = [Fraction(x) for x in coords]
    for row, p in zip(rows, pivots):
        c = v[p]
        if c:
            v = [x - c * r for x, r in zip(v, row)]
    return v
