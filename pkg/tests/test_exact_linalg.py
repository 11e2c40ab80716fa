import os
import sys
import unittest
import logging
from fractions import Fraction

# Add the src directory to the path so we can import our modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.linalg import Mat, format_scalar, kernel_basis, parse_scalar, rank, reduce_by_rows, row_space, rref, solve

# Disable logging output during tests
logging.disable(logging.CRITICAL)


class TestScalars(unittest.TestCase):
    """Parsing and rendering of rationals."""

    def test_parse(self):
        self.assertEqual(parse_scalar("3/6"), Fraction(1, 2))
        self.assertEqual(parse_scalar(" -4 "), Fraction(-4))
        self.assertEqual(parse_scalar(7), Fraction(7))

    def test_parse_rejects_decimals_and_zero_denominators(self):
        for bad in ("0.5", "1e3", "1/0", "half", True):
            with self.assertRaises(ValueError):
                parse_scalar(bad)

    def test_format(self):
        self.assertEqual(format_scalar(Fraction(-4, 2)), "-2")
        self.assertEqual(format_scalar(Fraction(1, 3)), "1/3")


class TestRowReduction(unittest.TestCase):

    def setUp(self):
        """A rank-2 matrix with one free column."""
        self.m = Mat.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])

    def test_rref(self):
        reduced, pivots = rref(self.m)
        self.assertEqual(pivots, [0, 1])
        self.assertEqual([reduced.row(i) for i in range(3)], [[1, 0, 1], [0, 1, 1], [0, 0, 0]])
        self.assertEqual(rank(self.m), 2)

    def test_kernel(self):
        kernel = kernel_basis(self.m)
        self.assertEqual(kernel, [[-1, -1, 1]])
        self.assertEqual([sum(a * b for a, b in zip(self.m.row(i), kernel[0])) for i in range(3)], [0, 0, 0])

    def test_kernel_of_full_rank_matrix_is_empty(self):
        self.assertEqual(kernel_basis(Mat.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])), [])

    def test_empty_matrix(self):
        empty = Mat.from_rows([], 3)
        self.assertEqual(rank(empty), 0)
        self.assertEqual(len(kernel_basis(empty)), 3)

    def test_solve(self):
        self.assertEqual(solve(self.m, [6, 12, 2]), [2, 2, 0])
        self.assertIsNone(solve(self.m, [1, 0, 0]))
        x = solve(Mat.from_rows([[3, 1], [1, 1]]), [1, 0])
        self.assertEqual(x, [Fraction(1, 2), Fraction(-1, 2)])

    def test_row_space(self):
        rows, pivots = row_space([[1, 1], [2, 2]], 2)
        self.assertEqual(rows, [[1, 1]])
        self.assertEqual(pivots, [0])
        self.assertEqual(row_space([], 2), ([], []))

    def test_reduce_by_rows(self):
        rows, pivots = row_space([self.m.row(i) for i in range(3)], 3)
        self.assertEqual(reduce_by_rows([3, 5, 8], rows, pivots), [0, 0, 0])
        self.assertEqual(reduce_by_rows([1, 1, 1], rows, pivots), [0, 0, -1])
        self.assertEqual(reduce_by_rows([1, 2], [], []), [1, 2])

    def test_ragged_rows(self):
        with self.assertRaises(ValueError):
            Mat.from_rows([[1, 2], [3]])


if __name__ == '__main__':
    unittest.main()
