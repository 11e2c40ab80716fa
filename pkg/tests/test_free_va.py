import os
import sys
import unittest
import logging

# Add the src directory to the path so we can import our modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.algebra import CutoffExceeded, Cutoffs
from src.forms import forms_dimension_exact, i0_basis, quotient_model
from src.models import (
    LocalityMatrix,
    check_weight_zero,
    colored_partition_dim,
    compare_dims,
    dmin,
    f0bar_product_table,
    generate_subalgebra,
    make_lattice_model,
)

# Disable logging output during tests
logging.disable(logging.CRITICAL)

A2_N = [[-2, 1], [1, -2]]


def free_algebra(names, N, max_degree, max_weight_len):
    return generate_subalgebra(make_lattice_model(LocalityMatrix.of(names, N), Cutoffs(max_degree, max_weight_len)))


class TestDimensionFormula(unittest.TestCase):

    def test_dmin(self):
        self.assertEqual(dmin((2,), [[-2]]), 4)
        self.assertEqual(dmin((1,), [[2]]), -1)
        self.assertEqual(dmin((1, 1), A2_N), 1)
        self.assertEqual(dmin((0, 0), A2_N), 0)

    def test_colored_partition_dim(self):
        self.assertEqual(colored_partition_dim((0,), 0, [[-2]]), 1)
        self.assertEqual(colored_partition_dim((0,), 1, [[-2]]), 0)
        self.assertEqual(colored_partition_dim((1,), 3, [[-2]]), 1)
        self.assertEqual(colored_partition_dim((2,), 3, [[-2]]), 0)
        self.assertEqual(colored_partition_dim((2,), 6, [[-2]]), 2)
        self.assertEqual(colored_partition_dim((1, 1), 2, A2_N), 2)
        self.assertEqual(colored_partition_dim((-1,), 3, [[-2]]), 0)


class TestGeneratedSubalgebra(unittest.TestCase):
    """
    Unit tests for the free vertex algebra generated inside a lattice model.

    Block dimensions must match the colored-partition count.
    """

    def test_rank_one_positive_definite(self):
        sub = free_algebra(["g"], [[-2]], 13, 3)
        self.assertEqual(sub.block_dim((1,), 0), 0)
        self.assertEqual(sub.block_dim((1,), 1), 1)
        self.assertEqual(sub.block_dim((2,), 4), 1)
        self.assertEqual(sub.block_dim((2,), 6), 2)
        report = compare_dims(sub, max_excess=4)
        self.assertTrue(report.passed, report.witness)
        self.assertEqual(report.details["mismatches"], 0)

    def test_rank_one_negative_locality(self):
        sub = free_algebra(["g"], [[2]], 3, 3)
        self.assertEqual(sub.min_degree((3,)), -9)
        report = compare_dims(sub, max_excess=4)
        self.assertTrue(report.passed, report.witness)

    def test_rank_two(self):
        sub = free_algebra(["g1", "g2"], A2_N, 8, 2)
        report = compare_dims(sub, max_excess=4)
        self.assertTrue(report.passed, report.witness)
        self.assertEqual(sub.block_dim((1, 1), 2), 2)

    def test_full_scan(self):
        sub = free_algebra(["g"], [[-2]], 5, 3)
        report = compare_dims(sub)
        self.assertTrue(report.passed, report.witness)
        self.assertEqual(report.details["cutoff_limited"], 0)

    def test_weight_zero(self):
        sub = free_algebra(["g"], [[-2]], 4, 2)
        report = check_weight_zero(sub)
        self.assertTrue(report.passed, report.witness)

    def test_generators(self):
        sub = free_algebra(["g"], [[4]], 2, 2)
        self.assertEqual(len(sub.generator_elements()), 1)
        self.assertEqual(sub.generator(0).block(), ((1,), -2))
        self.assertIsNone(sub.min_degree((-1,)))
        self.assertIsNone(sub.degree_zero_weights())

    def test_sources_above_max_degree_complete_the_block(self):
        sub = free_algebra(["g"], [[4]], 1, 2)
        self.assertEqual(sub.block_dim((2,), 0), 5)
        self.assertTrue(sub.block_complete((2,), 0))
        self.assertTrue(forms_dimension_exact(sub, (2,)))
        summary = {tuple(s.weight): s for s in i0_basis(sub).summary()}
        self.assertTrue(summary[(2,)].exact)

    def test_bounded_source_degree_marks_blocks_truncated(self):
        lattice = make_lattice_model(LocalityMatrix.of(["g"], [[4]]), Cutoffs(1, 2))
        sub = generate_subalgebra(lattice, source_degree=1)
        self.assertLess(sub.block_dim((2,), 0), 5)
        self.assertFalse(sub.block_complete((2,), 0))
        self.assertFalse(forms_dimension_exact(sub, (2,)))
        self.assertTrue(sub.block_complete((1,), 0))
        missing = generate_subalgebra(lattice).block_basis((2,), 0)
        with self.assertRaises(CutoffExceeded) as ctx:
            for x in missing:
                sub.coordinates(x, (2,), 0)
        self.assertEqual(ctx.exception.required_degree, 2)

    def test_scan_excess_limits_enumerated_elements(self):
        sub = free_algebra(["g"], [[4]], 2, 2)
        self.assertEqual(len(sub.basis_elements()), 42)
        sub.scan_excess = 4
        self.assertEqual(len(sub.basis_elements()), 15)
        self.assertEqual(len(sub.block_keys()), 17)


class TestDegreeZeroQuotient(unittest.TestCase):

    def test_product_table_is_commutative(self):
        sub = free_algebra(["g"], [[4]], 2, 2)
        table = f0bar_product_table(quotient_model(sub))
        self.assertTrue(table["commutative"])
        self.assertTrue(table["entries"])
        self.assertEqual(table["dims"]["[0]"], 1)
        self.assertIn("unit_only", table)


if __name__ == '__main__':
    unittest.main()
