import os
import sys
import unittest
import logging

# Add the src directory to the path so we can import our modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.algebra import Cutoffs
from src.forms import quotient_model, radical, radical_block, verify_lemma_i, verify_rad0
from src.forms.radical import CUTOFF_LIMITED, EXACT, UPPER_BOUND
from src.models import LocalityMatrix, generate_subalgebra, make_heisenberg, make_lattice_model

# Disable logging output during tests
logging.disable(logging.CRITICAL)


class TestHeisenbergRadical(unittest.TestCase):
    """
    Unit tests for the radical of the canonical form on the Heisenberg model.
    """

    def setUp(self):
        """Set up test fixtures before each test method."""
        self.k0 = make_heisenberg(0, Cutoffs(6))
        self.k1 = make_heisenberg(1, Cutoffs(6))

    def test_radical_is_zero_at_k0(self):
        report = radical(self.k0, max_degree=6)
        self.assertEqual(report.status, "zero")
        self.assertTrue(all(e.exactness == EXACT for e in report.entries))
        self.assertEqual(len(report.entries), 7)
        self.assertEqual(report.entry((0,), 6).dim, 11)

    def test_radical_is_everything_at_k1(self):
        report = radical(self.k1, max_degree=6)
        self.assertEqual(report.status, "full")
        self.assertTrue(all(e.exactness == EXACT for e in report.entries))

    def test_single_block(self):
        entry = radical_block(self.k0, (0,), 2)
        self.assertEqual((entry.dim, entry.radical_dim), (2, 0))
        self.assertEqual(entry.partners, [[0]])
        entry = radical_block(self.k1, (0,), 2)
        self.assertEqual(entry.radical_dim, 2)
        self.assertEqual(len(entry.kernel_elements), 2)

    def test_json(self):
        payload = radical(self.k1, max_degree=1).to_json()
        self.assertEqual(payload["status"], "full")
        block = payload["blocks"][1]
        self.assertEqual(block["block"], {"weight": [0], "degree": 1})
        self.assertEqual(block["kernel"], [["1"]])
        self.assertEqual(block["exactness"], "exact")

    def test_incomplete_block_is_cutoff_limited(self):
        self.k1.block_complete = lambda weight, degree: degree != 2
        self.assertEqual(radical_block(self.k1, (0,), 2).exactness, CUTOFF_LIMITED)
        self.assertEqual(radical_block(self.k1, (0,), 3).exactness, EXACT)

    def test_lemma_i(self):
        for model in (self.k0, self.k1):
            report = verify_lemma_i(model)
            self.assertTrue(report.passed, report.witness)


class TestLatticeRadical(unittest.TestCase):

    def test_positive_definite_lattice_has_zero_radical(self):
        model = make_lattice_model(LocalityMatrix.of(["g"], [[-2]]), Cutoffs(3, 2))
        self.assertEqual(radical(model, max_degree=2).status, "zero")

    def test_lemma_i_with_negative_degrees(self):
        model = make_lattice_model(LocalityMatrix.of(["g"], [[2]]), Cutoffs(2, 2))
        report = verify_lemma_i(model)
        self.assertTrue(report.passed, report.witness)
        self.assertGreater(report.checked, 0)


class TestQuotientByRadical(unittest.TestCase):
    """The quotient by the radical has a nondegenerate form."""

    def test_heisenberg_k0_is_its_own_quotient(self):
        model = make_heisenberg(0, Cutoffs(4))
        quotient = quotient_model(model)
        self.assertEqual([quotient.block_dim((0,), d) for d in range(5)], [1, 1, 2, 3, 5])
        report = verify_rad0(quotient, max_degree=2)
        self.assertTrue(report.passed, report.witness)
        self.assertTrue(report.details["a0_one_dimensional"])
        self.assertEqual(quotient.describe()["quotient_by_radical"], "zero")

    def test_heisenberg_k1_quotient_is_zero(self):
        model = make_heisenberg(1, Cutoffs(3))
        quotient = quotient_model(model)
        self.assertEqual([quotient.block_dim((0,), d) for d in range(4)], [0, 0, 0, 0])
        self.assertTrue(quotient.unit.is_zero())

    def test_free_algebra_quotient(self):
        sub = generate_subalgebra(make_lattice_model(LocalityMatrix.of(["g"], [[4]]), Cutoffs(2, 2)))
        report = radical(sub)
        self.assertNotEqual(report.status, "zero")
        self.assertTrue(any(e.exactness == UPPER_BOUND for e in report.entries))
        quotient = quotient_model(sub, report)
        self.assertEqual(quotient.block_dim((1,), -1), 0)
        rad0 = verify_rad0(quotient)
        self.assertTrue(rad0.passed, rad0.witness)
        self.assertEqual(rad0.details["a0_dims"]["[0]"], 1)


if __name__ == '__main__':
    unittest.main()
