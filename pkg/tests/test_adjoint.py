import os
import sys
import unittest
import logging

# Add the src directory to the path so we can import our modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.algebra import Cutoffs
from src.forms import ModeWord, adjoint_mode, adjoint_word, verify_antihom, verify_involution, verify_lemma_dst
from src.models import LocalityMatrix, make_heisenberg, make_lattice_model

# Disable logging output during tests
logging.disable(logging.CRITICAL)


def flipped_adjoint(model, a, m):
    """The adjoint with its overall sign reversed."""
    return adjoint_mode(model, a, m) * -1


class TestAdjointModes(unittest.TestCase):
    """
    Unit tests for a(m)* = (-1)^deg a sum_i (D*^(i) a)(2 deg a - m - 2 - i).
    """

    def setUp(self):
        """Set up test fixtures before each test method."""
        self.k0 = make_heisenberg(0, Cutoffs(4))
        self.k1 = make_heisenberg(1, Cutoffs(4))

    def test_single_mode_when_dstar_vanishes(self):
        a = self.k0.generator()
        word = adjoint_mode(self.k0, a, 1)
        self.assertEqual(len(word.terms), 1)
        self.assertEqual(word.apply(self.k0, self.k0.unit), -a)

    def test_dstar_correction(self):
        a = self.k1.generator()
        word = adjoint_mode(self.k1, a, 0)
        self.assertEqual(len(word.terms), 2)
        self.assertEqual(word.apply(self.k1, self.k1.unit), self.k1.unit * 2)

    def test_adjoint_of_zero_is_empty(self):
        self.assertTrue(adjoint_mode(self.k0, self.k0.unit * 0, 3).is_empty())

    def test_operator_letters_swap(self):
        word = adjoint_word(self.k0, ModeWord.operator("D"))
        a = self.k0.generator()
        self.assertEqual(word.apply(self.k0, a), self.k0.Dstar(a))
        self.assertEqual(adjoint_word(self.k0, ModeWord.operator("delta")).apply(self.k0, a), a)

    def test_double_adjoint_of_a_mode(self):
        a = self.k1.generator()
        x = self.k1.product(a, -1, a)
        for m in (-2, -1, 0, 1):
            twice = adjoint_word(self.k1, adjoint_mode(self.k1, a, m))
            self.assertEqual(twice.apply(self.k1, x), self.k1.product(a, m, x))


class TestAdjointSuites(unittest.TestCase):
    """
    Heisenberg models up to degree 5 and the A1 lattice up to degree 3,
    every block basis plus 200 seeded random elements.
    """

    def setUp(self):
        self.models = [
            make_heisenberg(0, Cutoffs(5)),
            make_heisenberg(1, Cutoffs(5)),
            make_lattice_model(LocalityMatrix.of(["g"], [[-2]]), Cutoffs(3, 2)),
        ]

    def test_involution(self):
        for model in self.models:
            report = verify_involution(model, samples=200, seed=5)
            self.assertTrue(report.passed, report.witness)
            self.assertGreater(report.checked, 0)

    def test_antihomomorphism(self):
        for model in self.models:
            report = verify_antihom(model, samples=200, seed=5)
            self.assertTrue(report.passed, report.witness)
            self.assertGreater(report.coverage["commutator"]["checked"], 0)
            self.assertGreater(report.coverage["dstar"]["checked"], 0)

    def test_antihomomorphism_on_basis_pairs(self):
        model = make_heisenberg(1, Cutoffs(3))
        model.generator_elements = lambda: []
        report = verify_antihom(model, max_degree=2)
        self.assertTrue(report.passed, report.witness)
        self.assertGreater(report.coverage["commutator"]["checked"], 0)

    def test_flipped_sign_fails(self):
        model = self.models[0]
        report = verify_antihom(model, max_degree=2, adjoint=flipped_adjoint)
        self.assertFalse(report.passed)
        self.assertEqual(report.witness["identity"], "commutator")

    def test_images_land_in_dstar_image(self):
        for model in self.models:
            report = verify_lemma_dst(model, max_degree=2)
            self.assertTrue(report.passed, report.witness)


if __name__ == '__main__':
    unittest.main()
