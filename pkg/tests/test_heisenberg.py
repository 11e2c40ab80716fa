import os
import sys
import unittest
import logging
from fractions import Fraction

# Add the src directory to the path so we can import our modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.algebra import Cutoffs, CutoffExceeded, Element, central_charge
from src.models import (
    FockState,
    colored_partitions,
    fock_basis,
    make_heisenberg,
    omega,
    partition_count,
    partitions_of,
)
from src.models.combinatorics import compositions
from src.models.heisenberg import mode_on_state

# Disable logging output during tests
logging.disable(logging.CRITICAL)

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22]


class TestCombinatorics(unittest.TestCase):

    def test_partition_numbers(self):
        self.assertEqual([partition_count(n) for n in range(9)], PARTITION_NUMBERS)

    def test_partition_order(self):
        self.assertEqual(partitions_of(3), ((3,), (2, 1), (1, 1, 1)))
        self.assertEqual(partitions_of(4, 2), ((4,), (3, 1), (2, 2)))
        self.assertEqual(partitions_of(-1), ())

    def test_compositions(self):
        self.assertEqual(compositions(2, 2), [(2, 0), (1, 1), (0, 2)])
        self.assertEqual(len(colored_partitions(2, 2)), 5)


class TestFockSpace(unittest.TestCase):
    """
    Unit tests for the Heisenberg model.

    The generator a satisfies a(1)a = 1 and D* = omega_k(2).
    """

    def setUp(self):
        """Set up test fixtures before each test method."""
        self.model = make_heisenberg(0, Cutoffs(8))
        self.a = self.model.generator()
        self.unit = self.model.unit

    def test_block_dimensions(self):
        self.assertEqual([self.model.block_dim((0,), d) for d in range(9)], PARTITION_NUMBERS)
        self.assertEqual(self.model.block_dim((0,), -1), 0)
        self.assertEqual([s.partition for s in fock_basis(2)], [(2,), (1, 1)])

    def test_fock_basis_by_parts(self):
        self.assertEqual([s.partition for s in fock_basis(4, parts=2)], [(3, 1), (2, 2)])
        self.assertEqual([s.partition for s in fock_basis(5, parts=5)], [(1, 1, 1, 1, 1)])
        self.assertEqual(fock_basis(3, parts=0), [])
        self.assertEqual(fock_basis(-1), [])

    def test_mode_on_state(self):
        state = FockState.of((1, 1))
        self.assertEqual(mode_on_state(1, state), Element.basis(FockState.of((1,)), 2))
        self.assertEqual(mode_on_state(-2, state), Element.basis(FockState.of((2, 1, 1))))
        self.assertTrue(mode_on_state(0, state).is_zero())

    def test_act_mode(self):
        x = Element.basis(FockState.of((2, 1))) + Element.basis(FockState.of((1,)), 3)
        self.assertEqual(self.model.act_mode(2, x), Element.basis(FockState.of((1,)), 2))
        self.assertEqual(self.model.act_mode(1, x), Element.basis(FockState.of((2,))) + self.unit * 3)
        self.assertEqual(self.model.act_mode(-1, self.a), Element.basis(FockState.of((1, 1))))
        self.assertTrue(self.model.act_mode(0, x).is_zero())

    def test_act_mode_beyond_cutoff(self):
        small = make_heisenberg(0, Cutoffs(2))
        self.assertEqual(small.act_mode(-1, small.generator()), Element.basis(FockState.of((1, 1))))
        with self.assertRaises(CutoffExceeded) as ctx:
            small.act_mode(-3, small.generator())
        self.assertEqual(ctx.exception.required_degree, 4)

    def test_generator_products(self):
        self.assertEqual(self.model.product(self.a, 1, self.a), self.unit)
        self.assertTrue(self.model.product(self.a, 0, self.a).is_zero())
        self.assertTrue(self.model.product(self.a, 2, self.a).is_zero())
        self.assertEqual(self.model.product(self.a, -1, self.a),
                         Element.basis(FockState.of((1, 1))))

    def test_unit_products(self):
        x = Element.basis(FockState.of((2, 1)))
        self.assertEqual(self.model.product(self.unit, -1, x), x)
        self.assertTrue(self.model.product(self.unit, 0, x).is_zero())

    def test_translation(self):
        self.assertTrue(self.model.D(self.unit).is_zero())
        self.assertEqual(self.model.D(self.a), Element.basis(FockState.of((2,))))
        self.assertEqual(self.model.divided_D(2, self.a), Element.basis(FockState.of((3,))))

    def test_locality(self):
        self.assertEqual(self.model.locality(self.a, self.a), 2)
        self.assertEqual(self.model.locality(self.unit, self.a), 0)

    def test_cutoff_exceeded(self):
        small = make_heisenberg(0, Cutoffs(2))
        a = small.generator()
        with self.assertRaises(CutoffExceeded) as ctx:
            small.product(a, -3, a)
        self.assertEqual(ctx.exception.required_degree, 4)


class TestDstar(unittest.TestCase):

    def test_dstar_of_generator(self):
        for k, expected in ((0, 0), (1, -2), (Fraction(1, 2), -1)):
            model = make_heisenberg(k, Cutoffs(4))
            image = model.Dstar(model.generator())
            self.assertEqual(image, model.unit * expected)

    def test_omega(self):
        half = Fraction(1, 2)
        self.assertEqual(omega(0), Element.basis(FockState.of((1, 1)), half))
        self.assertEqual(omega(Fraction(1, 3)),
                         Element.basis(FockState.of((1, 1)), half) + Element.basis(FockState.of((2,)), Fraction(1, 3)))
        model = make_heisenberg(2, Cutoffs(3))
        a = model.generator()
        self.assertEqual(model.conformal_vector(), model.product(a, -1, a) * half + model.D(a) * 2)

    def test_dstar_kills_unit(self):
        model = make_heisenberg(1, Cutoffs(4))
        self.assertTrue(model.Dstar(model.unit).is_zero())

    def test_ord(self):
        model = make_heisenberg(0, Cutoffs(4))
        self.assertEqual(model.ord(model.unit), 0)
        self.assertEqual(model.ord(model.generator()), 0)
        model = make_heisenberg(1, Cutoffs(4))
        self.assertEqual(model.ord(model.generator()), 1)
        with self.assertRaises(ValueError):
            model.ord(Element.zero())

    def test_central_charge(self):
        for k in (0, 1, Fraction(1, 2), Fraction(-1, 3)):
            model = make_heisenberg(k, Cutoffs(4))
            expected = 1 - 12 * Fraction(k) ** 2
            self.assertEqual(central_charge(model, model.conformal_vector()), expected)


if __name__ == '__main__':
    unittest.main()
