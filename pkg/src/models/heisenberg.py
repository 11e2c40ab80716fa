"""
The Heisenberg vertex algebra on one generator a with a(1)a = 1.

States are partitions n_1 >= ... >= n_r standing for a(-n_1)...a(-n_r)1.
The parameter k picks the Virasoro vector omega_k = 1/2 a(-1)a + k Da and
D* = omega_k(2).
File name and location: vertex-forms/src/models/heisenberg.py
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from src.algebra.element import BasisState, Element, Weight
from src.algebra.model import Cutoffs, StateModel
from src.linalg import format_scalar
from src.models.combinatorics import Partition, partitions_of

logger = logging.getLogger("vertex_forms.heisenberg")

ZERO_WEIGHT: Weight = (0,)


@dataclass(frozen=True)
class FockState(BasisState):
    """a(-n_1)...a(-n_r)1 with the partition stored in `modes`."""

    @classmethod
    def of(cls, partition: Partition) -> "FockState":
        parts = tuple(sorted(partition, reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError(f"Creation modes must be positive, got {partition}")
        return cls(ZERO_WEIGHT, sum(parts), parts)

    @property
    def partition(self) -> Partition:
        return self.modes

    def label(self) -> str:
        if not self.modes:
            return "1"
        return "".join(f"a(-{n})" for n in self.modes) + "1"


VACUUM = FockState.of(())
GENERATOR = FockState.of((1,))


def fock_basis(d: int, parts: Optional[int] = None) -> List[FockState]:
    """
    Fock states of degree d in reverse-lexicographic order.

    Args:
        d: Degree
        parts: Keep only partitions with exactly this many parts

    Returns:
        The states, empty for d < 0
    """
    states = [FockState.of(p) for p in partitions_of(d)]
    if parts is not None:
        states = [s for s in states if len(s.partition) == parts]
    return states


def _insert(partition: Partition, n: int) -> Partition:
    return tuple(sorted(partition + (n,), reverse=True))


def mode_on_state(m: int, state: FockState) -> Element:
    """a(m) on a single Fock state."""
    if m < 0:
        return Element.basis(FockState.of(_insert(state.partition, -m)))
    if m == 0:
        return Element.zero()
    parts = state.partition
    mult = parts.count(m)
    if not mult:
        return Element.zero()
    index = parts.index(m)
    return Element.basis(FockState.of(parts[:index] + parts[index + 1:]), mult * m)


def omega(k) -> Element:
    """omega_k = 1/2 a(-1)a(-1)1 + k a(-2)1."""
    k = Fraction(k)
    return Element({FockState.of((1, 1)): Fraction(1, 2), FockState.of((2,)): k})


class HeisenbergModel(StateModel):
    """
    Truncated Heisenberg vertex algebra with D* = omega_k(2).

    All states carry weight (0,): products do not preserve the number of
    creation modes, so the only grading is by degree.
    """

    name = "heisenberg"

    def __init__(self, k, cutoffs: Cutoffs):
        super().__init__(cutoffs, rank=1)
        self.k = Fraction(k)
        self._omega = omega(self.k)
        logger.info(f"Heisenberg model k={self.k} up to degree {cutoffs.max_degree}")

    @property
    def unit_state(self) -> BasisState:
        return VACUUM

    @property
    def dstar_vector(self) -> Element:
        return self._omega

    def conformal_vector(self) -> Element:
        return self._omega

    def generator(self) -> Element:
        return Element.basis(GENERATOR)

    def generator_elements(self) -> List[Element]:
        return [self.generator()]

    def weights(self) -> List[Weight]:
        return [ZERO_WEIGHT]

    def min_degree(self, weight: Weight) -> Optional[int]:
        return 0 if weight == ZERO_WEIGHT else None

    def degree_zero_weights(self) -> Optional[List[Weight]]:
        return [ZERO_WEIGHT]

    def describe(self) -> dict:
        return dict(super().describe(), k=format_scalar(self.k))

    def _block_states(self, weight: Weight, degree: int) -> List[BasisState]:
        if weight != ZERO_WEIGHT:
            return []
        return fock_basis(degree)

    def _primitive_product(self, v: BasisState, m: int, c: BasisState) -> Optional[Element]:
        if v == VACUUM:
            return Element.basis(c) if m == -1 else Element.zero()
        if v == GENERATOR:
            return mode_on_state(m, c)
        return None

    def _split(self, v: BasisState) -> Tuple[BasisState, int, BasisState]:
        parts = v.modes
        return GENERATOR, parts[0], FockState.of(parts[1:])

    def _d_state(self, v: BasisState) -> Element:
        pairs = []
        parts = v.modes
        for i, n in enumerate(parts):
            raised = parts[:i] + (n + 1,) + parts[i + 1:]
            pairs.append((n, Element.basis(FockState.of(raised))))
        return Element.linear_combination(pairs)

    def act_mode(self, m: int, x: Element) -> Element:
        """
        a(m) on an element.

        Raises:
            CutoffExceeded: If a creation mode leaves the degree cutoff
        """
        result = Element.linear_combination(
            (coeff, mode_on_state(m, state)) for state, coeff in x.items()
        )
        return self.check_cutoffs(result)


def make_heisenberg(k, cutoffs: Cutoffs) -> HeisenbergModel:
    return HeisenbergModel(k, cutoffs)
