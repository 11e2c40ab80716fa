"""
Basis states and finite rational linear combinations of them.
File name and location: vertex-forms/src/algebra/element.py
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Set, Tuple

from src.algebra.errors import NotHomogeneous
from src.linalg import format_scalar

Weight = Tuple[int, ...]
Block = Tuple[Weight, int]


def add_weights(left: Weight, right: Weight) -> Weight:
    if len(left) != len(right):
        raise ValueError(f"Weights {left} and {right} have different ranks")
    return tuple(x + y for x, y in zip(left, right))


def sub_weights(left: Weight, right: Weight) -> Weight:
    return tuple(x - y for x, y in zip(left, right))


def weight_len(weight: Weight) -> int:
    return sum(abs(x) for x in weight)


@dataclass(frozen=True)
class BasisState:
    """
    A basis monomial of a graded model.

    Attributes:
        weight: Block weight
        degree: Block degree
        modes: Model-specific canonical payload
    """
    weight: Weight
    degree: int
    modes: tuple = ()

    @property
    def block(self) -> Block:
        return (self.weight, self.degree)

    def label(self) -> str:
        return f"{self.weight}:{self.degree}:{self.modes}"


class Element:
    """
    Finite linear combination of basis states with Fraction coefficients.

    Zero coefficients are never stored, so two elements are equal exactly
    when their term dictionaries are equal. Instances are treated as
    immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[BasisState, object]] = None):
        self._terms: Dict[BasisState, Fraction] = {}
        if terms:
            for state, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    self._terms[state] = coeff

    @classmethod
    def basis(cls, state: BasisState, coeff=1) -> "Element":
        return cls({state: coeff})

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def linear_combination(cls, pairs: Iterable[Tuple[object, "Element"]]) -> "Element":
        """Sum of coeff * element over (coeff, element) pairs."""
        acc: Dict[BasisState, Fraction] = {}
        for coeff, element in pairs:
            coeff = Fraction(coeff)
            if not coeff:
                continue
            for state, c in element._terms.items():
                acc[state] = acc.get(state, Fraction(0)) + coeff * c
        return cls(acc)

    def items(self) -> Iterator[Tuple[BasisState, Fraction]]:
        return iter(self._terms.items())

    def states(self) -> List[BasisState]:
        return list(self._terms)

    def coefficient(self, state: BasisState) -> Fraction:
        return self._terms.get(state, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "Element") -> "Element":
        return Element.linear_combination([(1, self), (1, other)])

    def __sub__(self, other: "Element") -> "Element":
        return Element.linear_combination([(1, self), (-1, other)])

    def __neg__(self) -> "Element":
        return Element({s: -c for s, c in self._terms.items()})

    def __mul__(self, scalar) -> "Element":
        scalar = Fraction(scalar)
        return Element({s: scalar * c for s, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def blocks(self) -> Set[Block]:
        return {s.block for s in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.blocks()) <= 1

    def block(self) -> Block:
        """
        The single block of a nonzero homogeneous element.

        Raises:
            NotHomogeneous: If the element is zero or spans several blocks
        """
        blocks = self.blocks()
        if len(blocks) != 1:
            raise NotHomogeneous(f"Element {self!r} spans blocks {sorted(blocks)}")
        return next(iter(blocks))

    def degree(self) -> int:
        return self.block()[1]

    def split_blocks(self) -> Dict[Block, "Element"]:
        parts: Dict[Block, Dict[BasisState, Fraction]] = {}
        for state, coeff in self._terms.items():
            parts.setdefault(state.block, {})[state] = coeff
        return {block: Element(terms) for block, terms in sorted(parts.items())}

    def to_json(self) -> List[dict]:
        """Terms as label/coefficient records in a stable order."""
        return [
            {"state": s.label(), "coeff": format_scalar(c)}
            for s, c in sorted(self._terms.items(), key=lambda t: t[0].label())
        ]

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for state, coeff in sorted(self._terms.items(), key=lambda t: t[0].label()):
            parts.append(f"{coeff}*{state.label()}")
        return " + ".join(parts)
