"""
Graded vertex algebra models.

`GradedModel` is the interface every backend implements (ambient Fock-type
models, generated subalgebras and quotients). `StateModel` adds the
recursive product engine for models whose basis states are generator-mode
words applied to the unit.
File name and location: vertex-forms/src/algebra/model.py
"""

import logging
import math
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.algebra.element import (
    BasisState,
    Block,
    Element,
    Weight,
    add_weights,
    sub_weights,
    weight_len,
)
from src.algebra.errors import CutoffExceeded, NotHomogeneous
from src.linalg import Mat

logger = logging.getLogger("vertex_forms.model")


@dataclass(frozen=True)
class Cutoffs:
    """Degree and weight-length bounds of a truncated model."""
    max_degree: int
    max_weight_len: int = 2


def generalized_binomial(top: int, k: int) -> int:
    """binom(top, k) for any integer top and k >= 0."""
    if k < 0:
        return 0
    if top >= 0:
        return math.comb(top, k)
    return (-1) ** k * math.comb(k - top - 1, k)


class GradedModel(ABC):
    """
    A vertex algebra truncated to finitely many (weight, degree) blocks.
    """

    name = "model"

    def __init__(self, cutoffs: Cutoffs, rank: int, scan_excess: Optional[int] = None):
        self.cutoffs = cutoffs
        self.rank = rank
        self.scan_excess = scan_excess

    # -- structure every backend provides ---------------------------------

    @property
    @abstractmethod
    def unit(self) -> Element:
        ...

    @abstractmethod
    def weights(self) -> List[Weight]:
        """Weights inside the weight-length cutoff that carry states."""

    @abstractmethod
    def min_degree(self, weight: Weight) -> Optional[int]:
        """Lowest degree a state of this weight can have, None if the weight carries no states."""

    @abstractmethod
    def block_basis(self, weight: Weight, degree: int) -> List[Element]:
        ...

    @abstractmethod
    def coordinates(self, x: Element, weight: Weight, degree: int) -> List[Fraction]:
        """Coordinates of x in block_basis(weight, degree)."""

    @abstractmethod
    def product(self, a: Element, n: int, b: Element) -> Element:
        ...

    @abstractmethod
    def D(self, a: Element) -> Element:
        ...

    @abstractmethod
    def Dstar(self, a: Element) -> Element:
        ...

    @abstractmethod
    def generator_elements(self) -> List[Element]:
        ...

    def degree_zero_weights(self) -> Optional[List[Weight]]:
        """Weights where A_0 can be nonzero, when that set is known to be finite."""
        return None

    def weight_decompositions(self, weight: Weight) -> Tuple[List[Tuple[Weight, Weight]], bool]:
        """
        Splittings weight = mu + nu with mu a possible degree-0 weight.

        Returns:
            Tuple of the (mu, nu) pairs inside the cutoffs and whether every
            splitting that can carry degree-0 states on the left is listed
        """
        support = self.degree_zero_weights()
        candidates = support if support is not None else self.weights()
        complete = support is not None
        pairs = []
        for mu in candidates:
            nu = sub_weights(weight, mu)
            if max(weight_len(mu), weight_len(nu)) > self.cutoffs.max_weight_len:
                complete = False
                continue
            if self.min_degree(nu) is None:
                continue
            pairs.append((mu, nu))
        return pairs, complete

    def reduce(self, x: Element) -> Element:
        """Canonical representative of x."""
        return x

    def conformal_vector(self) -> Optional[Element]:
        return None

    def describe(self) -> dict:
        return {"type": self.name, "max_degree": self.cutoffs.max_degree,
                "max_weight_len": self.cutoffs.max_weight_len}

    # -- derived operations ----------------------------------------------

    @property
    def zero_weight(self) -> Weight:
        return (0,) * self.rank

    def is_zero(self, x: Element) -> bool:
        return self.reduce(x).is_zero()

    def equal(self, x: Element, y: Element) -> bool:
        return self.is_zero(x - y)

    def in_cutoffs(self, weight: Weight, degree: int) -> bool:
        return degree <= self.cutoffs.max_degree and weight_len(weight) <= self.cutoffs.max_weight_len

    def weights_fit(self, *weights: Weight) -> bool:
        """Whether the sum of the weights lies inside the weight-length cutoff."""
        total = self.zero_weight
        for w in weights:
            total = add_weights(total, w)
        return weight_len(total) <= self.cutoffs.max_weight_len

    def check_cutoffs(self, x: Element) -> Element:
        """
        Return x unchanged when all of its blocks lie inside the cutoffs.

        Raises:
            CutoffExceeded: With the smallest cutoffs that would contain x
        """
        blocks = x.blocks()
        if all(self.in_cutoffs(w, d) for w, d in blocks):
            return x
        need_degree = max(d for _, d in blocks)
        need_len = max(weight_len(w) for w, _ in blocks)
        raise CutoffExceeded(
            f"{self.name}: result reaches degree {need_degree}, weight length {need_len} "
            f"beyond cutoffs {self.cutoffs}",
            required_degree=max(need_degree, self.cutoffs.max_degree),
            required_weight_len=max(need_len, self.cutoffs.max_weight_len),
        )

    def block_keys(self) -> List[Block]:
        """All nonempty blocks inside the cutoffs, sorted."""
        keys = []
        for weight in self.weights():
            low = self.min_degree(weight)
            if low is None:
                continue
            for degree in range(low, self.cutoffs.max_degree + 1):
                if self.block_basis(weight, degree):
                    keys.append((weight, degree))
        return sorted(keys)

    def block_dim(self, weight: Weight, degree: int) -> int:
        return len(self.block_basis(weight, degree))

    def block_complete(self, weight: Weight, degree: int) -> bool:
        """Whether block_basis(weight, degree) spans the whole block."""
        return True

    def scan_keys(self, max_degree: Optional[int] = None) -> List[Block]:
        """
        Blocks the verification scans enumerate: block_keys bounded in
        degree and, when scan_excess is set, in degree above the minimal
        degree of the weight.
        """
        keys = []
        for weight, degree in self.block_keys():
            if max_degree is not None and degree > max_degree:
                continue
            if self.scan_excess is not None and degree - self.min_degree(weight) > self.scan_excess:
                continue
            keys.append((weight, degree))
        return keys

    def basis_elements(self, max_degree: Optional[int] = None,
                       min_degree: Optional[int] = None) -> List[Tuple[Block, Element]]:
        """Every basis element of every scanned block, optionally bounded in degree."""
        out = []
        for weight, degree in self.scan_keys(max_degree):
            if min_degree is not None and degree < min_degree:
                continue
            for x in self.block_basis(weight, degree):
                out.append(((weight, degree), x))
        return out

    def delta(self, x: Element) -> Element:
        """The grading operator: multiply each term by its degree."""
        return Element({s: s.degree * c for s, c in x.items()})

    def divided_D(self, i: int, a: Element) -> Element:
        """D^i a / i!"""
        if i < 0:
            raise ValueError(f"Divided power index must be non-negative, got {i}")
        x = a
        for _ in range(i):
            x = self.D(x)
        return x * Fraction(1, math.factorial(i))

    def ord(self, a: Element) -> int:
        """
        Least k with (D*)^(k+1) a = 0.

        Raises:
            ValueError: If a is zero
        """
        if self.is_zero(a):
            raise ValueError("ord is undefined on the zero element")
        k = 0
        x = self.Dstar(a)
        while not self.is_zero(x):
            k += 1
            x = self.Dstar(x)
        return k

    def mode_range(self, left: Block, right: Block) -> range:
        """
        Modes n for which a(n)b, a in block left and b in block right, lands
        inside the cutoffs at or above the minimal degree of its weight.
        """
        (wl, dl), (wr, dr) = left, right
        weight = add_weights(wl, wr)
        if weight_len(weight) > self.cutoffs.max_weight_len:
            return range(0)
        low = self.min_degree(weight)
        if low is None or low > self.cutoffs.max_degree:
            return range(0)
        return range(dl + dr - 1 - self.cutoffs.max_degree, dl + dr - low)

    def nonnegative_modes(self, left: Block, right: Block) -> range:
        """
        Modes j >= 0 for which a(j)b can be nonzero.

        Raises:
            CutoffExceeded: If a(j)b would need a longer weight than the cutoff
        """
        (wl, dl), (wr, dr) = left, right
        weight = add_weights(wl, wr)
        if weight_len(weight) > self.cutoffs.max_weight_len:
            raise CutoffExceeded(f"a(j)b has weight {weight} beyond the cutoff",
                                 required_weight_len=weight_len(weight))
        low = self.min_degree(weight)
        if low is None:
            return range(0)
        return range(0, max(0, dl + dr - low))

    def locality(self, a: Element, b: Element) -> int:
        """
        Least n with a(m)b = 0 for every m >= n.

        Scans m downward from the largest mode the degrees allow and stops at
        the first nonzero product. Returns 0 when a or b is zero or no weight
        of a + b carries states, since then every product vanishes.

        Raises:
            CutoffExceeded: If the scan reaches a mode whose product could be
                nonzero but lands outside the cutoffs
        """
        pairs = []
        for wa, da in a.split_blocks():
            for wb, db in b.split_blocks():
                weight = add_weights(wa, wb)
                low = self.min_degree(weight)
                if low is not None:
                    pairs.append((weight, da + db, low))
        if not pairs:
            return 0
        m = max(total - low for _, total, low in pairs) - 1
        while True:
            for weight, total, low in pairs:
                degree = total - m - 1
                if degree >= low and not self.in_cutoffs(weight, degree):
                    raise CutoffExceeded(
                        f"{self.name}: locality scan reaches mode {m} with result in "
                        f"block ({list(weight)}, {degree}) beyond cutoffs {self.cutoffs}",
                        required_degree=max(degree, self.cutoffs.max_degree),
                        required_weight_len=max(weight_len(weight), self.cutoffs.max_weight_len),
                    )
            if not self.is_zero(self.product(a, m, b)):
                return m + 1
            m -= 1

    def random_element(self, rng: random.Random, max_degree: Optional[int] = None,
                       coeff_range: int = 3) -> Tuple[Block, Element]:
        """
        A homogeneous element of a random nonempty block with small integer coefficients.

        Args:
            rng: Seeded generator
            max_degree: Largest degree to draw from
            coeff_range: Coefficients are drawn from [-coeff_range, coeff_range]

        Returns:
            Tuple of the block and the element
        """
        keys = self.scan_keys(max_degree)
        if not keys:
            return (self.zero_weight, 0), Element.zero()
        key = rng.choice(keys)
        basis = self.block_basis(*key)
        while True:
            coeffs = [rng.randint(-coeff_range, coeff_range) for _ in basis]
            if any(coeffs):
                break
        return key, Element.linear_combination(zip(coeffs, basis))


class StateModel(GradedModel):
    """
    A model with an explicit basis of states, each a word of generator
    modes applied to the unit.

    Subclasses supply the action of primitive states (the unit and the
    generators) and a way to split any other state as x(-n)w with x a
    generator. Products of general states follow from the identity

        (x(-n)w)(m)c = sum_s binom(n+s-1, s) x(-n-s)(w(m+s)c)
                       - (-1)^n sum_s binom(n+s-1, s) w(m-n-s)(x(s)c)

    with both sums cut off once the result degree drops below the minimal
    degree of its weight.
    """

    def __init__(self, cutoffs: Cutoffs, rank: int):
        super().__init__(cutoffs, rank)
        self._memo: Dict[Tuple[BasisState, int, BasisState], Element] = {}
        self._d_memo: Dict[BasisState, Element] = {}
        self._dstar_memo: Dict[BasisState, Element] = {}
        self._block_memo: Dict[Block, List[BasisState]] = {}

    @property
    @abstractmethod
    def unit_state(self) -> BasisState:
        ...

    @property
    @abstractmethod
    def dstar_vector(self) -> Element:
        """The degree-2 vector whose mode 2 is D*."""

    @abstractmethod
    def _block_states(self, weight: Weight, degree: int) -> List[BasisState]:
        ...

    @abstractmethod
    def _primitive_product(self, v: BasisState, m: int, c: BasisState) -> Optional[Element]:
        """v(m)c when v is the unit or a generator, None otherwise."""

    @abstractmethod
    def _split(self, v: BasisState) -> Tuple[BasisState, int, BasisState]:
        """Write a non-primitive state as x(-n)w: returns (x, n, w) with n >= 1."""

    @abstractmethod
    def _d_state(self, v: BasisState) -> Element:
        ...

    @property
    def unit(self) -> Element:
        return Element.basis(self.unit_state)

    def block_states(self, weight: Weight, degree: int) -> List[BasisState]:
        key = (weight, degree)
        if key not in self._block_memo:
            self._block_memo[key] = self._block_states(weight, degree)
        return self._block_memo[key]

    def block_basis(self, weight: Weight, degree: int) -> List[Element]:
        return [Element.basis(s) for s in self.block_states(weight, degree)]

    def coordinates(self, x: Element, weight: Weight, degree: int) -> List[Fraction]:
        states = self.block_states(weight, degree)
        index = {s: i for i, s in enumerate(states)}
        coords = [Fraction(0)] * len(states)
        for state, coeff in x.items():
            if state not in index:
                raise NotHomogeneous(f"{state.label()} is not in block ({weight}, {degree})")
            coords[index[state]] = coeff
        return coords

    def _vanishes(self, v: BasisState, m: int, c: BasisState) -> bool:
        weight = add_weights(v.weight, c.weight)
        low = self.min_degree(weight)
        return low is None or v.degree + c.degree - m - 1 < low

    def _state_product(self, v: BasisState, m: int, c: BasisState) -> Element:
        key = (v, m, c)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if self._vanishes(v, m, c):
            result = Element.zero()
        else:
            result = self._primitive_product(v, m, c)
            if result is None:
                gen, n, rest = self._split(v)
                result = self._normal_ordered_product(gen, n, rest, m, c)
        self._memo[key] = result
        return result

    def _normal_ordered_product(self, gen: BasisState, n: int, rest: BasisState,
                                m: int, c: BasisState) -> Element:
        pairs = []
        s = 0
        while not self._vanishes(rest, m + s, c):
            coeff = math.comb(n + s - 1, s)
            for state, cf in self._state_product(rest, m + s, c).items():
                pairs.append((coeff * cf, self._state_product(gen, -n - s, state)))
            s += 1
        sign = 1 if n % 2 else -1
        s = 0
        while not self._vanishes(gen, s, c):
            coeff = sign * math.comb(n + s - 1, s)
            for state, cf in self._state_product(gen, s, c).items():
                pairs.append((coeff * cf, self._state_product(rest, m - n - s, state)))
            s += 1
        return Element.linear_combination(pairs)

    def raw_product(self, a: Element, n: int, b: Element) -> Element:
        """a(n)b without the cutoff check on the result."""
        pairs = []
        for va, ca in a.items():
            for vb, cb in b.items():
                pairs.append((ca * cb, self._state_product(va, n, vb)))
        return Element.linear_combination(pairs)

    def product(self, a: Element, n: int, b: Element) -> Element:
        return self.check_cutoffs(self.raw_product(a, n, b))

    def D(self, a: Element) -> Element:
        pairs = []
        for state, coeff in a.items():
            if state not in self._d_memo:
                self._d_memo[state] = self._d_state(state)
            pairs.append((coeff, self._d_memo[state]))
        return self.check_cutoffs(Element.linear_combination(pairs))

    def Dstar(self, a: Element) -> Element:
        pairs = []
        for state, coeff in a.items():
            if state not in self._dstar_memo:
                self._dstar_memo[state] = self.raw_product(
                    self.dstar_vector, 2, Element.basis(state))
            pairs.append((coeff, self._dstar_memo[state]))
        return Element.linear_combination(pairs)


def dstar_image(model: GradedModel, weight: Weight, degree: int) -> Mat:
    """Columns are the coordinates of D*x for x in block (weight, degree + 1)."""
    columns = [model.coordinates(model.reduce(model.Dstar(x)), weight, degree)
               for x in model.block_basis(weight, degree + 1)]
    rows = model.block_dim(weight, degree)
    return Mat.from_rows([[col[i] for col in columns] for i in range(rows)], len(columns))
