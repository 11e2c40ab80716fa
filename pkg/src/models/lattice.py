"""
Lattice vertex algebra of the lattice Z[G] with scalar product <a,b> = -N(a,b).
File name and location: vertex-forms/src/models/lattice.py
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix

from src.algebra.element import BasisState, Element, Weight, add_weights
from src.algebra.errors import DegenerateLattice
from src.algebra.model import Cutoffs, StateModel
from src.algebra.report import Report
from src.models.combinatorics import colored_partitions, partitions_of

logger = logging.getLogger("vertex_forms.lattice")

Mode = Tuple[int, int]


def canonical_modes(modes: Iterable[Mode]) -> Tuple[Mode, ...]:
    """Sort (direction, n) factors by decreasing n, then increasing direction."""
    return tuple(sorted(modes, key=lambda t: (-t[1], t[0])))


@dataclass(frozen=True)
class LatticeState(BasisState):
    """h_{i1}(-n1)...h_{ik}(-nk)e^alpha, alpha stored as the weight."""

    @property
    def alpha(self) -> Weight:
        return self.weight

    def label(self) -> str:
        heis = "".join(f"h{i + 1}(-{n})" for i, n in self.modes)
        if any(self.alpha):
            return heis + "e^(" + ",".join(str(x) for x in self.alpha) + ")"
        return heis + "1"


@dataclass(frozen=True)
class LocalityMatrix:
    """
    Generator names with their pairwise localities.

    Attributes:
        generators: Generator names, in index order
        N: Symmetric integer matrix with even diagonal
    """
    generators: Tuple[str, ...]
    N: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, generators: Sequence[str], N: Sequence[Sequence[int]]) -> "LocalityMatrix":
        return cls(tuple(generators), tuple(tuple(int(x) for x in row) for row in N))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def gram(self) -> List[List[int]]:
        return [[-x for x in row] for row in self.N]

    def validate(self) -> None:
        """
        Raises:
            DegenerateLattice: If N is not square and symmetric with even
                diagonal, or if -N is singular
        """
        r = self.rank
        if len(self.N) != r or any(len(row) != r for row in self.N):
            raise DegenerateLattice(f"N must be a {r}x{r} matrix")
        for i in range(r):
            if self.N[i][i] % 2:
                raise DegenerateLattice(f"N({self.generators[i]},{self.generators[i]}) is odd")
            for j in range(i):
                if self.N[i][j] != self.N[j][i]:
                    raise DegenerateLattice("N is not symmetric")
        if r == 0 or Matrix(self.gram()).det() == 0:
            raise DegenerateLattice(f"The form -N = {self.gram()} is degenerate")

    def dmin(self, weight: Weight) -> int:
        """-1/2 sum_ij lambda_i lambda_j N_ij"""
        total = sum(weight[i] * weight[j] * self.N[i][j]
                    for i in range(self.rank) for j in range(self.rank))
        return -total // 2


class Cocycle:
    """
    Bimultiplicative sign with eps(g_i, g_j) = 1 for i <= j and
    (-1)^<g_i,g_j> for i > j.

    `flips` negates the sign on listed ordered pairs of lattice vectors; it
    exists to build deliberately broken models.
    """

    def __init__(self, gram: Sequence[Sequence[int]], flips: Iterable[Tuple[Weight, Weight]] = ()):
        self.gram = [list(row) for row in gram]
        self.flips = {(tuple(a), tuple(b)) for a, b in flips}

    def __call__(self, alpha: Weight, beta: Weight) -> int:
        r = len(self.gram)
        exponent = sum(alpha[i] * beta[j] * self.gram[i][j] for i in range(r) for j in range(i))
        sign = -1 if exponent % 2 else 1
        if (tuple(alpha), tuple(beta)) in self.flips:
            sign = -sign
        return sign


class LatticeModel(StateModel):
    """Truncated V_Lambda with the standard conformal vector and D* = omega(2)."""

    name = "lattice"

    def __init__(self, locality: LocalityMatrix, cutoffs: Cutoffs,
                 cocycle_flips: Iterable[Tuple[Weight, Weight]] = ()):
        locality.validate()
        super().__init__(cutoffs, rank=locality.rank)
        self.locality_matrix = locality
        self.gram = locality.gram()
        self.cocycle = Cocycle(self.gram, cocycle_flips)
        inverse = Matrix(self.gram).inv()
        self.gram_inverse = [[Fraction(int(inverse[i, j].p), int(inverse[i, j].q))
                              for j in range(self.rank)] for i in range(self.rank)]
        self.positive_definite = bool(Matrix(self.gram).is_positive_definite)
        self._series_memo: Dict[Tuple[Weight, int], Dict[Tuple[Mode, ...], Fraction]] = {}
        self._omega = self._standard_conformal_vector()
        logger.info(
            f"Lattice model on {list(locality.generators)} with Gram {self.gram}, "
            f"cutoffs {cutoffs}"
        )

    # -- lattice arithmetic ---------------------------------------------

    def inner(self, alpha: Weight, beta: Weight) -> int:
        r = self.rank
        return sum(alpha[i] * self.gram[i][j] * beta[j] for i in range(r) for j in range(r))

    def _with_generator(self, beta: Weight, j: int) -> int:
        return sum(beta[i] * self.gram[i][j] for i in range(self.rank))

    def cocycle_eval(self, alpha: Weight, beta: Weight) -> int:
        return self.cocycle(alpha, beta)

    def unit_vector(self, i: int) -> Weight:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    # -- states -----------------------------------------------------------

    def state(self, alpha: Weight, modes: Iterable[Mode] = ()) -> LatticeState:
        modes = canonical_modes(modes)
        degree = self.inner(alpha, alpha) // 2 + sum(n for _, n in modes)
        return LatticeState(tuple(alpha), degree, modes)

    def exponential(self, alpha: Weight) -> Element:
        return Element.basis(self.state(alpha))

    def heisenberg(self, i: int, n: int = 1) -> Element:
        """h_i(-n)1"""
        return Element.basis(self.state(self.zero_weight, [(i, n)]))

    @property
    def unit_state(self) -> BasisState:
        return self.state(self.zero_weight)

    @property
    def dstar_vector(self) -> Element:
        return self._omega

    def conformal_vector(self) -> Element:
        return self._omega

    def _standard_conformal_vector(self) -> Element:
        terms: Dict[BasisState, Fraction] = {}
        for i in range(self.rank):
            for j in range(self.rank):
                s = self.state(self.zero_weight, [(i, 1), (j, 1)])
                terms[s] = terms.get(s, Fraction(0)) + Fraction(1, 2) * self.gram_inverse[i][j]
        return Element(terms)

    def generator_elements(self) -> List[Element]:
        out = []
        for i in range(self.rank):
            for x in (self.exponential(self.unit_vector(i)), self.heisenberg(i)):
                (w, d), = x.blocks()
                if self.in_cutoffs(w, d):
                    out.append(x)
        return out

    def weights(self) -> List[Weight]:
        bound = self.cutoffs.max_weight_len
        out = []
        for alpha in product(range(-bound, bound + 1), repeat=self.rank):
            if sum(abs(x) for x in alpha) > bound:
                continue
            if self.inner(alpha, alpha) // 2 <= self.cutoffs.max_degree:
                out.append(tuple(alpha))
        return sorted(out)

    def min_degree(self, weight: Weight) -> Optional[int]:
        return self.inner(weight, weight) // 2

    def degree_zero_weights(self) -> Optional[List[Weight]]:
        return [self.zero_weight] if self.positive_definite else None

    def describe(self) -> dict:
        return dict(super().describe(), generators=list(self.locality_matrix.generators),
                    N=[list(row) for row in self.locality_matrix.N])

    def _block_states(self, weight: Weight, degree: int) -> List[BasisState]:
        excess = degree - self.min_degree(weight)
        if excess < 0:
            return []
        states = []
        for colored in colored_partitions(excess, self.rank):
            modes = [(i, n) for i, parts in enumerate(colored) for n in parts]
            states.append(self.state(weight, modes))
        return states

    # -- actions ----------------------------------------------------------

    def _primitive_product(self, v: BasisState, m: int, c: BasisState) -> Optional[Element]:
        if not v.modes:
            return self._exponential_action(v.weight, m, c)
        if len(v.modes) == 1 and v.modes[0][1] == 1 and not any(v.weight):
            return self._heisenberg_action(v.modes[0][0], m, c)
        return None

    def _split(self, v: BasisState) -> Tuple[BasisState, int, BasisState]:
        (i, n), rest = v.modes[0], v.modes[1:]
        return self.state(self.zero_weight, [(i, 1)]), n, self.state(v.weight, rest)

    def _heisenberg_action(self, i: int, m: int, c: BasisState) -> Element:
        if m < 0:
            return Element.basis(self.state(c.weight, c.modes + ((i, -m),)))
        if m == 0:
            return Element.basis(c, self._with_generator(c.weight, i))
        pairs = []
        for k, (j, n) in enumerate(c.modes):
            if n == m and self.gram[i][j]:
                rest = c.modes[:k] + c.modes[k + 1:]
                pairs.append((m * self.gram[i][j], Element.basis(self.state(c.weight, rest))))
        return Element.linear_combination(pairs)

    def _creation_series(self, beta: Weight, p: int) -> Dict[Tuple[Mode, ...], Fraction]:
        """Coefficient of z^p in exp(sum_n beta(-n) z^n / n), as mode monomials."""
        key = (beta, p)
        if key in self._series_memo:
            return self._series_memo[key]
        directions = [(i, b) for i, b in enumerate(beta) if b]
        out: Dict[Tuple[Mode, ...], Fraction] = {}
        for parts in partitions_of(p):
            base = Fraction(1)
            for n, mult in Counter(parts).items():
                base /= n ** mult * factorial(mult)
            for choice in product(directions, repeat=len(parts)):
                coeff = base
                modes = []
                for (i, b), n in zip(choice, parts):
                    coeff *= b
                    modes.append((i, n))
                modes = canonical_modes(modes)
                out[modes] = out.get(modes, Fraction(0)) + coeff
        out = {k: v for k, v in out.items() if v}
        self._series_memo[key] = out
        return out

    def _exponential_action(self, beta: Weight, m: int, c: BasisState) -> Element:
        """e^beta(m) on a state: annihilation part, z-shift, creation part and cocycle sign."""
        alpha = c.weight
        target = add_weights(alpha, beta)
        base = -m - 1 - self.inner(beta, alpha)
        factors = list(c.modes)
        scalars = [-self._with_generator(beta, j) for j, _ in factors]
        movable = [k for k, s in enumerate(scalars) if s]
        terms: Dict[BasisState, Fraction] = {}
        for choice in product((False, True), repeat=len(movable)):
            replaced = {k for k, flag in zip(movable, choice) if flag}
            coeff = Fraction(1)
            removed = 0
            kept = []
            for k, (j, n) in enumerate(factors):
                if k in replaced:
                    coeff *= scalars[k]
                    removed += n
                else:
                    kept.append((j, n))
            p = base + removed
            if p < 0:
                continue
            for modes, cf in self._creation_series(beta, p).items():
                state = self.state(target, kept + list(modes))
                terms[state] = terms.get(state, Fraction(0)) + coeff * cf
        return Element(terms) * self.cocycle(beta, alpha)

    def _d_state(self, v: BasisState) -> Element:
        pairs = []
        for k, (j, n) in enumerate(v.modes):
            raised = v.modes[:k] + ((j, n + 1),) + v.modes[k + 1:]
            pairs.append((n, Element.basis(self.state(v.weight, raised))))
        for i, a in enumerate(v.weight):
            if a:
                pairs.append((a, Element.basis(self.state(v.weight, v.modes + ((i, 1),)))))
        return Element.linear_combination(pairs)

    def vertex_coeff(self, state: BasisState, n: int, target: Element) -> Element:
        """state(n) acting on target."""
        return self.product(Element.basis(state), n, target)

    def exact_locality(self, a: Element, b: Element) -> int:
        """locality(a, b) scanned on uncut lattice products; it stops at the first nonzero mode."""
        if a.is_zero() or b.is_zero():
            return 0
        m = max(da + db - self.min_degree(add_weights(wa, wb))
                for wa, da in a.split_blocks() for wb, db in b.split_blocks()) - 1
        while self.raw_product(a, m, b).is_zero():
            m -= 1
        return m + 1


def make_lattice_model(locality: LocalityMatrix, cutoffs: Cutoffs,
                       cocycle_flips: Iterable[Tuple[Weight, Weight]] = ()) -> LatticeModel:
    """
    Raises:
        DegenerateLattice: If the locality matrix does not define an even nondegenerate lattice
    """
    return LatticeModel(locality, cutoffs, cocycle_flips)


def conformal_vector(model: LatticeModel) -> Element:
    return model.conformal_vector()


def verify_generator_localities(model: LatticeModel) -> Report:
    """locality(e^a, e^b) = N(a, b) for every ordered generator pair."""
    report = Report(suite="generator_localities")
    N = model.locality_matrix.N
    names = model.locality_matrix.generators
    for i in range(model.rank):
        for j in range(model.rank):
            a = model.exponential(model.unit_vector(i))
            b = model.exponential(model.unit_vector(j))
            found = model.exact_locality(a, b)
            report.record(found == N[i][j], lambda: {
                "check": "locality", "pair": [names[i], names[j]], "expected": N[i][j], "found": found},
                check="locality")
    return report
