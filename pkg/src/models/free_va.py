"""
The free vertex algebra on generators G with localities N, realized inside
the lattice vertex algebra as the span generated from the unit by the modes
of the exponentials e^g.
File name and location: vertex-forms/src/models/free_va.py
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.element import Block, Element, Weight, add_weights, sub_weights
from src.algebra.errors import CutoffExceeded
from src.algebra.model import GradedModel
from src.algebra.report import Report
from src.linalg import Mat, format_scalar, rank, reduce_by_rows, row_space
from src.models.combinatorics import bounded_multiset_count
from src.models.lattice import LatticeModel, LocalityMatrix

logger = logging.getLogger("vertex_forms.free_va")

MATCH = "match"
CUTOFF_LIMITED = "cutoff_limited"
MISMATCH = "mismatch"


def dmin(weight: Weight, N: Sequence[Sequence[int]]) -> int:
    """Minimal degree of weight: -1/2 sum_ij lambda_i lambda_j N_ij."""
    r = len(weight)
    return -sum(weight[i] * weight[j] * N[i][j] for i in range(r) for j in range(r)) // 2


def colored_partition_dim(weight: Weight, degree: int, N: Sequence[Sequence[int]]) -> int:
    """
    Dimension of F_{lambda,d}: 0 below dmin, otherwise the number of ways to
    spread d - dmin(lambda) over lambda_i slots of color i, slots of one
    color being unordered.
    """
    excess = degree - dmin(weight, N)
    if excess < 0 or any(x < 0 for x in weight):
        return 0
    return bounded_multiset_count(excess, list(weight))


@dataclass
class GeneratedBlock:
    """One (weight, degree) block of the generated span, in ambient coordinates."""
    weight: Weight
    degree: int
    rows: List[List[Fraction]] = field(default_factory=list)
    pivots: List[int] = field(default_factory=list)
    basis: List[Element] = field(default_factory=list)
    sources: int = 0
    truncated: bool = False

    @property
    def dim(self) -> int:
        return len(self.basis)


class GeneratedSubspace(GradedModel):
    """
    F as a model: blocks are spans inside the lattice model, generated on
    demand from F_{lambda - g} by the modes of e^g.

    A source of excess e = deg - dmin(weight) only reaches targets of excess
    at least e, so generating a block of excess e uses sources of excess at
    most e. Lattice products are exact at every degree, so sources above
    max_degree are generated as well. F_0 is the unit alone, so weight-zero
    sources stop at degree 0. When source_degree is set, sources above it
    are left out and the blocks that would need them are marked truncated.
    """

    name = "free"

    def __init__(self, lattice: LatticeModel, source_degree: Optional[int] = None):
        super().__init__(lattice.cutoffs, lattice.rank, lattice.scan_excess)
        self.lattice = lattice
        self.locality_matrix: LocalityMatrix = lattice.locality_matrix
        self.source_degree = source_degree
        self._blocks: Dict[Block, GeneratedBlock] = {}
        logger.info(f"Free vertex algebra on {list(self.locality_matrix.generators)} with N={self.N}")

    @property
    def N(self) -> List[List[int]]:
        return [list(row) for row in self.locality_matrix.N]

    @property
    def unit(self) -> Element:
        return self.lattice.unit

    def generator(self, i: int) -> Element:
        return self.lattice.exponential(self.lattice.unit_vector(i))

    def generator_elements(self) -> List[Element]:
        out = []
        for i in range(self.rank):
            g = self.lattice.unit_vector(i)
            if self.in_cutoffs(g, self.min_degree(g)):
                out.append(self.generator(i))
        return out

    def weights(self) -> List[Weight]:
        bound = self.cutoffs.max_weight_len
        out = []
        for weight in product(range(bound + 1), repeat=self.rank):
            if sum(weight) <= bound and self.min_degree(weight) <= self.cutoffs.max_degree:
                out.append(tuple(weight))
        return sorted(out)

    def min_degree(self, weight: Weight) -> Optional[int]:
        if any(x < 0 for x in weight):
            return None
        return dmin(weight, self.locality_matrix.N)

    def degree_zero_weights(self) -> Optional[List[Weight]]:
        N = self.locality_matrix.N
        r = self.rank
        if all(N[i][j] <= 0 for i in range(r) for j in range(r)) and all(N[i][i] < 0 for i in range(r)):
            return [self.zero_weight]
        return None

    def weight_decompositions(self, weight: Weight) -> Tuple[List[Tuple[Weight, Weight]], bool]:
        pairs = []
        for mu in product(*(range(x + 1) for x in weight)):
            pairs.append((tuple(mu), sub_weights(weight, mu)))
        return pairs, True

    def describe(self) -> dict:
        return dict(super().describe(), generators=list(self.locality_matrix.generators), N=self.N)

    # -- generation -------------------------------------------------------

    def block(self, weight: Weight, degree: int) -> GeneratedBlock:
        key = (tuple(weight), degree)
        if key not in self._blocks:
            self._blocks[key] = self._generate(*key)
        return self._blocks[key]

    def _generate(self, weight: Weight, degree: int) -> GeneratedBlock:
        result = GeneratedBlock(weight, degree)
        low = self.min_degree(weight)
        if low is None or degree < low:
            return result
        ambient_dim = len(self.lattice.block_states(weight, degree))
        if not any(weight):
            if degree == 0:
                result.rows, result.pivots = [[Fraction(1)]], [0]
                result.basis = [self.unit]
            return result
        excess = degree - low
        vectors = []
        for i in range(self.rank):
            if weight[i] < 1:
                continue
            g = self.lattice.unit_vector(i)
            source_weight = sub_weights(weight, g)
            source_low = self.min_degree(source_weight)
            top = 0 if not any(source_weight) else source_low + excess
            if self.source_degree is not None and top > self.source_degree:
                result.truncated = True
                top = self.source_degree
            g_element = self.generator(i)
            g_degree = self.min_degree(g)
            for source_degree in range(source_low, top + 1):
                source = self.block(source_weight, source_degree)
                result.truncated = result.truncated or source.truncated
                for x in source.basis:
                    n = g_degree + source_degree - 1 - degree
                    y = self.lattice.raw_product(g_element, n, x)
                    result.sources += 1
                    if not y.is_zero():
                        vectors.append(self.lattice.coordinates(y, weight, degree))
        result.rows, result.pivots = row_space(vectors, ambient_dim)
        states = self.lattice.block_states(weight, degree)
        result.basis = [
            Element({s: c for s, c in zip(states, row)}) for row in result.rows
        ]
        if result.truncated and result.dim == ambient_dim:
            result.truncated = False
        logger.debug(f"F block {weight} degree {degree}: dim {result.dim} from {result.sources} products")
        if result.truncated:
            logger.warning(f"F block {weight} degree {degree} is limited by source degree {self.source_degree}")
        return result

    def block_basis(self, weight: Weight, degree: int) -> List[Element]:
        return self.block(weight, degree).basis

    def block_complete(self, weight: Weight, degree: int) -> bool:
        return not self.block(weight, degree).truncated

    def coordinates(self, x: Element, weight: Weight, degree: int) -> List[Fraction]:
        """
        Raises:
            CutoffExceeded: If x is outside a block that is known to be incomplete
            ValueError: If x is outside a complete block
        """
        blk = self.block(weight, degree)
        if x.is_zero():
            return [Fraction(0)] * blk.dim
        ambient = self.lattice.coordinates(x, weight, degree)
        coords = [ambient[p] for p in blk.pivots]
        if any(reduce_by_rows(ambient, blk.rows, blk.pivots)):
            if blk.truncated:
                raise CutoffExceeded(
                    f"Element of block ({weight}, {degree}) lies outside the span generated "
                    f"from sources up to degree {self.source_degree}",
                    required_degree=max(self.cutoffs.max_degree, self.source_degree + 1),
                    required_weight_len=self.cutoffs.max_weight_len,
                )
            raise ValueError(f"Element does not lie in F block ({weight}, {degree})")
        return coords

    def product(self, a: Element, n: int, b: Element) -> Element:
        return self.check_cutoffs(self.lattice.raw_product(a, n, b))

    def D(self, a: Element) -> Element:
        return self.lattice.D(a)

    def Dstar(self, a: Element) -> Element:
        return self.lattice.Dstar(a)


def generate_subalgebra(lattice: LatticeModel, source_degree: Optional[int] = None) -> GeneratedSubspace:
    return GeneratedSubspace(lattice, source_degree)


def compare_dims(sub: GeneratedSubspace, max_excess: Optional[int] = None) -> Report:
    """
    Compare every generated block with the colored-partition count.

    Args:
        sub: The generated subalgebra
        max_excess: Only compare blocks with degree at most dmin(weight) + max_excess

    Returns:
        Report with one row per block; fails on any mismatch or cutoff-limited block
    """
    report = Report(suite="compare_dims")
    rows = []
    for weight in sub.weights():
        low = sub.min_degree(weight)
        top = sub.cutoffs.max_degree
        if max_excess is not None:
            top = min(top, low + max_excess)
        for degree in range(low - 1, top + 1):
            blk = sub.block(weight, degree)
            expected = colored_partition_dim(weight, degree, sub.N)
            if blk.dim == expected:
                status = MATCH
            elif blk.dim < expected and blk.truncated:
                status = CUTOFF_LIMITED
            else:
                status = MISMATCH
            rows.append({"weight": list(weight), "degree": degree, "generated": blk.dim,
                         "formula": expected, "status": status})
            report.record(status == MATCH, lambda: dict(rows[-1]))
    report.details["blocks"] = rows
    report.details["mismatches"] = sum(1 for r in rows if r["status"] == MISMATCH)
    report.details["cutoff_limited"] = sum(1 for r in rows if r["status"] == CUTOFF_LIMITED)
    logger.info(f"compare_dims: {len(rows)} blocks, passed={report.passed}")
    return report


def check_weight_zero(sub: GeneratedSubspace) -> Report:
    """F_{0,d} is spanned by the unit at d = 0 and vanishes otherwise; the unit is not in D*F_1."""
    report = Report(suite="weight_zero")
    zero = sub.zero_weight
    for degree in range(0, sub.cutoffs.max_degree + 1):
        dim = sub.block_dim(zero, degree)
        report.record(dim == (1 if degree == 0 else 0),
                      lambda: {"degree": degree, "dimension": dim})
    images = [sub.lattice.coordinates(sub.Dstar(x), zero, 0) for x in sub.block_basis(zero, 1)]
    unit_hit = any(v[0] for v in images)
    report.record(not unit_hit, lambda: {"unit_in_DstarF1": True})
    return report


def f0bar_product_table(quotient) -> dict:
    """
    Multiplication table of the degree-0 part of a quotient of F.

    Args:
        quotient: A quotient model of a GeneratedSubspace

    Returns:
        Dict with the products u(-1)v on complement bases, the commutativity
        flag, basis vectors with vanishing square and, per target weight,
        the relation count among products of two indecomposable-weight basis
        vectors (number of products minus the rank of their span), the
        dimension of each degree-0 block and whether the unit spans
        everything found inside the cutoffs
    """
    blocks = [(w, quotient.block_basis(w, 0)) for w in quotient.weights()
              if quotient.min_degree(w) is not None and quotient.block_basis(w, 0)]
    entries = []
    commutative = True
    by_target: Dict[Weight, List[List[Fraction]]] = {}
    nilpotent = []
    present = {w for w, _ in blocks if any(w)}
    indecomposable = {w for w in present
                      if not any(sub_weights(w, v) in present for v in present if v != w)}
    for (wl, left), (wr, right) in product(blocks, blocks):
        target = add_weights(wl, wr)
        if sum(target) > quotient.cutoffs.max_weight_len:
            continue
        for i, u in enumerate(left):
            for j, v in enumerate(right):
                uv = quotient.product(u, -1, v)
                vu = quotient.product(v, -1, u)
                coords = quotient.coordinates(uv, target, 0) if quotient.block_basis(target, 0) else []
                entries.append({"left": [list(wl), i], "right": [list(wr), j],
                                "product": [format_scalar(c) for c in coords]})
                if not quotient.equal(uv, vu):
                    commutative = False
                if (wl, i) <= (wr, j) and wl in indecomposable and wr in indecomposable:
                    by_target.setdefault(target, []).append(coords)
                if wl == wr and i == j and quotient.is_zero(uv):
                    nilpotent.append([list(wl), i])
    relations = []
    for target, vectors in sorted(by_target.items()):
        dim = len(quotient.block_basis(target, 0))
        r = rank(Mat.from_rows(vectors, dim))
        relations.append({"weight": list(target), "products": len(vectors), "rank": r,
                          "relations": len(vectors) - r})
    dims = {str(list(w)): len(basis) for w, basis in blocks}
    unit_only = not present
    if unit_only:
        logger.info(f"Degree-0 quotient is spanned by the unit up to weight length {quotient.cutoffs.max_weight_len}")
    return {"entries": entries, "commutative": commutative,
            "nilpotent_basis_vectors": nilpotent, "relations": relations,
            "dims": dims, "unit_only": unit_only}
