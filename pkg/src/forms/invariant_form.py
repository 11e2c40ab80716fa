"""
Invariant bilinear forms.

Every invariant form is <a, b> = f(a(-1)* b) for a linear map f on A_0
vanishing on D*A_1. The canonical form takes f to be the projection of A_0
onto Q = A_0 / I_0 with I_0 = A_0(-1)D*A_1, in coordinates of a complement
chosen by row reduction.
File name and location: vertex-forms/src/forms/invariant_form.py
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.algebra.element import Element, Weight, add_weights, weight_len
from src.algebra.errors import CutoffExceeded, InvalidFunctional
from src.algebra.model import GradedModel, dstar_image
from src.algebra.report import Rational, Report, ReportModel
from src.forms.adjoint import adjoint_mode
from src.linalg import Mat, format_scalar, rank, reduce_by_rows, row_space, solve

logger = logging.getLogger("vertex_forms.forms")


class QValue:
    """A vector of Q = A_0 / I_0: per weight, coordinates in the complement basis."""

    __slots__ = ("parts",)

    def __init__(self, parts: Optional[Dict[Weight, Sequence]] = None):
        self.parts: Dict[Weight, Tuple[Fraction, ...]] = {}
        for weight, coords in (parts or {}).items():
            coords = tuple(Fraction(c) for c in coords)
            if any(coords):
                self.parts[tuple(weight)] = coords

    def is_zero(self) -> bool:
        return not self.parts

    def _combine(self, other: "QValue", sign: int) -> "QValue":
        out = dict(self.parts)
        for weight, coords in other.parts.items():
            mine = out.get(weight, (Fraction(0),) * len(coords))
            out[weight] = tuple(x + sign * y for x, y in zip(mine, coords))
        return QValue(out)

    def __add__(self, other: "QValue") -> "QValue":
        return self._combine(other, 1)

    def __sub__(self, other: "QValue") -> "QValue":
        return self._combine(other, -1)

    def __mul__(self, scalar) -> "QValue":
        scalar = Fraction(scalar)
        return QValue({w: tuple(scalar * c for c in v) for w, v in self.parts.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QValue):
            return NotImplemented
        return self.parts == other.parts

    def components(self, weight: Weight, q_dim: int) -> List[Fraction]:
        return list(self.parts.get(tuple(weight), (Fraction(0),) * q_dim))

    def __repr__(self) -> str:
        if not self.parts:
            return "0"
        return " + ".join(f"{list(w)}:{[format_scalar(c) for c in v]}" for w, v in sorted(self.parts.items()))


@dataclass
class QBlock:
    """I_0 and its complement inside A_{weight, 0}."""
    weight: Weight
    dim: int
    rows: List[List[Fraction]] = field(default_factory=list)
    pivots: List[int] = field(default_factory=list)
    exact: bool = True

    @property
    def complement(self) -> List[int]:
        pivots = set(self.pivots)
        return [j for j in range(self.dim) if j not in pivots]

    @property
    def q_dim(self) -> int:
        return self.dim - len(self.pivots)

    def project(self, coords: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        v = reduce_by_rows(coords, self.rows, self.pivots)
        return tuple(v[j] for j in self.complement)


class QSpaceSummary(ReportModel):
    weight: List[int]
    a0_dim: int
    i0_dim: int
    q_dim: int
    exact: bool


class QSpace:
    """Q = A_0 / I_0 per weight, with projection from A_0."""

    def __init__(self, model: GradedModel, blocks: Dict[Weight, QBlock]):
        self.model = model
        self.blocks = blocks

    def q_dim(self, weight: Weight) -> int:
        blk = self.blocks.get(tuple(weight))
        return blk.q_dim if blk else 0

    def project(self, x: Element) -> QValue:
        """
        pi(x) for x of degree 0.

        Raises:
            CutoffExceeded: If x has a part at a weight beyond the cutoff
            ValueError: If x has a part of nonzero degree
        """
        parts = {}
        for (weight, degree), part in self.model.reduce(x).split_blocks().items():
            if degree != 0:
                raise ValueError(f"Projection to Q needs degree 0, got degree {degree}")
            if weight not in self.blocks:
                if not self.model.in_cutoffs(weight, 0):
                    raise CutoffExceeded(f"Weight {weight} is beyond the cutoff",
                                         required_weight_len=weight_len(weight))
                continue
            blk = self.blocks[weight]
            parts[weight] = blk.project(self.model.coordinates(part, weight, 0))
        return QValue(parts)

    def as_element(self, q: QValue) -> Element:
        """The representative in A_0 spanned by complement basis vectors."""
        pairs = []
        for weight, coords in q.parts.items():
            basis = self.model.block_basis(weight, 0)
            for j, c in zip(self.blocks[weight].complement, coords):
                pairs.append((c, basis[j]))
        return Element.linear_combination(pairs)

    def summary(self) -> List[QSpaceSummary]:
        return [QSpaceSummary(weight=list(w), a0_dim=b.dim, i0_dim=len(b.pivots),
                              q_dim=b.q_dim, exact=b.exact)
                for w, b in sorted(self.blocks.items())]


def _degree_zero_weights_present(model: GradedModel) -> List[Weight]:
    out = []
    for weight in model.weights():
        low = model.min_degree(weight)
        if low is not None and low <= 0 and model.block_basis(weight, 0):
            out.append(weight)
    return out


def i0_basis(model: GradedModel) -> QSpace:
    """
    I_0 = A_0(-1)D*A_1 per weight inside the cutoffs, with complement and projection.

    Raises:
        CutoffExceeded: If a product u(-1)v leaves the cutoffs
    """
    images: Dict[Weight, List[Element]] = {}

    def dstar_images(nu: Weight) -> List[Element]:
        if nu not in images:
            low = model.min_degree(nu)
            if low is None or low > 1:
                images[nu] = []
            else:
                images[nu] = [y for y in (model.Dstar(x) for x in model.block_basis(nu, 1))
                              if not model.is_zero(y)]
        return images[nu]

    blocks = {}
    for weight in _degree_zero_weights_present(model):
        dim = model.block_dim(weight, 0)
        pairs, complete = model.weight_decompositions(weight)
        complete = complete and model.block_complete(weight, 0)
        vectors = []
        for mu, nu in pairs:
            low = model.min_degree(mu)
            if low is None or low > 0:
                continue
            complete = (complete and model.block_complete(mu, 0)
                        and (model.min_degree(nu) > 1 or model.block_complete(nu, 1)))
            left = model.block_basis(mu, 0)
            for v in dstar_images(nu):
                for u in left:
                    vectors.append(model.coordinates(model.product(u, -1, v), weight, 0))
        rows, pivots = row_space(vectors, dim)
        blocks[weight] = QBlock(weight, dim, rows, pivots, exact=complete)
        logger.debug(f"I_0 at weight {weight}: dim {len(pivots)} of {dim}, exact={complete}")
    return QSpace(model, blocks)


def forms_dimension(model: GradedModel) -> Dict[Weight, int]:
    """dim A_{weight,0} - rank(D*: A_{weight,1} -> A_{weight,0}) per weight."""
    out = {}
    for weight in _degree_zero_weights_present(model):
        out[weight] = model.block_dim(weight, 0) - rank(dstar_image(model, weight, 0))
    return out


def forms_dimension_exact(model: GradedModel, weight: Weight) -> bool:
    """Whether both blocks forms_dimension reads at this weight are complete."""
    return model.block_complete(weight, 0) and model.block_complete(weight, 1)


class ScalarFunctional:
    """
    A linear map f on A_0 vanishing on D*A_1, given by its values on the
    degree-0 basis of each weight.
    """

    def __init__(self, model: GradedModel, values: Dict[Weight, Sequence]):
        """
        Args:
            model: The model
            values: Per weight, one value per basis element of the (weight, 0) block

        Raises:
            InvalidFunctional: If the values have the wrong length or f(D*A_1) != 0
        """
        self.model = model
        self.values: Dict[Weight, List[Fraction]] = {}
        for weight, vals in values.items():
            weight = tuple(weight)
            dim = model.block_dim(weight, 0)
            vals = [Fraction(v) for v in vals]
            if len(vals) != dim:
                raise InvalidFunctional(
                    f"Functional at weight {list(weight)} has {len(vals)} values for a block of dimension {dim}")
            image = dstar_image(model, weight, 0)
            for j in range(image.cols):
                column = [image[i, j] for i in range(image.rows)]
                if sum((a * b for a, b in zip(vals, column)), Fraction(0)):
                    raise InvalidFunctional(f"Functional does not vanish on D*A_1 at weight {list(weight)}")
            self.values[weight] = vals

    @classmethod
    def normalized(cls, model: GradedModel) -> "ScalarFunctional":
        """
        The functional with f(1) = 1 supported on weight 0.

        Raises:
            InvalidFunctional: If the unit lies in D*A_1
        """
        zero = model.zero_weight
        unit = model.coordinates(model.unit, zero, 0)
        image = dstar_image(model, zero, 0)
        rows = [unit] + [[image[i, j] for i in range(image.rows)] for j in range(image.cols)]
        rhs = [Fraction(1)] + [Fraction(0)] * image.cols
        values = solve(Mat.from_rows(rows, len(unit)), rhs)
        if values is None:
            raise InvalidFunctional("The unit lies in D*A_1, no normalized functional exists")
        return cls(model, {zero: values})

    def __call__(self, x: Element) -> Fraction:
        total = Fraction(0)
        for (weight, degree), part in self.model.reduce(x).split_blocks().items():
            if degree != 0:
                raise ValueError(f"Functional needs degree 0, got degree {degree}")
            vals = self.values.get(weight)
            if vals is None:
                continue
            coords = self.model.coordinates(part, weight, 0)
            total += sum((a * b for a, b in zip(vals, coords)), Fraction(0))
        return total

    def to_json(self) -> List[dict]:
        return [{"weight": list(w), "values": [format_scalar(v) for v in vals]}
                for w, vals in sorted(self.values.items())]


FormValue = Union[QValue, Fraction]


class GramBlock(ReportModel):
    """Pairings of block_basis(left_weight, degree) with block_basis(right_weight, degree)."""
    left_weight: List[int]
    right_weight: List[int]
    degree: int
    q_dim: int
    canonical: bool
    values: List[List[List[Rational]]]

    def component(self, k: int = 0) -> List[List[Fraction]]:
        return [[entry[k] for entry in row] for row in self.values]

    def is_symmetric(self) -> bool:
        n = len(self.values)
        return all(self.values[i][j] == self.values[j][i] for i in range(n) for j in range(i))

    def to_json(self) -> dict:
        scalar_entries = not self.canonical or self.q_dim == 1
        gram = [[format_scalar(e[0]) if scalar_entries else [format_scalar(c) for c in e]
                 for e in row] for row in self.values]
        return {"block": {"weight": self.left_weight, "right_weight": self.right_weight,
                          "degree": self.degree},
                "q_dim": self.q_dim, "gram": gram}


class InvariantForm:
    """
    The invariant form attached to a functional, or the canonical Q-valued
    form when no functional is given.
    """

    def __init__(self, model: GradedModel, functional: Optional[ScalarFunctional] = None,
                 qspace: Optional[QSpace] = None):
        self.model = model
        self.functional = functional
        self.qspace = qspace if qspace is not None or functional is not None else i0_basis(model)

    @property
    def canonical(self) -> bool:
        return self.functional is None

    def zero(self) -> FormValue:
        return QValue() if self.canonical else Fraction(0)

    def value(self, y: Element) -> FormValue:
        """f(y), or pi(y) for the canonical form, on a degree-0 element."""
        if self.canonical:
            return self.qspace.project(y)
        return self.functional(y)

    def q_dim(self, weight: Weight) -> int:
        return self.qspace.q_dim(weight) if self.canonical else 1

    def components(self, value: FormValue, weight: Weight) -> List[Fraction]:
        if self.canonical:
            return value.components(weight, self.q_dim(weight))
        return [Fraction(value)]

    def pair(self, a: Element, b: Element) -> FormValue:
        """
        <a, b> = f(a(-1)* b), summed over homogeneous parts of equal degree.

        Raises:
            CutoffExceeded: If the adjoint action leaves the cutoffs
        """
        total = self.zero()
        if self.model.is_zero(a) or self.model.is_zero(b):
            return total
        b_parts = self.model.reduce(b).split_blocks()
        for (_, da), pa in self.model.reduce(a).split_blocks().items():
            for (_, db), pb in b_parts.items():
                if da != db:
                    continue
                y = adjoint_mode(self.model, pa, -1).apply(self.model, pb)
                total = total + self.value(y)
        return total

    def gram_block(self, left_weight: Weight, right_weight: Weight, degree: int) -> GramBlock:
        """
        Raises:
            CutoffExceeded: If either block lies outside the cutoffs
        """
        cutoffs = self.model.cutoffs
        for w in (left_weight, right_weight):
            if not self.model.in_cutoffs(w, degree):
                raise CutoffExceeded(
                    f"Block ({list(w)}, {degree}) is outside the cutoffs {cutoffs}",
                    required_degree=max(degree, cutoffs.max_degree),
                    required_weight_len=max(weight_len(w), cutoffs.max_weight_len))
        target = add_weights(left_weight, right_weight)
        q_dim = self.q_dim(target)
        left = self.model.block_basis(left_weight, degree)
        right = self.model.block_basis(right_weight, degree)
        values = [[self.components(self.pair(a, b), target) for b in right] for a in left]
        return GramBlock(left_weight=list(left_weight), right_weight=list(right_weight),
                         degree=degree, q_dim=q_dim, canonical=self.canonical, values=values)

    def as_element(self, q: QValue) -> Element:
        if not self.canonical:
            raise ValueError("Only the canonical form has Q-valued pairings")
        return self.qspace.as_element(q)


def pair(model: GradedModel, a: Element, b: Element,
         functional: Optional[ScalarFunctional] = None) -> FormValue:
    return InvariantForm(model, functional).pair(a, b)


def gram_block(model: GradedModel, left_weight: Weight, right_weight: Weight, degree: int,
               functional: Optional[ScalarFunctional] = None) -> GramBlock:
    return InvariantForm(model, functional).gram_block(left_weight, right_weight, degree)


def verify_symmetry_and_bijection(model: GradedModel, max_degree: Optional[int] = None,
                                  samples: int = 0, seed: int = 0,
                                  form: Optional[InvariantForm] = None) -> Report:
    """
    Diagonal Gram blocks are symmetric, the form is invariant under modes
    and D, and <1, x> recovers the functional on degree 0.

    Args:
        model: The model
        max_degree: Largest degree scanned
        samples: Extra random invariance triples
        seed: Seed for the random triples
        form: The form under test, canonical by default
    """
    form = form or InvariantForm(model)
    report = Report(suite="forms_symmetry", seed=seed)
    top = max_degree if max_degree is not None else model.cutoffs.max_degree
    keys = [k for k in model.block_keys() if k[1] <= top]

    for weight, degree in keys:
        try:
            gb = form.gram_block(weight, weight, degree)
        except CutoffExceeded:
            report.skip()
            continue
        report.record(gb.is_symmetric(), lambda: {
            "check": "symmetry", "weight": list(weight), "degree": degree, "gram": gb.to_json()["gram"]})

    elements = [x for _, x in model.basis_elements(max_degree=top)]

    def check_invariance(a: Element, x: Element, y: Element):
        (_, da), (_, dx), (_, dy) = a.block(), x.block(), y.block()
        m = da + dx - 1 - dy
        try:
            lhs = form.pair(model.product(a, m, x), y)
            rhs = form.pair(x, adjoint_mode(model, a, m).apply(model, y))
        except CutoffExceeded:
            report.skip()
            return
        report.record(lhs == rhs, lambda: {
            "check": "invariance", "a": repr(a), "m": m, "x": repr(x), "y": repr(y),
            "lhs": repr(lhs), "rhs": repr(rhs)})

    for a in model.generator_elements():
        for x in elements:
            for y in elements:
                if m_in_range(model, a, x, y):
                    check_invariance(a, x, y)

    for x in elements:
        for y in elements:
            if y.block()[1] != x.block()[1] + 1:
                continue
            try:
                lhs = form.pair(model.D(x), y)
                rhs = form.pair(x, model.Dstar(y))
            except CutoffExceeded:
                report.skip()
                continue
            report.record(lhs == rhs, lambda: {
                "check": "D-invariance", "x": repr(x), "y": repr(y), "lhs": repr(lhs), "rhs": repr(rhs)})

    rng = random.Random(seed)
    for _ in range(samples):
        _, a = model.random_element(rng, top)
        _, x = model.random_element(rng, top)
        _, y = model.random_element(rng, top)
        if a.is_zero() or x.is_zero() or y.is_zero() or not m_in_range(model, a, x, y):
            continue
        check_invariance(a, x, y)

    for weight in _degree_zero_weights_present(model):
        for x in model.block_basis(weight, 0):
            lhs = form.pair(model.unit, x)
            rhs = form.value(x)
            report.record(lhs == rhs, lambda: {
                "check": "round_trip", "x": repr(x), "pairing": repr(lhs), "value": repr(rhs)})
    logger.info(f"forms symmetry: checked={report.checked} skipped={report.skipped} passed={report.passed}")
    return report


def m_in_range(model: GradedModel, a: Element, x: Element, y: Element) -> bool:
    """Whether the mode m that makes a(m)x meet the degree of y lands inside the cutoffs."""
    (_, da), (_, dx), (_, dy) = a.block(), x.block(), y.block()
    return (da + dx - 1 - dy) in model.mode_range(a.block(), x.block())
