"""
The quotient A / rad A and the checks that hold once the radical vanishes.
File name and location: vertex-forms/src/forms/quotient.py
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, List, Optional, Tuple

from src.algebra.element import Block, Element, Weight
from src.algebra.model import GradedModel
from src.algebra.report import Report
from src.forms.invariant_form import InvariantForm
from src.forms.radical import RadicalReport, radical
from src.linalg import reduce_by_rows, row_space

logger = logging.getLogger("vertex_forms.quotient")


@dataclass
class QuotientBlock:
    """The radical of one block in reduced row form; the complement indexes the quotient basis."""
    dim: int
    rows: List[List[Fraction]] = field(default_factory=list)
    pivots: List[int] = field(default_factory=list)

    @property
    def complement(self) -> List[int]:
        pivots = set(self.pivots)
        return [j for j in range(self.dim) if j not in pivots]

    def reduce(self, coords: List[Fraction]) -> List[Fraction]:
        return reduce_by_rows(coords, self.rows, self.pivots)


class QuotientModel(GradedModel):
    """
    A / R for R the computed radical. Elements are represented in the inner
    model by their reduction onto the complement of R in each block.
    """

    name = "quotient"

    def __init__(self, inner: GradedModel, radical_report: RadicalReport):
        super().__init__(inner.cutoffs, inner.rank, inner.scan_excess)
        self.inner = inner
        self.radical_report = radical_report
        self._blocks: Dict[Block, QuotientBlock] = {}
        for entry in radical_report.entries:
            rows, pivots = row_space(entry.kernel, entry.dim)
            self._blocks[(tuple(entry.weight), entry.degree)] = QuotientBlock(entry.dim, rows, pivots)

    def _block(self, weight: Weight, degree: int) -> QuotientBlock:
        key = (tuple(weight), degree)
        if key not in self._blocks:
            self._blocks[key] = QuotientBlock(self.inner.block_dim(weight, degree))
        return self._blocks[key]

    @property
    def unit(self) -> Element:
        return self.reduce(self.inner.unit)

    def weights(self) -> List[Weight]:
        return self.inner.weights()

    def min_degree(self, weight: Weight) -> Optional[int]:
        return self.inner.min_degree(weight)

    def degree_zero_weights(self) -> Optional[List[Weight]]:
        return self.inner.degree_zero_weights()

    def weight_decompositions(self, weight: Weight) -> Tuple[List[Tuple[Weight, Weight]], bool]:
        return self.inner.weight_decompositions(weight)

    def block_complete(self, weight: Weight, degree: int) -> bool:
        return self.inner.block_complete(weight, degree)

    def block_basis(self, weight: Weight, degree: int) -> List[Element]:
        basis = self.inner.block_basis(weight, degree)
        return [basis[j] for j in self._block(weight, degree).complement]

    def coordinates(self, x: Element, weight: Weight, degree: int) -> List[Fraction]:
        blk = self._block(weight, degree)
        v = blk.reduce(self.inner.coordinates(x, weight, degree))
        return [v[j] for j in blk.complement]

    def reduce(self, x: Element) -> Element:
        pairs = []
        for (weight, degree), part in x.split_blocks().items():
            if not self.in_cutoffs(weight, degree):
                pairs.append((1, part))
                continue
            basis = self.inner.block_basis(weight, degree)
            v = self._block(weight, degree).reduce(self.inner.coordinates(part, weight, degree))
            pairs.extend(zip(v, basis))
        return Element.linear_combination(pairs)

    def product(self, a: Element, n: int, b: Element) -> Element:
        return self.reduce(self.inner.product(a, n, b))

    def D(self, a: Element) -> Element:
        return self.reduce(self.inner.D(a))

    def Dstar(self, a: Element) -> Element:
        return self.reduce(self.inner.Dstar(a))

    def generator_elements(self) -> List[Element]:
        return [y for y in (self.reduce(x) for x in self.inner.generator_elements()) if not y.is_zero()]

    def conformal_vector(self) -> Optional[Element]:
        omega = self.inner.conformal_vector()
        return None if omega is None else self.reduce(omega)

    def describe(self) -> dict:
        return dict(self.inner.describe(), quotient_by_radical=self.radical_report.status)


def quotient_model(model: GradedModel, radical_report: Optional[RadicalReport] = None) -> QuotientModel:
    """A / rad A, computing the radical first when it is not given."""
    radical_report = radical_report if radical_report is not None else radical(model)
    quotient = QuotientModel(model, radical_report)
    logger.info(f"Quotient of {model.name} by a radical with status {radical_report.status}")
    return quotient


def _degree_zero_bases(model: GradedModel) -> List[Tuple[Weight, List[Element]]]:
    out = []
    for weight in model.weights():
        low = model.min_degree(weight)
        if low is None or low > 0:
            continue
        basis = model.block_basis(weight, 0)
        if basis:
            out.append((weight, basis))
    return out


def verify_rad0(model: GradedModel, form: Optional[InvariantForm] = None,
                max_degree: Optional[int] = None) -> Report:
    """
    Properties of a vertex algebra whose form has zero radical: the radical
    is zero again, no negative degrees, A_0 is a commutative associative
    unital algebra acting only through mode -1 with DA_0 = 0, the canonical
    form is A_0-bilinear, and a(0)b is antisymmetric on A_1 with
    <a, b> = -a(1)b.

    Args:
        model: Usually a QuotientModel
        form: The canonical form of model, computed when omitted
        max_degree: Largest degree of the elements acted on
    """
    form = form or InvariantForm(model)
    top = max_degree if max_degree is not None else model.cutoffs.max_degree
    report = Report(suite="rad0")

    again = radical(model, form, max_degree=top)
    report.record(again.status == "zero", lambda: {"check": "radical_zero", "radical": again.to_json()})

    for weight, degree in model.block_keys():
        if degree < 0:
            report.record(False, lambda: {"check": "negative_degree", "weight": list(weight), "degree": degree})

    a0 = _degree_zero_bases(model)
    elements = [x for _, x in model.basis_elements(max_degree=top)]
    unit = model.unit

    for (wu, us), (wv, vs) in cartesian(a0, a0):
        if not model.weights_fit(wu, wv):
            continue
        for u in us:
            for v in vs:
                report.attempt("commutative", lambda: (
                    model.equal(model.product(u, -1, v), model.product(v, -1, u)),
                    lambda: {"u": repr(u), "v": repr(v)}))
                for ww, ws in a0:
                    if not model.weights_fit(wu, wv, ww):
                        continue
                    for w in ws:
                        report.attempt("associative", lambda: (
                            model.equal(model.product(model.product(u, -1, v), -1, w),
                                        model.product(u, -1, model.product(v, -1, w))),
                            lambda: {"u": repr(u), "v": repr(v), "w": repr(w)}))

    for _, us in a0:
        for u in us:
            report.attempt("unital", lambda: (
                model.equal(model.product(unit, -1, u), u) and model.equal(model.product(u, -1, unit), u),
                lambda: {"u": repr(u)}))
            if model.cutoffs.max_degree >= 1:
                report.attempt("D_kills_A0", lambda: (model.is_zero(model.D(u)), lambda: {"u": repr(u)}))
            for x in elements:
                for n in model.mode_range(u.block(), x.block()):
                    if n == -1:
                        continue
                    report.attempt("A0_modes", lambda: (
                        model.is_zero(model.product(u, n, x)),
                        lambda: {"u": repr(u), "n": n, "x": repr(x)}))
                for y in elements:
                    if y.block()[1] != x.block()[1] or not model.weights_fit(u.block()[0], x.block()[0], y.block()[0]):
                        continue

                    def bilinear():
                        lhs = form.pair(model.product(u, -1, x), y)
                        rhs = form.value(model.product(u, -1, form.as_element(form.pair(x, y))))
                        return lhs == rhs, lambda: {"u": repr(u), "x": repr(x), "y": repr(y),
                                                    "lhs": repr(lhs), "rhs": repr(rhs)}
                    report.attempt("A0_bilinear", bilinear)

    a1 = [x for _, x in model.basis_elements(max_degree=1, min_degree=1)]
    for a in a1:
        for b in a1:
            if not model.weights_fit(a.block()[0], b.block()[0]):
                continue
            report.attempt("bracket_antisymmetric", lambda: (
                model.is_zero(model.product(a, 0, b) + model.product(b, 0, a)),
                lambda: {"a": repr(a), "b": repr(b)}))

            def pairing():
                lhs = form.pair(a, b)
                rhs = form.value(model.product(a, 1, b) * -1)
                return lhs == rhs, lambda: {"a": repr(a), "b": repr(b), "lhs": repr(lhs), "rhs": repr(rhs)}
            report.attempt("A1_pairing", pairing)

    dims = {str(list(w)): len(basis) for w, basis in a0}
    report.details = {"a0_dims": dims, "a0_one_dimensional": sum(dims.values()) == 1}
    logger.info(f"rad0: checked={report.checked} skipped={report.skipped} passed={report.passed}")
    return report
