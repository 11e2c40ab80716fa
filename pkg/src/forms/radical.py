"""
Radical of the canonical form, block by block.
File name and location: vertex-forms/src/forms/radical.py
"""

import logging
from fractions import Fraction
from typing import Any, List, Optional

from pydantic import Field

from src.algebra.element import Element, Weight, add_weights, sub_weights, weight_len
from src.algebra.errors import CutoffExceeded
from src.algebra.model import GradedModel
from src.algebra.report import Rational, Report, ReportModel
from src.algebra.verification import verify_prop_sl2
from src.forms.invariant_form import InvariantForm
from src.linalg import Mat, format_scalar, kernel_basis

logger = logging.getLogger("vertex_forms.radical")

EXACT = "exact"
UPPER_BOUND = "upper_bound"
CUTOFF_LIMITED = "cutoff_limited"


class RadicalEntry(ReportModel):
    """Radical of one (weight, degree) block."""
    weight: List[int]
    degree: int
    dim: int
    radical_dim: int
    kernel: List[List[Rational]] = Field(default_factory=list, description="Kernel vectors in block coordinates")
    partners: List[List[int]] = Field(default_factory=list, description="Weights paired against")
    exactness: str = EXACT
    kernel_elements: List[Any] = Field(default_factory=list, exclude=True)

    def to_json(self) -> dict:
        return {
            "block": {"weight": self.weight, "degree": self.degree},
            "dim": self.dim,
            "radical_dim": self.radical_dim,
            "kernel": [[format_scalar(c) for c in v] for v in self.kernel],
            "partners": self.partners,
            "exactness": self.exactness,
        }


class RadicalReport(ReportModel):
    entries: List[RadicalEntry] = Field(default_factory=list)

    @property
    def status(self) -> str:
        """ "zero", "full" or "proper" over the scanned blocks."""
        if all(e.radical_dim == 0 for e in self.entries):
            return "zero"
        if all(e.radical_dim == e.dim for e in self.entries):
            return "full"
        return "proper"

    def entry(self, weight: Weight, degree: int) -> Optional[RadicalEntry]:
        for e in self.entries:
            if tuple(e.weight) == tuple(weight) and e.degree == degree:
                return e
        return None

    def to_json(self) -> dict:
        return {"status": self.status, "blocks": [e.to_json() for e in self.entries]}


def _support_covered(model: GradedModel, form: InvariantForm, weight: Weight) -> bool:
    """Whether every partner weight that can pair nontrivially with `weight` was scanned."""
    support = model.degree_zero_weights()
    if support is None:
        return False
    for target in support:
        partner = sub_weights(target, weight)
        if max(weight_len(partner), weight_len(target)) > model.cutoffs.max_weight_len:
            return False
        blk = form.qspace.blocks.get(tuple(target)) if form.canonical else None
        if blk is not None and not blk.exact:
            return False
    return True


def radical_block(model: GradedModel, weight: Weight, degree: int,
                  form: Optional[InvariantForm] = None) -> RadicalEntry:
    """
    Kernel of the stacked Gram rows of block (weight, degree) against every
    partner block (mu, degree) with weight + mu inside the cutoff.

    Raises:
        CutoffExceeded: If a pairing leaves the cutoffs
    """
    form = form or InvariantForm(model)
    basis = model.block_basis(weight, degree)
    rows: List[List[Fraction]] = []
    partners = []
    for mu in model.weights():
        target = add_weights(weight, mu)
        if weight_len(target) > model.cutoffs.max_weight_len:
            continue
        q_dim = form.q_dim(target)
        if not q_dim:
            continue
        right = model.block_basis(mu, degree) if model.min_degree(mu) is not None else []
        if not right:
            continue
        partners.append(list(mu))
        for b in right:
            values = [form.components(form.pair(a, b), target) for a in basis]
            for k in range(q_dim):
                rows.append([v[k] for v in values])
    kernel = kernel_basis(Mat.from_rows(rows, len(basis)))
    if not model.block_complete(weight, degree):
        exactness = CUTOFF_LIMITED
    elif not kernel or (_support_covered(model, form, weight)
                        and all(model.block_complete(mu, degree) for mu in partners)):
        exactness = EXACT
    else:
        exactness = UPPER_BOUND
    entry = RadicalEntry(
        weight=list(weight), degree=degree, dim=len(basis), radical_dim=len(kernel),
        kernel=kernel, partners=partners, exactness=exactness,
        kernel_elements=[Element.linear_combination(zip(v, basis)) for v in kernel],
    )
    if exactness == UPPER_BOUND:
        logger.warning(f"Radical of block {list(weight)} degree {degree} is an upper bound "
                       f"(partners scanned: {partners})")
    elif exactness == CUTOFF_LIMITED:
        logger.warning(f"Block {list(weight)} degree {degree} is only partly generated; its radical is cutoff-limited")
    return entry


def radical(model: GradedModel, form: Optional[InvariantForm] = None,
            max_degree: Optional[int] = None) -> RadicalReport:
    """Radical of every block inside the cutoffs, in block-key order."""
    form = form or InvariantForm(model)
    report = RadicalReport()
    for weight, degree in model.block_keys():
        if max_degree is not None and degree > max_degree:
            continue
        report.entries.append(radical_block(model, weight, degree, form))
    logger.info(f"Radical over {len(report.entries)} blocks: {report.status}")
    return report


def verify_lemma_i(model: GradedModel, form: Optional[InvariantForm] = None) -> Report:
    """
    a(i+j-1)b lies in I_0 for basis a of degree i <= 0 and b of degree
    j < 0, or b in D*A_1 when j = 0.

    Instances whose product lands in a weight where I_0 may be incomplete
    and does not already contain the product are skipped.
    """
    form = form or InvariantForm(model)
    report = Report(suite="lemma_i0")
    left = [(k, x) for k, x in model.basis_elements(max_degree=0)]
    right = [(k, x) for k, x in left if k[1] < 0]
    for weight in model.weights():
        if model.min_degree(weight) is not None and model.min_degree(weight) <= 1:
            for y in model.block_basis(weight, 1):
                image = model.Dstar(y)
                if not model.is_zero(image):
                    right.append(((weight, 0), image))
    for (wa, i), a in left:
        for (wb, j), b in right:
            target = add_weights(wa, wb)
            if weight_len(target) > model.cutoffs.max_weight_len:
                report.skip()
                continue
            try:
                value = form.qspace.project(model.product(a, i + j - 1, b))
            except CutoffExceeded:
                report.skip()
                continue
            blk = form.qspace.blocks.get(target)
            if not value.is_zero() and blk is not None and not blk.exact:
                report.skip()
                continue
            report.record(value.is_zero(), lambda: {
                "a": repr(a), "b": repr(b), "mode": i + j - 1, "projection": repr(value)})
    return report


def verify_negative_ideal(model: GradedModel) -> Report:
    """A_d = D*A_{d+1} for every d < 0 and every weight inside the cutoffs."""
    report = Report(suite="negative_ideal")
    for weight in model.weights():
        low = model.min_degree(weight)
        if low is None or low >= 0:
            continue
        report.merge(verify_prop_sl2(model, weight))
    report.details = {"weights": report.checked}
    return report
