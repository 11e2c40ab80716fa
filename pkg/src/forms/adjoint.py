"""
The adjoint anti-involution on mode operators.

a(m)* = (-1)^d sum_{i=0}^{ord a} (D*^(i) a)(2d - m - 2 - i) for a of degree d,
D* is dual to D and the grading operator is self-dual. Words of modes are
finite sums of letter sequences acting on model elements; nothing is built
in a completed enveloping algebra.
File name and location: vertex-forms/src/forms/adjoint.py
"""

import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

from src.algebra.element import Element
from src.algebra.errors import CutoffExceeded
from src.algebra.model import GradedModel, dstar_image, generalized_binomial
from src.algebra.report import Report
from src.linalg import solve

logger = logging.getLogger("vertex_forms.adjoint")

OPERATORS = ("D", "Dstar", "delta")
DUAL_OPERATOR = {"D": "Dstar", "Dstar": "D", "delta": "delta"}


@dataclass(frozen=True)
class VertexLetter:
    """The mode operator element(mode)."""
    element: Element
    mode: int

    def apply(self, model: GradedModel, x: Element) -> Element:
        return model.product(self.element, self.mode, x)

    def __repr__(self) -> str:
        return f"({self.element!r})({self.mode})"


@dataclass(frozen=True)
class OperatorLetter:
    """One of D, Dstar, delta."""
    op: str

    def __post_init__(self):
        if self.op not in OPERATORS:
            raise ValueError(f"Unknown operator {self.op!r}")

    def apply(self, model: GradedModel, x: Element) -> Element:
        if self.op == "D":
            return model.D(x)
        if self.op == "Dstar":
            return model.Dstar(x)
        return model.delta(x)

    def __repr__(self) -> str:
        return self.op


Letter = Union[VertexLetter, OperatorLetter]


class ModeWord:
    """
    Finite sum of coefficient * letter sequence.

    Letters act right to left: the last letter of a sequence is applied first.
    """

    def __init__(self, terms: Optional[Sequence[Tuple[object, Sequence[Letter]]]] = None):
        self.terms: List[Tuple[Fraction, Tuple[Letter, ...]]] = [
            (Fraction(c), tuple(letters)) for c, letters in (terms or []) if Fraction(c)
        ]

    @classmethod
    def mode(cls, element: Element, m: int) -> "ModeWord":
        return cls([(1, (VertexLetter(element, m),))])

    @classmethod
    def operator(cls, op: str) -> "ModeWord":
        return cls([(1, (OperatorLetter(op),))])

    @classmethod
    def identity(cls) -> "ModeWord":
        return cls([(1, ())])

    def __add__(self, other: "ModeWord") -> "ModeWord":
        return ModeWord(self.terms + other.terms)

    def __sub__(self, other: "ModeWord") -> "ModeWord":
        return self + other * -1

    def __mul__(self, scalar) -> "ModeWord":
        return ModeWord([(c * Fraction(scalar), w) for c, w in self.terms])

    __rmul__ = __mul__

    def compose(self, other: "ModeWord") -> "ModeWord":
        """The word acting as self after other."""
        return ModeWord([(c1 * c2, w1 + w2) for c1, w1 in self.terms for c2, w2 in other.terms])

    def is_empty(self) -> bool:
        return not self.terms

    def apply(self, model: GradedModel, x: Element) -> Element:
        pairs = []
        for coeff, letters in self.terms:
            y = x
            for letter in reversed(letters):
                if y.is_zero():
                    break
                y = letter.apply(model, y)
            pairs.append((coeff, y))
        return model.reduce(Element.linear_combination(pairs))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*" + "".join(repr(l) for l in w) for c, w in self.terms)


def divided_dstar_powers(model: GradedModel, a: Element) -> List[Element]:
    """[a, D*a, D*^(2) a, ...] up to the last nonzero term."""
    out = []
    x = a
    i = 0
    while not model.is_zero(x):
        out.append(x * Fraction(1, math.factorial(i)))
        i += 1
        x = model.Dstar(x)
    return out


def adjoint_mode(model: GradedModel, a: Element, m: int) -> ModeWord:
    """
    a(m)* as a sum of single modes.

    Raises:
        NotHomogeneous: If a spans several blocks
    """
    if model.is_zero(a):
        return ModeWord()
    _, d = a.block()
    sign = -1 if d % 2 else 1
    terms = []
    for i, x in enumerate(divided_dstar_powers(model, a)):
        terms.append((sign, (VertexLetter(x, 2 * d - m - 2 - i),)))
    return ModeWord(terms)


def adjoint_letter(model: GradedModel, letter: Letter) -> ModeWord:
    if isinstance(letter, OperatorLetter):
        return ModeWord.operator(DUAL_OPERATOR[letter.op])
    return adjoint_mode(model, letter.element, letter.mode)


def adjoint_word(model: GradedModel, word: ModeWord) -> ModeWord:
    """Reverse each letter sequence and replace every letter by its adjoint."""
    out = ModeWord()
    for coeff, letters in word.terms:
        # (l1 ... lk)* = lk* ... l1*
        term = ModeWord.identity() * coeff
        for letter in letters:
            term = adjoint_letter(model, letter).compose(term)
        out = out + term
    return out


AdjointFn = Callable[[GradedModel, Element, int], ModeWord]


def _scan_elements(model: GradedModel, max_degree: Optional[int]):
    return [x for _, x in model.basis_elements(max_degree=max_degree)]


def _fit(model: GradedModel, *elements: Element) -> bool:
    return model.weights_fit(*(x.block()[0] for x in elements))


def _mode_candidates(model: GradedModel, a: Element, x: Element) -> range:
    """Modes m for which a(m)* x lands inside the cutoffs."""
    (wa, da), (wx, dx) = a.block(), x.block()
    # deg a(m)* x = dx + m + 1 - da; compare with mode_range for a(n)x, n = 2 da - m - 2
    r = model.mode_range((wa, da), (wx, dx))
    if not len(r):
        return range(0)
    low = 2 * da - 2 - (r.stop - 1)
    high = 2 * da - 2 - r.start
    return range(low, high + 1)


def verify_involution(model: GradedModel, max_degree: Optional[int] = None,
                      operand_degree: Optional[int] = None, samples: int = 0, seed: int = 0) -> Report:
    """
    a(m)** acts as a(m) on every basis element, for every basis a.

    Args:
        model: The model
        max_degree: Largest degree of the mode element a
        operand_degree: Largest degree of the element acted on
        samples: Extra random (a, x) pairs
        seed: Seed for the random pairs
    """
    report = Report(suite="adjoint_involution", seed=seed)
    top = operand_degree if operand_degree is not None else max_degree

    def check(a: Element, x: Element):
        for m in model.mode_range(a.block(), x.block()):
            try:
                direct = model.product(a, m, x)
                twice = adjoint_word(model, adjoint_mode(model, a, m)).apply(model, x)
            except CutoffExceeded:
                report.skip()
                continue
            report.record(model.equal(direct, twice), lambda: {
                "a": repr(a), "m": m, "x": repr(x),
                "direct": repr(direct), "double_adjoint": repr(twice)})

    operands = _scan_elements(model, top)
    for a in _scan_elements(model, max_degree):
        for x in operands:
            check(a, x)
    rng = random.Random(seed)
    for _ in range(samples):
        _, a = model.random_element(rng, max_degree)
        _, x = model.random_element(rng, top)
        if not (a.is_zero() or x.is_zero()):
            check(a, x)
    logger.info(f"adjoint involution: checked={report.checked} skipped={report.skipped} passed={report.passed}")
    return report


def verify_antihom(model: GradedModel, max_degree: Optional[int] = None,
                   samples: int = 0, seed: int = 0,
                   adjoint: AdjointFn = adjoint_mode,
                   operand_degree: Optional[int] = None) -> Report:
    """
    [b(n)*, a(m)*] = sum_j binom(m, j) ((a(j)b)(m+n-j))* and
    [a(m)*, D*] = -m a(m-1)* as operator equations on basis elements.

    Args:
        model: The model
        max_degree: Largest degree of a and b
        samples: Extra random (a, b, x) triples
        seed: Seed for the random triples
        adjoint: The adjoint under test
        operand_degree: Largest degree of x for generator pairs (a, b); for
            pairs of basis elements x runs up to degree 1
    """
    report = Report(suite="adjoint_antihom", seed=seed)
    top = max_degree if max_degree is not None else model.cutoffs.max_degree
    elements = _scan_elements(model, max_degree)
    operands = _scan_elements(model, operand_degree if operand_degree is not None else max_degree)
    low_operands = _scan_elements(model, min(top, 1))
    letters = model.generator_elements()

    def check_pair(a: Element, b: Element, x: Element):
        for m in _mode_candidates(model, a, x):
            try:
                y = adjoint(model, a, m).apply(model, x)
            except CutoffExceeded:
                report.skip(check="commutator")
                continue
            for n in _mode_candidates(model, b, x):
                try:
                    lhs = (adjoint(model, b, n).apply(model, y)
                           - adjoint(model, a, m).apply(model, adjoint(model, b, n).apply(model, x)))
                    pairs = []
                    for j in model.nonnegative_modes(a.block(), b.block()):
                        ajb = model.product(a, j, b)
                        if not model.is_zero(ajb):
                            pairs.append((generalized_binomial(m, j), adjoint(model, ajb, m + n - j).apply(model, x)))
                    rhs = Element.linear_combination(pairs)
                except CutoffExceeded:
                    report.skip(check="commutator")
                    continue
                report.record(model.equal(lhs, rhs), lambda: {
                    "identity": "commutator", "a": repr(a), "m": m, "b": repr(b), "n": n,
                    "x": repr(x), "lhs": repr(lhs), "rhs": repr(rhs)}, check="commutator")

    def check_dstar(a: Element, x: Element):
        for m in _mode_candidates(model, a, x):
            try:
                lhs = (adjoint(model, a, m).apply(model, model.Dstar(x))
                       - model.Dstar(adjoint(model, a, m).apply(model, x)))
                rhs = adjoint(model, a, m - 1).apply(model, x) * -m
            except CutoffExceeded:
                report.skip(check="dstar")
                continue
            report.record(model.equal(lhs, rhs), lambda: {
                "identity": "dstar", "a": repr(a), "m": m, "x": repr(x),
                "lhs": repr(lhs), "rhs": repr(rhs)}, check="dstar")

    for a in letters:
        for b in letters:
            for x in operands:
                if _fit(model, a, b, x):
                    check_pair(a, b, x)
    for a in elements:
        for x in operands:
            if _fit(model, a, x):
                check_dstar(a, x)
        for b in elements:
            if a in letters and b in letters:
                continue
            for x in low_operands:
                if _fit(model, a, b, x):
                    check_pair(a, b, x)

    rng = random.Random(seed)
    for _ in range(samples):
        _, a = model.random_element(rng, max_degree)
        _, b = model.random_element(rng, max_degree)
        _, x = model.random_element(rng, operand_degree if operand_degree is not None else max_degree)
        if a.is_zero() or b.is_zero() or x.is_zero():
            continue
        check_dstar(a, x)
        check_pair(a, b, x)
    logger.info(f"adjoint antihom: checked={report.checked} skipped={report.skipped} passed={report.passed}")
    return report


def in_dstar_image(model: GradedModel, y: Element) -> bool:
    """
    Whether y lies in D*A.

    Raises:
        CutoffExceeded: If a block of y sits at the degree cutoff
    """
    for (weight, degree), part in model.reduce(y).split_blocks().items():
        if not model.in_cutoffs(weight, degree + 1):
            raise CutoffExceeded(
                f"D* image of block ({weight}, {degree}) needs degree {degree + 1}",
                required_degree=degree + 1, required_weight_len=model.cutoffs.max_weight_len)
        image = dstar_image(model, weight, degree)
        if solve(image, model.coordinates(part, weight, degree)) is None:
            return False
    return True


def verify_lemma_dst(model: GradedModel, max_degree: Optional[int] = None) -> Report:
    """
    a(m)*b lies in D*A for basis a, b and every m >= 0 or m < -ord(b) - 1.

    Args:
        model: The model
        max_degree: Largest degree of a and b
    """
    report = Report(suite="lemma_dstar_image")
    elements = _scan_elements(model, max_degree)
    for b in elements:
        order = model.ord(b)
        for a in elements:
            for m in _mode_candidates(model, a, b):
                if -order - 1 <= m < 0:
                    continue
                try:
                    y = adjoint_mode(model, a, m).apply(model, b)
                    ok = y.is_zero() or in_dstar_image(model, y)
                except CutoffExceeded:
                    report.skip()
                    continue
                report.record(ok, lambda: {"a": repr(a), "m": m, "b": repr(b), "image": repr(y)})
    logger.info(f"lemma D*: checked={report.checked} skipped={report.skipped} passed={report.passed}")
    return report
