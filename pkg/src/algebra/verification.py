"""
Identity suites for truncated vertex algebras.

Every suite scans the basis of each block inside the cutoffs, optionally
adds seeded random elements, and returns a Report. Instances that would
leave the cutoffs are counted as skipped, never as failures.
File name and location: vertex-forms/src/algebra/verification.py
"""

import logging
import random
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.algebra.element import Element, Weight
from src.algebra.errors import CutoffExceeded
from src.algebra.model import GradedModel, dstar_image, generalized_binomial
from src.algebra.report import Report
from src.linalg import format_scalar, rank, solve

logger = logging.getLogger("vertex_forms.verification")


def _elements(model: GradedModel, max_degree: Optional[int]) -> List[Element]:
    return [x for _, x in model.basis_elements(max_degree=max_degree)]


def _random_tuples(model: GradedModel, samples: int, seed: int, max_degree: Optional[int],
                   arity: int) -> List[Tuple[Element, ...]]:
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        drawn = tuple(model.random_element(rng, max_degree)[1] for _ in range(arity))
        if not any(x.is_zero() for x in drawn):
            out.append(drawn)
    return out


def _result_block(a: Element, n: int, b: Element):
    (wa, da), (wb, db) = a.block(), b.block()
    return tuple(x + y for x, y in zip(wa, wb)), da + db - n - 1


def commutator_rhs(model: GradedModel, a: Element, m: int, b: Element, n: int, c: Element) -> Element:
    """sum_{j>=0} binom(m, j) (a(j)b)(m+n-j)c"""
    pairs = []
    for j in model.nonnegative_modes(a.block(), b.block()):
        ajb = model.product(a, j, b)
        if not model.is_zero(ajb):
            pairs.append((generalized_binomial(m, j), model.product(ajb, m + n - j, c)))
    return Element.linear_combination(pairs)


def _check_commutators(report: Report, model: GradedModel, a: Element, b: Element, c: Element):
    for n in model.mode_range(b.block(), c.block()):
        for m in model.mode_range(a.block(), _result_block(b, n, c)):
            def check(m=m, n=n):
                lhs = (model.product(a, m, model.product(b, n, c))
                       - model.product(b, n, model.product(a, m, c)))
                rhs = commutator_rhs(model, a, m, b, n, c)
                return model.equal(lhs, rhs), lambda: {
                    "a": repr(a), "m": m, "b": repr(b), "n": n, "c": repr(c),
                    "lhs": repr(lhs), "rhs": repr(rhs)}
            report.attempt("commutator", check)


def _check_derivation(report: Report, model: GradedModel, a: Element, b: Element):
    for n in model.mode_range(a.block(), b.block()):
        def translation(n=n):
            lhs = model.product(model.D(a), n, b)
            rhs = model.product(a, n - 1, b) * -n
            return model.equal(lhs, rhs), lambda: {"a": repr(a), "n": n, "b": repr(b),
                                                   "lhs": repr(lhs), "rhs": repr(rhs)}

        def leibniz(n=n):
            lhs = model.D(model.product(a, n, b))
            rhs = model.product(model.D(a), n, b) + model.product(a, n, model.D(b))
            return model.equal(lhs, rhs), lambda: {"a": repr(a), "n": n, "b": repr(b),
                                                   "lhs": repr(lhs), "rhs": repr(rhs)}
        report.attempt("derivation_translation", translation)
        report.attempt("derivation_leibniz", leibniz)


def _fit(model: GradedModel, *elements: Element) -> bool:
    return model.weights_fit(*(x.block()[0] for x in elements))


def verify_axioms(model: GradedModel, max_degree: Optional[int] = None, samples: int = 0,
                  seed: int = 0, operand_degree: Optional[int] = None) -> Report:
    """
    Vanishing of high modes, both unit identities, both derivation
    identities and the commutator formula.

    Pairs and triples whose weights add up beyond the weight cutoff are not
    enumerated.

    Args:
        model: The model
        max_degree: Largest degree of the elements scanned
        samples: Random (a, b, c) triples added to the scan
        seed: Seed for the random triples
        operand_degree: Largest degree of c when a and b run over all basis
            elements in the commutator check (default 1); for generator
            pairs c runs up to max_degree
    """
    report = Report(suite="axioms", seed=seed)
    elements = _elements(model, max_degree)
    top = max_degree if max_degree is not None else model.cutoffs.max_degree
    operands = _elements(model, min(top, operand_degree if operand_degree is not None else 1))
    unit = model.unit

    for a in elements:
        for b in elements:
            if not _fit(model, a, b):
                continue
            r = model.mode_range(a.block(), b.block())
            if len(r):
                n = r.stop
                report.attempt("vanishing", lambda: (
                    model.is_zero(model.product(a, n, b)), lambda: {"a": repr(a), "n": n, "b": repr(b)}))
            _check_derivation(report, model, a, b)

        for n in model.mode_range(unit.block(), a.block()):
            report.attempt("unit_left", lambda: (
                model.equal(model.product(unit, n, a), a if n == -1 else Element.zero()),
                lambda: {"a": repr(a), "n": n}))
        for n in model.mode_range(a.block(), unit.block()):
            def unit_right(n=n):
                lhs = model.product(a, n, unit)
                rhs = model.divided_D(-n - 1, a) if n <= -1 else Element.zero()
                return model.equal(lhs, rhs), lambda: {"a": repr(a), "n": n, "lhs": repr(lhs), "rhs": repr(rhs)}
            report.attempt("unit_right", unit_right)

    generators = model.generator_elements()
    for a in generators:
        for b in generators:
            for c in elements:
                if _fit(model, a, b, c):
                    _check_commutators(report, model, a, b, c)
    for a in elements:
        for b in elements:
            for c in operands:
                if _fit(model, a, b, c):
                    _check_commutators(report, model, a, b, c)

    for a, b, c in _random_tuples(model, samples, seed, max_degree, 3):
        _check_derivation(report, model, a, b)
        _check_commutators(report, model, a, b, c)
    logger.info(f"axioms: checked={report.checked} skipped={report.skipped} passed={report.passed}")
    return report


class _LocalityCache:
    """Memoized model.locality; a locality that leaves the cutoffs is raised again on every lookup."""

    def __init__(self, model: GradedModel):
        self.model = model
        self._memo: Dict[Tuple[Element, Element], object] = {}

    def __call__(self, a: Element, b: Element) -> int:
        key = (a, b)
        if key not in self._memo:
            try:
                self._memo[key] = self.model.locality(a, b)
            except CutoffExceeded as e:
                self._memo[key] = e
        hit = self._memo[key]
        if isinstance(hit, CutoffExceeded):
            raise hit
        return hit


def _check_assoc(report: Report, model: GradedModel, locality: _LocalityCache,
                 a: Element, b: Element, c: Element):
    for m in model.mode_range(a.block(), b.block()):
        for n in model.mode_range(_result_block(a, m, b), c.block()):
            def check(m=m, n=n):
                lhs = model.product(model.product(a, m, b), n, c)
                sign_m = -1 if m % 2 else 1
                pairs = []
                s = 0
                while n + s < locality(b, c) and (m < 0 or s <= m):
                    coeff = (-1) ** s * generalized_binomial(m, s)
                    pairs.append((coeff, model.product(a, m - s, model.product(b, n + s, c))))
                    s += 1
                s = 0
                while s < locality(a, c) and (m < 0 or s <= m):
                    coeff = -sign_m * (-1) ** s * generalized_binomial(m, s)
                    pairs.append((coeff, model.product(b, m + n - s, model.product(a, s, c))))
                    s += 1
                rhs = Element.linear_combination(pairs)
                return model.equal(lhs, rhs), lambda: {
                    "a": repr(a), "m": m, "b": repr(b), "n": n, "c": repr(c),
                    "lhs": repr(lhs), "rhs": repr(rhs)}
            report.attempt("associativity", check)


def verify_assoc(model: GradedModel, max_degree: Optional[int] = None, samples: int = 0,
                 seed: int = 0, operand_degree: Optional[int] = None,
                 triples: Optional[List[Tuple[Element, Element, Element]]] = None) -> Report:
    """
    (a(m)b)(n)c = sum_s (-1)^s binom(m, s) [a(m-s)b(n+s)c - (-1)^m b(m+n-s)a(s)c],
    both sums cut at the localities of (b, c) and (a, c).

    Args:
        model: The model
        max_degree: Largest degree of a and b
        samples: Random triples added to the scan
        seed: Seed for the random triples
        operand_degree: Largest degree of c
        triples: Check only these (a, b, c) instead of scanning the basis
    """
    report = Report(suite="associativity", seed=seed)
    locality = _LocalityCache(model)
    if triples is None:
        elements = _elements(model, max_degree)
        operands = _elements(model, operand_degree if operand_degree is not None else max_degree)
        triples = [(a, b, c) for a in elements for b in elements for c in operands if _fit(model, a, b, c)]
        triples.extend(_random_tuples(model, samples, seed, max_degree, 3))
    for a, b, c in triples:
        _check_assoc(report, model, locality, a, b, c)
    logger.info(f"associativity: checked={report.checked} skipped={report.skipped} passed={report.passed}")
    return report


def _check_quasisym(report: Report, model: GradedModel, locality: _LocalityCache, a: Element, b: Element):
    for n in model.mode_range(b.block(), a.block()):
        def check(n=n):
            lhs = model.product(b, n, a)
            pairs = []
            i = 0
            while n + i < locality(a, b):
                sign = -1 if (n + i + 1) % 2 else 1
                pairs.append((sign, model.divided_D(i, model.product(a, n + i, b))))
                i += 1
            rhs = Element.linear_combination(pairs)
            return model.equal(lhs, rhs), lambda: {"a": repr(a), "b": repr(b), "n": n,
                                                   "lhs": repr(lhs), "rhs": repr(rhs)}
        report.attempt("quasi_symmetry", check)


def verify_quasisym(model: GradedModel, max_degree: Optional[int] = None, samples: int = 0,
                    seed: int = 0) -> Report:
    """b(n)a = sum_{i>=0} (-1)^(n+i+1) D^(i)(a(n+i)b)"""
    report = Report(suite="quasi_symmetry", seed=seed)
    locality = _LocalityCache(model)
    elements = _elements(model, max_degree)
    for a in elements:
        for b in elements:
            if _fit(model, a, b):
                _check_quasisym(report, model, locality, a, b)
    for a, b in _random_tuples(model, samples, seed, max_degree, 2):
        _check_quasisym(report, model, locality, a, b)
    logger.info(f"quasi-symmetry: checked={report.checked} skipped={report.skipped} passed={report.passed}")
    return report


def verify_sl2(model: GradedModel, max_degree: Optional[int] = None) -> Report:
    """
    [D*, D] = 2 delta, [delta, D] = D and [delta, D*] = -D* on every basis
    element, D 1 = D* 1 = 0, and
    [D*, a(n)] = (2 deg a - n - 2) a(n+1) + (D*a)(n) for each generator a.
    """
    report = Report(suite="sl2")
    top = max_degree if max_degree is not None else model.cutoffs.max_degree
    elements = _elements(model, top)
    unit = model.unit
    report.attempt("unit", lambda: (
        model.is_zero(model.D(unit)) and model.is_zero(model.Dstar(unit)), lambda: {"unit": repr(unit)}))

    for x in elements:
        def bracket_d(x=x):
            lhs = model.Dstar(model.D(x)) - model.D(model.Dstar(x))
            rhs = model.delta(x) * 2
            return model.equal(lhs, rhs), lambda: {"x": repr(x), "lhs": repr(lhs), "rhs": repr(rhs)}

        def grading_d(x=x):
            lhs = model.delta(model.D(x)) - model.D(model.delta(x))
            return model.equal(lhs, model.D(x)), lambda: {"x": repr(x), "lhs": repr(lhs)}

        def grading_dstar(x=x):
            lhs = model.delta(model.Dstar(x)) - model.Dstar(model.delta(x))
            return model.equal(lhs, -model.Dstar(x)), lambda: {"x": repr(x), "lhs": repr(lhs)}
        report.attempt("dstar_d", bracket_d)
        report.attempt("delta_d", grading_d)
        report.attempt("delta_dstar", grading_dstar)

    for a in model.generator_elements():
        (_, d) = a.block()
        dstar_a = model.Dstar(a)
        for x in elements:
            for n in model.mode_range(a.block(), x.block()):
                def dstar_mode(n=n, x=x):
                    lhs = model.Dstar(model.product(a, n, x)) - model.product(a, n, model.Dstar(x))
                    rhs = model.product(a, n + 1, x) * (2 * d - n - 2)
                    if not model.is_zero(dstar_a):
                        rhs = rhs + model.product(dstar_a, n, x)
                    return model.equal(lhs, rhs), lambda: {"a": repr(a), "n": n, "x": repr(x),
                                                           "lhs": repr(lhs), "rhs": repr(rhs)}
                report.attempt("dstar_mode", dstar_mode)
    logger.info(f"sl2: checked={report.checked} skipped={report.skipped} passed={report.passed}")
    return report


def verify_adD(model: GradedModel, max_degree: Optional[int] = None) -> Report:
    """[D, a(m)] = -m a(m-1) on every basis element, for each generator a."""
    report = Report(suite="ad_D")
    elements = _elements(model, max_degree)
    for a in model.generator_elements():
        for x in elements:
            for m in model.mode_range(a.block(), x.block()):
                def check(m=m, x=x):
                    lhs = model.D(model.product(a, m, x)) - model.product(a, m, model.D(x))
                    rhs = model.product(a, m - 1, x) * -m
                    return model.equal(lhs, rhs), lambda: {"a": repr(a), "m": m, "x": repr(x),
                                                           "lhs": repr(lhs), "rhs": repr(rhs)}
                report.attempt("ad_D", check)
    return report


def verify_prop_sl2(model: GradedModel, weight: Weight, max_degree: Optional[int] = None) -> Report:
    """
    D*: A_{weight, d+1} -> A_{weight, d} is onto for every d < 0, and
    D A_{weight, -1} lies in D*A_{weight, 1}.

    Whether D* is also onto in positive degrees is recorded in the details
    without affecting the outcome.
    """
    weight = tuple(weight)
    report = Report(suite="prop_sl2")
    top = max_degree if max_degree is not None else model.cutoffs.max_degree
    low = model.min_degree(weight)
    if low is None:
        return report
    for d in range(low, 0):
        if d + 1 > top:
            report.skip()
            continue
        dim = model.block_dim(weight, d)
        r = rank(dstar_image(model, weight, d))
        report.record(r == dim, lambda: {"weight": list(weight), "degree": d, "dimension": dim, "rank": r})

    if low <= -1 and model.in_cutoffs(weight, 1):
        image = dstar_image(model, weight, 0)
        for x in model.block_basis(weight, -1):
            dx = model.D(x)
            coords = model.coordinates(dx, weight, 0)
            report.record(solve(image, coords) is not None,
                          lambda: {"check": "D_of_degree_minus_one", "x": repr(x), "Dx": repr(dx)})

    positive = {}
    for d in range(max(low, 1), top):
        dim = model.block_dim(weight, d)
        if dim:
            positive[str(d)] = rank(dstar_image(model, weight, d)) == dim
    report.details = {"weight": list(weight), "positive_degree_onto": positive}
    return report


def central_charge(model: GradedModel, omega: Element) -> Fraction:
    """
    c from omega(3)omega = (c/2) 1.

    Raises:
        ValueError: If omega(3)omega is not a multiple of the unit
    """
    zero = model.zero_weight
    y = model.product(omega, 3, omega)
    unit = model.coordinates(model.unit, zero, 0)
    coords = model.coordinates(y, zero, 0) if not y.is_zero() else [Fraction(0)] * len(unit)
    j = next(i for i, u in enumerate(unit) if u)
    c = 2 * coords[j] / unit[j]
    if any(y_i != c / 2 * u_i for y_i, u_i in zip(coords, unit)):
        raise ValueError(f"omega(3)omega = {y!r} is not a multiple of the unit")
    return c


def verify_virasoro(model: GradedModel, omega: Optional[Element] = None,
                    max_degree: Optional[int] = None) -> Tuple[Report, Optional[Fraction]]:
    """
    [omega(m), omega(n)] = (m - n) omega(m+n-1) + delta_{m+n,2} binom(m, 3) c/2,
    together with omega(0) = D and omega(1) = delta.

    Returns:
        Tuple of the report and the central charge, None when no consistent c exists
    """
    report = Report(suite="virasoro")
    omega = omega if omega is not None else model.conformal_vector()
    if omega is None or omega.is_zero():
        report.record(False, lambda: {"check": "conformal_vector", "omega": None})
        return report, None
    try:
        c = central_charge(model, omega)
    except (ValueError, StopIteration) as e:
        report.record(False, lambda: {"check": "central_charge", "error": str(e)})
        return report, None
    report.details["central_charge"] = format_scalar(c)

    for x in _elements(model, max_degree):
        report.attempt("omega0_is_D", lambda: (
            model.equal(model.product(omega, 0, x), model.D(x)), lambda: {"x": repr(x)}))
        report.attempt("omega1_is_delta", lambda: (
            model.equal(model.product(omega, 1, x), model.delta(x)), lambda: {"x": repr(x)}))
        for n in model.mode_range(omega.block(), x.block()):
            for m in model.mode_range(omega.block(), _result_block(omega, n, x)):
                def bracket(m=m, n=n, x=x):
                    lhs = (model.product(omega, m, model.product(omega, n, x))
                           - model.product(omega, n, model.product(omega, m, x)))
                    rhs = model.product(omega, m + n - 1, x) * (m - n)
                    if m + n == 2:
                        rhs = rhs + x * (Fraction(generalized_binomial(m, 3), 2) * c)
                    return model.equal(lhs, rhs), lambda: {"m": m, "n": n, "x": repr(x),
                                                           "lhs": repr(lhs), "rhs": repr(rhs)}
                report.attempt("bracket", bracket)
    logger.info(f"virasoro: c={format_scalar(c)} checked={report.checked} passed={report.passed}")
    return report, c
