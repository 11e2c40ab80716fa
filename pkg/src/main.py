"""
Main module for vertex-forms.
Command-line front end: builds a model from the run configuration, runs a
computation or a verification suite and prints a JSON (or CSV) report.
file location: vertex-forms/src/main.py
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

import pandas as pd

from .algebra.errors import ConfigError, CutoffExceeded, DegenerateLattice, InvalidFunctional
from .algebra.model import Cutoffs, GradedModel
from .algebra.report import Report, dimension_rows
from .algebra.verification import (
    verify_adD,
    verify_assoc,
    verify_axioms,
    verify_quasisym,
    verify_sl2,
    verify_virasoro,
)
from .config.run_config import SUITES, RunConfig, RunSettings, load_functional_file, setup_logging
from .forms.adjoint import verify_antihom, verify_involution, verify_lemma_dst
from .forms.invariant_form import (
    InvariantForm,
    ScalarFunctional,
    forms_dimension,
    forms_dimension_exact,
    verify_symmetry_and_bijection,
)
from .forms.quotient import quotient_model, verify_rad0
from .forms.radical import radical, verify_lemma_i, verify_negative_ideal
from .linalg import format_scalar, parse_scalar
from .models.factory import build_model
from .models.free_va import GeneratedSubspace, check_weight_zero, compare_dims, f0bar_product_table
from .models.lattice import LatticeModel, verify_generator_localities

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_CUTOFF = 3

logger = logging.getLogger("vertex_forms.main")


def parse_arguments(argv: Optional[List[str]] = None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        description="vertex-forms - exact invariant bilinear forms on graded vertex algebras"
    )

    # General arguments
    parser.add_argument(
        "--config",
        type=str,
        default="config.json",
        help="Path to configuration file"
    )
    parser.add_argument(
        "--log-level",
        type=str,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="Logging level (overrides config file)"
    )
    parser.add_argument("--model", type=str, default=None,
                        help="JSON file holding the model spec (overrides config file)")
    parser.add_argument("--max-degree", type=int, default=None, help="Degree cutoff")
    parser.add_argument("--max-weight-len", type=int, default=None, help="Weight-length cutoff")
    parser.add_argument("--functional", type=str, default=None,
                        help="\"canonical\" or a JSON file with a scalar functional")
    parser.add_argument("--format", type=str, choices=["json", "csv"], default=None,
                        help="Output format; csv applies to dimension tables only")
    parser.add_argument("--seed", type=int, default=None, help="Seed for random elements")
    parser.add_argument("--samples", type=int, default=None, help="Random samples per suite")

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    subparsers.add_parser("init", help="Initialize default configuration file")
    subparsers.add_parser("dims", help="Dimension of every block inside the cutoffs")

    gram_parser = subparsers.add_parser("gram", help="Gram block of the invariant form")
    gram_parser.add_argument("--weight", type=str, default=None,
                             help="Comma-separated weight, e.g. 1,0 (default: zero weight)")
    gram_parser.add_argument("--right-weight", type=str, default=None,
                             help="Weight of the right basis (default: same as --weight)")
    gram_parser.add_argument("--degree", type=int, required=True, help="Degree of both blocks")

    subparsers.add_parser("radical", help="Radical of the canonical form, block by block")
    subparsers.add_parser("forms", help="Dimension of the space of invariant forms per weight")
    subparsers.add_parser("central-charge", help="Check the Virasoro relations and report c")

    verify_parser = subparsers.add_parser("verify", help="Run verification suites")
    verify_parser.add_argument("--suite", type=str, choices=SUITES, default=None,
                               help="Suite to run (overrides config file)")

    return parser.parse_args(argv)


def apply_overrides(config: RunConfig, args) -> None:
    """Command-line flags win over the configuration file."""
    if args.model:
        config.load_model_file(args.model)
    if args.log_level:
        config.set("logging", "level", args.log_level)
    if args.max_degree is not None:
        config.set("model", "max_degree", args.max_degree)
    if args.max_weight_len is not None:
        config.set("model", "max_weight_len", args.max_weight_len)
    for flag, key in (("functional", "functional"), ("format", "format"),
                      ("seed", "seed"), ("samples", "samples")):
        value = getattr(args, flag)
        if value is not None:
            config.set("run", key, value)
    if getattr(args, "suite", None):
        config.set("run", "suite", args.suite)


def parse_weight(text: Optional[str], model: GradedModel) -> Tuple[int, ...]:
    """
    Raises:
        ConfigError: If the weight is malformed or has the wrong length
    """
    if text is None:
        return model.zero_weight
    try:
        weight = tuple(int(x) for x in text.split(","))
    except ValueError as e:
        raise ConfigError(f"Malformed weight {text!r}") from e
    if len(weight) != model.rank:
        raise ConfigError(f"Weight {text!r} needs {model.rank} entries")
    return weight


def make_form(model: GradedModel, settings: RunSettings) -> InvariantForm:
    """
    Raises:
        ConfigError: If the functional file cannot be read
        InvalidFunctional: If the functional does not vanish on D*A_1
    """
    if settings.run.functional == "canonical":
        return InvariantForm(model)
    spec = load_functional_file(settings.run.functional)
    values = {tuple(e.weight): [parse_scalar(v) for v in e.values] for e in spec.values}
    return InvariantForm(model, ScalarFunctional(model, values))


def run_dims(model: GradedModel, settings: RunSettings, args) -> Tuple[int, Any]:
    rows = [row.model_dump() for row in dimension_rows(model)]
    if settings.run.format == "csv":
        frame = pd.DataFrame(rows, columns=["weight", "degree", "dimension"])
        frame["weight"] = frame["weight"].map(lambda w: " ".join(str(x) for x in w))
        return EXIT_OK, frame
    return EXIT_OK, {"model": model.describe(), "dimensions": rows}


def run_gram(model: GradedModel, settings: RunSettings, args) -> Tuple[int, Any]:
    left = parse_weight(args.weight, model)
    right = parse_weight(args.right_weight, model) if args.right_weight else left
    gb = make_form(model, settings).gram_block(left, right, args.degree)
    return EXIT_OK, dict(gb.to_json(), model=model.describe())


def run_radical(model: GradedModel, settings: RunSettings, args) -> Tuple[int, Any]:
    report = radical(model, make_form(model, settings))
    return EXIT_OK, dict(report.to_json(), model=model.describe())


def run_forms(model: GradedModel, settings: RunSettings, args) -> Tuple[int, Any]:
    dims = forms_dimension(model)
    form = InvariantForm(model)
    return EXIT_OK, {
        "model": model.describe(),
        "forms": [{"weight": list(w), "dimension": d, "exact": forms_dimension_exact(model, w)}
                  for w, d in sorted(dims.items())],
        "quotient_space": [s.model_dump() for s in form.qspace.summary()],
    }


def run_central_charge(model: GradedModel, settings: RunSettings, args) -> Tuple[int, Any]:
    report, c = verify_virasoro(model)
    payload = {"model": model.describe(),
               "central_charge": None if c is None else format_scalar(c),
               "report": report.model_dump()}
    return (EXIT_OK if report.passed else EXIT_FAILED), payload


def suite_reports(model: GradedModel, settings: RunSettings, suite: str) -> List[Report]:
    """Run one named suite, or all of them, and return the sub-reports in a fixed order."""
    samples, seed = settings.run.samples, settings.run.seed
    reports: List[Report] = []
    if suite in ("axioms", "all"):
        reports.append(verify_axioms(model, samples=samples, seed=seed))
        reports.append(verify_assoc(model, samples=samples, seed=seed))
        reports.append(verify_quasisym(model, samples=samples, seed=seed))
        reports.append(verify_adD(model))
        if isinstance(model, LatticeModel):
            reports.append(verify_generator_localities(model))
    if suite in ("sl2", "all"):
        reports.append(verify_sl2(model))
        reports.append(verify_negative_ideal(model))
        if model.conformal_vector() is not None:
            reports.append(verify_virasoro(model)[0])
    if suite in ("adjoint", "all"):
        reports.append(verify_involution(model, samples=samples, seed=seed))
        reports.append(verify_antihom(model, samples=samples, seed=seed))
        reports.append(verify_lemma_dst(model))
    if suite in ("forms", "all"):
        form = make_form(model, settings)
        reports.append(verify_symmetry_and_bijection(model, samples=samples, seed=seed, form=form))
        reports.append(verify_lemma_i(model))
        if isinstance(model, GeneratedSubspace):
            reports.append(compare_dims(model))
            reports.append(check_weight_zero(model))
    if suite in ("rad0", "all"):
        quotient = quotient_model(model)
        rad0 = verify_rad0(quotient)
        if isinstance(model, GeneratedSubspace):
            rad0.details["f0bar"] = f0bar_product_table(quotient)
        reports.append(rad0)
    return reports


def run_verify(model: GradedModel, settings: RunSettings, args) -> Tuple[int, Any]:
    suite = settings.run.suite
    logger.info(f"Running suite {suite} on {model.name}")
    reports = suite_reports(model, settings, suite)
    combined = Report(suite=suite, seed=settings.run.seed)
    for report in reports:
        report.enforce_coverage(settings.run.max_skipped_share)
        combined.merge(report)
    logger.info(f"Suite {suite}: checked={combined.checked} skipped={combined.skipped} passed={combined.passed}")
    payload = {"model": model.describe(), "summary": combined.model_dump(),
               "reports": [r.model_dump() for r in reports]}
    return (EXIT_OK if combined.passed else EXIT_FAILED), payload


COMMANDS: Dict[str, Callable] = {
    "dims": run_dims,
    "gram": run_gram,
    "radical": run_radical,
    "forms": run_forms,
    "central-charge": run_central_charge,
    "verify": run_verify,
}


def emit(payload: Any) -> None:
    """Print a report on stdout."""
    if isinstance(payload, pd.DataFrame):
        sys.stdout.write(payload.to_csv(index=False))
    else:
        print(json.dumps(payload, indent=2, default=str))


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the application."""
    args = parse_arguments(argv)

    try:
        config = RunConfig(args.config)
    except ConfigError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG

    # Handle 'init' command first
    if args.command == "init":
        if config.create_default_config():
            print(f"Initialized default configuration at {args.config}")
        else:
            print(f"Configuration already exists at {args.config}")
        return EXIT_OK

    command = args.command or "dims"
    try:
        apply_overrides(config, args)
        settings = config.validate()
    except ConfigError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG

    setup_logging(config)

    try:
        cutoffs = Cutoffs(settings.cutoffs.max_degree, settings.cutoffs.max_weight_len)
        model = build_model(settings.model, cutoffs)
        logger.info(f"Running {command} on {model.describe()}")
        outcome, payload = COMMANDS[command](model, settings, args)
    except (ConfigError, DegenerateLattice, InvalidFunctional) as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG
    except CutoffExceeded as e:
        logger.error(f"Cutoff exceeded: {e}")
        emit({"error": "cutoff_exceeded", "message": str(e), **e.extension()})
        return EXIT_CUTOFF
    except KeyboardInterrupt:
        logger.info("Application terminated by user")
        return EXIT_FAILED
    except Exception as e:
        logger.error(f"Error running application: {e}", exc_info=True)
        return EXIT_FAILED

    emit(payload)
    return outcome


if __name__ == "__main__":
    sys.exit(main())
