"""
Pydantic report models shared by every verification suite and the cli.
File name and location: vertex-forms/src/algebra/report.py
"""

from fractions import Fraction
from typing import Annotated, Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer

from src.algebra.errors import CutoffExceeded
from src.linalg import format_scalar

Rational = Annotated[Fraction, PlainSerializer(format_scalar, return_type=str)]


class ReportModel(BaseModel):
    """Base for report payloads; rationals serialize as "p/q" strings."""
    model_config = ConfigDict(arbitrary_types_allowed=True)


class Report(ReportModel):
    """Outcome of one verification suite."""
    suite: str = Field(..., description="Suite name")
    passed: bool = Field(True, description="True when no check failed")
    checked: int = Field(0, description="Number of identity instances checked")
    skipped: int = Field(0, description="Instances skipped because they left the cutoffs")
    seed: Optional[int] = Field(None, description="Seed used for random elements")
    witness: Optional[Dict[str, Any]] = Field(None, description="First failing instance")
    coverage: Dict[str, Dict[str, int]] = Field(
        default_factory=dict, description="Checked and skipped counts per check family")
    details: Dict[str, Any] = Field(default_factory=dict, description="Suite-specific data")

    def _count(self, check: Optional[str], key: str, count: int = 1) -> None:
        family = self.coverage.setdefault(check or self.suite, {"checked": 0, "skipped": 0})
        family[key] += count

    def _fail(self, witness: Optional[Dict[str, Any]]) -> None:
        if self.passed and witness is not None:
            self.witness = witness
        self.passed = False

    def record(self, ok: bool, witness_factory=None, check: Optional[str] = None) -> bool:
        """
        Count one check and keep the first failure as witness.

        Args:
            ok: Outcome of the check
            witness_factory: Callable building the witness dict, called only on the first failure
            check: Family the check belongs to, the suite name by default

        Returns:
            The outcome, for chaining
        """
        self.checked += 1
        self._count(check, "checked")
        if not ok:
            self._fail(witness_factory() if self.passed and witness_factory is not None else None)
        return ok

    def skip(self, count: int = 1, check: Optional[str] = None) -> None:
        self.skipped += count
        self._count(check, "skipped", count)

    def attempt(self, check: str, fn) -> Optional[bool]:
        """
        Run one check, counting it as skipped when it leaves the cutoffs.

        Args:
            check: Family name, stored in the witness
            fn: Callable returning (ok, witness_factory)

        Returns:
            The outcome, or None when skipped
        """
        try:
            ok, witness = fn()
        except CutoffExceeded:
            self.skip(check=check)
            return None
        return self.record(ok, lambda: dict(witness(), check=check), check=check)

    def merge(self, other: "Report") -> None:
        """Fold a sub-suite into this report."""
        self.checked += other.checked
        self.skipped += other.skipped
        for family, counts in other.coverage.items():
            for key, count in counts.items():
                self._count(family, key, count)
        if not other.passed:
            self._fail(dict(other.witness or {}, suite=other.suite))
        self.details[other.suite] = {
            "passed": other.passed,
            "checked": other.checked,
            "skipped": other.skipped,
        }

    def enforce_coverage(self, max_skipped_share: float = 1.0) -> bool:
        """
        Fail the report when a check family was skipped every time it came
        up, or when its skipped share exceeds max_skipped_share.

        Returns:
            Whether the coverage is acceptable
        """
        for family, counts in sorted(self.coverage.items()):
            checked, skipped = counts["checked"], counts["skipped"]
            if not skipped:
                continue
            share = skipped / (checked + skipped)
            if checked == 0 or share > max_skipped_share:
                self._fail({"check": "coverage", "family": family, "checked": checked,
                            "skipped": skipped, "max_skipped_share": max_skipped_share})
                return False
        return True


class DimensionRow(ReportModel):
    weight: List[int]
    degree: int
    dimension: int
    complete: bool = True


def dimension_rows(model) -> List[DimensionRow]:
    """Dimension of every block inside the model's cutoffs, in block-key order."""
    return [
        DimensionRow(weight=list(weight), degree=degree, dimension=len(model.block_basis(weight, degree)),
                     complete=model.block_complete(weight, degree))
        for weight, degree in model.block_keys()
    ]
