import csv
import io
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from ..numerics import BigReal

CSV_COLUMNS = ("id", "params", "terms_used", "abs_error", "tail_estimate", "converged")
CROSS_CHECK_COLUMNS = ("id", "params", "model", "prefix", "matched", "first_difference")
TEXT_DIGITS = 6


@dataclass
class VerificationReport:
    """Outcome of summing one identity against its closed form."""
    identity_id: str
    parameters: str
    precision: int
    terms_used: Dict[str, int]
    partial_sum: BigReal
    rhs_value: BigReal
    abs_error: BigReal
    tail_estimate: BigReal
    converged: bool
    elapsed_ms: float = 0.0
    tail_kind: str = "geometric"
    doubling_checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def total_terms(self) -> int:
        return sum(self.terms_used.values())

    @property
    def status(self) -> str:
        return "converged" if self.converged else "FAILED"

    def to_record(self) -> "ReportRecord":
        return ReportRecord(
            id=self.identity_id,
            params=self.parameters,
            precision_bits=self.precision,
            terms_used=dict(self.terms_used),
            partial_sum=self.partial_sum.to_decimal(),
            rhs=self.rhs_value.to_decimal(),
            abs_error=self.abs_error.to_decimal(),
            tail_estimate=self.tail_estimate.to_decimal(),
            converged=self.converged,
            elapsed_ms=int(round(self.elapsed_ms)),
            tail_kind=self.tail_kind,
        )

    def text(self) -> str:
        """One line for terminal output; carries no timing so reruns print identical text."""
        params = self.parameters or "-"
        return (f"{self.identity_id:<10} {params:<24} {self.status:<9} terms={self.total_terms:<8} "
                f"error={self.abs_error.to_decimal(TEXT_DIGITS)} tail={self.tail_estimate.to_decimal(TEXT_DIGITS)} "
                f"({self.tail_kind}, heuristic)")


class ReportRecord(BaseModel):
    """
    Serialized form of a VerificationReport.

    Numeric fields are decimal strings at the report's precision, so a record
    parsed back and dumped again reproduces them byte for byte.
    """
    model_config = ConfigDict(frozen=True)

    id: str
    params: str
    precision_bits: int
    terms_used: Dict[str, int]
    partial_sum: str
    rhs: str
    abs_error: str
    tail_estimate: str
    converged: bool
    elapsed_ms: int
    tail_kind: str = "geometric"

    def to_json(self) -> str:
        return self.model_dump_json()

    @classmethod
    def from_json(cls, text: str) -> "ReportRecord":
        return cls.model_validate_json(text)

    def csv_row(self) -> List[str]:
        terms = ";".join(f"{name}={count}" for name, count in self.terms_used.items())
        return [self.id, self.params, terms, self.abs_error, self.tail_estimate, str(self.converged).lower()]


def csv_table(columns: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue()


def to_csv(records: list, columns: Sequence[str] = CSV_COLUMNS) -> str:
    """Records are anything with a ``csv_row()``."""
    return csv_table(columns, (record.csv_row() for record in records))


class CrossCheck(BaseModel):
    """Result of comparing one identity's arguments with its orbit model."""
    model_config = ConfigDict(frozen=True)

    id: str
    params: str
    model: str
    prefix: int
    matched: bool
    first_difference: Optional[int] = None
    message: str = ""

    def text(self) -> str:
        status = "match" if self.matched else f"MISMATCH at {self.first_difference}"
        return f"{self.id:<10} {self.params or '-':<24} {self.model:<16} N={self.prefix:<5} {status}"

    def csv_row(self) -> List[str]:
        return [self.id, self.params, self.model, str(self.prefix), str(self.matched).lower(),
                "" if self.first_difference is None else str(self.first_difference)]
