from .orbit import OrbitEnumeration
from .report import CROSS_CHECK_COLUMNS, CSV_COLUMNS, CrossCheck, ReportRecord, VerificationReport, csv_table, to_csv

__all__ = [
    "OrbitEnumeration",
    "VerificationReport",
    "ReportRecord",
    "CrossCheck",
    "CSV_COLUMNS",
    "CROSS_CHECK_COLUMNS",
    "csv_table",
    "to_csv",
]
