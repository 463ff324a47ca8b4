"""
Command-line driver.

    orthospec list
    orthospec verify --id eq-5.3 --param t=10/3
    orthospec verify-all --tolerance 1e-20
    orthospec cross-validate --id eq-4.7 --count 20
    orthospec generate --id eq-12.1 --count 5 --format json

Exit codes: 0 when everything requested converged (or matched), 1 when a
verification failed or a cross-validation mismatched, 2 on usage or
parameter errors.
"""
import argparse
import json
import logging
import sys
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from .config import get_default_max_terms, get_default_precision, get_default_tolerance
from .exceptions import GeometryError, IdentityError, NumericDomainError, OrthospecError, VerificationError
from .identities import catalog, get_template
from .numerics import MIN_PRECISION, BigReal
from .runner import Job, make_runner
from .types import CROSS_CHECK_COLUMNS, csv_table, to_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class Command(str, Enum):
    LIST = "list"
    VERIFY = "verify"
    VERIFY_ALL = "verify-all"
    CROSS_VALIDATE = "cross-validate"
    GENERATE = "generate"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class RunConfig(BaseModel):
    command: Command
    ids: List[str] = Field(default_factory=list)
    params: Dict[str, str] = Field(default_factory=dict)
    precision: int = Field(default_factory=get_default_precision, ge=MIN_PRECISION)
    tolerance: str = Field(default_factory=get_default_tolerance)
    max_terms: int = Field(default_factory=get_default_max_terms, ge=8)
    format: OutputFormat = OutputFormat.TEXT
    output: Optional[Path] = None
    count: int = Field(default=20, ge=1)
    workers: Optional[int] = Field(default=None, ge=1)

    @field_validator("params", mode="before")
    @classmethod
    def _split_pairs(cls, value):
        if isinstance(value, (list, tuple)):
            pairs = {}
            for item in value:
                name, sep, raw = str(item).partition("=")
                if not sep or not name.strip():
                    raise ValueError(f"parameters are written key=value, got {item!r}")
                pairs[name.strip()] = raw.strip()
            return pairs
        return value

    @field_validator("tolerance")
    @classmethod
    def _positive_tolerance(cls, value: str) -> str:
        try:
            parsed = BigReal.from_decimal(value, MIN_PRECISION)
        except NumericDomainError as e:
            raise ValueError(str(e)) from e
        if parsed.sign() <= 0:
            raise ValueError(f"tolerance must be positive, got {value}")
        return value

    @model_validator(mode="after")
    def _check_combination(self) -> "RunConfig":
        if self.command in (Command.VERIFY, Command.GENERATE) and not self.ids:
            raise ValueError(f"'{self.command.value}' needs --id")
        if self.command == Command.GENERATE and len(self.ids) != 1:
            raise ValueError("'generate' takes exactly one --id")
        if self.params and len(self.ids) != 1:
            raise ValueError("--param applies to exactly one --id")
        return self


def read_config_file(path: str) -> Dict[str, object]:
    """key=value lines; '#' starts a comment; id and param may repeat."""
    values: Dict[str, object] = {}
    for number, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise IdentityError(f"{path}:{number}: expected key=value, got {line!r}")
        key, value = key.strip().replace("-", "_"), value.strip()
        if key in ("id", "ids"):
            values.setdefault("ids", []).extend(v.strip() for v in value.split(",") if v.strip())
        elif key in ("param", "params"):
            values.setdefault("params", []).append(value)
        else:
            values[key] = value
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthospec",
                                     description="Verify Rogers-dilogarithm identities from orthogeodesic orbits.")
    parser.add_argument("command", choices=[c.value for c in Command])
    parser.add_argument("--id", dest="ids", action="append", help="identity id (repeatable)")
    parser.add_argument("--param", dest="params", action="append", metavar="KEY=VALUE",
                        help="identity parameter (repeatable)")
    parser.add_argument("--precision", type=int, help="working precision in bits")
    parser.add_argument("--tolerance", help="decimal tolerance, e.g. 1e-30")
    parser.add_argument("--max-terms", dest="max_terms", type=int, help="per-series term cap")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat])
    parser.add_argument("--output", help="write to this file instead of standard output")
    parser.add_argument("--count", type=int, help="terms for generate / cross-validate")
    parser.add_argument("--workers", type=int, help="concurrent verifications")
    parser.add_argument("--config", help="key=value configuration file")
    parser.add_argument("--log-level", dest="log_level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    """Flags override the config file; the file overrides environment defaults."""
    values = read_config_file(args.config) if args.config else {}
    for key in ("ids", "params", "precision", "tolerance", "max_terms", "format", "output", "count", "workers"):
        flag = getattr(args, key)
        if flag is not None:
            values[key] = flag
    values["command"] = args.command
    return RunConfig(**values)


def _list(config: RunConfig) -> str:
    templates = catalog()
    if config.format == OutputFormat.JSON:
        return "\n".join(json.dumps({"id": t.id, "parameters": {p.name: str(p.default) for p in t.parameters},
                                     "reference": t.reference, "summary": t.summary}) for t in templates) + "\n"
    if config.format == OutputFormat.CSV:
        return csv_table(("id", "parameters", "reference"), ([t.id, t.signature, t.reference] for t in templates))
    return "".join(f"{t.id:<10} {t.signature or '-':<28} {t.reference}\n" for t in templates)


def _jobs(config: RunConfig) -> Optional[List[Job]]:
    if not config.ids:
        return None
    return [Job(id, dict(config.params)) for id in config.ids]


def _verify(config: RunConfig) -> Tuple[str, int]:
    runner = make_runner(_jobs(config), precision=config.precision, tolerance=config.tolerance,
                         max_terms=config.max_terms, workers=config.workers)
    reports = runner.verify_all()
    records = [r.to_record() for r in reports]
    if config.format == OutputFormat.JSON:
        text = "".join(record.to_json() + "\n" for record in records)
    elif config.format == OutputFormat.CSV:
        text = to_csv(records)
    else:
        converged = sum(r.converged for r in reports)
        text = "".join(r.text() + "\n" for r in reports) + f"{converged}/{len(reports)} converged\n"
    return text, EXIT_OK if all(r.converged for r in reports) else EXIT_FAILED


def _cross_validate(config: RunConfig) -> Tuple[str, int]:
    runner = make_runner(_jobs(config), workers=config.workers)
    checks = runner.cross_validate_all(prefix=config.count)
    if config.ids and not checks:
        raise GeometryError(f"none of {config.ids} has a geometric model")
    if config.format == OutputFormat.JSON:
        text = "".join(check.model_dump_json() + "\n" for check in checks)
    elif config.format == OutputFormat.CSV:
        text = to_csv(checks, columns=CROSS_CHECK_COLUMNS)
    else:
        text = "".join(check.text() + "\n" for check in checks)
    return text, EXIT_OK if all(c.matched for c in checks) else EXIT_FAILED


def _generate(config: RunConfig) -> str:
    identity = get_template(config.ids[0]).instantiate(config.params)
    series = {}
    for s in identity.series:
        series[s.name] = [(s.start + i, str(a)) for i, a in enumerate(s.arguments(config.count))]
    finite = [str(t.argument) for t in identity.finite_terms]
    families = {}
    if identity.link is not None:
        enumeration = identity.link.build().enumerate(config.count)
        families = {name: [str(v) for v in values] for name, values in enumeration.families.items()}
        families["finite"] = [str(v) for v in enumeration.finite_terms]
    if config.format == OutputFormat.JSON:
        return json.dumps({"id": identity.id, "params": identity.describe_parameters(),
                           "series": {name: [v for _, v in values] for name, values in series.items()},
                           "finite": finite, "families": families}) + "\n"
    if config.format == OutputFormat.CSV:
        rows = [["series", name, str(n), v] for name, values in series.items() for n, v in values]
        rows += [["finite", "", str(i), v] for i, v in enumerate(finite)]
        rows += [["orbit", name, str(i), v] for name, values in families.items()
                 for i, v in enumerate(values)]
        return csv_table(("source", "name", "index", "value"), rows)
    lines = [f"{identity.id} [{identity.describe_parameters() or '-'}] = {identity.rhs}"]
    for name, values in series.items():
        lines.append(f"  series {name}:")
        lines.extend(f"    {n}: {v}" for n, v in values)
    if finite:
        lines.append("  finite: " + ", ".join(finite))
    for name, values in families.items():
        lines.append(f"  orbit {name}: " + ", ".join(values))
    return "\n".join(lines) + "\n"


def _write(config: RunConfig, text: str) -> None:
    if config.output is None:
        sys.stdout.write(text)
        return
    config.output.write_text(text)


def run(config: RunConfig) -> int:
    """Execute a validated configuration and return the process exit code."""
    try:
        if config.command == Command.LIST:
            text, code = _list(config), EXIT_OK
        elif config.command in (Command.VERIFY, Command.VERIFY_ALL):
            text, code = _verify(config)
        elif config.command == Command.CROSS_VALIDATE:
            text, code = _cross_validate(config)
        else:
            text, code = _generate(config), EXIT_OK
        _write(config, text)
        return code
    except (IdentityError, GeometryError, NumericDomainError) as e:
        print(f"orthospec: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as e:
        print(f"orthospec: {e}", file=sys.stderr)
        return EXIT_FAILED
    except OSError as e:
        print(f"orthospec: cannot write output: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OrthospecError as e:
        print(f"orthospec: {e}", file=sys.stderr)
        return EXIT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(levelname)s %(name)s: %(message)s")
    try:
        config = build_config(args)
    except ValidationError as e:
        first = e.errors()[0]
        print(f"orthospec: {'.'.join(str(p) for p in first['loc']) or 'config'}: {first['msg']}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, IdentityError) as e:
        print(f"orthospec: {e}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)
