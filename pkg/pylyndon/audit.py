"""
The audit: every identity of the catalog on a configured grid, every special value family for m <= max_m, and a JSON
report validated against the shipped schema.
"""
import itertools
import json
import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from fractions import Fraction
from importlib import metadata, resources
from pathlib import Path
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from jsonschema import Draft202012Validator

from pylyndon import DomainError, ReportSchemaError
from pylyndon.closed_forms import (
    Family,
    Outcome,
    Parity,
    ParityAdditivityResult,
    SpecialValue,
    SpecialValuePoint,
    SpecialValueResult,
    parity_additivity,
    special_value,
)
from pylyndon.common import natural_sorted_key, to_complex
from pylyndon.lambert import UpperHalfPoint, eisenstein_check, lambert_lyndon_check, prime_case_check, result1_check
from pylyndon.series import SERIES_IDENTITIES, IdentityId, IdentityReport, Verdict, verify_identity
from pylyndon.settings import Settings, get_settings

logger = logging.getLogger("pylyndon")

SCHEMA_RESOURCE = "audit-schema.json"
SCHEMA_VERSION = "1.0"

CATALOG = tuple(IdentityId)

SUMMARY_COLUMNS = ("pass", "fail", "inconclusive", "agree", "disagree", "pole", "n/a")

Point = Dict[str, Any]


def tool_version() -> str:
    try:
        return metadata.version("pylyndon")
    except metadata.PackageNotFoundError:
        return "0.0.0"


def run_check(identity_id: Union[IdentityId, str], point: Mapping[str, Any], terms: Optional[int] = None) -> IdentityReport:
    """Run one catalog identity at one point.

    :param point: s, k, x for T1..T6, C1, L2, L3; s, m for L1; k, x (and y) for LAM1/LAM2; n, z for R1 and EIS;
        p, z for PRIME.
    """
    try:
        identity_id = IdentityId(identity_id)
    except ValueError:
        raise DomainError(f"unknown identity id {identity_id!r}, expected one of {', '.join(i.value for i in CATALOG)}")
    if identity_id in SERIES_IDENTITIES:
        return verify_identity(identity_id, point, terms)
    if identity_id is IdentityId.LAM1:
        return lambert_lyndon_check(point["k"], point["x"], terms)
    if identity_id is IdentityId.LAM2:
        return lambert_lyndon_check(point["k"], point["x"], terms, y=point["y"])
    upper = UpperHalfPoint(to_complex(point["z"], "z"))
    if identity_id is IdentityId.R1:
        return result1_check(point["n"], upper, terms)
    if identity_id is IdentityId.PRIME:
        return prime_case_check(point["p"], upper, terms)
    return eisenstein_check(point["n"], upper, terms)


def normalize_point(raw: Mapping[str, Any]) -> Point:
    """Convert grid values to the types the checks take; kx is turned into x = kx/k."""
    point: Point = {}
    for key, value in raw.items():
        if key in ("s", "z"):
            point[key] = to_complex(value, key)
        elif key in ("k", "n", "m", "p"):
            point[key] = int(value)
        elif key in ("x", "y"):
            point[key] = float(value)
        elif key != "kx":
            raise DomainError(f"unknown grid parameter '{key}'")
    if "kx" in raw:
        if "k" not in point:
            raise DomainError("grid parameter kx requires k")
        point["x"] = float(Fraction(str(raw["kx"])) / point["k"])
    return point


def expand_grid(grid: Mapping[str, List[Any]]) -> Iterator[Tuple[Point, Optional[int]]]:
    """Cartesian product of the grid lists in declaration order, terms last."""
    values = {key: list(value) for key, value in grid.items() if key != "terms"}
    terms_values = list(grid.get("terms", [None]))
    for combination in itertools.product(*values.values(), terms_values):
        yield normalize_point(dict(zip(values, combination[:-1]))), combination[-1]


def special_value_points(settings: Settings) -> List[Tuple[int, Fraction]]:
    """Configured (k, kx) points followed by seeded random draws with |kx| < 1."""
    special = settings.audit.special_values
    points = [(point["k"], point["kx"]) for point in special.points]
    rng = random.Random(settings.audit.seed)
    for _ in range(special.random_points):
        k = rng.randint(1, 5)
        denominator = rng.randint(2, 12)
        points.append((k, Fraction(rng.randint(1 - denominator, denominator - 1), denominator)))
    return points


def report_sort_key(report: IdentityReport) -> tuple:
    """Identity id in natural order (T2 before T10), then the point coordinates, then the truncation."""
    point = tuple((name, complex(value).real, complex(value).imag) for name, value in report.point.items())
    return natural_sorted_key(report.identity_id.value), point, report.terms


@dataclass
class AuditReport:
    tool_version: str
    timestamp: str
    grid: str
    seed: int
    identity_reports: List[IdentityReport] = field(default_factory=list)
    special_values: List[SpecialValueResult] = field(default_factory=list)
    parity_checks: List[ParityAdditivityResult] = field(default_factory=list)

    @property
    def missing_identities(self) -> List[IdentityId]:
        covered = {report.identity_id for report in self.identity_reports}
        return [identity_id for identity_id in CATALOG if identity_id not in covered]

    @property
    def summary(self) -> Dict[str, Dict[str, int]]:
        """Counts per section: identities by verdict, special values by agreement, parity checks by outcome."""
        summary: Dict[str, Dict[str, int]] = {}

        def count(section: str, column: str) -> None:
            summary.setdefault(section, dict.fromkeys(SUMMARY_COLUMNS, 0))[column] += 1

        for report in self.identity_reports:
            count(report.identity_id.value, report.verdict.value)
            if report.alternative is not None:
                count(f"{report.identity_id.value} {report.alternative.hypothesis}", report.alternative.verdict.value)
        for result in self.special_values:
            section = f"{result.family.value}/{result.point.parity.value}"
            if result.printed_value is Outcome.NOT_PRINTED:
                count(section, "n/a")
            elif result.continuation_value is Outcome.POLE:
                count(section, "pole")
            else:
                count(section, "agree" if result.agrees else "disagree")
        for check in self.parity_checks:
            section = f"{check.family.value} parity"
            count(section, "n/a" if not check.applicable else "pass" if check.holds else "fail")
        return summary

    def to_document(self) -> Dict[str, Any]:
        entries = [identity_entry(report) for report in sorted(self.identity_reports, key=report_sort_key)]
        entries += [special_value_entry(result) for result in self.special_values]
        entries += [parity_entry(check) for check in self.parity_checks]
        return {
            "schema_version": SCHEMA_VERSION,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
            "grid": self.grid,
            "seed": self.seed,
            "entries": entries,
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2, ensure_ascii=False) + "\n"


def _number(value: Union[float, int]) -> Union[float, int, str]:
    """JSON has no infinities; non-finite floats become strings."""
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


def _complex(value: complex) -> Dict[str, Any]:
    return {"re": _number(value.real), "im": _number(value.imag)}


def _rational(value: Fraction) -> Dict[str, str]:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _special(value: SpecialValue) -> Dict[str, str]:
    return {"marker": value.value} if isinstance(value, Outcome) else _rational(value)


def _point(point: Mapping[str, Any]) -> Dict[str, Any]:
    return {key: _complex(value) if isinstance(value, complex) else _number(value) for key, value in point.items()}


def identity_entry(report: IdentityReport) -> Dict[str, Any]:
    return {
        "kind": "identity",
        "id": report.identity_id.value,
        "hypothesis": report.hypothesis,
        "point": _point(report.point),
        "terms": report.terms,
        "lhs": _complex(report.lhs),
        "rhs": _complex(report.rhs),
        "residual": _number(report.residual),
        "tolerance": _number(report.tolerance),
        "tail_bound": _number(report.tail_bound),
        "verdict": report.verdict.value,
        "alternative": None if report.alternative is None else identity_entry(report.alternative),
    }


def special_value_entry(result: SpecialValueResult) -> Dict[str, Any]:
    p = result.point
    return {
        "kind": "special-value",
        "id": f"{result.family.value}/{p.parity.value}",
        "point": {"m": p.m, "k": p.k, "x": _rational(p.x), "kx": _rational(p.kx)},
        "continuation": _special(result.continuation_value),
        "printed": _special(result.printed_value),
        "agrees": result.agrees,
    }


def parity_entry(check: ParityAdditivityResult) -> Dict[str, Any]:
    return {
        "kind": "parity-additivity",
        "id": f"{check.family.value}/parity",
        "point": {"m": check.m, "k": check.k, "x": _rational(check.x), "kx": _rational(check.k * check.x)},
        "odd": _special(check.odd),
        "even": _special(check.even),
        "all": _special(check.all),
        "applicable": check.applicable,
        "holds": check.holds,
    }


def load_schema() -> Dict[str, Any]:
    return json.loads(resources.files("pylyndon").joinpath(SCHEMA_RESOURCE).read_text(encoding="utf-8"))


def validate_document(document: Mapping[str, Any]) -> None:
    """Raise ReportSchemaError listing every schema violation."""
    validator = Draft202012Validator(load_schema())
    errors = sorted(validator.iter_errors(document), key=lambda error: [str(p) for p in error.absolute_path])
    if errors:
        details = "; ".join(
            f"{'/'.join(str(p) for p in error.absolute_path) or '<root>'}: {error.message}" for error in errors
        )
        raise ReportSchemaError(f"audit report violates {SCHEMA_RESOURCE}: {details}")


def _identity_tasks(grid_name: str, settings: Settings) -> List[Tuple[IdentityId, Point, Optional[int]]]:
    try:
        grids = settings.audit.grids[grid_name]
    except KeyError:
        raise DomainError(f"unknown grid '{grid_name}', expected one of {', '.join(settings.audit.grids)}")
    tasks = []
    for identity_id in CATALOG:
        grid = grids.get(identity_id.value)
        if not grid:
            raise DomainError(f"grid '{grid_name}' has no points for {identity_id.value}")
        tasks += [(identity_id, point, terms) for point, terms in expand_grid(grid)]
    return tasks


def _special_values(settings: Settings) -> Tuple[List[SpecialValueResult], List[ParityAdditivityResult]]:
    results, checks = [], []
    for family in Family:
        for m in range(settings.audit.special_values.max_m + 1):
            for k, kx in special_value_points(settings):
                x = kx / k
                for parity in Parity:
                    results.append(special_value(family, SpecialValuePoint(m, k, x, parity)))
                checks.append(parity_additivity(family, m, k, x))
    return results, checks


def run_audit(grid: str = "small", seed: Optional[int] = None, jobs: Optional[int] = None) -> AuditReport:
    """Run the catalog on a named grid and the special value audit.

    :param seed: overrides the configured seed of the random special value points.
    :param jobs: number of worker threads for the identity checks; results keep grid order.
    """
    settings = get_settings()
    if seed is not None:
        settings = replace(settings, audit=replace(settings.audit, seed=seed))
    jobs = max(1, settings.audit.jobs if jobs is None else jobs)
    tasks = _identity_tasks(grid, settings)
    logger.info(f"Running {len(tasks)} identity checks on grid '{grid}' with {jobs} worker(s)")
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        reports = list(executor.map(lambda task: run_check(*task), tasks))
    for report in reports:
        if report.verdict is not Verdict.PASS:
            logger.warning(f"Finding: {report.describe()}")
    logger.info(f"Running special value audit up to m={settings.audit.special_values.max_m}")
    special_values, parity_checks = _special_values(settings)
    for result in special_values:
        if not result.agrees and result.printed_value is not Outcome.NOT_PRINTED:
            p = result.point
            logger.warning(
                f"Finding: {result.family.value}/{p.parity.value} m={p.m} kx={p.kx}:"
                f" continuation {result.continuation_value} != printed {result.printed_value}"
            )
    report = AuditReport(
        tool_version=tool_version(),
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        grid=grid,
        seed=settings.audit.seed,
        identity_reports=reports,
        special_values=special_values,
        parity_checks=parity_checks,
    )
    for section, counts in report.summary.items():
        logger.info(f"{section}: " + ", ".join(f"{column} {count}" for column, count in counts.items() if count))
    return report


def write_report(report: AuditReport, path: Union[str, Path]) -> None:
    """Validate and write the report as UTF-8 JSON."""
    validate_document(report.to_document())
    with open(path, "w", encoding="utf-8") as report_file:
        report_file.write(report.to_json())
    logger.info(f"Audit report written to {path}")
