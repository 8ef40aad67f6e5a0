"""
Command line front end.

Usage:
    pylyndon compute lyndon-poly --k 2 --n 6
    pylyndon compute special --family zeta1 --m 2 --k 2 --x 1/5
    pylyndon enumerate lyndon --k 2 --n 3
    pylyndon verify --id T1 --s 3 --k 2 --x 0.2 --terms 500
    pylyndon --log-level INFO audit --grid small --out report.json

Exit codes:
    0: success, verify pass
    1: verify fail
    2: argument error, unknown identity id
    3: domain, budget or resource limit violation
    4: pole
    5: verify inconclusive
    6: I/O error
    7: internal self-audit failure
"""
import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pylyndon import (
    ArithmeticAuditError,
    BudgetExceededError,
    DomainError,
    PoleError,
    ReportSchemaError,
    ResourceLimitError,
)
from pylyndon.audit import CATALOG, SUMMARY_COLUMNS, identity_entry, run_audit, run_check, write_report
from pylyndon.bernoulli import (
    apostol_bernoulli_poly_at,
    apostol_bernoulli_rf,
    bernoulli_number,
    bernoulli_poly,
    eulerian,
    lerch_phi_neg,
    polylog_neg,
    zeta_neg,
)
from pylyndon.closed_forms import Family, Outcome, Parity, SpecialValuePoint, special_value, zeta1_special_eulerian
from pylyndon.common import (
    format_complex,
    parse_complex,
    parse_non_negative,
    parse_positive,
    parse_rational,
    set_logger,
)
from pylyndon.lambert import UpperHalfPoint, cusp_sum, h_num
from pylyndon.series import (
    IdentityId,
    TruncationParams,
    Verdict,
    mobius_multiple_series_num,
    mu_phi_odd_num,
    polylog_num,
    riemann_zeta_num,
    zeta1_num,
    zeta2_num,
)
from pylyndon.settings import configure
from pylyndon.text_opts import format_summary, format_table, format_verdict
from pylyndon.words import (
    enumerate_lyndon,
    lyndon_count,
    lyndon_poly,
    necklace_count,
    necklace_poly,
    necklace_representatives,
)

logger = logging.getLogger("pylyndon")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_POLE = 4
EXIT_INCONCLUSIVE = 5
EXIT_IO = 6
EXIT_INTERNAL = 7

VERDICT_EXIT = {Verdict.PASS: EXIT_OK, Verdict.FAIL: EXIT_FAIL, Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE}

# arguments each identity takes from the command line
POINT_ARGUMENTS = {
    **{identity_id: ("s", "k", "x") for identity_id in CATALOG},
    IdentityId.L1: ("s", "m"),
    IdentityId.LAM1: ("k", "x"),
    IdentityId.LAM2: ("k", "x", "y"),
    IdentityId.R1: ("n", "z"),
    IdentityId.EIS: ("n", "z"),
    IdentityId.PRIME: ("p", "z"),
}

Computed = Tuple[str, int]


class UsageError(Exception):
    """Missing or malformed command line argument, reported with exit code 2."""


def _require(args: argparse.Namespace, *names: str) -> list:
    missing = [f"--{name}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise UsageError(f"{args.kind} requires {', '.join(missing)}")
    return [getattr(args, name) for name in names]


def _convert(text: str, parser: Callable, name: str):
    try:
        return parser(text)
    except argparse.ArgumentTypeError as error:
        raise UsageError(f"--{name}: {error}")


def _exact(args: argparse.Namespace, name: str) -> Fraction:
    return _convert(_require(args, name)[0], parse_rational, name)


def _real(args: argparse.Namespace, name: str) -> float:
    return float(_exact(args, name))


def _complex(args: argparse.Namespace, name: str) -> complex:
    return _convert(_require(args, name)[0], parse_complex, name)


def _numeric(series: Tuple[complex, TruncationParams]) -> Computed:
    value, params = series
    return f"{format_complex(value)} ± {params.tail_bound:.3e} (N={params.terms})", EXIT_OK


def _exact_or_poly(poly, args: argparse.Namespace) -> Computed:
    """The polynomial text, or its exact value when --x is given."""
    return (str(poly) if args.x is None else str(poly(_exact(args, "x")))), EXIT_OK


def _apostol(args: argparse.Namespace) -> Computed:
    (m,) = _require(args, "m")
    rf = apostol_bernoulli_rf(m)
    return (str(rf) if args.lam is None else str(rf.evaluate(args.lam))), EXIT_OK


def _apostol_poly(args: argparse.Namespace) -> Computed:
    m, lam = _require(args, "m", "lam")
    return str(apostol_bernoulli_poly_at(m, _exact(args, "x"), lam)), EXIT_OK


def _special(args: argparse.Namespace) -> Computed:
    m, k, family = _require(args, "m", "k", "family")
    p = SpecialValuePoint(m, k, _exact(args, "x"), Parity(args.parity))
    result = special_value(Family(family), p)
    text = (
        f"continuation={result.continuation_value} printed={result.printed_value}"
        f" agrees={str(result.agrees).lower()}"
    )
    return text, EXIT_POLE if result.continuation_value is Outcome.POLE else EXIT_OK


def _cusp(args: argparse.Namespace) -> Computed:
    (d,) = _require(args, "m")
    return _numeric(cusp_sum(d, UpperHalfPoint(_complex(args, "z")), args.terms))


# kind -> (compute, argument swept by --table, first table index)
COMPUTE_KINDS: Dict[str, Tuple[Callable[[argparse.Namespace], Computed], Optional[str], int]] = {
    "lyndon-count": (lambda args: (str(lyndon_count(*_require(args, "k", "n"))), EXIT_OK), "n", 1),
    "necklace-count": (lambda args: (str(necklace_count(*_require(args, "k", "n"))), EXIT_OK), "n", 1),
    "lyndon-poly": (lambda args: _exact_or_poly(lyndon_poly(*_require(args, "k", "n")), args), "n", 1),
    "necklace-poly": (lambda args: _exact_or_poly(necklace_poly(*_require(args, "k", "n")), args), "n", 1),
    "bernoulli": (lambda args: (str(bernoulli_number(*_require(args, "m"))), EXIT_OK), "m", 0),
    "bernoulli-poly": (lambda args: (str(bernoulli_poly(*_require(args, "m"), _exact(args, "x"))), EXIT_OK), "m", 0),
    "apostol": (_apostol, "m", 0),
    "apostol-poly": (_apostol_poly, "m", 0),
    "eulerian": (lambda args: (str(eulerian(*_require(args, "m", "j"))), EXIT_OK), "m", 0),
    "polylog-neg": (lambda args: (str(polylog_neg(*_require(args, "m", "lam"))), EXIT_OK), "m", 1),
    "zeta-neg": (lambda args: (str(zeta_neg(*_require(args, "m"))), EXIT_OK), "m", 0),
    "lerch-neg": (lambda args: (str(lerch_phi_neg(*_require(args, "m", "lam"))), EXIT_OK), "m", 0),
    "special": (_special, "m", 0),
    "special-eulerian": (
        lambda args: (str(zeta1_special_eulerian(*_require(args, "m", "k"), _exact(args, "x"))), EXIT_OK),
        "m",
        0,
    ),
    "polylog": (
        lambda args: _numeric(polylog_num(_complex(args, "s"), _complex(args, "x"), args.terms, Parity(args.parity))),
        None,
        0,
    ),
    "zeta": (lambda args: _numeric(riemann_zeta_num(_complex(args, "s"), args.terms)), None, 0),
    "zeta1": (
        lambda args: _numeric(
            zeta1_num(*_require(args, "k"), _real(args, "x"), _complex(args, "s"), args.terms, Parity(args.parity))
        ),
        None,
        0,
    ),
    "zeta2": (
        lambda args: _numeric(
            zeta2_num(*_require(args, "k"), _real(args, "x"), _complex(args, "s"), args.terms, Parity(args.parity))
        ),
        None,
        0,
    ),
    "mobius-odd": (lambda args: _numeric(mu_phi_odd_num("mobius", _complex(args, "s"), args.terms)), None, 0),
    "totient-odd": (lambda args: _numeric(mu_phi_odd_num("totient", _complex(args, "s"), args.terms)), None, 0),
    "mobius-multiple": (
        lambda args: _numeric(mobius_multiple_series_num(*_require(args, "m"), _complex(args, "s"), args.terms)),
        "m",
        1,
    ),
    "h": (lambda args: _numeric(h_num(*_require(args, "n"), _complex(args, "x"), args.terms)), "n", 1),
    "cusp": (_cusp, "m", 0),
}


def _table_rows(args: argparse.Namespace, compute: Callable, index: str, start: int) -> List[List[object]]:
    (stop,) = _require(args, index)
    rows: List[List[object]] = []
    for value in range(start, stop + 1):
        try:
            text, _ = compute(argparse.Namespace(**{**vars(args), index: value}))
        except PoleError:
            text = Outcome.POLE.value
        rows.append([value, text])
    return rows


def _write_csv(path: str, header: Sequence[str], rows: List[List[object]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as csv_file:
        writer = csv.writer(csv_file)
        writer.writerow(header)
        writer.writerows(rows)
    logger.info(f"{len(rows)} row(s) written to {path}")


def cmd_compute(args: argparse.Namespace) -> int:
    compute, index, start = COMPUTE_KINDS[args.kind]
    header = [index or "", args.kind]
    if args.table:
        if index is None:
            raise UsageError(f"--table is not supported for {args.kind}")
        rows = _table_rows(args, compute, index, start)
        print(format_table(header, rows))
        status = EXIT_OK
    else:
        text, status = compute(args)
        print(text)
        rows = [[getattr(args, index) if index else "", text]]
    if args.csv:
        _write_csv(args.csv, header, rows)
    return status


def cmd_enumerate(args: argparse.Namespace) -> int:
    k, n = _require(args, "k", "n")
    if args.kind == "lyndon":
        words = enumerate_lyndon(k, n, args.budget)
    else:
        words = necklace_representatives(k, n, args.budget)
    if args.count:
        print(len(words))
    else:
        for word in words:
            print(word)
    return EXIT_OK


def _point(args: argparse.Namespace, identity_id: IdentityId) -> Dict[str, object]:
    names = POINT_ARGUMENTS[identity_id]
    if identity_id is IdentityId.PRIME and args.p is None:
        args.p = args.n
    point: Dict[str, object] = {}
    for name in names:
        if identity_id is IdentityId.L1 and name == "m" and args.m is None:
            continue
        if name in ("x", "y"):
            point[name] = _real(args, name)
        elif name in ("s", "z"):
            point[name] = _complex(args, name)
        else:
            point[name] = _require(args, name)[0]
    return point


def cmd_verify(args: argparse.Namespace) -> int:
    identity_id = IdentityId(args.id)
    args.kind = f"verify --id {identity_id.value}"
    report = run_check(identity_id, _point(args, identity_id), args.terms)
    print(f"{format_verdict(report.verdict.value)}: {report.describe()}")
    if report.alternative is not None:
        alternative = report.alternative
        print(f"  {alternative.hypothesis}: {format_verdict(alternative.verdict.value)}: {alternative.describe()}")
    if args.json:
        print(json.dumps(identity_entry(report), indent=2, ensure_ascii=False))
    return VERDICT_EXIT[report.verdict]


def cmd_audit(args: argparse.Namespace) -> int:
    report = run_audit(args.grid, seed=args.seed, jobs=args.jobs)
    write_report(report, args.out)
    print(format_summary(report.summary, SUMMARY_COLUMNS))
    for identity_id in report.missing_identities:
        logger.warning(f"Identity {identity_id.value} has no points on grid '{args.grid}'")
    print(f"\nReport saved to: {args.out}")
    return EXIT_OK


def _add_value_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=parse_positive, help="alphabet size")
    parser.add_argument("--n", type=parse_positive, help="word length or index n")
    parser.add_argument("--m", type=parse_non_negative, help="order m (s = -m for special values)")
    parser.add_argument("--x", help="deformation variable: p/q for exact values, a decimal or a+bi for numeric ones")
    parser.add_argument("--s", help="complex exponent a+bi")
    parser.add_argument("--terms", type=parse_positive, help="truncation N (defaults from the settings)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pylyndon", description="Lyndon words, necklace polynomials and their identities")
    parser.add_argument("--config", help="YAML file merged over the packaged settings")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="logging level (default: WARNING)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    compute = subparsers.add_parser("compute", help="compute one value or a table of values")
    compute.add_argument("kind", choices=list(COMPUTE_KINDS))
    _add_value_arguments(compute)
    compute.add_argument("--j", type=parse_non_negative, help="descent count of the Eulerian number")
    compute.add_argument("--lam", type=parse_rational, help="rational l != 1 of the Apostol-Bernoulli numbers")
    compute.add_argument("--z", help="point a+bi of the upper half plane")
    compute.add_argument("--family", choices=[family.value for family in Family])
    compute.add_argument("--parity", default=Parity.ALL.value, choices=[parity.value for parity in Parity])
    compute.add_argument("--table", action="store_true", help="sweep n (or m) from its first value up to the given one")
    compute.add_argument("--csv", help="also write the values to this CSV file")
    compute.set_defaults(handler=cmd_compute)

    enumerate_ = subparsers.add_parser("enumerate", help="list Lyndon words or necklace representatives")
    enumerate_.add_argument("kind", choices=["lyndon", "necklace"])
    enumerate_.add_argument("--k", type=parse_positive, help="alphabet size")
    enumerate_.add_argument("--n", type=parse_positive, help="word length")
    enumerate_.add_argument("--budget", type=parse_positive, help="maximum k^n (defaults from the settings)")
    enumerate_.add_argument("--count", action="store_true", help="print the number of words only")
    enumerate_.set_defaults(handler=cmd_enumerate)

    verify = subparsers.add_parser("verify", help="check one identity at one point")
    verify.add_argument("--id", required=True, choices=[identity_id.value for identity_id in CATALOG])
    _add_value_arguments(verify)
    verify.add_argument("--y", help="second deformation parameter of LAM2")
    verify.add_argument("--z", help="point a+bi of the upper half plane")
    verify.add_argument("--p", type=parse_positive, help="prime of the PRIME identity (defaults to --n)")
    verify.add_argument("--json", action="store_true", help="also print the report entry as JSON")
    verify.set_defaults(handler=cmd_verify)

    audit = subparsers.add_parser("audit", help="run the identity catalog and the special value audit")
    audit.add_argument("--grid", default="small", help="named grid from the settings (default: small)")
    audit.add_argument("--seed", type=int, help="seed of the random special value points")
    audit.add_argument("--jobs", type=parse_positive, help="worker threads for the identity checks")
    audit.add_argument("--out", default="audit-report.json", help="JSON report path (default: audit-report.json)")
    audit.set_defaults(handler=cmd_audit)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_USAGE
    set_logger(args.log_level)
    try:
        if args.config:
            configure(args.config)
        return args.handler(args)
    except UsageError as error:
        print(f"{parser.prog}: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except PoleError as error:
        print(f"pole: {error}", file=sys.stderr)
        return EXIT_POLE
    except (DomainError, BudgetExceededError, ResourceLimitError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ArithmeticAuditError, ReportSchemaError) as error:
        logger.error(f"Internal failure: {error}")
        return EXIT_INTERNAL
    except OSError as error:
        print(f"I/O error: {error}", file=sys.stderr)
        return EXIT_IO
