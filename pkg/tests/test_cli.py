"""
pylyndon command line tests.
"""
import csv
import json
from pathlib import Path
from typing import Iterable

import pytest

from pylyndon.cli import (
    EXIT_DOMAIN,
    EXIT_FAIL,
    EXIT_IO,
    EXIT_OK,
    EXIT_POLE,
    EXIT_USAGE,
    main,
)
from pylyndon.settings import configure
from pylyndon.text_opts import clear_formatting, format_table, text_attribute

TESTS_SETTINGS = Path(__file__).parent / "settings.yaml"


@pytest.fixture
def restore_settings() -> Iterable[None]:
    """Reload the tests settings after a command replaced them."""
    yield
    configure(TESTS_SETTINGS)


def _run(capsys: pytest.CaptureFixture, *argv: str) -> tuple:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, clear_formatting(out).strip()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["compute", "lyndon-poly", "--k", "2", "--n", "6"], "(32*x^6 - 4*x^3 - 2*x^2 + x)/3"),
        (["compute", "lyndon-poly", "--k", "2", "--n", "6", "--x", "1"], "9"),
        (["compute", "lyndon-count", "--k", "2", "--n", "10"], "99"),
        (["compute", "necklace-count", "--k", "3", "--n", "4"], "24"),
        (["compute", "bernoulli", "--m", "10"], "5/66"),
        (["compute", "bernoulli-poly", "--m", "2", "--x", "1/2"], "-1/12"),
        (["compute", "apostol", "--m", "2"], "-2*l / (l-1)^2"),
        (["compute", "apostol", "--m", "2", "--lam", "1/2"], "-4"),
        (["compute", "eulerian", "--m", "4", "--j", "1"], "11"),
        (["compute", "polylog-neg", "--m", "2", "--lam", "1/2"], "6"),
        (["compute", "zeta-neg", "--m", "0"], "-1/2"),
        (["compute", "lerch-neg", "--m", "0", "--lam", "1/2"], "2"),
        (["compute", "special-eulerian", "--m", "1", "--k", "1", "--x", "1/2"], "-24"),
        (
            ["compute", "special", "--family", "zeta1", "--m", "1", "--k", "1", "--x", "1/2", "--parity", "odd"],
            "continuation=40/3 printed=40/3 agrees=true",
        ),
    ],
)
def test_compute_exact(capsys: pytest.CaptureFixture, argv: list, expected: str) -> None:
    """Test exact values print as normalized fractions or polynomial text."""
    code, out = _run(capsys, *argv)
    assert code == EXIT_OK
    assert out == expected


def test_compute_special_pole(capsys: pytest.CaptureFixture) -> None:
    """Test a pole outcome exits with 4."""
    code, out = _run(capsys, "compute", "special", "--family", "zeta1", "--m", "2", "--k", "2", "--x", "1/5")
    assert code == EXIT_POLE
    assert out.startswith("continuation=pole")


def test_compute_eulerian_pole(capsys: pytest.CaptureFixture) -> None:
    """Test a PoleError exits with 4."""
    assert main(["compute", "special-eulerian", "--m", "2", "--k", "1", "--x", "1/2"]) == EXIT_POLE


def test_compute_numeric(capsys: pytest.CaptureFixture) -> None:
    """Test numeric values print with their tail bound."""
    code, out = _run(capsys, "compute", "zeta1", "--k", "2", "--x", "0.2", "--s", "3", "--terms", "500")
    assert code == EXIT_OK
    assert "±" in out and "(N=500)" in out
    code, out = _run(capsys, "compute", "h", "--n", "1", "--x", "0.1")
    assert code == EXIT_OK
    assert out.startswith("0.13477")


def test_compute_domain_errors(capsys: pytest.CaptureFixture) -> None:
    """Test domain violations exit with 3 and cite the hypothesis."""
    assert main(["compute", "special", "--family", "zeta1", "--m", "1", "--k", "2", "--x", "3/5"]) == EXIT_DOMAIN
    assert "requires |kx|<1" in capsys.readouterr().err
    assert main(["compute", "zeta1", "--k", "2", "--x", "0.2", "--s", "1"]) == EXIT_DOMAIN
    assert main(["compute", "polylog-neg", "--m", "1", "--lam", "1"]) == EXIT_DOMAIN


def test_compute_argument_errors(capsys: pytest.CaptureFixture) -> None:
    """Test malformed or missing arguments exit with 2."""
    assert main(["compute", "lyndon-count", "--k", "2"]) == EXIT_USAGE
    assert main(["compute", "lyndon-count", "--k", "0", "--n", "3"]) == EXIT_USAGE
    assert main(["compute", "bernoulli-poly", "--m", "2", "--x", "a/b"]) == EXIT_USAGE
    assert main(["compute", "no-such-value"]) == EXIT_USAGE
    assert main(["compute", "zeta", "--s", "3", "--table"]) == EXIT_USAGE


def test_compute_table_and_csv(capsys: pytest.CaptureFixture, tmp_path: Path) -> None:
    """Test value tables and their CSV export."""
    path = tmp_path / "lyndon.csv"
    code, out = _run(capsys, "compute", "lyndon-count", "--k", "2", "--n", "6", "--table", "--csv", str(path))
    assert code == EXIT_OK
    assert out.splitlines()[-1].split() == ["6", "9"]
    with open(path, encoding="utf-8", newline="") as csv_file:
        rows = list(csv.reader(csv_file))
    assert rows[0] == ["n", "lyndon-count"]
    assert [row[1] for row in rows[1:]] == ["2", "1", "2", "3", "6", "9"]
    code, out = _run(capsys, "compute", "special", "--family", "zeta1", "--k", "1", "--x", "1/2", "--m", "3", "--table")
    assert code == EXIT_OK
    assert "continuation=pole" in out


@pytest.mark.parametrize("n, expected", [("3", ["001", "011"]), ("1", ["0", "1"])])
def test_enumerate(capsys: pytest.CaptureFixture, n: str, expected: list) -> None:
    """Test Lyndon words print one per line in lexicographic order."""
    code, out = _run(capsys, "enumerate", "lyndon", "--k", "2", "--n", n)
    assert code == EXIT_OK
    assert out.splitlines() == expected


def test_enumerate_count_and_budget(capsys: pytest.CaptureFixture) -> None:
    """Test the word count and the budget exit code."""
    code, out = _run(capsys, "enumerate", "lyndon", "--k", "2", "--n", "6", "--count")
    assert (code, out) == (EXIT_OK, "9")
    code, out = _run(capsys, "enumerate", "necklace", "--k", "2", "--n", "4")
    assert out.splitlines() == ["0000", "0001", "0011", "0101", "0111", "1111"]
    assert main(["enumerate", "lyndon", "--k", "2", "--n", "40"]) == EXIT_DOMAIN


def test_verify_pass(capsys: pytest.CaptureFixture) -> None:
    """Test a passing identity exits with 0."""
    code, out = _run(capsys, "verify", "--id", "T1", "--s", "3", "--k", "2", "--x", "0.2", "--terms", "500")
    assert code == EXIT_OK
    assert out.startswith("pass: T1")


def test_verify_fail(capsys: pytest.CaptureFixture) -> None:
    """Test the printed T4 right side exits with 1 and reports the corrected factor."""
    code, out = _run(capsys, "verify", "--id", "T4", "--s", "3", "--k", "2", "--x", "0.2", "--terms", "10000")
    assert code == EXIT_FAIL
    assert out.startswith("fail: T4")
    assert "corrected-odd-totient: pass" in out


def test_verify_lambert_and_json(capsys: pytest.CaptureFixture) -> None:
    """Test upper half plane identities and the JSON entry."""
    code, out = _run(capsys, "verify", "--id", "R1", "--n", "6", "--z", "i", "--json")
    assert code == EXIT_OK
    entry = json.loads(out[out.index("{") :])
    assert entry["id"] == "R1"
    assert entry["point"]["z"] == {"re": 0.0, "im": 1.0}
    assert main(["verify", "--id", "PRIME", "--n", "5", "--z", "i"]) == EXIT_OK
    assert main(["verify", "--id", "LAM2", "--k", "2", "--x", "0.1", "--y", "1.5"]) == EXIT_OK
    assert main(["verify", "--id", "L1", "--s", "3"]) == EXIT_OK


def test_verify_errors(capsys: pytest.CaptureFixture) -> None:
    """Test unknown ids, missing points and domain violations."""
    assert main(["verify", "--id", "T9", "--s", "3"]) == EXIT_USAGE
    assert main(["verify", "--id", "T1", "--s", "3", "--k", "2"]) == EXIT_USAGE
    assert main(["verify", "--id", "T1", "--s", "3", "--k", "2", "--x", "0.6"]) == EXIT_DOMAIN
    assert main(["verify", "--id", "R1", "--n", "6", "--z", "-1i"]) == EXIT_DOMAIN


def test_audit_command(capsys: pytest.CaptureFixture, tmp_path: Path) -> None:
    """Test the audit writes a valid report and prints the summary table."""
    path = tmp_path / "report.json"
    code, out = _run(capsys, "audit", "--grid", "tiny", "--seed", "5", "--out", str(path))
    assert code == EXIT_OK
    document = json.loads(path.read_text(encoding="utf-8"))
    assert document["seed"] == 5
    assert len({entry["id"] for entry in document["entries"] if entry["kind"] == "identity"}) >= 14
    assert "T4" in out and "inconclusive" in out


def test_audit_io_error(capsys: pytest.CaptureFixture, tmp_path: Path) -> None:
    """Test an unwritable report path exits with 6."""
    assert main(["audit", "--grid", "tiny", "--out", str(tmp_path / "missing" / "report.json")]) == EXIT_IO
    assert main(["audit", "--grid", "huge"]) == EXIT_DOMAIN


def test_config_option(capsys: pytest.CaptureFixture, tmp_path: Path, restore_settings: None) -> None:
    """Test --config replaces the settings and unknown keys are domain errors."""
    config = tmp_path / "config.yaml"
    config.write_text("limits:\n  enumeration_budget: 16\n", encoding="utf-8")
    assert main(["--config", str(config), "enumerate", "lyndon", "--k", "2", "--n", "5"]) == EXIT_DOMAIN
    config.write_text("limits:\n  no_such_key: 1\n", encoding="utf-8")
    assert main(["--config", str(config), "compute", "bernoulli", "--m", "2"]) == EXIT_DOMAIN
    assert main(["--config", str(tmp_path / "absent.yaml"), "compute", "bernoulli", "--m", "2"]) == EXIT_IO


def test_text_formatting() -> None:
    """Test attribute codes are stripped and ignored by the table column widths."""
    colored = text_attribute("pass\n\nfail", "green")
    assert clear_formatting(colored) == "pass\n\nfail"
    table = format_table(["id", "verdict"], [["T1", text_attribute("pass", "green")], ["T4", "fail"]])
    assert clear_formatting(table).splitlines() == ["id  verdict", "--  -------", "T1  pass", "T4  fail"]
