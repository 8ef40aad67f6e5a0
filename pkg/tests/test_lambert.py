"""
pylyndon Lambert series and Eisenstein cusp part tests.
"""
import cmath
import logging
import math

import mpmath
import pytest
from sympy import divisor_sigma

from pylyndon import DomainError
from pylyndon.lambert import (
    UpperHalfPoint,
    cusp_double_sum,
    cusp_sum,
    eisenstein_check,
    eisenstein_cusp_part,
    h_num,
    lambert_lyndon_check,
    prime_case_check,
    result1_check,
)
from pylyndon.series import IdentityId, Verdict

logger = logging.getLogger("pylyndon")


def test_upper_half_point() -> None:
    """Test the nome and the domain checks."""
    p = UpperHalfPoint(1j)
    assert p.q == pytest.approx(math.exp(-2 * math.pi))
    assert UpperHalfPoint(0.5 + 1j).q == pytest.approx(-math.exp(-2 * math.pi))
    with pytest.raises(DomainError, match="upper half plane"):
        UpperHalfPoint(-1j)
    with pytest.raises(DomainError, match="upper half plane"):
        UpperHalfPoint(2)
    with pytest.raises(DomainError, match=r"\|q\|"):
        UpperHalfPoint(0.01j)


@pytest.mark.parametrize("k, x", [(1, 0.0), (1, 0.3), (2, 0.1), (3, 0.2), (2, -0.3)])
def test_lambert_lyndon(k: int, x: float) -> None:
    """Test sum n L_k(n) x^n/(1 - x^n) = kx/(1 - kx)."""
    report = lambert_lyndon_check(k, x)
    logger.info(report.describe())
    assert report.identity_id is IdentityId.LAM1
    assert report.verdict is Verdict.PASS


@pytest.mark.parametrize("y", [0.5, 1.5, -2.0])
def test_lambert_lyndon_deformed(y: float) -> None:
    """Test the deformed Lambert series with k replaced by ky."""
    report = lambert_lyndon_check(2, 0.1, y=y)
    assert report.identity_id is IdentityId.LAM2
    assert report.point == {"k": 2, "x": 0.1, "y": y}
    assert report.verdict is Verdict.PASS
    assert report.rhs == pytest.approx(2 * y * 0.1 / (1 - 2 * y * 0.1))


def test_lambert_errors() -> None:
    """Test |kx| < 1 and |kyx| < 1."""
    with pytest.raises(DomainError, match=r"requires \|kx\|<1"):
        lambert_lyndon_check(5, 0.2)
    with pytest.raises(DomainError, match=r"requires \|kyx\|<1"):
        lambert_lyndon_check(2, 0.1, y=6)


def test_h_against_divisor_sums() -> None:
    """Test H(1, x) = sum sigma(N) x^N."""
    value, params = h_num(1, 0.1)
    expected = math.fsum(int(divisor_sigma(n)) * 0.1**n for n in range(1, 80))
    assert abs(value - expected) <= params.tail_bound + 1e-15
    assert value.real == pytest.approx(0.134773, abs=1e-6)


def test_h_domain() -> None:
    """Test H rejects |x| above the configured cap."""
    with pytest.raises(DomainError):
        h_num(2, 0.95)
    with pytest.raises(DomainError):
        h_num(0, 0.1)


@pytest.mark.parametrize("d", [0, 1, 3, 5])
def test_cusp_summation_orders_agree(d: int) -> None:
    """Test the cusp sum is the same summed by terms or by frequencies."""
    p = UpperHalfPoint(0.25 + 0.75j)
    by_terms, terms_params = cusp_sum(d, p, 80)
    by_frequency, frequency_params = cusp_double_sum(d, p, 80, 80)
    assert abs(by_terms - by_frequency) <= terms_params.tail_bound + frequency_params.tail_bound + 1e-13
    with pytest.raises(DomainError):
        cusp_sum(-1, p)


def test_eisenstein_cusp_part_weight_four() -> None:
    """Test the weight four cusp part against 2 zeta(4) 240 sum sigma_3(n) q^n."""
    p = UpperHalfPoint(1j)
    value, params = eisenstein_cusp_part(4, p)
    q = cmath.exp(-2 * math.pi)
    expected = 2 * float(mpmath.zeta(4)) * 240 * math.fsum(int(divisor_sigma(n, 3)) * q**n for n in range(1, 40))
    assert abs(value - expected) <= params.tail_bound + 1e-12
    with pytest.raises(DomainError):
        eisenstein_cusp_part(1, p)


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("z", [1j, 2j, 0.5 + 1j])
def test_result1(n: int, z: complex) -> None:
    """Test H(n, q) = sum_{d|n} mu(n/d) C(d)."""
    report = result1_check(n, UpperHalfPoint(z))
    assert report.verdict is Verdict.PASS
    assert report.point == {"n": n, "z": complex(z)}


@pytest.mark.parametrize("n", [4, 6, 12])
def test_eisenstein_theorem(n: int) -> None:
    """Test H(n, q) against the factorial weighted Eisenstein cusp parts."""
    report = eisenstein_check(n, UpperHalfPoint(1j))
    logger.info(report.describe())
    assert report.identity_id is IdentityId.EIS
    assert report.verdict is Verdict.PASS


@pytest.mark.parametrize("prime", [2, 3, 5, 7])
def test_prime_case(prime: int) -> None:
    """Test the prime corollary H(p, q) = C(p) - C(1)."""
    report = prime_case_check(prime, UpperHalfPoint(1j))
    assert report.verdict is Verdict.PASS
    assert report.point["p"] == prime


def test_prime_case_rejects_composites() -> None:
    """Test the prime corollary refuses composite p."""
    with pytest.raises(DomainError, match="prime"):
        prime_case_check(4, UpperHalfPoint(1j))
