"""
pylyndon special value tests.
"""
import itertools
import logging
from fractions import Fraction

import pytest

from pylyndon import DomainError, PoleError
from pylyndon.closed_forms import (
    Family,
    Outcome,
    Parity,
    SpecialValuePoint,
    parity_additivity,
    special_value,
    zeta1_special,
    zeta1_special_eulerian,
    zeta2_special,
)

logger = logging.getLogger("pylyndon")

HALF = Fraction(1, 2)


def test_point_validation() -> None:
    """Test points require m >= 0, k >= 1 and |kx| < 1."""
    with pytest.raises(DomainError, match=r"requires \|kx\|<1"):
        SpecialValuePoint(1, 2, HALF)
    with pytest.raises(DomainError, match=r"requires \|kx\|<1"):
        SpecialValuePoint(1, 3, Fraction(1, 2))
    with pytest.raises(DomainError):
        SpecialValuePoint(-1, 1, HALF)
    with pytest.raises(DomainError):
        SpecialValuePoint(1, 0, HALF)
    p = SpecialValuePoint(2, 2, Fraction(1, 5), "odd")
    assert p.kx == Fraction(2, 5)
    assert p.parity is Parity.ODD


@pytest.mark.parametrize(
    "parity, expected", [(Parity.ALL, -24), (Parity.ODD, Fraction(40, 3)), (Parity.EVEN, Fraction(-112, 3))]
)
def test_zeta1_at_minus_one(parity: Parity, expected: Fraction) -> None:
    """Test zeta1 at s = -1, kx = 1/2: both tracks agree."""
    result = zeta1_special(SpecialValuePoint(1, 1, HALF, parity))
    assert result.continuation_value == expected
    assert result.printed_value == expected
    assert result.agrees


def test_zeta1_tracks_agree_where_finite() -> None:
    """Test the printed zeta1 forms agree with the continuation for odd m and every parity."""
    for m, (k, x), parity in itertools.product((1, 3, 5, 7), [(1, HALF), (2, Fraction(1, 6)), (3, Fraction(-1, 12))], Parity):
        result = zeta1_special(SpecialValuePoint(m, k, x, parity))
        assert result.agrees, result


def test_zeta1_pole() -> None:
    """Test zeta(-m) = 0 for even m >= 2 gives a pole on both tracks."""
    result = zeta1_special(SpecialValuePoint(2, 2, Fraction(1, 5)))
    assert result.continuation_value is Outcome.POLE
    assert result.printed_value is Outcome.POLE
    assert result.agrees


def test_zeta1_at_kx_zero_is_a_pole() -> None:
    """Test kx = 0 with zeta(-m) = 0 is a pole on both tracks rather than 0/0 = 0."""
    for m, k in [(2, 1), (4, 2), (8, 3)]:
        result = zeta1_special(SpecialValuePoint(m, k, Fraction(0)))
        assert result.continuation_value is Outcome.POLE
        assert result.printed_value is Outcome.POLE
        assert result.agrees
    assert zeta1_special(SpecialValuePoint(3, 2, Fraction(0))).continuation_value == 0


def test_zeta1_at_zero() -> None:
    """Test s = 0: the full value agrees, the parity forms are not printed."""
    result = zeta1_special(SpecialValuePoint(0, 1, HALF))
    assert result.continuation_value == -2
    assert not isinstance(result.printed_value, Outcome)
    logger.info(f"zeta1(1/2:1,0): continuation {result.continuation_value}, printed {result.printed_value}")
    assert zeta1_special(SpecialValuePoint(0, 1, HALF, Parity.ODD)).printed_value is Outcome.NOT_PRINTED


def test_zeta2_at_minus_one() -> None:
    """Test zeta2 at s = -1: continuation vanishes with zeta(-2), the printed value does not."""
    result = zeta2_special(SpecialValuePoint(1, 1, HALF))
    assert result.continuation_value == 0
    assert result.printed_value == -12
    assert not result.agrees


def test_zeta2_even_m_is_a_pole() -> None:
    """Test zeta2 at s = -2 is a pole on both tracks."""
    result = zeta2_special(SpecialValuePoint(2, 1, HALF))
    assert result.continuation_value is Outcome.POLE
    assert result.printed_value is Outcome.POLE


def test_zeta2_not_printed_at_zero() -> None:
    """Test the printed zeta2 forms have no value at m = 0."""
    for parity in Parity:
        assert zeta2_special(SpecialValuePoint(0, 1, HALF, parity)).printed_value is Outcome.NOT_PRINTED


def test_zeta1_eulerian_form() -> None:
    """Test the Eulerian form equals the printed Apostol-Bernoulli form."""
    for m in (1, 3, 5):
        for k, x in [(1, HALF), (2, Fraction(1, 6)), (3, Fraction(-1, 12))]:
            assert zeta1_special_eulerian(m, k, x) == zeta1_special(SpecialValuePoint(m, k, x)).printed_value
    with pytest.raises(PoleError):
        zeta1_special_eulerian(2, 1, HALF)


def test_parity_additivity_zeta1() -> None:
    """Test printed zeta1 odd + even = all wherever finite."""
    check = parity_additivity(Family.ZETA1, 1, 1, HALF)
    assert (check.odd, check.even, check.all) == (Fraction(40, 3), Fraction(-112, 3), -24)
    assert check.applicable and check.holds
    assert not parity_additivity(Family.ZETA1, 0, 1, HALF).applicable


def test_parity_additivity_zeta2() -> None:
    """Test the printed zeta2 parity forms do not split the printed full value at m = 1."""
    check = parity_additivity(Family.ZETA2, 1, 1, HALF)
    assert (check.odd, check.even, check.all) == (Fraction(20, 3), Fraction(56, 3), -12)
    assert check.applicable
    assert not check.holds


def test_special_value_family_dispatch() -> None:
    """Test the family can be given by value."""
    p = SpecialValuePoint(3, 2, Fraction(1, 3))
    assert special_value("zeta1", p) == zeta1_special(p)
    assert special_value(Family.ZETA2, p).family is Family.ZETA2
    with pytest.raises(ValueError):
        special_value("zeta3", p)
