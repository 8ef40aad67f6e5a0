"""
Special values of the Lyndon and necklace Dirichlet series zeta1(x:k,s) and zeta2(x:k,s) at s = -m.

Every value is computed on two tracks:

- continuation: the value forced by zeta(s) zeta1 = Li_s(kx) and zeta(s) zeta2 = zeta(s-1) Li_s(kx) (and their
  odd/even splittings) from the exact values of zeta and Li at non-positive integers;
- printed: the closed form in Bernoulli and Apostol-Bernoulli numbers as it is usually stated.

Results carry both values and an agreement flag. A vanishing denominator is reported as Outcome.POLE.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Tuple, Union

from pylyndon import DomainError, PoleError
from pylyndon.bernoulli import apostol_bernoulli_rf, bernoulli_number, eulerian, polylog_neg, zeta_neg
from pylyndon.numth import ExactRational

logger = logging.getLogger("pylyndon")


class Parity(Enum):
    ALL = "all"
    ODD = "odd"
    EVEN = "even"


class Family(Enum):
    ZETA1 = "zeta1"
    ZETA2 = "zeta2"


class Outcome(Enum):
    POLE = "pole"
    NOT_PRINTED = "not-printed"

    def __str__(self) -> str:
        return self.value


SpecialValue = Union[ExactRational, Outcome]


@dataclass(frozen=True)
class SpecialValuePoint:
    """s = -m with alphabet size k and rational x, restricted to |kx| < 1."""

    m: int
    k: int
    x: Fraction
    parity: Parity = Parity.ALL

    def __post_init__(self) -> None:
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 0:
            raise DomainError(f"m must be a non-negative integer, got {self.m!r}")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "parity", Parity(self.parity))
        if self.kx == 1:
            raise DomainError("kx = 1 is a pole of the Apostol-Bernoulli numbers; requires |kx|<1")
        if abs(self.kx) >= 1:
            raise DomainError(f"requires |kx|<1, got kx={self.kx}")

    @property
    def kx(self) -> Fraction:
        return self.k * self.x


@dataclass(frozen=True)
class SpecialValueResult:
    family: Family
    point: SpecialValuePoint
    continuation_value: SpecialValue
    printed_value: SpecialValue

    @property
    def agrees(self) -> bool:
        """Both finite and equal, or both poles."""
        continuation, printed = self.continuation_value, self.printed_value
        if isinstance(continuation, Outcome) or isinstance(printed, Outcome):
            return continuation is Outcome.POLE and printed is Outcome.POLE
        return continuation == printed


def _ratio(numerator: ExactRational, denominator: ExactRational) -> SpecialValue:
    """numerator/denominator, POLE on any zero denominator (kx = 0 included)."""
    if denominator == 0:
        return Outcome.POLE
    return Fraction(numerator) / denominator


def _polylog(m: int, lam: Fraction) -> ExactRational:
    """Li_{-m}(lam) for m >= 0, with Li_0(lam) = lam/(1-lam)."""
    if m == 0:
        return lam / (1 - lam)
    return polylog_neg(m, lam)


def _apostol(m: int, lam: Fraction) -> ExactRational:
    return apostol_bernoulli_rf(m + 1).evaluate(lam)


def _zeta1_continuation(m: int, lam: Fraction, parity: Parity) -> SpecialValue:
    li, li_square = _polylog(m, lam), _polylog(m, lam * lam)
    if parity is Parity.ALL:
        return _ratio(li, zeta_neg(m))
    scale = Fraction(1, 2**m) - 1
    if parity is Parity.ODD:
        return _ratio(Fraction(1, 2**m) * li - li_square, scale * zeta_neg(m))
    return _ratio(li_square - li, scale * zeta_neg(m))


def _zeta1_printed(m: int, lam: Fraction, parity: Parity) -> SpecialValue:
    apostol = _apostol(m, lam)
    if parity is Parity.ALL:
        return _ratio(apostol, bernoulli_number(m + 1))
    if m == 0:
        return Outcome.NOT_PRINTED
    apostol_square = _apostol(m, lam * lam)
    denominator = (1 - 2**m) * bernoulli_number(m + 1)
    if parity is Parity.ODD:
        return _ratio(apostol - 2**m * apostol_square, denominator)
    return _ratio(2**m * (apostol_square - apostol), denominator)


def _zeta2_continuation(m: int, lam: Fraction, parity: Parity) -> SpecialValue:
    li = _polylog(m, lam)
    full = _ratio(zeta_neg(m + 1) * li, zeta_neg(m))
    if parity is Parity.ALL:
        return full
    li_square = _polylog(m, lam * lam)
    odd = _ratio(zeta_neg(m + 1) * (1 - 2 ** (m + 1)) * (li - 2**m * li_square), zeta_neg(m) * (1 - 2**m))
    if parity is Parity.ODD:
        return odd
    if isinstance(full, Outcome) or isinstance(odd, Outcome):
        return Outcome.POLE
    return full - odd


def _zeta2_printed(m: int, lam: Fraction, parity: Parity) -> SpecialValue:
    if m == 0:
        return Outcome.NOT_PRINTED
    apostol = _apostol(m, lam)
    denominator = m * bernoulli_number(m + 1)
    if parity is Parity.ALL:
        return _ratio(-bernoulli_number(m) * apostol, denominator)
    apostol_square = _apostol(m, lam * lam)
    if parity is Parity.ODD:
        return _ratio((1 - 2**m) * bernoulli_number(m) * (2**m * apostol_square - apostol), denominator)
    return _ratio(2**m * bernoulli_number(m) * (apostol - (2**m - 1) * apostol_square), denominator)


Track = Callable[[int, Fraction, Parity], SpecialValue]

TRACKS: Dict[Family, Tuple[Track, Track]] = {
    Family.ZETA1: (_zeta1_continuation, _zeta1_printed),
    Family.ZETA2: (_zeta2_continuation, _zeta2_printed),
}


def special_value(family: Family, p: SpecialValuePoint) -> SpecialValueResult:
    """Evaluate both tracks of one family at one point."""
    family = Family(family)
    continuation, printed = TRACKS[family]
    result = SpecialValueResult(
        family=family,
        point=p,
        continuation_value=continuation(p.m, p.kx, p.parity),
        printed_value=printed(p.m, p.kx, p.parity),
    )
    logger.debug(
        f"{family.value}/{p.parity.value} m={p.m} kx={p.kx}: continuation {result.continuation_value},"
        f" printed {result.printed_value}, agrees {result.agrees}"
    )
    return result


def zeta1_special(p: SpecialValuePoint) -> SpecialValueResult:
    """zeta1(x:k,-m): continuation Li_{-m}(kx)/zeta(-m) against the printed B_{m+1}(kx)/B_{m+1}."""
    return special_value(Family.ZETA1, p)


def zeta2_special(p: SpecialValuePoint) -> SpecialValueResult:
    """zeta2(x:k,-m): continuation zeta(-m-1) Li_{-m}(kx)/zeta(-m) against the printed -B_m B_{m+1}(kx)/(m B_{m+1})."""
    return special_value(Family.ZETA2, p)


def zeta1_special_eulerian(m: int, k: int, x: Fraction) -> ExactRational:
    """Printed zeta1(x:k,-m) through Eulerian numbers: -(m+1)/((1-kx)^(m+1) B_{m+1}) sum_j A(m,j) (kx)^(m-j).

    :raises PoleError: for even m >= 2, where B_{m+1} = 0.
    """
    p = SpecialValuePoint(m, k, x)
    b = bernoulli_number(m + 1)
    if b == 0:
        raise PoleError(f"B_{m + 1} = 0: the Eulerian form of zeta1 at s=-{m} has a pole")
    lam = p.kx
    total = sum((eulerian(m, j) * lam ** (m - j) for j in range(m + 1)), Fraction(0))
    return -(m + 1) * total / ((1 - lam) ** (m + 1) * b)


@dataclass(frozen=True)
class ParityAdditivityResult:
    """Printed odd + even compared with printed all for one family at s = -m."""

    family: Family
    m: int
    k: int
    x: Fraction
    odd: SpecialValue
    even: SpecialValue
    all: SpecialValue

    @property
    def applicable(self) -> bool:
        return not any(isinstance(value, Outcome) for value in (self.odd, self.even, self.all))

    @property
    def holds(self) -> bool:
        return self.applicable and self.odd + self.even == self.all


def parity_additivity(family: Family, m: int, k: int, x: Fraction) -> ParityAdditivityResult:
    """Check that the printed parity forms split the printed full value."""
    family = Family(family)
    values = {parity: special_value(family, SpecialValuePoint(m, k, x, parity)).printed_value for parity in Parity}
    result = ParityAdditivityResult(
        family=family, m=m, k=k, x=Fraction(x), odd=values[Parity.ODD], even=values[Parity.EVEN], all=values[Parity.ALL]
    )
    if result.applicable and not result.holds:
        logger.debug(f"{family.value} m={m} kx={k * Fraction(x)}: printed odd + even != printed all")
    return result
