"""
Double precision evaluation of the Dirichlet series and polylogarithms in their convergence regions, with certified
truncation bounds, and the identity checker for the product theorems of zeta1 and zeta2.

Each numeric evaluation returns (value, TruncationParams). An Estimate pairs a value with an error bound and propagates
it through sums, products and quotients, so a check compares two Estimates and its tolerance is the sum of their
bounds plus a rounding slack of a few units of double precision scaled by the magnitude of the summed terms.
"""
import logging
import math
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Mapping, Optional, Tuple, Union

import numpy as np

from pylyndon import DomainError
from pylyndon.closed_forms import Parity
from pylyndon.common import check_complex, format_complex
from pylyndon.numth import _check_positive, mobius, mobius_multiple_series_factor, sieve_upto
from pylyndon.settings import get_settings

logger = logging.getLogger("pylyndon")

EPSILON = sys.float_info.epsilon


class IdentityId(Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    C1 = "C1"
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    LAM1 = "LAM1"
    LAM2 = "LAM2"
    R1 = "R1"
    PRIME = "PRIME"
    EIS = "EIS"


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class TruncationParams:
    """Truncation point, certified bound on the omitted tail and sum of |terms| of the partial sum."""

    terms: int
    tail_bound: float
    magnitude: float = 0.0


@dataclass(frozen=True)
class Estimate:
    """A computed value with a bound on its distance to the true value."""

    value: complex
    bound: float = 0.0
    magnitude: float = 0.0

    @classmethod
    def exact(cls, value: complex) -> "Estimate":
        return cls(complex(value), 0.0, abs(value))

    @classmethod
    def from_series(cls, result: Tuple[complex, TruncationParams]) -> "Estimate":
        value, params = result
        return cls(complex(value), params.tail_bound, params.magnitude)

    @staticmethod
    def _lift(other: Union["Estimate", complex, float, int]) -> "Estimate":
        return other if isinstance(other, Estimate) else Estimate.exact(other)

    def __add__(self, other: Union["Estimate", complex, float, int]) -> "Estimate":
        other = self._lift(other)
        return Estimate(self.value + other.value, self.bound + other.bound, self.magnitude + other.magnitude)

    __radd__ = __add__

    def __neg__(self) -> "Estimate":
        return Estimate(-self.value, self.bound, self.magnitude)

    def __sub__(self, other: Union["Estimate", complex, float, int]) -> "Estimate":
        return self + (-self._lift(other))

    def __rsub__(self, other: Union["Estimate", complex, float, int]) -> "Estimate":
        return self._lift(other) - self

    def __mul__(self, other: Union["Estimate", complex, float, int]) -> "Estimate":
        other = self._lift(other)
        bound = abs(self.value) * other.bound + abs(other.value) * self.bound + self.bound * other.bound
        return Estimate(self.value * other.value, bound, self.magnitude * other.magnitude)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Estimate", complex, float, int]) -> "Estimate":
        other = self._lift(other)
        denominator = abs(other.value)
        if denominator == 0:
            raise DomainError("division by an estimate of zero")
        if other.bound >= denominator:
            bound = math.inf
        else:
            bound = (self.bound * denominator + abs(self.value) * other.bound) / ((denominator - other.bound) * denominator)
        magnitude = self.magnitude / denominator + abs(self.value) * other.magnitude / denominator**2
        return Estimate(self.value / other.value, bound, magnitude)

    def __rtruediv__(self, other: Union["Estimate", complex, float, int]) -> "Estimate":
        return self._lift(other) / self


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check at one point."""

    identity_id: IdentityId
    point: Dict[str, Any]
    lhs: complex
    rhs: complex
    residual: float
    tolerance: float
    tail_bound: float
    verdict: Verdict
    terms: int
    hypothesis: str = "printed"
    alternative: Optional["IdentityReport"] = field(default=None)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def describe(self) -> str:
        """One line summary: id, point, residual against tolerance and verdict."""
        point = ", ".join(
            f"{key}={format_complex(value) if isinstance(value, complex) else value}" for key, value in self.point.items()
        )
        return (
            f"{self.identity_id.value} ({point}) N={self.terms}:"
            f" lhs={format_complex(self.lhs)} rhs={format_complex(self.rhs)}"
            f" residual={self.residual:.3e} tolerance={self.tolerance:.3e} {self.verdict.value}"
        )


def build_report(
    identity_id: IdentityId,
    point: Mapping[str, Any],
    lhs: Estimate,
    rhs: Estimate,
    terms: int,
    hypothesis: str = "printed",
    alternative: Optional[IdentityReport] = None,
) -> IdentityReport:
    """Compare two estimates: pass iff the residual is within the summed bounds plus the rounding slack."""
    ulps = get_settings().series.rounding_ulps
    residual = abs(lhs.value - rhs.value)
    tail_bound = lhs.bound + rhs.bound
    tolerance = tail_bound + ulps * EPSILON * max(lhs.magnitude, rhs.magnitude)
    if not math.isfinite(tolerance):
        verdict = Verdict.INCONCLUSIVE
    elif residual <= tolerance:
        verdict = Verdict.PASS
    else:
        verdict = Verdict.FAIL
    report = IdentityReport(
        identity_id=identity_id,
        point=dict(point),
        lhs=lhs.value,
        rhs=rhs.value,
        residual=residual,
        tolerance=tolerance,
        tail_bound=tail_bound,
        verdict=verdict,
        terms=terms,
        hypothesis=hypothesis,
        alternative=alternative,
    )
    logger.debug(report.describe())
    return report


def power_geometric_tail(power: float, ratio: float, terms: int) -> float:
    """Bound sum_{n>N} n^power ratio^n by (N+1)^power ratio^(N+1)/(1 - rho), rho = ((N+2)/(N+1))^power ratio.

    Returns inf when rho >= 1.
    """
    if ratio == 0:
        return 0.0
    rho = ((terms + 2) / (terms + 1)) ** power * ratio
    if rho >= 1:
        return math.inf
    return (terms + 1) ** power * ratio ** (terms + 1) / (1 - rho)


def power_tail(exponent: float, terms: int, parity: Parity = Parity.ALL) -> float:
    """Bound sum_{n>N} n^-exponent over the parity class, exponent > 1."""
    if parity is Parity.ALL:
        return terms ** (1 - exponent) / (exponent - 1)
    # every other term of a decreasing sequence starting at or after N+1
    return (terms + 1) ** -exponent + (terms + 1) ** (1 - exponent) / (2 * (exponent - 1))


def _check_terms(terms: Optional[int], default: Optional[int] = None) -> int:
    if terms is None:
        terms = get_settings().series.terms if default is None else default
    return _check_positive(terms, "terms")


def _check_s(s: complex, abscissa: int, what: str) -> complex:
    s = check_complex(s, "s")
    if s.real <= abscissa:
        raise DomainError(f"{what} requires Re(s)>{abscissa}, got s={format_complex(s)}")
    return s


def _check_kx(k: int, x: float) -> float:
    k = _check_positive(k, "k")
    x = check_complex(x, "x")
    if x.imag:
        raise DomainError(f"x must be real, got {format_complex(x)}")
    kx = k * x.real
    if abs(kx) >= 1:
        raise DomainError(f"requires |kx|<1, got kx={kx}")
    return kx


def _dirichlet_weights(n: np.ndarray, s: complex) -> np.ndarray:
    return np.exp(-s * np.log(n))


def _fsum(values: np.ndarray) -> complex:
    return complex(math.fsum(values.real), math.fsum(values.imag))


def _partition_sum(terms: np.ndarray, parity: Parity) -> Tuple[complex, float]:
    """Sum terms[n-1] over n of the parity class; the full sum is the odd sum plus the even sum."""
    odd, even = terms[0::2], terms[1::2]
    if parity is Parity.ODD:
        return _fsum(odd), math.fsum(np.abs(odd))
    if parity is Parity.EVEN:
        return _fsum(even), math.fsum(np.abs(even))
    return _fsum(odd) + _fsum(even), math.fsum(np.abs(terms))


def polylog_num(
    s: complex, w: complex, terms: Optional[int] = None, parity: Parity = Parity.ALL
) -> Tuple[complex, TruncationParams]:
    """Partial sum of Li_s(w) = sum w^n/n^s over n <= N of the parity class.

    :param w: complex argument with |w| < 1.
    """
    s, w = check_complex(s, "s"), check_complex(w, "w")
    terms = _check_terms(terms)
    parity = Parity(parity)
    ratio = abs(w)
    if ratio >= 1:
        raise DomainError(f"polylogarithm series requires |w|<1, got |w|={ratio}")
    if w == 0:
        return 0j, TruncationParams(terms, 0.0, 0.0)
    n = np.arange(1, terms + 1, dtype=np.float64)
    values = np.power(w, n) * _dirichlet_weights(n, s)
    value, magnitude = _partition_sum(values, parity)
    return value, TruncationParams(terms, power_geometric_tail(max(0.0, -s.real), ratio, terms), magnitude)


def odd_polylog_num(s: complex, w: complex, terms: Optional[int] = None) -> Tuple[complex, TruncationParams]:
    """sum over odd n of w^n/n^s, the odd part of Li_s(w)."""
    return polylog_num(s, w, terms, Parity.ODD)


def riemann_zeta_num(s: complex, terms: Optional[int] = None) -> Tuple[complex, TruncationParams]:
    """zeta(s) for Re(s) > 1 as sum_{n<=N} n^-s + N^(1-s)/(s-1)."""
    s = _check_s(s, 1, "zeta(s)")
    terms = _check_terms(terms, get_settings().series.slow_terms)
    n = np.arange(1, terms + 1, dtype=np.float64)
    values = _dirichlet_weights(n, s)
    value = _fsum(values) + terms ** (1 - s) / (s - 1)
    sigma = s.real
    # Euler-Maclaurin: |zeta(s) - value| <= N^-sigma/2 + |s| N^-sigma/(2 sigma)
    tail_bound = terms**-sigma * (1 + abs(s) / sigma) / 2
    return value, TruncationParams(terms, tail_bound, math.fsum(np.abs(values)))


def _divisor_coefficients(kx: float, terms: int, weights: np.ndarray) -> np.ndarray:
    """c[n] = sum_{d|n} weights[n/d] kx^d for n = 1..N, index 0 unused."""
    coefficients = np.zeros(terms + 1, dtype=np.float64)
    power = 1.0
    for d in range(1, terms + 1):
        power *= kx
        if power == 0.0:
            break
        coefficients[d::d] += weights[1 : terms // d + 1] * power
    return coefficients


def lyndon_terms_num(k: int, x: float, terms: int) -> np.ndarray:
    """n L_k(x:n) = sum_{d|n} mu(n/d) (kx)^d for n = 1..N."""
    kx = _check_kx(k, x)
    sieve = sieve_upto(terms)
    return _divisor_coefficients(kx, terms, sieve.mu[: terms + 1].astype(np.float64))[1:]


def necklace_terms_num(k: int, x: float, terms: int) -> np.ndarray:
    """n N_k(x:n) = sum_{d|n} phi(n/d) (kx)^d for n = 1..N."""
    kx = _check_kx(k, x)
    sieve = sieve_upto(terms)
    return _divisor_coefficients(kx, terms, sieve.phi[: terms + 1].astype(np.float64))[1:]


def zeta1_num(
    k: int, x: float, s: complex, terms: Optional[int] = None, parity: Parity = Parity.ALL
) -> Tuple[complex, TruncationParams]:
    """zeta1(x:k,s) = sum n L_k(x:n)/n^s over n <= N of the parity class, Re(s) > 1 and |kx| < 1."""
    kx = _check_kx(k, x)
    s = _check_s(s, 1, "zeta1")
    terms = _check_terms(terms)
    parity = Parity(parity)
    n = np.arange(1, terms + 1, dtype=np.float64)
    values = lyndon_terms_num(k, x, terms) * _dirichlet_weights(n, s)
    value, magnitude = _partition_sum(values, parity)
    ratio = abs(kx)
    # |n L_k(x:n)| <= sum_{d>=1} |kx|^d
    tail_bound = ratio / (1 - ratio) * power_tail(s.real, terms, parity)
    return value, TruncationParams(terms, tail_bound, magnitude)


def zeta2_num(
    k: int, x: float, s: complex, terms: Optional[int] = None, parity: Parity = Parity.ALL
) -> Tuple[complex, TruncationParams]:
    """zeta2(x:k,s) = sum n N_k(x:n)/n^s over n <= N of the parity class, Re(s) > 2 and |kx| < 1."""
    kx = _check_kx(k, x)
    s = _check_s(s, 2, "zeta2")
    terms = _check_terms(terms)
    parity = Parity(parity)
    n = np.arange(1, terms + 1, dtype=np.float64)
    values = necklace_terms_num(k, x, terms) * _dirichlet_weights(n, s)
    value, magnitude = _partition_sum(values, parity)
    # |n N_k(x:n)| <= n |kx|
    tail_bound = abs(kx) * power_tail(s.real - 1, terms, parity)
    return value, TruncationParams(terms, tail_bound, magnitude)


def mu_phi_odd_num(which: str, s: complex, terms: Optional[int] = None) -> Tuple[complex, TruncationParams]:
    """sum over odd n <= N of mu(n)/n^s (which="mobius", Re(s) > 1) or phi(n)/n^s (which="totient", Re(s) > 2)."""
    terms = _check_terms(terms, get_settings().series.slow_terms)
    sieve = sieve_upto(terms)
    if which == "mobius":
        s = _check_s(s, 1, "odd Möbius series")
        weights, exponent = sieve.mu[1 : terms + 1], s.real
    elif which == "totient":
        s = _check_s(s, 2, "odd totient series")
        weights, exponent = sieve.phi[1 : terms + 1], s.real - 1
    else:
        raise DomainError(f"which must be 'mobius' or 'totient', got {which!r}")
    n = np.arange(1, terms + 1, dtype=np.float64)
    values = weights.astype(np.float64) * _dirichlet_weights(n, s)
    value, magnitude = _partition_sum(values, Parity.ODD)
    return value, TruncationParams(terms, power_tail(exponent, terms, Parity.ODD), magnitude)


def mobius_multiple_series_num(m: int, s: complex, terms: Optional[int] = None) -> Tuple[complex, TruncationParams]:
    """sum_{n<=N} mu(mn)/n^s for Re(s) > 1."""
    m = _check_positive(m, "m")
    s = _check_s(s, 1, "Möbius multiple series")
    terms = _check_terms(terms, get_settings().series.slow_terms)
    sieve = sieve_upto(m * terms)
    n = np.arange(1, terms + 1, dtype=np.float64)
    values = sieve.mu[m : m * terms + 1 : m].astype(np.float64) * _dirichlet_weights(n, s)
    value, magnitude = _partition_sum(values, Parity.ALL)
    return value, TruncationParams(terms, power_tail(s.real, terms), magnitude)


def _slow_terms(terms: int) -> int:
    return max(terms, get_settings().series.slow_terms)


def _zeta(s: complex, terms: int) -> Estimate:
    return Estimate.from_series(riemann_zeta_num(s, _slow_terms(terms)))


def _polylog(s: complex, w: float, terms: int) -> Estimate:
    return Estimate.from_series(polylog_num(s, w, terms))


def _odd_part(s: complex, kx: float, terms: int) -> Estimate:
    """Li_s(kx) - 2^-s Li_s(k^2 x^2), the odd part of the polylogarithm through the full series."""
    return _polylog(s, kx, terms) - 2**-s * _polylog(s, kx * kx, terms)


SeriesChecks = Tuple[Estimate, Estimate, Optional[Estimate]]


def _check_t1(s: complex, k: int, x: float, terms: int) -> SeriesChecks:
    lhs = _zeta(s, terms) * Estimate.from_series(zeta1_num(k, x, s, terms))
    return lhs, _polylog(s, k * x, terms), None


def _check_t2(s: complex, k: int, x: float, terms: int) -> SeriesChecks:
    lhs = _zeta(s, terms) * Estimate.from_series(zeta2_num(k, x, s, terms))
    return lhs, _zeta(s - 1, terms) * _polylog(s, k * x, terms), None


def _check_t3(s: complex, k: int, x: float, terms: int) -> SeriesChecks:
    kx = k * x
    lhs = _zeta(s, terms) * Estimate.from_series(zeta1_num(k, x, s, terms, Parity.ODD))
    rhs = (2**s * _polylog(s, kx, terms) - _polylog(s, kx * kx, terms)) / (2**s - 1)
    return lhs, rhs, None


def _check_t4(s: complex, k: int, x: float, terms: int) -> SeriesChecks:
    lhs = 2**s * _zeta(s, terms) * Estimate.from_series(zeta2_num(k, x, s, terms, Parity.ODD))
    odd_part = _odd_part(s, k * x, terms)
    rhs = (2**s - 1) * _zeta(s - 1, terms) * odd_part
    alternative = 2**s * (1 - 2 ** (1 - s)) * _zeta(s - 1, terms) * odd_part / (1 - 2**-s)
    return lhs, rhs, alternative


def _check_t5(s: complex, k: int, x: float, terms: int) -> SeriesChecks:
    kx = k * x
    lhs = _zeta(s, terms) * Estimate.from_series(zeta1_num(k, x, s, terms, Parity.EVEN))
    rhs = (_polylog(s, kx * kx, terms) - _polylog(s, kx, terms)) / (2**s - 1)
    return lhs, rhs, None


def _check_t6(s: complex, k: int, x: float, terms: int) -> SeriesChecks:
    kx = k * x
    lhs = 2**s * _zeta(s, terms) * Estimate.from_series(zeta2_num(k, x, s, terms, Parity.EVEN))
    polylog, polylog_square = _polylog(s, kx, terms), _polylog(s, kx * kx, terms)
    rhs = _zeta(s - 1, terms) * (polylog - (1 - 2**s) / 2**s * polylog_square)
    odd_factor = (1 - 2 ** (1 - s)) / (1 - 2**-s)
    alternative = 2**s * _zeta(s - 1, terms) * (polylog - odd_factor * _odd_part(s, kx, terms))
    return lhs, rhs, alternative


def _check_c1(s: complex, k: int, x: float, terms: int) -> SeriesChecks:
    lhs = _zeta(s - 1, terms) * Estimate.from_series(zeta1_num(k, x, s, terms))
    return lhs, Estimate.from_series(zeta2_num(k, x, s, terms)), None


def _check_l2(s: complex, k: int, x: float, terms: int) -> SeriesChecks:
    lhs = Estimate.from_series(zeta1_num(k, x, s, terms, Parity.ODD))
    factor = Estimate.from_series(mu_phi_odd_num("mobius", s, _slow_terms(terms)))
    return lhs, factor * Estimate.from_series(odd_polylog_num(s, k * x, terms)), None


def _check_l3(s: complex, k: int, x: float, terms: int) -> SeriesChecks:
    lhs = Estimate.from_series(zeta2_num(k, x, s, terms, Parity.ODD))
    factor = Estimate.from_series(mu_phi_odd_num("totient", s, _slow_terms(terms)))
    return lhs, factor * Estimate.from_series(odd_polylog_num(s, k * x, terms)), None


SERIES_CHECKS: Dict[IdentityId, Tuple[int, Callable[[complex, int, float, int], SeriesChecks]]] = {
    IdentityId.T1: (1, _check_t1),
    IdentityId.T2: (2, _check_t2),
    IdentityId.T3: (1, _check_t3),
    IdentityId.T4: (2, _check_t4),
    IdentityId.T5: (1, _check_t5),
    IdentityId.T6: (2, _check_t6),
    IdentityId.C1: (2, _check_c1),
    IdentityId.L2: (1, _check_l2),
    IdentityId.L3: (2, _check_l3),
}

SERIES_IDENTITIES = (*SERIES_CHECKS, IdentityId.L1)

ALTERNATIVE_HYPOTHESIS = "corrected-odd-totient"


def _verify_mobius_multiple(point: Mapping[str, Any], terms: int) -> IdentityReport:
    s = _check_s(point["s"], 1, "L1")
    m = _check_positive(point.get("m", 2), "m")
    lhs = Estimate.from_series(mobius_multiple_series_num(m, s, _slow_terms(terms)))
    rhs = mobius(m) * mobius_multiple_series_factor(m, s) / _zeta(s, terms)
    return build_report(IdentityId.L1, {"s": s, "m": m}, lhs, rhs, terms)


def verify_identity(
    identity_id: Union[IdentityId, str], point: Mapping[str, Any], terms: Optional[int] = None
) -> IdentityReport:
    """Check one Dirichlet series identity at one point.

    :param identity_id: one of T1..T6, C1, L1, L2, L3.
    :param point: s, k and x (s and m for L1).
    :param terms: truncation N of the definition level sums.
    """
    try:
        identity_id = IdentityId(identity_id)
    except ValueError:
        raise DomainError(f"unknown identity id {identity_id!r}")
    terms = _check_terms(terms)
    if identity_id is IdentityId.L1:
        return _verify_mobius_multiple(point, terms)
    if identity_id not in SERIES_CHECKS:
        raise DomainError(f"{identity_id.value} is not a Dirichlet series identity")
    abscissa, check = SERIES_CHECKS[identity_id]
    s = _check_s(point["s"], abscissa, identity_id.value)
    k = _check_positive(point["k"], "k")
    x = float(point["x"])
    _check_kx(k, x)
    lhs, rhs, alternative_rhs = check(s, k, x, terms)
    normalized = {"s": s, "k": k, "x": x}
    alternative = None
    if alternative_rhs is not None:
        alternative = build_report(identity_id, normalized, lhs, alternative_rhs, terms, ALTERNATIVE_HYPOTHESIS)
    return build_report(identity_id, normalized, lhs, rhs, terms, alternative=alternative)
