"""
Lambert series of the Lyndon counts and the cusp part of the Eisenstein series.

H(n, x) = n sum_k L_k(n) x^k/(1 - x^k) expands through the Lyndon count formula into Möbius combinations of the cusp
sums C(d) = sum_a a^d q^a/(1 - q^a), and C(k-1) is, up to the factor 2(-2 pi i)^k/(k-1)!, the non-constant part
of the Fourier expansion of the weight k Eisenstein series at r = 0.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

import numpy as np

from pylyndon import DomainError
from pylyndon.common import check_complex, format_complex
from pylyndon.numth import _check_positive, divisors, is_prime, mobius
from pylyndon.series import (
    Estimate,
    IdentityId,
    IdentityReport,
    TruncationParams,
    build_report,
    power_geometric_tail,
)
from pylyndon.settings import get_settings
from pylyndon.words import lyndon_count

logger = logging.getLogger("pylyndon")


@dataclass(frozen=True)
class UpperHalfPoint:
    """z in the upper half plane with its nome q = e^(2 pi i z)."""

    z: complex
    q: complex = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        z = check_complex(self.z, "z")
        if z.imag <= 0:
            raise DomainError(f"z must lie in the upper half plane, got z={format_complex(z)}")
        q = cmath.exp(2j * cmath.pi * z)
        cap = get_settings().lambert.max_modulus
        if abs(q) > cap:
            raise DomainError(f"requires |q|<={cap}, got |q|={abs(q):.6g} at z={format_complex(z)}")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "q", q)


def _check_terms(terms: Optional[int]) -> int:
    return _check_positive(get_settings().lambert.terms if terms is None else terms, "terms")


def _check_nome(x: Union[complex, float]) -> complex:
    x = check_complex(x, "x")
    cap = get_settings().lambert.max_modulus
    if abs(x) > cap:
        raise DomainError(f"requires |x|<={cap}, got |x|={abs(x):.6g}")
    return x


def _lambert_sum(coefficients: np.ndarray, x: complex) -> Tuple[complex, float]:
    """sum_{n>=1} c_n x^n/(1 - x^n) over the given coefficients, and the sum of |terms|."""
    if x == 0:
        return 0j, 0.0
    n = np.arange(1, len(coefficients) + 1, dtype=np.float64)
    powers = np.power(x, n)
    values = coefficients * powers / (1 - powers)
    return complex(math.fsum(values.real), math.fsum(values.imag)), math.fsum(np.abs(values))


def _lyndon_weights(k: int, ky: float, terms: int) -> np.ndarray:
    """n L_k(y:n) = sum_{d|n} mu(n/d) (ky)^d for n = 1..K; exact counts when ky = k."""
    if ky == k:
        return np.array([float(n * lyndon_count(k, n)) for n in range(1, terms + 1)])
    return np.array([math.fsum(mobius(n // d) * ky**d for d in divisors(n)) for n in range(1, terms + 1)])


def lambert_lyndon_check(k: int, x: float, terms: Optional[int] = None, y: Optional[float] = None) -> IdentityReport:
    """sum_n n L_k(y:n) x^n/(1 - x^n) against kyx/(1 - kyx), y = 1 unless given.

    :param terms: truncation K of the Lambert series.
    :param y: deformation parameter; when given the check is LAM2, otherwise LAM1.
    """
    k = _check_positive(k, "k")
    terms = _check_terms(terms)
    x = float(x)
    if not abs(x) < 1:
        raise DomainError(f"requires |x|<1, got x={x}")
    identity_id = IdentityId.LAM1 if y is None else IdentityId.LAM2
    ky = float(k if y is None else k * float(y))
    if abs(ky * x) >= 1:
        raise DomainError(f"requires |kyx|<1, got kyx={ky * x}" if y is not None else f"requires |kx|<1, got kx={k * x}")
    value, magnitude = _lambert_sum(_lyndon_weights(k, ky, terms), x)
    if y is None:
        # n L_k(n) <= k^n
        tail = (k * abs(x)) ** (terms + 1) / ((1 - k * abs(x)) * (1 - abs(x)))
    else:
        tail = power_geometric_tail(1, max(1.0, abs(ky)) * abs(x), terms) / (1 - abs(x))
    lhs = Estimate(value, tail, magnitude)
    rhs = Estimate.exact(ky * x / (1 - ky * x))
    point = {"k": k, "x": x} if y is None else {"k": k, "x": x, "y": float(y)}
    return build_report(identity_id, point, lhs, rhs, terms)


def h_num(n: int, x: Union[complex, float], terms: Optional[int] = None) -> Tuple[complex, TruncationParams]:
    """Partial sum of H(n, x) = n sum_{k<=K} L_k(n) x^k/(1 - x^k) over alphabet sizes k."""
    n = _check_positive(n)
    x = _check_nome(x)
    terms = _check_terms(terms)
    weights = np.array([float(n * lyndon_count(k, n)) for k in range(1, terms + 1)])
    value, magnitude = _lambert_sum(weights, x)
    # n L_k(n) <= k^n
    tail = power_geometric_tail(n, abs(x), terms) / (1 - abs(x))
    return value, TruncationParams(terms, tail, magnitude)


def cusp_sum(d: int, p: UpperHalfPoint, terms: Optional[int] = None) -> Tuple[complex, TruncationParams]:
    """C(d) = sum_{a<=A} a^d q^a/(1 - q^a)."""
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise DomainError(f"d must be a non-negative integer, got {d!r}")
    terms = _check_terms(terms)
    a = np.arange(1, terms + 1, dtype=np.float64)
    value, magnitude = _lambert_sum(a**d, p.q)
    tail = power_geometric_tail(d, abs(p.q), terms) / (1 - abs(p.q))
    return value, TruncationParams(terms, tail, magnitude)


def cusp_double_sum(
    d: int, p: UpperHalfPoint, terms: Optional[int] = None, frequencies: Optional[int] = None
) -> Tuple[complex, TruncationParams]:
    """C(d) summed frequency-major as sum_{m<=M} sum_{a<=A} a^d q^(am)."""
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise DomainError(f"d must be a non-negative integer, got {d!r}")
    terms = _check_terms(terms)
    frequencies = _check_positive(terms if frequencies is None else frequencies, "frequencies")
    a = np.arange(1, terms + 1, dtype=np.float64)
    weights = a**d
    exponents = np.outer(np.arange(1, frequencies + 1, dtype=np.float64), a)
    values = (weights * np.power(p.q, exponents)).ravel()
    r = abs(p.q)
    # a > A for every frequency, then m > M for each a <= A
    tail = power_geometric_tail(d, r, terms) / (1 - r)
    tail += math.fsum(weights * r ** (a * (frequencies + 1)) / (1 - r**a))
    value = complex(math.fsum(values.real), math.fsum(values.imag))
    return value, TruncationParams(terms, tail, math.fsum(np.abs(values)))


def _eisenstein_factor(weight: int) -> complex:
    return 2 * (-2j * math.pi) ** weight / math.factorial(weight - 1)


def eisenstein_cusp_part(weight: int, p: UpperHalfPoint, terms: Optional[int] = None) -> Tuple[complex, TruncationParams]:
    """G(z, k, 0, h) - 2Z(k, h) = 2(-2 pi i)^k/(k-1)! C(k-1) for weight k >= 2."""
    weight = _check_positive(weight, "weight")
    if weight < 2:
        raise DomainError(f"the Fourier expansion requires weight >= 2, got {weight}")
    value, params = cusp_sum(weight - 1, p, terms)
    factor = _eisenstein_factor(weight)
    scale = abs(factor)
    return factor * value, TruncationParams(params.terms, scale * params.tail_bound, scale * params.magnitude)


def result1_check(n: int, p: UpperHalfPoint, terms: Optional[int] = None) -> IdentityReport:
    """H(n, q) against sum_{d|n} mu(n/d) C(d)."""
    n = _check_positive(n)
    terms = _check_terms(terms)
    lhs = Estimate.from_series(h_num(n, p.q, terms))
    rhs = Estimate.exact(0)
    for d in divisors(n):
        rhs = rhs + mobius(n // d) * Estimate.from_series(cusp_sum(d, p, terms))
    return build_report(IdentityId.R1, {"n": n, "z": p.z}, lhs, rhs, terms)


def _eisenstein_term(d: int, p: UpperHalfPoint, terms: int) -> Estimate:
    """d! (G(z, d+1, 0, h) - 2Z(d+1, h))/(2(-2 pi i)^(d+1))."""
    cusp_part = Estimate.from_series(eisenstein_cusp_part(d + 1, p, terms))
    return math.factorial(d) * cusp_part / (2 * (-2j * math.pi) ** (d + 1))


def eisenstein_check(n: int, p: UpperHalfPoint, terms: Optional[int] = None) -> IdentityReport:
    """H(n, q) against sum_{d|n} d! mu(n/d) (G(z, d+1, 0, h) - 2Z(d+1, h))/(2(-2 pi i)^(d+1))."""
    n = _check_positive(n)
    terms = _check_terms(terms)
    lhs = Estimate.from_series(h_num(n, p.q, terms))
    rhs = Estimate.exact(0)
    for d in divisors(n):
        rhs = rhs + mobius(n // d) * _eisenstein_term(d, p, terms)
    return build_report(IdentityId.EIS, {"n": n, "z": p.z}, lhs, rhs, terms)


def prime_case_check(prime_p: int, p: UpperHalfPoint, terms: Optional[int] = None) -> IdentityReport:
    """H(p, q) against p!(G(z,p+1,0,h) - 2Z(p+1,h))/(2(-2 pi i)^(p+1)) + (G(z,2,0,h) - 2Z(2,h))/(8 pi^2).

    With the Fourier expansion the right side is C(p) - C(1).
    """
    prime_p = _check_positive(prime_p, "p")
    if not is_prime(prime_p):
        raise DomainError(f"p must be a prime, got {prime_p}")
    terms = _check_terms(terms)
    lhs = Estimate.from_series(h_num(prime_p, p.q, terms))
    weight_two = Estimate.from_series(eisenstein_cusp_part(2, p, terms))
    rhs = _eisenstein_term(prime_p, p, terms) + weight_two / (8 * math.pi**2)
    return build_report(IdentityId.PRIME, {"p": prime_p, "z": p.z}, lhs, rhs, terms)
