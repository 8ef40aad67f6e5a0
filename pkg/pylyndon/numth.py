"""
Elementary multiplicative number theory: factorization, Möbius, totient, divisors and Dirichlet convolution.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Tuple, Union

import numpy as np

from pylyndon import DomainError, ResourceLimitError
from pylyndon.settings import get_settings

logger = logging.getLogger("pylyndon")

ExactRational = Fraction
ArithmeticFunction = Callable[[int], Union[int, Fraction]]

SMALL_PRIME_LIMIT = 1 << 16


def _check_positive(n: int, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")
    return int(n)


@lru_cache(maxsize=1)
def small_primes() -> Tuple[int, ...]:
    """Primes below 2^16, the trial divisors of factorize."""
    is_prime = np.ones(SMALL_PRIME_LIMIT, dtype=bool)
    is_prime[:2] = False
    for i in range(2, math.isqrt(SMALL_PRIME_LIMIT - 1) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return tuple(int(p) for p in np.nonzero(is_prime)[0])


@dataclass(frozen=True)
class FactorMap:
    """Prime factorization as (prime, exponent) pairs with strictly increasing primes."""

    entries: Tuple[Tuple[int, int], ...] = ()

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def value(self) -> int:
        """The factored integer."""
        return math.prod(p**e for p, e in self.entries)

    @property
    def is_square_free(self) -> bool:
        return all(e == 1 for _, e in self.entries)


def factorize(n: int) -> FactorMap:
    """Factor n by trial division.

    :param n: integer in 1..factor_cap.
    :return: FactorMap, empty for n = 1.
    """
    n = _check_positive(n)
    cap = get_settings().limits.factor_cap
    if n > cap:
        raise ResourceLimitError(f"factorize accepts n <= {cap}, got {n}")
    entries = []
    remaining = n
    for p in small_primes():
        if p * p > remaining:
            break
        if remaining % p == 0:
            exponent = 0
            while remaining % p == 0:
                remaining //= p
                exponent += 1
            entries.append((p, exponent))
    else:
        # remaining has no factor below 2^16; continue over 6j +- 1
        candidate = SMALL_PRIME_LIMIT + 1
        while candidate * candidate <= remaining:
            for p in (candidate, candidate + 2):
                if remaining % p == 0:
                    exponent = 0
                    while remaining % p == 0:
                        remaining //= p
                        exponent += 1
                    entries.append((p, exponent))
            candidate += 6
    if remaining > 1:
        entries.append((remaining, 1))
    return FactorMap(tuple(entries))


def is_prime(n: int) -> bool:
    """True iff n is a prime."""
    n = _check_positive(n)
    factors = factorize(n)
    return len(factors) == 1 and factors.entries[0][1] == 1


def mobius(n: int) -> int:
    """Möbius function: 0 unless n is square-free, else (-1)^(number of prime factors)."""
    factors = factorize(n)
    if not factors.is_square_free:
        return 0
    return -1 if len(factors) % 2 else 1


def totient(n: int) -> int:
    """Euler totient from the factorization: prod p^(e-1) (p - 1)."""
    return math.prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def divisors(n: int) -> list[int]:
    """All divisors of n in ascending order."""
    result = [1]
    for p, e in factorize(n):
        result = [d * p**i for d in result for i in range(e + 1)]
    return sorted(result)


def dirichlet_convolve(f: ArithmeticFunction, g: ArithmeticFunction, n: int) -> Fraction:
    """(f * g)(n) = sum over d | n of f(d) g(n/d), in exact arithmetic."""
    return sum((Fraction(f(d)) * Fraction(g(n // d)) for d in divisors(n)), Fraction(0))


def one(n: int) -> int:
    """The constant arithmetic function 1."""
    return 1


def identity(n: int) -> int:
    """The arithmetic function n -> n."""
    return n


def unit(n: int) -> int:
    """The unity of the convolution ring: 1 at n = 1, 0 elsewhere."""
    return 1 if n == 1 else 0


@dataclass(frozen=True)
class SieveTables:
    """Möbius and totient values for 1..limit; index 0 is unused and holds 0."""

    limit: int
    mu: np.ndarray
    phi: np.ndarray

    def mobius(self, n: int) -> int:
        self._check_index(n)
        return int(self.mu[n])

    def totient(self, n: int) -> int:
        self._check_index(n)
        return int(self.phi[n])

    def _check_index(self, n: int) -> None:
        if not 1 <= n <= self.limit:
            raise DomainError(f"sieve covers 1..{self.limit}, got {n}")


def build_sieve(limit: int) -> SieveTables:
    """Sieve Möbius and totient tables up to limit.

    :param limit: positive integer not above the configured sieve cap.
    """
    limit = _check_positive(limit, "limit")
    cap = get_settings().limits.sieve_cap
    if limit > cap:
        raise ResourceLimitError(f"sieve limit {limit} exceeds the configured cap {cap}")
    logger.info(f"Building sieve tables up to {limit}")
    mu = np.ones(limit + 1, dtype=np.int8)
    phi = np.arange(limit + 1, dtype=np.int64)
    composite = np.zeros(limit + 1, dtype=bool)
    mu[0] = 0
    for p in range(2, limit + 1):
        if composite[p]:
            continue
        composite[2 * p :: p] = True
        mu[p::p] *= -1
        if p <= limit // p:
            mu[p * p :: p * p] = 0
        phi[p::p] -= phi[p::p] // p
    return SieveTables(limit=limit, mu=mu, phi=phi)


_shared_sieve: SieveTables = None


def sieve_upto(limit: int) -> SieveTables:
    """Return shared read-only tables covering at least 1..limit."""
    global _shared_sieve
    if _shared_sieve is None or _shared_sieve.limit < limit:
        _shared_sieve = build_sieve(max(limit, 1024))
    return _shared_sieve


def mobius_multiple_series_factor(m: int, s: complex) -> complex:
    """prod over p | m of 1/(1 - p^-s), the Euler factor of the series sum_n mu(mn)/n^s times zeta(s)/mu(m)."""
    return math.prod((1 / (1 - p ** (-s)) for p in factorize(m).primes), start=1 + 0j)
