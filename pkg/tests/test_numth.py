"""
pylyndon number theory tests.
"""
import itertools
import logging
import math

import pytest
from sympy import divisors as sympy_divisors
from sympy import factorint, totient as sympy_totient
from sympy.ntheory import mobius as sympy_mobius

from pylyndon import DomainError, ResourceLimitError
from pylyndon.numth import (
    FactorMap,
    SieveTables,
    build_sieve,
    dirichlet_convolve,
    divisors,
    factorize,
    identity,
    is_prime,
    mobius,
    mobius_multiple_series_factor,
    one,
    totient,
    unit,
)
from pylyndon.settings import Settings

logger = logging.getLogger("pylyndon")


@pytest.mark.parametrize(
    "n, entries",
    [(1, ()), (2, ((2, 1),)), (12, ((2, 2), (3, 1))), (360, ((2, 3), (3, 2), (5, 1))), (65537, ((65537, 1),))],
)
def test_factorize(n: int, entries: tuple) -> None:
    """Test factorization of small values."""
    factors = factorize(n)
    assert factors.entries == entries
    assert factors.value == n


def test_factorize_large_prime_factors() -> None:
    """Test factorization with prime factors above the trial division table."""
    assert factorize(12 * 65537**2) == FactorMap(((2, 2), (3, 1), (65537, 2)))
    assert factorize(65537**2).value == 65537**2


def test_factorize_against_sympy(rng) -> None:
    """Test factorization of random integers against sympy."""
    for _ in range(200):
        n = rng.randint(1, 10**9)
        assert dict(factorize(n).entries) == factorint(n)


def test_factorize_errors(settings: Settings) -> None:
    """Test rejection of non-positive and oversized arguments."""
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        factorize(-3)
    with pytest.raises(DomainError):
        factorize(True)
    with pytest.raises(ResourceLimitError):
        factorize(settings.limits.factor_cap + 1)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, -1), (4, 0), (6, 1), (30, -1), (12, 0)])
def test_mobius_values(n: int, expected: int) -> None:
    """Test Möbius function values."""
    assert mobius(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (9, 6), (10, 4), (36, 12), (97, 96)])
def test_totient_values(n: int, expected: int) -> None:
    """Test totient function values."""
    assert totient(n) == expected


def test_divisors() -> None:
    """Test divisors are sorted and complete."""
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(97) == [1, 97]


def test_is_prime() -> None:
    """Test primality."""
    assert [n for n in range(1, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_arithmetic_functions_against_sympy(settings: Settings) -> None:
    """Test mobius, totient and divisors against sympy up to the property limit."""
    for n in range(1, settings.limits.property_limit + 1):
        assert mobius(n) == sympy_mobius(n)
        assert totient(n) == sympy_totient(n)
        assert divisors(n) == sympy_divisors(n)


def test_convolution_identities(settings: Settings) -> None:
    """Test mu * 1 = unit, phi * 1 = id and mu * id = phi."""
    for n in range(1, settings.limits.property_limit // 4 + 1):
        assert dirichlet_convolve(mobius, one, n) == unit(n)
        assert dirichlet_convolve(totient, one, n) == identity(n)
        assert dirichlet_convolve(mobius, identity, n) == totient(n)


def test_sieve_matches_factorization(sieve: SieveTables, settings: Settings) -> None:
    """Test sieve tables against the factorization based functions."""
    for n in range(1, settings.limits.property_limit + 1):
        assert sieve.mobius(n) == mobius(n)
        assert sieve.totient(n) == totient(n)
    with pytest.raises(DomainError):
        sieve.mobius(0)


def test_sieve_cap(settings: Settings) -> None:
    """Test the sieve refuses limits above the configured cap."""
    with pytest.raises(ResourceLimitError):
        build_sieve(settings.limits.sieve_cap + 1)


def test_mobius_multiple_series_factor() -> None:
    """Test the Euler factor over the primes dividing m."""
    assert mobius_multiple_series_factor(1, 3) == 1
    assert mobius_multiple_series_factor(6, 2) == pytest.approx(1 / ((1 - 1 / 4) * (1 - 1 / 9)))
    assert mobius_multiple_series_factor(4, 2) == pytest.approx(4 / 3)
    logger.info(f"factor(30, 3) = {mobius_multiple_series_factor(30, 3)}")


CONVOLUTION_LIMIT = 500


def test_multiplicativity() -> None:
    """Test mobius and totient are multiplicative over coprime pairs, cross-checked with the sieve."""
    tables = build_sieve(CONVOLUTION_LIMIT)
    for a in range(1, CONVOLUTION_LIMIT + 1):
        for b in range(1, CONVOLUTION_LIMIT // a + 1):
            if math.gcd(a, b) != 1:
                continue
            assert mobius(a * b) == mobius(a) * mobius(b) == tables.mobius(a * b)
            assert totient(a * b) == totient(a) * totient(b) == tables.totient(a * b)


def test_convolution_ring_laws() -> None:
    """Test the Dirichlet convolution is commutative and associative with unit as its identity."""
    tables = build_sieve(CONVOLUTION_LIMIT)
    functions = [tables.mobius, tables.totient, identity, one]
    for n in range(1, CONVOLUTION_LIMIT + 1):
        for f, g in itertools.combinations(functions, 2):
            assert dirichlet_convolve(f, g, n) == dirichlet_convolve(g, f, n)
        for f in functions:
            assert dirichlet_convolve(f, unit, n) == dirichlet_convolve(unit, f, n) == f(n)
        assert dirichlet_convolve(one, tables.mobius, n) == unit(n)
        assert dirichlet_convolve(one, tables.totient, n) == n
    for n in range(1, CONVOLUTION_LIMIT // 5 + 1):
        left = dirichlet_convolve(lambda m: dirichlet_convolve(tables.mobius, tables.totient, m), identity, n)
        right = dirichlet_convolve(tables.mobius, lambda m: dirichlet_convolve(tables.totient, identity, m), n)
        assert left == right
