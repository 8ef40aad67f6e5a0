"""
Exact Bernoulli, Apostol-Bernoulli and Eulerian numbers, and the values of zeta, Li and the Lerch transcendent at
non-positive integers.

Apostol-Bernoulli numbers are the coefficients of t/(l*e^t - 1) = sum B_n(l) t^n/n! and are kept as rational functions
N_n(l)/(l-1)^n with an integer numerator polynomial.
"""
import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Union

import sympy
from sympy import Poly

from pylyndon import ArithmeticAuditError, DomainError
from pylyndon.numth import ExactRational

logger = logging.getLogger("pylyndon")

LAMBDA = sympy.Symbol("l")

Number = Union[int, Fraction]


def _check_non_negative(m: int, name: str = "m") -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise DomainError(f"{name} must be an integer, got {m!r}")
    if m < 0:
        raise DomainError(f"{name} must be >= 0, got {m}")
    return m


def _horner(coefficients: Sequence[int], x: Fraction) -> Fraction:
    """Evaluate a polynomial given by descending integer coefficients."""
    value = Fraction(0)
    for coefficient in coefficients:
        value = value * x + coefficient
    return value


class BernoulliTable:
    """Growing table of Bernoulli numbers B_0..B_limit, with B_1 = -1/2."""

    def __init__(self) -> None:
        self.values: List[ExactRational] = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def limit(self) -> int:
        return len(self.values) - 1

    def extend(self, limit: int) -> None:
        """Fill the table up to limit with sum_{j=0}^{m} C(m+1, j) B_j = 0."""
        with self._lock:
            for m in range(len(self.values), limit + 1):
                total = sum((math.comb(m + 1, j) * b for j, b in enumerate(self.values)), Fraction(0))
                self.values.append(-total / (m + 1))

    def __getitem__(self, m: int) -> ExactRational:
        if m > self.limit:
            self.extend(m)
        return self.values[m]


_bernoulli_table = BernoulliTable()


def bernoulli_number(m: int) -> ExactRational:
    """B_m from t/(e^t - 1) = sum B_m t^m/m!."""
    return _bernoulli_table[_check_non_negative(m)]


def bernoulli_poly(m: int, x: Number) -> ExactRational:
    """Bernoulli polynomial B_m(x) = sum_{j=0}^{m} C(m, j) x^(m-j) B_j."""
    m = _check_non_negative(m)
    x = Fraction(x)
    return sum((math.comb(m, j) * x ** (m - j) * bernoulli_number(j) for j in range(m + 1)), Fraction(0))


@dataclass(frozen=True)
class LambdaRationalFunction:
    """numerator(l) / (l - 1)^pole_order with integer coefficients, reduced so (l - 1) does not divide the numerator."""

    numerator: Poly
    pole_order: int

    @classmethod
    def reduced(cls, numerator: Poly, pole_order: int) -> "LambdaRationalFunction":
        """Cancel common (l - 1) factors between numerator and denominator."""
        if numerator.is_zero:
            return cls(Poly(0, LAMBDA, domain="ZZ"), 0)
        linear = Poly(LAMBDA - 1, LAMBDA, domain="ZZ")
        while pole_order > 0 and numerator.eval(1) == 0:
            numerator = numerator.exquo(linear)
            pole_order -= 1
        return cls(numerator, pole_order)

    @property
    def denominator(self) -> Poly:
        return Poly((LAMBDA - 1) ** self.pole_order, LAMBDA, domain="ZZ")

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def evaluate(self, lam: Number) -> ExactRational:
        """Exact value at a rational l != 1 (any l when there is no pole)."""
        lam = Fraction(lam)
        if lam == 1 and self.pole_order:
            raise DomainError("l = 1 is a pole of the Apostol-Bernoulli numbers")
        numerator = _horner([int(c) for c in self.numerator.all_coeffs()], lam)
        return numerator / (lam - 1) ** self.pole_order

    def __call__(self, lam: Number) -> ExactRational:
        return self.evaluate(lam)

    def __str__(self) -> str:
        """Canonical text such as "-2*l / (l-1)^2"; multi-term numerators are parenthesized."""
        terms = []
        for (degree,), coefficient in self.numerator.terms():
            coefficient = int(coefficient)
            magnitude = abs(coefficient)
            if degree == 0:
                body = str(magnitude)
            else:
                power = "l" if degree == 1 else f"l^{degree}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            sign = "-" if coefficient < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        numerator = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        numerator += "".join(f" {sign} {body}" for sign, body in terms[1:])
        if len(terms) > 1 and self.pole_order:
            numerator = f"({numerator})"
        if self.pole_order == 0:
            return numerator
        if self.pole_order == 1:
            return f"{numerator} / (l-1)"
        return f"{numerator} / (l-1)^{self.pole_order}"


@lru_cache(maxsize=None)
def _apostol_numerators(limit: int) -> tuple:
    """Unreduced numerators N_0..N_limit of B_n(l) = N_n/(l-1)^n.

    Multiplying the generating function through by (l*e^t - 1) gives (l-1)B_n = [n=1] - l sum_{j<n} C(n,j) B_j.
    """
    lam = Poly(LAMBDA, LAMBDA, domain="ZZ")
    linear = Poly(LAMBDA - 1, LAMBDA, domain="ZZ")
    numerators = [Poly(0, LAMBDA, domain="ZZ")]
    for n in range(1, limit + 1):
        total = Poly(0, LAMBDA, domain="ZZ")
        for j in range(1, n):
            total += math.comb(n, j) * numerators[j] * linear ** (n - 1 - j)
        numerator = -lam * total
        if n == 1:
            numerator += Poly(1, LAMBDA, domain="ZZ")
        numerators.append(numerator)
    return tuple(numerators)


@lru_cache(maxsize=None)
def apostol_bernoulli_rf(m: int) -> LambdaRationalFunction:
    """Apostol-Bernoulli number B_m(l) as an exact rational function of l."""
    m = _check_non_negative(m)
    return LambdaRationalFunction.reduced(_apostol_numerators(m)[m], m)


def apostol_bernoulli_poly_at(m: int, x: Number, lam: Number) -> ExactRational:
    """Apostol-Bernoulli polynomial B_m(x; l) = sum_{j=0}^{m} C(m, j) x^(m-j) B_j(l).

    :param lam: rational l != 1.
    """
    m = _check_non_negative(m)
    x, lam = Fraction(x), Fraction(lam)
    if lam == 1:
        raise DomainError("Apostol-Bernoulli polynomials require l != 1")
    return sum((math.comb(m, j) * x ** (m - j) * apostol_bernoulli_rf(j).evaluate(lam) for j in range(m + 1)), Fraction(0))


class EulerianTriangle:
    """Rows A(m, 0..m) of Eulerian numbers, built on demand."""

    def __init__(self) -> None:
        self.rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()

    @property
    def limit(self) -> int:
        return len(self.rows) - 1

    def extend(self, limit: int) -> None:
        """A(m, j) = (j+1) A(m-1, j) + (m-j) A(m-1, j-1)."""
        with self._lock:
            for m in range(len(self.rows), limit + 1):
                previous = self.rows[-1] + [0]
                row = [(j + 1) * previous[j] + (m - j) * (previous[j - 1] if j else 0) for j in range(m + 1)]
                self.rows.append(row)

    def __getitem__(self, m: int) -> List[int]:
        if m > self.limit:
            self.extend(m)
        return self.rows[m]


_eulerian_triangle = EulerianTriangle()


def eulerian(m: int, j: int) -> int:
    """Number of permutations of m elements with j descents; zero outside 0 <= j <= m."""
    m = _check_non_negative(m)
    if not 0 <= j <= m:
        return 0
    return _eulerian_triangle[m][j]


def _check_lambda(lam: Number) -> Fraction:
    lam = Fraction(lam)
    if lam == 1:
        raise DomainError("l = 1 is a pole; requires l != 1")
    return lam


def polylog_neg(m: int, lam: Number) -> ExactRational:
    """Li_{-m}(l) for m >= 1, computed by the Eulerian and the Apostol-Bernoulli formulas, which must agree.

    :raises ArithmeticAuditError: if the two formulas differ.
    """
    m = _check_non_negative(m)
    if m == 0:
        raise DomainError("polylog_neg requires m >= 1; at m = 0 the Apostol-Bernoulli form gives 1 + Li_0(l)")
    lam = _check_lambda(lam)
    eulerian_form = sum((eulerian(m, j) * lam ** (m - j) for j in range(m)), Fraction(0)) / (1 - lam) ** (m + 1)
    apostol_form = -apostol_bernoulli_rf(m + 1).evaluate(lam) / (m + 1)
    if eulerian_form != apostol_form:
        raise ArithmeticAuditError(f"Li_-{m}({lam}): Eulerian form {eulerian_form} != Apostol-Bernoulli form {apostol_form}")
    return apostol_form


def zeta_neg(m: int) -> ExactRational:
    """zeta(-m) = -B_{m+1}(1)/(m+1), so zeta(0) = -1/2."""
    m = _check_non_negative(m)
    return -bernoulli_poly(m + 1, 1) / (m + 1)


def lerch_phi_neg(m: int, lam: Number) -> ExactRational:
    """Lerch transcendent Phi(l, -m, 0) = sum_{n>=0} n^m l^n (0^0 = 1), equal to -B_{m+1}(l)/(m+1) for all m >= 0."""
    m = _check_non_negative(m)
    lam = _check_lambda(lam)
    return -apostol_bernoulli_rf(m + 1).evaluate(lam) / (m + 1)
