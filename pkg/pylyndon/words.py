"""
Lyndon words and necklaces: counting formulas, their x-deformed polynomials and enumeration oracles.

L_k(x:n) = (1/n) sum_{d|n} mu(n/d) k^d x^d and N_k(x:n) = (1/n) sum_{d|n} phi(n/d) k^d x^d reduce at x = 1 to
the number of Lyndon words and of necklaces of length n over k letters.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple, Union

import numpy as np

from pylyndon import ArithmeticAuditError, BudgetExceededError, DomainError
from pylyndon.numth import _check_positive, divisors, mobius, totient
from pylyndon.settings import get_settings

logger = logging.getLogger("pylyndon")

Number = Union[int, Fraction]


@dataclass(frozen=True)
class WordPolynomial:
    """Sparse polynomial in x with exact rational coefficients, terms stored by descending degree."""

    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, coefficients: Mapping[int, Number]) -> "WordPolynomial":
        """Build from {degree: coefficient}, dropping zero coefficients."""
        terms = []
        for degree, coefficient in coefficients.items():
            if degree < 0:
                raise DomainError(f"negative degree {degree}")
            coefficient = Fraction(coefficient)
            if coefficient:
                terms.append((int(degree), coefficient))
        return cls(tuple(sorted(terms, reverse=True)))

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return self.terms[0][0] if self.terms else -1

    def coefficient(self, degree: int) -> Fraction:
        return self.coefficients.get(degree, Fraction(0))

    def __call__(self, x: Number) -> Fraction:
        x = Fraction(x)
        return sum((c * x**d for d, c in self.terms), Fraction(0))

    def __add__(self, other: "WordPolynomial") -> "WordPolynomial":
        total = self.coefficients
        for degree, coefficient in other.terms:
            total[degree] = total.get(degree, Fraction(0)) + coefficient
        return WordPolynomial.from_mapping(total)

    def __mul__(self, factor: Number) -> "WordPolynomial":
        return WordPolynomial.from_mapping({d: c * Fraction(factor) for d, c in self.terms})

    __rmul__ = __mul__

    def __str__(self) -> str:
        """Render as "(32*x^6 - 4*x^3 - 2*x^2 + x)/3" with the common denominator pulled out."""
        if not self.terms:
            return "0"
        denominator = math.lcm(*(c.denominator for _, c in self.terms))
        parts = []
        for degree, coefficient in self.terms:
            numerator = int(coefficient * denominator)
            magnitude = abs(numerator)
            if degree == 0:
                body = str(magnitude)
            else:
                power = "x" if degree == 1 else f"x^{degree}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not parts:
                parts.append(f"-{body}" if numerator < 0 else body)
            else:
                parts.append(f"- {body}" if numerator < 0 else f"+ {body}")
        text = " ".join(parts)
        return text if denominator == 1 else f"({text})/{denominator}"


@dataclass(frozen=True, order=True)
class Word:
    """A word over the alphabet 0..alphabet_size-1; words compare lexicographically by letters."""

    letters: Tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        if self.alphabet_size < 1:
            raise DomainError(f"alphabet size must be >= 1, got {self.alphabet_size}")
        if not self.letters:
            raise DomainError("a word has at least one letter")
        if any(not 0 <= letter < self.alphabet_size for letter in self.letters):
            raise DomainError(f"letters of {self.letters} must lie in 0..{self.alphabet_size - 1}")

    @classmethod
    def parse(cls, text: str, alphabet_size: int) -> "Word":
        """Parse digits ("001011") or, for alphabets above 10 letters, comma separated integers."""
        text = text.strip()
        if "," in text or alphabet_size > 10:
            letters = tuple(int(part) for part in text.split(","))
        else:
            letters = tuple(int(ch) for ch in text)
        return cls(letters, alphabet_size)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if self.alphabet_size <= 10:
            return "".join(str(letter) for letter in self.letters)
        return ",".join(str(letter) for letter in self.letters)

    def rotation(self, shift: int) -> "Word":
        shift %= len(self.letters)
        return Word(self.letters[shift:] + self.letters[:shift], self.alphabet_size)

    def is_primitive(self) -> bool:
        """True iff the word is not a proper power of a shorter word."""
        n = len(self.letters)
        return all(self.letters != self.letters[:p] * (n // p) for p in divisors(n) if p < n)


def _check_alphabet(k: int, n: int) -> Tuple[int, int]:
    return _check_positive(k, "k"), _check_positive(n, "n")


def _divisor_sum(n: int, weight: Callable[[int], int], k: int) -> int:
    return sum(weight(n // d) * k**d for d in divisors(n))


def _exact_quotient(total: int, n: int, what: str) -> int:
    quotient, remainder = divmod(total, n)
    if remainder:
        raise ArithmeticAuditError(f"{what}: divisor sum {total} is not divisible by {n}")
    return quotient


def lyndon_count(k: int, n: int) -> int:
    """Number of Lyndon words of length n over k letters, (1/n) sum_{d|n} mu(n/d) k^d."""
    k, n = _check_alphabet(k, n)
    return _exact_quotient(_divisor_sum(n, mobius, k), n, f"lyndon_count({k}, {n})")


def necklace_count(k: int, n: int) -> int:
    """Number of necklaces of length n over k letters, (1/n) sum_{d|n} phi(n/d) k^d."""
    k, n = _check_alphabet(k, n)
    return _exact_quotient(_divisor_sum(n, totient, k), n, f"necklace_count({k}, {n})")


def lyndon_poly(k: int, n: int) -> WordPolynomial:
    """L_k(x:n) = (1/n) sum_{d|n} mu(n/d) k^d x^d as an exact polynomial."""
    k, n = _check_alphabet(k, n)
    return WordPolynomial.from_mapping({d: Fraction(mobius(n // d) * k**d, n) for d in divisors(n)})


def necklace_poly(k: int, n: int) -> WordPolynomial:
    """N_k(x:n) = (1/n) sum_{d|n} phi(n/d) k^d x^d as an exact polynomial."""
    k, n = _check_alphabet(k, n)
    return WordPolynomial.from_mapping({d: Fraction(totient(n // d) * k**d, n) for d in divisors(n)})


def _check_budget(k: int, n: int, budget: Optional[int]) -> None:
    budget = get_settings().limits.enumeration_budget if budget is None else budget
    if k**n > budget:
        raise BudgetExceededError(k, n, budget)


def is_lyndon(word: Word) -> bool:
    """True iff word is strictly smaller than each of its nontrivial rotations (which forces primitivity)."""
    letters = word.letters
    return all(letters < letters[i:] + letters[:i] for i in range(1, len(letters)))


def _duval(k: int, n: int) -> Iterator[Tuple[int, ...]]:
    """Duval's successor walk over the Lyndon words of length <= n, in lexicographic order."""
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            yield tuple(w)
        while len(w) < n:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()


def enumerate_lyndon(k: int, n: int, budget: Optional[int] = None) -> List[Word]:
    """Lyndon words of length n over 0..k-1 in lexicographic order, by Duval's algorithm.

    :param budget: maximum k^n, defaults to the configured enumeration budget.
    """
    k, n = _check_alphabet(k, n)
    _check_budget(k, n, budget)
    return [Word(letters, k) for letters in _duval(k, n)]


def enumerate_lyndon_exhaustive(k: int, n: int, budget: Optional[int] = None) -> List[Word]:
    """Lyndon words of length n by filtering all k^n words; a second oracle for small sizes."""
    k, n = _check_alphabet(k, n)
    _check_budget(k, n, budget)
    words = (Word(letters, k) for letters in itertools.product(range(k), repeat=n))
    return [word for word in words if is_lyndon(word)]


def _orbit_minima(k: int, n: int) -> np.ndarray:
    """Integer codes (base k, most significant letter first) of the rotation-minimal words."""
    dtype = np.int32 if k**n <= np.iinfo(np.int32).max else np.int64
    codes = np.arange(k**n, dtype=dtype)
    high = k ** (n - 1)
    rotated = codes.copy()
    minimal = codes.copy()
    for _ in range(n - 1):
        leading = rotated // high
        rotated %= high
        rotated *= k
        rotated += leading
        np.minimum(minimal, rotated, out=minimal)
    return codes[codes == minimal]


def count_necklaces_orbits(k: int, n: int, budget: Optional[int] = None) -> int:
    """Count the classes of length-n words under cyclic rotation by direct orbit partition."""
    k, n = _check_alphabet(k, n)
    _check_budget(k, n, budget)
    return int(_orbit_minima(k, n).size)


def necklace_representatives(k: int, n: int, budget: Optional[int] = None) -> List[Word]:
    """The rotation-minimal representative of every necklace, in lexicographic order."""
    k, n = _check_alphabet(k, n)
    _check_budget(k, n, budget)
    words = []
    for code in _orbit_minima(k, n).tolist():
        letters = []
        for _ in range(n):
            code, letter = divmod(code, k)
            letters.append(letter)
        words.append(Word(tuple(reversed(letters)), k))
    return words
