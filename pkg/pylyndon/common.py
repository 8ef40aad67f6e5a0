"""
Small shared helpers for value parsing and logger setup.
"""
import argparse
import logging
import math
import re
import sys
from fractions import Fraction
from typing import List, Union

from pylyndon import DomainError

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def set_logger(level: Union[int, str] = logging.INFO) -> logging.Logger:
    """Attach a single stream handler to the package logger."""
    logger = logging.getLogger("pylyndon")
    logger.setLevel(level)
    if not any(getattr(handler, "_pylyndon", False) for handler in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._pylyndon = True  # type: ignore[attr-defined]
        logger.addHandler(handler)
    return logger


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer or a terminating decimal into an exact fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"'{text}' is not a rational number (expected p/q)")


def parse_complex(text: str) -> complex:
    """Parse "a+bi", "bi", "i" or a real number into a complex value."""
    candidate = text.strip().replace(" ", "").replace("I", "i").replace("i", "j")
    try:
        value = complex(candidate)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a complex number (expected a+bi)")
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise argparse.ArgumentTypeError(f"'{text}' is not finite")
    return value


def parse_positive(text: str) -> int:
    """Parse a positive integer."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def parse_non_negative(text: str) -> int:
    """Parse a non-negative integer."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def check_complex(value: complex, name: str = "value") -> complex:
    """Reject NaN and infinite components."""
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"{name} must be finite, got {value}")
    return value


# https://blog.codinghorror.com/sorting-for-humans-natural-sort-order/
def natural_sorted_key(val: str) -> List[Union[int, str]]:
    return [int(c) if c.isdigit() else c for c in re.split(r"(\d+)", val)]


def format_complex(value: complex) -> str:
    """Render a complex number as "a+bi", dropping a zero imaginary part."""
    if value.imag == 0:
        return repr(value.real)
    sign = "-" if value.imag < 0 else "+"
    return f"{value.real!r}{sign}{abs(value.imag)!r}i"


def to_complex(value: Union[str, complex, float, int], name: str = "value") -> complex:
    """Coerce a configuration value ("0.5+1i", 3, 2.5) to a finite complex number."""
    if isinstance(value, str):
        try:
            return parse_complex(value)
        except argparse.ArgumentTypeError as error:
            raise DomainError(f"{name}: {error}")
    return check_complex(value, name)
