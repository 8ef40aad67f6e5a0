"""
Lyndon words, necklace polynomials and their Dirichlet, Lambert and zeta identities.
"""


class LyndonError(Exception):
    """Base class for pylyndon errors."""


class DomainError(LyndonError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class BudgetExceededError(LyndonError):
    """Enumeration of k^n words exceeds the configured budget."""

    def __init__(self, k: int, n: int, budget: int) -> None:
        super().__init__(f"enumeration of {k}^{n} words exceeds budget {budget}")
        self.k = k
        self.n = n
        self.budget = budget


class ResourceLimitError(LyndonError):
    """Input exceeds a configured resource cap (sieve limit, factorization cap)."""


class PoleError(LyndonError, ZeroDivisionError):
    """Exact evaluation requested at a pole."""


class ArithmeticAuditError(LyndonError, ArithmeticError):
    """Two independent computations of the same quantity disagree."""


class ReportSchemaError(LyndonError):
    """An audit report does not validate against the shipped JSON schema."""
