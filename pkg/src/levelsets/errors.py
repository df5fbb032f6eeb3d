"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LevelSetError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(LevelSetError, ValueError):
    """Malformed measure, candidate or argument."""


class ResourceLimitError(LevelSetError):
    """An enumeration would exceed the configured atom bound."""

    def __init__(self, what: str, n: int, bound: int) -> None:
        super().__init__(f"{what}: n={n} exceeds the enumeration bound {bound}")
        self.n = n
        self.bound = bound


class InsufficientMassError(InvalidInputError):
    """The supplied prefix does not carry enough mass for the construction."""


class WellDefinednessError(LevelSetError):
    """Two sets of equal mu-measure received different nu-values."""

    def __init__(self, subset_a, subset_b, mu_value, nu_a, nu_b) -> None:
        self.subset_a = tuple(subset_a)
        self.subset_b = tuple(subset_b)
        self.mu_value = mu_value
        self.nu_a = nu_a
        self.nu_b = nu_b
        super().__init__(
            f"level function not well defined: subsets {list(self.subset_a)} and "
            f"{list(self.subset_b)} both have mu = {mu_value} but nu = {nu_a} vs {nu_b}"
        )


class LogicError(LevelSetError):
    """An operation was called outside its precondition by the library itself."""
