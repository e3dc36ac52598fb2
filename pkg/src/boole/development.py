"""Constituents and complete/partial developments.

Conventions, fixed once and used everywhere:

* variable lists are sorted ascending by name, the one global order;
* a sigma is a string over {0, 1} whose i-th character belongs to the
  i-th variable of the (sorted) list;
* tables hold all 2**m entries and iterate in binary counting order
  (00, 01, 10, 11, ...).

Over variables x1 < ... < xm the constituent of a sigma is the product
of xi where the bit is 1 and (1 - xi) where it is 0.  Constituents are
idempotent, pairwise disjoint and sum to 1; developing a polynomial
writes it as the sum over all sigma of its value at sigma times the
constituent of sigma, and that table of values determines the polynomial
completely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .polynomial import (
    ONE,
    ZERO,
    Polynomial,
    check_variable_limit,
    is_valid_name,
)

__all__ = [
    "DevelopmentTable",
    "constituent",
    "constituent_equations",
    "develop",
    "develop_partial",
    "equal_by_development",
    "first_difference",
    "from_table",
    "interpretable_core",
    "sigma_assignment",
    "sigma_strings",
]


def sigma_strings(count: int) -> Iterator[str]:
    """All 0/1 strings of the given length, in binary counting order."""
    for index in range(1 << count):
        yield format(index, f"0{count}b") if count else ""


def sigma_assignment(sigma: str, variables: Sequence[str]) -> dict[str, int]:
    """The 0/1 assignment a sigma denotes over a sorted variable list."""
    _check_sigma(sigma, len(variables))
    return {name: int(bit) for name, bit in zip(variables, sigma)}


def _check_sigma(sigma: str, length: int) -> None:
    if len(sigma) != length or any(bit not in "01" for bit in sigma):
        raise ValueError(
            f"sigma {sigma!r} is not a 0/1 string of length {length}"
        )


def _check_variables(variables: Iterable[str]) -> tuple[str, ...]:
    ordered = tuple(variables)
    for name in ordered:
        if not is_valid_name(name):
            raise ValueError(f"invalid variable name {name!r}")
    if any(a >= b for a, b in zip(ordered, ordered[1:])):
        raise ValueError(
            f"variable list {ordered!r} must be strictly ascending; sigma "
            "positions are tied to the sorted order"
        )
    return ordered


@dataclass(frozen=True)
class DevelopmentTable:
    """The coefficient family of a development: one Polynomial per sigma.

    For a complete development every coefficient is a constant; for a
    partial development the coefficients are polynomials in the residual
    variables.  ``variables`` are the sigma-indexed ones.
    """

    variables: tuple[str, ...]
    coefficients: Mapping[str, Polynomial]

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", _check_variables(self.variables))
        try:
            ordered = {
                sigma: self.coefficients[sigma]
                for sigma in sigma_strings(len(self.variables))
            }
        except KeyError as missing:
            raise ValueError(f"table is missing an entry for sigma {missing}") from None
        if len(ordered) != len(self.coefficients):
            raise ValueError("table must have exactly one entry per sigma")
        object.__setattr__(self, "coefficients", MappingProxyType(ordered))

    def __getitem__(self, sigma: str) -> Polynomial:
        _check_sigma(sigma, len(self.variables))
        return self.coefficients[sigma]

    def items(self) -> Iterator[tuple[str, Polynomial]]:
        return iter(self.coefficients.items())

    def is_complete(self) -> bool:
        """True when every coefficient is a constant."""
        return all(p.is_constant() for p in self.coefficients.values())

    def to_polynomial(self) -> Polynomial:
        return from_table(self)


def constituent(sigma: str, variables: Sequence[str]) -> Polynomial:
    """The product over the variable list of x (bit 1) or 1 - x (bit 0)."""
    names = _check_variables(variables)
    _check_sigma(sigma, len(names))
    return _constituent(sigma, names)


@lru_cache(maxsize=4096)
def _constituent(sigma: str, names: tuple[str, ...]) -> Polynomial:
    # Polynomials are immutable, so sharing cached constituents is safe.
    product = ONE
    for name, bit in zip(names, sigma):
        x = Polynomial.variable(name)
        product = product * (x if bit == "1" else ONE - x)
    return product


def develop_partial(
    p: Polynomial,
    eliminated: Iterable[str],
    *,
    max_vars: int | None = None,
) -> DevelopmentTable:
    """Develop over a chosen variable list: the entry at sigma is p with
    those variables replaced by the bits of sigma, a polynomial in the
    remaining variables.  Variables absent from p are allowed."""
    names = tuple(sorted(set(eliminated)))
    for name in names:
        if not is_valid_name(name):
            raise ValueError(f"invalid variable name {name!r}")
    check_variable_limit(len(names), max_vars)
    table: dict[str, Polynomial] = {}
    for sigma in sigma_strings(len(names)):
        entry = p
        for name, bit in zip(names, sigma):
            entry = entry.substitute(name, int(bit))
        table[sigma] = entry
    return DevelopmentTable(names, table)


def develop(
    p: Polynomial,
    variables: Iterable[str] | None = None,
    *,
    max_vars: int | None = None,
) -> DevelopmentTable:
    """The complete development of p: the coefficient at sigma is the
    integer value of p at that 0/1 point.  The variable list defaults to
    the variables of p and may be any superset of them."""
    if variables is None:
        names = p.variables()
    else:
        names = tuple(sorted(set(variables)))
        missing = set(p.variables()) - set(names)
        if missing:
            raise ValueError(
                f"development variables must cover the polynomial; missing "
                f"{sorted(missing)!r}"
            )
    return develop_partial(p, names, max_vars=max_vars)


def from_table(table: DevelopmentTable) -> Polynomial:
    """Rebuild the developed polynomial: the sum over sigma of the
    coefficient times the constituent.  Inverse of develop."""
    total = ZERO
    for sigma, coeff in table.items():
        if coeff:
            total = total + coeff * _constituent(sigma, table.variables)
    return total


def equal_by_development(
    p: Polynomial,
    q: Polynomial,
    variables: Iterable[str] | None = None,
    *,
    max_vars: int | None = None,
) -> bool:
    """Boole's equality criterion: equal complete developments."""
    return first_difference(p, q, variables, max_vars=max_vars) is None


def first_difference(
    p: Polynomial,
    q: Polynomial,
    variables: Iterable[str] | None = None,
    *,
    max_vars: int | None = None,
) -> str | None:
    """The first sigma (in counting order) where the complete developments
    of p and q differ, or None when they are equal."""
    if variables is None:
        names: Iterable[str] = sorted(set(p.variables()) | set(q.variables()))
    else:
        names = variables
    left = develop(p, names, max_vars=max_vars)
    right = develop(q, names, max_vars=max_vars)
    for sigma, coeff in left.items():
        if coeff != right[sigma]:
            return sigma
    return None


def interpretable_core(
    p: Polynomial,
    variables: Iterable[str] | None = None,
    *,
    max_vars: int | None = None,
) -> Polynomial:
    """The totally interpretable polynomial with the same zero set as p:
    the sum of the constituents at which p is nonzero.  Always idempotent;
    equals p when p is already idempotent."""
    table = develop(p, variables, max_vars=max_vars)
    total = ZERO
    for sigma, coeff in table.items():
        if coeff:
            total = total + _constituent(sigma, table.variables)
    return total


def constituent_equations(
    p: Polynomial,
    variables: Iterable[str] | None = None,
    *,
    max_vars: int | None = None,
) -> frozenset[str]:
    """The sigmas whose constituents must vanish for p = 0 to hold: those
    where the development coefficient is nonzero."""
    table = develop(p, variables, max_vars=max_vars)
    return frozenset(sigma for sigma, coeff in table.items() if coeff)
