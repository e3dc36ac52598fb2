"""Multilinear integer polynomials with an exponent-flattening product.

This is the carrier of Boole's algebra of logic: polynomials over the
integers in which every variable occurs to at most the first power.  Sums,
differences and negation are the ordinary coefficientwise operations.  The
product is the ordinary polynomial product followed by flattening every
exponent above one back to one (so ``x * x == x`` for a variable ``x``),
which keeps the multilinear polynomials closed under multiplication.

Coefficients are arbitrary-precision Python ints; nothing here can
overflow.  Values are immutable and safe to share between threads.

>>> x, y = variables("x, y")
>>> x * (x + y - x * y)
x
>>> (x + y) * (x + y)
x + y + 2*x*y
>>> (x + y - x * y).is_idempotent()
True
"""

from __future__ import annotations

import re
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "DEFAULT_VARIABLE_LIMIT",
    "Monomial",
    "Polynomial",
    "VariableLimitError",
    "ONE",
    "ZERO",
    "check_variable_limit",
    "is_valid_name",
    "variables",
]

# A monomial is a sorted tuple of distinct variable names; () is the
# constant monomial.
Monomial = tuple[str, ...]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

# Soft cap on the number of variables for operations that enumerate all
# 2**n zero/one points.  Callers may override it explicitly.
DEFAULT_VARIABLE_LIMIT = 20


class VariableLimitError(Exception):
    """An operation would enumerate 2**n cases beyond the configured limit."""


def is_valid_name(name: object) -> bool:
    """True if `name` is a usable variable name (letter, then letters,
    digits or underscores)."""
    return isinstance(name, str) and _NAME_RE.match(name) is not None


def _require_name(name: str) -> str:
    if not is_valid_name(name):
        raise ValueError(
            f"invalid variable name {name!r}: expected a letter followed by "
            "letters, digits or underscores"
        )
    return name


def check_variable_limit(count: int, limit: int | None = None) -> None:
    """Raise VariableLimitError if `count` variables exceed the cap.

    `limit` overrides the module default of DEFAULT_VARIABLE_LIMIT.
    Exceeding the cap is an explicit error, never a silent truncation.
    """
    cap = DEFAULT_VARIABLE_LIMIT if limit is None else limit
    if count > cap:
        raise VariableLimitError(
            f"{count} variables would enumerate 2**{count} cases; the limit "
            f"is {cap} (pass a higher limit explicitly if you mean it)"
        )


def _monomial_key(mono: Monomial) -> tuple[int, Monomial]:
    # Degree first, then variable names; fixes storage and printing order.
    return (len(mono), mono)


def _normalize_monomial(mono: object) -> Monomial:
    if isinstance(mono, str):
        return (_require_name(mono),)
    names = tuple(mono)  # type: ignore[arg-type]
    for name in names:
        _require_name(name)
    ordered = tuple(sorted(names))
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            raise ValueError(f"monomial {names!r} repeats variable {a!r}")
    return ordered


class Polynomial:
    """A canonical multilinear polynomial over the integers.

    Internally an association from monomials to nonzero coefficients, kept
    in degree-then-name order so equality, hashing and printing are
    deterministic.  Two polynomials are equal exactly when their
    associations are identical.

    Use :meth:`constant`, :meth:`variable` or :func:`variables` to build
    atoms, then combine with ``+``, ``-``, ``*`` and ``**``.  ``*`` is the
    flattening product described in the module docstring; with a constant
    operand it degenerates to ordinary scaling.
    """

    __slots__ = ("_terms",)

    _terms: dict[Monomial, int]

    def __init__(self, terms: Mapping[object, int] | None = None):
        table: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficient {coeff!r} is not an integer")
                key = _normalize_monomial(mono)
                table[key] = table.get(key, 0) + coeff
        self._terms = _canonical(table)

    @classmethod
    def _raw(cls, table: dict[Monomial, int]) -> "Polynomial":
        # Trusted path for internal arithmetic: monomials are already
        # sorted tuples of valid names, but coefficients may be zero and
        # the dict unordered.
        self = object.__new__(cls)
        self._terms = _canonical(table)
        return self

    @classmethod
    def zero(cls) -> "Polynomial":
        return _ZERO

    @classmethod
    def one(cls) -> "Polynomial":
        return _ONE

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        if not isinstance(value, int):
            raise TypeError(f"constant {value!r} is not an integer")
        return cls._raw({(): value})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        return cls._raw({(_require_name(name),): 1})

    # ------------------------------------------------------------------
    # Inspection

    @property
    def terms(self) -> Mapping[Monomial, int]:
        """Read-only view of the monomial/coefficient association."""
        return MappingProxyType(self._terms)

    def coefficient(self, mono: object = ()) -> int:
        """Coefficient of a monomial, 0 if absent.  ``coefficient()`` is
        the constant term."""
        return self._terms.get(_normalize_monomial(mono), 0)

    def variables(self) -> tuple[str, ...]:
        """All variable names occurring in the polynomial, sorted."""
        seen: set[str] = set()
        for mono in self._terms:
            seen.update(mono)
        return tuple(sorted(seen))

    def is_constant(self) -> bool:
        return not self._terms or self._terms.keys() == {()}

    def constant_value(self) -> int:
        """The value of a constant polynomial; error otherwise."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        # constants hash like the ints they equal
        if self.is_constant():
            return hash(self._terms.get((), 0))
        return hash(tuple(self._terms.items()))

    # ------------------------------------------------------------------
    # Ring operations

    def __add__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table = dict(self._terms)
        for mono, coeff in other._terms.items():
            table[mono] = table.get(mono, 0) + coeff
        return Polynomial._raw(table)

    __radd__ = __add__

    def __sub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table = dict(self._terms)
        for mono, coeff in other._terms.items():
            table[mono] = table.get(mono, 0) - coeff
        return Polynomial._raw(table)

    def __rsub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> "Polynomial":
        return self

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                # Monomials multiply by set union; this is where repeated
                # variables flatten back to the first power.
                if not m1:
                    mono = m2
                elif not m2:
                    mono = m1
                else:
                    mono = tuple(sorted(set(m1) | set(m2)))
                table[mono] = table.get(mono, 0) + c1 * c2
        return Polynomial._raw(table)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = _ONE
        for _ in range(exponent):
            result = result * self
        return result

    # ------------------------------------------------------------------
    # Semantics

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        """Substitute integers for every variable and compute over Z.

        Because the product flattens exponents, evaluation respects
        products only at 0/1-valued assignments; at other integers it is
        still well defined, just not multiplicative.
        """
        total = 0
        for mono, coeff in self._terms.items():
            value = coeff
            for name in mono:
                if name not in assignment:
                    raise KeyError(f"no value assigned to variable {name!r}")
                value *= assignment[name]
            total += value
        return total

    def substitute(self, name: str, replacement: Union["Polynomial", int]) -> "Polynomial":
        """Replace a variable by a polynomial throughout, recombining with
        the flattening product."""
        _require_name(name)
        replacement = _coerce(replacement)
        if replacement is NotImplemented:
            raise TypeError("replacement must be a Polynomial or an int")
        kept: dict[Monomial, int] = {}
        factored: dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            if name in mono:
                rest = tuple(v for v in mono if v != name)
                factored[rest] = factored.get(rest, 0) + coeff
            else:
                kept[mono] = coeff
        if not factored:
            return self
        return Polynomial._raw(kept) + Polynomial._raw(factored) * replacement

    def is_idempotent(self) -> bool:
        """True when p*p == p, Boole's condition of interpretability."""
        return self * self == self

    # ------------------------------------------------------------------
    # Rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in self._terms.items():
            magnitude = abs(coeff)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(mono)
            else:
                body = f"{magnitude}*" + "*".join(mono)
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return str(self)


def _coerce(value: object):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    return NotImplemented


def _canonical(table: dict[Monomial, int]) -> dict[Monomial, int]:
    return {
        mono: table[mono]
        for mono in sorted(table, key=_monomial_key)
        if table[mono] != 0
    }


_ZERO = object.__new__(Polynomial)
_ZERO._terms = {}
_ONE = object.__new__(Polynomial)
_ONE._terms = {(): 1}

ZERO: Polynomial = _ZERO
ONE: Polynomial = _ONE


def variables(names: str | Iterable[str]) -> tuple[Polynomial, ...]:
    """Build variable polynomials from a comma or space separated string,
    e.g. ``x, y = variables("x, y")``."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return tuple(Polynomial.variable(n) for n in names)
