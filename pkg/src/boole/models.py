"""Executable semantics over a finite universe.

Two interpretations of the term language live here, together with the
bridge between them:

* the partial algebra of classes, where multiplication is intersection,
  addition is union of *disjoint* classes, subtraction is difference of
  *contained* classes, and anything else is undefined;
* the ring of signed multisets, integer-valued functions on the
  universe, where every term is interpretable and the characteristic
  functions are exactly the idempotents.

Subsets are bitmasks over universes of at most 16 elements, so the
exhaustive enumeration oracles stay fast and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from types import MappingProxyType
from typing import Iterable, Iterator, Literal, Mapping, Union

from .polynomial import Polynomial, check_variable_limit
from .terms import (
    Add,
    IntLit,
    Mul,
    Neg,
    One,
    Pow,
    Sub,
    Term,
    Var,
    Zero,
    format_term,
)

__all__ = [
    "ClassAssignment",
    "Defined",
    "Multiset",
    "Undefined",
    "Universe",
    "chi",
    "elements_of",
    "eval_multiset",
    "eval_partial",
    "holds_in_idempotents",
    "mask_of",
]

MAX_UNIVERSE = 16


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class Universe:
    """A universe of discourse {0, ..., size-1}, size at most 16."""

    size: int

    def __post_init__(self) -> None:
        if not 0 <= self.size <= MAX_UNIVERSE:
            raise ValueError(f"universe size must be in 0..{MAX_UNIVERSE}, got {self.size}")

    @property
    def mask(self) -> int:
        return (1 << self.size) - 1

    def elements(self) -> range:
        return range(self.size)

    def subsets(self) -> range:
        """All subset bitmasks in increasing order."""
        return range(1 << self.size)


@dataclass(frozen=True)
class ClassAssignment:
    """A total assignment of variables to subsets of a universe."""

    universe: Universe
    masks: Mapping[str, int]

    def __post_init__(self) -> None:
        clean: dict[str, int] = {}
        for name in sorted(self.masks):
            value = self.masks[name]
            if not isinstance(value, int):
                value = mask_of(value)
            if value & ~self.universe.mask:
                raise ValueError(
                    f"assignment for {name!r} is not a subset of the universe"
                )
            clean[name] = value
        object.__setattr__(self, "masks", MappingProxyType(clean))

    def mask(self, name: str) -> int:
        if name not in self.masks:
            raise KeyError(f"no value assigned to variable {name!r}")
        return self.masks[name]

    def subset(self, name: str) -> frozenset[int]:
        return frozenset(elements_of(self.mask(name)))

    def items(self) -> Iterator[tuple[str, int]]:
        return iter(self.masks.items())

    def __str__(self) -> str:
        body = "; ".join(
            "%s={%s}" % (name, ", ".join(map(str, elements_of(mask))))
            for name, mask in self.masks.items()
        )
        return f"U={self.universe.size}; {body}" if body else f"U={self.universe.size}"


# ----------------------------------------------------------------------
# Partial class semantics


@dataclass(frozen=True)
class Defined:
    """A defined class value, as a subset bitmask."""

    subset: int


@dataclass(frozen=True)
class Undefined:
    """An uninterpretable value: the offending subterm and the side
    condition it failed, phrased for direct display."""

    term: Term
    reason: str


PartialValue = Union[Defined, Undefined]


def eval_partial(term: Term, assignment: ClassAssignment) -> PartialValue:
    """Evaluate under Boole's partial algebra of classes.

    Multiplication is intersection and always defined; addition requires
    disjoint operands, subtraction containment of the second in the
    first.  Unary minus and literals above 1 never denote classes.
    Powers evaluate their base once, classes being idempotent.
    Evaluation is strict: any undefined subterm, whether or not it could
    influence the result, makes the whole term undefined.
    """
    universe = assignment.universe.mask
    if isinstance(term, Var):
        return Defined(assignment.mask(term.name))
    if isinstance(term, Zero):
        return Defined(0)
    if isinstance(term, One):
        return Defined(universe)
    if isinstance(term, IntLit):
        if term.value == 0:
            return Defined(0)
        if term.value == 1:
            return Defined(universe)
        return Undefined(term, f"{term.value} is not a class")
    if isinstance(term, Mul):
        left = eval_partial(term.left, assignment)
        right = eval_partial(term.right, assignment)
        if isinstance(left, Undefined):
            return left
        if isinstance(right, Undefined):
            return right
        return Defined(left.subset & right.subset)
    if isinstance(term, Add):
        left = eval_partial(term.left, assignment)
        right = eval_partial(term.right, assignment)
        if isinstance(left, Undefined):
            return left
        if isinstance(right, Undefined):
            return right
        if left.subset & right.subset:
            s, t = format_term(term.left, compact=True), format_term(term.right, compact=True)
            return Undefined(term, f"{s}+{t} requires {s}∩{t}=∅")
        return Defined(left.subset | right.subset)
    if isinstance(term, Sub):
        left = eval_partial(term.left, assignment)
        right = eval_partial(term.right, assignment)
        if isinstance(left, Undefined):
            return left
        if isinstance(right, Undefined):
            return right
        if right.subset & ~left.subset:
            s, t = format_term(term.left, compact=True), format_term(term.right, compact=True)
            return Undefined(term, f"{s}-{t} requires {t}⊆{s}")
        return Defined(left.subset & ~right.subset & universe)
    if isinstance(term, Neg):
        inner = eval_partial(term.operand, assignment)
        if isinstance(inner, Undefined):
            return inner
        s = format_term(term.operand, compact=True)
        return Undefined(term, f"-{s} uses unary minus, which is not a class operation")
    if isinstance(term, Pow):
        return eval_partial(term.base, assignment)
    raise TypeError(f"not a Term: {term!r}")


# ----------------------------------------------------------------------
# Signed multisets


@dataclass(frozen=True)
class Multiset:
    """An integer-valued function on the universe, one value per element."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @classmethod
    def constant(cls, value: int, size: int) -> "Multiset":
        return cls((value,) * size)

    @property
    def size(self) -> int:
        return len(self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_characteristic(self) -> bool:
        """True when every value is 0 or 1, i.e. the multiset is the
        characteristic function of a subset."""
        return all(v in (0, 1) for v in self.values)

    def as_mask(self) -> int:
        """The subset a characteristic multiset describes, as a bitmask."""
        if not self.is_characteristic():
            raise ValueError(f"{self} is not a characteristic function")
        return mask_of(i for i, v in enumerate(self.values) if v)

    def _match(self, other: "Multiset") -> None:
        if self.size != other.size:
            raise ValueError(
                f"universe mismatch: sizes {self.size} and {other.size}"
            )

    def __add__(self, other: Union["Multiset", int]) -> "Multiset":
        other = _coerce(other, self.size)
        self._match(other)
        return Multiset(tuple(a + b for a, b in zip(self.values, other.values)))

    __radd__ = __add__

    def __sub__(self, other: Union["Multiset", int]) -> "Multiset":
        other = _coerce(other, self.size)
        self._match(other)
        return Multiset(tuple(a - b for a, b in zip(self.values, other.values)))

    def __rsub__(self, other: Union["Multiset", int]) -> "Multiset":
        return _coerce(other, self.size).__sub__(self)

    def __neg__(self) -> "Multiset":
        return Multiset(tuple(-a for a in self.values))

    def __mul__(self, other: Union["Multiset", int]) -> "Multiset":
        other = _coerce(other, self.size)
        self._match(other)
        return Multiset(tuple(a * b for a, b in zip(self.values, other.values)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Multiset":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        return Multiset(tuple(a**exponent for a in self.values))

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.values)) + "]"


def _coerce(value: Union["Multiset", int], size: int) -> Multiset:
    if isinstance(value, Multiset):
        return value
    if isinstance(value, int):
        return Multiset.constant(value, size)
    raise TypeError(f"cannot combine a Multiset with {value!r}")


def chi(subset: int | Iterable[int], universe: Universe) -> Multiset:
    """The characteristic function of a subset: 1 on it, 0 off it."""
    mask = subset if isinstance(subset, int) else mask_of(subset)
    if mask & ~universe.mask:
        raise ValueError("subset is not contained in the universe")
    return Multiset(tuple(mask >> i & 1 for i in universe.elements()))


def eval_multiset(
    term: Term,
    assignment: Mapping[str, Multiset],
    *,
    universe: Universe | None = None,
) -> Multiset:
    """Evaluate a term pointwise in the signed-multiset ring.

    Every term is interpretable here: addition, subtraction, negation and
    multiplication act elementwise over the integers and powers are
    genuine integer powers.  On characteristic functions the power agrees
    with the idempotent collapse used by the class semantics.  The
    universe may be omitted when the assignment is nonempty.
    """
    sizes = {m.size for m in assignment.values()}
    if universe is not None:
        sizes.add(universe.size)
    if len(sizes) > 1:
        raise ValueError(f"universe mismatch: sizes {sorted(sizes)}")
    if not sizes:
        raise ValueError("cannot infer the universe from an empty assignment")
    size = sizes.pop()

    def walk(node: Term) -> Multiset:
        if isinstance(node, Var):
            if node.name not in assignment:
                raise KeyError(f"no value assigned to variable {node.name!r}")
            return assignment[node.name]
        if isinstance(node, Zero):
            return Multiset.constant(0, size)
        if isinstance(node, One):
            return Multiset.constant(1, size)
        if isinstance(node, IntLit):
            return Multiset.constant(node.value, size)
        if isinstance(node, Add):
            return walk(node.left) + walk(node.right)
        if isinstance(node, Sub):
            return walk(node.left) - walk(node.right)
        if isinstance(node, Mul):
            return walk(node.left) * walk(node.right)
        if isinstance(node, Neg):
            return -walk(node.operand)
        if isinstance(node, Pow):
            return walk(node.base) ** node.exponent
        raise TypeError(f"not a Term: {node!r}")

    return walk(term)


# ----------------------------------------------------------------------
# Exhaustive idempotent checking


def holds_in_idempotents(
    eq_lhs: Polynomial,
    universe: Universe,
    *,
    max_vars: int | None = None,
) -> Literal[True] | ClassAssignment:
    """Does eq_lhs = 0 hold for every assignment of characteristic
    functions to its variables?

    Returns True when it does, otherwise the first counterexample in the
    fixed enumeration order: variables sorted by name, subsets by
    increasing bitmask, earlier variables varying slowest.  Note the
    counterexample is truthy; compare against True explicitly.
    """
    names = eq_lhs.variables()
    check_variable_limit(universe.size * len(names), max_vars)
    for combo in product(universe.subsets(), repeat=len(names)):
        assignment = dict(zip(names, combo))
        for i in universe.elements():
            point = {name: mask >> i & 1 for name, mask in assignment.items()}
            if eq_lhs.evaluate(point) != 0:
                return ClassAssignment(universe, assignment)
    return True
