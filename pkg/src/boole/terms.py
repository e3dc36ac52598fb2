"""Boole's syntactic term language.

Terms are finite trees built from variables, the constants 0 and 1 (plus
nonnegative integer literals as a ring-flavoured extension), binary ``+``,
``-`` and ``*``, a leading unary minus, and positive integer powers.

Concrete syntax, used verbatim by the command line tool::

    expr   := ['-'] prod (('+' | '-') prod)*
    prod   := factor ('*' factor)*
    factor := INT | IDENT | '(' expr ')' | factor '^' INT

Whitespace is insignificant.  ``*`` is mandatory: juxtaposition like
``xy`` would be ambiguous with multi-character identifiers.  ``^`` binds
tighter than ``*``, which binds tighter than ``+``/``-``; the binary
operators associate to the left.  Parse errors carry byte offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .polynomial import ONE, ZERO, Polynomial, _require_name

__all__ = [
    "Add",
    "IntLit",
    "Mul",
    "Neg",
    "NotTotallyInterpretableError",
    "One",
    "ParseError",
    "Pow",
    "SetComplement",
    "SetEmpty",
    "SetExpr",
    "SetIntersection",
    "SetUnion",
    "SetUniverse",
    "SetVar",
    "Sub",
    "Term",
    "Var",
    "Zero",
    "eval_set_expression",
    "format_set_expression",
    "format_term",
    "is_totally_interpretable",
    "parse",
    "poly",
    "term_to_poly",
    "term_variables",
    "to_set_expression",
    "to_term",
]


class Term:
    """Base class of term AST nodes.  Nodes are immutable and comparable."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_term(self)


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str

    def __post_init__(self) -> None:
        _require_name(self.name)


@dataclass(frozen=True, slots=True)
class Zero(Term):
    pass


@dataclass(frozen=True, slots=True)
class One(Term):
    pass


@dataclass(frozen=True, slots=True)
class IntLit(Term):
    """A nonnegative integer literal; negatives arise only via Neg/Sub."""

    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or self.value < 0:
            raise ValueError(f"integer literal must be >= 0, got {self.value!r}")


@dataclass(frozen=True, slots=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Sub(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Neg(Term):
    operand: Term


@dataclass(frozen=True, slots=True)
class Pow(Term):
    base: Term
    exponent: int

    def __post_init__(self) -> None:
        if not isinstance(self.exponent, int) or self.exponent < 1:
            raise ValueError(f"exponent must be >= 1, got {self.exponent!r}")


# ----------------------------------------------------------------------
# Parsing


class ParseError(Exception):
    """A lexical or syntax error, with the byte offset of the offence."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.message = message
        self.position = position

    def __str__(self) -> str:
        return f"{self.message} at offset {self.position}"


_SYMBOLS = set("+-*^()")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(("INT", int(text[start:i]), start))
        elif ch.isalpha():
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(("IDENT", text[start:i], start))
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("EOF", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, object, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, object, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, object, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}", tok[2])
        return self.advance()

    def parse_expr(self) -> Term:
        if self.peek()[0] == "-":
            self.advance()
            node: Term = Neg(self.parse_prod())
        else:
            node = self.parse_prod()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            right = self.parse_prod()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def parse_prod(self) -> Term:
        node = self.parse_factor()
        while self.peek()[0] == "*":
            self.advance()
            node = Mul(node, self.parse_factor())
        return node

    def parse_factor(self) -> Term:
        kind, value, position = self.peek()
        if kind == "INT":
            self.advance()
            node = _int_term(value)  # type: ignore[arg-type]
        elif kind == "IDENT":
            self.advance()
            node = Var(value)  # type: ignore[arg-type]
        elif kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
        else:
            raise ParseError("expected a number, a variable or '('", position)
        while self.peek()[0] == "^":
            self.advance()
            kind, value, position = self.peek()
            if kind != "INT":
                raise ParseError("expected an integer exponent after '^'", position)
            if value == 0:
                raise ParseError("exponent must be at least 1", position)
            self.advance()
            node = Pow(node, value)  # type: ignore[arg-type]
        return node


def _int_term(value: int) -> Term:
    if value == 0:
        return Zero()
    if value == 1:
        return One()
    return IntLit(value)


def parse(text: str) -> Term:
    """Parse concrete syntax into a Term; raises ParseError with a byte
    offset on bad input."""
    parser = _Parser(text)
    node = parser.parse_expr()
    kind, _, position = parser.peek()
    if kind != "EOF":
        raise ParseError("unexpected trailing input", position)
    return node


# ----------------------------------------------------------------------
# Printing

# Positions demand a minimum binding strength from their child; a child
# below the minimum gets parenthesized.  Neg ranks below the binary
# operators because the grammar only allows a bare minus up front.
_ATOM, _POW, _MUL, _ADD, _NEG = 5, 4, 3, 2, 1


def _render(term: Term, compact: bool) -> tuple[str, int]:
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    if isinstance(term, Var):
        return term.name, _ATOM
    if isinstance(term, Zero):
        return "0", _ATOM
    if isinstance(term, One):
        return "1", _ATOM
    if isinstance(term, IntLit):
        return str(term.value), _ATOM
    if isinstance(term, Add):
        # a leading unary minus is legal on the left spine: -x + y
        left = _child(term.left, _NEG, compact)
        right = _child(term.right, _MUL, compact)
        return f"{left}{plus}{right}", _ADD
    if isinstance(term, Sub):
        left = _child(term.left, _NEG, compact)
        right = _child(term.right, _MUL, compact)
        return f"{left}{minus}{right}", _ADD
    if isinstance(term, Mul):
        left = _child(term.left, _MUL, compact)
        right = _child(term.right, _POW, compact)
        return f"{left}*{right}", _MUL
    if isinstance(term, Neg):
        return "-" + _child(term.operand, _MUL, compact), _NEG
    if isinstance(term, Pow):
        return _child(term.base, _POW, compact) + f"^{term.exponent}", _POW
    raise TypeError(f"not a Term: {term!r}")


def _child(term: Term, minimum: int, compact: bool) -> str:
    text, strength = _render(term, compact)
    return f"({text})" if strength < minimum else text


def format_term(term: Term, compact: bool = False) -> str:
    """Deterministic concrete syntax for a term; reparses to an equal
    polynomial.  ``compact`` drops the spaces around binary operators."""
    return _render(term, compact)[0]


# ----------------------------------------------------------------------
# Compilation to polynomials


def term_to_poly(term: Term) -> Polynomial:
    """Compile a term to its canonical polynomial (powers computed with
    the flattening product, so idempotence of variables is built in)."""
    if isinstance(term, Var):
        return Polynomial.variable(term.name)
    if isinstance(term, Zero):
        return ZERO
    if isinstance(term, One):
        return ONE
    if isinstance(term, IntLit):
        return Polynomial.constant(term.value)
    if isinstance(term, Add):
        return term_to_poly(term.left) + term_to_poly(term.right)
    if isinstance(term, Sub):
        return term_to_poly(term.left) - term_to_poly(term.right)
    if isinstance(term, Mul):
        return term_to_poly(term.left) * term_to_poly(term.right)
    if isinstance(term, Neg):
        return -term_to_poly(term.operand)
    if isinstance(term, Pow):
        return term_to_poly(term.base) ** term.exponent
    raise TypeError(f"not a Term: {term!r}")


def poly(text: str) -> Polynomial:
    """Parse and compile in one step: ``poly("x + y - 2*x*y")``."""
    return term_to_poly(parse(text))


def to_term(p: Polynomial) -> Term:
    """A term whose compilation is exactly `p` (canonical term order)."""
    items = list(p.terms.items())
    if not items:
        return Zero()
    node: Term | None = None
    for mono, coeff in items:
        body = _monomial_term(mono, abs(coeff))
        if node is None:
            node = Neg(body) if coeff < 0 else body
        else:
            node = Sub(node, body) if coeff < 0 else Add(node, body)
    assert node is not None
    return node


def _monomial_term(mono: tuple[str, ...], magnitude: int) -> Term:
    factors: list[Term] = []
    if magnitude != 1 or not mono:
        factors.append(_int_term(magnitude))
    factors.extend(Var(name) for name in mono)
    node = factors[0]
    for factor in factors[1:]:
        node = Mul(node, factor)
    return node


# ----------------------------------------------------------------------
# Total interpretability and translation to set expressions
#
# A term denotes a class for *every* assignment exactly when all its
# additions are provably disjoint and all its subtractions provably
# contained, as polynomial identities.  Such terms translate directly
# into union/intersection/complement form.


class SetExpr:
    """Base class of set-expression nodes over a universe."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_set_expression(self)


@dataclass(frozen=True, slots=True)
class SetVar(SetExpr):
    name: str


@dataclass(frozen=True, slots=True)
class SetUniverse(SetExpr):
    pass


@dataclass(frozen=True, slots=True)
class SetEmpty(SetExpr):
    pass


@dataclass(frozen=True, slots=True)
class SetUnion(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True, slots=True)
class SetIntersection(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True, slots=True)
class SetComplement(SetExpr):
    operand: SetExpr


class NotTotallyInterpretableError(Exception):
    """The term has an assignment under which it denotes no class.

    Carries the innermost offending subterm and the side condition it
    fails.
    """

    def __init__(self, term: Term, condition: str):
        super().__init__(f"not totally interpretable: {format_term(term)} ({condition})")
        self.term = term
        self.condition = condition


def to_set_expression(term: Term) -> SetExpr:
    """Translate a totally interpretable term to sets: ``+`` becomes
    union, ``*`` intersection, ``s - t`` becomes s intersected with the
    complement of t (``1 - t`` is plain complement), 1 the universe and
    0 the empty set.  Raises NotTotallyInterpretableError otherwise."""
    if isinstance(term, Var):
        return SetVar(term.name)
    if isinstance(term, One):
        return SetUniverse()
    if isinstance(term, Zero):
        return SetEmpty()
    if isinstance(term, IntLit):
        if term.value == 0:
            return SetEmpty()
        if term.value == 1:
            return SetUniverse()
        raise NotTotallyInterpretableError(term, f"{term.value} is not a class")
    if isinstance(term, Mul):
        return SetIntersection(to_set_expression(term.left), to_set_expression(term.right))
    if isinstance(term, Add):
        left = to_set_expression(term.left)
        right = to_set_expression(term.right)
        if term_to_poly(term.left) * term_to_poly(term.right) != ZERO:
            raise NotTotallyInterpretableError(
                term,
                f"{format_term(term.left, compact=True)} and "
                f"{format_term(term.right, compact=True)} are not disjoint",
            )
        return SetUnion(left, right)
    if isinstance(term, Sub):
        left = to_set_expression(term.left)
        right = to_set_expression(term.right)
        if term_to_poly(term.right) * (ONE - term_to_poly(term.left)) != ZERO:
            raise NotTotallyInterpretableError(
                term,
                f"{format_term(term.right, compact=True)} is not contained in "
                f"{format_term(term.left, compact=True)}",
            )
        if isinstance(left, SetUniverse):
            return SetComplement(right)
        return SetIntersection(left, SetComplement(right))
    if isinstance(term, Pow):
        # A power of an idempotent denotes the same class as its base.
        return to_set_expression(term.base)
    if isinstance(term, Neg):
        raise NotTotallyInterpretableError(term, "unary minus has no class meaning")
    raise TypeError(f"not a Term: {term!r}")


def is_totally_interpretable(term: Term) -> bool:
    """True when the term denotes a class under every assignment."""
    try:
        to_set_expression(term)
    except NotTotallyInterpretableError:
        return False
    return True


def format_set_expression(expr: SetExpr) -> str:
    """Render with the usual symbols; nested binary operations are always
    parenthesized, complement is a postfix prime."""
    if isinstance(expr, SetVar):
        return expr.name
    if isinstance(expr, SetUniverse):
        return "U"
    if isinstance(expr, SetEmpty):
        return "∅"
    if isinstance(expr, SetUnion):
        return f"{_set_operand(expr.left)} ∪ {_set_operand(expr.right)}"
    if isinstance(expr, SetIntersection):
        return f"{_set_operand(expr.left)} ∩ {_set_operand(expr.right)}"
    if isinstance(expr, SetComplement):
        return _set_operand(expr.operand) + "′"
    raise TypeError(f"not a SetExpr: {expr!r}")


def _set_operand(expr: SetExpr) -> str:
    text = format_set_expression(expr)
    if isinstance(expr, (SetUnion, SetIntersection)):
        return f"({text})"
    return text


def eval_set_expression(expr: SetExpr, masks: Mapping[str, int], universe_mask: int) -> int:
    """Evaluate to a subset bitmask, given variable bitmasks and the full
    universe bitmask."""
    if isinstance(expr, SetVar):
        if expr.name not in masks:
            raise KeyError(f"no value assigned to variable {expr.name!r}")
        return masks[expr.name]
    if isinstance(expr, SetUniverse):
        return universe_mask
    if isinstance(expr, SetEmpty):
        return 0
    if isinstance(expr, SetUnion):
        return eval_set_expression(expr.left, masks, universe_mask) | eval_set_expression(
            expr.right, masks, universe_mask
        )
    if isinstance(expr, SetIntersection):
        return eval_set_expression(expr.left, masks, universe_mask) & eval_set_expression(
            expr.right, masks, universe_mask
        )
    if isinstance(expr, SetComplement):
        return universe_mask & ~eval_set_expression(expr.operand, masks, universe_mask)
    raise TypeError(f"not a SetExpr: {expr!r}")


def term_variables(term: Term) -> tuple[str, ...]:
    """Variable names occurring in a term, sorted."""
    names: set[str] = set()

    def walk(node: Term) -> None:
        if isinstance(node, Var):
            names.add(node.name)
        elif isinstance(node, (Add, Sub, Mul)):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Neg):
            walk(node.operand)
        elif isinstance(node, Pow):
            walk(node.base)

    walk(term)
    return tuple(sorted(names))
