"""Propositional formulas: AST, concrete syntax, rendering.

Grammar, loosest to tightest::

    formula := implies
    implies := or ( "->" implies )?        right-associative
    or      := and ( "|" and )*            left-associative
    and     := unary ( "&" unary )*        left-associative
    unary   := "~" unary | atom
    atom    := LETTER | "(" formula ")"
    LETTER  := [A-Z][0-9]*
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import FormulaSyntaxError

__all__ = [
    "Formula",
    "Letter",
    "Not",
    "And",
    "Or",
    "Implies",
    "parse",
    "render",
    "letters",
    "depth",
    "enumerate_formulas",
    "random_formula",
    "disjoin",
    "conjoin",
]

LETTER_RE = re.compile(r"[A-Z][0-9]*\Z")

# Binding strength used by the renderer. Quantifier nodes in the predicate
# module use 0 so that they are parenthesised whenever they are an operand.
PREC_IMPLIES = 1
PREC_OR = 2
PREC_AND = 3
PREC_NOT = 4
PREC_ATOM = 5


class Formula:
    """Base class of all formula nodes. Instances are immutable."""

    __slots__ = ()
    prec = PREC_ATOM

    def __str__(self):
        return render(self)

    def __invert__(self):
        return Not(self)

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)

    def implies(self, other):
        return Implies(self, other)


@dataclass(frozen=True, slots=True)
class Letter(Formula):
    name: str

    prec = PREC_ATOM

    def __post_init__(self):
        if not LETTER_RE.match(self.name):
            raise ValueError(f"invalid sentence letter {self.name!r}")

    def _text(self, _render):
        return self.name


@dataclass(frozen=True, slots=True)
class Not(Formula):
    operand: Formula

    prec = PREC_NOT


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula

    prec = PREC_AND
    symbol = "&"


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula

    prec = PREC_OR
    symbol = "|"


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula

    prec = PREC_IMPLIES
    symbol = "->"


BINARY = (And, Or, Implies)


def render(f: Formula) -> str:
    """Canonical text of ``f`` with the fewest parentheses that still parse back to ``f``."""
    if isinstance(f, Not):
        inner = render(f.operand)
        if f.operand.prec < PREC_NOT:
            inner = f"({inner})"
        return "~" + inner
    if isinstance(f, BINARY):
        left, right = render(f.left), render(f.right)
        if isinstance(f, Implies):
            # right-associative: only the left operand can need parentheses
            left_wrap = f.left.prec <= f.prec
            right_wrap = f.right.prec < f.prec
        else:
            left_wrap = f.left.prec < f.prec
            right_wrap = f.right.prec <= f.prec
        if left_wrap:
            left = f"({left})"
        if right_wrap:
            right = f"({right})"
        return f"{left} {f.symbol} {right}"
    return f._text(render)


def letters(f: Formula) -> tuple[str, ...]:
    """Distinct sentence letters of ``f`` in first-occurrence order."""
    seen: dict[str, None] = {}
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Letter):
            seen.setdefault(node.name, None)
        elif isinstance(node, Not):
            stack.append(node.operand)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return tuple(seen)


def letters_of_all(formulas: Sequence[Formula]) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for f in formulas:
        for name in letters(f):
            seen.setdefault(name, None)
    return tuple(seen)


def depth(f: Formula) -> int:
    if isinstance(f, Letter):
        return 0
    if isinstance(f, Not):
        return 1 + depth(f.operand)
    return 1 + max(depth(f.left), depth(f.right))


def conjoin(formulas: Sequence[Formula]) -> Formula:
    """Left-nested conjunction of a nonempty sequence."""
    it = iter(formulas)
    acc = next(it)
    for f in it:
        acc = And(acc, f)
    return acc


def disjoin(formulas: Sequence[Formula]) -> Formula:
    it = iter(formulas)
    acc = next(it)
    for f in it:
        acc = Or(acc, f)
    return acc


def enumerate_formulas(names: Sequence[str], max_depth: int) -> Iterator[Formula]:
    """Yield every formula over ``names`` whose depth is at most ``max_depth``.

    Order is deterministic: by depth, then negations before conjunctions,
    disjunctions and implications, operands in enumeration order. Only the
    layers below ``max_depth`` are held in memory.
    """
    shallower: list[Formula] = []
    layer: list[Formula] = [Letter(n) for n in names]
    yield from layer
    for d in range(1, max_depth + 1):
        previous = shallower + layer
        fresh = _layer(previous, layer)
        if d == max_depth:
            yield from fresh
            return
        layer_list = list(fresh)
        yield from layer_list
        shallower, layer = previous, layer_list


def random_formula(rng, names: Sequence[str], max_depth: int) -> Formula:
    """Random formula of depth at most ``max_depth``; ``rng`` is a :class:`random.Random`."""
    if max_depth == 0 or rng.random() < 0.2:
        return Letter(rng.choice(names))
    kind = rng.choice((Not, And, Or, Implies))
    if kind is Not:
        return Not(random_formula(rng, names, max_depth - 1))
    return kind(random_formula(rng, names, max_depth - 1), random_formula(rng, names, max_depth - 1))


def _layer(previous: list[Formula], newest: list[Formula]) -> Iterator[Formula]:
    # formulas of exactly the next depth: at least one operand from the newest layer
    newest_ids = {id(f) for f in newest}
    for f in newest:
        yield Not(f)
    for cls in BINARY:
        for left, right in itertools.product(previous, repeat=2):
            if id(left) in newest_ids or id(right) in newest_ids:
                yield cls(left, right)


# --------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"\s*(?:(->)|([~&|().])|([A-Za-z][A-Za-z0-9_]*)|(\S))")


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # "op", "ident", "end"
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            # only trailing whitespace remains
            tokens.append(Token("end", "", len(text)))
            return tokens
        arrow, punct, ident, junk = m.groups()
        start = m.start(m.lastindex)
        if junk is not None:
            raise FormulaSyntaxError(f"unexpected character {junk!r}", text, start)
        if ident is not None:
            tokens.append(Token("ident", ident, start))
        else:
            tokens.append(Token("op", arrow or punct, start))
        pos = m.end()


class Parser:
    """Recursive-descent parser. Subclasses extend ``unary`` and ``atom``."""

    atom_expected = "'~', '(' or sentence letter"

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, value: str) -> bool:
        return self.tok.kind == "op" and self.tok.value == value

    def expect(self, value: str) -> Token:
        if not self.at(value):
            self.fail(f"'{value}'")
        return self.advance()

    def fail(self, expected: str):
        tok = self.tok
        if tok.kind == "end":
            message = "unexpected end of input"
        else:
            message = f"unexpected token {tok.value!r}"
        raise FormulaSyntaxError(message, self.text, tok.pos, expected)

    def parse(self):
        f = self.formula()
        if self.tok.kind != "end":
            self.fail("end of input")
        return f

    def formula(self):
        return self.implies()

    def implies(self):
        left = self.or_()
        if self.at("->"):
            self.advance()
            return Implies(left, self.implies())
        return left

    def or_(self):
        left = self.and_()
        while self.at("|"):
            self.advance()
            left = Or(left, self.and_())
        return left

    def and_(self):
        left = self.unary()
        while self.at("&"):
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.at("~"):
            self.advance()
            return Not(self.unary())
        return self.atom()

    def atom(self):
        tok = self.tok
        if self.at("("):
            self.advance()
            f = self.formula()
            self.expect(")")
            return f
        if tok.kind == "ident":
            if not LETTER_RE.match(tok.value):
                raise FormulaSyntaxError(
                    f"invalid sentence letter {tok.value!r}",
                    self.text,
                    tok.pos,
                    "an uppercase letter optionally followed by digits",
                )
            self.advance()
            return Letter(tok.value)
        self.fail(self.atom_expected)


def parse(text: str) -> Formula:
    """Parse propositional formula text; raises :class:`FormulaSyntaxError`."""
    return Parser(text).parse()
