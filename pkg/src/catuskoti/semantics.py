"""Classical two-valued semantics and the decision procedures built on it.

Every decision is made by exhausting the valuations of the letters that
occur in the formulas under test. Witnesses and counterexamples are always
the first qualifying valuation in binary-counting order (first letter most
significant, 0 before 1), whichever kernel backend does the scanning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from . import kernel
from .errors import CapExceededError, UndeclaredLetterError
from .formula import And, Formula, Implies, Letter, Not, Or, conjoin, letters, letters_of_all

DEFAULT_MAX_LETTERS = 20


@dataclass(frozen=True)
class Valuation:
    """Total assignment of bits to a finite, ordered set of letters."""

    letters: tuple[str, ...]
    bits: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.letters) != len(self.bits):
            raise ValueError("letters and bits differ in length")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("duplicate letter in valuation")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("valuation bits must be 0 or 1")
        object.__setattr__(self, "_index", dict(zip(self.letters, self.bits)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, int]) -> "Valuation":
        return cls(tuple(mapping), tuple(int(b) for b in mapping.values()))

    @classmethod
    def from_index(cls, names: Sequence[str], index: int) -> "Valuation":
        """Valuation number ``index`` in binary-counting order over ``names``."""
        names = tuple(names)
        n = len(names)
        bits = tuple((index >> (n - 1 - j)) & 1 for j in range(n))
        if len(set(names)) != n:
            raise ValueError("duplicate letter in valuation")
        # bits are well-formed by construction; skip __post_init__
        v = object.__new__(cls)
        object.__setattr__(v, "letters", names)
        object.__setattr__(v, "bits", bits)
        object.__setattr__(v, "_index", dict(zip(names, bits)))
        return v

    @classmethod
    def parse(cls, text: str) -> "Valuation":
        """Read ``"A=0,B=1"``; an empty string is the empty valuation."""
        mapping = {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            name, sep, bit = item.partition("=")
            name, bit = name.strip(), bit.strip()
            if not sep or bit not in ("0", "1"):
                raise ValueError(f"bad valuation entry {item!r}; expected LETTER=0 or LETTER=1")
            Letter(name)  # validates the name
            if name in mapping:
                raise ValueError(f"letter {name!r} assigned twice")
            mapping[name] = int(bit)
        return cls.from_mapping(mapping)

    def __getitem__(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UndeclaredLetterError(name) from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self):
        return len(self.letters)

    def as_dict(self) -> dict[str, int]:
        return dict(self._index)

    def restrict(self, names: Sequence[str]) -> "Valuation":
        return Valuation(tuple(names), tuple(self[n] for n in names))

    def __str__(self):
        return ",".join(f"{n}={b}" for n, b in zip(self.letters, self.bits))


class Status(enum.Enum):
    TAUTOLOGY = "tautology"
    CONTRADICTION = "contradiction"
    GENERIC = "generic"


@dataclass(frozen=True)
class SemanticStatus:
    kind: Status
    falsifying: Valuation | None = None
    satisfying: Valuation | None = None

    @property
    def witnesses(self) -> tuple[Valuation, Valuation] | None:
        if self.kind is Status.GENERIC:
            return self.falsifying, self.satisfying
        return None


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check. Truthy iff the checked property holds."""

    holds: bool
    counterexample: Valuation | None = None
    witnesses: tuple[Valuation, Valuation] | None = None

    def __bool__(self):
        return self.holds


def evaluate(f: Formula, v: Valuation) -> int:
    """Classical truth value of ``f`` under ``v`` by structural recursion."""
    if isinstance(f, Letter):
        return v[f.name]
    if isinstance(f, Not):
        return 1 - evaluate(f.operand, v)
    a = evaluate(f.left, v)
    b = evaluate(f.right, v)
    if isinstance(f, And):
        return a & b
    if isinstance(f, Or):
        return a | b
    if isinstance(f, Implies):
        return (1 - a) | b
    raise TypeError(f"not a propositional formula: {f!r}")


def _check_cap(names: Sequence[str], cap: int) -> None:
    if len(names) > cap:
        raise CapExceededError(
            f"{len(names)} letters exceed the cap of {cap} ({2 ** len(names)} valuations)"
        )


def enumerate_valuations(
    names: Sequence[str], cap: int = DEFAULT_MAX_LETTERS
) -> Iterator[Valuation]:
    """All ``2**len(names)`` valuations in binary-counting order."""
    names = tuple(names)
    _check_cap(names, cap)
    for i in range(1 << len(names)):
        yield Valuation.from_index(names, i)


def _first(program: kernel.Program) -> Valuation | None:
    i = kernel.find_first(program)
    return None if i < 0 else Valuation.from_index(program.letters, i)


def semantic_status(f: Formula, cap: int = DEFAULT_MAX_LETTERS) -> SemanticStatus:
    program = kernel.compile_formulas([f])
    _check_cap(program.letters, cap)
    satisfying = _first(program)
    if satisfying is None:
        return SemanticStatus(Status.CONTRADICTION)
    falsifying = _first(kernel.negated(program))
    if falsifying is None:
        return SemanticStatus(Status.TAUTOLOGY)
    return SemanticStatus(Status.GENERIC, falsifying, satisfying)


def is_tautology(f: Formula, cap: int = DEFAULT_MAX_LETTERS) -> bool:
    return semantic_status(f, cap).kind is Status.TAUTOLOGY


def is_contradiction(f: Formula, cap: int = DEFAULT_MAX_LETTERS) -> bool:
    return semantic_status(f, cap).kind is Status.CONTRADICTION


def is_generic(f: Formula, cap: int = DEFAULT_MAX_LETTERS) -> bool:
    return semantic_status(f, cap).kind is Status.GENERIC


def equivalent(p: Formula, q: Formula, cap: int = DEFAULT_MAX_LETTERS) -> Verdict:
    program = kernel.compile_formulas([p, q], kernel.OP_XOR)
    _check_cap(program.letters, cap)
    differing = _first(program)
    return Verdict(differing is None, counterexample=differing)


def entails(
    premises: Sequence[Formula], conclusion: Formula, cap: int = DEFAULT_MAX_LETTERS
) -> Verdict:
    """Every valuation satisfying all premises satisfies the conclusion.

    With no premises this is the tautology check on the conclusion.
    """
    premises = list(premises)
    names = letters_of_all(premises + [conclusion])
    _check_cap(names, cap)
    bad = Not(conclusion) if not premises else And(conjoin(premises), Not(conclusion))
    counter = _first(kernel.compile_formulas([bad], names=names))
    return Verdict(counter is None, counterexample=counter)


def are_separable(a: Formula, b: Formula, cap: int = DEFAULT_MAX_LETTERS) -> Verdict:
    """Some valuation gives ``(a, b) = (0, 1)`` and some gives ``(1, 0)``."""
    names = letters_of_all([a, b])
    _check_cap(names, cap)
    v0 = _first(kernel.compile_formulas([And(Not(a), b)], names=names))
    v1 = _first(kernel.compile_formulas([And(a, Not(b))], names=names))
    if v0 is None or v1 is None:
        return Verdict(False)
    return Verdict(True, witnesses=(v0, v1))


def covers(v: Valuation, f: Formula) -> bool:
    return all(name in v for name in letters(f))
