"""Truth-table scanning kernel.

A formula is compiled to a postfix program over letter indices and scanned
across the valuation space with bit-parallel evaluation. The compiled
extension ``_ckernel`` is used when it was built; otherwise the pure-Python
``_pykernel`` is used. Set ``CATUSKOTI_PURE_PYTHON=1`` to force the fallback.

Valuation index ``i`` over letters ``(L0, ..., Lk-1)`` assigns ``Lj`` the bit
``(i >> (k - 1 - j)) & 1``: the first letter is the most significant bit.
"""

from __future__ import annotations

import os
from array import array
from typing import Sequence

from . import _pykernel
from .formula import And, Formula, Implies, Letter, Not, Or

OP_NOT = -1
OP_AND = -2
OP_OR = -3
OP_IMPLIES = -4
OP_XOR = -5

_OPCODES = {And: OP_AND, Or: OP_OR, Implies: OP_IMPLIES}

MAX_LETTERS = 62

if os.environ.get("CATUSKOTI_PURE_PYTHON"):
    backend = _pykernel
else:
    try:
        from . import _ckernel as backend
    except ImportError:  # extension not built
        backend = _pykernel

BACKEND_NAME = "compiled" if backend is not _pykernel else "python"

for _b in {backend, _pykernel}:
    _b.register_nodes(Letter, Not, _OPCODES)


class Program:
    """A compiled postfix program together with its letter order."""

    __slots__ = ("letters", "code")

    def __init__(self, letters: tuple[str, ...], code: array):
        self.letters = letters
        self.code = code

    @property
    def n(self) -> int:
        return len(self.letters)

    def __repr__(self):
        return f"Program(letters={self.letters!r}, code={list(self.code)!r})"


def compile_formulas(
    formulas: Sequence[Formula], combine: int | None = None, names: Sequence[str] = ()
) -> Program:
    """Compile one formula, or several folded with the binary opcode ``combine``.

    Letters are numbered in first-occurrence order, starting from ``names``.
    """
    index: dict[str, int] = {name: i for i, name in enumerate(names)}
    code = array("i")
    for k, f in enumerate(formulas):
        backend.emit(f, index, code)
        if k:
            code.append(combine)
    return Program(tuple(index), code)


def negated(program: Program) -> Program:
    code = array("i", program.code)
    code.append(OP_NOT)
    return Program(program.letters, code)


def find_first(program: Program, start: int = 0) -> int:
    """Smallest valuation index ``>= start`` that satisfies the program, or -1."""
    _check(program)
    return backend.find_first(program.code, program.n, start)


def count_true(program: Program) -> int:
    _check(program)
    return backend.count_true(program.code, program.n)


def truth_column(program: Program) -> bytes:
    """Value of the program at every valuation index, one byte per index."""
    _check(program)
    return backend.truth_column(program.code, program.n)


def _check(program: Program) -> None:
    if not program.code:
        raise ValueError("empty program")
    if program.n > MAX_LETTERS:
        raise ValueError(f"kernel supports at most {MAX_LETTERS} letters")
