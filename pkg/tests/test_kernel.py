import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catuskoti import kernel
from catuskoti.formula import Letter, Not, conjoin, parse

from .conftest import formulas


def naive_column(f, names):
    """Truth column by direct recursion over itertools.product, independent of the kernel."""

    def ev(g, env):
        kind = type(g).__name__
        if kind == "Letter":
            return env[g.name]
        if kind == "Not":
            return 1 - ev(g.operand, env)
        a, b = ev(g.left, env), ev(g.right, env)
        return {"And": a & b, "Or": a | b, "Implies": (1 - a) | b}[kind]

    return bytes(ev(f, dict(zip(names, bits))) for bits in itertools.product((0, 1), repeat=len(names)))


@settings(max_examples=200)
@given(formulas(("A", "B", "C", "D"), 4))
def test_truth_column_matches_naive(f):
    for backend in (kernel._pykernel, kernel.backend):
        program = kernel.compile_formulas([f])
        column = backend.truth_column(program.code, program.n)
        assert column == naive_column(f, program.letters)
        assert backend.count_true(program.code, program.n) == sum(column)
        first = column.find(1)
        assert backend.find_first(program.code, program.n, 0) == first


@pytest.mark.parametrize("n", [1, 5, 6, 7, 12, 13, 16])
def test_wide_formulas(backend, n):
    # single satisfying valuation: all letters 1 except the last
    names = [f"A{i}" for i in range(n)]
    f = conjoin([Letter(x) for x in names[:-1]] + [parse(f"~{names[-1]}")])
    program = kernel.compile_formulas([f])
    expected = (1 << n) - 2
    assert kernel.find_first(program) == expected
    assert kernel.count_true(program) == 1
    column = kernel.truth_column(program)
    assert len(column) == 1 << n and column.find(1) == expected


@given(st.integers(0, 300))
def test_find_first_from_start(start):
    f = parse("A1 & ~A3 | A8")  # 8 letters, 256 valuations
    program = kernel.compile_formulas([f])
    column = naive_column(f, program.letters)
    expected = column.find(1, start) if start < len(column) else -1
    for backend in (kernel._pykernel, kernel.backend):
        assert backend.find_first(program.code, program.n, start) == expected


def test_xor_combination(backend):
    program = kernel.compile_formulas([parse("A"), parse("B")], kernel.OP_XOR)
    assert kernel.truth_column(program) == bytes([0, 1, 1, 0])


def test_letter_numbering_first_occurrence():
    program = kernel.compile_formulas([parse("B -> A & C")])
    assert program.letters == ("B", "A", "C")


def test_fixed_names_come_first():
    program = kernel.compile_formulas([parse("B")], names=("A", "B"))
    assert program.letters == ("A", "B")
    assert kernel.truth_column(program) == bytes([0, 1, 0, 1])


def test_deep_formula_does_not_hit_recursion_limit(backend):
    f = Letter("A")
    for _ in range(5000):
        f = Not(f)
    program = kernel.compile_formulas([f])
    assert len(program.code) == 5001
    assert kernel.truth_column(program) == bytes([0, 1])


def test_non_propositional_node_rejected(backend):
    with pytest.raises(TypeError):
        kernel.compile_formulas([object()])
