import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from catuskoti import manyvalued as mv
from catuskoti.errors import ConnectiveError, UndeclaredLetterError
from catuskoti.formula import And, Implies, Letter, Not, Or, depth, enumerate_formulas, parse
from catuskoti.koti import Quadrant, classify_formula
from catuskoti.manyvalued import (
    B4_LABEL_OF,
    ORDER,
    B4Label,
    Connective,
    FourValue,
    Semantics,
    ValuationPair,
    apply4,
    audit_paper_tables,
    b4_correspondence,
    diff_tables,
    fold_eval,
    full_table,
    join,
    leq,
    meet,
    pair_eval,
    printed_table,
    sweep_compositionality,
    valuation_pairs,
    verify_compositionality,
)
from catuskoti.semantics import Valuation

from .conftest import formulas

t, b, n, f = FourValue.T, FourValue.B, FourValue.N, FourValue.F
NOT, AND, OR, IMP = Connective.NOT, Connective.AND, Connective.OR, Connective.IMPLIES
A, B = Letter("A"), Letter("B")
values = st.sampled_from(list(FourValue))


def V(text):
    return Valuation.parse(text)


def VP(a, b_):
    return ValuationPair(V(a), V(b_))


def componentwise(c, *ops):
    # oracle: classical truth functions written out on each coordinate
    fns = {
        NOT: lambda x: 1 - x,
        AND: lambda x, y: x * y,
        OR: lambda x, y: max(x, y),
        IMP: lambda x, y: max(1 - x, y),
    }
    fn = fns[c]
    return FourValue.from_bits(fn(*(o.value[0] for o in ops)), fn(*(o.value[1] for o in ops)))


# values -------------------------------------------------------------------


def test_four_values():
    assert [v.value for v in (t, b, n, f)] == [(1, 1), (1, 0), (0, 1), (0, 0)]
    assert len({v.value for v in FourValue}) == 4
    for v in FourValue:
        assert FourValue.from_bits(*v.value) is v
        assert FourValue.from_symbol(v.symbol) is v
    assert [str(v) for v in ORDER] == ["t", "b", "n", "f"]


def test_connective_lookup():
    assert Connective.lookup("->") is IMP
    assert Connective.lookup("And") is AND
    assert Connective.lookup("¬") is NOT
    with pytest.raises(ValueError):
        Connective.lookup("xor")


# apply4 -------------------------------------------------------------------


@pytest.mark.parametrize(
    "sem, c, ops, expected",
    [
        ("pairing", NOT, (b,), n),
        ("pairing", OR, (b, n), t),
        ("pairing", AND, (b, n), f),
        ("fde", NOT, (b,), b),
        ("pairing", IMP, (n, f), b),
    ],
)
def test_apply4_examples(sem, c, ops, expected):
    assert apply4(sem, c, *ops) is expected


def test_fde_has_no_implication():
    with pytest.raises(ConnectiveError):
        apply4("fde", "->", t, t)
    with pytest.raises(ConnectiveError):
        full_table(Semantics.FDE, IMP)
    with pytest.raises(ConnectiveError):
        diff_tables("pairing", "fde", "->")


def test_arity_mismatch():
    with pytest.raises(TypeError):
        apply4("pairing", NOT, t, t)
    with pytest.raises(TypeError):
        apply4("pairing", AND, t)


@pytest.mark.parametrize("sem", ["pairing", "b4"])
@pytest.mark.parametrize("c", list(Connective))
def test_pairing_and_b4_are_componentwise(sem, c):
    for ops in itertools.product(ORDER, repeat=c.arity):
        assert apply4(sem, c, *ops) is componentwise(c, *ops)


# tables -------------------------------------------------------------------


def test_table_examples():
    assert full_table("pairing", NOT).entries == {(t,): f, (b,): n, (n,): b, (f,): t}
    assert full_table("pairing", AND).row(n) == (n, f, n, f)
    assert full_table("fde", NOT).entries == {(t,): f, (b,): b, (n,): n, (f,): t}


@pytest.mark.parametrize("sem", list(Semantics))
def test_table_sizes(sem):
    for c in sem.connectives:
        table = full_table(sem, c)
        assert len(table.entries) == 4 ** c.arity
        assert list(table.entries) == list(itertools.product(ORDER, repeat=c.arity))


def test_table_render():
    assert full_table("pairing", AND).render() == (
        "& | t b n f\n"
        "--+--------\n"
        "t | t b n f\n"
        "b | b b f f\n"
        "n | n f n f\n"
        "f | f f f f\n"
    )
    assert full_table("pairing", NOT).render() == "~ |\n--+--\nt | f\nb | n\nn | b\nf | t\n"


def test_table_tuples():
    rows = full_table("pairing", IMP).tuples()
    assert len(rows) == 16
    assert rows[0] == ("->", "t", "t", "t")
    assert ("->", "n", "f", "b") in rows
    assert full_table("pairing", NOT).tuples()[1] == ("~", "b", "n")


# audit --------------------------------------------------------------------


def test_audit():
    report = audit_paper_tables()
    assert report.cells == {NOT: 4, AND: 16, OR: 16, IMP: 16}
    for c in (NOT, AND, OR):
        assert report.mismatches_for(c) == []
        assert report.matched(c) == report.cells[c]
    bad = report.mismatches_for(IMP)
    assert {m.operands for m in bad} == {(b, n), (b, f)}
    assert all(m.printed is f and m.computed is n for m in bad)
    assert report.matched(IMP) == 14


def test_printed_implication_row_b():
    assert printed_table(IMP).row(b) == (t, t, f, f)
    assert full_table("pairing", IMP).row(b) == (t, t, n, n)


def test_printed_tables_agree_with_oracle_elsewhere():
    for c in Connective:
        printed = printed_table(c)
        wrong = {ops for ops, v in printed.entries.items() if v is not componentwise(c, *ops)}
        assert wrong == (set() if c is not IMP else {(b, n), (b, f)})


# FDE and B4 ---------------------------------------------------------------


def test_diff_tables():
    assert diff_tables("pairing", "fde", NOT) == {(b,), (n,)}
    assert diff_tables("pairing", "fde", AND) == set()
    assert diff_tables("pairing", "fde", OR) == set()
    for c in Connective:
        assert diff_tables("pairing", "b4", c) == set()


def test_fde_matches_lattice():
    for x, y in itertools.product(FourValue, repeat=2):
        assert apply4("fde", AND, x, y) is meet(x, y) is apply4("pairing", AND, x, y)
        assert apply4("fde", OR, x, y) is join(x, y) is apply4("pairing", OR, x, y)


def test_negations_are_involutions():
    for sem in ("pairing", "fde"):
        for x in FourValue:
            assert apply4(sem, NOT, apply4(sem, NOT, x)) is x


def test_b4_labels():
    assert B4_LABEL_OF == {b: B4Label(1, 1), t: B4Label(1, 0), f: B4Label(0, 1), n: B4Label(0, 0)}
    assert str(B4_LABEL_OF[b]) == "<1,1>"


def test_b4_correspondence():
    report = b4_correspondence()
    assert report.bijective
    assert report.commutes == {c: True for c in Connective}
    assert report


def test_b4_correspondence_detects_a_wrong_relabeling(monkeypatch):
    swapped = dict(B4_LABEL_OF)
    swapped[t], swapped[b] = swapped[b], swapped[t]
    monkeypatch.setattr(mv, "B4_LABEL_OF", swapped)
    monkeypatch.setattr(mv, "VALUE_OF_B4_LABEL", {v: k for k, v in swapped.items()})
    assert not b4_correspondence()


# lattice ------------------------------------------------------------------


def test_order():
    assert leq(f, b) and leq(b, t) and leq(f, n) and leq(n, t)
    assert not leq(b, n) and not leq(n, b)


@given(values, values, values)
def test_lattice_laws(x, y, z):
    for op in (meet, join):
        assert op(x, x) is x
        assert op(x, y) is op(y, x)
        assert op(op(x, y), z) is op(x, op(y, z))
    assert meet(x, join(x, y)) is x
    assert join(x, meet(x, y)) is x
    assert leq(meet(x, y), x) and leq(x, join(x, y))


# evaluation ---------------------------------------------------------------


def test_pair_eval_examples():
    assert pair_eval(A, VP("A=1", "A=0")) is b
    assert pair_eval(parse("A & ~B"), VP("A=1,B=1", "A=0,B=0")) is f
    for vp in valuation_pairs(["A"]):
        assert pair_eval(parse("A | ~A"), vp) is t


def test_pair_eval_undeclared():
    with pytest.raises(UndeclaredLetterError):
        pair_eval(And(A, B), VP("A=1", "A=0"))
    with pytest.raises(ValueError):
        VP("A=1", "B=0")


def test_valuation_pairs():
    pairs = valuation_pairs(["A", "B"])
    assert len(pairs) == 16
    assert len({(p.first, p.second) for p in pairs}) == 16


@given(formulas(("A", "B"), 4))
def test_diagonal_collapses_to_classical(g):
    for i in range(4):
        v = Valuation.from_index("AB", i)
        assert pair_eval(g, ValuationPair(v, v)) in (t, f)


@given(formulas(("A", "B"), 4))
def test_negation_case_of_compositionality(g):
    for vp in valuation_pairs(["A", "B"]):
        assert pair_eval(Not(g), vp) is apply4("pairing", NOT, pair_eval(g, vp))


@given(formulas(("A", "B"), 4))
def test_fold_matches_direct(g):
    for vp in valuation_pairs(["A", "B"]):
        assert fold_eval(g, vp) is pair_eval(g, vp)
        assert fold_eval(g, vp, Semantics.B4) is pair_eval(g, vp)


def test_compositionality_examples():
    assert verify_compositionality([And(A, Not(A))], VP("A=1", "A=1"))
    assert pair_eval(And(A, Not(A)), VP("A=0", "A=0")) is f
    vp = VP("A=1,B=0", "A=0,B=1")
    assert pair_eval(Implies(A, B), vp) is fold_eval(Implies(A, B), vp) is n


def test_fde_fold_differs_but_pairing_fold_holds():
    corpus = [A, parse("A -> B")]
    vp = VP("A=1,B=0", "A=0,B=0")
    # FDE negation differs from the pairing one on this pair
    assert fold_eval(Not(A), vp, Semantics.FDE) is b
    assert pair_eval(Not(A), vp) is n
    v = verify_compositionality(corpus, vp)
    assert v and v.checked == 2


def test_sweep_agrees_with_per_formula_check():
    fs = list(enumerate_formulas("AB", 2))
    assert all(verify_compositionality(fs, vp) for vp in valuation_pairs("AB"))
    v = sweep_compositionality("AB", 2)
    assert v and v.checked == len(fs) == 786


def test_sweep_finds_an_injected_fault(monkeypatch):
    real = mv._code_table

    def printed_implication(c):
        if c is not IMP:
            return real(c)
        out = np.zeros((4, 4), dtype=np.uint8)
        for (x, y), value in printed_table(IMP).entries.items():
            out[mv._CODE[x], mv._CODE[y]] = mv._CODE[value]
        return out

    monkeypatch.setattr(mv, "_code_table", printed_implication)
    v = sweep_compositionality("AB", 2)
    assert not v
    assert depth(v.formula) >= 1
    assert v.direct is pair_eval(v.formula, v.pair)
    assert v.direct is not v.folded


# quadrants ----------------------------------------------------------------


@given(formulas(("A", "B"), 3))
def test_quadrants_factor_through_pair_eval(g):
    expected = {n: Quadrant.L1, b: Quadrant.L2, t: Quadrant.L3, f: Quadrant.L4}
    for vp in valuation_pairs(["A", "B"]):
        assert classify_formula(g, vp.first, vp.second) is expected[pair_eval(g, vp)]


def test_or_table_row_b():
    assert full_table("pairing", OR).row(b) == (t, b, t, b)
    assert Or(A, B) == parse("A | B")
