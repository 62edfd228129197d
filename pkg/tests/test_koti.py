import itertools

import pytest
from hypothesis import given, settings

from catuskoti.errors import ArityError, PreconditionError
from catuskoti.formula import And, Letter, Not, Or, parse, render
from catuskoti.koti import (
    KotiKind,
    Quadrant,
    build_koti,
    check_representatives,
    classify_formula,
    dilemma_partition,
    duality_check,
    exhaustiveness,
    mutual_exclusion,
    negate_tuple,
    partition_report,
    tuples_equivalent,
)
from catuskoti.semantics import Valuation, are_separable, entails, equivalent, evaluate, semantic_status

from .conftest import formulas

A, B = Letter("A"), Letter("B")
L1, L2, L3, L4 = Quadrant.L1, Quadrant.L2, Quadrant.L3, Quadrant.L4


def V(text):
    return Valuation.parse(text)


def texts(t):
    return tuple(render(f) for f in t)


@pytest.mark.parametrize(
    "kind, gens, expected",
    [
        ("modified3", ("A",), ("A", "~A", "A | ~A", "~(A | ~A)")),
        ("proper14", ("A", "B"), ("A & ~B", "~A & B", "A & B", "~A & ~B")),
        ("trilemma10", ("A", "B"), ("A", "B", "~(A | B)")),
        ("trilemma11", ("A",), ("A", "~A", "~(A | ~A)")),
        ("dilemma", ("A",), ("A", "~A")),
        ("modified7", ("A", "B"), ("A", "B", "A | B", "~(A | B)")),
        ("dual12", ("A", "B"), ("A", "B", "A & B", "~(A & B)")),
        ("dual13", ("A",), ("A", "~A", "A & ~A", "~(A & ~A)")),
    ],
)
def test_build(kind, gens, expected):
    t = build_koti(kind, *map(parse, gens))
    assert texts(t) == expected
    assert t.kind is KotiKind(kind)
    assert len(t) == len(expected)


@pytest.mark.parametrize("kind", list(KotiKind))
def test_arity_checked(kind):
    wrong = (A,) if kind.generators == 2 else (A, B)
    with pytest.raises(ArityError):
        build_koti(kind, *wrong)


# classification -----------------------------------------------------------


def test_classify_examples():
    assert classify_formula(A, V("A=0"), V("A=1")) is L1
    v0, v1 = V("A=1,B=1"), V("A=0,B=0")
    p, q = parse("A & ~B"), parse("A | ~B")
    assert classify_formula(p, v0, v1) is L4
    assert classify_formula(q, v0, v1) is L3
    assert semantic_status(p).kind.value == "generic"
    assert semantic_status(q).kind.value == "generic"


def test_quadrant_pairs():
    assert [q.pair for q in (L1, L2, L3, L4)] == [(0, 1), (1, 0), (1, 1), (0, 0)]


@given(formulas(("A", "B"), 3))
def test_quadrant_totality(f):
    valuations = [Valuation.from_index("AB", i) for i in range(4)]
    for v0, v1 in itertools.product(valuations, repeat=2):
        q = classify_formula(f, v0, v1)
        assert q.pair == (evaluate(f, v0), evaluate(f, v1))


def test_partition_modified3():
    report = partition_report(build_koti("modified3", A), V("A=0"), V("A=1"))
    assert {q: texts(fs) for q, fs in report.members.items()} == {
        L1: ("A",), L2: ("~A",), L3: ("A | ~A",), L4: ("~(A | ~A)",)
    }


def test_partition_dual13():
    report = partition_report(build_koti("dual13", A), V("A=0"), V("A=1"))
    assert {q: texts(fs) for q, fs in report.members.items()} == {
        L1: ("A",), L2: ("~A",), L3: ("~(A & ~A)",), L4: ("A & ~A",)
    }


def test_partition_of_depth_one_formulas():
    from catuskoti.formula import enumerate_formulas

    fs = list(enumerate_formulas("AB", 1))
    report = partition_report(fs, V("A=0,B=1"), V("A=1,B=0"))
    assert sum(len(m) for m in report.members.values()) == 16
    for f in fs:
        assert report.quadrant_of(f) is classify_formula(f, V("A=0,B=1"), V("A=1,B=0"))


def test_dilemma_partition():
    r = dilemma_partition([A, Not(A)], V("A=0"))
    assert r.members == {Quadrant.L_HALF_1: [A], Quadrant.L_HALF_2: [Not(A)]}
    r = dilemma_partition([A, Not(A)], V("A=1"))
    assert r.members == {Quadrant.L_HALF_1: [Not(A)], Quadrant.L_HALF_2: [A]}
    for v in ("A=0", "A=1"):
        r = dilemma_partition([parse("A | ~A")], V(v))
        assert r.members[Quadrant.L_HALF_2] == [parse("A | ~A")]


# representatives ----------------------------------------------------------


def test_representatives_examples():
    v0, v1 = V("A=0,B=1"), V("A=1,B=0")
    r = check_representatives(build_koti("modified7", A, B), v0, v1)
    assert r.quadrants == (L1, L2, L3, L4) and r.distinct
    r = check_representatives(build_koti("dual13", A), V("A=0"), V("A=1"))
    assert r.quadrants == (L1, L2, L4, L3) and r.distinct
    r = check_representatives(build_koti("trilemma10", A, B), v0, v1)
    assert r.quadrants == (L1, L2, L4) and r.distinct


def test_representatives_precondition():
    with pytest.raises(PreconditionError):
        check_representatives(build_koti("modified3", A), V("A=1"), V("A=0"))
    with pytest.raises(PreconditionError):
        check_representatives(build_koti("modified7", A, B), V("A=0,B=0"), V("A=1,B=0"))


@settings(max_examples=100)
@given(formulas(("A", "B", "C"), 3), formulas(("A", "B", "C"), 3))
def test_separable_pairs_give_four_quadrants(a, b):
    v = are_separable(a, b)
    if not v:
        return
    v0, v1 = v.witnesses
    names = sorted(set(v0.letters))
    r = check_representatives(build_koti("modified7", a, b), v0, v1)
    assert r.quadrants == (L1, L2, L3, L4)
    assert names


# exclusivity / exhaustiveness ---------------------------------------------


def test_exclusion_examples():
    assert mutual_exclusion(build_koti("proper14", A, B))
    v = mutual_exclusion(build_koti("modified7", A, B))
    assert not v and v.pair == (1, 2)
    assert evaluate(parse("A & B"), v.counterexample) == 1
    v = mutual_exclusion(build_koti("modified3", A))
    assert not v and v.pair == (1, 3) and v.counterexample == V("A=1")


def test_modified7_alternatives_one_and_three_overlap():
    # brute-force oracle for the pair named in the docs
    assert any(
        evaluate(A, v) and evaluate(Or(A, B), v)
        for v in (Valuation.from_index("AB", i) for i in range(4))
    )


def test_exhaustiveness_examples():
    assert exhaustiveness(build_koti("proper14", A, B))
    assert exhaustiveness(build_koti("modified7", A, B))
    assert exhaustiveness(build_koti("trilemma10", A, B))
    v = exhaustiveness([A, B])
    assert not v and v.counterexample == V("A=0,B=0")


@given(formulas(("A", "B", "C"), 4), formulas(("A", "B", "C"), 4))
def test_proper14_exclusive_and_exhaustive(a, b):
    t = build_koti("proper14", a, b)
    assert mutual_exclusion(t)
    assert exhaustiveness(t)


def test_auxiliary_truth_table():
    t = build_koti("proper14", A, B)
    table = {}
    for bits in itertools.product((0, 1), repeat=2):
        v = Valuation(("A", "B"), bits)
        table[bits] = tuple(evaluate(c, v) for c in t)
    assert table == {
        (0, 0): (0, 0, 0, 1),
        (0, 1): (0, 1, 0, 0),
        (1, 0): (1, 0, 0, 0),
        (1, 1): (0, 0, 1, 0),
    }


# negation and duality -----------------------------------------------------


def test_negate_tuple():
    assert texts(negate_tuple(build_koti("dilemma", A))) == ("~A", "~~A")
    t = build_koti("dual12", Not(A), Not(B))
    assert tuples_equivalent(negate_tuple(t), build_koti("modified7", A, B).alternatives)


@given(formulas(("A", "B"), 3), formulas(("A", "B"), 3))
def test_double_negation_of_tuple(a, b):
    t = build_koti("proper14", a, b)
    assert tuples_equivalent(negate_tuple(negate_tuple(t)), t.alternatives)


@pytest.mark.parametrize("a, b", [("A", "B"), ("A", "~A"), ("A | B", "~B")])
def test_duality_examples(a, b):
    assert duality_check(parse(a), parse(b))


def test_tuple_equivalence_is_ordered_by_default():
    xs = build_koti("dual13", A).alternatives
    ys = build_koti("modified3", A).alternatives
    v = tuples_equivalent(xs, ys)
    assert not v and v.position == 3
    assert tuples_equivalent(xs, ys, ordered=False)


def test_dual13_swaps_last_two_of_modified3():
    d, m = build_koti("dual13", A), build_koti("modified3", A)
    assert equivalent(d[2], m[3]) and equivalent(d[3], m[2])


@given(formulas(("A", "B"), 3), formulas(("A", "B"), 3))
def test_denying_third_alternative_denies_everything(a, p):
    assert entails([Not(Or(a, Not(a)))], Not(p))


@given(formulas(("A", "B", "C"), 3), formulas(("A", "B", "C"), 3))
def test_denial_of_both_entails_denial_of_disjunction(a, b):
    assert entails([Not(a), Not(b)], Not(Or(a, b)))
    assert exhaustiveness(build_koti("trilemma10", a, b))


def test_kotituple_invariant():
    t = build_koti("proper14", A, B)
    with pytest.raises(ValueError):
        type(t)(t.kind, t.generators, t.alternatives[::-1])
    assert t.alternatives[2] == And(A, B)
