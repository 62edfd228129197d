"""Tetralemma tuples, quadrant classification and tuple-level checks."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import ArityError, PreconditionError
from .formula import And, Formula, Not, Or, disjoin
from .semantics import (
    DEFAULT_MAX_LETTERS,
    Status,
    Valuation,
    Verdict,
    equivalent,
    evaluate,
    semantic_status,
)


class KotiKind(enum.Enum):
    DILEMMA = "dilemma"
    TRILEMMA10 = "trilemma10"
    TRILEMMA11 = "trilemma11"
    MODIFIED3 = "modified3"
    MODIFIED7 = "modified7"
    DUAL12 = "dual12"
    DUAL13 = "dual13"
    PROPER14 = "proper14"

    @property
    def generators(self) -> int:
        return 2 if self in _TWO_GENERATORS else 1


_TWO_GENERATORS = {KotiKind.TRILEMMA10, KotiKind.MODIFIED7, KotiKind.DUAL12, KotiKind.PROPER14}


def _schema(kind: KotiKind, a: Formula, b: Formula | None) -> tuple[Formula, ...]:
    if kind is KotiKind.DILEMMA:
        return (a, Not(a))
    if kind is KotiKind.TRILEMMA10:
        return (a, b, Not(Or(a, b)))
    if kind is KotiKind.TRILEMMA11:
        return (a, Not(a), Not(Or(a, Not(a))))
    if kind is KotiKind.MODIFIED3:
        return (a, Not(a), Or(a, Not(a)), Not(Or(a, Not(a))))
    if kind is KotiKind.MODIFIED7:
        return (a, b, Or(a, b), Not(Or(a, b)))
    if kind is KotiKind.DUAL12:
        return (a, b, And(a, b), Not(And(a, b)))
    if kind is KotiKind.DUAL13:
        return (a, Not(a), And(a, Not(a)), Not(And(a, Not(a))))
    # Same four alternatives as the AN 4.99 list, in the order used for the
    # finitude argument.
    return (And(a, Not(b)), And(Not(a), b), And(a, b), And(Not(a), Not(b)))


@dataclass(frozen=True)
class KotiTuple:
    kind: KotiKind
    generators: tuple[Formula, ...]
    alternatives: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.generators) != self.kind.generators:
            raise ArityError(f"{self.kind.value} takes {self.kind.generators} generator(s)")
        b = self.generators[1] if len(self.generators) == 2 else None
        if self.alternatives != _schema(self.kind, self.generators[0], b):
            raise ValueError("alternatives do not match the construction schema")

    def __len__(self):
        return len(self.alternatives)

    def __iter__(self):
        return iter(self.alternatives)

    def __getitem__(self, i):
        return self.alternatives[i]


def build_koti(kind: KotiKind | str, a: Formula, b: Formula | None = None) -> KotiTuple:
    kind = KotiKind(kind)
    given = 1 if b is None else 2
    if given != kind.generators:
        raise ArityError(
            f"{kind.value} takes {kind.generators} generator(s), got {given}"
        )
    generators = (a,) if b is None else (a, b)
    return KotiTuple(kind, generators, _schema(kind, a, b))


class Quadrant(enum.Enum):
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    L_HALF_1 = "L_half_1"
    L_HALF_2 = "L_half_2"

    @property
    def pair(self):
        return _PAIRS.get(self)


_QUADRANT_OF = {(0, 1): Quadrant.L1, (1, 0): Quadrant.L2, (1, 1): Quadrant.L3, (0, 0): Quadrant.L4}
_PAIRS = {q: p for p, q in _QUADRANT_OF.items()}
QUADRANTS = (Quadrant.L1, Quadrant.L2, Quadrant.L3, Quadrant.L4)
HALVES = (Quadrant.L_HALF_1, Quadrant.L_HALF_2)


def classify_formula(p: Formula, v0: Valuation, v1: Valuation) -> Quadrant:
    """Quadrant of ``p`` from the pair ``(v0(p), v1(p))``."""
    return _QUADRANT_OF[(evaluate(p, v0), evaluate(p, v1))]


@dataclass(frozen=True)
class PartitionReport:
    members: dict[Quadrant, list[Formula]]
    valuations: tuple[Valuation, ...]

    def quadrant_of(self, f: Formula) -> Quadrant:
        for q, fs in self.members.items():
            if f in fs:
                return q
        raise KeyError(f)


def partition_report(fs: Sequence[Formula], v0: Valuation, v1: Valuation) -> PartitionReport:
    members: dict[Quadrant, list[Formula]] = {q: [] for q in QUADRANTS}
    for f in fs:
        members[classify_formula(f, v0, v1)].append(f)
    return PartitionReport(members, (v0, v1))


def dilemma_partition(fs: Sequence[Formula], v: Valuation) -> PartitionReport:
    """Split by the single value ``v(f)``: 0 goes to L_half_1, 1 to L_half_2."""
    members: dict[Quadrant, list[Formula]] = {q: [] for q in HALVES}
    for f in fs:
        members[HALVES[evaluate(f, v)]].append(f)
    return PartitionReport(members, (v,))


@dataclass(frozen=True)
class RepresentativesVerdict:
    quadrants: tuple[Quadrant, ...]
    distinct: bool

    def __bool__(self):
        return self.distinct


def check_representatives(t: KotiTuple, v0: Valuation, v1: Valuation) -> RepresentativesVerdict:
    """Quadrant of every alternative, given witnesses of the tuple's hypothesis.

    One-generator tuples need ``v0(a) = 0`` and ``v1(a) = 1`` (``a`` generic);
    two-generator tuples need ``(v0(a), v0(b)) = (0, 1)`` and
    ``(v1(a), v1(b)) = (1, 0)`` (``a``, ``b`` separable). Anything else raises
    :class:`PreconditionError` instead of returning a verdict.
    """
    a = t.generators[0]
    if len(t.generators) == 1:
        if (evaluate(a, v0), evaluate(a, v1)) != (0, 1):
            raise PreconditionError(
                f"v0, v1 do not witness genericity of {a}: need v0(a)=0 and v1(a)=1"
            )
    else:
        b = t.generators[1]
        if (evaluate(a, v0), evaluate(b, v0)) != (0, 1) or (
            evaluate(a, v1),
            evaluate(b, v1),
        ) != (1, 0):
            raise PreconditionError(
                f"v0, v1 do not witness separability of {a} and {b}"
            )
    quadrants = tuple(classify_formula(f, v0, v1) for f in t.alternatives)
    return RepresentativesVerdict(quadrants, len(set(quadrants)) == len(quadrants))


@dataclass(frozen=True)
class PairVerdict:
    holds: bool
    pair: tuple[int, int] | None = None  # 1-based alternative positions
    counterexample: Valuation | None = None

    def __bool__(self):
        return self.holds


def mutual_exclusion(t: KotiTuple | Sequence[Formula], cap: int = DEFAULT_MAX_LETTERS) -> PairVerdict:
    """Every two distinct alternatives are jointly unsatisfiable."""
    alts = list(t)
    for i, j in itertools.combinations(range(len(alts)), 2):
        status = semantic_status(And(alts[i], alts[j]), cap)
        if status.kind is not Status.CONTRADICTION:
            return PairVerdict(False, (i + 1, j + 1), status.satisfying)
    return PairVerdict(True)


def exhaustiveness(t: KotiTuple | Sequence[Formula], cap: int = DEFAULT_MAX_LETTERS) -> Verdict:
    """The disjunction of all alternatives is a tautology."""
    status = semantic_status(disjoin(list(t)), cap)
    if status.kind is Status.TAUTOLOGY:
        return Verdict(True)
    return Verdict(False, counterexample=status.falsifying)


def negate_tuple(t: KotiTuple | Sequence[Formula]) -> tuple[Formula, ...]:
    return tuple(Not(f) for f in t)


@dataclass(frozen=True)
class TupleVerdict:
    holds: bool
    position: int | None = None  # 1-based; first non-equivalent component
    counterexample: Valuation | None = None

    def __bool__(self):
        return self.holds


def tuples_equivalent(
    xs: Sequence[Formula],
    ys: Sequence[Formula],
    ordered: bool = True,
    cap: int = DEFAULT_MAX_LETTERS,
) -> TupleVerdict:
    """Component-wise classical equivalence.

    ``ordered=False`` instead asks for a one-to-one matching of equivalent
    components regardless of position.
    """
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        return TupleVerdict(False)
    if ordered:
        for k, (x, y) in enumerate(zip(xs, ys)):
            verdict = equivalent(x, y, cap)
            if not verdict:
                return TupleVerdict(False, k + 1, verdict.counterexample)
        return TupleVerdict(True)
    for perm in itertools.permutations(range(len(ys))):
        if all(equivalent(x, ys[i], cap) for x, i in zip(xs, perm)):
            return TupleVerdict(True)
    return TupleVerdict(False)


def duality_check(a: Formula, b: Formula, cap: int = DEFAULT_MAX_LETTERS) -> TupleVerdict:
    """Negating the dual tuple of ``~a, ~b`` gives the modified tuple of ``a, b``."""
    negated_dual = negate_tuple(build_koti(KotiKind.DUAL12, Not(a), Not(b)))
    return tuples_equivalent(negated_dual, build_koti(KotiKind.MODIFIED7, a, b).alternatives, cap=cap)
