"""Four-valued semantics from evaluating under two valuations at once.

A value is the pair of classical values a formula takes under two
valuations: ``t = (1, 1)``, ``b = (1, 0)``, ``n = (0, 1)``, ``f = (0, 0)``.
Three semantics are provided over these four values:

``PAIRING``
    connectives act componentwise on the pair;
``FDE``
    first-degree entailment: meet and join of the order
    ``f < b, n < t`` with a negation that fixes ``b`` and ``n``; no
    implication;
``B4``
    defined natively on conventional-truth / ultimate-falsity labels and
    carried over by the fixed relabeling in :data:`B4_LABEL_OF`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ConnectiveError
from .formula import BINARY, And, Formula, Implies, Letter, Not, Or
from .semantics import Valuation, evaluate


class FourValue(enum.Enum):
    T = (1, 1)
    B = (1, 0)
    N = (0, 1)
    F = (0, 0)

    @property
    def first(self) -> int:
        return self.value[0]

    @property
    def second(self) -> int:
        return self.value[1]

    @property
    def symbol(self) -> str:
        return self.name.lower()

    @classmethod
    def from_bits(cls, first: int, second: int) -> "FourValue":
        return cls((first, second))

    @classmethod
    def from_symbol(cls, s: str) -> "FourValue":
        return cls[s.upper()]

    def __str__(self):
        return self.symbol


# row / column order of every rendered table
ORDER = (FourValue.T, FourValue.B, FourValue.N, FourValue.F)


class Connective(enum.Enum):
    NOT = "~"
    AND = "&"
    OR = "|"
    IMPLIES = "->"

    @property
    def arity(self) -> int:
        return 1 if self is Connective.NOT else 2

    @classmethod
    def lookup(cls, name: str) -> "Connective":
        key = name.strip().lower()
        if key in _CONNECTIVE_NAMES:
            return _CONNECTIVE_NAMES[key]
        raise ValueError(f"unknown connective {name!r}")


_CONNECTIVE_NAMES = {
    "~": Connective.NOT, "not": Connective.NOT, "¬": Connective.NOT,
    "&": Connective.AND, "and": Connective.AND, "∧": Connective.AND,
    "|": Connective.OR, "or": Connective.OR, "∨": Connective.OR,
    "->": Connective.IMPLIES, "implies": Connective.IMPLIES, "→": Connective.IMPLIES,
}

_NODE_CONNECTIVE = {Not: Connective.NOT, And: Connective.AND, Or: Connective.OR, Implies: Connective.IMPLIES}


class Semantics(enum.Enum):
    PAIRING = "pairing"
    FDE = "fde"
    B4 = "b4"

    @property
    def connectives(self) -> tuple[Connective, ...]:
        if self is Semantics.FDE:
            return (Connective.NOT, Connective.AND, Connective.OR)
        return tuple(Connective)


# --------------------------------------------------------------------------
# classical operations on bits, used coordinate-wise


def _classical(c: Connective, x: int, y: int = 0) -> int:
    if c is Connective.NOT:
        return 1 - x
    if c is Connective.AND:
        return x & y
    if c is Connective.OR:
        return x | y
    return (1 - x) | y


def _pairing(c: Connective, x: FourValue, y: FourValue | None) -> FourValue:
    if c is Connective.NOT:
        return FourValue.from_bits(1 - x.first, 1 - x.second)
    return FourValue.from_bits(_classical(c, x.first, y.first), _classical(c, x.second, y.second))


# --------------------------------------------------------------------------
# FDE: lattice operations on the logical order

_BELOW = {
    FourValue.F: {FourValue.F, FourValue.B, FourValue.N, FourValue.T},
    FourValue.B: {FourValue.B, FourValue.T},
    FourValue.N: {FourValue.N, FourValue.T},
    FourValue.T: {FourValue.T},
}


def leq(x: FourValue, y: FourValue) -> bool:
    """Logical order: ``f`` at the bottom, ``t`` at the top, ``b`` and ``n`` incomparable."""
    return y in _BELOW[x]


def meet(x: FourValue, y: FourValue) -> FourValue:
    lower = [z for z in FourValue if leq(z, x) and leq(z, y)]
    return next(z for z in lower if all(leq(w, z) for w in lower))


def join(x: FourValue, y: FourValue) -> FourValue:
    upper = [z for z in FourValue if leq(x, z) and leq(y, z)]
    return next(z for z in upper if all(leq(z, w) for w in upper))


_FDE_NOT = {FourValue.T: FourValue.F, FourValue.F: FourValue.T, FourValue.B: FourValue.B, FourValue.N: FourValue.N}


def _fde(c: Connective, x: FourValue, y: FourValue | None) -> FourValue:
    if c is Connective.NOT:
        return _FDE_NOT[x]
    if c is Connective.AND:
        return meet(x, y)
    if c is Connective.OR:
        return join(x, y)
    raise ConnectiveError("FDE has no primitive implication")


# --------------------------------------------------------------------------
# B4 over (conventionally true, ultimately false) labels


@dataclass(frozen=True)
class B4Label:
    ct: int
    uf: int

    def __str__(self):
        return f"<{self.ct},{self.uf}>"


B4_LABEL_OF = {
    FourValue.B: B4Label(1, 1),
    FourValue.T: B4Label(1, 0),
    FourValue.F: B4Label(0, 1),
    FourValue.N: B4Label(0, 0),
}
VALUE_OF_B4_LABEL = {label: value for value, label in B4_LABEL_OF.items()}


def b4_apply(c: Connective, x: B4Label, y: B4Label | None = None) -> B4Label:
    """B4 connectives on labels.

    The CT coordinate is classical. The UF coordinate records falsity, so it
    is combined dually: a conjunction is ultimately false when either side
    is, a disjunction when both are, and an implication when its antecedent
    is not ultimately false but its consequent is.
    """
    if c is Connective.NOT:
        return B4Label(1 - x.ct, 1 - x.uf)
    if c is Connective.AND:
        return B4Label(x.ct & y.ct, x.uf | y.uf)
    if c is Connective.OR:
        return B4Label(x.ct | y.ct, x.uf & y.uf)
    return B4Label((1 - x.ct) | y.ct, (1 - x.uf) & y.uf)


def _b4(c: Connective, x: FourValue, y: FourValue | None) -> FourValue:
    label = b4_apply(c, B4_LABEL_OF[x], None if y is None else B4_LABEL_OF[y])
    return VALUE_OF_B4_LABEL[label]


_APPLY = {Semantics.PAIRING: _pairing, Semantics.FDE: _fde, Semantics.B4: _b4}


def apply4(
    sem: Semantics | str,
    connective: Connective | str,
    x: FourValue,
    y: FourValue | None = None,
) -> FourValue:
    sem = Semantics(sem)
    c = connective if isinstance(connective, Connective) else Connective.lookup(connective)
    if c not in sem.connectives:
        raise ConnectiveError(f"{sem.value} has no connective {c.value!r}")
    if (y is None) != (c.arity == 1):
        raise TypeError(f"connective {c.value!r} takes {c.arity} operand(s)")
    return _APPLY[sem](c, x, y)


# --------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class TruthTable4:
    connective: Connective
    entries: dict[tuple[FourValue, ...], FourValue]

    def __getitem__(self, operands):
        if isinstance(operands, FourValue):
            operands = (operands,)
        return self.entries[tuple(operands)]

    def row(self, x: FourValue) -> tuple[FourValue, ...]:
        if self.connective.arity == 1:
            return (self.entries[(x,)],)
        return tuple(self.entries[(x, y)] for y in ORDER)

    def tuples(self) -> list[tuple[str, ...]]:
        """Machine-readable rows ``(op, x, y, result)``; ``y`` is omitted for negation."""
        return [
            (self.connective.value, *(v.symbol for v in operands), result.symbol)
            for operands, result in self.entries.items()
        ]

    def render(self) -> str:
        op = self.connective.value
        width = max(len(op), 1)
        if self.connective.arity == 1:
            lines = [f"{op:>{width}} |", "-" * width + "-+--"]
            lines += [f"{x.symbol:>{width}} | {self.entries[(x,)].symbol}" for x in ORDER]
        else:
            lines = [f"{op:>{width}} | " + " ".join(y.symbol for y in ORDER)]
            lines.append("-" * width + "-+-" + "-" * 7)
            lines += [
                f"{x.symbol:>{width}} | " + " ".join(v.symbol for v in self.row(x)) for x in ORDER
            ]
        return "\n".join(lines) + "\n"


def full_table(sem: Semantics | str, connective: Connective | str) -> TruthTable4:
    sem = Semantics(sem)
    c = connective if isinstance(connective, Connective) else Connective.lookup(connective)
    if c not in sem.connectives:
        raise ConnectiveError(f"{sem.value} has no connective {c.value!r}")
    entries = {ops: apply4(sem, c, *ops) for ops in itertools.product(ORDER, repeat=c.arity)}
    return TruthTable4(c, entries)


def _rows(*rows: str) -> list[list[FourValue]]:
    return [[FourValue.from_symbol(s) for s in row.split()] for row in rows]


# The four tables exactly as printed, rows and columns in t b n f order.
PRINTED_TABLES = {
    Connective.NOT: _rows("f", "n", "b", "t"),
    Connective.OR: _rows("t t t t", "t b t b", "t t n n", "t b n f"),
    Connective.AND: _rows("t b n f", "b b f f", "n f n f", "f f f f"),
    Connective.IMPLIES: _rows("t b n f", "t t f f", "t b t b", "t t t t"),
}


def printed_table(c: Connective) -> TruthTable4:
    rows = PRINTED_TABLES[c]
    if c.arity == 1:
        entries = {(x,): rows[i][0] for i, x in enumerate(ORDER)}
    else:
        entries = {(x, y): rows[i][j] for i, x in enumerate(ORDER) for j, y in enumerate(ORDER)}
    return TruthTable4(c, entries)


@dataclass(frozen=True)
class Mismatch:
    connective: Connective
    operands: tuple[FourValue, ...]
    printed: FourValue
    computed: FourValue


@dataclass(frozen=True)
class AuditReport:
    cells: dict[Connective, int]
    mismatches: tuple[Mismatch, ...]

    def mismatches_for(self, c: Connective) -> list[Mismatch]:
        return [m for m in self.mismatches if m.connective is c]

    def matched(self, c: Connective) -> int:
        return self.cells[c] - len(self.mismatches_for(c))


def audit_paper_tables() -> AuditReport:
    """Compare the componentwise tables with the transcribed printed ones, cell by cell."""
    cells = {}
    mismatches = []
    for c in Connective:
        computed = full_table(Semantics.PAIRING, c)
        printed = printed_table(c)
        cells[c] = len(printed.entries)
        for ops, value in printed.entries.items():
            if computed.entries[ops] is not value:
                mismatches.append(Mismatch(c, ops, value, computed.entries[ops]))
    return AuditReport(cells, tuple(mismatches))


def diff_tables(
    sem_a: Semantics | str, sem_b: Semantics | str, connective: Connective | str
) -> set[tuple[FourValue, ...]]:
    """Operand tuples on which the two semantics give different results."""
    a = full_table(sem_a, connective)
    b = full_table(sem_b, connective)
    return {ops for ops in a.entries if a.entries[ops] is not b.entries[ops]}


@dataclass(frozen=True)
class B4Report:
    bijective: bool
    commutes: dict[Connective, bool]

    @property
    def holds(self) -> bool:
        return self.bijective and all(self.commutes.values())

    def __bool__(self):
        return self.holds


def b4_correspondence() -> B4Report:
    """Check the relabeling is a bijection that carries every B4 table onto the pairing table."""
    labels = set(B4_LABEL_OF.values())
    all_labels = {B4Label(ct, uf) for ct in (0, 1) for uf in (0, 1)}
    bijective = len(labels) == 4 and labels == all_labels
    commutes = {}
    for c in Connective:
        ok = True
        for ops in itertools.product(ORDER, repeat=c.arity):
            via_b4 = VALUE_OF_B4_LABEL[b4_apply(c, *(B4_LABEL_OF[v] for v in ops))]
            ok &= via_b4 is _pairing(c, *ops, *([None] if c.arity == 1 else []))
        commutes[c] = ok
    return B4Report(bijective, commutes)


# --------------------------------------------------------------------------
# evaluation of formulas


@dataclass(frozen=True)
class ValuationPair:
    first: Valuation
    second: Valuation

    def __post_init__(self):
        if set(self.first.letters) != set(self.second.letters):
            raise ValueError("both valuations must declare the same letters")


def pair_eval(f: Formula, vp: ValuationPair) -> FourValue:
    """``(v1(f), v2(f))`` from two independent classical evaluations."""
    return FourValue.from_bits(evaluate(f, vp.first), evaluate(f, vp.second))


def fold_eval(f: Formula, vp: ValuationPair, sem: Semantics = Semantics.PAIRING) -> FourValue:
    """Bottom-up evaluation: leaves by :func:`pair_eval`, connectives by ``apply4``."""
    if isinstance(f, Letter):
        return pair_eval(f, vp)
    c = _NODE_CONNECTIVE[type(f)]
    if c is Connective.NOT:
        return apply4(sem, c, fold_eval(f.operand, vp, sem))
    return apply4(sem, c, fold_eval(f.left, vp, sem), fold_eval(f.right, vp, sem))


@dataclass(frozen=True)
class CompositionalityVerdict:
    holds: bool
    checked: int
    formula: Formula | None = None
    pair: ValuationPair | None = None
    direct: FourValue | None = None
    folded: FourValue | None = None

    def __bool__(self):
        return self.holds


def verify_compositionality(corpus: Iterable[Formula], vp: ValuationPair) -> CompositionalityVerdict:
    checked = 0
    for f in corpus:
        direct = pair_eval(f, vp)
        folded = fold_eval(f, vp)
        checked += 1
        if direct is not folded:
            return CompositionalityVerdict(False, checked, f, vp, direct, folded)
    return CompositionalityVerdict(True, checked)


def valuation_pairs(names: Sequence[str]) -> list[ValuationPair]:
    """All ``4**len(names)`` pairs of valuations over ``names``."""
    singles = [Valuation.from_index(names, i) for i in range(1 << len(names))]
    return [ValuationPair(v1, v2) for v1 in singles for v2 in singles]


_CODE = {v: 2 * v.first + v.second for v in FourValue}
_VALUE_OF_CODE = {code: v for v, code in _CODE.items()}


def _code_table(c: Connective) -> np.ndarray:
    """Pairing table as a 4x4 array of value codes; negation ignores the column."""
    table = full_table(Semantics.PAIRING, c)
    out = np.zeros((4, 4), dtype=np.uint8)
    for i, j in itertools.product(range(4), repeat=2):
        ops = (_VALUE_OF_CODE[i],) if c.arity == 1 else (_VALUE_OF_CODE[i], _VALUE_OF_CODE[j])
        out[i, j] = _CODE[table[ops]]
    return out


def sweep_compositionality(names: Sequence[str], max_depth: int) -> CompositionalityVerdict:
    """:func:`verify_compositionality` over every formula of depth ``<= max_depth``
    and every valuation pair over ``names``, vectorised layer by layer.

    Each formula is an index into its layer. Two arrays are kept per layer:
    its classical value under every single valuation (the direct route) and
    its four-valued code under every valuation pair obtained by looking up
    the pairing table on the children's codes (the folded route). The routes
    share only the leaves. The first mismatch, if any, is rebuilt as a
    :class:`Formula`.
    """
    names = tuple(names)
    n_vals = 1 << len(names)
    pairs_first, pairs_second = np.divmod(np.arange(n_vals * n_vals), n_vals)
    tables = {c: _code_table(c) for c in Connective}

    # leaves
    leaf_cols = np.array(
        [[Valuation.from_index(names, i)[name] for i in range(n_vals)] for name in names],
        dtype=np.uint8,
    )
    leaf_codes = 2 * leaf_cols[:, pairs_first] + leaf_cols[:, pairs_second]
    leaves = [Letter(name) for name in names]
    checked = len(leaves)

    # every formula seen so far: classical columns, codes, and how to rebuild it
    cols, codes = leaf_cols, leaf_codes
    builders: list = [lambda k: leaves[k]]
    offsets = [0]
    newest = (0, len(leaves))

    def rebuild(k):
        layer = max(i for i, off in enumerate(offsets) if off <= k)
        return builders[layer](k - offsets[layer])

    for depth in range(1, max_depth + 1):
        lo, hi = newest
        total = cols.shape[0]
        new_cols, new_codes, pieces = [], [], []

        # negations of the newest layer
        c_not = (1 - cols[lo:hi]).astype(np.uint8)
        k_not = tables[Connective.NOT][codes[lo:hi], 0]
        pieces.append(("not", hi - lo))
        new_cols.append(c_not)
        new_codes.append(k_not)

        # binary nodes with at least one operand from the newest layer
        left_idx, right_idx = np.divmod(np.arange(total * total), total)
        keep = (left_idx >= lo) | (right_idx >= lo)
        left_idx, right_idx = left_idx[keep], right_idx[keep]
        for cls in BINARY:
            c = _NODE_CONNECTIVE[cls]
            a, b = cols[left_idx], cols[right_idx]
            if c is Connective.AND:
                direct = a & b
            elif c is Connective.OR:
                direct = a | b
            else:
                direct = (1 - a) | b
            new_cols.append(direct.astype(np.uint8))
            new_codes.append(tables[c][codes[left_idx], codes[right_idx]])
            pieces.append((cls, len(left_idx)))

        layer_cols = np.concatenate(new_cols)
        layer_codes = np.concatenate(new_codes)
        direct_codes = 2 * layer_cols[:, pairs_first] + layer_cols[:, pairs_second]
        bad = np.nonzero(np.any(direct_codes != layer_codes, axis=1))[0]

        def build(k, pieces=pieces, lo=lo, left_idx=left_idx, right_idx=right_idx):
            for kind, size in pieces:
                if k < size:
                    if kind == "not":
                        return Not(rebuild(lo + k))
                    return kind(rebuild(int(left_idx[k])), rebuild(int(right_idx[k])))
                k -= size
            raise IndexError(k)

        builders.append(build)
        offsets.append(total)
        if bad.size:
            k = int(bad[0])
            p = int(np.nonzero(direct_codes[k] != layer_codes[k])[0][0])
            vp = ValuationPair(
                Valuation.from_index(names, int(pairs_first[p])),
                Valuation.from_index(names, int(pairs_second[p])),
            )
            return CompositionalityVerdict(
                False,
                checked + k + 1,
                build(k),
                vp,
                _VALUE_OF_CODE[int(direct_codes[k, p])],
                _VALUE_OF_CODE[int(layer_codes[k, p])],
            )
        checked += layer_cols.shape[0]
        if depth < max_depth:
            cols = np.concatenate([cols, layer_cols])
            codes = np.concatenate([codes, layer_codes])
            newest = (total, total + layer_cols.shape[0])
    return CompositionalityVerdict(True, checked)
