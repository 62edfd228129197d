"""Monadic predicate formulas evaluated over small finite models.

Syntax extends the propositional grammar with atoms ``F(x)`` and the
quantifiers ``forall x. <body>`` / ``exists x. <body>``, whose body extends
as far to the right as possible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .errors import CapExceededError, FormulaSyntaxError, OpenFormulaError, UnknownPredicateError
from .formula import And, Formula, Implies, Not, Or, Parser
from .koti import KotiKind, build_koti

DEFAULT_MAX_DOMAIN = 4
DEFAULT_MODEL_CAP = 16

PREDICATE_RE = re.compile(r"[A-Z][A-Za-z0-9]*\Z")
VARIABLE_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
KEYWORDS = {"forall", "exists"}


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    predicate: str
    variable: str

    prec = 5

    def _text(self, _render):
        return f"{self.predicate}({self.variable})"


@dataclass(frozen=True, slots=True)
class ForAll(Formula):
    variable: str
    body: Formula

    prec = 0
    keyword = "forall"

    def _text(self, render):
        return f"{self.keyword} {self.variable}. {render(self.body)}"


@dataclass(frozen=True, slots=True)
class Exists(Formula):
    variable: str
    body: Formula

    prec = 0
    keyword = "exists"

    def _text(self, render):
        return f"{self.keyword} {self.variable}. {render(self.body)}"


_QUANTIFIERS = {"forall": ForAll, "exists": Exists}


class PredicateParser(Parser):
    atom_expected = "'~', '(', quantifier or predicate atom"

    def unary(self):
        tok = self.tok
        if tok.kind == "ident" and tok.value in KEYWORDS:
            self.advance()
            var = self.variable()
            self.expect(".")
            return _QUANTIFIERS[tok.value](var, self.formula())
        return super().unary()

    def variable(self) -> str:
        tok = self.tok
        if tok.kind != "ident" or not VARIABLE_RE.match(tok.value) or tok.value in KEYWORDS:
            self.fail("variable")
        self.advance()
        return tok.value

    def atom(self):
        tok = self.tok
        if tok.kind == "ident" and PREDICATE_RE.match(tok.value):
            self.advance()
            self.expect("(")
            var = self.variable()
            self.expect(")")
            return Atom(tok.value, var)
        if tok.kind == "ident" and not self.at("("):
            raise FormulaSyntaxError(
                f"invalid predicate {tok.value!r}", self.text, tok.pos, "an uppercase predicate name"
            )
        return super().atom()


def parse_predicate(text: str) -> Formula:
    return PredicateParser(text).parse()


def free_variables(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {f.variable}
    if isinstance(f, (ForAll, Exists)):
        return free_variables(f.body) - {f.variable}
    if isinstance(f, Not):
        return free_variables(f.operand)
    return free_variables(f.left) | free_variables(f.right)


def predicates(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {f.predicate}
    if isinstance(f, (ForAll, Exists)):
        return predicates(f.body)
    if isinstance(f, Not):
        return predicates(f.operand)
    return predicates(f.left) | predicates(f.right)


@dataclass(frozen=True)
class FiniteModel:
    domain: tuple[str, ...]
    extensions: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.domain:
            raise ValueError("the domain must be nonempty")
        object.__setattr__(
            self, "extensions", {p: frozenset(e) for p, e in self.extensions.items()}
        )
        universe = set(self.domain)
        for p, ext in self.extensions.items():
            if not ext <= universe:
                raise ValueError(f"extension of {p} is not a subset of the domain")

    def holds(self, predicate: str, element: str) -> bool:
        try:
            return element in self.extensions[predicate]
        except KeyError:
            raise UnknownPredicateError(predicate) from None

    def __str__(self):
        exts = "; ".join(
            f"{p}={{{','.join(d for d in self.domain if d in ext)}}}"
            for p, ext in sorted(self.extensions.items())
        )
        return f"domain {{{','.join(self.domain)}}}" + (f"; {exts}" if exts else "")


def eval_model(f: Formula, m: FiniteModel) -> int:
    """Value of a closed formula in ``m``; quantifiers range over the whole domain."""
    free = free_variables(f)
    if free:
        raise OpenFormulaError(f"formula has free variable(s): {', '.join(sorted(free))}")
    missing = predicates(f) - set(m.extensions)
    if missing:
        raise UnknownPredicateError(sorted(missing)[0])
    return _eval(f, m, {})


def _eval(f: Formula, m: FiniteModel, env: dict[str, str]) -> int:
    if isinstance(f, Atom):
        return int(m.holds(f.predicate, env[f.variable]))
    if isinstance(f, Not):
        return 1 - _eval(f.operand, m, env)
    if isinstance(f, ForAll):
        return int(all(_eval(f.body, m, {**env, f.variable: d}) for d in m.domain))
    if isinstance(f, Exists):
        return int(any(_eval(f.body, m, {**env, f.variable: d}) for d in m.domain))
    a = _eval(f.left, m, env)
    b = _eval(f.right, m, env)
    if isinstance(f, And):
        return a & b
    if isinstance(f, Or):
        return a | b
    if isinstance(f, Implies):
        return (1 - a) | b
    raise TypeError(f"not a monadic formula: {f!r}")


def _check_cap(npreds: int, n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("domain size must be at least 1")
    if npreds * n > cap:
        raise CapExceededError(
            f"{npreds} predicate(s) over {n} elements exceed the cap of {cap} extension bits"
        )


def enumerate_models(
    preds: Sequence[str] | set[str], n: int, cap: int = DEFAULT_MODEL_CAP
) -> Iterator[FiniteModel]:
    """Every model over the domain ``d1..dn`` for the given predicates.

    Model ``i`` puts element ``d(j+1)`` into the ``k``-th predicate (sorted by
    name) when bit ``k*n + j`` of ``i`` is set, so for one predicate the
    extensions run ``{}, {d1}, {d2}, {d1,d2}, ...``.
    """
    names = sorted(preds)
    _check_cap(len(names), n, cap)
    domain = tuple(f"d{j + 1}" for j in range(n))
    for i in range(1 << (len(names) * n)):
        yield FiniteModel(
            domain,
            {
                p: frozenset(domain[j] for j in range(n) if (i >> (k * n + j)) & 1)
                for k, p in enumerate(names)
            },
        )


def models_up_to(preds, max_n: int, cap: int = DEFAULT_MODEL_CAP) -> Iterator[FiniteModel]:
    _check_cap(len(set(preds)), max_n, cap)
    for n in range(1, max_n + 1):
        yield from enumerate_models(preds, n, cap)


@dataclass(frozen=True)
class FinVerdict:
    holds: bool
    countermodel: FiniteModel | None = None

    def __bool__(self):
        return self.holds


def equivalent_fin(
    p: Formula, q: Formula, max_n: int = DEFAULT_MAX_DOMAIN, cap: int = DEFAULT_MODEL_CAP
) -> FinVerdict:
    """Same value on every model of every domain size ``1..max_n``."""
    preds = predicates(p) | predicates(q)
    for m in models_up_to(preds, max_n, cap):
        if eval_model(p, m) != eval_model(q, m):
            return FinVerdict(False, m)
    return FinVerdict(True)


def satisfying_model(
    f: Formula, n: int, cap: int = DEFAULT_MODEL_CAP
) -> FiniteModel | None:
    """First model of size exactly ``n`` that makes ``f`` true."""
    return next((m for m in enumerate_models(predicates(f), n, cap) if eval_model(f, m)), None)


# --------------------------------------------------------------------------
# the finitude tetralemma

F_EXISTS = Exists("x", Atom("F", "x"))
F_EXISTS_NOT = Exists("x", Not(Atom("F", "x")))
F_FORALL = ForAll("x", Atom("F", "x"))
F_FORALL_NOT = ForAll("x", Not(Atom("F", "x")))

#: the four alternatives as simplified by the quantifier dualities
SIMPLIFIED_ALTERNATIVES = (
    F_FORALL,
    F_FORALL_NOT,
    And(F_EXISTS, F_EXISTS_NOT),
    ForAll("x", And(Atom("F", "x"), Not(Atom("F", "x")))),
)

#: single-predicate formulas used for regression checks on domain size
PREDICATE_CORPUS = {
    "exists F": F_EXISTS,
    "exists ~F": F_EXISTS_NOT,
    "forall F": F_FORALL,
    "forall ~F": F_FORALL_NOT,
    "~exists ~F": Not(F_EXISTS_NOT),
    "~exists F": Not(F_EXISTS),
    "~forall F": Not(F_FORALL),
    "exists F & exists ~F": And(F_EXISTS, F_EXISTS_NOT),
    "forall (F & ~F)": SIMPLIFIED_ALTERNATIVES[3],
    "exists (F | ~F)": Exists("x", Or(Atom("F", "x"), Not(Atom("F", "x")))),
}


def finitude_koti():
    """The proper tetralemma generated by ``exists x. F(x)`` and ``exists x. ~F(x)``."""
    return build_koti(KotiKind.PROPER14, F_EXISTS, F_EXISTS_NOT)


def redundant_guards(alternatives: Sequence[Formula]) -> tuple[Formula, ...]:
    """``(C1, C2 & ~C1, C3 & ~C1 & ~C2, ...)``: each alternative excludes the earlier ones."""
    out = []
    for i, c in enumerate(alternatives):
        guarded = c
        for earlier in alternatives[:i]:
            guarded = And(guarded, Not(earlier))
        out.append(guarded)
    return tuple(out)


@dataclass(frozen=True)
class PredicateKotiReport:
    max_n: int
    components: tuple[FinVerdict, ...]
    c4_unsatisfiable: dict[int, bool]
    c3_unsatisfiable: dict[int, bool]
    c3_witness: FiniteModel | None
    dualities: tuple[FinVerdict, FinVerdict]
    exclusive: bool
    exhaustive: bool
    redundant_guard: FinVerdict

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "components equivalent to simplified forms": all(self.components),
            "C4 unsatisfiable at every size": all(self.c4_unsatisfiable.values()),
            "C3 unsatisfiable exactly at size 1": all(
                unsat == (n == 1) for n, unsat in self.c3_unsatisfiable.items()
            ),
            "~exists ~F == forall F": bool(self.dualities[0]),
            "~exists F == forall ~F": bool(self.dualities[1]),
            "alternatives pairwise incompatible": self.exclusive,
            "alternatives jointly exhaustive": self.exhaustive,
            "redundant guards change nothing": bool(self.redundant_guard),
        }

    @property
    def holds(self) -> bool:
        return all(self.checks.values())

    def __bool__(self):
        return self.holds


def predicate_koti_check(
    max_n: int = DEFAULT_MAX_DOMAIN, cap: int = DEFAULT_MODEL_CAP
) -> PredicateKotiReport:
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    _check_cap(1, max_n, cap)
    alts = finitude_koti().alternatives
    components = tuple(
        equivalent_fin(c, s, max_n, cap) for c, s in zip(alts, SIMPLIFIED_ALTERNATIVES)
    )
    sizes = range(1, max_n + 1)
    c4_unsat = {n: satisfying_model(alts[3], n, cap) is None for n in sizes}
    c3_unsat = {n: satisfying_model(alts[2], n, cap) is None for n in sizes}
    dualities = (
        equivalent_fin(Not(F_EXISTS_NOT), F_FORALL, max_n, cap),
        equivalent_fin(Not(F_EXISTS), F_FORALL_NOT, max_n, cap),
    )
    exclusive = exhaustive = True
    for m in models_up_to({"F"}, max_n, cap):
        values = [eval_model(c, m) for c in alts]
        exclusive &= sum(values) <= 1
        exhaustive &= sum(values) >= 1
    guarded = redundant_guards(alts)
    redundant = next(
        (v for v in (equivalent_fin(c, g, max_n, cap) for c, g in zip(alts, guarded)) if not v),
        FinVerdict(True),
    )
    return PredicateKotiReport(
        max_n,
        components,
        c4_unsat,
        c3_unsat,
        satisfying_model(alts[2], 2, cap),
        dualities,
        exclusive,
        exhaustive,
        redundant,
    )

