"""Command-line interface.

Exit status: 0 success (or verdict true), 1 verdict false, 2 usage or
input error. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import koti as K
from . import manyvalued as MV
from . import predicate as P
from .errors import CatuskotiError
from .formula import Formula, Letter, Not, parse, render
from .semantics import (
    DEFAULT_MAX_LETTERS,
    Status,
    Valuation,
    are_separable,
    entails,
    equivalent,
    evaluate,
    semantic_status,
)


@dataclass
class CommandResult:
    exit_code: int
    body: str
    data: dict = field(default_factory=dict)


class UsageError(CatuskotiError):
    pass


def _bool(b) -> str:
    return "true" if b else "false"


def _val(v: Valuation | None):
    return None if v is None else v.as_dict()


def _tree(f: Formula):
    name = type(f).__name__
    if isinstance(f, Letter):
        return {"letter": f.name}
    if isinstance(f, P.Atom):
        return {"atom": f.predicate, "variable": f.variable}
    if isinstance(f, (P.ForAll, P.Exists)):
        return {name.lower(): f.variable, "body": _tree(f.body)}
    if isinstance(f, Not):
        return {"not": _tree(f.operand)}
    return {name.lower(): [_tree(f.left), _tree(f.right)]}


def _valuation(text: str | None, flag: str) -> Valuation:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return Valuation.parse(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _formulas(texts: Sequence[str]) -> list[Formula]:
    return [parse(t) for t in texts]


def render_output(data: dict, text: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    return text


# --------------------------------------------------------------------------
# handlers return (exit_code, data, text)


def cmd_parse(args):
    f = parse(args.formula)
    return 0, {"formula": render(f), "tree": _tree(f)}, render(f) + "\n"


def cmd_status(args):
    f = parse(args.formula)
    st = semantic_status(f, args.max_letters)
    lines = [f"formula: {render(f)}", f"status: {st.kind.value}"]
    witnesses = None
    if st.kind is Status.GENERIC:
        lines += [f"falsifying: {st.falsifying}", f"satisfying: {st.satisfying}"]
        witnesses = {"falsifying": _val(st.falsifying), "satisfying": _val(st.satisfying)}
    data = {"formula": render(f), "status": st.kind.value, "witnesses": witnesses}
    return 0, data, "\n".join(lines) + "\n"


def cmd_equiv(args):
    p, q = _formulas([args.left, args.right])
    v = equivalent(p, q, args.max_letters)
    lines = [f"equivalent: {_bool(v)}"]
    if not v:
        lines.append(f"counterexample: {v.counterexample}")
    data = {"formulas": [render(p), render(q)], "equivalent": v.holds, "counterexample": _val(v.counterexample)}
    return (0 if v else 1), data, "\n".join(lines) + "\n"


def cmd_entails(args):
    if len(args.formulas) < 1:
        raise UsageError("entails needs a conclusion")
    fs = _formulas(args.formulas)
    premises, conclusion = fs[:-1], fs[-1]
    v = entails(premises, conclusion, args.max_letters)
    lines = [f"entails: {_bool(v)}"]
    if not v:
        lines.append(f"counterexample: {v.counterexample}")
    data = {
        "premises": [render(f) for f in premises],
        "conclusion": render(conclusion),
        "entails": v.holds,
        "counterexample": _val(v.counterexample),
    }
    return (0 if v else 1), data, "\n".join(lines) + "\n"


def cmd_separable(args):
    a, b = _formulas([args.left, args.right])
    v = are_separable(a, b, args.max_letters)
    lines = [f"separable: {_bool(v)}"]
    witnesses = None
    if v:
        v0, v1 = v.witnesses
        lines += [f"V0: {v0}", f"V1: {v1}"]
        witnesses = {"V0": _val(v0), "V1": _val(v1)}
    data = {"formulas": [render(a), render(b)], "separable": v.holds, "witnesses": witnesses}
    return (0 if v else 1), data, "\n".join(lines) + "\n"


def cmd_classify(args):
    f = parse(args.formula)
    v0, v1 = _valuation(args.v0, "--v0"), _valuation(args.v1, "--v1")
    q = K.classify_formula(f, v0, v1)
    pair = (evaluate(f, v0), evaluate(f, v1))
    text = f"formula: {render(f)}\npair: ({pair[0]},{pair[1]})\nquadrant: {q.value}\n"
    return 0, {"formula": render(f), "pair": list(pair), "quadrant": q.value}, text


def _report_text(report: K.PartitionReport, labels: Sequence[str]) -> str:
    lines = [f"{label}: {v}" for label, v in zip(labels, report.valuations)]
    for q, members in report.members.items():
        lines.append(f"{q.value}:")
        lines += [f"  {render(f)}" for f in members] or ["  (none)"]
    return "\n".join(lines) + "\n"


def cmd_partition(args):
    fs = _formulas(args.formulas)
    if args.v is not None:
        if args.v0 or args.v1:
            raise UsageError("use either --v or --v0/--v1")
        report = K.dilemma_partition(fs, _valuation(args.v, "--v"))
        labels = ["V"]
    else:
        report = K.partition_report(fs, _valuation(args.v0, "--v0"), _valuation(args.v1, "--v1"))
        labels = ["V0", "V1"]
    data = {
        "valuations": {label: _val(v) for label, v in zip(labels, report.valuations)},
        "quadrant": {q.value: [render(f) for f in m] for q, m in report.members.items()},
    }
    return 0, data, _report_text(report, labels)


def _koti(args) -> K.KotiTuple:
    if args.kind is None:
        raise UsageError("--kind is required")
    fs = _formulas(args.generators)
    if len(fs) not in (1, 2):
        raise UsageError("a tuple takes one or two generators")
    return K.build_koti(args.kind, *fs)


def cmd_koti_build(args):
    t = _koti(args)
    lines = [f"kind: {t.kind.value}"] + [f"{i}: {render(f)}" for i, f in enumerate(t, 1)]
    data = {"kind": t.kind.value, "alternatives": [render(f) for f in t]}
    return 0, data, "\n".join(lines) + "\n"


def cmd_koti_check(args):
    t = _koti(args)
    excl = K.mutual_exclusion(t, args.max_letters)
    exh = K.exhaustiveness(t, args.max_letters)
    lines = [f"kind: {t.kind.value}"]
    line = f"exclusivity: {_bool(excl)}"
    if not excl:
        i, j = excl.pair
        line += f" (alternatives {i} and {j} both true at {excl.counterexample})"
    lines.append(line)
    line = f"exhaustiveness: {_bool(exh)}"
    if not exh:
        line += f" (every alternative false at {exh.counterexample})"
    lines.append(line)
    data = {
        "kind": t.kind.value,
        "exclusivity": excl.holds,
        "exclusivity_pair": list(excl.pair) if excl.pair else None,
        "exhaustiveness": exh.holds,
        "counterexample": _val(exh.counterexample),
    }
    ok = excl.holds and exh.holds
    if args.v0 is not None or args.v1 is not None:
        rep = K.check_representatives(t, _valuation(args.v0, "--v0"), _valuation(args.v1, "--v1"))
        lines.append(
            "representatives: "
            + " ".join(q.value for q in rep.quadrants)
            + (" (distinct)" if rep.distinct else " (not distinct)")
        )
        data["quadrant"] = [q.value for q in rep.quadrants]
        data["distinct"] = rep.distinct
        ok = ok and rep.distinct
    return (0 if ok else 1), data, "\n".join(lines) + "\n"


def cmd_koti_duality(args):
    a, b = _formulas([args.left, args.right])
    v = K.duality_check(a, b, args.max_letters)
    negated = K.negate_tuple(K.build_koti(K.KotiKind.DUAL12, Not(a), Not(b)))
    modified = K.build_koti(K.KotiKind.MODIFIED7, a, b)
    lines = [f"negated dual:  {', '.join(render(f) for f in negated)}"]
    lines.append(f"modified:      {', '.join(render(f) for f in modified)}")
    line = f"duality: {_bool(v)}"
    if not v:
        line += f" (component {v.position} differs at {v.counterexample})"
    lines.append(line)
    data = {
        "negated_dual": [render(f) for f in negated],
        "modified": [render(f) for f in modified],
        "duality": v.holds,
        "position": v.position,
    }
    return (0 if v else 1), data, "\n".join(lines) + "\n"


def _semantics(name: str) -> MV.Semantics:
    try:
        return MV.Semantics(name.lower())
    except ValueError:
        raise UsageError(f"unknown semantics {name!r}; choose pairing, fde or b4") from None


def _connective(name: str) -> MV.Connective:
    try:
        return MV.Connective.lookup(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_mv_table(args):
    sem = _semantics(args.semantics)
    cs = [_connective(c) for c in args.connectives] or list(sem.connectives)
    tables = [MV.full_table(sem, c) for c in cs]
    text = "\n".join(t.render() for t in tables)
    data = {"semantics": sem.value, "table": [list(row) for t in tables for row in t.tuples()]}
    return 0, data, text


def cmd_mv_audit(args):
    report = MV.audit_paper_tables()
    lines = [f"{c.value}: {report.matched(c)}/{report.cells[c]} cells match" for c in MV.Connective]
    lines.append("mismatches:")
    for m in report.mismatches:
        ops = f" {m.connective.value} ".join(v.symbol for v in m.operands)
        lines.append(f"  {ops}: printed {m.printed}, componentwise {m.computed}")
    if not report.mismatches:
        lines.append("  (none)")
    data = {
        "cells": {c.value: report.cells[c] for c in MV.Connective},
        "mismatches": [
            {
                "connective": m.connective.value,
                "operands": [v.symbol for v in m.operands],
                "printed": m.printed.symbol,
                "computed": m.computed.symbol,
            }
            for m in report.mismatches
        ],
    }
    return 0, data, "\n".join(lines) + "\n"


def cmd_mv_diff(args):
    a, b = _semantics(args.sem_a), _semantics(args.sem_b)
    c = _connective(args.connective)
    diff = sorted(MV.diff_tables(a, b, c), key=lambda ops: [MV.ORDER.index(v) for v in ops])
    cells = [" ".join(v.symbol for v in ops) for ops in diff]
    text = f"{a.value} vs {b.value} on {c.value}: " + (", ".join(cells) if cells else "no differences") + "\n"
    data = {"semantics": [a.value, b.value], "connective": c.value, "differences": [[v.symbol for v in ops] for ops in diff]}
    return 0, data, text


def cmd_mv_b4(args):
    report = MV.b4_correspondence()
    lines = [f"{label} -> {value}" for value, label in MV.B4_LABEL_OF.items()]
    lines.append(f"bijective: {_bool(report.bijective)}")
    lines += [f"{c.value} commutes: {_bool(ok)}" for c, ok in report.commutes.items()]
    data = {
        "relabeling": {str(label): value.symbol for value, label in MV.B4_LABEL_OF.items()},
        "bijective": report.bijective,
        "commutes": {c.value: ok for c, ok in report.commutes.items()},
    }
    return (0 if report else 1), data, "\n".join(lines) + "\n"


def _model(args) -> P.FiniteModel:
    if args.domain < 1:
        raise UsageError("--domain must be at least 1")
    domain = tuple(f"d{i + 1}" for i in range(args.domain))
    extensions = {}
    for item in args.ext or []:
        name, sep, elems = item.partition("=")
        if not sep:
            raise UsageError(f"bad --ext {item!r}; expected F=d1,d2")
        extensions[name.strip()] = frozenset(e.strip() for e in elems.split(",") if e.strip())
    try:
        return P.FiniteModel(domain, extensions)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_fol_eval(args):
    f = P.parse_predicate(args.formula)
    m = _model(args)
    value = P.eval_model(f, m)
    text = f"formula: {render(f)}\nmodel: {m}\nvalue: {value}\n"
    return 0, {"formula": render(f), "model": str(m), "value": value}, text


def cmd_fol_equiv(args):
    p, q = P.parse_predicate(args.left), P.parse_predicate(args.right)
    v = P.equivalent_fin(p, q, args.max_domain)
    lines = [f"equivalent up to domain size {args.max_domain}: {_bool(v)}"]
    if not v:
        lines.append(f"countermodel: {v.countermodel}")
    data = {
        "formulas": [render(p), render(q)],
        "equivalent": v.holds,
        "countermodel": None if v.holds else str(v.countermodel),
    }
    return (0 if v else 1), data, "\n".join(lines) + "\n"


def cmd_fol_koti(args):
    report = P.predicate_koti_check(args.max_domain)
    alts = P.finitude_koti().alternatives
    lines = [f"C{i}: {render(c)}" for i, c in enumerate(alts, 1)]
    lines += [f"{name}: {_bool(ok)}" for name, ok in report.checks.items()]
    lines.append(f"C3 witness: {report.c3_witness}")
    data = {
        "alternatives": [render(c) for c in alts],
        "checks": report.checks,
        "c3_witness": str(report.c3_witness),
        "holds": report.holds,
    }
    return (0 if report else 1), data, "\n".join(lines) + "\n"


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--max-letters", type=int, default=DEFAULT_MAX_LETTERS, metavar="N")
    common.add_argument("--max-domain", type=int, default=P.DEFAULT_MAX_DOMAIN, metavar="N")

    parser = argparse.ArgumentParser(prog="catuskoti", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(subparsers, name, func, help_):
        p = subparsers.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    leaf(sub, "parse", cmd_parse, "parse and print a formula").add_argument("formula")
    leaf(sub, "status", cmd_status, "tautology / contradiction / generic").add_argument("formula")
    p = leaf(sub, "equiv", cmd_equiv, "classical equivalence")
    p.add_argument("left")
    p.add_argument("right")
    leaf(sub, "entails", cmd_entails, "PREMISE... CONCLUSION").add_argument("formulas", nargs="+")
    p = leaf(sub, "separable", cmd_separable, "separability of two formulas")
    p.add_argument("left")
    p.add_argument("right")
    p = leaf(sub, "classify", cmd_classify, "quadrant of a formula under V0, V1")
    p.add_argument("formula")
    p.add_argument("--v0")
    p.add_argument("--v1")
    p = leaf(sub, "partition", cmd_partition, "partition formulas by V0, V1 (or by V alone)")
    p.add_argument("formulas", nargs="+")
    p.add_argument("--v0")
    p.add_argument("--v1")
    p.add_argument("--v")

    kinds = [k.value for k in K.KotiKind]
    koti = sub.add_parser("koti", help="tetralemma tuples").add_subparsers(dest="koti_command", required=True)
    for name, func, help_ in [
        ("build", cmd_koti_build, "expand a tuple"),
        ("check", cmd_koti_check, "exclusivity, exhaustiveness, representatives"),
    ]:
        p = leaf(koti, name, func, help_)
        p.add_argument("--kind", choices=kinds)
        p.add_argument("generators", nargs="+")
        if name == "check":
            p.add_argument("--v0")
            p.add_argument("--v1")
    p = leaf(koti, "duality", cmd_koti_duality, "negated dual tuple vs modified tuple")
    p.add_argument("left")
    p.add_argument("right")

    mv = sub.add_parser("mv", help="four-valued tables").add_subparsers(dest="mv_command", required=True)
    p = leaf(mv, "table", cmd_mv_table, "print connective tables")
    p.add_argument("--semantics", default="pairing")
    p.add_argument("connectives", nargs="*")
    leaf(mv, "audit", cmd_mv_audit, "compare with the printed tables")
    p = leaf(mv, "diff", cmd_mv_diff, "cells where two semantics differ")
    p.add_argument("sem_a")
    p.add_argument("sem_b")
    p.add_argument("connective")
    leaf(mv, "b4", cmd_mv_b4, "check the B4 relabeling")

    fol = sub.add_parser("fol", help="monadic predicate formulas").add_subparsers(dest="fol_command", required=True)
    p = leaf(fol, "eval", cmd_fol_eval, "evaluate in one finite model")
    p.add_argument("formula")
    p.add_argument("--domain", type=int, default=1, metavar="N")
    p.add_argument("--ext", action="append", metavar="F=d1,d2")
    p = leaf(fol, "equiv", cmd_fol_equiv, "equivalence over all models up to --max-domain")
    p.add_argument("left")
    p.add_argument("right")
    leaf(fol, "koti", cmd_fol_koti, "check the finitude tetralemma")
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    """Parse ``argv`` and dispatch; never raises for bad input, never exits."""
    parser = build_parser()
    # argparse takes a bare "->" for an option flag
    argv = ["implies" if a == "->" else a for a in argv]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(int(exc.code or 0), "")
    try:
        code, data, text = args.func(args)
    except (CatuskotiError, ValueError) as exc:
        return CommandResult(2, "", {"error": str(exc)})
    return CommandResult(code, render_output(data, text, args.format), data)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if "error" in result.data:
        print(f"catuskoti: error: {result.data['error']}", file=sys.stderr)
    sys.stdout.write(result.body)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
