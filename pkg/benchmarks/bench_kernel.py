"""Compare the compiled kernel with the pure-Python fallback.

    python3 benchmarks/bench_kernel.py [--repeat N]

Three workloads: a full truth-table count over many letters (one long
scan), first-witness search on many small formulas (the shape of
``semantic_status``), and compilation alone. Results from both backends are
checked for equality before timing is reported.
"""

from __future__ import annotations

import argparse
import random
import timeit

from catuskoti import _pykernel, kernel
from catuskoti.formula import Letter, conjoin, disjoin, random_formula

try:
    from catuskoti import _ckernel
except ImportError:
    _ckernel = None


def wide_formula(n_letters: int, seed: int = 0):
    # a random CNF-ish formula that touches every letter
    rng = random.Random(seed)
    names = [f"A{i}" for i in range(n_letters)]
    clauses = []
    for _ in range(n_letters):
        lits = [Letter(rng.choice(names)) for _ in range(3)]
        lits = [~x if rng.random() < 0.5 else x for x in lits]
        clauses.append(disjoin(lits))
    clauses.append(disjoin([Letter(n) for n in names]))
    return conjoin(clauses)


def small_formulas(count: int, seed: int = 1):
    rng = random.Random(seed)
    return [random_formula(rng, ("A", "B", "C"), 4) for _ in range(count)]


def with_backend(b, fn):
    saved = kernel.backend
    kernel.backend = b
    try:
        return fn()
    finally:
        kernel.backend = saved


def workloads():
    wide = kernel.compile_formulas([wide_formula(20)])
    small = [kernel.compile_formulas([f]) for f in small_formulas(2000)]
    forms = small_formulas(2000)
    return {
        "count_true, 20 letters": lambda: kernel.count_true(wide),
        "find_first x2000, 3 letters": lambda: [
            (kernel.find_first(p), kernel.find_first(kernel.negated(p))) for p in small
        ],
        "compile x2000": lambda: [kernel.compile_formulas([f]).code.tolist() for f in forms],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _pykernel)]
    if _ckernel is not None:
        backends.append(("compiled", _ckernel))
    else:
        print("compiled extension not built; timing the fallback only")

    print(f"{'workload':<30}" + "".join(f"{name:>12}" for name, _ in backends) + "     speedup")
    for label, fn in workloads().items():
        outputs = [with_backend(b, fn) for _, b in backends]
        assert all(o == outputs[0] for o in outputs), f"backends disagree on {label}"
        times = [
            min(timeit.repeat(lambda: with_backend(b, fn), number=1, repeat=args.repeat))
            for _, b in backends
        ]
        speedup = f"{times[0] / times[1]:>10.1f}x" if len(times) == 2 else ""
        print(f"{label:<30}" + "".join(f"{t * 1000:>10.1f}ms" for t in times) + speedup)


if __name__ == "__main__":
    main()
