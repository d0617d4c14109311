"""Acceptance criteria, one test per criterion.

Each test records a ``criterion N: PASS|FAIL ...`` line; the lines are
printed together in the pytest terminal summary (see conftest.py), and
directly when this file runs as a script.
"""

import itertools
import random
import sys
import time

import numpy as np

from posetmc import poset as po
from posetmc.bench import growth_exponent, oracle_sweep, run_bench
from posetmc.depth import level_sets
from posetmc.errors import BudgetExceededError
from posetmc.generators import (
    bowtie_reduce,
    bowtie_star_holds,
    enumerate_posets,
    hitting_set_exists,
    hypergraph_to_cover3,
    hypergraph_to_depth2,
    phi_k,
    random_existential_sentence,
    random_hypergraph,
    random_poset,
    random_poset_bounded_width,
    random_sentence,
    upper_bound_property,
)
from posetmc.reducer import Decided, reduce, reduced_form_violations
from posetmc.sentence import brute_force_check
from posetmc.solver import check, check_both

from conftest import is_partial_order

RESULTS = {}


def report(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS[number] = line
    print(line)
    assert ok, line


def matrix_count(n):
    """Partial orders on n labeled elements, by testing every 0/1 matrix."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = 0
    for bits in itertools.product([False, True], repeat=len(off)):
        m = np.eye(n, dtype=bool)
        for (i, j), b in zip(off, bits):
            m[i, j] = b
        found += is_partial_order(m)
    return found


def test_criterion_1_oracle_equivalence():
    enumerated = len(list(enumerate_posets(4)))
    assert enumerated == matrix_count(4) == 219
    start = time.perf_counter()
    checked, bad = oracle_sweep(max_n=4, sentences=200, seed=0)
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed <= 600, f"posets_n4={enumerated} pairs={checked} disagreements={len(bad)} time={elapsed:.1f}s")


def test_criterion_2_reduced_form():
    rng = random.Random(2)
    failures = reduced = decided = 0
    for _ in range(500):
        P = random_poset(rng.randint(2, 8), rng.random(), rng)
        phi = random_sentence(rng.randint(1, 6), rng.randint(0, 8), rng)
        truth = brute_force_check(P, phi)
        out = reduce(P, phi)
        if isinstance(out, Decided):
            decided += 1
            failures += out.value != truth
        else:
            reduced += 1
            inner = out.sentence.inner
            failures += bool(reduced_form_violations(inner)) or brute_force_check(P, inner) != truth
    report(2, failures == 0, f"pairs=500 reduced={reduced} decided={decided} failures={failures}")


def test_criterion_3_hub_fast_path():
    rng = random.Random(3)
    failures = accepted = 0
    for _ in range(50):
        P = po.with_top(random_poset(rng.randint(1, 7), rng.random(), rng))
        for _ in range(50):
            phi = random_sentence(rng.randint(1, 6), rng.randint(0, 8), rng)
            if isinstance(reduce(P, phi), Decided):
                continue
            accepted += 1
            res = check(P, phi)
            failures += not res.truth
            if P.n <= 8:
                failures += not brute_force_check(P, phi)
    report(3, failures == 0, f"posets=50 reduced_instances={accepted} failures={failures}")


def test_criterion_4_bowtie_reduction():
    rng = random.Random(4)
    B = po.bowtie()
    start = time.perf_counter()
    bad = truths = 0
    for _ in range(100):
        psi = random_existential_sentence(rng.randint(0, 5), rng.randint(0, 8), rng)
        expected = bowtie_star_holds(psi)
        truths += expected
        bad += check(B, bowtie_reduce(psi)).truth != expected
    elapsed = time.perf_counter() - start
    report(4, bad == 0 and elapsed <= 60, f"sentences=100 true={truths} disagreements={bad} time={elapsed:.1f}s")


def test_criterion_5_upper_bound_characterization():
    rng = random.Random(5)
    bad = 0
    for _ in range(100):
        P = random_poset(rng.randint(1, 30), rng.random() * 0.3, rng)
        for k in (1, 2, 3):
            bad += check(P, phi_k(k)).truth != upper_bound_property(P, k)
    report(5, bad == 0, f"posets=100 k=1..3 disagreements={bad}")


def test_criterion_6_hitting_set_reductions():
    rng = random.Random(6)
    failures = 0
    for _ in range(50):
        H = random_hypergraph(rng.randint(2, 8), rng.randint(2, 6), rng)
        d, c = hypergraph_to_depth2(H), hypergraph_to_cover3(H)
        failures += po.depth(d) > 2 or po.cover_degree(c) > 3
        for k in (1, 2, 3):
            hs = hitting_set_exists(H, k)
            failures += hs == check(d, phi_k(k)).truth
            failures += hs == check(c, phi_k(k)).truth
    report(6, failures == 0, f"hypergraphs=50 k=1..3 failures={failures}")


def test_criterion_7_level_bound():
    rng = random.Random(7)
    violations = 0
    for _ in range(100):
        w = rng.randint(1, 3)
        P = random_poset_bounded_width(rng.randint(1, 100), w, rng.random() * 0.1, rng)
        ls = level_sets(P, 3)
        for k in range(3):
            violations += bool((ls.level(k) & ~ls.level(k + 1)).any())
            violations += int(ls.level(k).sum()) > 2 * w ** ((3 * w) ** k)
    report(7, violations == 0, f"posets=100 violations={violations}")


def test_criterion_8_scalability():
    phi = phi_k(2)
    P = random_poset_bounded_width(2000, 2, 4.0 / 2000 ** 2, 8)
    start = time.perf_counter()
    res = check(P, phi)
    elapsed = time.perf_counter() - start

    guard = True
    check_both(random_poset_bounded_width(40, 2, 0.01, 8), phi)
    try:
        check_both(random_poset_bounded_width(41, 2, 0.01, 8), phi)
        guard = False
    except BudgetExceededError:
        pass

    records = run_bench(phi, [125, 250, 500, 1000, 2000], w=2, seeds=3, seed=8, with_width=False)
    slope = growth_exponent(records)
    ok = elapsed <= 30 and guard and slope is not None and slope <= 4
    fpt_runs = sum(r.method == "fpt-game" for r in records)
    report(
        8,
        ok,
        f"n=2000 time={elapsed:.2f}s method={res.method} brute_guard_n41={'trips' if guard else 'MISSING'} "
        f"growth_exponent={'none' if slope is None else f'{slope:.2f}'} fpt_runs={fpt_runs}",
    )


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
