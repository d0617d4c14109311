"""Size sweeps of the decision procedure against brute force."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Sequence

import numpy as np

from . import poset as po
from .generators import enumerate_posets, random_poset_bounded_width, random_sentence
from .sentence import Sentence, brute_force_check
from .solver import DEFAULT_BUDGET_BITS, brute_force_bits, check


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    n: int
    width: int
    sentence: str
    method: str
    truth: bool
    wall_time: float
    memo_states: int

    def line(self) -> str:
        fields = asdict(self)
        fields["truth"] = str(self.truth).lower()
        fields["wall_time"] = f"{self.wall_time:.6f}"
        return " ".join(f"{k}={v}" for k, v in fields.items())


def run_bench(
    phi: Sentence,
    sizes: Sequence[int],
    w: int = 2,
    seeds: int = 3,
    seed: int = 0,
    cross_pairs: float = 4.0,
    sentence_id: str = "phi",
    budget: float = DEFAULT_BUDGET_BITS,
    with_width: bool = True,
) -> List[BenchRecord]:
    """One record per (instance, method).

    Instances are width-``w`` random posets with about ``cross_pairs``
    expected cross-chain order pairs, sparse enough that most of them have
    no hub element.  Brute force runs only where the budget allows.
    """
    records = []
    master = random.Random(seed)
    for n in sizes:
        for s in range(seeds):
            P = random_poset_bounded_width(n, w, cross_pairs / (n * n), master.getrandbits(32))
            inst = f"n{n}-s{s}"
            wid = po.width(P) if with_width else -1
            t0 = time.perf_counter()
            res = check(P, phi)
            elapsed = time.perf_counter() - t0
            memo = res.stats.memo_states if res.stats else 0
            records.append(BenchRecord(inst, n, wid, sentence_id, res.method, res.truth, elapsed, memo))
            if brute_force_bits(P, phi) <= budget:
                t0 = time.perf_counter()
                truth = brute_force_check(P, phi)
                records.append(BenchRecord(inst, n, wid, sentence_id, "brute", truth, time.perf_counter() - t0, 0))
    return records


def growth_exponent(records: Iterable[BenchRecord], method: str = "fpt-game") -> Optional[float]:
    """Slope of a least-squares fit of log(max memo states) against log(n).

    ``None`` when fewer than two sizes ran the game.
    """
    peak = {}
    for r in records:
        if r.method == method:
            peak[r.n] = max(peak.get(r.n, 1), r.memo_states, 1)
    if len(peak) < 2:
        return None
    xs = np.log([float(n) for n in sorted(peak)])
    ys = np.log([float(peak[n]) for n in sorted(peak)])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def parse_record(line: str) -> dict:
    out = {}
    for item in line.split():
        key, _, value = item.partition("=")
        out[key] = value
    return out


def sentence_corpus(count: int, seed: int = 0, max_vars: int = 6, max_atoms: int = 8) -> List[Sentence]:
    """Fixed-seed random sentences with 1..max_vars variables and 0..max_atoms atoms."""
    rng = random.Random(seed)
    return [random_sentence(rng.randint(1, max_vars), rng.randint(0, max_atoms), rng) for _ in range(count)]


def oracle_sweep(max_n: int = 4, sentences: int = 200, seed: int = 0):
    """Compare the decision procedure with brute force on every labeled poset
    with at most ``max_n`` elements.  Returns ``(pairs checked, disagreements)``."""
    corpus = sentence_corpus(sentences, seed)
    checked = 0
    bad = []
    for n in range(1, max_n + 1):
        for P in enumerate_posets(n):
            for phi in corpus:
                checked += 1
                if check(P, phi).truth != brute_force_check(P, phi):
                    bad.append((P, phi))
    return checked, bad
