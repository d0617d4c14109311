"""End-to-end decision procedure for conjunctive sentences on posets.

Pipeline: reduce the sentence on the poset, accept through a hub element
if there is one, otherwise relativize every variable to a depth-bounded
slice of the poset and decide the (small) relativized game.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from .depth import Side, level_sets, variable_depths
from .errors import BudgetExceededError
from .poset import Poset
from .reducer import Decided, hub_accept, reduce
from .sentence import GameStats, RelativizedDomains, Sentence, brute_force_check, relativized_check

BRUTE = "brute"
DECIDED = "reduced-decided"
HUB = "hub"
FPT = "fpt-game"

# variables * log2(n); phi_2 (5 variables) passes up to n = 40 (26.61 bits)
DEFAULT_BUDGET_BITS = 26.7


@dataclass(frozen=True)
class CheckStats:
    variables: int
    b: int
    domain_size: int
    existential_domain_sizes: Dict[str, int]
    memo_states: int
    wall_time: float

    def record(self) -> str:
        """One ``key=value`` line; wall time last."""
        doms = ",".join(f"{y}:{s}" for y, s in self.existential_domain_sizes.items()) or "-"
        return (
            f"variables={self.variables} b={self.b} D={self.domain_size} "
            f"Di={doms} memo_states={self.memo_states} wall_time={self.wall_time:.6f}"
        )


@dataclass(frozen=True)
class CheckResult:
    truth: bool
    method: str
    reason: str = ""
    stats: Optional[CheckStats] = field(default=None, compare=False)


def relativization(P: Poset, phi) -> Tuple[RelativizedDomains, int, Dict[str, int]]:
    """Domains for a reduced sentence: universals over ``P_{b+1}``, each
    existential over ``L_d`` or ``U_d`` for its side and depth ``d``."""
    depths = variable_depths(phi)
    levels = level_sets(P, depths.b + 1)
    D = levels.level(depths.b + 1)
    doms = {}
    for y, d in depths.depth.items():
        dom = levels.lower[d] if depths.side[y] is Side.LOWER else levels.upper[d]
        assert not (dom & ~D).any(), f"domain of {y} escapes P_(b+1)"
        doms[y] = dom
    return RelativizedDomains(D, doms), depths.b, {y: int(m.sum()) for y, m in doms.items()}


def check(P: Poset, phi: Sentence) -> CheckResult:
    """Decide ``P |= phi``."""
    if P.n == 1:
        return CheckResult(brute_force_check(P, phi), BRUTE, "one-element poset")
    start = time.perf_counter()
    outcome = reduce(P, phi)
    if isinstance(outcome, Decided):
        return CheckResult(outcome.value, DECIDED, outcome.reason)
    reduced = outcome.sentence
    if hub_accept(P, reduced):
        return CheckResult(True, HUB, "hub element")
    doms, b, sizes = relativization(P, reduced)
    game = GameStats()
    truth = relativized_check(P, reduced.inner, doms, game)
    stats = CheckStats(
        variables=len(reduced.inner),
        b=b,
        domain_size=int(np.asarray(doms.universal_domain).sum()),
        existential_domain_sizes=sizes,
        memo_states=game.memo_states,
        wall_time=time.perf_counter() - start,
    )
    return CheckResult(truth, FPT, "relativized game", stats)


def brute_force_bits(P: Poset, phi: Sentence) -> float:
    return len(phi) * math.log2(P.n)


def check_both(P: Poset, phi: Sentence, budget: float = DEFAULT_BUDGET_BITS) -> Tuple[CheckResult, bool]:
    """Run the decision procedure and the brute-force game side by side."""
    bits = brute_force_bits(P, phi)
    if bits > budget:
        raise BudgetExceededError(
            f"brute force needs {len(phi)} variables x log2({P.n}) = {bits:.2f} bits > budget {budget}"
        )
    return check(P, phi), brute_force_check(P, phi)
