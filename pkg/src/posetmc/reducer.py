"""Rewriting sentences into reduced form on a fixed poset.

Reduced form, for the matrix order ``M`` (reflexive-transitive closure of
the atoms):

(i)   ``M`` is a partial order on the variables;
(ii)  distinct universal variables are ``M``-incomparable;
(iii) distinct universals have disjoint ``M``-upsets and disjoint
      ``M``-downsets;
(iv)  an existential ``M``-comparable to a universal comes after it in
      the prefix.

:func:`reduce` either decides the instance outright or returns a reduced
sentence that is true on the poset iff the input is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Set, Union

from . import poset as po
from .errors import TrivialPosetError
from .poset import Poset
from .sentence import EXISTS, FORALL, Sentence, restrict


class Rewrite(NamedTuple):
    clause: str
    removed: tuple
    note: str

    def __str__(self):
        gone = ",".join(self.removed) if self.removed else "-"
        return f"({self.clause}) {self.note}; removed {gone}"


def _closure(phi: Sentence) -> Dict[str, Set[str]]:
    """``above[u]``: variables ``v != u`` with ``u <= v`` in the closed matrix."""
    above = {v: set() for v in phi.names}
    for u, v in phi.atoms:
        if u != v:
            above[u].add(v)
    names = phi.names
    for k in names:
        for i in names:
            if k in above[i]:
                above[i] |= above[k]
    for v in names:
        above[v].discard(v)
    return above


def closed_sentence(phi: Sentence) -> Sentence:
    """``phi`` with its atoms replaced by their (irreflexive) transitive closure.

    Reflexive atoms are dropped; they hold on every poset.
    """
    above = _closure(phi)
    return Sentence(phi.variables, frozenset((u, v) for u in above for v in above[u]))


def reduced_form_violations(phi: Sentence) -> List[str]:
    """Reduced-form clauses that ``phi`` fails, as human-readable strings."""
    above = _closure(phi)
    pos = phi.position()
    univ = phi.universals
    below = {v: {u for u in phi.names if v in above[u]} for v in phi.names}
    out = []
    for u in phi.names:
        for v in above[u]:
            if u in above[v]:
                out.append(f"(i) {u} and {v} lie on a cycle")
    for x in univ:
        for x2 in univ:
            if x != x2 and x2 in above[x]:
                out.append(f"(ii) universals {x} <= {x2}")
    for a, x in enumerate(univ):
        for x2 in univ[a + 1:]:
            shared_up = (above[x] | {x}) & (above[x2] | {x2})
            shared_down = (below[x] | {x}) & (below[x2] | {x2})
            if shared_up:
                out.append(f"(iii) {x} and {x2} share upper bound {sorted(shared_up)[0]}")
            if shared_down:
                out.append(f"(iii) {x} and {x2} share lower bound {sorted(shared_down)[0]}")
    for x in univ:
        for y in phi.existentials:
            if (y in above[x] or x in above[y]) and pos[y] < pos[x]:
                out.append(f"(iv) {y} is comparable to {x} but precedes it")
    return out


@dataclass(frozen=True)
class ReducedSentence:
    """A sentence whose atoms are transitively closed and satisfy (i)-(iv)."""

    inner: Sentence

    def __post_init__(self):
        bad = reduced_form_violations(self.inner)
        if bad:
            raise ValueError("not in reduced form: " + "; ".join(bad))

    def __str__(self):
        return str(self.inner)


@dataclass(frozen=True)
class Decided:
    value: bool
    reason: str
    trace: List[Rewrite] = field(default_factory=list)


@dataclass(frozen=True)
class Reduced:
    sentence: ReducedSentence
    trace: List[Rewrite] = field(default_factory=list)


ReduceOutcome = Union[Decided, Reduced]


def _find_violation(P: Poset, phi: Sentence, above: Dict[str, Set[str]]):
    """Next rewrite to apply, as ``(Decided, None)`` or ``(None, (Rewrite, keep))``."""
    pos = phi.position()
    univ = phi.universals
    exist = phi.existentials

    def drop(removed, clause, note):
        removed = tuple(v for v in phi.names if v in removed)
        assert not set(removed) & set(univ), "restriction would remove a universal"
        return None, Rewrite(clause, removed, note)

    for x in univ:
        for x2 in univ:
            if x != x2 and x2 in above[x]:
                return Decided(False, f"universals {x} <= {x2} cannot hold on a nontrivial poset"), None

    for u in phi.names:
        cycle = {u} | {v for v in above[u] if u in above[v]}
        if len(cycle) < 2:
            continue
        members = [v for v in phi.names if v in cycle]
        xs = [v for v in members if v in univ]
        if xs:
            x = xs[0]
            early = [y for y in members if y in exist and pos[y] < pos[x]]
            if early:
                return Decided(False, f"exists {early[0]} forall {x} forces {x} = {early[0]}"), None
            keep = x
        else:
            keep = members[0]
        return drop(cycle - {keep}, "i", f"collapse cycle {{{','.join(members)}}} onto {keep}")

    for y in exist:
        for x in univ:
            if pos[y] > pos[x]:
                continue
            if y in above[x]:
                if po.top(P) is None:
                    return Decided(False, f"exists {y} forall {x} with {x} <= {y} needs a top element"), None
                return drop({y} | above[y], "iv", f"send upset of {y} to the top")
            if x in above[y]:
                if po.bottom(P) is None:
                    return Decided(False, f"exists {y} forall {x} with {y} <= {x} needs a bottom element"), None
                return drop({y} | {v for v in phi.names if y in above[v]}, "iv", f"send downset of {y} to the bottom")

    for y in exist:
        lower = [x for x in univ if y in above[x]]
        if len(lower) >= 2:
            if po.top(P) is None:
                return Decided(False, f"{lower[0]} and {lower[1]} need a common upper bound {y}; no top element"), None
            return drop({y} | above[y], "iii", f"send upset of {y} to the top")
        upper = [x for x in univ if x in above[y]]
        if len(upper) >= 2:
            if po.bottom(P) is None:
                return Decided(False, f"{upper[0]} and {upper[1]} need a common lower bound {y}; no bottom element"), None
            return drop({y} | {v for v in phi.names if y in above[v]}, "iii", f"send downset of {y} to the bottom")
    return None, None


def reduce(P: Poset, phi: Sentence) -> ReduceOutcome:
    """Rewrite ``phi`` into reduced form on ``P``, or decide it.

    Every step keeps ``P |= current`` equivalent to ``P |= phi``.  A
    ``Decided`` outcome is always ``False``; acceptance via a hub element is
    left to the caller (see :func:`hub_accept`).
    """
    if P.n < 2:
        raise TrivialPosetError("reduction needs a poset with at least two elements")
    current = closed_sentence(phi)
    trace = [Rewrite("close", (), "replace atoms by their reflexive-transitive closure")]
    while True:
        above = _closure(current)
        decided, step = _find_violation(P, current, above)
        if decided is not None:
            return Decided(decided.value, decided.reason, trace)
        if step is None:
            return Reduced(ReducedSentence(current), trace)
        trace.append(step)
        current = restrict(current, [v for v in current.names if v not in step.removed])


def hub_accept(P: Poset, phi: Optional[ReducedSentence] = None) -> bool:
    """True iff ``P`` has a hub element; then every reduced sentence holds on ``P``."""
    return po.hub(P) is not None
