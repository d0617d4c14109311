"""Quantified conjunctive sentences over the order symbol ``<=``.

A sentence is a quantifier prefix (an ordered sequence of variables, each
universal or existential) plus a set of atoms ``(u, v)`` read as
``u <= v``.  The prefix does not have to alternate.

Text format::

    forall x exists y w : y <= x & y <= w
    exists y forall x : x = y          # '=' becomes two '<=' atoms
    forall x : true                    # no atoms
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Tuple

import numpy as np

from .errors import (
    DuplicateVariableError,
    EmptyDomainError,
    SentenceSyntaxError,
    UnboundVariableError,
)
from .poset import Poset


class Quantifier(enum.Enum):
    FORALL = "forall"
    EXISTS = "exists"

    def __str__(self):
        return self.value


FORALL = Quantifier.FORALL
EXISTS = Quantifier.EXISTS


@dataclass(frozen=True)
class Sentence:
    variables: Tuple[Tuple[str, Quantifier], ...]
    atoms: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple((str(v), Quantifier(q)) for v, q in self.variables))
        object.__setattr__(self, "atoms", frozenset((str(u), str(v)) for u, v in self.atoms))
        seen = set()
        for name, _ in self.variables:
            if name in seen:
                raise DuplicateVariableError(name)
            seen.add(name)
        for u, v in self.atoms:
            for s in (u, v):
                if s not in seen:
                    raise UnboundVariableError(s)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(v for v, _ in self.variables)

    @property
    def universals(self) -> Tuple[str, ...]:
        return tuple(v for v, q in self.variables if q is FORALL)

    @property
    def existentials(self) -> Tuple[str, ...]:
        return tuple(v for v, q in self.variables if q is EXISTS)

    def quantifier(self, name: str) -> Quantifier:
        return dict(self.variables)[name]

    def position(self) -> Dict[str, int]:
        return {v: i for i, (v, _) in enumerate(self.variables)}

    def __len__(self):
        return len(self.variables)

    def __str__(self):
        return format_sentence(self)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<comment>\#[^\n]*)|(?P<op><=|=|&|:)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<bad>\S))"
)
_KEYWORDS = {"forall", "exists", "true"}


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        pos = m.end()
        if m.group("comment"):
            continue
        for kind in ("op", "ident", "bad"):
            if m.group(kind) is not None:
                out.append((kind, m.group(kind), m.start(kind)))
    out.append(("end", "", len(text)))
    return out


def parse(text: str) -> Sentence:
    """Parse a sentence from its text form."""
    tokens = _tokenize(text)
    i = 0

    def fail(msg, tok):
        raise SentenceSyntaxError(msg, text, tok[2])

    variables = []
    current = None
    while tokens[i][0] == "ident" or tokens[i][0] == "bad":
        kind, val, _ = tokens[i]
        if kind == "bad":
            fail(f"unexpected character {val!r}", tokens[i])
        if val in ("forall", "exists"):
            current = Quantifier(val)
            if tokens[i + 1][0] != "ident" or tokens[i + 1][1] in _KEYWORDS:
                fail(f"expected a variable after {val!r}", tokens[i + 1])
        elif val == "true":
            fail("unexpected 'true' in the prefix", tokens[i])
        elif current is None:
            fail("expected 'forall' or 'exists'", tokens[i])
        else:
            if any(val == v for v, _ in variables):
                raise DuplicateVariableError(val)
            variables.append((val, current))
        i += 1
    if tokens[i][1] != ":":
        fail("expected ':' after the quantifier prefix", tokens[i])
    i += 1

    declared = {v for v, _ in variables}
    atoms = set()

    def ident():
        nonlocal i
        tok = tokens[i]
        if tok[0] != "ident" or tok[1] in _KEYWORDS:
            fail("expected a variable", tok)
        if tok[1] not in declared:
            raise UnboundVariableError(tok[1])
        i += 1
        return tok[1]

    if tokens[i][1] == "true" and tokens[i][0] == "ident":
        i += 1
    else:
        while True:
            u = ident()
            op = tokens[i]
            if op[1] not in ("<=", "="):
                fail("expected '<=' or '='", op)
            i += 1
            v = ident()
            atoms.add((u, v))
            if op[1] == "=":
                atoms.add((v, u))
            if tokens[i][1] != "&":
                break
            i += 1
    if tokens[i][0] != "end":
        fail(f"unexpected {tokens[i][1]!r}", tokens[i])
    return Sentence(tuple(variables), frozenset(atoms))


def format_sentence(phi: Sentence) -> str:
    """Render ``phi`` in the text format; ``parse`` inverts it exactly."""
    words = []
    last = None
    for name, q in phi.variables:
        if q is not last:
            words.append(q.value)
            last = q
        words.append(name)
    pos = phi.position()
    atoms = sorted(phi.atoms, key=lambda a: (pos[a[0]], pos[a[1]]))
    body = " & ".join(f"{u} <= {v}" for u, v in atoms) if atoms else "true"
    prefix = " ".join(words)
    return f"{prefix} : {body}" if prefix else f": {body}"


# ------------------------------------------------------------ restriction


def restrict(phi: Sentence, keep: Iterable[str]) -> Sentence:
    """The sentence induced on the variables in ``keep``."""
    keep = set(keep)
    missing = keep - set(phi.names)
    if missing:
        raise UnboundVariableError(sorted(missing)[0])
    return Sentence(
        tuple((v, q) for v, q in phi.variables if v in keep),
        frozenset((u, v) for u, v in phi.atoms if u in keep and v in keep),
    )


# -------------------------------------------------------------- semantics


def _pack(mat: np.ndarray) -> list:
    packed = np.packbits(np.atleast_2d(mat), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _bitsets(P: Poset):
    """Per element: bitmask of elements above it and of elements below it."""
    return _pack(P.leq), _pack(P.leq.T)


def _bits(mask) -> int:
    return _pack(np.asarray(mask, dtype=bool))[0]


def _iter_bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _constraints(phi: Sentence):
    """For each prefix position, the atoms linking it to earlier positions.

    Each entry is ``(j, above)``: the variable at this position must lie
    above (``above=True``) or below the value of the variable at ``j``.
    """
    pos = phi.position()
    cons = [[] for _ in phi.variables]
    for u, v in phi.atoms:
        i, j = pos[u], pos[v]
        if i == j:
            continue
        if i < j:
            cons[j].append((i, True))
        else:
            cons[i].append((j, False))
    return cons


def brute_force_check(P: Poset, phi: Sentence) -> bool:
    """Decide ``P |= phi`` by exhaustive game search over the whole universe."""
    up, down = _bitsets(P)
    full = (1 << P.n) - 1
    cons = _constraints(phi)
    quants = [q for _, q in phi.variables]
    values = [0] * len(quants)

    def allowed(i):
        m = full
        for j, above in cons[i]:
            m &= up[values[j]] if above else down[values[j]]
        return m

    def solve(i):
        if i == len(quants):
            return True
        m = allowed(i)
        if quants[i] is FORALL:
            if m != full:
                return False
            for p in range(P.n):
                values[i] = p
                if not solve(i + 1):
                    return False
            return True
        for p in _iter_bits(m):
            values[i] = p
            if solve(i + 1):
                return True
        return False

    return solve(0)


@dataclass
class RelativizedDomains:
    """Ranges for a relativized game.

    Every universal variable ranges over ``universal_domain``; existential
    variable ``y`` ranges over ``existential_domains[y]``.  Domains are
    boolean masks or iterables of element indices.
    """

    universal_domain: object
    existential_domains: Mapping[str, object]

    @classmethod
    def full(cls, P: Poset, phi: Sentence) -> "RelativizedDomains":
        everything = np.ones(P.n, dtype=bool)
        return cls(everything, {y: everything for y in phi.existentials})


@dataclass
class GameStats:
    memo_states: int = 0


def relativized_check(
    P: Poset,
    phi: Sentence,
    doms: RelativizedDomains,
    stats: Optional[GameStats] = None,
) -> bool:
    """Decide the relativized sentence in which each variable ranges over its domain.

    The search is memoized on (prefix position, values of the variables that
    still have atoms to later positions).
    """
    up, down = _bitsets(P)
    full = (1 << P.n) - 1
    cons = _constraints(phi)
    quants = [q for _, q in phi.variables]
    m = len(quants)

    doms_bits = []
    for name, q in phi.variables:
        raw = doms.universal_domain if q is FORALL else doms.existential_domains[name]
        bits = _bits(P.mask(raw)) & full
        if not bits:
            raise EmptyDomainError(name)
        doms_bits.append(bits)

    # live[i]: positions < i with an atom to a position >= i
    last_use = list(range(m))
    for i, entries in enumerate(cons):
        for j, _ in entries:
            last_use[j] = max(last_use[j], i)
    live = [tuple(j for j in range(i) if last_use[j] >= i) for i in range(m + 1)]

    values = [0] * m
    memo: dict = {}

    def allowed(i):
        mask = doms_bits[i]
        for j, above in cons[i]:
            mask &= up[values[j]] if above else down[values[j]]
        return mask

    def solve(i):
        if i == m:
            return True
        key = (i, tuple(values[j] for j in live[i]))
        hit = memo.get(key)
        if hit is not None:
            return hit
        mask = allowed(i)
        if quants[i] is FORALL:
            result = mask == doms_bits[i]
            if result:
                for p in _iter_bits(mask):
                    values[i] = p
                    if not solve(i + 1):
                        result = False
                        break
        else:
            result = False
            for p in _iter_bits(mask):
                values[i] = p
                if solve(i + 1):
                    result = True
                    break
        memo[key] = result
        return result

    result = solve(0)
    if stats is not None:
        stats.memo_states = len(memo)
    return result
