"""Finite posets stored as dense boolean order matrices.

A :class:`Poset` holds the order relation ``leq`` (``leq[p, q]`` is true
iff ``p <= q``) and the derived cover relation.  Subsets of a poset are
boolean masks of length ``n``; every helper that takes a subset also
accepts an iterable of element indices.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import CycleError, PosetFormatError
from .matching import HopcroftKarp


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float32 counts stay exact below 2**24, far above any supported n
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0.5


def reflexive_transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a square boolean matrix."""
    closure = np.asarray(rel, dtype=bool) | np.eye(len(rel), dtype=bool)
    while True:
        nxt = _bool_matmul(closure, closure)
        if np.array_equal(nxt, closure):
            return closure
        closure = nxt


def transitive_reduction(leq: np.ndarray) -> np.ndarray:
    """Cover relation of a partial order given as a reflexive matrix."""
    strict = leq & ~np.eye(len(leq), dtype=bool)
    return strict & ~_bool_matmul(strict, strict)


def _find_cycle(n: int, pairs: Sequence[tuple[int, int]], p: int, q: int) -> list[int]:
    succ: list[list[int]] = [[] for _ in range(n)]
    for a, b in pairs:
        succ[a].append(b)

    def path(src, dst):
        parent = {src: None}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if u == dst:
                break
            for v in succ[u]:
                if v not in parent:
                    parent[v] = u
                    queue.append(v)
        out = [dst]
        while out[-1] != src:
            out.append(parent[out[-1]])
        return out[::-1]

    forward = path(p, q)
    back = path(q, p)
    return forward[:-1] + back[:-1]


class Poset:
    """An immutable finite poset on elements ``0..n-1``.

    Build instances with :func:`from_order_pairs` or :func:`loads_poset`;
    the constructor trusts that ``leq`` is already a partial order.
    """

    __slots__ = ("n", "names", "leq", "cover", "_index")

    def __init__(self, leq: np.ndarray, names: Optional[Sequence[str]] = None):
        leq = np.array(leq, dtype=bool)
        n = len(leq)
        if n < 1:
            raise ValueError("a poset needs at least one element")
        if names is None:
            names = [str(i) for i in range(n)]
        names = tuple(str(s) for s in names)
        if len(names) != n or len(set(names)) != n:
            raise ValueError("element names must be unique, one per element")
        cover = transitive_reduction(leq)
        leq.setflags(write=False)
        cover.setflags(write=False)
        self.n = n
        self.names = names
        self.leq = leq
        self.cover = cover
        self._index = {s: i for i, s in enumerate(names)}

    def index(self, name: str) -> int:
        return self._index[name]

    def lt(self, p: int, q: int) -> bool:
        return p != q and bool(self.leq[p, q])

    def incomparable(self, p: int, q: int) -> bool:
        return not (self.leq[p, q] or self.leq[q, p])

    @property
    def strict(self) -> np.ndarray:
        return self.leq & ~np.eye(self.n, dtype=bool)

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(int(p), int(q)) for p, q in zip(*np.nonzero(self.cover))]

    def mask(self, subset) -> np.ndarray:
        return as_mask(self, subset)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.names == other.names and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.names, self.leq.tobytes()))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={len(self.cover_pairs())})"


def from_order_pairs(
    n: int,
    pairs: Iterable[tuple[int, int]],
    names: Optional[Sequence[str]] = None,
) -> Poset:
    """Close ``pairs`` reflexively and transitively into a poset on ``n`` elements.

    Raises :class:`CycleError` when two distinct elements end up below each
    other; the error carries one cycle of the input pairs.
    """
    pairs = [(int(p), int(q)) for p, q in pairs]
    rel = np.zeros((n, n), dtype=bool)
    for p, q in pairs:
        if not (0 <= p < n and 0 <= q < n):
            raise ValueError(f"order pair ({p}, {q}) is out of range for n={n}")
        rel[p, q] = True
    leq = reflexive_transitive_closure(rel)
    both = leq & leq.T & ~np.eye(n, dtype=bool)
    if both.any():
        p, q = (int(v) for v in np.argwhere(both)[0])
        raise CycleError(_find_cycle(n, pairs, p, q), names)
    return Poset(leq, names)


def chain(n: int) -> Poset:
    return from_order_pairs(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return from_order_pairs(n, [])


def bowtie() -> Poset:
    """The four-element bowtie: 0 and 2 each below both 1 and 3."""
    return from_order_pairs(4, [(0, 1), (0, 3), (2, 1), (2, 3)])


def with_top(P: Poset, name: str = "top") -> Poset:
    """Return ``P`` with a fresh element placed above everything."""
    while name in P.names:
        name += "'"
    leq = np.ones((P.n + 1, P.n + 1), dtype=bool)
    leq[: P.n, : P.n] = P.leq
    leq[P.n, : P.n] = False
    return Poset(leq, P.names + (name,))


# ---------------------------------------------------------------- subsets


def as_mask(P: Poset, subset) -> np.ndarray:
    if subset is None:
        return np.ones(P.n, dtype=bool)
    arr = np.asarray(subset)
    if arr.dtype == bool and arr.shape == (P.n,):
        return arr.copy()
    out = np.zeros(P.n, dtype=bool)
    idx = np.fromiter((int(i) for i in subset), dtype=np.intp)
    out[idx] = True
    return out


def members(mask: np.ndarray) -> list[int]:
    return [int(i) for i in np.flatnonzero(mask)]


def minimals(P: Poset, subset=None) -> np.ndarray:
    """Minimal elements of the induced subposet on ``subset``."""
    s = as_mask(P, subset)
    strict = P.strict
    below = strict[s][:, s].any(axis=0)
    out = np.zeros(P.n, dtype=bool)
    out[np.flatnonzero(s)[~below]] = True
    return out


def maximals(P: Poset, subset=None) -> np.ndarray:
    s = as_mask(P, subset)
    strict = P.strict
    above = strict[s][:, s].any(axis=1)
    out = np.zeros(P.n, dtype=bool)
    out[np.flatnonzero(s)[~above]] = True
    return out


def downset(P: Poset, subset) -> np.ndarray:
    s = as_mask(P, subset)
    return P.leq[:, s].any(axis=1)


def upset(P: Poset, subset) -> np.ndarray:
    s = as_mask(P, subset)
    return P.leq[s, :].any(axis=0)


def bottom(P: Poset) -> Optional[int]:
    hits = np.flatnonzero(P.leq.all(axis=1))
    return int(hits[0]) if len(hits) else None


def top(P: Poset) -> Optional[int]:
    hits = np.flatnonzero(P.leq.all(axis=0))
    return int(hits[0]) if len(hits) else None


def hub(P: Poset) -> Optional[int]:
    """An element above every minimal and below every maximal element, if any."""
    above_min = P.leq[minimals(P), :].all(axis=0)
    below_max = P.leq[:, maximals(P)].all(axis=1)
    hits = np.flatnonzero(above_min & below_max)
    return int(hits[0]) if len(hits) else None


# ------------------------------------------------------------- invariants


def width(P: Poset) -> int:
    """Maximum antichain size, as ``n`` minus a maximum matching of ``<``."""
    strict = P.strict
    # top-down, covers first: the greedy start then threads whole chains
    graph = {
        p: np.flatnonzero(P.cover[p]).tolist() + np.flatnonzero(strict[p] & ~P.cover[p]).tolist()
        for p in reversed(linear_extension(P))
    }
    return P.n - HopcroftKarp(graph).maximum_matching_size()


def linear_extension(P: Poset) -> list[int]:
    # an element has strictly fewer elements below it than anything above it
    return [int(i) for i in np.argsort(P.leq.sum(axis=0), kind="stable")]


def depth(P: Poset) -> int:
    """Maximum chain size."""
    longest = np.ones(P.n, dtype=np.int64)
    cover = P.cover
    for q in linear_extension(P):
        lower = np.flatnonzero(cover[:, q])
        if len(lower):
            longest[q] = longest[lower].max() + 1
    return int(longest.max())


def _max_degree(rel: np.ndarray) -> int:
    return int((rel.sum(axis=0) + rel.sum(axis=1)).max())


def degree(P: Poset) -> int:
    return _max_degree(P.strict)


def cover_degree(P: Poset) -> int:
    return _max_degree(P.cover)


def invariants(P: Poset) -> dict:
    """All scalar invariants of ``P`` keyed by their CLI names."""

    def name(i):
        return "none" if i is None else P.names[i]

    return {
        "size": P.n,
        "width": width(P),
        "depth": depth(P),
        "degree": degree(P),
        "cover-degree": cover_degree(P),
        "top": name(top(P)),
        "bottom": name(bottom(P)),
        "hub": name(hub(P)),
    }


# ----------------------------------------------------------- text format


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def loads_poset(text: str) -> Poset:
    """Parse the line-oriented poset format.

    ::

        poset 4
        elements a b c d        # optional
        a < b
    """
    lines = [(no, _strip(raw)) for no, raw in enumerate(text.splitlines(), 1)]
    lines = [(no, s) for no, s in lines if s]
    if not lines:
        raise PosetFormatError("empty poset file")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "poset" or not parts[1].isdigit():
        raise PosetFormatError(f"line {no}: expected 'poset <n>'")
    n = int(parts[1])
    if n < 1:
        raise PosetFormatError(f"line {no}: a poset needs at least one element")
    rest = lines[1:]
    names = [str(i) for i in range(n)]
    if rest and rest[0][1].split()[0] == "elements":
        no, s = rest[0]
        names = s.split()[1:]
        if len(names) != n or len(set(names)) != n:
            raise PosetFormatError(f"line {no}: expected {n} distinct element names")
        rest = rest[1:]
    index = {s: i for i, s in enumerate(names)}
    pairs = []
    for no, s in rest:
        parts = s.split()
        if len(parts) != 3 or parts[1] != "<":
            raise PosetFormatError(f"line {no}: expected '<id> < <id>'")
        try:
            pairs.append((index[parts[0]], index[parts[2]]))
        except KeyError as exc:
            raise PosetFormatError(f"line {no}: unknown element {exc.args[0]!r}") from None
    return from_order_pairs(n, pairs, names)


def dumps_poset(P: Poset) -> str:
    """Serialize ``P`` by its cover pairs."""
    out = [f"poset {P.n}"]
    if P.names != tuple(str(i) for i in range(P.n)):
        out.append("elements " + " ".join(P.names))
    out.extend(f"{P.names[p]} < {P.names[q]}" for p, q in P.cover_pairs())
    return "\n".join(out) + "\n"


def load_poset(path) -> Poset:
    with open(path, encoding="utf-8") as fh:
        return loads_poset(fh.read())
