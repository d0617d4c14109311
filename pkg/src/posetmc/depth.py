"""Depth of existential variables in a reduced sentence, and level sets of a poset.

Level sets stratify a poset from the outside in.  ``L_0`` holds the
minimal elements and ``U_0`` the maximal elements not already in ``L_0``.
Level ``i`` groups every element ``p`` by its signature: the elements of
``L_{i-1}`` below ``p`` and the elements of ``U_{i-1}`` above ``p``.  The
minimal elements of each class join ``L_i`` and the maximal ones join
``U_i``.

Upper sets are never pruned by the lower ones (an element may sit in both
``L_i`` and ``U_i`` for ``i >= 1``).  Removing ``L_i`` from ``U_i`` leaves
upper-side variables with too small a range; on an antichain it leaves
them with none at all.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import poset as po
from .poset import Poset
from .reducer import ReducedSentence, _closure


class Side(enum.Enum):
    LOWER = "L"
    UPPER = "U"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class VariableDepths:
    side: Dict[str, Side]
    depth: Dict[str, int]
    ldpt: Dict[str, int]
    udpt: Dict[str, int]
    b: int

    def lower(self):
        return [y for y, s in self.side.items() if s is Side.LOWER]

    def upper(self):
        return [y for y, s in self.side.items() if s is Side.UPPER]


def variable_depths(phi: ReducedSentence) -> VariableDepths:
    """Side and depth of every existential variable of a reduced sentence.

    ``ldpt(y)`` is the longest chain in the matrix order below ``y``,
    ``udpt(y)`` the longest chain above it.  ``y`` is lower when it lies
    below a universal, upper when above one, and otherwise takes the side
    with the shorter chain (lower on ties).
    """
    inner = phi.inner if isinstance(phi, ReducedSentence) else phi
    above = _closure(inner)
    below = {v: {u for u in inner.names if v in above[u]} for v in inner.names}

    @lru_cache(maxsize=None)
    def ld(v):
        return 1 + max((ld(u) for u in below[v]), default=0)

    @lru_cache(maxsize=None)
    def ud(v):
        return 1 + max((ud(u) for u in above[v]), default=0)

    univ = set(inner.universals)
    side, dep, ldpt, udpt = {}, {}, {}, {}
    for y in inner.existentials:
        ldpt[y], udpt[y] = ld(y), ud(y)
        if above[y] & univ:
            side[y] = Side.LOWER
        elif below[y] & univ:
            side[y] = Side.UPPER
        else:
            side[y] = Side.LOWER if ldpt[y] <= udpt[y] else Side.UPPER
        dep[y] = ldpt[y] if side[y] is Side.LOWER else udpt[y]
    return VariableDepths(side, dep, ldpt, udpt, max(dep.values(), default=0))


@dataclass(frozen=True)
class LevelSets:
    """Levels ``0..k`` of a poset as boolean masks.

    ``side[p]``/``depth[p]`` record the first level containing ``p``
    (lower side preferred); ``depth[p] == -1`` if ``p`` enters no level
    up to ``k``.
    """

    lower: Tuple[np.ndarray, ...]
    upper: Tuple[np.ndarray, ...]
    depth: np.ndarray
    side: Tuple[Optional[Side], ...]

    @property
    def k(self) -> int:
        return len(self.lower) - 1

    def level(self, i: int) -> np.ndarray:
        """``P_i``, the union of ``L_i`` and ``U_i``."""
        return self.lower[i] | self.upper[i]

    def sizes(self) -> List[Tuple[int, int, int]]:
        return [(int(L.sum()), int(U.sum()), int((L | U).sum())) for L, U in zip(self.lower, self.upper)]


def signature_classes(P: Poset, L: np.ndarray, U: np.ndarray) -> List[np.ndarray]:
    """Partition of all elements by (``L``-elements below, ``U``-elements above)."""
    sig = np.concatenate([P.leq[L, :].T, P.leq[:, U]], axis=1)
    if sig.shape[1] == 0:
        return [np.arange(P.n)]
    packed = np.packbits(sig, axis=1)
    _, inverse = np.unique(packed, axis=0, return_inverse=True)
    inverse = inverse.ravel()
    order = np.argsort(inverse, kind="stable")
    bounds = np.flatnonzero(np.diff(inverse[order])) + 1
    return np.split(order, bounds)


def level_sets(P: Poset, k: int) -> LevelSets:
    strict = P.strict
    L = po.minimals(P)
    U = po.maximals(P) & ~L
    lower, upper = [L], [U]
    for _ in range(k):
        newL, newU = L.copy(), U.copy()
        for cls in signature_classes(P, L, U):
            sub = strict[np.ix_(cls, cls)]
            newL[cls[~sub.any(axis=0)]] = True
            newU[cls[~sub.any(axis=1)]] = True
        L, U = newL, newU
        lower.append(L)
        upper.append(U)

    depth = np.full(P.n, -1, dtype=np.int64)
    side: List[Optional[Side]] = [None] * P.n
    for i, (Li, Ui) in enumerate(zip(lower, upper)):
        for p in np.flatnonzero((Li | Ui) & (depth < 0)):
            depth[p] = i
            side[p] = Side.LOWER if Li[p] else Side.UPPER
    depth.setflags(write=False)
    return LevelSets(tuple(lower), tuple(upper), depth, tuple(side))
