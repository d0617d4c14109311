"""Instance generators: hardness-reduction constructions, sentence families,
random and exhaustive poset corpora.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, NamedTuple, Sequence, Tuple, Union

import numpy as np

from . import poset as po
from .errors import IllFormedHypergraphError, PosetFormatError
from .poset import Poset, from_order_pairs, reflexive_transitive_closure
from .sentence import EXISTS, FORALL, Quantifier, Sentence


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


# ------------------------------------------------- bowtie with constants


class Const(NamedTuple):
    """Constant symbol ``c_i``, interpreted as element ``i`` of the bowtie."""

    index: int

    def __str__(self):
        return f"c{self.index}"


Term = Union[str, Const]


@dataclass(frozen=True)
class ExistentialSentence:
    """A primitive positive sentence over ``<=`` and the constants ``c0..c3``."""

    variables: Tuple[str, ...]
    atoms: Tuple[Tuple[Term, Term], ...]

    def __post_init__(self):
        names = set(self.variables)
        if len(names) != len(self.variables):
            raise ValueError("duplicate variable")
        for atom in self.atoms:
            for t in atom:
                if isinstance(t, Const):
                    if not 0 <= t.index <= 3:
                        raise ValueError(f"constant index {t.index} outside 0..3")
                elif t not in names:
                    raise ValueError(f"unbound variable {t!r}")

    def __str__(self):
        body = " & ".join(f"{u} <= {v}" for u, v in self.atoms) or "true"
        return f"exists {' '.join(self.variables)} : {body}" if self.variables else f": {body}"


def bowtie_star_holds(psi: ExistentialSentence) -> bool:
    """Truth of ``psi`` on the bowtie with ``c_i`` pinned to ``i`` (exhaustive)."""
    leq = po.bowtie().leq
    index = {v: i for i, v in enumerate(psi.variables)}
    for values in itertools.product(range(4), repeat=len(psi.variables)):

        def val(t):
            return t.index if isinstance(t, Const) else values[index[t]]

        if all(leq[val(u), val(v)] for u, v in psi.atoms):
            return True
    return False


def bowtie_reduce(psi: ExistentialSentence) -> Sentence:
    """Encode ``psi`` as a constant-free sentence that holds on the bowtie iff
    ``psi`` holds on the bowtie with constants.

    The constants become existential variables ``w0..w3``, pinned in place
    by the universals ``y0..y3`` and the auxiliary ``x0..x3``.
    """
    fresh = {f"{s}{i}": f"_{s}{i}" for s in "yxw" for i in range(4)}
    taken = set(fresh.values())
    rename = {}
    for v in psi.variables:
        new = v
        while new in taken:
            new += "'"
        rename[v] = new
        taken.add(new)

    def y(i):
        return fresh[f"y{i}"]

    def x(i):
        return fresh[f"x{i}"]

    def w(i):
        return fresh[f"w{i}"]

    atoms = set()
    for lo in (0, 2):
        for hi in (1, 3):
            atoms.add((w(lo), w(hi)))
    for j in (0, 2):
        atoms.update({(x(j), y(j)), (x(j), w(j))})
    for j in (1, 3):
        atoms.update({(y(j), x(j)), (w(j), x(j))})

    def term(t):
        return w(t.index) if isinstance(t, Const) else rename[t]

    atoms.update((term(u), term(v)) for u, v in psi.atoms)
    prefix = (
        [(y(i), FORALL) for i in range(4)]
        + [(x(i), EXISTS) for i in range(4)]
        + [(w(i), EXISTS) for i in range(4)]
        + [(rename[v], EXISTS) for v in psi.variables]
    )
    return Sentence(tuple(prefix), frozenset(atoms))


def random_existential_sentence(v: int, a: int, seed=None, p_const: float = 0.3) -> ExistentialSentence:
    rng = _rng(seed)
    names = tuple(f"u{i}" for i in range(v))

    def term():
        if not names or rng.random() < p_const:
            return Const(rng.randrange(4))
        return rng.choice(names)

    return ExistentialSentence(names, tuple((term(), term()) for _ in range(a)))


# ------------------------------------------------------- sentence family


def phi_k(k: int) -> Sentence:
    """``forall x1..xk exists y1..yk w : yi <= xi & yi <= w`` for every i."""
    if k < 1:
        raise ValueError("k must be at least 1")
    prefix = (
        [(f"x{i}", FORALL) for i in range(1, k + 1)]
        + [(f"y{i}", EXISTS) for i in range(1, k + 1)]
        + [("w", EXISTS)]
    )
    atoms = {(f"y{i}", f"x{i}") for i in range(1, k + 1)} | {(f"y{i}", "w") for i in range(1, k + 1)}
    return Sentence(tuple(prefix), frozenset(atoms))


def upper_bound_property(P: Poset, k: int) -> bool:
    """Whether every ``k`` minimal elements of ``P`` have a common upper bound."""
    if k < 1:
        raise ValueError("k must be at least 1")
    mins = po.members(po.minimals(P))
    r = min(k, len(mins))
    return all(P.leq[list(group)].all(axis=0).any() for group in itertools.combinations(mins, r))


# ------------------------------------------------------------ hypergraphs


@dataclass(frozen=True)
class Hypergraph:
    vertices: Tuple[str, ...]
    edges: Mapping[str, frozenset]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "edges", {str(e): frozenset(str(v) for v in vs) for e, vs in dict(self.edges).items()})
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise IllFormedHypergraphError("duplicate vertex")
        for name, members in self.edges.items():
            if not members:
                raise IllFormedHypergraphError(f"edge {name} is empty")
            if not members <= vs:
                raise IllFormedHypergraphError(f"edge {name} has unknown vertices {sorted(members - vs)}")

    def notin_vertex(self, h: str) -> List[str]:
        return [e for e, vs in self.edges.items() if h not in vs]

    def notin_edge(self, e: str) -> List[str]:
        return [h for h in self.vertices if h not in self.edges[e]]

    @property
    def well_formed(self) -> bool:
        """Every vertex misses some edge and every edge misses some vertex."""
        return (
            bool(self.vertices)
            and bool(self.edges)
            and not set(self.vertices) & set(self.edges)
            and all(self.notin_vertex(h) for h in self.vertices)
            and all(self.notin_edge(e) for e in self.edges)
        )

    def require_well_formed(self):
        if not self.well_formed:
            raise IllFormedHypergraphError(
                "hypergraph must be nonempty, name vertices and edges apart, "
                "and every vertex must miss an edge and every edge a vertex"
            )


def hitting_set_exists(H: Hypergraph, k: int) -> bool:
    """Whether at most ``k`` vertices meet every edge."""
    for size in range(min(k, len(H.vertices)) + 1):
        for chosen in itertools.combinations(H.vertices, size):
            s = set(chosen)
            if all(s & members for members in H.edges.values()):
                return True
    return False


def hypergraph_to_depth2(H: Hypergraph) -> Poset:
    """Two-layer poset: vertex ``h`` below edge ``U`` iff ``h`` is not in ``U``."""
    H.require_well_formed()
    names = list(H.vertices) + list(H.edges)
    index = {s: i for i, s in enumerate(names)}
    pairs = [(index[h], index[e]) for e, vs in H.edges.items() for h in H.vertices if h not in vs]
    return from_order_pairs(len(names), pairs, names)


def _binary_tree(root: str, leaves: Sequence[str], tag: str) -> Tuple[List[Tuple[str, str]], Dict[str, str]]:
    """Edges of a balanced binary out-tree from ``root`` (parent, child) and the
    node standing for each leaf label."""
    edges = []
    node_of = {}

    def grow(parent, items, path):
        if len(items) == 1:
            node = f"{root}{tag}{items[0]}"
            node_of[items[0]] = node
            edges.append((parent, node))
            return
        node = f"{root}{tag}{path}" if path else parent
        if path:
            edges.append((parent, node))
        half = (len(items) + 1) // 2
        grow(node, items[:half], path + "0")
        grow(node, items[half:], path + "1")

    grow(root, list(leaves), "")
    return edges, node_of


def hypergraph_to_cover3(H: Hypergraph) -> Poset:
    """Poset of cover-degree at most 3 with ``h <= U`` iff ``h`` is not in ``U``.

    Each vertex fans out through a binary tree to one leaf per edge it
    misses; each edge collects a binary in-tree from one leaf per vertex it
    misses; matching leaves are joined by a cover.
    """
    H.require_well_formed()
    names = list(H.vertices) + list(H.edges)
    pairs = []
    down_leaf, up_leaf = {}, {}
    for h in H.vertices:
        edges, node_of = _binary_tree(h, H.notin_vertex(h), ">")
        pairs += edges
        down_leaf.update({(h, e): node for e, node in node_of.items()})
    for e in H.edges:
        edges, node_of = _binary_tree(e, H.notin_edge(e), "<")
        pairs += [(child, parent) for parent, child in edges]
        up_leaf.update({(h, e): node for h, node in node_of.items()})
    pairs += [(down_leaf[key], up_leaf[key]) for key in down_leaf]
    for a, b in pairs:
        for s in (a, b):
            if s not in names:
                names.append(s)
    index = {s: i for i, s in enumerate(names)}
    return from_order_pairs(len(names), [(index[a], index[b]) for a, b in pairs], names)


def random_hypergraph(nv: int, ne: int, seed=None, p: float = 0.4, attempts: int = 1000) -> Hypergraph:
    """A random well-formed hypergraph with ``nv`` vertices and ``ne`` edges.

    Needs ``nv, ne >= 2``: a lone edge contains a vertex that then misses
    no edge.
    """
    if nv < 2 or ne < 2:
        raise ValueError("well-formed hypergraphs need at least two vertices and two edges")
    rng = _rng(seed)
    vertices = [f"h{i}" for i in range(nv)]
    for _ in range(attempts):
        edges = {}
        for j in range(ne):
            members = frozenset(v for v in vertices if rng.random() < p)
            if not members:
                members = frozenset([rng.choice(vertices)])
            edges[f"U{j}"] = members
        H = Hypergraph(tuple(vertices), edges)
        if H.well_formed:
            return H
    raise IllFormedHypergraphError(f"no well-formed hypergraph found for nv={nv}, ne={ne}")


def loads_hypergraph(text: str) -> Hypergraph:
    """Parse ``hypergraph <nv>`` / optional ``vertices ...`` / ``edge <name>: v ...``."""
    lines = [(no, raw.split("#", 1)[0].strip()) for no, raw in enumerate(text.splitlines(), 1)]
    lines = [(no, s) for no, s in lines if s]
    if not lines:
        raise PosetFormatError("empty hypergraph file")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "hypergraph" or not parts[1].isdigit():
        raise PosetFormatError(f"line {no}: expected 'hypergraph <nv>'")
    nv = int(parts[1])
    vertices = [str(i) for i in range(nv)]
    rest = lines[1:]
    if rest and rest[0][1].split()[0] == "vertices":
        no, s = rest[0]
        vertices = s.split()[1:]
        if len(vertices) != nv:
            raise PosetFormatError(f"line {no}: expected {nv} vertex names")
        rest = rest[1:]
    edges = {}
    for no, s in rest:
        head, sep, body = s.partition(":")
        words = head.split()
        if not sep or len(words) != 2 or words[0] != "edge":
            raise PosetFormatError(f"line {no}: expected 'edge <name>: v1 v2 ...'")
        if words[1] in edges:
            raise PosetFormatError(f"line {no}: duplicate edge {words[1]}")
        edges[words[1]] = frozenset(body.split())
    return Hypergraph(tuple(vertices), edges)


def dumps_hypergraph(H: Hypergraph) -> str:
    out = [f"hypergraph {len(H.vertices)}"]
    if H.vertices != tuple(str(i) for i in range(len(H.vertices))):
        out.append("vertices " + " ".join(H.vertices))
    for name, members in H.edges.items():
        out.append(f"edge {name}: " + " ".join(v for v in H.vertices if v in members))
    return "\n".join(out) + "\n"


# --------------------------------------------------------- random corpora


def random_poset_bounded_width(n: int, w: int, density: float = 0.1, seed=None) -> Poset:
    """Random poset on ``n`` elements covered by ``w`` chains (so width <= w).

    Elements are dealt into ``w`` chains along a random linear order;
    every cross-chain pair that agrees with that order is added with
    probability ``density`` before closing.
    """
    if n < 1 or w < 1:
        raise ValueError("n and w must be positive")
    rng = np.random.default_rng(_rng(seed).getrandbits(64))
    rank = rng.permutation(n)
    chain_of = rng.integers(0, min(w, n), size=n)
    rel = (rng.random((n, n)) < density) & (rank[:, None] < rank[None, :])
    rel &= chain_of[:, None] != chain_of[None, :]
    for c in range(min(w, n)):
        members = np.flatnonzero(chain_of == c)
        members = members[np.argsort(rank[members])]
        rel[members[:-1], members[1:]] = True
    return Poset(reflexive_transitive_closure(rel))


def random_poset(n: int, density: float = 0.3, seed=None) -> Poset:
    """Random poset with no width bound."""
    return random_poset_bounded_width(n, n, density, seed)


def random_sentence(v: int, a: int, seed=None, p_forall: float = 0.4) -> Sentence:
    """``v`` variables with random quantifiers and ``a`` random atoms."""
    rng = _rng(seed)
    names = [f"v{i}" for i in range(v)]
    prefix = tuple((s, FORALL if rng.random() < p_forall else EXISTS) for s in names)
    atoms = frozenset((rng.choice(names), rng.choice(names)) for _ in range(a)) if names else frozenset()
    return Sentence(prefix, atoms)


def enumerate_posets(n: int) -> Iterator[Poset]:
    """Every labeled poset on ``n`` elements (``n <= 6``)."""
    if not 1 <= n <= 6:
        raise ValueError("enumerate_posets supports 1 <= n <= 6")
    pairs = list(itertools.combinations(range(n), 2))

    def add(leq, p, q):
        # close after inserting p <= q
        out = leq | np.outer(leq[:, p], leq[q, :])
        return out

    def rec(k, leq, apart):
        if k == len(pairs):
            yield Poset(leq)
            return
        p, q = pairs[k]
        if leq[p, q] or leq[q, p]:
            yield from rec(k + 1, leq, apart)
            return
        yield from rec(k + 1, leq, apart | {(p, q)})
        for a, b in ((p, q), (q, p)):
            nxt = add(leq, a, b)
            if any(nxt[s, t] or nxt[t, s] for s, t in apart):
                continue
            yield from rec(k + 1, nxt, apart)

    yield from rec(0, np.eye(n, dtype=bool), frozenset())
