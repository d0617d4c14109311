import itertools
import random

import numpy as np
import pytest

from posetmc import poset as po
from posetmc.errors import IllFormedHypergraphError
from posetmc.generators import (
    Const,
    ExistentialSentence,
    Hypergraph,
    bowtie_reduce,
    bowtie_star_holds,
    dumps_hypergraph,
    enumerate_posets,
    hitting_set_exists,
    hypergraph_to_cover3,
    hypergraph_to_depth2,
    loads_hypergraph,
    phi_k,
    random_existential_sentence,
    random_hypergraph,
    random_poset_bounded_width,
    upper_bound_property,
)
from posetmc.sentence import brute_force_check, format_sentence
from posetmc.solver import check

from conftest import is_partial_order


def test_bowtie_reduce_common_upper_bound():
    psi = ExistentialSentence(("u",), ((Const(0), "u"), (Const(2), "u")))
    phi = bowtie_reduce(psi)
    assert len(phi) == 13
    assert bowtie_star_holds(psi)
    assert brute_force_check(po.bowtie(), phi)
    assert check(po.bowtie(), phi).truth


def test_bowtie_reduce_no_bound():
    psi = ExistentialSentence(("u",), ((Const(1), "u"), (Const(3), "u")))
    assert not bowtie_star_holds(psi)
    assert not check(po.bowtie(), bowtie_reduce(psi)).truth


def test_bowtie_reduce_reflexive():
    psi = ExistentialSentence(("u",), (("u", "u"),))
    assert bowtie_star_holds(psi) and check(po.bowtie(), bowtie_reduce(psi)).truth


def test_bowtie_reduce_avoids_name_clash():
    psi = ExistentialSentence(("_w0",), ((Const(0), "_w0"),))
    phi = bowtie_reduce(psi)
    assert "_w0'" in phi.names and len(phi) == 13


def test_phi_k_text():
    assert format_sentence(phi_k(2)) == "forall x1 x2 exists y1 y2 w : y1 <= x1 & y1 <= w & y2 <= x2 & y2 <= w"


def test_phi_1_always_true():
    for P in enumerate_posets(3):
        assert check(P, phi_k(1)).truth


def test_phi_k_examples(bowtie):
    assert check(bowtie, phi_k(2)).truth
    assert not check(po.antichain(4), phi_k(2)).truth


def test_upper_bound_property_examples(bowtie):
    assert upper_bound_property(bowtie, 2)
    assert not upper_bound_property(po.antichain(2), 2)
    assert all(upper_bound_property(P, 1) for P in enumerate_posets(3))


def _H(vertices, edges):
    return Hypergraph(tuple(vertices), {e: frozenset(vs) for e, vs in edges.items()})


def test_depth2_two_singletons():
    H = _H("ab", {"U1": "a", "U2": "b"})
    P = hypergraph_to_depth2(H)
    names = [(P.names[p], P.names[q]) for p, q in P.cover_pairs()]
    assert sorted(names) == [("a", "U2"), ("b", "U1")]
    assert not hitting_set_exists(H, 1)
    assert check(P, phi_k(1)).truth


def test_depth2_triangle():
    H = _H("abc", {"ab": "ab", "bc": "bc", "ac": "ac"})
    assert hitting_set_exists(H, 2)
    assert not check(hypergraph_to_depth2(H), phi_k(2)).truth
    assert not hitting_set_exists(H, 1)
    assert check(hypergraph_to_depth2(H), phi_k(1)).truth


def test_cover3_two_singletons():
    H = _H("ab", {"U1": "a", "U2": "b"})
    P = hypergraph_to_cover3(H)
    assert po.cover_degree(P) <= 3
    assert check(P, phi_k(1)).truth == check(hypergraph_to_depth2(H), phi_k(1)).truth


def test_cover3_single_missed_edge_is_one_cover():
    H = _H("ab", {"U1": "a", "U2": "b"})
    P = hypergraph_to_cover3(H)
    # a misses only U2: its out-tree is one cover edge from a to its leaf
    a = P.index("a")
    assert np.flatnonzero(P.cover[a]).size == 1


def test_ill_formed_rejected():
    with pytest.raises(IllFormedHypergraphError):
        hypergraph_to_depth2(_H("ab", {"U": "ab"}))
    with pytest.raises(IllFormedHypergraphError):
        hypergraph_to_cover3(_H("ab", {"U": "a"}))
    with pytest.raises(IllFormedHypergraphError):
        _H("ab", {"U": ""})


def test_hitting_set_examples():
    assert hitting_set_exists(_H("a", {"U": "a"}), 1)
    H = _H("ab", {"U1": "a", "U2": "b"})
    assert not hitting_set_exists(H, 1) and hitting_set_exists(H, 2)


def bitmask_hitting(H, k):
    vs = list(H.vertices)
    edge_masks = [sum(1 << vs.index(v) for v in e) for e in H.edges.values()]
    return any(
        bin(m).count("1") <= k and all(m & e for e in edge_masks) for m in range(1 << len(vs))
    )


@pytest.mark.parametrize("seed", range(60))
def test_hitting_set_bitmask_oracle(seed):
    rng = random.Random(seed)
    H = random_hypergraph(rng.randint(2, 8), rng.randint(2, 6), rng)
    for k in (1, 2, 3):
        assert hitting_set_exists(H, k) == bitmask_hitting(H, k)


@pytest.mark.parametrize("seed", range(25))
def test_reduction_structure(seed):
    H = random_hypergraph(random.Random(seed).randint(2, 8), random.Random(seed + 1).randint(2, 6), seed)
    d, c = hypergraph_to_depth2(H), hypergraph_to_cover3(H)
    assert po.depth(d) <= 2
    assert {d.names[i] for i in po.members(po.minimals(d))} == set(H.vertices)
    assert {d.names[i] for i in po.members(po.maximals(d))} == set(H.edges)
    assert po.cover_degree(c) <= 3
    for h in H.vertices:
        for U, members in H.edges.items():
            assert bool(c.leq[c.index(h), c.index(U)]) == (h not in members)
            assert bool(d.leq[d.index(h), d.index(U)]) == (h not in members)


def test_hypergraph_text_round_trip():
    H = random_hypergraph(5, 4, 2)
    assert loads_hypergraph(dumps_hypergraph(H)) == H


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 19), (4, 219)])
def test_enumerate_counts(n, count):
    posets = list(enumerate_posets(n))
    assert len(posets) == count
    assert len({P.leq.tobytes() for P in posets}) == count


def test_enumerate_matches_matrix_brute_force():
    n = 3
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = 0
    for bits in itertools.product([False, True], repeat=len(off)):
        m = np.eye(n, dtype=bool)
        for (i, j), b in zip(off, bits):
            m[i, j] = b
        found += is_partial_order(m)
    assert found == 19


@pytest.mark.parametrize("seed", range(10))
def test_bounded_width(seed):
    for d in (0.0, 0.05, 0.5):
        assert po.width(random_poset_bounded_width(100, 2, d, seed)) <= 2


def test_random_existential_sentence_valid():
    for s in range(20):
        psi = random_existential_sentence(3, 5, s)
        assert len(psi.atoms) == 5 and len(bowtie_reduce(psi)) == 15


def test_random_hypergraph_needs_two_edges():
    with pytest.raises(ValueError):
        random_hypergraph(4, 1, 0)
