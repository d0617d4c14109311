import itertools
import random

import pytest

from posetmc import poset as po
from posetmc.errors import DuplicateVariableError, EmptyDomainError, SentenceSyntaxError, UnboundVariableError
from posetmc.generators import enumerate_posets, random_poset, random_sentence
from posetmc.sentence import (
    EXISTS,
    FORALL,
    GameStats,
    RelativizedDomains,
    Sentence,
    brute_force_check,
    format_sentence,
    parse,
    relativized_check,
    restrict,
)


def naive(P, phi, doms):
    """Plain alternating recursion, no pruning and no memo."""
    names = phi.names

    def go(i, env):
        if i == len(names):
            return all(P.leq[env[u], env[v]] for u, v in phi.atoms)
        v = names[i]
        dom = doms.universal_domain if phi.quantifier(v) is FORALL else doms.existential_domains[v]
        results = (go(i + 1, {**env, v: int(p)}) for p in po.members(po.as_mask(P, dom)))
        return all(results) if phi.quantifier(v) is FORALL else any(results)

    return go(0, {})


def test_parse_forall_exists():
    phi = parse("forall x exists y : x <= y")
    assert phi.variables == (("x", FORALL), ("y", EXISTS))
    assert phi.atoms == {("x", "y")}


def test_parse_equality_expands():
    phi = parse("exists y forall x : x = y")
    assert phi.variables == (("y", EXISTS), ("x", FORALL))
    assert phi.atoms == {("x", "y"), ("y", "x")}


def test_unbound():
    with pytest.raises(UnboundVariableError) as info:
        parse("forall x : y <= x")
    assert info.value.name == "y"


def test_duplicate():
    with pytest.raises(DuplicateVariableError):
        parse("forall x exists x : x <= x")


@pytest.mark.parametrize("text", ["forall x y <= x", "forall x : x < x", "forall : true", "forall x : x <=", "exists 1 : true"])
def test_syntax_errors(text):
    with pytest.raises(SentenceSyntaxError) as info:
        parse(text)
    assert info.value.position is not None


def test_empty_sentence_and_comments():
    phi = parse("# nothing here\n: true")
    assert phi.variables == () and not phi.atoms
    assert format_sentence(phi) == ": true"


@pytest.mark.parametrize("seed", range(100))
def test_round_trip(seed):
    rng = random.Random(seed)
    phi = random_sentence(rng.randint(0, 6), rng.randint(0, 8), rng)
    assert parse(format_sentence(phi)) == phi


def test_restrict_examples():
    phi = parse("forall x exists y w : x <= y & y <= w")
    assert restrict(phi, {"x", "y"}) == parse("forall x exists y : x <= y")
    assert restrict(phi, phi.names) == phi
    empty = restrict(phi, set())
    assert empty.variables == () and brute_force_check(po.bowtie(), empty)


def test_brute_force_examples(bowtie):
    assert brute_force_check(bowtie, parse("forall x exists y : y <= x"))
    assert not brute_force_check(bowtie, parse("exists y forall x : x <= y"))
    assert brute_force_check(bowtie, parse(": true"))
    assert brute_force_check(po.chain(1), parse("forall x y : x <= y"))


def test_relativized_examples(bowtie):
    phi = parse("forall x exists y : y <= x")
    assert relativized_check(bowtie, phi, RelativizedDomains(None, {"y": [0, 2]}))
    assert not relativized_check(bowtie, phi, RelativizedDomains(None, {"y": [1]}))
    assert relativized_check(bowtie, phi, RelativizedDomains.full(bowtie, phi))


def test_empty_domain(bowtie):
    phi = parse("forall x exists y : y <= x")
    with pytest.raises(EmptyDomainError):
        relativized_check(bowtie, phi, RelativizedDomains(None, {"y": []}))


def _corpus(count, seed, max_vars=6):
    rng = random.Random(seed)
    return [random_sentence(rng.randint(1, max_vars), rng.randint(0, 8), rng) for _ in range(count)]


@pytest.mark.parametrize("n", range(1, 5))
def test_restrict_is_entailed(n):
    rng = random.Random(n)
    corpus = _corpus(25, n)
    for P in enumerate_posets(n):
        for phi in corpus:
            if brute_force_check(P, phi):
                keep = {v for v in phi.names if rng.random() < 0.5}
                assert brute_force_check(P, restrict(phi, keep))


@pytest.mark.parametrize("n", range(1, 5))
def test_full_relativization_equals_brute_force(n):
    corpus = _corpus(25, 100 + n, max_vars=5)
    for P in enumerate_posets(n):
        for phi in corpus:
            assert relativized_check(P, phi, RelativizedDomains.full(P, phi)) == brute_force_check(P, phi)


def test_memoized_equals_naive_reference():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 5)
        P = random_poset(n, rng.random(), rng)
        phi = random_sentence(rng.randint(1, 5), rng.randint(0, 6), rng)
        doms = RelativizedDomains(
            [p for p in range(n) if rng.random() < 0.7] or [0],
            {v: [p for p in range(n) if rng.random() < 0.6] or [n - 1] for v in phi.existentials},
        )
        stats = GameStats()
        assert relativized_check(P, phi, doms, stats) == naive(P, phi, doms)
        assert stats.memo_states >= 0
