"""Factorization against fixtures, the brute-force oracle, and the validator."""

import random

from wordreps.core import validate_factorization
from wordreps.factorization import factorize
from wordreps.oracle import oracle_factorize


def shapes(factors):
    return [(f.start, f.length, f.delta) for f in factors]


def test_fixtures():
    assert shapes(factorize("abaabab")) == [
        (1, 1, None), (2, 1, None), (3, 1, None), (4, 3, 3), (7, 1, None)]
    assert shapes(factorize("aaaaa")) == [
        (1, 1, None), (2, 1, None), (3, 2, 2), (5, 1, None)]
    assert shapes(factorize("abc")) == [(1, 1, None), (2, 1, None), (3, 1, None)]
    assert shapes(factorize("abyabcabyab")) == [
        (1, 1, None), (2, 1, None), (3, 1, None), (4, 2, 3), (6, 1, None), (7, 5, 6)]
    assert factorize("") == []
    assert shapes(factorize("a")) == [(1, 1, None)]


def test_indices_count_up():
    factors = factorize("zabcabzdzabcabz")
    assert [f.index for f in factors] == list(range(1, len(factors) + 1))


def test_matches_oracle_and_validator():
    rng = random.Random(1105)
    words = ["abaab", "aabaaba", "qabzabcqabzab", "zabcabzdzabcabz", "mississippi"]
    for _ in range(60):
        n = rng.randrange(0, 40)
        sigma = rng.choice("23")
        words.append("".join(rng.choice("abc"[:int(sigma)]) for _ in range(n)))
    for w in words:
        got = factorize(w)
        assert got == oracle_factorize(w), w
        validate_factorization(w, got)


def test_longer_random_words_round_trip():
    rng = random.Random(7)
    for _ in range(8):
        w = "".join(rng.choice("ab") for _ in range(600))
        factors = factorize(w)
        validate_factorization(w, factors)
        # pieces must tile the word
        assert "".join(w[f.start - 1:f.start - 1 + f.length] for f in factors) == w
