"""Tests for the shared domain types and validators."""

from fractions import Fraction

import pytest

from wordreps.core import (
    Factor,
    GappedRepeat,
    LogicFaultError,
    RepeatClass,
    Run,
    Subrepetition,
    as_bytes,
    exact_ratio,
    is_alpha_gapped,
    parse_ratio,
    validate_factorization,
    validate_gapped_repeat,
    validate_run,
    validate_subrepetition,
)
from wordreps.oracle import oracle_factorize


def test_as_bytes():
    assert as_bytes("abc") == b"abc"
    assert as_bytes(b"abc") == b"abc"
    assert as_bytes(bytearray(b"xy")) == b"xy"
    assert as_bytes("") == b""
    with pytest.raises(ValueError):
        as_bytes("€")  # does not fit one byte
    with pytest.raises(TypeError):
        as_bytes(123)


def test_ratio_parsing():
    assert parse_ratio("3/2") == Fraction(3, 2)
    assert parse_ratio("2") == 2
    assert parse_ratio(" 10 / 4 ") == Fraction(5, 2)
    for bad in ("", "a", "1/2/3", "1.5", "-1", "3/0"):
        with pytest.raises(ValueError):
            parse_ratio(bad)
    assert exact_ratio(2) == 2
    assert exact_ratio(Fraction(7, 3)) == Fraction(7, 3)
    assert exact_ratio("5/4") == Fraction(5, 4)
    with pytest.raises(TypeError):
        exact_ratio(1.5)
    with pytest.raises(TypeError):
        exact_ratio(True)
    with pytest.raises(TypeError):
        exact_ratio([2])


def test_is_alpha_gapped():
    assert is_alpha_gapped(3, 2, "3/2")
    assert not is_alpha_gapped(4, 1, 2)
    assert is_alpha_gapped(2, 1, 2)
    # the test is scale invariant
    for p, c in ((3, 2), (4, 1), (2, 1), (7, 3)):
        for alpha in ("3/2", 2, Fraction(5, 2)):
            assert is_alpha_gapped(p, c, alpha) == is_alpha_gapped(10 * p, 10 * c, alpha)


def test_shape_properties():
    r = Run(3, 10, 3)
    assert r.length == 8
    assert r.exponent == Fraction(8, 3)

    g = GappedRepeat(2, 3, 5)
    assert (g.left_end, g.right_start, g.right_end) == (4, 7, 9)
    assert (g.beg, g.end) == (2, 9)
    assert g.gap_len == 2
    assert g.span_len == 8
    assert g.shifted(4) == GappedRepeat(6, 3, 5)

    s = Subrepetition(1, 5, 3)
    assert s.length == 5
    assert s.exponent == Fraction(5, 3)

    f = Factor(4, 4, 3, 3)
    assert f.end == 6


def test_logic_fault_is_runtime_error():
    assert issubclass(LogicFaultError, RuntimeError)


def test_repeat_class_labels():
    assert {cls.value for cls in RepeatClass} == {
        "Periodic", "PrefixSemiperiodic", "SuffixSemiperiodic", "Ordinary"}


def test_validate_run():
    validate_run("aabaabaa", Run(1, 8, 3))
    with pytest.raises(ValueError):
        validate_run("aabaabaa", Run(1, 8, 2))  # not a period
    with pytest.raises(ValueError):
        validate_run("aabaabaa", Run(4, 8, 3))  # extendable to the left
    with pytest.raises(ValueError):
        validate_run("aabaabaa", Run(1, 5, 3))  # exponent below 2
    with pytest.raises(ValueError):
        validate_run("aaaa", Run(1, 4, 2))  # period not minimal
    with pytest.raises(ValueError):
        validate_run("abc", Run(1, 9, 1))  # out of bounds


def test_validate_gapped_repeat():
    validate_gapped_repeat("abaab", GappedRepeat(1, 2, 3))
    with pytest.raises(ValueError):
        validate_gapped_repeat("abaab", GappedRepeat(1, 3, 3))  # copies touch
    with pytest.raises(ValueError):
        validate_gapped_repeat("abcxy", GappedRepeat(1, 2, 3))  # copies differ
    with pytest.raises(ValueError):
        validate_gapped_repeat("aabaab", GappedRepeat(2, 1, 3))  # extendable left
    with pytest.raises(ValueError):
        validate_gapped_repeat("abaaba", GappedRepeat(1, 2, 3))  # extendable right
    with pytest.raises(ValueError):
        validate_gapped_repeat("abaab", GappedRepeat(1, 2, 9))  # out of bounds


def test_validate_subrepetition():
    validate_subrepetition("abaab", Subrepetition(1, 5, 3))
    validate_subrepetition("abaab", Subrepetition(1, 5, 3), "1/2")
    with pytest.raises(ValueError):
        validate_subrepetition("abaab", Subrepetition(1, 5, 3), "3/4")  # exponent too low
    with pytest.raises(ValueError):
        validate_subrepetition("abab", Subrepetition(1, 4, 2))  # exponent reaches 2
    with pytest.raises(ValueError):
        validate_subrepetition("aabaa", Subrepetition(1, 3, 2))  # extendable right
    with pytest.raises(ValueError):
        validate_subrepetition("aaaab", Subrepetition(1, 4, 3))  # period not minimal


def test_validate_factorization():
    for word in ("abaabab", "aaaaa", "abc", "abyabcabyab", "a", ""):
        validate_factorization(word, oracle_factorize(word))

    good = oracle_factorize("abaabab")
    bad = list(good)
    bad[3] = Factor(4, 4, 3, 4)  # no occurrence that far back
    with pytest.raises(ValueError):
        validate_factorization("abaabab", bad)
    bad = list(good)
    bad[3] = Factor(4, 4, 3, None)  # missing back shift
    with pytest.raises(ValueError):
        validate_factorization("abaabab", bad)
    with pytest.raises(ValueError):
        validate_factorization("abaabab", good[:-1])  # does not tile the word
    # greedy rule: factor 3 of "aaaa" could be two letters, so one is wrong
    letters = [Factor(1, 1, 1), Factor(2, 2, 1), Factor(3, 3, 1), Factor(4, 4, 1)]
    with pytest.raises(ValueError):
        validate_factorization("aaaa", letters)
