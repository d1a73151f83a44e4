"""Acceptance suite: oracle equivalences, worked examples, counting
bounds and a large-input smoke run.

Each criterion prints a PASS line with its measurements; the same lines
are appended to acceptance_report.txt in the repository root so they
survive pytest's output capture.
"""

import math
import pathlib
import resource
import time
from fractions import Fraction
from itertools import product

from wordreps.cli import random_word
from wordreps.core import (
    GappedRepeat,
    Subrepetition,
    validate_factorization,
    validate_gapped_repeat,
)
from wordreps.factorization import factorize
from wordreps.gapped import (
    StartLists,
    factor_end_repeats,
    find_maximal_gapped_repeats,
    frontier_left_repeats,
    frontier_mid_repeats,
    frontier_right_repeats,
    replicate_contained_repeats,
)
from wordreps.oracle import (
    oracle_factorize,
    oracle_gapped,
    oracle_runs,
    oracle_subreps,
)
from wordreps.runs import find_runs, sum_exponents
from wordreps.subreps import (
    build_scan_order,
    filter_stretchable,
    find_subrepetitions,
    period_is_span_minimal,
)

REPORT = pathlib.Path(__file__).resolve().parent.parent / "acceptance_report.txt"
REPORT.write_text("")


def report(line: str) -> None:
    print(line)
    with REPORT.open("a") as fh:
        fh.write(line + "\n")


def words_over(letters: bytes, max_len: int):
    for n in range(max_len + 1):
        for tup in product(letters, repeat=n):
            yield bytes(tup)


def gapped_flat(word, alpha):
    return find_maximal_gapped_repeats(word, alpha).flatten()


def test_criterion_1_gapped_exhaustive():
    alphas = (Fraction(3, 2), Fraction(2), Fraction(3), Fraction(4))
    t0 = time.perf_counter()
    count = 0
    for word in words_over(b"ab", 12):
        for alpha in alphas:
            assert gapped_flat(word, alpha) == oracle_gapped(word, alpha), (word, alpha)
        count += 1
    dt = time.perf_counter() - t0
    report(f"criterion 1 PASS: gapped repeats match the oracle on all "
           f"{count} binary words of length <= 12 at 4 alphas ({dt:.1f}s)")


def test_criterion_2_runs_and_factorization_exhaustive():
    t0 = time.perf_counter()
    count = 0
    for letters, max_len in ((b"ab", 14), (b"abc", 9)):
        for word in words_over(letters, max_len):
            assert find_runs(word) == oracle_runs(word), word
            factors = factorize(word)
            assert factors == oracle_factorize(word), word
            validate_factorization(word, factors)
            count += 1
    dt = time.perf_counter() - t0
    report(f"criterion 2 PASS: runs and factorization match the oracles on "
           f"{count} words (binary <= 14, ternary <= 9) ({dt:.1f}s)")


def test_criterion_3_subreps_exhaustive():
    deltas = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2))
    t0 = time.perf_counter()
    count = checked_repeats = 0
    for word in words_over(b"ab", 12):
        runs = None
        for delta in deltas:
            assert find_subrepetitions(word, delta) == oracle_subreps(word, delta), (
                word, delta)
            # the scan's verdict must agree with the defining check
            if runs is None:
                runs = find_runs(word)
            repeats = gapped_flat(word, 1 / delta)
            marked = {el.source for el in filter_stretchable(build_scan_order(runs, repeats))}
            for rep in repeats:
                assert (rep not in marked) == period_is_span_minimal(word, rep), (word, rep)
                checked_repeats += 1
        count += 1
    dt = time.perf_counter() - t0
    report(f"criterion 3 PASS: subrepetitions match the oracle on {count} binary "
           f"words <= 12 at 3 deltas; scan verdict agreed with the direct "
           f"minimality check on {checked_repeats} repeats ({dt:.1f}s)")


def test_criterion_4_randomized_equivalence():
    alphas_even = (Fraction(3, 2), Fraction(3))
    alphas_odd = (Fraction(2), Fraction(4))
    deltas = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2))
    t0 = time.perf_counter()
    for i in range(100):
        sigma = 2 if i < 50 else 4
        word = random_word(2000, sigma, 4000 + i)
        assert factorize(word) == oracle_factorize(word), i
        assert find_runs(word) == oracle_runs(word), i
        for alpha in alphas_even if i % 2 == 0 else alphas_odd:
            assert gapped_flat(word, alpha) == oracle_gapped(word, alpha), (i, alpha)
        delta = deltas[i % 3]
        assert find_subrepetitions(word, delta) == oracle_subreps(word, delta), (i, delta)
    dt = time.perf_counter() - t0
    report(f"criterion 4 PASS: 100 random words (n=2000, alphabets 2 and 4, "
           f"fixed seeds) match all oracles; alphas and deltas rotate over "
           f"the full sets ({dt:.1f}s)")


def test_criterion_5_worked_examples():
    # every expected object is confirmed by the oracle before the exact
    # fixture comparison
    want = [GappedRepeat(1, 1, 2), GappedRepeat(1, 2, 3)]
    assert oracle_gapped("abaab", 2) == want
    assert gapped_flat("abaab", 2) == want

    word = b"abyabcabyab"
    want = [GappedRepeat(1, 2, 3), GappedRepeat(1, 5, 6),
            GappedRepeat(4, 2, 3), GappedRepeat(7, 2, 3)]
    assert oracle_gapped(word, 2) == want
    assert gapped_flat(word, 2) == want
    factors = factorize(word)
    assert [(f.start, f.length) for f in factors] == [
        (1, 1), (2, 1), (3, 1), (4, 2), (6, 1), (7, 5)]
    # at the last factor the search splits by where the left copy sits
    assert frontier_left_repeats(word, factors, 6, 2) == [GappedRepeat(7, 2, 3)]
    assert set(frontier_right_repeats(word, factors, 6, 2)) == {
        GappedRepeat(4, 2, 3), GappedRepeat(1, 5, 6)}
    assert frontier_mid_repeats(word, factors, 6, 2) == []
    assert factor_end_repeats(word, factors, 6, 2) == []

    # gap strictly over the factor edge: copies 1..1 and 5..5, period 4
    word = b"aabaaba"
    mid = frontier_mid_repeats(word, factorize(word), 4, 4)
    assert mid == [GappedRepeat(1, 1, 4)]
    assert mid[0] in oracle_gapped(word, 4)
    validate_gapped_repeat(word, mid[0])

    # right copy flush with the factor end: copies 9..10 and 12..13
    word = b"qabzabcqabzab"
    fend = factor_end_repeats(word, factorize(word), 7, 2)
    assert fend == [GappedRepeat(9, 2, 3)]
    assert (fend[0].right_start, fend[0].right_end) == (12, 13)
    assert fend[0] in oracle_gapped(word, 2)
    validate_gapped_repeat(word, fend[0])

    # repeat inside a factor, copied from the factor's earlier occurrence
    word = b"zabcabzdzabcabz"
    factors = factorize(word)
    assert factors[7].delta == 8
    lists = StartLists(word)
    source = GappedRepeat(2, 2, 3)
    assert source in oracle_gapped(word, 2)
    lists.append(source)
    inner = replicate_contained_repeats(factors, 8, lists)
    assert inner == [GappedRepeat(10, 2, 3)]
    assert (inner[0].right_start, inner[0].right_end) == (13, 14)
    assert inner[0] in oracle_gapped(word, 2)

    # queue traces: "aaaa" marks its one covered repeat, "aabaa" marks none
    for word, alpha, want_marked, want_pairs in (
            (b"aaaa", 3, [GappedRepeat(1, 1, 3)], [(1, 4)]),
            (b"aabaa", 2, [], [(1, 5)])):
        elements = build_scan_order(find_runs(word), gapped_flat(word, alpha))
        from wordreps.subreps import MonotoneQueue
        queue = MonotoneQueue()
        marked = [el.source for el in filter_stretchable(elements, queue)]
        assert marked == want_marked, word
        assert queue.pairs() == want_pairs, word
        for rep in want_marked:
            assert rep in oracle_gapped(word, alpha)
            assert not period_is_span_minimal(word, rep)
    assert oracle_subreps("aaaa", "1/3") == []
    assert oracle_subreps("aabaa", "1/2") == [
        Subrepetition(1, 5, 3), Subrepetition(2, 4, 2)]

    report("criterion 5 PASS: worked examples reproduce exactly, "
           "oracle-confirmed first")


def test_criterion_6_counting_bounds():
    n = 100_000
    alphas = (2, 4, 8)
    deltas = (Fraction(1, 2), Fraction(1, 4))
    pi2 = 2 * math.pi ** 2
    worst_ratio = {a: 0.0 for a in alphas}
    worst_expo = 0.0
    worst_sub = {d: 0 for d in deltas}
    t0 = time.perf_counter()
    for i in range(20):
        word = random_word(n, 2, 6000 + i)
        runs = find_runs(word)
        expo = sum_exponents(runs)
        assert expo <= 4 * n, i
        worst_expo = max(worst_expo, float(expo) / n)
        flat = {}
        for alpha in alphas:
            lists = find_maximal_gapped_repeats(word, alpha)
            m = len(lists)
            assert m <= pi2 * alpha * alpha * n, (i, alpha)
            ratio = m / (alpha * n)
            assert ratio <= 4, (i, alpha)
            worst_ratio[alpha] = max(worst_ratio[alpha], ratio)
            if alpha in (2, 4):
                flat[alpha] = lists.flatten()
        for delta in deltas:
            repeats = flat[int(1 / delta)]
            marked = {el.source
                      for el in filter_stretchable(build_scan_order(runs, repeats))}
            num, den = delta.numerator, delta.denominator
            count = sum(1 for g in repeats
                        if g not in marked and g.copy_len * den >= num * g.period)
            assert count <= pi2 * n / (delta * delta), (i, delta)
            worst_sub[delta] = max(worst_sub[delta], count)
    dt = time.perf_counter() - t0
    ratios = ", ".join(f"alpha={a}: {worst_ratio[a]:.3f}" for a in alphas)
    subs = ", ".join(f"delta={d}: {worst_sub[d]}" for d in deltas)
    report(f"criterion 6 PASS: 20 binary words n=100000; repeat count bounds "
           f"hold; worst repeats/(alpha*n): {ratios}; worst exponent sum/n: "
           f"{worst_expo:.3f} (<= 4); worst subrepetition counts: {subs} "
           f"({dt:.0f}s)")


def test_criterion_7_performance_smoke():
    n = 1_000_000
    word = random_word(n, 2, 777)
    t0 = time.perf_counter()
    lists = find_maximal_gapped_repeats(word, 2)
    dt = time.perf_counter() - t0
    peak_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
    verdict = "within" if dt <= 30 else "over"
    report(f"criterion 7 REPORT: n=1000000 alpha=2 found {len(lists)} repeats "
           f"in {dt:.1f}s ({verdict} the soft 30s budget); process peak "
           f"memory {peak_mb:.0f} MiB")
