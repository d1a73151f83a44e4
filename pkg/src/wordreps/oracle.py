"""Brute-force reference implementations.

Everything here is recomputed straight from the definitions, one shift at
a time, with numpy doing the letter comparisons.  The module shares only
the data types with the fast algorithms, none of their machinery, so the
two sides can be used to check each other.

The common engine: for a fixed shift p, mark the positions x where
word[x] == word[x + p].  A maximal stretch of marked positions of length
c describes a factor of length c + p with period p; it is a maximal
periodicity when c >= p and a maximal gapped repeat (gap p - c) when
c < p.  Everything below is a filter over these stretches.
"""

from __future__ import annotations

import numpy as np

from .core import Factor, GappedRepeat, Run, Subrepetition, as_bytes, exact_ratio

__all__ = [
    "minimal_period_naive",
    "oracle_factorize",
    "oracle_gapped",
    "oracle_runs",
    "oracle_subreps",
]


def minimal_period_naive(word) -> int:
    """Smallest q such that word[x] == word[x + q] wherever both exist."""
    b = as_bytes(word)
    length = len(b)
    if length == 0:
        raise ValueError("the empty word has no period")
    for q in range(1, length):
        if b[:-q] == b[q:]:
            return q
    return length


def _blocks(arr: np.ndarray, p: int):
    """Maximal stretches [s, e) of 0-based x with arr[x] == arr[x + p]."""
    m = arr[:-p] == arr[p:]
    d = np.diff(m.astype(np.int8), prepend=np.int8(0), append=np.int8(0))
    starts = np.flatnonzero(d == 1)
    ends = np.flatnonzero(d == -1)
    return zip(starts.tolist(), ends.tolist())


def oracle_runs(word) -> list[Run]:
    """All maximal repetitions, from the definition."""
    b = as_bytes(word)
    n = len(b)
    arr = np.frombuffer(b, dtype=np.uint8)
    out = []
    for p in range(1, n // 2 + 1):
        for s, e in _blocks(arr, p):
            if e - s < p:
                continue
            # stretch of c >= p matches: word[s..e+p-1] has period p
            if minimal_period_naive(b[s:e + p]) != p:
                continue
            out.append(Run(s + 1, e + p, p))
    out.sort(key=lambda r: (r.start, r.period))
    return out


def oracle_gapped(word, alpha=None) -> list[GappedRepeat]:
    """All maximal gapped repeats, from the definition.

    With `alpha` set, keeps only repeats whose period is at most
    alpha * copy_len (exact arithmetic).
    """
    b = as_bytes(word)
    n = len(b)
    if alpha is not None:
        a = exact_ratio(alpha, "alpha")
        num, den = a.numerator, a.denominator
    arr = np.frombuffer(b, dtype=np.uint8)
    out = []
    for p in range(1, n):
        for s, e in _blocks(arr, p):
            c = e - s
            if c >= p:
                continue
            if alpha is not None and p * den > num * c:
                continue
            out.append(GappedRepeat(s + 1, c, p))
    out.sort(key=lambda g: (g.left_start, g.end, g.period))
    return out


def oracle_subreps(word, delta) -> list[Subrepetition]:
    """All maximal factors with exponent in [1 + delta, 2), from the definition."""
    b = as_bytes(word)
    n = len(b)
    d = exact_ratio(delta, "delta")
    num, den = d.numerator, d.denominator
    arr = np.frombuffer(b, dtype=np.uint8)
    out = []
    for p in range(2, n):
        for s, e in _blocks(arr, p):
            c = e - s
            # exponent (c + p) / p must lie in [1 + delta, 2)
            if c >= p or c * den < p * num:
                continue
            if minimal_period_naive(b[s:e + p]) != p:
                continue
            out.append(Subrepetition(s + 1, e + p, p))
    out.sort(key=lambda r: (r.start, r.period))
    return out


def oracle_factorize(word) -> list[Factor]:
    """Greedy non-overlapping factorization, by literal string search.

    Each factor is the longest prefix of the remaining text that also
    occurs somewhere ending before the factor starts, or one fresh letter
    when no prefix does.  The first factor is always the first letter.
    """
    b = as_bytes(word)
    n = len(b)
    factors: list[Factor] = []
    pos = 0
    while pos < n:
        idx = len(factors) + 1
        if pos == 0:
            factors.append(Factor(1, 1, 1))
            pos = 1
            continue
        best, best_q = 0, -1
        probe = 1
        while pos + probe <= n:
            q = b.find(b[pos:pos + probe], 0, pos)
            if q < 0:
                break
            best, best_q = probe, q
            probe += 1
        if best >= 2:
            factors.append(Factor(idx, pos + 1, best, delta=pos - best_q))
            pos += best
        else:
            factors.append(Factor(idx, pos + 1, 1))
            pos += 1
    return factors
