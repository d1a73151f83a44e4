"""Maximal repetitions (runs) of a word.

A run is a maximal factor whose smallest period fits at least twice:
extending it one letter left or right breaks that period.  Runs are
found with a divide and conquer over the word: at each window the
periodic spans crossing the window midpoint are read off extension
tables, then candidates are reduced to full-word maximal runs with
their minimal periods.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Run, as_bytes
from .extensions import lcp_across, lcs_across, z_array

__all__ = ["find_runs", "sum_exponents"]


def _crossing(b: bytes, lo: int, hi: int, out: list[tuple[int, int, int]]) -> None:
    """Collect periodic spans of b[lo:hi] crossing its midpoint.

    Appends (start, end, period) 0-based inclusive spans with exponent
    >= 2, maximal within the window.  Spans lying entirely in one half
    are left to the recursion on that half.
    """
    mid = (lo + hi) // 2
    u = b[lo:mid]
    v = b[mid:hi]
    lu = mid - lo
    lv = hi - mid

    # matches anchored at the midpoint, read rightward: backward reach
    # into u must be positive, forward reach comes from v against itself
    back = lcs_across(u, v)
    zv = z_array(v)
    for p in range(1, lv + 1):
        k1 = back[p - 1]
        k2 = zv[p] if p < lv else 0
        if k1 >= 1 and k1 + k2 >= p:
            out.append((mid - k1, mid + p + k2 - 1, p))

    # matches anchored at the midpoint, read leftward: forward reach
    # into v must be positive, backward reach comes from u against itself
    fwd = lcp_across(u, v)
    zru = z_array(u[::-1])
    for p in range(1, lu + 1):
        k2 = fwd[p - 1]
        k1 = zru[p] if p < lu else 0
        if k2 >= 1 and k1 + k2 >= p:
            out.append((mid - p - k1, mid + k2 - 1, p))


def _minimal_span_period(b: bytes, s0: int, e0: int, p: int) -> int:
    """Smallest period of b[s0:e0+1], given that p is a period.

    The span is at least 2p long, so its minimal period divides p;
    probing the divisors in increasing order finds it.
    """
    fac = b[s0:e0 + 1]
    for d in range(1, p // 2 + 1):
        if p % d == 0 and fac[d:] == fac[:-d]:
            return d
    return p


def find_runs(word) -> list[Run]:
    """All runs of `word`, sorted by (start, period)."""
    b = as_bytes(word)
    n = len(b)
    if n < 2:
        return []
    candidates: list[tuple[int, int, int]] = []
    stack = [(0, n)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        _crossing(b, lo, hi, candidates)
        mid = (lo + hi) // 2
        stack.append((lo, mid))
        stack.append((mid, hi))

    # candidates are window-maximal; keep only full-word maximal spans
    best: dict[tuple[int, int], int] = {}
    for s0, e0, p in candidates:
        if s0 > 0 and b[s0 - 1] == b[s0 - 1 + p]:
            continue
        if e0 < n - 1 and b[e0 + 1] == b[e0 + 1 - p]:
            continue
        key = (s0, e0)
        if p < best.get(key, n + 1):
            best[key] = p

    runs = []
    for (s0, e0), p in best.items():
        d = _minimal_span_period(b, s0, e0, p)
        runs.append(Run(s0 + 1, e0 + 1, d))
    runs.sort(key=lambda r: (r.start, r.period))
    return runs


def sum_exponents(runs) -> Fraction:
    """Exact sum of run exponents (length over period)."""
    total = Fraction(0)
    for r in runs:
        total += Fraction(r.length, r.period)
    return total
