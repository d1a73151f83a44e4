"""Longest-match extension tables.

These answer, in O(1) after linear preprocessing, questions of the form
"starting here, how far do these two stretches of the word keep agreeing".
All four tables are built from Z-arrays: z[i] is the length of the longest
common prefix of the whole sequence and its suffix starting at i.

The two `*_across` tables splice a borrowed stretch of one word onto the
other before matching, and the match is allowed to run off the borrowed
part into the host word.  That wrap is wanted: a repeat whose copy begins
close to a cut point continues periodically across it.
"""

from __future__ import annotations

__all__ = [
    "lcp_across",
    "lcp_with_suffixes",
    "lcs_across",
    "lcs_with_prefixes",
    "z_array",
]

# never equal to a letter, whatever the letter type
_SEP = object()


def z_array(seq) -> list[int]:
    """z[i] = length of the longest common prefix of seq and seq[i:]."""
    n = len(seq)
    if n == 0:
        return []
    z = [0] * n
    z[0] = n
    left = right = 0
    for i in range(1, n):
        if i < right:
            zi = z[i - left]
            if zi < right - i:
                z[i] = zi
                continue
            zi = right - i
        else:
            zi = 0
        while i + zi < n and seq[zi] == seq[i + zi]:
            zi += 1
        z[i] = zi
        if i + zi > right:
            left, right = i, i + zi
    return z


def lcp_with_suffixes(u) -> list[int]:
    """Self-match forward: values[p - 1] = z_array(u)[p] for shifts p = 1..|u|-1.

    values[p - 1] is the largest L with u[1..L] == u[p+1..p+L] (1-based).
    """
    return z_array(u)[1:]


def lcs_with_prefixes(u) -> list[int]:
    """Self-match backward: values[p - 1], for shifts p = 1..|u|-1, is the
    largest L such that the last L letters of u also end at position |u| - p.
    """
    return z_array(u[::-1])[1:]


def lcp_across(u, v) -> list[int]:
    """values[i] = how far v agrees with (last i + 1 letters of u, then v).

    Index i runs over 0..|u|-1.  The agreement may run past the borrowed
    u letters into v itself; it is capped at |v|.
    """
    m, k = len(u), len(v)
    if m == 0:
        return []
    if k == 0:
        return [0] * m
    s = list(v)
    s.append(_SEP)
    s.extend(u)
    s.extend(v)
    z = z_array(s)
    return [z[k + m - i] for i in range(m)]


def lcs_across(u, v) -> list[int]:
    """values[i - 1] = how far u agrees backward with (u, then first i letters of v).

    Index i runs over 1..|v|.  The agreement may run backward past the
    borrowed v letters into u itself; it is capped at |u|.
    """
    m, k = len(u), len(v)
    if k == 0:
        return []
    if m == 0:
        return [0] * k
    s = list(u[::-1])
    s.append(_SEP)
    s.extend(v[::-1])
    s.extend(u[::-1])
    z = z_array(s)
    return [z[m + 1 + k - i] for i in range(1, k + 1)]
