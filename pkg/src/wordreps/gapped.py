"""Maximal gapped repeats of a word.

A gapped repeat is a pair of equal non-overlapping copies of some
factor; it is maximal when the copies can be extended neither left nor
right while keeping the same distance.  The search walks the greedy
factorization of the word: for each factor, the repeats ending inside
it either reach back across the factor's left edge (three sub-searches,
split by where that edge falls inside the repeat), end exactly at the
factor's right edge, or sit strictly inside the factor and are copies
of repeats already found in the factor's earlier occurrence.

Results are kept in `StartLists`: one list of repeats per left-copy
start position, each list ordered by non-decreasing end.  Every repeat
is found exactly once; a defensive O(1) maximality re-check guards each
emission.
"""

from __future__ import annotations

from .core import GappedRepeat, LogicFaultError, RepeatClass, as_bytes, exact_ratio
from .extensions import lcp_across, lcp_with_suffixes, lcs_across, lcs_with_prefixes
from .factorization import factorize

__all__ = [
    "StartLists",
    "anchor_ladder",
    "classify_repeat",
    "factor_end_repeats",
    "find_maximal_gapped_repeats",
    "frontier_left_repeats",
    "frontier_mid_repeats",
    "frontier_right_repeats",
    "replicate_contained_repeats",
]


def anchor_ladder(length: int, k: int) -> list[int]:
    """Anchor positions for the mid sub-search over a factor of the
    given length: the value at step s is floor(((k-1)/k)^s * length) + 1,
    computed exactly, starting at length + 1 and ending with the first
    value that is at most 2.
    """
    ladder = [length + 1]
    num = den = 1
    while ladder[-1] > 2:
        num *= k - 1
        den *= k
        ladder.append((num * length) // den + 1)
    return ladder


class StartLists:
    """Maximal gapped repeats grouped by left-copy start position.

    `starting_at(j)` is the list of repeats whose left copy starts at j,
    ordered by non-decreasing end; the search appends in that order and
    never reorders.
    """

    def __init__(self, word) -> None:
        self.word_bytes = as_bytes(word)
        self._by_start: dict[int, list[GappedRepeat]] = {}
        self._total = 0

    def append(self, rep: GappedRepeat) -> None:
        self._by_start.setdefault(rep.left_start, []).append(rep)
        self._total += 1

    def starting_at(self, j: int) -> list[GappedRepeat]:
        return self._by_start.get(j, [])

    def items(self):
        """(start, repeats) pairs in increasing start order."""
        return sorted(self._by_start.items())

    def flatten(self) -> list[GappedRepeat]:
        """All repeats sorted by (left start, end, period)."""
        out = [rep for _, reps in self.items() for rep in reps]
        out.sort(key=lambda g: (g.left_start, g.end, g.period))
        return out

    def __len__(self) -> int:
        return self._total


def _sound(b: bytes, left0: int, c: int, p: int) -> bool:
    """O(1) re-check that (left0+1, c, p) is a maximal gapped repeat.

    Verifies bounds, copy separation, the two boundary columns of the
    copies, and that neither side extends.  The interior of the copies
    is trusted to the extension tables that produced the candidate.
    """
    n = len(b)
    if left0 < 0 or c < 1 or c >= p or left0 + p + c > n:
        return False
    if b[left0] != b[left0 + p] or b[left0 + c - 1] != b[left0 + p + c - 1]:
        return False
    if left0 > 0 and b[left0 - 1] == b[left0 + p - 1]:
        return False
    if left0 + p + c < n and b[left0 + c] == b[left0 + p + c]:
        return False
    return True


def frontier_left_repeats(word, factors, i, k) -> list[GappedRepeat]:
    """Repeats ending in factor i whose left copy touches the factor's
    left edge (it covers the edge or ends exactly on it).

    One candidate per period p = 1..len(factor): the copy length is the
    backward reach before the edge plus the forward reach into the
    factor, both read off extension tables over short windows.
    """
    b = as_bytes(word)
    n = len(b)
    f = factors[i - 1]
    ai, li = f.start, f.length
    bi = ai + li - 1
    bprev = ai - 1
    fp = b[ai - 1:min(bi + 1, n)]        # factor plus one lookahead letter
    g = b[max(1, ai - li) - 1:bprev]     # up to li letters before the factor
    lp_tab = lcp_with_suffixes(fp)
    ls_tab = lcs_across(g, b[ai - 1:bi])
    out = []
    for p in range(1, li + 1):
        lp = lp_tab[p - 1] if p - 1 < len(lp_tab) else 0
        if lp > li - p:
            continue                     # right copy would pass the factor end
        ls = ls_tab[p - 1]
        c = lp + ls
        if c >= p or k * c < p:
            continue
        left0 = ai - ls - 1
        if _sound(b, left0, c, p):
            out.append(GappedRepeat(ai - ls, c, p))
    return out


def frontier_right_repeats(word, factors, i, k) -> list[GappedRepeat]:
    """Repeats ending in factor i whose right copy covers or touches the
    factor's left edge.

    The left copy then lies in a window of k * (len(previous factor) +
    len(factor)) letters before the factor; one candidate per period.
    """
    b = as_bytes(word)
    n = len(b)
    f = factors[i - 1]
    ai, li = f.start, f.length
    bi = ai + li - 1
    bprev = ai - 1
    lprev = factors[i - 2].length
    window = k * (lprev + li)
    g = b[max(1, factors[i - 2].start - window) - 1:bprev]
    fp = b[ai - 1:min(bi + 1, n)]
    lp_tab = lcp_across(g, fp)
    ls_tab = lcs_with_prefixes(g)
    out = []
    for p in range(1, min(window - 1, len(g)) + 1):
        lp = lp_tab[p - 1]
        if lp < 1 or lp > li:
            continue
        ls = ls_tab[p - 1] if p - 1 < len(ls_tab) else 0
        c = lp + ls
        if c >= p or k * c < p:
            continue
        left0 = ai - p - ls - 1
        if _sound(b, left0, c, p):
            out.append(GappedRepeat(ai - p - ls, c, p))
    return out


def frontier_mid_repeats(word, factors, i, k) -> list[GappedRepeat]:
    """Repeats ending in factor i whose gap strictly covers the factor's
    left edge: the left copy ends before the edge, the right copy starts
    after it.

    The right copies are swept with a geometric ladder of anchor
    positions d inside the factor, each pass catching the repeats whose
    right copy covers position d but not the previous anchor.  The
    ladder shrinks by (k-1)/k per pass and stops once it reaches 2, so
    the total window work stays proportional to k^2 * len(factor).
    """
    b = as_bytes(word)
    n = len(b)
    f = factors[i - 1]
    ai, li = f.start, f.length
    bi = ai + li - 1
    bprev = ai - 1
    fp = b[ai - 1:min(bi + 1, n)]
    out = []
    ladder = anchor_ladder(li, k)
    for d_prev, d_s in zip(ladder, ladder[1:]):
        h = b[max(1, ai - k * d_prev) - 1:bprev + d_s - 1]
        hp = fp[d_s - 1:d_prev]
        lp_tab = lcp_across(h, hp)
        ls_tab = lcs_with_prefixes(h)
        lh = len(h)
        span = d_prev - d_s
        for p in range(1, min(k * d_prev - 1, lh) + 1):
            lp = lp_tab[p - 1]
            if lp < 1 or lp > span or lp > p - d_s:
                continue
            ls = ls_tab[p - 1] if p - 1 < len(ls_tab) else 0
            if ls >= d_s - 1:
                continue                 # right copy would reach the edge
            c = lp + ls
            if c >= p or k * c < p:
                continue
            right_start = bprev + d_s - ls
            left0 = right_start - p - 1
            if _sound(b, left0, c, p):
                out.append(GappedRepeat(right_start - p, c, p))
    return out


def factor_end_repeats(word, factors, i, k) -> list[GappedRepeat]:
    """Repeats lying inside factor i whose right copy ends exactly at
    the factor's last letter.

    One candidate per period, read off the factor's own suffix table.
    Matches reaching the factor start are skipped: those repeats extend
    past the left edge and belong to the frontier searches.
    """
    b = as_bytes(word)
    n = len(b)
    f = factors[i - 1]
    ai, li = f.start, f.length
    bi = ai + li - 1
    fi = b[ai - 1:bi]
    ls_tab = lcs_with_prefixes(fi)
    out = []
    for p in range(1, li):
        c = ls_tab[p - 1]
        if c < 1 or c >= p or k * c < p:
            continue
        if c >= li - p:
            continue                     # reaches the factor start
        if bi < n and b[bi - p] == b[bi]:
            continue                     # the repeat extends past the factor
        left0 = bi - p - c
        if _sound(b, left0, c, p):
            out.append(GappedRepeat(bi - p - c + 1, c, p))
    return out


def replicate_contained_repeats(factors, i, start_lists: StartLists) -> list[GappedRepeat]:
    """Repeats strictly inside factor i, copied from its earlier occurrence.

    Factor i of length > 1 repeats text found delta letters back, so
    every already-found repeat strictly inside that earlier occurrence
    translates to one strictly inside the factor.  Translation preserves
    maximality; a translated candidate failing the re-check means the
    stored lists are corrupt, which is reported as a logic fault.
    """
    f = factors[i - 1]
    ai, li = f.start, f.length
    bi = ai + li - 1
    delta = f.delta
    if li < 2 or delta is None:
        return []
    b = start_lists.word_bytes
    limit = bi - delta
    out = []
    for j in range(ai + 1, bi):
        for src in start_lists.starting_at(j - delta):
            if src.end >= limit:
                break                    # lists are end-sorted
            rep = src.shifted(delta)
            if not _sound(b, rep.left_start - 1, rep.copy_len, rep.period):
                raise LogicFaultError(
                    f"translated copy {rep} of {src} is not a maximal repeat")
            out.append(rep)
    return out


def find_maximal_gapped_repeats(word, alpha, *, on_step=None) -> StartLists:
    """All maximal gapped repeats of `word` with period at most
    alpha * (copy length), exact arithmetic, grouped by left-copy start.

    `alpha` must be a rational greater than 1 (int, Fraction, or a
    "p/q" string).  The search runs the integer-ratio sub-searches at
    k = ceil(alpha) and keeps exactly the repeats passing the exact
    alpha test, so each repeat is emitted once; nothing is deduplicated.
    `on_step(i, lists)` is called after each factor is processed.
    """
    b = as_bytes(word)
    a = exact_ratio(alpha, "alpha")
    if a <= 1:
        raise ValueError(f"alpha must exceed 1, got {a}")
    num, den = a.numerator, a.denominator
    k = -(-num // den)
    factors = factorize(b)
    lists = StartLists(b)
    for i in range(2, len(factors) + 1):
        f = factors[i - 1]
        ai, li = f.start, f.length
        # bucket the frontier repeats by end so lists stay end-sorted
        fin: list[list[GappedRepeat]] = [[] for _ in range(li)]
        for rep in frontier_left_repeats(b, factors, i, k):
            if rep.period * den <= num * rep.copy_len:
                fin[rep.end - ai].append(rep)
        for rep in frontier_right_repeats(b, factors, i, k):
            if rep.period * den <= num * rep.copy_len:
                fin[rep.end - ai].append(rep)
        for rep in frontier_mid_repeats(b, factors, i, k):
            if rep.period * den <= num * rep.copy_len:
                fin[rep.end - ai].append(rep)
        for bucket in fin:
            for rep in bucket:
                lists.append(rep)
        # translated repeats inherit the alpha bound from their sources
        for rep in replicate_contained_repeats(factors, i, lists):
            lists.append(rep)
        for rep in factor_end_repeats(b, factors, i, k):
            if rep.period * den <= num * rep.copy_len:
                lists.append(rep)
        if on_step is not None:
            on_step(i, lists)
    return lists


def _borders(u: bytes) -> list[int]:
    """Border-length table: entry L is the longest proper border of u[:L]."""
    pi = [0] * (len(u) + 1)
    match = 0
    for idx in range(1, len(u)):
        while match and u[idx] != u[match]:
            match = pi[match]
        if u[idx] == u[match]:
            match += 1
        pi[idx + 1] = match
    return pi


def _has_half_repetition_prefix(pi: list[int], c: int) -> bool:
    # some prefix of length L >= c/2 has exponent >= 2
    for length in range((c + 1) // 2, c + 1):
        if length >= 2 and 2 * (length - pi[length]) <= length:
            return True
    return False


def classify_repeat(word, rep: GappedRepeat) -> RepeatClass:
    """Shape of a repeat's copy, by how repetitive the copy itself is.

    Periodic: the copy's exponent is at least 2.  PrefixSemiperiodic /
    SuffixSemiperiodic: some prefix / suffix at least half the copy is a
    repetition (prefix wins ties).  Ordinary: none of that.
    """
    b = as_bytes(word)
    copy = b[rep.left_start - 1:rep.left_start - 1 + rep.copy_len]
    c = len(copy)
    pi = _borders(copy)
    if 2 * (c - pi[c]) <= c:
        return RepeatClass.PERIODIC
    if _has_half_repetition_prefix(pi, c):
        return RepeatClass.PREFIX_SEMIPERIODIC
    if _has_half_repetition_prefix(_borders(copy[::-1]), c):
        return RepeatClass.SUFFIX_SEMIPERIODIC
    return RepeatClass.ORDINARY
