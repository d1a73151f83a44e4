"""Greedy non-overlapping factorization of a word.

The word is split left to right.  Each factor is the longest prefix of
the unread part that also occurs somewhere in the part already read
(so the earlier occurrence never overlaps the factor); when no prefix
of length two or more occurs there, the factor is a single letter.
Factors of length > 1 carry `delta`, the distance back to the leftmost
such occurrence.

The matcher is a suffix automaton over the processed prefix, extended
letter by letter as factors are emitted.  Each state remembers the end
position of the first occurrence of its strings, which gives both the
longest-match length and the leftmost occurrence in one walk.
"""

from __future__ import annotations

from .core import Factor, as_bytes

__all__ = ["factorize"]


class _Automaton:
    """Suffix automaton with first-occurrence annotations."""

    def __init__(self) -> None:
        self.length = [0]
        self.link = [-1]
        self.trans: list[dict[int, int]] = [{}]
        # 0-based text position of the last letter of the first
        # occurrence of the state's strings
        self.mend = [-1]
        self.last = 0

    def _new_state(self, length: int, link: int, trans: dict[int, int], mend: int) -> int:
        self.length.append(length)
        self.link.append(link)
        self.trans.append(trans)
        self.mend.append(mend)
        return len(self.length) - 1

    def extend(self, letter: int, endpos: int) -> None:
        cur = self._new_state(self.length[self.last] + 1, -1, {}, endpos)
        p = self.last
        while p != -1 and letter not in self.trans[p]:
            self.trans[p][letter] = cur
            p = self.link[p]
        if p == -1:
            self.link[cur] = 0
        else:
            q = self.trans[p][letter]
            if self.length[q] == self.length[p] + 1:
                self.link[cur] = q
            else:
                clone = self._new_state(
                    self.length[p] + 1, self.link[q], dict(self.trans[q]), self.mend[q])
                while p != -1 and self.trans[p].get(letter) == q:
                    self.trans[p][letter] = clone
                    p = self.link[p]
                self.link[q] = clone
                self.link[cur] = clone
        self.last = cur


def factorize(word) -> list[Factor]:
    """Split `word` greedily into factors with back references.

    Returns the factors in order.  `factorize("abaabab")` gives pieces
    a | b | a | aba | b where the fourth factor points delta=3 back.
    """
    b = as_bytes(word)
    n = len(b)
    sam = _Automaton()
    out: list[Factor] = []
    pos = 0
    index = 1
    while pos < n:
        state = 0
        matched = 0
        while pos + matched < n:
            nxt = sam.trans[state].get(b[pos + matched])
            if nxt is None:
                break
            state = nxt
            matched += 1
        if matched >= 2:
            length = matched
            # leftmost occurrence ends at mend[state], so it starts
            # delta = pos - mend + matched - 1 letters before the factor
            delta = pos - sam.mend[state] + matched - 1
        else:
            length = 1
            delta = None
        out.append(Factor(index, pos + 1, length, delta))
        for j in range(pos, pos + length):
            sam.extend(b[j], j)
        pos += length
        index += 1
    return out
