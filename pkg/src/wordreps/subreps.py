"""Maximal subrepetitions of a word.

A subrepetition is a maximal factor whose exponent lies in
[1 + delta, 2): its minimal period p fits once with a fraction at
least delta left over, and one letter more on either side breaks the
period.  Every such factor shows up among the maximal gapped repeats
with period at most (1/delta) * copy length; a repeat's span is a
subrepetition exactly when the repeat's period is the span's minimal
period.  That is decided for all repeats in one scan: runs and repeats
are visited in (start, period) order while a queue of (period, end)
pairs, strictly increasing in both coordinates, remembers the furthest
reach of each smaller period; a repeat whose span is covered by a
smaller-period element is "stretchable" and dropped.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import LogicFaultError, Subrepetition, as_bytes, exact_ratio
from .gapped import find_maximal_gapped_repeats
from .runs import find_runs

__all__ = [
    "ElementKind",
    "MonotoneQueue",
    "ScanElement",
    "build_scan_order",
    "filter_stretchable",
    "find_subrepetitions",
    "period_is_span_minimal",
]


class ElementKind(Enum):
    RUN = "run"
    REPEAT = "repeat"


@dataclass(frozen=True, slots=True)
class ScanElement:
    """A run or gapped repeat reduced to its span and period.

    Elements of one scan are unique by (beg, period) and by
    (period, end): both views name the same maximal match stretch.
    """
    beg: int
    period: int
    end: int
    kind: ElementKind
    source: object


def build_scan_order(runs, repeats) -> list[ScanElement]:
    """Merge runs and repeats into one scan, sorted by (beg, period)."""
    elements = [
        ScanElement(r.start, r.period, r.end, ElementKind.RUN, r) for r in runs]
    elements += [
        ScanElement(g.beg, g.period, g.end, ElementKind.REPEAT, g) for g in repeats]
    elements.sort(key=lambda e: (e.beg, e.period))
    return elements


class MonotoneQueue:
    """Pairs (period, end), kept strictly increasing in both coordinates.

    The scan inserts a pair only when its end exceeds the predecessor's
    end, so strictness is an invariant, not a request: breaking it is
    reported as a logic fault.
    """

    def __init__(self) -> None:
        self.periods: list[int] = []
        self.ends: list[int] = []

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.periods, self.ends))

    def predecessor(self, period: int) -> tuple[int, int] | None:
        """The pair with the largest period <= `period`, if any."""
        i = bisect_right(self.periods, period) - 1
        if i < 0:
            return None
        return self.periods[i], self.ends[i]

    def insert(self, period: int, end: int) -> None:
        i = bisect_right(self.periods, period) - 1
        if i >= 0 and end <= self.ends[i]:
            if self.periods[i] == period:
                raise LogicFaultError(
                    f"pair ({period}, {end}) does not advance past "
                    f"({period}, {self.ends[i]}): same-period elements "
                    "must arrive with increasing ends")
            raise LogicFaultError(
                f"pair ({period}, {end}) is covered by {self.pairs()[i]} "
                "and should have been marked, not inserted")
        if i >= 0 and self.periods[i] == period:
            self.ends[i] = end
            pos = i
        else:
            pos = i + 1
            self.periods.insert(pos, period)
            self.ends.insert(pos, end)
        j = pos + 1
        while j < len(self.ends) and self.ends[j] <= end:
            j += 1
        if j > pos + 1:
            del self.periods[pos + 1:j]
            del self.ends[pos + 1:j]


def filter_stretchable(elements, queue: MonotoneQueue | None = None) -> list[ScanElement]:
    """Return the elements whose span sits inside an earlier-starting
    span with a smaller period (the "stretchable" ones).

    `elements` must be in (beg, period) order as produced by
    `build_scan_order`.  Only repeats can come out marked: a run caught
    inside a smaller-period span would contradict period minimality and
    raises a logic fault, as does a same-period containment.  Pass
    `queue` to inspect the final queue state.
    """
    if queue is None:
        queue = MonotoneQueue()
    marked = []
    for el in elements:
        pred = queue.predecessor(el.period)
        if pred is not None and el.end <= pred[1]:
            if pred[0] == el.period:
                raise LogicFaultError(
                    f"element {el} repeats the period of its predecessor "
                    f"pair {pred} without advancing")
            if el.kind is ElementKind.RUN:
                raise LogicFaultError(
                    f"run {el.source} lies in a span of smaller period {pred[0]}, "
                    "so its period is not minimal")
            marked.append(el)
        else:
            queue.insert(el.period, el.end)
    return marked


def period_is_span_minimal(word, repeat) -> bool:
    """Directly check that a repeat's period is the minimal period of
    its whole span word[beg..end] (the defining test, done naively)."""
    b = as_bytes(word)
    span = b[repeat.beg - 1:repeat.end]
    for d in range(1, repeat.period):
        if span[d:] == span[:-d]:
            return False
    return True


def find_subrepetitions(word, delta) -> list[Subrepetition]:
    """All maximal subrepetitions of `word` for exponent threshold
    1 + delta, sorted by (start, period).

    `delta` must be a rational strictly between 0 and 1 (int ratios,
    Fraction, or a "p/q" string).
    """
    b = as_bytes(word)
    d = exact_ratio(delta, "delta")
    if not 0 < d < 1:
        raise ValueError(f"delta must be strictly between 0 and 1, got {d}")
    num, den = d.numerator, d.denominator
    repeats = find_maximal_gapped_repeats(b, Fraction(den, num)).flatten()
    runs = find_runs(b)
    marked = {el.source for el in filter_stretchable(build_scan_order(runs, repeats))}
    out = []
    for g in repeats:
        if g in marked:
            continue
        # keep spans with exponent >= 1 + delta: copy_len >= delta * period
        if g.copy_len * den >= num * g.period:
            out.append(Subrepetition(g.beg, g.end, g.period))
    out.sort(key=lambda s: (s.start, s.period))
    return out
