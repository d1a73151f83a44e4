"""Core types for repetition analysis of words.

Coordinate conventions used across the package:

* Words are byte strings; `as_bytes` converts text input.  Positions are
  1-based and intervals are inclusive, so ``word[start..end]`` means the
  Python slice ``word[start - 1:end]``.
* A factor of length L with minimal period p has exponent L/p.  A run is
  a maximal factor with exponent at least 2; a subrepetition is a maximal
  factor whose exponent lies in [1 + delta, 2).  Maximal means the factor
  can not be extended by one letter on either side while keeping p as a
  period.
* A gapped repeat is a pair of equal non-overlapping copies of a factor,
  stored as (left_start, copy_len, period) where period is the distance
  between the copy starts; non-overlapping means copy_len < period.

Thresholds such as alpha and delta are exact rationals.  Floats are
rejected so that "is this repeat alpha-gapped" never depends on rounding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class LogicFaultError(RuntimeError):
    """An internal invariant did not hold; results can not be trusted."""


def as_bytes(word) -> bytes:
    """Return `word` as bytes.  Text input must fit one byte per letter."""
    if isinstance(word, bytes):
        return word
    if isinstance(word, bytearray):
        return bytes(word)
    if isinstance(word, str):
        try:
            return word.encode("latin-1")
        except UnicodeEncodeError:
            raise ValueError("word letters must fit in one byte each") from None
    raise TypeError(f"expected str or bytes, got {type(word).__name__}")


_RATIO_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_ratio(text: str) -> Fraction:
    """Parse 'N' or 'N/D' into an exact Fraction."""
    m = _RATIO_RE.match(text)
    if m is None:
        raise ValueError(f"not a ratio: {text!r} (expected 'N' or 'N/D')")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def exact_ratio(value, name: str = "ratio") -> Fraction:
    """Convert an int, Fraction or 'N/D' string to an exact Fraction.

    Floats are refused on purpose: thresholds like 3/2 must stay exact,
    and a float argument usually means the caller lost exactness already.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"{name} must be an int, Fraction or 'N/D' string, not {type(value).__name__}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_ratio(value)
    raise TypeError(f"{name} must be an int, Fraction or 'N/D' string, not {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class Run:
    """Maximal repetition: word[start..end] with minimal period `period`."""

    start: int
    end: int
    period: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)


@dataclass(frozen=True, slots=True)
class GappedRepeat:
    """Two equal copies of length `copy_len`, starts `period` apart.

    The left copy is word[left_start..left_start + copy_len - 1] and the
    right copy starts at left_start + period.  Since copy_len < period
    there is a non-empty gap of period - copy_len letters between them.
    """

    left_start: int
    copy_len: int
    period: int

    @property
    def left_end(self) -> int:
        return self.left_start + self.copy_len - 1

    @property
    def right_start(self) -> int:
        return self.left_start + self.period

    @property
    def right_end(self) -> int:
        return self.left_start + self.period + self.copy_len - 1

    @property
    def beg(self) -> int:
        return self.left_start

    @property
    def end(self) -> int:
        return self.right_end

    @property
    def gap_len(self) -> int:
        return self.period - self.copy_len

    @property
    def span_len(self) -> int:
        return self.period + self.copy_len

    def shifted(self, offset: int) -> "GappedRepeat":
        return GappedRepeat(self.left_start + offset, self.copy_len, self.period)


@dataclass(frozen=True, slots=True)
class Subrepetition:
    """Maximal factor whose exponent is below 2: word[start..end], minimal period `period`."""

    start: int
    end: int
    period: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)


@dataclass(frozen=True, slots=True)
class Factor:
    """One factor of the greedy non-overlapping factorization.

    `delta` is a back shift to an earlier occurrence of the same piece
    that ends before this factor starts; it is recorded exactly when the
    factor has more than one letter.
    """

    index: int
    start: int
    length: int
    delta: int | None = None

    @property
    def end(self) -> int:
        return self.start + self.length - 1


class RepeatClass(Enum):
    PERIODIC = "Periodic"
    PREFIX_SEMIPERIODIC = "PrefixSemiperiodic"
    SUFFIX_SEMIPERIODIC = "SuffixSemiperiodic"
    ORDINARY = "Ordinary"


def is_alpha_gapped(period: int, copy_len: int, alpha) -> bool:
    """True when period <= alpha * copy_len, tested in exact arithmetic."""
    a = exact_ratio(alpha, "alpha")
    return period * a.denominator <= a.numerator * copy_len


def validate_run(word, run: Run) -> None:
    """Raise ValueError unless `run` is a maximal repetition of `word`."""
    b = as_bytes(word)
    n = len(b)
    s, e, p = run.start, run.end, run.period
    if not (1 <= s <= e <= n):
        raise ValueError(f"{run}: out of bounds for word of length {n}")
    if p < 1 or e - s + 1 < 2 * p:
        raise ValueError(f"{run}: exponent below 2")
    fac = b[s - 1:e]
    if fac[:-p] != fac[p:]:
        raise ValueError(f"{run}: {p} is not a period")
    for q in range(1, p):
        if fac[:-q] == fac[q:]:
            raise ValueError(f"{run}: period not minimal, {q} also works")
    if s > 1 and b[s - 2] == b[s - 2 + p]:
        raise ValueError(f"{run}: extendable to the left")
    if e < n and b[e - p] == b[e]:
        raise ValueError(f"{run}: extendable to the right")


def validate_gapped_repeat(word, rep: GappedRepeat) -> None:
    """Raise ValueError unless `rep` is a maximal gapped repeat of `word`."""
    b = as_bytes(word)
    n = len(b)
    i, c, p = rep.left_start, rep.copy_len, rep.period
    if c < 1 or p < 1 or i < 1 or rep.right_end > n:
        raise ValueError(f"{rep}: out of bounds for word of length {n}")
    if c >= p:
        raise ValueError(f"{rep}: copies overlap or touch")
    if b[i - 1:i - 1 + c] != b[i - 1 + p:i - 1 + p + c]:
        raise ValueError(f"{rep}: copies differ")
    if i > 1 and b[i - 2] == b[i - 2 + p]:
        raise ValueError(f"{rep}: extendable to the left")
    if rep.right_end < n and b[i - 1 + c] == b[i - 1 + p + c]:
        raise ValueError(f"{rep}: extendable to the right")


def validate_subrepetition(word, sub: Subrepetition, delta=None) -> None:
    """Raise ValueError unless `sub` is a maximal factor with exponent in [1 + delta, 2)."""
    b = as_bytes(word)
    n = len(b)
    s, e, p = sub.start, sub.end, sub.period
    if not (1 <= s <= e <= n):
        raise ValueError(f"{sub}: out of bounds for word of length {n}")
    length = e - s + 1
    if p < 1 or length <= p or length >= 2 * p:
        raise ValueError(f"{sub}: exponent not in (1, 2)")
    fac = b[s - 1:e]
    if fac[:-p] != fac[p:]:
        raise ValueError(f"{sub}: {p} is not a period")
    for q in range(1, p):
        if fac[:-q] == fac[q:]:
            raise ValueError(f"{sub}: period not minimal, {q} also works")
    if delta is not None:
        d = exact_ratio(delta, "delta")
        if length * d.denominator < p * (d.denominator + d.numerator):
            raise ValueError(f"{sub}: exponent below 1 + {d}")
    if s > 1 and b[s - 2] == b[s - 2 + p]:
        raise ValueError(f"{sub}: extendable to the left")
    if e < n and b[e - p] == b[e]:
        raise ValueError(f"{sub}: extendable to the right")


def validate_factorization(word, factors) -> None:
    """Raise ValueError unless `factors` is the greedy non-overlapping factorization of `word`.

    Checked directly against the defining rule: the first factor is one
    letter; every later factor is the longest prefix of the rest that
    also occurs somewhere ending before the factor starts (one fresh
    letter when there is no such prefix), and its `delta` points at one
    of those earlier occurrences.
    """
    b = as_bytes(word)
    n = len(b)
    pos = 1
    for idx, f in enumerate(factors, start=1):
        if f.index != idx:
            raise ValueError(f"factor {f}: expected index {idx}")
        if f.start != pos:
            raise ValueError(f"factor {f}: expected start {pos}")
        if f.length < 1:
            raise ValueError(f"factor {f}: empty")
        pos += f.length
    if pos != n + 1:
        raise ValueError(f"factors cover {pos - 1} of {n} letters")
    for f in factors:
        a0 = f.start - 1
        piece = b[a0:a0 + f.length]
        if f.index == 1:
            if f.length != 1 or f.delta is not None:
                raise ValueError(f"factor {f}: first factor must be one plain letter")
            continue
        if f.length == 1:
            if f.delta is not None:
                raise ValueError(f"factor {f}: delta on a one-letter factor")
        else:
            if f.delta is None:
                raise ValueError(f"factor {f}: missing delta")
            if f.delta < f.length:
                raise ValueError(f"factor {f}: delta shorter than the factor, occurrences overlap")
            if a0 - f.delta < 0 or b[a0 - f.delta:a0 - f.delta + f.length] != piece:
                raise ValueError(f"factor {f}: no matching occurrence delta letters back")
        if a0 + f.length < n:
            ext = b[a0:a0 + f.length + 1]
            if b.find(ext, 0, a0) >= 0:
                raise ValueError(f"factor {f}: not greedy, a longer prefix occurs earlier")
