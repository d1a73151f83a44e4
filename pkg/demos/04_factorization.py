"""Show the greedy non-overlapping factorization that drives the
repeat search.

Reading left to right, each factor is the longest prefix of the unread
text that also occurs in full inside the already-read part (one fresh
letter when nothing matches).  Factors longer than one letter carry a
back shift to their leftmost earlier occurrence; repeats inside such a
factor are copies of repeats found that many letters back, which is
what makes the whole search incremental.
"""

from wordreps import factorize, oracle_factorize, validate_factorization


def show(word: str) -> None:
    factors = factorize(word)
    assert factors == oracle_factorize(word)
    validate_factorization(word, factors)
    pieces = " | ".join(word[f.start - 1:f.end] for f in factors)
    print(f"{word!r}  ->  {pieces}")
    for f in factors:
        back = f"copies text {f.delta} letters back" if f.delta else "fresh letter"
        print(f"  factor {f.index}: [{f.start}..{f.end}] {word[f.start - 1:f.end]!r}  {back}")
    print()


if __name__ == "__main__":
    for word in ("abaabab", "aaaaa", "abyabcabyab", "zabcabzdzabcabz"):
        show(word)
