"""Find every maximal repetition (run) in a few words.

A run is a factor that repeats its minimal period at least twice and
cannot be stretched by one letter on either side without breaking that
period.  The sum of run exponents is a standard linear-in-n quantity,
printed here next to each word.
"""

from wordreps import find_runs, oracle_runs, sum_exponents


def show(word: str) -> None:
    runs = find_runs(word)
    assert runs == oracle_runs(word)
    print(f"{word!r}  ({len(runs)} runs, exponent sum {sum_exponents(runs)})")
    for r in runs:
        fragment = word[r.start - 1:r.end]
        print(f"  [{r.start:>2}..{r.end:<2}] period {r.period}  "
              f"exponent {r.length}/{r.period}  {fragment!r}")
    print()


if __name__ == "__main__":
    for word in ("aabaabaa", "mississippi", "aaaa", "abaababaab"):
        show(word)
