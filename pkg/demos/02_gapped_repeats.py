"""Find maximal alpha-gapped repeats and classify their copies.

A gapped repeat is two equal copies of a factor separated by a
non-empty gap; it is alpha-gapped when the distance between copy
starts (the period) is at most alpha times the copy length.  Lower
alpha keeps only tightly spaced pairs; raising it admits repeats with
wider gaps.
"""

from wordreps import classify_repeat, find_maximal_gapped_repeats, oracle_gapped


def show(word: str, alpha) -> None:
    repeats = find_maximal_gapped_repeats(word, alpha).flatten()
    assert repeats == oracle_gapped(word, alpha)
    print(f"{word!r} at alpha={alpha}: {len(repeats)} repeats")
    for g in repeats:
        copy = word[g.left_start - 1:g.left_end]
        cls = classify_repeat(word, g).value
        print(f"  copies [{g.left_start}..{g.left_end}] and "
              f"[{g.right_start}..{g.right_end}]  period {g.period}  "
              f"{copy!r}  {cls}")
    print()


if __name__ == "__main__":
    show("abaab", 2)
    show("abyabcabyab", 2)
    # the same word admits more repeats once wider gaps are allowed
    show("abyabcabyab", 4)
    show("aabaabcaabaab", 2)
