"""Find maximal delta-subrepetitions and watch the scan that filters
them out of the gapped repeats.

A delta-subrepetition has exponent in [1 + delta, 2): more than one
period but less than two.  Every candidate comes from a gapped repeat
whose period is at most (1/delta) times its copy length; a repeat
survives only if no earlier-starting span of smaller period covers it.
The queue printed below is what decides that: (period, end) pairs,
strictly increasing in both coordinates.
"""

from wordreps import (
    MonotoneQueue,
    build_scan_order,
    filter_stretchable,
    find_maximal_gapped_repeats,
    find_runs,
    find_subrepetitions,
    oracle_subreps,
)


def show(word: str, delta: str) -> None:
    subs = find_subrepetitions(word, delta)
    assert subs == oracle_subreps(word, delta)
    print(f"{word!r} at delta={delta}: {len(subs)} subrepetitions")
    for s in subs:
        fragment = word[s.start - 1:s.end]
        print(f"  [{s.start}..{s.end}] period {s.period}  "
              f"exponent {s.length}/{s.period}  {fragment!r}")

    num, den = (int(p) for p in delta.split("/"))
    repeats = find_maximal_gapped_repeats(word, f"{den}/{num}").flatten()
    queue = MonotoneQueue()
    marked = filter_stretchable(build_scan_order(find_runs(word), repeats), queue)
    if marked:
        print(f"  dropped as stretchable: "
              f"{[(el.beg, el.end, el.period) for el in marked]}")
    print(f"  final queue pairs: {queue.pairs()}")
    print()


if __name__ == "__main__":
    show("abaab", "1/2")
    show("aabaa", "1/2")
    show("aaaa", "1/3")
    show("abyabcabyab", "1/2")
