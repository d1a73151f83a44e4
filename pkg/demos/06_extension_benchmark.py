"""Check that the extension tables behind all the searches scale
linearly.

Every search in this package reduces to four tables of longest common
extensions (prefix/suffix matches of a word against its own shifts or
against a neighbor).  Each table is built in one left-to-right pass,
so time per letter should stay flat as n grows; the table below prints
nanoseconds per letter to make drift obvious.
"""

import time

from wordreps import lcp_across, lcp_with_suffixes, lcs_across, lcs_with_prefixes, random_word


def bench(name, fn, *args, n):
    t0 = time.perf_counter()
    fn(*args)
    dt = time.perf_counter() - t0
    print(f"  {name:<18} n={n:>7}  {dt * 1e9 / n:7.0f} ns/letter  ({dt:.3f}s)")


if __name__ == "__main__":
    for n in (10_000, 100_000, 1_000_000):
        u = random_word(n, 2, 5)
        v = random_word(n, 2, 6)
        bench("lcp_with_suffixes", lcp_with_suffixes, u, n=n)
        bench("lcs_with_prefixes", lcs_with_prefixes, u, n=n)
        bench("lcp_across", lcp_across, u, v, n=n)
        bench("lcs_across", lcs_across, u, v, n=n)
        print()
