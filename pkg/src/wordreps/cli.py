"""Command-line front end.

Subcommands and their TSV record shapes (single-tab separators, no
header, 1-based inclusive positions):

    runs        RUN <start> <end> <period> <len>/<period>
    repeats     GREP <lbeg> <lend> <rbeg> <rend> <period> <copylen> <class>
    subreps     SUBREP <beg> <end> <period> <len>/<period>
    factorize   FACTOR <i> <start> <len> <delta|->
    census      CENSUS <field> <value>
    verify      main-vs-oracle sweep; prints the first counterexample

The input word comes from a file path argument, from standard input
when the path is missing or "-", or from --random N:SIGMA:SEED.
--text strips one trailing newline first.  --format json emits one
object with the same fields under the keys "runs", "repeats",
"subreps", "factors" or "census".  Exit codes: 0 success, 2 usage
error (diagnostic on stderr), 1 internal logic fault or a failed
verify.  NO_COLOR (or a non-tty stream) disables the few decorated
status lines; data records are never decorated.

random_word is splitmix64 with the published constants
(increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB, shifts 30/27/31); each 64-bit output is reduced
mod sigma and mapped onto the first sigma lowercase letters, so a
(n, sigma, seed) triple names the same word on every platform.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .core import LogicFaultError, RepeatClass, as_bytes, exact_ratio
from .factorization import factorize
from .gapped import classify_repeat, find_maximal_gapped_repeats
from .oracle import oracle_factorize, oracle_gapped, oracle_runs, oracle_subreps
from .runs import find_runs, sum_exponents
from .subreps import find_subrepetitions

__all__ = ["CensusReport", "census", "main", "random_word", "run_cli"]

_MASK64 = (1 << 64) - 1


def random_word(n: int, sigma: int, seed: int) -> bytes:
    """Deterministic word of length n over the first sigma lowercase
    letters, from a splitmix64 stream seeded with `seed`."""
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")
    if not 2 <= sigma <= 26:
        raise ValueError(f"alphabet size must be in 2..26, got {sigma}")
    state = seed & _MASK64
    out = bytearray()
    for _ in range(n):
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        out.append(0x61 + z % sigma)
    return bytes(out)


@dataclass(frozen=True, slots=True)
class CensusReport:
    """Counts and ratios for one word at one alpha (and optional delta).

    All numbers are recomputed from the finders at construction time;
    nothing is cached between reports.
    """

    n: int
    alphabet_size: int
    alpha: Fraction
    delta: Fraction | None
    run_count: int
    sum_exponents: Fraction
    repeat_count: int
    counts_by_class: dict
    subrep_count: int | None
    repeats_per_alpha_n: float
    repeats_per_alpha2_n: float


def census(word, alpha, delta=None) -> CensusReport:
    """Count runs, alpha-gapped repeats (tallied by class) and, with
    `delta` set, subrepetitions of `word`."""
    b = as_bytes(word)
    n = len(b)
    a = exact_ratio(alpha, "alpha")
    if a <= 1:
        raise ValueError(f"alpha must be greater than 1, got {a}")
    d = None
    if delta is not None:
        d = exact_ratio(delta, "delta")
        if not 0 < d < 1:
            raise ValueError(f"delta must be strictly between 0 and 1, got {d}")
    runs = find_runs(b)
    repeats = find_maximal_gapped_repeats(b, a).flatten()
    counts = {cls.value: 0 for cls in RepeatClass}
    for g in repeats:
        counts[classify_repeat(b, g).value] += 1
    m = len(repeats)
    return CensusReport(
        n=n,
        alphabet_size=len(set(b)),
        alpha=a,
        delta=d,
        run_count=len(runs),
        sum_exponents=sum_exponents(runs),
        repeat_count=m,
        counts_by_class=counts,
        subrep_count=len(find_subrepetitions(b, d)) if d is not None else None,
        repeats_per_alpha_n=float(Fraction(m) / (a * n)) if n else 0.0,
        repeats_per_alpha2_n=float(Fraction(m) / (a * a * n)) if n else 0.0,
    )


def _census_fields(rep: CensusReport) -> list[tuple[str, object]]:
    fields: list[tuple[str, object]] = [
        ("n", rep.n),
        ("alphabetSize", rep.alphabet_size),
        ("alpha", str(rep.alpha)),
        ("delta", str(rep.delta) if rep.delta is not None else None),
        ("runCount", rep.run_count),
        ("sumExponents", str(rep.sum_exponents)),
        ("repeatCount", rep.repeat_count),
    ]
    fields += [(f"countsByClass.{name}", rep.counts_by_class[name])
               for name in (cls.value for cls in RepeatClass)]
    fields += [
        ("subrepCount", rep.subrep_count),
        ("repeatsPerAlphaN", rep.repeats_per_alpha_n),
        ("repeatsPerAlphaSquaredN", rep.repeats_per_alpha2_n),
    ]
    return fields


def _colorize(text: str, code: str, stream) -> str:
    if os.environ.get("NO_COLOR") is not None:
        return text
    if not (hasattr(stream, "isatty") and stream.isatty()):
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _parse_random_spec(spec: str) -> bytes:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"--random wants N:SIGMA:SEED, got {spec!r}")
    try:
        n, sigma, seed = (int(p, 0) for p in parts)
    except ValueError:
        raise ValueError(f"--random wants three integers, got {spec!r}") from None
    return random_word(n, sigma, seed)


def _load_word(ns) -> bytes:
    if ns.random is not None:
        if ns.path != "-":
            raise ValueError("give either a file path or --random, not both")
        return _parse_random_spec(ns.random)
    if ns.path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(ns.path, "rb") as fh:
            data = fh.read()
    if ns.text:
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    return data


def _emit(records_key: str, rows: list[tuple], json_rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump({records_key: json_rows}, out)
        out.write("\n")
    else:
        for row in rows:
            out.write("\t".join(str(x) for x in row) + "\n")


def _cmd_runs(word, fmt, out) -> int:
    runs = find_runs(word)
    rows = [("RUN", r.start, r.end, r.period, f"{r.length}/{r.period}") for r in runs]
    json_rows = [{"start": r.start, "end": r.end, "period": r.period,
                  "length": r.length, "exponent": f"{r.length}/{r.period}"} for r in runs]
    _emit("runs", rows, json_rows, fmt, out)
    return 0


def _cmd_repeats(word, alpha, fmt, out) -> int:
    repeats = find_maximal_gapped_repeats(word, alpha).flatten()
    rows = []
    json_rows = []
    for g in repeats:
        cls = classify_repeat(word, g).value
        rows.append(("GREP", g.left_start, g.left_end, g.right_start, g.right_end,
                     g.period, g.copy_len, cls))
        json_rows.append({"leftStart": g.left_start, "leftEnd": g.left_end,
                          "rightStart": g.right_start, "rightEnd": g.right_end,
                          "period": g.period, "copyLen": g.copy_len, "class": cls})
    _emit("repeats", rows, json_rows, fmt, out)
    return 0


def _cmd_subreps(word, delta, fmt, out) -> int:
    subs = find_subrepetitions(word, delta)
    rows = [("SUBREP", s.start, s.end, s.period, f"{s.length}/{s.period}") for s in subs]
    json_rows = [{"start": s.start, "end": s.end, "period": s.period,
                  "length": s.length, "exponent": f"{s.length}/{s.period}"} for s in subs]
    _emit("subreps", rows, json_rows, fmt, out)
    return 0


def _cmd_factorize(word, fmt, out) -> int:
    factors = factorize(word)
    rows = [("FACTOR", f.index, f.start, f.length,
             "-" if f.delta is None else f.delta) for f in factors]
    json_rows = [{"index": f.index, "start": f.start, "length": f.length,
                  "delta": f.delta} for f in factors]
    _emit("factors", rows, json_rows, fmt, out)
    return 0


def _cmd_census(word, alpha, delta, fmt, out) -> int:
    rep = census(word, alpha, delta)
    if fmt == "json":
        obj: dict = {}
        for key, value in _census_fields(rep):
            if key.startswith("countsByClass."):
                obj.setdefault("countsByClass", {})[key.split(".", 1)[1]] = value
            else:
                obj[key] = value
        json.dump({"census": obj}, out)
        out.write("\n")
    else:
        for key, value in _census_fields(rep):
            shown = "-" if value is None else value
            out.write(f"CENSUS\t{key}\t{shown}\n")
    return 0


def _first_mismatch(word) -> str | None:
    """Compare every finder against its oracle on one word."""
    if factorize(word) != oracle_factorize(word):
        return "factorization"
    if find_runs(word) != oracle_runs(word):
        return "runs"
    for alpha in (Fraction(3, 2), Fraction(2), Fraction(4)):
        if find_maximal_gapped_repeats(word, alpha).flatten() != oracle_gapped(word, alpha):
            return f"repeats alpha={alpha}"
    for delta in (Fraction(1, 2), Fraction(1, 4)):
        if find_subrepetitions(word, delta) != oracle_subreps(word, delta):
            return f"subreps delta={delta}"
    return None


def _cmd_verify(ns, out) -> int:
    checked = 0
    for n in range(ns.max_len + 1):
        for m in range(1 << n):
            word = bytes(0x61 + ((m >> i) & 1) for i in range(n))
            what = _first_mismatch(word)
            if what is not None:
                text = word.decode("latin-1")
                out.write(_colorize(f"COUNTEREXAMPLE\t{text}\t{what}", "31", out) + "\n")
                return 1
            checked += 1
    for trial in range(ns.trials):
        word = random_word(ns.length, ns.sigma, ns.seed + trial)
        what = _first_mismatch(word)
        if what is not None:
            text = word.decode("latin-1")
            out.write(_colorize(f"COUNTEREXAMPLE\t{text}\t{what}", "31", out) + "\n")
            return 1
        checked += 1
    out.write(_colorize(f"verify ok: {checked} words match the oracles", "32", out) + "\n")
    return 0


def _add_input_options(sub) -> None:
    sub.add_argument("path", nargs="?", default="-",
                     help="input file ('-' or missing: standard input)")
    sub.add_argument("--text", action="store_true",
                     help="strip one trailing newline from the input")
    sub.add_argument("--random", metavar="N:SIGMA:SEED", default=None,
                     help="generate the input word instead of reading it")
    sub.add_argument("--format", choices=("tsv", "json"), default="tsv")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordreps",
        description="Runs, maximal gapped repeats and subrepetitions in words.")
    subs = parser.add_subparsers(dest="command", required=True)

    _add_input_options(subs.add_parser("runs", help="maximal repetitions"))
    p = subs.add_parser("repeats", help="maximal alpha-gapped repeats")
    _add_input_options(p)
    p.add_argument("--alpha", required=True, metavar="P/Q")
    p = subs.add_parser("subreps", help="maximal delta-subrepetitions")
    _add_input_options(p)
    p.add_argument("--delta", required=True, metavar="P/Q")
    _add_input_options(subs.add_parser(
        "factorize", help="greedy non-overlapping factorization"))
    p = subs.add_parser("census", help="counts, class tallies and ratios")
    _add_input_options(p)
    p.add_argument("--alpha", required=True, metavar="P/Q")
    p.add_argument("--delta", default=None, metavar="P/Q")

    p = subs.add_parser("verify", help="sweep words comparing finders to oracles")
    p.add_argument("--max-len", type=int, default=8, metavar="N",
                   help="exhaustive binary words up to this length (default 8)")
    p.add_argument("--trials", type=int, default=20, metavar="T",
                   help="random words to check (default 20)")
    p.add_argument("--length", type=int, default=80, metavar="N",
                   help="length of each random word (default 80)")
    p.add_argument("--sigma", type=int, default=2, metavar="S")
    p.add_argument("--seed", type=int, default=1, metavar="SEED")
    return parser


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as ex:
        code = ex.code
        return code if isinstance(code, int) else 2
    out = sys.stdout
    try:
        if ns.command == "verify":
            return _cmd_verify(ns, out)
        word = _load_word(ns)
        if ns.command == "runs":
            return _cmd_runs(word, ns.format, out)
        if ns.command == "repeats":
            return _cmd_repeats(word, ns.alpha, ns.format, out)
        if ns.command == "subreps":
            return _cmd_subreps(word, ns.delta, ns.format, out)
        if ns.command == "factorize":
            return _cmd_factorize(word, ns.format, out)
        if ns.command == "census":
            return _cmd_census(word, ns.alpha, ns.delta, ns.format, out)
        raise AssertionError(f"unhandled command {ns.command!r}")
    except LogicFaultError as ex:
        print(f"wordreps: logic fault: {ex}", file=sys.stderr)
        return 1
    except (ValueError, TypeError, OSError) as ex:
        print(f"wordreps: error: {ex}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
