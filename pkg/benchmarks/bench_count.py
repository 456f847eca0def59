"""Benchmark the compiled counting kernel against the pure-Python fallback.

Builds a synthetic corpus, then times count_window_events from both kernel
modules on the same encoded arrays. Run as:

    python3 benchmarks/bench_count.py [--words 2000000] [--window 5]
"""

import argparse
import random
import time

import numpy as np

from kollokator import tokenize
from kollokator.cooccur import HAVE_EXTENSION, KERNEL_NAME
from kollokator import _count_py

try:
    from kollokator import _count_cy
except ImportError:
    _count_cy = None

FILLER = ["und", "der", "die", "das", "mit", "sich", "wird", "dann", "aber",
          "heute", "immer", "wieder", "schon", "ganz", "sehr", "auch"]
NOUNS = ["Geltung", "Betracht", "Hilfe", "Anwendung", "Mann", "Stadt",
         "Frau", "Kind", "Haus", "Wort", "Welt", "Ende"]
VERBS = ["kommen", "kommt", "kam", "bringen", "gebracht", "nehmen"]


def build_text(rng: random.Random, n_words: int) -> str:
    vocab = FILLER * 4 + NOUNS + VERBS
    parts = []
    remaining = n_words
    while remaining > 0:
        n = min(rng.randint(8, 16), remaining)
        parts.append(" ".join(rng.choices(vocab, k=n)) + " .")
        remaining -= n
    return "\n".join(parts)


def time_kernel(fn, args, repeats: int):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--words", type=int, default=2_000_000)
    parser.add_argument("--window", type=int, default=5)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"building {args.words:,}-word corpus ...", flush=True)
    corpus = tokenize(build_text(rng, args.words))
    ids, forms, index, noun_ok, sent = corpus.encoding()

    is_key = np.zeros(len(forms), dtype=np.uint8)
    for form in VERBS:
        if form in index:
            is_key[index[form]] = 1

    kargs = (ids, sent, noun_ok, is_key, 1, args.window, False)
    py_time, py_counts = time_kernel(_count_py.count_window_events, kargs,
                                     args.repeats)
    n_events = sum(py_counts.values())
    print(f"window 1-{args.window}, {len(ids):,} tokens, "
          f"{n_events:,} events, best of {args.repeats}")
    print(f"  pure Python : {py_time:8.3f}s")
    if _count_cy is None:
        print("  compiled    : not available (extension not built)")
    else:
        cy_time, cy_counts = time_kernel(_count_cy.count_window_events,
                                         kargs, args.repeats)
        assert cy_counts == py_counts, "kernel outputs differ"
        print(f"  compiled    : {cy_time:8.3f}s  ({py_time / cy_time:.1f}x)")
    print(f"default kernel at import: {KERNEL_NAME} "
          f"(extension available: {HAVE_EXTENSION})")


if __name__ == "__main__":
    main()
