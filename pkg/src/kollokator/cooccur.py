"""Windowed noun-verb bigram counting and mergeable count tables.

The hot scan lives in a compiled extension (kollokator._count_cy) with a
pure-Python fallback selected at import time; both share one contract and
are cross-checked in the test suite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .ingest import RARE_FORM_CLASSES, Corpus, VerbLexicon

try:
    from . import _count_cy as _kernel
    HAVE_EXTENSION = True
except ImportError:  # extension not built; pure Python does the same job
    from . import _count_py as _kernel
    HAVE_EXTENSION = False

from . import _count_py

KERNEL_NAME = _kernel.KERNEL_NAME


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class WindowSpec:
    """Left window: noun at verb_position - k, min_offset <= k <= max_offset.

    Whether a "5-word window" includes the adjacent position is not settled;
    min_offset defaults to 1 (adjacency counts) and is configurable so both
    readings can be tested.
    """

    max_offset: int
    min_offset: int = 1
    cross_sentence: bool = False
    direction: str = "left"  # right/both reserved, unused for German

    def __post_init__(self):
        if self.direction != "left":
            raise TableError(f"unsupported window direction {self.direction!r}")
        if self.min_offset < 1 or self.max_offset < self.min_offset:
            raise TableError(
                f"invalid window offsets {self.min_offset}..{self.max_offset}")

    def to_string(self) -> str:
        mode = "cross" if self.cross_sentence else "within"
        return f"{self.direction}:{self.min_offset}-{self.max_offset}:{mode}"

    @classmethod
    def from_string(cls, s: str) -> "WindowSpec":
        try:
            direction, offsets, mode = s.split(":")
            lo, hi = offsets.split("-")
            return cls(max_offset=int(hi), min_offset=int(lo),
                       cross_sentence=(mode == "cross"), direction=direction)
        except (ValueError, TableError) as exc:
            raise TableError(f"bad window spec {s!r}") from exc


@dataclass(frozen=True)
class CooccurrenceTable:
    N: int
    pair_counts: dict[tuple[str, str], int]
    noun_counts: dict[str, int]
    verb_counts: dict[str, int]
    window: WindowSpec

    def pair_count(self, noun: str, verb_key: str) -> int:
        return self.pair_counts.get((noun, verb_key), 0)


@dataclass(frozen=True)
class PositionHistogram:
    pair: tuple[str, str]
    counts_by_offset: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts_by_offset.values())


def count_bigrams(corpus: Corpus, keys, window: WindowSpec,
                  stoplist=None) -> CooccurrenceTable:
    """Count noun candidates in the left window of every key-verb occurrence.

    Unigram noun/verb counts are whole-corpus counts of normalized forms,
    not window-restricted ones. A key form absent from the corpus is not an
    error; it simply contributes no pairs and a zero count.
    """
    keys = set(keys)
    if not keys:
        raise TableError("empty key set")
    ids, forms, index, noun_ok, sent = corpus.encoding()
    is_key = np.zeros(len(forms), dtype=np.uint8)
    for k in keys:
        fid = index.get(k)
        if fid is not None:
            is_key[fid] = 1
    if stoplist:
        noun_ok = noun_ok.copy()
        for form in stoplist:
            fid = index.get(form)
            if fid is not None:
                noun_ok[ids == fid] = 0
    raw = _kernel.count_window_events(
        ids, sent, noun_ok, is_key,
        window.min_offset, window.max_offset, window.cross_sentence)
    unigrams = corpus.unigram_counts()
    pair_counts: dict[tuple[str, str], int] = {}
    noun_counts: dict[str, int] = {}
    for (nid, kid), c in raw.items():
        noun, key = forms[nid], forms[kid]
        pair_counts[(noun, key)] = c
        noun_counts[noun] = unigrams[noun]
    verb_counts = {k: unigrams.get(k, 0) for k in keys}
    return CooccurrenceTable(N=corpus.n_word_tokens, pair_counts=pair_counts,
                             noun_counts=noun_counts, verb_counts=verb_counts,
                             window=window)


def position_histogram(corpus: Corpus, pair: tuple[str, str],
                       window: WindowSpec, stoplist=None) -> PositionHistogram:
    """Distribution of the noun's offset within the window, per counting event."""
    noun, key = pair
    events = pair_event_positions(corpus, pair, window, stoplist)
    hist = Counter(p - q for q, p in events)
    return PositionHistogram(pair=pair, counts_by_offset=dict(hist))


def pair_event_positions(corpus: Corpus, pair: tuple[str, str],
                         window: WindowSpec, stoplist=None):
    """All (noun_position, verb_position) counting events for one pair.

    Mirrors count_bigrams semantics exactly; the concordancer and the
    position histogram are built on it so they can never disagree with the
    counter.
    """
    noun, key = pair
    ids, forms, index, noun_ok, sent = corpus.encoding()
    nid = index.get(noun)
    kid = index.get(key)
    if nid is None or kid is None:
        return []
    if stoplist and noun in stoplist:
        return []
    events = []
    for p in np.nonzero(ids == kid)[0].tolist():
        s = sent[p]
        lo = max(p - window.max_offset, 0)
        for q in range(p - window.min_offset, lo - 1, -1):
            if not window.cross_sentence and sent[q] != s:
                break
            if ids[q] == nid and noun_ok[q]:
                events.append((q, p))
    events.sort()
    return events


def empty_table(window: WindowSpec) -> CooccurrenceTable:
    return CooccurrenceTable(N=0, pair_counts={}, noun_counts={},
                             verb_counts={}, window=window)


def merge_tables(a: CooccurrenceTable, b: CooccurrenceTable) -> CooccurrenceTable:
    """Pointwise sum of two tables over the same window; N is summed."""
    if a.window != b.window:
        raise TableError(
            f"cannot merge tables with windows {a.window.to_string()} "
            f"and {b.window.to_string()}")

    def _sum(x: dict, y: dict) -> dict:
        out = dict(x)
        for k, v in y.items():
            out[k] = out.get(k, 0) + v
        return out

    return CooccurrenceTable(
        N=a.N + b.N,
        pair_counts=_sum(a.pair_counts, b.pair_counts),
        noun_counts=_sum(a.noun_counts, b.noun_counts),
        verb_counts=_sum(a.verb_counts, b.verb_counts),
        window=a.window)


def merge_forms(tables: dict[str, CooccurrenceTable], lexicon: VerbLexicon,
                per_form_min: int = 0) -> CooccurrenceTable:
    """Simulated lemmatization: sum per-form tables into one lemma table.

    Pair counts below per_form_min within a single form are dropped before
    summation; forms whose classes are all rare (1st sg, 2nd sg/pl) are
    excluded entirely. Tables must come from the same corpus: noun counts
    and N are taken as-is rather than summed, verb counts are summed over
    the included forms.
    """
    if not tables:
        raise TableError("no form tables to merge")
    windows = {t.window for t in tables.values()}
    if len(windows) != 1:
        raise TableError("form tables have mismatched windows")
    window = windows.pop()

    lemmas = {lexicon.lemma_of(form) for form in tables}
    if len(lemmas) != 1:
        raise TableError(f"forms belong to multiple lemmas: {sorted(lemmas)}")
    lemma = lemmas.pop()

    pair_counts: dict[tuple[str, str], int] = {}
    noun_counts: dict[str, int] = {}
    verb_total = 0
    n_value = 0
    for form, table in sorted(tables.items()):
        classes = lexicon.classes_of(form)
        if classes <= RARE_FORM_CLASSES:
            continue
        verb_total += table.verb_counts.get(form, 0)
        n_value = max(n_value, table.N)
        for (noun, _), c in table.pair_counts.items():
            if c < per_form_min:
                continue
            key = (noun, lemma)
            pair_counts[key] = pair_counts.get(key, 0) + c
        for noun, c in table.noun_counts.items():
            noun_counts[noun] = max(noun_counts.get(noun, 0), c)
    nouns_in_pairs = {noun for noun, _ in pair_counts}
    noun_counts = {n: c for n, c in noun_counts.items() if n in nouns_in_pairs}
    return CooccurrenceTable(N=n_value, pair_counts=pair_counts,
                             noun_counts=noun_counts,
                             verb_counts={lemma: verb_total}, window=window)


def write_table_tsv(table: CooccurrenceTable, path) -> None:
    """TSV export; deterministic row order, bit-exact round-trip."""
    lines = [f"#N={table.N} window={table.window.to_string()}",
             "noun\tverb_key\tf_xy\tf_x\tf_y"]
    for (noun, verb_key) in sorted(table.pair_counts):
        f_xy = table.pair_counts[(noun, verb_key)]
        f_x = table.noun_counts.get(noun, 0)
        f_y = table.verb_counts.get(verb_key, 0)
        lines.append(f"{noun}\t{verb_key}\t{f_xy}\t{f_x}\t{f_y}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_table_tsv(path) -> CooccurrenceTable:
    with open(path, encoding="utf-8") as fh:
        meta = fh.readline().strip()
        if not meta.startswith("#N="):
            raise TableError(f"{path}: missing #N metadata line")
        n_part, window_part = meta[1:].split(" ", 1)
        n_value = int(n_part.split("=", 1)[1])
        window = WindowSpec.from_string(window_part.split("=", 1)[1])
        header = fh.readline().strip()
        if header != "noun\tverb_key\tf_xy\tf_x\tf_y":
            raise TableError(f"{path}: bad header {header!r}")
        pair_counts: dict[tuple[str, str], int] = {}
        noun_counts: dict[str, int] = {}
        verb_counts: dict[str, int] = {}
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            noun, verb_key, f_xy, f_x, f_y = line.split("\t")
            pair_counts[(noun, verb_key)] = int(f_xy)
            noun_counts[noun] = int(f_x)
            verb_counts[verb_key] = int(f_y)
    return CooccurrenceTable(N=n_value, pair_counts=pair_counts,
                             noun_counts=noun_counts, verb_counts=verb_counts,
                             window=window)
