"""Mutual Information and t-scores over count tables, ranked candidate lists.

MI uses the simple maximum-likelihood estimator p(x) = f(x)/N with no
window-size correction of the expected count; this is a known bias, kept
deliberately because it is what the reference score tables reproduce.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .cooccur import CooccurrenceTable


class ScoreError(ValueError):
    pass


@dataclass(frozen=True)
class ScoredBigram:
    noun: str
    verb_key: str
    f_xy: int
    f_x: int
    f_y: int
    N: int
    mi: float
    t: float
    rank: int


def _check_counts(f_xy: int, f_x: int, f_y: int, n: int) -> None:
    if min(f_xy, f_x, f_y, n) < 1:
        raise ScoreError(
            f"counts must be >= 1, got f_xy={f_xy} f_x={f_x} f_y={f_y} N={n}")
    if n < max(f_x, f_y):
        raise ScoreError(f"N={n} smaller than a unigram count")


def mutual_information(f_xy: int, f_x: int, f_y: int, n: int) -> float:
    """log2( f_xy * N / (f_x * f_y) ), in bits."""
    _check_counts(f_xy, f_x, f_y, n)
    return math.log2(f_xy * n / (f_x * f_y))


def t_score(f_xy: int, f_x: int, f_y: int, n: int) -> float:
    """(f_xy - f_x*f_y/N) / sqrt(f_xy + f_x*f_y/N).

    The sum in the denominator (rather than plain sqrt(f_xy)) is what
    reproduces the published score tables; see tests for the fit.
    """
    _check_counts(f_xy, f_x, f_y, n)
    expected = f_x * f_y / n
    return (f_xy - expected) / math.sqrt(f_xy + expected)


def sort_key(noun: str, verb_key: str, f_xy: int, mi: float):
    """Descending MI, ties by descending f_xy, then noun lexicographic."""
    return (-mi, -f_xy, noun, verb_key)


def score_table(table: CooccurrenceTable, min_freq: int = 1) -> list[ScoredBigram]:
    """Score and rank all pairs with f_xy >= min_freq, MI-descending."""
    if min_freq < 1:
        raise ScoreError("min_freq must be >= 1")
    rows = []
    for (noun, verb_key), f_xy in table.pair_counts.items():
        if f_xy < min_freq:
            continue
        f_x = table.noun_counts[noun]
        f_y = table.verb_counts[verb_key]
        mi = mutual_information(f_xy, f_x, f_y, table.N)
        t = t_score(f_xy, f_x, f_y, table.N)
        rows.append((noun, verb_key, f_xy, f_x, f_y, mi, t))
    rows.sort(key=lambda r: sort_key(r[0], r[1], r[2], r[5]))
    return [
        ScoredBigram(noun=noun, verb_key=verb_key, f_xy=f_xy, f_x=f_x,
                     f_y=f_y, N=table.N, mi=mi, t=t, rank=i)
        for i, (noun, verb_key, f_xy, f_x, f_y, mi, t) in enumerate(rows, 1)
    ]


def format_score(value: float) -> str:
    """Two decimals, ties rounded away from zero (not banker's rounding)."""
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), ROUND_HALF_UP))


SCORED_TSV_HEADER = "rank\tnoun\tverb_key\tf_xy\tf_x\tf_y\tmi\tt"


def scored_tsv_lines(bigrams: list[ScoredBigram]) -> list[str]:
    lines = [SCORED_TSV_HEADER]
    for b in bigrams:
        lines.append(
            f"{b.rank}\t{b.noun}\t{b.verb_key}\t{b.f_xy}\t{b.f_x}\t{b.f_y}"
            f"\t{format_score(b.mi)}\t{format_score(b.t)}")
    return lines


def write_scored_tsv(bigrams: list[ScoredBigram], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(scored_tsv_lines(bigrams)) + "\n")
