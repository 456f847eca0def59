"""Keyword-in-context concordance listings for manual candidate checking."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cooccur import WindowSpec, pair_event_positions
from .ingest import Corpus


class KwicError(ValueError):
    pass


@dataclass(frozen=True)
class ConcordanceLine:
    left_context: str
    match: str
    right_context: str
    sentence_index: int
    source_id: str


def _line(corpus: Corpus, start: int, end: int, width: int) -> ConcordanceLine:
    surfaces = corpus.surfaces()
    left = surfaces[max(0, start - width):start]
    right = surfaces[end + 1:end + 1 + width]
    return ConcordanceLine(
        left_context=" ".join(left),
        match=" ".join(surfaces[start:end + 1]),
        right_context=" ".join(right),
        sentence_index=int(corpus.sentence_indices()[start]),
        source_id=corpus.source_of(start))


def concordance(corpus: Corpus, query, context_width: int = 8,
                window: WindowSpec | None = None) -> list[ConcordanceLine]:
    """Concordance lines in corpus order.

    query is either a single normalized form, or a (noun, verb_form) pair;
    pair queries need a window and yield one line per counting event, with
    the match span covering noun through verb. Pair-query line counts equal
    the co-occurrence table entry for that pair under the same window.
    """
    if context_width < 1:
        raise KwicError("context_width must be >= 1")
    if isinstance(query, str):
        ids, forms, index, noun_ok, sent = corpus.encoding()
        fid = index.get(query)
        if fid is None:
            return []
        return [_line(corpus, p, p, context_width)
                for p in np.nonzero(ids == fid)[0].tolist()]
    noun, verb_form = query
    if window is None:
        raise KwicError("pair queries require a window")
    events = pair_event_positions(corpus, (noun, verb_form), window)
    return [_line(corpus, q, p, context_width) for q, p in sorted(events)]


def format_lines(lines: list[ConcordanceLine]) -> list[str]:
    """Aligned text listing: left context right-aligned, match in brackets."""
    width = max((len(l.left_context) for l in lines), default=0)
    return [
        f"{l.left_context:>{width}} <{l.match}> {l.right_context}\t{l.source_id}"
        for l in lines
    ]


KWIC_TSV_HEADER = "left_context\tmatch\tright_context\tsentence_index\tsource_id"


def tsv_lines(lines: list[ConcordanceLine]) -> list[str]:
    out = [KWIC_TSV_HEADER]
    for l in lines:
        out.append(f"{l.left_context}\t{l.match}\t{l.right_context}"
                   f"\t{l.sentence_index}\t{l.source_id}")
    return out
