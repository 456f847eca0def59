"""Pure-Python windowed co-occurrence kernel (fallback for the C extension)."""

from __future__ import annotations

import numpy as np

KERNEL_NAME = "python"


def count_window_events(ids, sent, noun_ok, is_key, min_offset, max_offset,
                        cross_sentence):
    """Count (noun_id, key_id) events in a left window of each key token.

    For every position p whose form id is flagged in is_key, every position
    p-k (min_offset <= k <= max_offset) flagged in noun_ok contributes one
    event; the scan stops at sentence boundaries unless cross_sentence.
    """
    counts: dict[tuple[int, int], int] = {}
    # key positions are sparse; vectorize the scan for them only
    key_positions = np.nonzero(is_key[ids])[0]
    for p in key_positions.tolist():
        s = sent[p]
        kid = int(ids[p])
        lo = max(p - max_offset, 0)
        for q in range(p - min_offset, lo - 1, -1):
            if not cross_sentence and sent[q] != s:
                break
            if noun_ok[q]:
                pair = (int(ids[q]), kid)
                counts[pair] = counts.get(pair, 0) + 1
    return counts
