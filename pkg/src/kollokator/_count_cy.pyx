# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled windowed co-occurrence kernel.

Same contract as kollokator._count_py.count_window_events; the full token
scan runs at C speed, Python objects are touched only for actual events.
"""

KERNEL_NAME = "cython"


def count_window_events(int[::1] ids, int[::1] sent,
                        unsigned char[::1] noun_ok, unsigned char[::1] is_key,
                        int min_offset, int max_offset, bint cross_sentence):
    cdef Py_ssize_t n = ids.shape[0]
    cdef Py_ssize_t p, q, lo
    cdef int s, kid
    counts = {}
    for p in range(n):
        if is_key[ids[p]]:
            s = sent[p]
            kid = ids[p]
            lo = p - max_offset
            if lo < 0:
                lo = 0
            q = p - min_offset
            while q >= lo:
                if not cross_sentence and sent[q] != s:
                    break
                if noun_ok[q]:
                    pair = (ids[q], kid)
                    if pair in counts:
                        counts[pair] += 1
                    else:
                        counts[pair] = 1
                q -= 1
    return counts
