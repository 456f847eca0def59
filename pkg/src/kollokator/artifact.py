"""Versioned on-disk corpus artifact.

Binary format: a magic line carrying the format version, then a pickle of
the corpus columns. Identical inputs produce byte-identical artifacts, so
cached stats invalidate on any format change via the version in the magic.
"""

from __future__ import annotations

import pickle
from pathlib import Path

from .ingest import Corpus, IngestError

MAGIC = b"KOLLOKATOR-CORPUS 1\n"


def save_corpus(corpus: Corpus, path) -> None:
    payload = pickle.dumps(corpus.to_dict(), protocol=4)
    Path(path).write_bytes(MAGIC + payload)


def load_corpus(path) -> Corpus:
    data = Path(path).read_bytes()
    if not data.startswith(b"KOLLOKATOR-CORPUS "):
        raise IngestError(f"{path}: not a corpus artifact")
    if not data.startswith(MAGIC):
        got = data.split(b"\n", 1)[0].decode("ascii", "replace")
        raise IngestError(f"{path}: unsupported artifact version ({got!r})")
    return Corpus.from_dict(pickle.loads(data[len(MAGIC):]))
