"""Plain-text ingestion: tokenization, sentence segmentation, verb lexicon.

The tokenizer is deliberately simple: whitespace split, punctuation detached,
sentence breaks after ./!/? followed by whitespace, a small abbreviation list.
German noun candidacy rests entirely on capitalization, so sentence-initial
words are lowercased in their normalized form (the convention of the corpora
this toolkit is modelled on); a flag disables that for raw corpora.
"""

from __future__ import annotations

import bisect
import sys
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

SENTENCE_FINAL = {".", "!", "?"}

# Keeps segmentation simple and documented rather than clever.
ABBREVIATIONS = {
    "z.B.", "d.h.", "u.a.", "usw.", "bzw.", "vgl.", "ca.", "etc.",
    "Dr.", "Prof.", "Nr.", "S.", "Bd.", "Abs.",
}

FORM_CLASSES = frozenset({
    "infinitive", "past_participle", "fin_3sg_pres", "fin_3sg_past",
    "fin_pl_past", "fin_1sg", "fin_2sg", "fin_2pl", "other",
})

#: form classes too rare to be worth summing in lemma merges
RARE_FORM_CLASSES = frozenset({"fin_1sg", "fin_2sg", "fin_2pl"})


class IngestError(ValueError):
    pass


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class IngestOptions:
    lowercase_sentence_initial: bool = True


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    sentence_index: int
    position_in_sentence: int
    is_word: bool


def is_noun_candidate(token: Token, stoplist: frozenset[str] | set[str] | None = None) -> bool:
    """Capitalization heuristic: word tokens whose normalized form starts uppercase.

    No pronoun stoplist by default (capitalized "Sie" stays a candidate);
    an optional user-supplied stoplist removes listed normalized forms.
    """
    if not token.is_word or not token.normalized:
        return False
    first = token.normalized[0]
    if not (first.isalpha() and first.isupper()):
        return False
    if stoplist and token.normalized in stoplist:
        return False
    return True


class Corpus:
    """Immutable tokenized corpus, stored columnar for scale.

    Token objects are materialized on demand; large corpora should use the
    array accessors instead of iterating Token instances.
    """

    def __init__(self, surfaces, normalized, sent, pos, is_word, docs, options):
        self._surfaces: list[str] = surfaces
        self._normalized: list[str] = normalized
        self._sent = np.asarray(sent, dtype=np.int32)
        self._pos = np.asarray(pos, dtype=np.int32)
        self._is_word = np.asarray(is_word, dtype=np.uint8)
        self._docs: list[tuple[str, int]] = docs  # (source_id, first token index)
        self.options = options
        self.n_word_tokens = int(self._is_word.sum())
        self._unigrams: Counter | None = None
        self._encoding = None

    def __len__(self) -> int:
        return len(self._surfaces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Corpus):
            return NotImplemented
        return (
            self._surfaces == other._surfaces
            and self._normalized == other._normalized
            and np.array_equal(self._sent, other._sent)
            and np.array_equal(self._pos, other._pos)
            and np.array_equal(self._is_word, other._is_word)
            and self._docs == other._docs
        )

    @property
    def source_ids(self) -> list[str]:
        return [doc_id for doc_id, _ in self._docs]

    @property
    def n_sentences(self) -> int:
        return int(self._sent[-1]) + 1 if len(self._surfaces) else 0

    def token(self, i: int) -> Token:
        return Token(
            surface=self._surfaces[i],
            normalized=self._normalized[i],
            sentence_index=int(self._sent[i]),
            position_in_sentence=int(self._pos[i]),
            is_word=bool(self._is_word[i]),
        )

    def __iter__(self):
        for i in range(len(self)):
            yield self.token(i)

    @property
    def tokens(self) -> list[Token]:
        return list(self)

    def source_of(self, i: int) -> str:
        starts = [start for _, start in self._docs]
        return self._docs[bisect.bisect_right(starts, i) - 1][0]

    def surfaces(self) -> list[str]:
        return self._surfaces

    def normalized_forms(self) -> list[str]:
        return self._normalized

    def sentence_indices(self) -> np.ndarray:
        return self._sent

    def unigram_counts(self) -> Counter:
        """Whole-corpus counts of normalized word forms."""
        if self._unigrams is None:
            words = self._is_word
            self._unigrams = Counter(
                form for form, w in zip(self._normalized, words) if w
            )
        return self._unigrams

    def encoding(self):
        """Integer encoding of the token stream, built once and cached.

        Returns (ids, forms, index, noun_ok, sent) where ids[i] is the
        integer id of normalized form i, forms/index map ids to strings and
        back, and noun_ok marks capitalization-based noun candidates.
        """
        if self._encoding is None:
            index: dict[str, int] = {}
            forms: list[str] = []
            ids = np.empty(len(self._surfaces), dtype=np.int32)
            noun_ok = np.zeros(len(self._surfaces), dtype=np.uint8)
            for i, form in enumerate(self._normalized):
                fid = index.get(form)
                if fid is None:
                    fid = len(forms)
                    index[form] = fid
                    forms.append(form)
                ids[i] = fid
                if self._is_word[i] and form:
                    first = form[0]
                    if first.isalpha() and first.isupper():
                        noun_ok[i] = 1
            self._encoding = (ids, forms, index, noun_ok, self._sent)
        return self._encoding

    def to_dict(self) -> dict:
        return {
            "format_version": 1,
            "surfaces": self._surfaces,
            "normalized": self._normalized,
            "sent": self._sent,
            "pos": self._pos,
            "is_word": self._is_word,
            "docs": self._docs,
            "options": self.options,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Corpus":
        return cls(d["surfaces"], d["normalized"], d["sent"], d["pos"],
                   d["is_word"], d["docs"], d["options"])


class _Builder:
    """Accumulates token columns across one or more documents."""

    def __init__(self, options: IngestOptions):
        self.options = options
        self.surfaces: list[str] = []
        self.normalized: list[str] = []
        self.sent: list[int] = []
        self.pos: list[int] = []
        self.is_word: list[int] = []
        self.docs: list[tuple[str, int]] = []
        self.sent_idx = -1
        self.pos_idx = 0

    def add_document(self, source_id: str, text: str) -> None:
        self.docs.append((source_id, len(self.surfaces)))
        lower_initial = self.options.lowercase_sentence_initial
        surfaces = self.surfaces
        normalized = self.normalized
        sent_col = self.sent
        pos_col = self.pos
        word_col = self.is_word
        intern = sys.intern

        pending_break = True  # document start opens a new sentence
        sent_idx = self.sent_idx
        pos_idx = self.pos_idx

        def emit(tok: str, word: bool) -> None:
            nonlocal pending_break, sent_idx, pos_idx
            if pending_break:
                sent_idx += 1
                pos_idx = 0
                pending_break = False
            norm = tok
            if (lower_initial and pos_idx == 0 and word and tok
                    and tok[0].isalpha() and tok[0].isupper()):
                norm = intern(tok[0].lower() + tok[1:])
            surfaces.append(tok)
            normalized.append(norm)
            sent_col.append(sent_idx)
            pos_col.append(pos_idx)
            word_col.append(1 if word else 0)
            pos_idx += 1

        for chunk in text.split():
            if chunk.isalpha():  # fast path for the common case
                emit(intern(chunk), True)
                continue
            lead: list[str] = []
            k = 0
            while k < len(chunk) and not chunk[k].isalnum():
                lead.append(chunk[k])
                k += 1
            core = chunk[k:]
            trail: list[str] = []
            while core and not core[-1].isalnum():
                trail.append(core[-1])
                core = core[:-1]
            trail.reverse()
            if trail and trail[0] == "." and (core + ".") in ABBREVIATIONS:
                core = core + "."
                trail = trail[1:]
            for c in lead:
                emit(intern(c), False)
            if core:
                emit(intern(core), any(ch.isalnum() for ch in core))
            for c in trail:
                emit(intern(c), False)
            last = trail[-1] if trail else (None if core else (lead[-1] if lead else None))
            if last in SENTENCE_FINAL:
                pending_break = True

        self.sent_idx = sent_idx
        self.pos_idx = pos_idx
        # a document never continues the previous document's sentence
        self._force_break()

    def _force_break(self) -> None:
        # next emit starts a fresh sentence
        self.pos_idx = 0

    def build(self) -> Corpus:
        return Corpus(self.surfaces, self.normalized, self.sent, self.pos,
                      self.is_word, self.docs, self.options)


def tokenize(raw_text: str, options: IngestOptions | None = None,
             source_id: str = "doc0") -> Corpus:
    """Tokenize one document into a Corpus. Deterministic."""
    options = options or IngestOptions()
    b = _Builder(options)
    b.add_document(source_id, raw_text)
    return b.build()


def tokenize_documents(documents, options: IngestOptions | None = None) -> Corpus:
    """Tokenize (source_id, text) pairs into one multi-document Corpus."""
    options = options or IngestOptions()
    b = _Builder(options)
    for source_id, text in documents:
        b.add_document(source_id, text)
    return b.build()


def read_text_file(path) -> str:
    path = Path(path)
    data = path.read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IngestError(
            f"{path}: invalid UTF-8 at byte offset {exc.start}") from exc


def ingest_paths(paths, options: IngestOptions | None = None) -> Corpus:
    return tokenize_documents(
        ((str(p), read_text_file(p)) for p in paths), options)


def corpus_stats(corpus: Corpus, include_punctuation: bool = False):
    """Corpus size N and unigram counts over normalized forms.

    N counts word tokens only by default; the paper reports corpus size in
    words, and punctuation inflation would bias MI downward.
    """
    if len(corpus) == 0:
        raise IngestError("corpus is empty")
    n = len(corpus) if include_punctuation else corpus.n_word_tokens
    return n, corpus.unigram_counts()


@dataclass(frozen=True)
class VerbLexicon:
    """lemma -> {(form, form_class)}; every form resolves to a unique lemma."""

    entries: dict[str, frozenset[tuple[str, str]]]
    _form_to_lemma: dict[str, str] = field(repr=False, default_factory=dict)

    @classmethod
    def from_rows(cls, rows) -> "VerbLexicon":
        entries: dict[str, set[tuple[str, str]]] = {}
        form_to_lemma: dict[str, str] = {}
        for lineno, (lemma, form, form_class) in rows:
            if form_class not in FORM_CLASSES:
                raise LexiconError(
                    f"line {lineno}: unknown form_class {form_class!r}")
            owner = form_to_lemma.get(form)
            if owner is not None and owner != lemma:
                raise LexiconError(
                    f"line {lineno}: form {form!r} assigned to both "
                    f"{owner!r} and {lemma!r}")
            form_to_lemma[form] = lemma
            entries.setdefault(lemma, set()).add((form, form_class))
        for lemma, pairs in entries.items():
            infinitives = {f for f, c in pairs if c == "infinitive"}
            if len(infinitives) != 1:
                raise LexiconError(
                    f"lemma {lemma!r} has {len(infinitives)} infinitive forms")
        return cls({lem: frozenset(p) for lem, p in entries.items()},
                   form_to_lemma)

    @property
    def lemmas(self) -> list[str]:
        return sorted(self.entries)

    def lemma_of(self, form: str) -> str:
        try:
            return self._form_to_lemma[form]
        except KeyError:
            raise LexiconError(f"form {form!r} not in lexicon") from None

    def forms_of(self, lemma: str, form_classes=None) -> dict[str, frozenset[str]]:
        """Forms of a lemma with their class sets, optionally filtered.

        A form is included when any of its classes is in form_classes.
        """
        if lemma not in self.entries:
            raise LexiconError(f"lemma {lemma!r} not in lexicon")
        by_form: dict[str, set[str]] = {}
        for form, cls_ in self.entries[lemma]:
            by_form.setdefault(form, set()).add(cls_)
        if form_classes is not None:
            wanted = set(form_classes)
            by_form = {f: c for f, c in by_form.items() if c & wanted}
        return {f: frozenset(c) for f, c in by_form.items()}

    def classes_of(self, form: str) -> frozenset[str]:
        lemma = self.lemma_of(form)
        return frozenset(c for f, c in self.entries[lemma] if f == form)


def load_verb_lexicon(path) -> VerbLexicon:
    """Load a TSV lexicon (lemma, form, form_class); '#' lines are comments."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise LexiconError(
                    f"line {lineno}: expected 3 tab-separated columns, "
                    f"got {len(parts)}")
            rows.append((lineno, tuple(parts)))
    return VerbLexicon.from_rows(rows)


def load_stoplist(path) -> frozenset[str]:
    """One normalized form per line, UTF-8; '#' lines are comments."""
    items = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                items.add(line)
    return frozenset(items)
