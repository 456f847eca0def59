import random

import pytest

from kollokator import WindowSpec, concordance, count_bigrams, tokenize
from kollokator.kwic import KwicError, format_lines, tsv_lines

from conftest import random_corpus


def test_single_form_lines():
    corpus = tokenize("Wir kommen heute. Sie kommen morgen.")
    lines = concordance(corpus, "kommen", context_width=2)
    assert len(lines) == 2
    assert lines[0].match == "kommen"
    assert lines[0].left_context == "Wir"
    assert lines[0].right_context == "heute ."
    assert lines[1].sentence_index == 1


def test_single_form_count_equals_unigram():
    rng = random.Random(51)
    corpus = random_corpus(rng)
    lines = concordance(corpus, "kommen")
    assert len(lines) == corpus.unigram_counts().get("kommen", 0)


def test_absent_query_empty():
    corpus = tokenize("Wir kommen heute.")
    assert concordance(corpus, "fehlt") == []


def test_pair_query_matches_table_counts():
    rng = random.Random(53)
    window = WindowSpec(3)
    for _ in range(30):
        corpus = random_corpus(rng)
        table = count_bigrams(corpus, {"kommen", "kommt"}, window)
        for (noun, verb), f_xy in table.pair_counts.items():
            lines = concordance(corpus, (noun, verb), window=window)
            assert len(lines) == f_xy


def test_pair_match_span_contains_both():
    corpus = tokenize("es wird zur Geltung kommen heute")
    lines = concordance(corpus, ("Geltung", "kommen"), context_width=2,
                        window=WindowSpec(2))
    assert len(lines) == 1
    assert lines[0].match == "Geltung kommen"
    assert lines[0].left_context == "wird zur"
    assert lines[0].right_context == "heute"


def test_lines_in_corpus_order():
    corpus = tokenize("erst Geltung kommen . dann Geltung kommen .")
    lines = concordance(corpus, ("Geltung", "kommen"), window=WindowSpec(2))
    assert [l.left_context for l in lines] == ["erst",
                                               "erst Geltung kommen . dann"]


def test_formatting():
    corpus = tokenize("es wird zur Geltung kommen heute", source_id="mk1")
    lines = concordance(corpus, "kommen", context_width=2)
    rendered = format_lines(lines)
    assert rendered == ["zur Geltung <kommen> heute\tmk1"]
    tsv = tsv_lines(lines)
    assert tsv[0].startswith("left_context\t")
    assert tsv[1] == "zur Geltung\tkommen\theute\t0\tmk1"


def test_width_validation():
    corpus = tokenize("Wir kommen")
    with pytest.raises(KwicError):
        concordance(corpus, "kommen", context_width=0)
    with pytest.raises(KwicError):
        concordance(corpus, ("Geltung", "kommen"))  # pair needs a window
