"""Verb-noun collocation extraction from untagged German corpora."""

from importlib.resources import files

from .cooccur import (HAVE_EXTENSION, KERNEL_NAME, CooccurrenceTable,
                      PositionHistogram, WindowSpec, count_bigrams,
                      merge_forms, merge_tables, position_histogram)
from .evaluation import (EvalReport, GoldList, absolute_recall,
                         evaluate_methods, precision, recall_relative)
from .ingest import (Corpus, IngestOptions, Token, VerbLexicon, corpus_stats,
                     is_noun_candidate, load_verb_lexicon, tokenize,
                     tokenize_documents)
from .kwic import ConcordanceLine, concordance
from .pipeline import (CandidateList, MethodConfig, builtin_presets,
                       run_method, run_verbs)
from .stats import ScoredBigram, mutual_information, score_table, t_score

__version__ = "0.1.0"


def builtin_lexicon_path():
    """Path to the bundled lexicon of the 16 support-verb key lemmas."""
    return files("kollokator").joinpath("data/verbs_de.tsv")


__all__ = [
    "CandidateList", "ConcordanceLine", "CooccurrenceTable", "Corpus",
    "EvalReport", "GoldList", "HAVE_EXTENSION", "IngestOptions", "KERNEL_NAME",
    "MethodConfig", "PositionHistogram", "ScoredBigram", "Token",
    "VerbLexicon", "WindowSpec", "absolute_recall", "builtin_lexicon_path",
    "builtin_presets", "concordance", "corpus_stats", "count_bigrams",
    "evaluate_methods", "is_noun_candidate", "load_verb_lexicon",
    "merge_forms", "merge_tables", "mutual_information", "position_histogram",
    "precision", "recall_relative", "run_method", "run_verbs", "score_table",
    "t_score", "tokenize", "tokenize_documents",
]
