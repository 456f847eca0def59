"""Precision, baseline-relative recall, and method comparison reports.

Recall is measured against the candidates found by a designated baseline
method rather than an (unknowable) corpus total, so values above 100% are
normal when a variant finds more true collocations than the baseline.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .ingest import Corpus, VerbLexicon
from .pipeline import CandidateList, MethodConfig, run_method
from .stats import format_score


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class GoldList:
    verb: str
    entries: dict[str, bool]  # noun -> is_collocation
    provenance: str = ""


@dataclass(frozen=True)
class ReportRow:
    config_name: str
    precision_pct: float
    recall_pct: float | None  # None when undefined (baseline found nothing)
    n_found: int
    n_correct: int
    flagged_verbs: tuple[str, ...] = ()


@dataclass(frozen=True)
class EvalReport:
    rows: list[ReportRow]
    baseline_name: str


def _n_correct(candidates: CandidateList, gold: GoldList) -> int:
    missing = sorted(set(candidates.nouns) - set(gold.entries))
    if missing:
        raise EvaluationError(
            f"verb {candidates.verb!r}: candidates not annotated in gold "
            f"list: {', '.join(missing)}")
    return sum(1 for noun in candidates.nouns if gold.entries[noun])


def precision(candidates: CandidateList, gold: GoldList) -> float:
    """Percent of extracted candidates the gold list marks as collocations.

    Every candidate noun must be annotated; unknowns raise rather than being
    silently skipped.
    """
    if len(candidates) == 0:
        warnings.warn(
            f"verb {candidates.verb!r}: no candidates, precision defined as 0",
            stacklevel=2)
        return 0.0
    return 100.0 * _n_correct(candidates, gold) / len(candidates)


def recall_relative(candidates: CandidateList, gold: GoldList,
                    baseline: CandidateList) -> float:
    """Correct candidates as a percentage of the baseline's correct ones."""
    base_correct = _n_correct(baseline, gold)
    if base_correct == 0:
        raise EvaluationError(
            f"verb {baseline.verb!r}: baseline found no correct collocations; "
            "relative recall undefined")
    return 100.0 * _n_correct(candidates, gold) / base_correct


def absolute_recall(candidates: CandidateList, gold: GoldList,
                    gold_total: int) -> float:
    """Correct candidates as a percentage of all collocations in the corpus."""
    if gold_total <= 0:
        raise EvaluationError("gold_total must be positive")
    n_correct = _n_correct(candidates, gold)
    if n_correct > gold_total:
        raise EvaluationError(
            f"n_correct {n_correct} exceeds gold_total {gold_total}")
    return 100.0 * n_correct / gold_total


def evaluate_methods(corpus: Corpus, lexicon: VerbLexicon, verbs,
                     configs: list[MethodConfig], gold: dict[str, GoldList],
                     baseline_name: str, stoplist=None,
                     include_empty: bool = True) -> EvalReport:
    """Per-config unweighted means of per-verb precision and relative recall.

    Verbs that yield no candidates under a config contribute 0/0 and are
    flagged in the row; with include_empty=False they are skipped instead.
    """
    by_name = {c.name: c for c in configs}
    if baseline_name not in by_name:
        raise EvaluationError(f"baseline {baseline_name!r} not among configs")
    for verb in verbs:
        if verb not in gold:
            raise EvaluationError(f"no gold list for verb {verb!r}")

    baseline_runs = {
        verb: run_method(corpus, lexicon, verb, by_name[baseline_name],
                         stoplist=stoplist)
        for verb in verbs
    }
    baseline_correct = {
        verb: _n_correct(baseline_runs[verb], gold[verb]) for verb in verbs
    }

    rows = []
    for config in configs:
        precisions: list[float] = []
        recalls: list[float] = []
        n_found = 0
        n_correct = 0
        flagged: list[str] = []
        for verb in verbs:
            if config.name == baseline_name:
                cands = baseline_runs[verb]
            else:
                cands = run_method(corpus, lexicon, verb, config,
                                   stoplist=stoplist)
            if len(cands) == 0:
                flagged.append(verb)
                if not include_empty:
                    continue
                precisions.append(0.0)
                recalls.append(0.0)
                continue
            correct = _n_correct(cands, gold[verb])
            n_found += len(cands)
            n_correct += correct
            precisions.append(100.0 * correct / len(cands))
            if baseline_correct[verb] > 0:
                recalls.append(100.0 * correct / baseline_correct[verb])
        prec = sum(precisions) / len(precisions) if precisions else 0.0
        rec = sum(recalls) / len(recalls) if recalls else None
        rows.append(ReportRow(config_name=config.name, precision_pct=prec,
                              recall_pct=rec, n_found=n_found,
                              n_correct=n_correct,
                              flagged_verbs=tuple(flagged)))
    return EvalReport(rows=rows, baseline_name=baseline_name)


def load_gold_lists(path) -> dict[str, GoldList]:
    """TSV: verb_lemma, noun, label in {1,0}, optional note column."""
    entries: dict[str, dict[str, bool]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) not in (3, 4):
                raise EvaluationError(
                    f"{path} line {lineno}: expected 3 or 4 columns")
            verb, noun, label = parts[0], parts[1], parts[2]
            if label not in ("0", "1"):
                raise EvaluationError(
                    f"{path} line {lineno}: label must be 0 or 1, got {label!r}")
            per_verb = entries.setdefault(verb, {})
            if noun in per_verb:
                raise EvaluationError(
                    f"{path} line {lineno}: duplicate gold entry "
                    f"({verb!r}, {noun!r})")
            per_verb[noun] = label == "1"
    return {verb: GoldList(verb=verb, entries=nouns, provenance=str(path))
            for verb, nouns in entries.items()}


REPORT_TSV_HEADER = "config\tprecision_pct\trecall_pct\tn_found\tn_correct\tflagged_verbs"


def report_tsv_lines(report: EvalReport) -> list[str]:
    lines = [REPORT_TSV_HEADER]
    for row in report.rows:
        rec = format_score(row.recall_pct) if row.recall_pct is not None else "NA"
        lines.append(
            f"{row.config_name}\t{format_score(row.precision_pct)}\t{rec}"
            f"\t{row.n_found}\t{row.n_correct}\t{','.join(row.flagged_verbs)}")
    return lines


def report_text_lines(report: EvalReport) -> list[str]:
    """Formatted comparison table: Bigrams & Filter / Ø Precision % / Ø Recall %."""
    header = ("Bigrams & Filter", "Ø Precision %", "Ø Recall %")
    body = []
    for row in report.rows:
        rec = format_score(row.recall_pct) if row.recall_pct is not None else "NA"
        if row.config_name == report.baseline_name:
            rec += " (def.)"
        body.append((row.config_name, format_score(row.precision_pct), rec))
    name_w = max(len(header[0]), *(len(r[0]) for r in body)) if body else len(header[0])
    lines = [f"{header[0]:<{name_w}}  {header[1]:>13}  {header[2]:>12}"]
    lines.append("-" * len(lines[0]))
    for name, prec, rec in body:
        lines.append(f"{name:<{name_w}}  {prec:>13}  {rec:>12}")
    return lines


def write_report(report: EvalReport, tsv_path, text_path) -> None:
    with open(tsv_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(report_tsv_lines(report)) + "\n")
    with open(text_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(report_text_lines(report)) + "\n")
