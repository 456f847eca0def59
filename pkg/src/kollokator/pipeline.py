"""Named extraction variants and end-to-end candidate extraction."""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import stats
from .cooccur import CooccurrenceTable, WindowSpec, count_bigrams, merge_forms
from .ingest import RARE_FORM_CLASSES, Corpus, VerbLexicon
from .stats import ScoredBigram


class PipelineError(ValueError):
    pass


INFINITIVE_ONLY = frozenset({"infinitive"})
INF_PART = frozenset({"infinitive", "past_participle"})
ALL_BUT_RARE = frozenset(
    {"infinitive", "past_participle", "fin_3sg_pres", "fin_3sg_past",
     "fin_pl_past", "other"})

T_SIGNIFICANCE = 1.65  # ~95% confidence; kept strictly (t > 1.65 survives)
MI_THRESHOLD = 6.0     # inclusive (mi >= 6 survives)


@dataclass(frozen=True)
class MethodConfig:
    name: str
    window: WindowSpec
    form_classes: frozenset[str] = INFINITIVE_ONLY
    lemma_merge: bool = False
    per_form_min: int = 2  # only consulted when lemma_merge
    min_freq: int = 3
    t_threshold: float | None = None
    mi_threshold: float | None = None
    exclusion_list: frozenset[tuple[str, str]] | None = None

    def __post_init__(self):
        if self.min_freq < 1:
            raise PipelineError("min_freq must be >= 1")
        unknown = self.form_classes - ALL_BUT_RARE - RARE_FORM_CLASSES
        if unknown:
            raise PipelineError(f"unknown form classes: {sorted(unknown)}")


@dataclass(frozen=True)
class CandidateList:
    config_name: str
    verb: str
    candidates: list[ScoredBigram]

    @property
    def nouns(self) -> list[str]:
        return [c.noun for c in self.candidates]

    def __len__(self) -> int:
        return len(self.candidates)


def builtin_presets() -> dict[str, MethodConfig]:
    """The named method variants compared in the study.

    Corpus choice (MK1 alone vs. MK1+BZK) is a run-time input, so the
    "Mk+Bz" presets differ from their small-corpus counterparts only in
    name. "BI2 Inf, no subj" expects a user-supplied exclusion file of
    subject pairs; its built-in exclusion list is empty.
    """
    bi5 = WindowSpec(max_offset=5)
    bi2 = WindowSpec(max_offset=2)
    presets = [
        MethodConfig("BI5 Inf", bi5),
        MethodConfig("BI5/t Inf", bi5, t_threshold=T_SIGNIFICANCE),
        MethodConfig("BI5/t Inf, MI", bi5, t_threshold=T_SIGNIFICANCE,
                     mi_threshold=MI_THRESHOLD),
        MethodConfig("BI2 Inf", bi2),
        MethodConfig("BI2/t Inf", bi2, t_threshold=T_SIGNIFICANCE),
        MethodConfig("BI2/t Inf, MI", bi2, t_threshold=T_SIGNIFICANCE,
                     mi_threshold=MI_THRESHOLD),
        MethodConfig("BI2 Lemma", bi2, form_classes=ALL_BUT_RARE,
                     lemma_merge=True, per_form_min=2),
        MethodConfig("BI2 Inf+Part", bi2, form_classes=INF_PART),
        MethodConfig("BI2 Inf Mk+Bz", bi2),
        MethodConfig("BI2 Inf Mk+Bz, MI", bi2, mi_threshold=MI_THRESHOLD),
        MethodConfig("BI2 Inf Mk+Bz, f≥5", bi2, min_freq=5),
        MethodConfig("BI2 Inf Mk+Bz, MI, f≥5", bi2, min_freq=5,
                     mi_threshold=MI_THRESHOLD),
        MethodConfig("BI2 Inf, no subj", bi2, exclusion_list=frozenset()),
    ]
    return {p.name: p for p in presets}


def run_method(corpus: Corpus, lexicon: VerbLexicon, verb: str,
               config: MethodConfig, stoplist=None) -> CandidateList:
    """Extract, score, and filter V-N candidates for one verb lemma."""
    if len(corpus) == 0:
        raise PipelineError("empty corpus")
    forms = lexicon.forms_of(verb, config.form_classes)
    if not forms:
        raise PipelineError(
            f"verb {verb!r} has no forms in classes {sorted(config.form_classes)}")

    per_form = {
        form: count_bigrams(corpus, {form}, config.window, stoplist=stoplist)
        for form in forms
    }
    if config.lemma_merge:
        table = merge_forms(per_form, lexicon, config.per_form_min)
    else:
        table = _sum_to_lemma(per_form, verb)

    scored = stats.score_table(table, config.min_freq)
    out = []
    for cand in scored:
        if config.t_threshold is not None and not cand.t > config.t_threshold:
            continue
        if config.mi_threshold is not None and cand.mi < config.mi_threshold:
            continue
        if config.exclusion_list and (cand.noun, cand.verb_key) in config.exclusion_list:
            continue
        out.append(cand)
    out = [replace(c, rank=i) for i, c in enumerate(out, 1)]
    return CandidateList(config_name=config.name, verb=verb, candidates=out)


def _sum_to_lemma(per_form, lemma):
    """Relabel per-form tables to the lemma and sum, with no per-form minimum.

    Used for explicit form-class selections (Inf, Inf+Part): whichever forms
    the config selected are aggregated as-is, unlike merge_forms which also
    drops rare-class forms.
    """
    pair_counts: dict[tuple[str, str], int] = {}
    noun_counts: dict[str, int] = {}
    verb_total = 0
    window = None
    n_value = 0
    for form, table in sorted(per_form.items()):
        window = table.window
        n_value = max(n_value, table.N)
        verb_total += table.verb_counts.get(form, 0)
        for (noun, _), c in table.pair_counts.items():
            key = (noun, lemma)
            pair_counts[key] = pair_counts.get(key, 0) + c
        for noun, c in table.noun_counts.items():
            noun_counts[noun] = max(noun_counts.get(noun, 0), c)
    return CooccurrenceTable(N=n_value, pair_counts=pair_counts,
                             noun_counts=noun_counts,
                             verb_counts={lemma: verb_total}, window=window)


def run_verbs(corpus: Corpus, lexicon: VerbLexicon, verbs, config: MethodConfig,
              stoplist=None) -> dict[str, CandidateList]:
    """Convenience wrapper: one run per verb lemma."""
    return {v: run_method(corpus, lexicon, v, config, stoplist=stoplist)
            for v in verbs}


def load_exclusion_list(path) -> frozenset[tuple[str, str]]:
    """TSV of noun, verb_key pairs to drop from candidate lists."""
    pairs = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise PipelineError(
                    f"{path} line {lineno}: expected noun<TAB>verb_key")
            pairs.add((parts[0], parts[1]))
    return frozenset(pairs)


_TRUE = {"true", "yes", "1", "on"}
_FALSE = {"false", "no", "0", "off"}


def _parse_bool(value: str, key: str) -> bool:
    v = value.strip().lower()
    if v in _TRUE:
        return True
    if v in _FALSE:
        return False
    raise PipelineError(f"bad boolean for {key}: {value!r}")


def parse_config(text: str, name: str = "custom",
                 base: MethodConfig | None = None) -> MethodConfig:
    """key=value config format mirroring MethodConfig fields.

    Recognized keys: name, window (max offset), min_offset, cross_sentence,
    forms (comma-separated classes), lemma_merge, per_form_min, min_freq,
    t_threshold, mi_threshold.
    """
    values: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise PipelineError(f"line {lineno}: expected key=value")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return apply_overrides(base or MethodConfig(name, WindowSpec(5)), values)


def apply_overrides(config: MethodConfig, values: dict[str, str]) -> MethodConfig:
    """Apply string-typed settings (config file or CLI flags) onto a config."""
    kwargs = {}
    window = config.window
    for key, value in values.items():
        if key == "name":
            kwargs["name"] = value
        elif key == "window":
            window = WindowSpec(max_offset=int(value),
                                min_offset=min(window.min_offset, int(value)),
                                cross_sentence=window.cross_sentence)
        elif key == "min_offset":
            window = WindowSpec(max_offset=window.max_offset,
                                min_offset=int(value),
                                cross_sentence=window.cross_sentence)
        elif key == "cross_sentence":
            window = WindowSpec(max_offset=window.max_offset,
                                min_offset=window.min_offset,
                                cross_sentence=_parse_bool(value, key))
        elif key == "forms":
            kwargs["form_classes"] = frozenset(
                f.strip() for f in value.split(",") if f.strip())
        elif key == "lemma_merge":
            kwargs["lemma_merge"] = _parse_bool(value, key)
        elif key == "per_form_min":
            kwargs["per_form_min"] = int(value)
        elif key == "min_freq":
            kwargs["min_freq"] = int(value)
        elif key == "t_threshold":
            kwargs["t_threshold"] = None if value.lower() == "none" else float(value)
        elif key == "mi_threshold":
            kwargs["mi_threshold"] = None if value.lower() == "none" else float(value)
        else:
            raise PipelineError(f"unknown config key {key!r}")
    return replace(config, window=window, **kwargs)
