"""Command-line entry point: ingest, extract, eval, kwic, presets.

All data outputs are deterministic (no timestamps, fixed orderings); on
failure, partially written outputs are removed and the exit status is
nonzero.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

from . import evaluation, kwic, pipeline, stats
from .artifact import load_corpus, save_corpus
from .cooccur import WindowSpec
from .ingest import IngestOptions, ingest_paths, load_stoplist, load_verb_lexicon
from .pipeline import (MethodConfig, apply_overrides, builtin_presets,
                       load_exclusion_list, parse_config)

PRESET_DIR_ENV = "KOLLOKATOR_PRESET_DIR"


class CliError(Exception):
    pass


def available_presets() -> dict[str, MethodConfig]:
    presets = builtin_presets()
    preset_dir = os.environ.get(PRESET_DIR_ENV)
    if preset_dir:
        for path in sorted(Path(preset_dir).glob("*.cfg")):
            config = parse_config(path.read_text(encoding="utf-8"),
                                  name=path.stem)
            presets[config.name] = config
    return presets


def _resolve_config(args) -> MethodConfig:
    """Preset defaults < config file < command-line flags."""
    presets = available_presets()
    if args.preset:
        try:
            config = presets[args.preset]
        except KeyError:
            raise CliError(
                f"unknown preset {args.preset!r}; available: "
                + ", ".join(sorted(presets))) from None
    else:
        config = MethodConfig("custom", WindowSpec(5))
    if args.config:
        config = parse_config(Path(args.config).read_text(encoding="utf-8"),
                              base=config)
    overrides: dict[str, str] = {}
    for key, flag in (("window", "window"), ("min_offset", "min_offset"),
                      ("min_freq", "min_freq"), ("t_threshold", "t_threshold"),
                      ("mi_threshold", "mi_threshold"), ("forms", "forms"),
                      ("per_form_min", "per_form_min")):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[key] = str(value)
    if getattr(args, "lemma_merge", False):
        overrides["lemma_merge"] = "true"
    if getattr(args, "cross_sentence", False):
        overrides["cross_sentence"] = "true"
    config = apply_overrides(config, overrides)
    if getattr(args, "exclude", None):
        exclusions = load_exclusion_list(args.exclude)
        existing = config.exclusion_list or frozenset()
        config = replace(config, exclusion_list=existing | exclusions)
    return config


def _add_method_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--preset", help="built-in or user preset name")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--window", type=int, help="max left offset")
    p.add_argument("--min-offset", dest="min_offset", type=int)
    p.add_argument("--min-freq", dest="min_freq", type=int)
    p.add_argument("--t-threshold", dest="t_threshold")
    p.add_argument("--mi-threshold", dest="mi_threshold")
    p.add_argument("--forms", help="comma-separated form classes")
    p.add_argument("--lemma-merge", dest="lemma_merge", action="store_true")
    p.add_argument("--per-form-min", dest="per_form_min", type=int)
    p.add_argument("--exclude", help="TSV exclusion list (noun, verb_key)")
    p.add_argument("--stoplist", help="noun stoplist, one form per line")
    p.add_argument("--cross-sentence", dest="cross_sentence",
                   action="store_true")


def cmd_ingest(args, written: list[Path]) -> None:
    for p in args.paths:
        if not Path(p).exists():
            raise CliError(f"input path does not exist: {p}")
    options = IngestOptions(
        lowercase_sentence_initial=not args.no_lowercase_initial)
    corpus = ingest_paths(args.paths, options)
    out = Path(args.output)
    written.append(out)
    save_corpus(corpus, out)
    print(f"N={corpus.n_word_tokens} sentences={corpus.n_sentences} "
          f"documents={len(corpus.source_ids)}")


def cmd_extract(args, written: list[Path]) -> None:
    config = _resolve_config(args)
    corpus = load_corpus(args.corpus)
    lexicon = load_verb_lexicon(args.lexicon)
    stoplist = load_stoplist(args.stoplist) if args.stoplist else None
    verbs = lexicon.lemmas if args.verbs == "all" else [
        v.strip() for v in args.verbs.split(",") if v.strip()]
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    for verb in verbs:
        result = pipeline.run_method(corpus, lexicon, verb, config,
                                     stoplist=stoplist)
        path = outdir / f"{verb}.tsv"
        written.append(path)
        stats.write_scored_tsv(result.candidates, path)
        print(f"{verb}: {len(result)} candidates -> {path}")


def cmd_eval(args, written: list[Path]) -> None:
    presets = available_presets()
    names = [n.strip() for n in args.configs.split(",") if n.strip()]
    configs = []
    for name in names:
        if name not in presets:
            raise CliError(f"unknown preset {name!r}; available: "
                           + ", ".join(sorted(presets)))
        configs.append(presets[name])
    if args.baseline not in names:
        raise CliError(
            f"baseline {args.baseline!r} is not among the evaluated configs")
    corpus = load_corpus(args.corpus)
    lexicon = load_verb_lexicon(args.lexicon)
    stoplist = load_stoplist(args.stoplist) if args.stoplist else None
    verbs = lexicon.lemmas if args.verbs == "all" else [
        v.strip() for v in args.verbs.split(",") if v.strip()]
    gold = evaluation.load_gold_lists(args.gold)
    report = evaluation.evaluate_methods(
        corpus, lexicon, verbs, configs, gold, args.baseline,
        stoplist=stoplist, include_empty=not args.skip_empty)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    tsv_path = outdir / "report.tsv"
    text_path = outdir / "report.txt"
    written.extend([tsv_path, text_path])
    evaluation.write_report(report, tsv_path, text_path)
    print("\n".join(evaluation.report_text_lines(report)))


def cmd_kwic(args, written: list[Path]) -> None:
    if args.width < 1:
        raise CliError("--width must be >= 1")
    corpus = load_corpus(args.corpus)
    if args.pair:
        window = WindowSpec(max_offset=args.window,
                            cross_sentence=args.cross_sentence)
        lines = kwic.concordance(corpus, tuple(args.pair),
                                 context_width=args.width, window=window)
    elif args.form:
        lines = kwic.concordance(corpus, args.form, context_width=args.width)
    else:
        raise CliError("provide --form or --pair")
    rendered = kwic.tsv_lines(lines) if args.tsv else kwic.format_lines(lines)
    print("\n".join(rendered))


def cmd_presets(args, written: list[Path]) -> None:
    for name, config in available_presets().items():
        parts = [f"window={config.window.to_string()}",
                 f"min_freq={config.min_freq}",
                 f"forms={','.join(sorted(config.form_classes))}"]
        if config.lemma_merge:
            parts.append(f"lemma_merge per_form_min={config.per_form_min}")
        if config.t_threshold is not None:
            parts.append(f"t>{config.t_threshold}")
        if config.mi_threshold is not None:
            parts.append(f"mi>={config.mi_threshold}")
        if config.exclusion_list is not None:
            parts.append("exclusion_list")
        print(f"{name}: {'; '.join(parts)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kollokator",
        description="Verb-noun collocation extraction from untagged corpora")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="tokenize text files into a corpus artifact")
    p.add_argument("paths", nargs="+", help="UTF-8 plain-text files")
    p.add_argument("-o", "--output", required=True, help="corpus artifact path")
    p.add_argument("--no-lowercase-initial", action="store_true",
                   help="keep sentence-initial capitalization")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("extract", help="extract scored candidate lists")
    p.add_argument("--corpus", required=True, help="corpus artifact")
    p.add_argument("--lexicon", required=True, help="verb lexicon TSV")
    p.add_argument("--verbs", default="all",
                   help="comma-separated lemmas, or 'all'")
    p.add_argument("-o", "--output", required=True, help="output directory")
    _add_method_flags(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("eval", help="compare method variants against a gold list")
    p.add_argument("--corpus", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--verbs", default="all")
    p.add_argument("--gold", required=True, help="gold list TSV")
    p.add_argument("--configs", required=True,
                   help="comma-separated preset names")
    p.add_argument("--baseline", required=True, help="baseline preset name")
    p.add_argument("--stoplist")
    p.add_argument("--skip-empty", action="store_true",
                   help="skip verbs with no candidates instead of counting 0")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("kwic", help="concordance listing")
    p.add_argument("--corpus", required=True)
    p.add_argument("--form", help="single normalized form to look up")
    p.add_argument("--pair", nargs=2, metavar=("NOUN", "VERB_FORM"))
    p.add_argument("--window", type=int, default=5,
                   help="max left offset for pair queries")
    p.add_argument("--cross-sentence", dest="cross_sentence",
                   action="store_true")
    p.add_argument("--width", type=int, default=8, help="context tokens per side")
    p.add_argument("--tsv", action="store_true", help="structured TSV output")
    p.set_defaults(func=cmd_kwic)

    p = sub.add_parser("presets", help="list available method presets")
    p.set_defaults(func=cmd_presets)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    written: list[Path] = []
    try:
        args.func(args, written)
        return 0
    except (CliError, ValueError, OSError) as exc:
        for path in written:
            try:
                path.unlink()
            except OSError:
                pass
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
