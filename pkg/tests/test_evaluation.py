import pytest

from kollokator import (GoldList, MethodConfig, WindowSpec, absolute_recall,
                        evaluate_methods, precision, recall_relative,
                        tokenize)
from kollokator.evaluation import (EvaluationError, load_gold_lists,
                                   report_text_lines, report_tsv_lines)
from kollokator.pipeline import CandidateList
from kollokator.stats import ScoredBigram


def _candidates(verb, nouns, config_name="BI5 Inf"):
    cands = [
        ScoredBigram(noun=n, verb_key=verb, f_xy=3, f_x=10, f_y=100,
                     N=10_000, mi=3.0, t=1.5, rank=i)
        for i, n in enumerate(nouns, 1)
    ]
    return CandidateList(config_name=config_name, verb=verb, candidates=cands)


def _gold(verb, true_nouns, false_nouns):
    entries = {n: True for n in true_nouns}
    entries.update({n: False for n in false_nouns})
    return GoldList(verb=verb, entries=entries, provenance="test")


def test_precision_published_case():
    # 31 correct out of 46 found
    true_nouns = [f"T{i}" for i in range(31)]
    false_nouns = [f"F{i}" for i in range(15)]
    cands = _candidates("bringen", true_nouns + false_nouns)
    gold = _gold("bringen", true_nouns, false_nouns)
    assert precision(cands, gold) == pytest.approx(67.4, abs=0.05)


def test_precision_edge_cases():
    gold = _gold("kommen", ["A"], ["B"])
    assert precision(_candidates("kommen", ["A"]), gold) == 100.0
    assert precision(_candidates("kommen", ["B"] * 0 + ["B"]), gold) == 0.0
    with pytest.warns(UserWarning):
        assert precision(_candidates("kommen", []), gold) == 0.0


def test_precision_requires_total_annotation():
    gold = _gold("kommen", ["A"], [])
    with pytest.raises(EvaluationError, match="Unknown|unknown|X"):
        precision(_candidates("kommen", ["A", "X"]), gold)


def test_absolute_recall_published_case():
    true_nouns = [f"T{i}" for i in range(31)]
    cands = _candidates("bringen", true_nouns)
    gold = _gold("bringen", true_nouns, [])
    assert absolute_recall(cands, gold, 71) == pytest.approx(43.7, abs=0.05)
    assert absolute_recall(cands, gold, 31) == 100.0
    with pytest.raises(EvaluationError):
        absolute_recall(cands, gold, 0)


def test_relative_recall_above_100():
    true39 = [f"T{i}" for i in range(39)]
    gold = _gold("kommen", true39, [])
    variant = _candidates("kommen", true39)
    baseline = _candidates("kommen", true39[:34])
    assert recall_relative(variant, gold, baseline) == pytest.approx(
        114.7, abs=0.05)
    assert recall_relative(baseline, gold, baseline) == 100.0
    empty = _candidates("kommen", [])
    assert recall_relative(empty, gold, baseline) == 0.0


def test_relative_recall_undefined_baseline():
    gold = _gold("kommen", ["A"], ["B"])
    baseline = _candidates("kommen", ["B"])
    with pytest.raises(EvaluationError, match="undefined"):
        recall_relative(_candidates("kommen", ["A"]), gold, baseline)


def _repeat(phrase, n):
    return (phrase + " . ") * n


# three-verb fixture with hand-computed report values (see
# test_three_verb_fixture_matches_hand_computation)
FIXTURE_TEXT = (
    _repeat("es wird zur Geltung kommen", 3)
    + _repeat("viel Unsinn kommen", 3)
    + _repeat("man muss Abschied nehmen", 3)
    + _repeat("wir wollen Platz nehmen aber Unsinn kommen", 3)
    + _repeat("sie werden Anstalten treffen und Wurzel treten", 0)
    + _repeat("sie soll in Kraft treten", 3)
    + _repeat("fort und fort", 30)
)

GOLD_ROWS = [
    ("kommen", "Geltung", "1"), ("kommen", "Unsinn", "0"),
    ("kommen", "Platz", "0"),  # within the 5-window of "kommen" as well
    ("nehmen", "Abschied", "1"), ("nehmen", "Platz", "1"),
    ("treten", "Kraft", "1"),
]


@pytest.fixture(scope="module")
def gold(tmp_path_factory):
    path = tmp_path_factory.mktemp("gold") / "gold.tsv"
    path.write_text(
        "\n".join("\t".join(row) for row in GOLD_ROWS) + "\n",
        encoding="utf-8")
    return load_gold_lists(path)


def test_load_gold_lists(gold):
    assert set(gold) == {"kommen", "nehmen", "treten"}
    assert gold["kommen"].entries == {"Geltung": True, "Unsinn": False,
                                      "Platz": False}


def test_three_verb_fixture_matches_hand_computation(gold, lexicon):
    corpus = tokenize(FIXTURE_TEXT)
    baseline = MethodConfig("BI5 Inf", WindowSpec(5), min_freq=3)
    narrow = MethodConfig("BI2 Inf", WindowSpec(2), min_freq=3)
    report = evaluate_methods(corpus, lexicon, ["kommen", "nehmen", "treten"],
                              [baseline, narrow], gold, "BI5 Inf")
    rows = {r.config_name: r for r in report.rows}

    # hand computation, BI5 Inf: kommen finds Geltung(+, 3 events),
    # Unsinn(-, 6) and Platz(-, 3 at offset 4) -> precision 33.33;
    # nehmen finds Abschied(+) and Platz(+) -> 100; treten finds
    # Kraft(+) -> 100. Mean = 77.78, recall 100 by definition.
    assert rows["BI5 Inf"].precision_pct == pytest.approx(700 / 9, abs=1e-9)
    assert rows["BI5 Inf"].recall_pct == pytest.approx(100.0)
    assert rows["BI5 Inf"].n_found == 6
    assert rows["BI5 Inf"].n_correct == 4

    # BI2 Inf drops Platz from the kommen list (offset 4 > 2): kommen
    # precision rises to 50, the correct sets are unchanged so relative
    # recall stays 100 for every verb.
    assert rows["BI2 Inf"].precision_pct == pytest.approx(250 / 3, abs=1e-9)
    assert rows["BI2 Inf"].recall_pct == pytest.approx(100.0)
    assert rows["BI2 Inf"].n_found == 5
    assert rows["BI2 Inf"].n_correct == 4


def test_zero_candidate_verbs_flagged(gold, lexicon):
    corpus = tokenize(FIXTURE_TEXT)
    baseline = MethodConfig("BI5 Inf", WindowSpec(5), min_freq=3)
    strict = MethodConfig("strict", WindowSpec(2), min_freq=50)
    report = evaluate_methods(corpus, lexicon, ["kommen", "nehmen"],
                              [baseline, strict], gold, "BI5 Inf")
    row = {r.config_name: r for r in report.rows}["strict"]
    assert set(row.flagged_verbs) == {"kommen", "nehmen"}
    assert row.precision_pct == 0.0

    skipped = evaluate_methods(corpus, lexicon, ["kommen", "nehmen"],
                               [baseline, strict], gold, "BI5 Inf",
                               include_empty=False)
    row = {r.config_name: r for r in skipped.rows}["strict"]
    assert row.precision_pct == 0.0 and row.n_found == 0


def test_mean_precision_arithmetic():
    # two verbs at 100% and 33% average to 66.5%
    assert (100.0 + 33.0) / 2 == pytest.approx(66.5)


def test_permutation_invariance(gold, lexicon):
    corpus = tokenize(FIXTURE_TEXT)
    baseline = MethodConfig("BI5 Inf", WindowSpec(5), min_freq=3)
    narrow = MethodConfig("BI2 Inf", WindowSpec(2), min_freq=3)
    r1 = evaluate_methods(corpus, lexicon, ["kommen", "nehmen", "treten"],
                          [baseline, narrow], gold, "BI5 Inf")
    r2 = evaluate_methods(corpus, lexicon, ["treten", "kommen", "nehmen"],
                          [narrow, baseline], gold, "BI5 Inf")
    by_name_1 = {r.config_name: (r.precision_pct, r.recall_pct) for r in r1.rows}
    by_name_2 = {r.config_name: (r.precision_pct, r.recall_pct) for r in r2.rows}
    assert by_name_1 == by_name_2


def test_baseline_must_be_configured(gold, lexicon):
    corpus = tokenize(FIXTURE_TEXT)
    narrow = MethodConfig("BI2 Inf", WindowSpec(2), min_freq=3)
    with pytest.raises(EvaluationError, match="baseline"):
        evaluate_methods(corpus, lexicon, ["kommen"], [narrow], gold,
                         "BI5 Inf")


def test_report_rendering(gold, lexicon):
    corpus = tokenize(FIXTURE_TEXT)
    baseline = MethodConfig("BI5 Inf", WindowSpec(5), min_freq=3)
    report = evaluate_methods(corpus, lexicon, ["kommen"], [baseline], gold,
                              "BI5 Inf")
    text = report_text_lines(report)
    assert text[0].startswith("Bigrams & Filter")
    assert "Ø Precision %" in text[0] and "Ø Recall %" in text[0]
    assert "(def.)" in text[2]
    tsv = report_tsv_lines(report)
    assert tsv[0].startswith("config\t")
    assert tsv[1].startswith("BI5 Inf\t33.33\t100.00")


def test_gold_file_errors(tmp_path):
    bad_label = tmp_path / "bad.tsv"
    bad_label.write_text("kommen\tGeltung\tyes\n", encoding="utf-8")
    with pytest.raises(EvaluationError, match="label"):
        load_gold_lists(bad_label)
    dup = tmp_path / "dup.tsv"
    dup.write_text("kommen\tGeltung\t1\nkommen\tGeltung\t0\n",
                   encoding="utf-8")
    with pytest.raises(EvaluationError, match="duplicate"):
        load_gold_lists(dup)
