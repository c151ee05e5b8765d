"""Acceptance criteria. Each test carries a ``criterion`` marker; the
terminal summary prints one PASS/FAIL/SKIP line per criterion."""

import itertools
import os
import random
import time
from pathlib import Path

import pytest

from ngramnorm import (
    EvalReport,
    GenerationConfig,
    Rule,
    TrainConfig,
    TrainingPair,
    build_dictionary,
    cross_validate,
    evaluate,
    evaluate_baseline,
    generate,
    normalize,
    read_pairs,
    read_vocabulary,
    rule_probability,
    run_evaluation,
    train,
)
from ngramnorm.distance import dld, dld_oracle
from ngramnorm.preprocessing import train_test_split
from ngramnorm.synthetic import synthetic_pairs, vocabulary

criterion = pytest.mark.criterion


def _random_corpus(rnd, alphabet="abt2", max_pairs=4, max_len=5):
    def word():
        return "".join(rnd.choice(alphabet) for _ in range(rnd.randint(1, max_len)))

    return [TrainingPair(word(), word()) for _ in range(rnd.randint(1, max_pairs))]


@criterion(1, "worked-example chain d2->dito, dhil->dahil in < 0.1 s")
def test_worked_example_chain():
    start = time.perf_counter()
    model = train(
        [TrainingPair("d2", "dito"), TrainingPair("dhil", "dahil")],
        ["dito", "dahil"],
        TrainConfig(k_max=2, recording_mode="short_key", variant="v1", ranker="dld"),
    ).model
    d2 = normalize(model, "d2")
    dhil = normalize(model, "dhil")
    elapsed = time.perf_counter() - start
    assert d2[0][0] == "dito"
    assert dhil[0][0] == "dahil"
    assert elapsed < 0.1, elapsed


@criterion(2, "2loy -> tuloy among top-5")
@pytest.mark.parametrize(
    "pairs",
    [
        [TrainingPair("2loy", "tuloy")],
        # disjoint corpus supplying 2->tu, lo->lo and y->y
        [TrainingPair("2long", "tulong"), TrainingPair("bhay", "bahay")],
    ],
    ids=["self-trained", "disjoint"],
)
def test_appendix_example_2loy(pairs):
    model = train(pairs, ["tuloy", "tulong", "bahay"], TrainConfig(recording_mode="short_key")).model
    assert "tuloy" in [text for text, _ in normalize(model, "2loy", 5)]


@criterion(3, "dld == oracle on all strings <= 5 over 3 letters; ca/abc 3 vs 2; < 30 s")
def test_dld_oracle_equivalence():
    start = time.perf_counter()
    strings = ["".join(p) for n in range(6) for p in itertools.product("abt", repeat=n)]
    assert len(strings) == 364
    for variant in ("osa", "unrestricted"):
        mismatches = [(a, b) for a in strings for b in strings if dld(a, b, variant) != dld_oracle(a, b, variant)]
        assert not mismatches, mismatches[:5]
    assert dld("ca", "abc", "osa") == 3
    assert dld("ca", "abc", "unrestricted") == 2
    elapsed = time.perf_counter() - start
    assert elapsed < 30, elapsed


@criterion(4, "rule probabilities per key sum to 1 within 1e-9 over 1000 corpora")
def test_probability_normalization():
    rnd = random.Random(1234)
    worst = 0.0
    for i in range(1000):
        corpus = _random_corpus(rnd, max_pairs=6, max_len=7)
        k_max = rnd.randint(1, 4)
        d = build_dictionary(corpus, k_max, rnd.choice(["short_key", "literal"]))
        for key in d:
            total = sum(rule_probability(d, Rule(key, right)) for right in d.replacements(key))
            worst = max(worst, abs(total - 1.0))
    assert worst <= 1e-9, worst


@criterion(5, "every EvalReport has acc@1 <= acc@3 <= acc@5 and dld min <= mean <= max")
def test_report_invariants():
    pairs = synthetic_pairs(200, seed=11)
    train_pairs, test_pairs = pairs[:150], pairs[150:]
    reports = []
    for variant, ranker, cutoff in itertools.product(["v1", "v2"], ["dld", "likelihood"], [1, 5, None]):
        model = train(train_pairs, vocabulary(), TrainConfig(variant=variant, ranker=ranker, cutoff=cutoff)).model
        reports.append(evaluate(model, test_pairs))
    reports.append(evaluate_baseline(vocabulary(), test_pairs).report)
    for r in reports:
        assert r.accuracy_at[1] <= r.accuracy_at[3] <= r.accuracy_at[5]
        assert r.dld_min <= r.dld_mean <= r.dld_max
    # construction itself rejects violations
    with pytest.raises(AssertionError):
        EvalReport({1: 0.9, 3: 0.5, 5: 0.9}, 0.0, 1.0, 2.0, 0.0, 1)


@criterion(6, "v2 candidates subset of v1 (unbounded, 200 corpora); cutoff 5 subset of cutoff 50")
def test_variant_containment_and_cutoff_monotonicity():
    rnd = random.Random(99)
    checked = 0
    for _ in range(200):
        corpus = _random_corpus(rnd)
        k_max = rnd.randint(1, 3)
        d = build_dictionary(corpus, k_max)
        words = {p.wrong for p in corpus} | {"".join(rnd.choice("abt2") for _ in range(rnd.randint(1, 6)))}
        for word in sorted(words):
            v1 = {c.text for c in generate(word, d, GenerationConfig("v1", None, k_max))}
            v2 = {c.text for c in generate(word, d, GenerationConfig("v2", None, k_max))}
            assert v2 <= v1, (corpus, word)
            for variant in ("v1", "v2"):
                small = {c.text for c in generate(word, d, GenerationConfig(variant, 5, k_max))}
                large = {c.text for c in generate(word, d, GenerationConfig(variant, 50, k_max))}
                assert small <= large, (corpus, word, variant)
            checked += 1
    assert checked >= 200


@pytest.fixture(scope="module")
def split_398():
    return train_test_split(synthetic_pairs(398, seed=1), 100, seed=0)


@criterion(7, "300-pair model trains in < 1 s; v2 inference faster than v1")
def test_training_speed_and_variant_runtime(split_398):
    train_pairs, test_pairs = split_398
    corpus = synthetic_pairs(300, seed=2)
    start = time.perf_counter()
    train(corpus, vocabulary(), TrainConfig())
    assert time.perf_counter() - start < 1.0

    v1 = train(train_pairs, vocabulary(), TrainConfig(variant="v1")).model
    v2 = train(train_pairs, vocabulary(), TrainConfig(variant="v2")).model
    t1 = run_evaluation(v1, test_pairs).report.mean_inference_seconds
    t2 = run_evaluation(v2, test_pairs).report.mean_inference_seconds
    assert t2 < t1, (t1, t2)


def _paper_data_dir():
    root = os.environ.get("NGRAMNORM_PAPER_DATA")
    if not root:
        return None
    root = Path(root)
    if all((root / name).exists() for name in ("train.tsv", "test.tsv", "vocab.txt")):
        return root
    return None


@criterion(8, "authors' 298/100 split: V1 acc@1 > baseline acc@1, acc@5 - acc@1 >= 0.03")
@pytest.mark.skipif(_paper_data_dir() is None, reason="set NGRAMNORM_PAPER_DATA to a dir with train.tsv, test.tsv, vocab.txt")
def test_paper_scale_reproduction():
    root = _paper_data_dir()
    train_pairs, _ = read_pairs(root / "train.tsv")
    test_pairs, _ = read_pairs(root / "test.tsv")
    vocab = read_vocabulary(root / "vocab.txt")
    model = train(train_pairs, vocab, TrainConfig(variant="v1", ranker="dld")).model
    ours = evaluate(model, test_pairs)
    baseline = evaluate_baseline(vocab, test_pairs).report
    print(f"V1 acc@1/3/5 {ours.accuracy_at}, baseline acc@1 {baseline.accuracy_at[1]}")
    assert ours.accuracy_at[1] > baseline.accuracy_at[1]
    assert ours.accuracy_at[5] - ours.accuracy_at[1] >= 0.03


@criterion(9, "5-fold CV over 398 rows: sizes 80/80/80/79/79, deterministic, mean ± std")
def test_cross_validation_harness():
    pairs = synthetic_pairs(398, seed=3)
    a = cross_validate(pairs, folds=5, seed=7, vocabulary=vocabulary())
    b = cross_validate(pairs, folds=5, seed=7, vocabulary=vocabulary())
    assert sorted((len(f) for f in a.test_indices), reverse=True) == [80, 80, 80, 79, 79]
    assert [len(f) for f in a.test_indices] == [r.n_examples for r in a.folds]
    assert sorted(i for f in a.test_indices for i in f) == list(range(398))
    assert a.to_dict(include_timing=False) == b.to_dict(include_timing=False)
    row = a.table_row()
    for metric in ("acc@1", "acc@3", "acc@5", "dld_min", "dld_mean", "dld_max"):
        mean, std = a.summary()[metric]
        assert row[metric] == f"{mean:.2f} ± {std:.2f}"
