"""Metrics and experiment procedures: accuracy@k, DLD statistics, k-fold
cross-validation, cutoff sweeps and inference timing."""

from __future__ import annotations

import csv
import random
import statistics
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from ngramnorm.distance import DldVariant, dld
from ngramnorm.errors import ConfigurationError
from ngramnorm.pipeline import Model, TrainConfig, baseline_nearest_vocab, explain, train
from ngramnorm.preprocessing import TrainingPair

DEFAULT_KS = (1, 3, 5)
DEFAULT_SWEEP_CUTOFFS = (1, 5, 10, 30, 100, 300)
_EPS = 1e-12


def accuracy_at_k(predictions: Sequence[Sequence[str]], targets: Sequence[str], k: int) -> float:
    """Fraction of rows whose target is among the first ``k`` predictions."""
    if len(predictions) != len(targets):
        raise ConfigurationError(f"{len(predictions)} prediction rows for {len(targets)} targets")
    if k < 1:
        raise ConfigurationError(f"k must be >= 1, got {k}")
    if not targets:
        return 0.0
    hits = sum(target in preds[:k] for preds, target in zip(predictions, targets))
    return hits / len(targets)


def dld_stats(
    predictions: Sequence[Sequence[str]],
    targets: Sequence[str],
    variant: DldVariant | str = DldVariant.OSA,
    top: int = 5,
) -> tuple[float, float, float]:
    """Mean over examples of the best, average and worst distance to the target.

    Only the first ``top`` predictions of each row are scored; shorter rows
    contribute whatever they have.
    """
    if len(predictions) != len(targets):
        raise ConfigurationError(f"{len(predictions)} prediction rows for {len(targets)} targets")
    mins, means, maxes = [], [], []
    for preds, target in zip(predictions, targets):
        if not preds:
            raise ConfigurationError(f"empty prediction list for target {target!r}")
        dists = [dld(p, target, variant) for p in preds[:top]]
        mins.append(min(dists))
        means.append(sum(dists) / len(dists))
        maxes.append(max(dists))
    return statistics.fmean(mins), statistics.fmean(means), statistics.fmean(maxes)


@dataclass(frozen=True)
class EvalReport:
    accuracy_at: dict[int, float]
    dld_min: float
    dld_mean: float
    dld_max: float
    mean_inference_seconds: float
    n_examples: int
    config: dict = field(default_factory=dict)

    def __post_init__(self):
        self.check_invariants()

    def check_invariants(self) -> None:
        accs = [self.accuracy_at[k] for k in sorted(self.accuracy_at)]
        if any(a > b + _EPS for a, b in zip(accs, accs[1:])):
            raise AssertionError(f"accuracy@k is not monotone in k: {self.accuracy_at}")
        if not (self.dld_min <= self.dld_mean + _EPS and self.dld_mean <= self.dld_max + _EPS):
            raise AssertionError(f"DLD stats out of order: {self.dld_min}, {self.dld_mean}, {self.dld_max}")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["accuracy_at"] = {str(k): v for k, v in self.accuracy_at.items()}
        return d

    def metrics(self) -> dict[str, float]:
        out = {f"acc@{k}": v for k, v in sorted(self.accuracy_at.items())}
        out.update(dld_min=self.dld_min, dld_mean=self.dld_mean, dld_max=self.dld_max)
        out["seconds_per_word"] = self.mean_inference_seconds
        return out


@dataclass(frozen=True)
class Evaluation:
    """A report plus the per-word predictions that produced it."""

    report: EvalReport
    inputs: list[str]
    targets: list[str]
    predictions: list[list[str]]

    def predictions_tsv(self) -> str:
        return "".join("\t".join([word, *preds]) + "\n" for word, preds in zip(self.inputs, self.predictions))


def _score(
    predict: Callable[[str], list[str]],
    test_pairs: Sequence[TrainingPair],
    config: dict,
    variant: DldVariant | str,
    ks: Sequence[int],
    warmup: bool,
) -> Evaluation:
    if not test_pairs:
        raise ConfigurationError("no test pairs")
    inputs = [p.wrong for p in test_pairs]
    targets = [p.correct for p in test_pairs]
    if warmup:
        for word in inputs:
            predict(word)
    start = time.perf_counter()
    predictions = [predict(word) for word in inputs]
    elapsed = time.perf_counter() - start
    lo, mid, hi = dld_stats(predictions, targets, variant, top=max(ks))
    report = EvalReport(
        accuracy_at={k: accuracy_at_k(predictions, targets, k) for k in ks},
        dld_min=lo,
        dld_mean=mid,
        dld_max=hi,
        mean_inference_seconds=elapsed / len(inputs),
        n_examples=len(inputs),
        config=config,
    )
    return Evaluation(report, inputs, targets, predictions)


def model_config(model: Model) -> dict:
    return {
        "k_max": model.dictionary.k_max,
        "recording_mode": model.dictionary.recording_mode.value,
        "variant": model.generation.variant.value,
        "cutoff": model.generation.cutoff,
        "ranker": model.ranker.value,
        "dld_variant": model.dld_variant.value,
    }


def run_evaluation(
    model: Model, test_pairs: Sequence[TrainingPair], ks: Sequence[int] = DEFAULT_KS, warmup: bool = True
) -> Evaluation:
    """Normalize every test word and score the top ``max(ks)`` suggestions.

    The timed pass is preceded by an untimed warm-up pass unless ``warmup``
    is false.
    """
    top = max(ks)

    def predict(word):
        return [text for text, _ in explain(model, word).top(top)]

    return _score(predict, test_pairs, model_config(model), model.dld_variant, ks, warmup)


def evaluate(model: Model, test_pairs: Sequence[TrainingPair], ks: Sequence[int] = DEFAULT_KS) -> EvalReport:
    return run_evaluation(model, test_pairs, ks).report


def evaluate_baseline(
    vocabulary: Iterable[str],
    test_pairs: Sequence[TrainingPair],
    variant: DldVariant | str = DldVariant.OSA,
    ks: Sequence[int] = DEFAULT_KS,
    warmup: bool = False,
) -> Evaluation:
    """Score the nearest-vocabulary-word baseline."""
    vocabulary = sorted(set(vocabulary))
    top = max(ks)

    def predict(word):
        return [text for text, _ in baseline_nearest_vocab(word, vocabulary, top, variant)]

    config = {"baseline": "nearest_vocab", "dld_variant": DldVariant(variant).value}
    return _score(predict, test_pairs, config, variant, ks, warmup)


# -- cross-validation --------------------------------------------------------


def fold_sizes(n: int, folds: int) -> list[int]:
    base, extra = divmod(n, folds)
    return [base + (i < extra) for i in range(folds)]


def kfold_indices(n: int, folds: int, seed: int) -> list[list[int]]:
    """Seeded shuffle of ``range(n)`` cut into contiguous folds."""
    if folds < 2:
        raise ConfigurationError(f"need at least 2 folds, got {folds}")
    if n < folds:
        raise ConfigurationError(f"{n} examples cannot fill {folds} folds")
    order = list(range(n))
    random.Random(seed).shuffle(order)
    out, start = [], 0
    for size in fold_sizes(n, folds):
        out.append(order[start:start + size])
        start += size
    return out


@dataclass(frozen=True)
class CvReport:
    folds: list[EvalReport]
    test_indices: list[list[int]]
    seed: int
    config: dict

    def summary(self) -> dict[str, tuple[float, float]]:
        """Per-metric ``(mean, population std)`` across folds."""
        names = self.folds[0].metrics().keys()
        return {
            name: (statistics.fmean(r.metrics()[name] for r in self.folds), statistics.pstdev(r.metrics()[name] for r in self.folds))
            for name in names
        }

    def table_row(self, digits: int = 2) -> dict[str, str]:
        return {name: f"{m:.{digits}f} ± {s:.{digits}f}" for name, (m, s) in self.summary().items()}

    def to_dict(self, include_timing: bool = True) -> dict:
        folds = [r.to_dict() for r in self.folds]
        summary = {k: {"mean": m, "std": s} for k, (m, s) in self.summary().items()}
        if not include_timing:
            for f in folds:
                f.pop("mean_inference_seconds")
            summary.pop("seconds_per_word")
        return {
            "seed": self.seed,
            "n_folds": len(self.folds),
            "config": self.config,
            "test_indices": self.test_indices,
            "folds": folds,
            "summary": summary,
        }


def cross_validate(
    pairs: Sequence[TrainingPair],
    folds: int = 5,
    seed: int = 0,
    config: TrainConfig = TrainConfig(),
    vocabulary: Iterable[str] | None = None,
    ks: Sequence[int] = DEFAULT_KS,
    warmup: bool = True,
) -> CvReport:
    """Train on ``folds - 1`` folds and evaluate on the held-out one, for each fold."""
    pairs = list(pairs)
    vocabulary = None if vocabulary is None else list(vocabulary)
    indices = kfold_indices(len(pairs), folds, seed)
    reports = []
    for held_out in indices:
        held = set(held_out)
        train_pairs = [p for i, p in enumerate(pairs) if i not in held]
        test_pairs = [pairs[i] for i in held_out]
        model = train(train_pairs, vocabulary, config).model
        reports.append(run_evaluation(model, test_pairs, ks, warmup).report)
    return CvReport(reports, indices, seed, config.to_dict())


# -- cutoff sweep ------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    cutoff: int
    accuracy_at_1: float
    mean_inference_seconds: float
    mean_candidates: float
    # Every example's candidate set contains its set at the previous (smaller) cutoff.
    monotone: bool


def sweep_cutoff(
    train_pairs: Sequence[TrainingPair],
    cutoffs: Sequence[int] = DEFAULT_SWEEP_CUTOFFS,
    config: TrainConfig = TrainConfig(),
    test_pairs: Sequence[TrainingPair] | None = None,
    vocabulary: Iterable[str] | None = None,
) -> list[SweepRow]:
    """Train once and evaluate at each cutoff, smallest first.

    Without ``test_pairs`` the training pairs are scored.
    """
    if not cutoffs or any(c < 1 for c in cutoffs):
        raise ConfigurationError(f"cutoffs must be non-empty and >= 1, got {cutoffs}")
    base = train(train_pairs, vocabulary, config).model
    test_pairs = list(train_pairs if test_pairs is None else test_pairs)
    rows, previous = [], None
    for cutoff in sorted(set(cutoffs)):
        model = base.with_generation(cutoff=cutoff)
        sets = [{c.text for c in explain(model, p.wrong).candidates} for p in test_pairs]
        report = run_evaluation(model, test_pairs, ks=(1,)).report
        monotone = previous is None or all(a <= b for a, b in zip(previous, sets))
        rows.append(
            SweepRow(
                cutoff=cutoff,
                accuracy_at_1=report.accuracy_at[1],
                mean_inference_seconds=report.mean_inference_seconds,
                mean_candidates=statistics.fmean(len(s) for s in sets),
                monotone=monotone,
            )
        )
        previous = sets
    return rows


def write_sweep_csv(rows: Sequence[SweepRow], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(SweepRow.__dataclass_fields__))
        writer.writeheader()
        for row in rows:
            writer.writerow(asdict(row))
