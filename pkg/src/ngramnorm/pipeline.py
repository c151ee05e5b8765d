"""Train, apply, persist and load normalization models."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, NamedTuple

from ngramnorm.distance import DldVariant, dld
from ngramnorm.errors import ConfigurationError, ModelFormatError
from ngramnorm.generation import (
    Candidate,
    GenerationConfig,
    Variant,
    filter_by_vocabulary,
    generate,
    passthrough_candidate,
)
from ngramnorm.preprocessing import (
    Skipped,
    TrainingPair,
    parse_vocabulary,
    preprocess,
    read_pairs,
    read_vocabulary,
)
from ngramnorm.ranking import RankedSuggestions, Ranker, rank
from ngramnorm.rules import RecordingMode, Rule, RuleDictionary, build_dictionary

logger = logging.getLogger(__name__)

FORMAT_NAME = "ngramnorm-model"
SCHEMA_VERSION = 1

DEFAULT_CUTOFFS = {Ranker.DLD: 100, Ranker.LIKELIHOOD: 30}


def default_cutoff(ranker: Ranker | str) -> int:
    return DEFAULT_CUTOFFS[Ranker(ranker)]


@dataclass(frozen=True)
class TrainConfig:
    k_max: int = 2
    recording_mode: RecordingMode = RecordingMode.SHORT_KEY
    variant: Variant = Variant.V1
    ranker: Ranker = Ranker.DLD
    # None picks the ranker's default; use ``unbounded=True`` for no cutoff.
    cutoff: int | None = None
    unbounded: bool = False
    dld_variant: DldVariant = DldVariant.OSA

    def __post_init__(self):
        object.__setattr__(self, "recording_mode", RecordingMode(self.recording_mode))
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "ranker", Ranker(self.ranker))
        object.__setattr__(self, "dld_variant", DldVariant(self.dld_variant))

    @property
    def effective_cutoff(self) -> int | None:
        if self.unbounded:
            return None
        return self.cutoff if self.cutoff is not None else default_cutoff(self.ranker)

    def generation(self) -> GenerationConfig:
        return GenerationConfig(self.variant, self.effective_cutoff, self.k_max)

    def to_dict(self) -> dict:
        return {
            "k_max": self.k_max,
            "recording_mode": self.recording_mode.value,
            "variant": self.variant.value,
            "ranker": self.ranker.value,
            "cutoff": self.effective_cutoff,
            "dld_variant": self.dld_variant.value,
        }


@dataclass(frozen=True)
class Model:
    dictionary: RuleDictionary
    vocabulary: frozenset[str]
    generation: GenerationConfig
    ranker: Ranker = Ranker.DLD
    dld_variant: DldVariant = DldVariant.OSA
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.generation.k_max != self.dictionary.k_max:
            raise ConfigurationError(
                f"generation k_max={self.generation.k_max} != dictionary k_max={self.dictionary.k_max}"
            )
        object.__setattr__(self, "vocabulary", frozenset(self.vocabulary))
        object.__setattr__(self, "ranker", Ranker(self.ranker))
        object.__setattr__(self, "dld_variant", DldVariant(self.dld_variant))

    def with_generation(self, **changes) -> "Model":
        """Copy with some generation settings changed (e.g. ``cutoff``, ``variant``)."""
        return replace(self, generation=replace(self.generation, **changes))

    def with_rule(self, rule: Rule, count: int = 1) -> "Model":
        return replace(self, dictionary=self.dictionary.add_rule(rule, count))

    def normalize(self, word: str, k: int = 5) -> list[tuple[str, float]]:
        return normalize(self, word, k)


class TrainResult(NamedTuple):
    model: Model
    skipped: list[Skipped]


def train(
    pairs: Iterable[TrainingPair] | str | Path,
    vocabulary: Iterable[str] | str | Path | None = None,
    config: TrainConfig = TrainConfig(),
) -> TrainResult:
    """Build a model from training pairs and a vocabulary.

    ``pairs`` and ``vocabulary`` may be paths to a TSV pairs file and a word
    list, or in-memory collections. Skipped TSV lines are returned alongside
    the model.
    """
    skipped: list[Skipped] = []
    if isinstance(pairs, (str, Path)):
        pairs, skipped = read_pairs(pairs)
    pairs = list(pairs)
    if not pairs:
        raise ConfigurationError("no valid training pairs")
    if vocabulary is None:
        vocab = frozenset()
    elif isinstance(vocabulary, (str, Path)):
        vocab = read_vocabulary(vocabulary)
    else:
        vocab = parse_vocabulary(vocabulary)
    dictionary = build_dictionary(pairs, config.k_max, config.recording_mode)
    model = Model(
        dictionary=dictionary,
        vocabulary=vocab,
        generation=config.generation(),
        ranker=config.ranker,
        dld_variant=config.dld_variant,
        metadata={
            "created": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "n_training_pairs": len(pairs),
        },
    )
    return TrainResult(model, skipped)


@dataclass(frozen=True)
class Normalization:
    """Full result of normalizing one word."""

    word: str
    candidates: list[Candidate]
    ranked: RankedSuggestions
    fallback: bool

    def top(self, k: int) -> list[tuple[str, float]]:
        return list(self.ranked.ordered[:k])


def explain(model: Model, word: str) -> Normalization:
    """Preprocess, generate, filter by vocabulary and rank one word."""
    word = preprocess(word)
    candidates = generate(word, model.dictionary, model.generation)
    if not candidates:
        candidates = [passthrough_candidate(word)]
    filtered, fallback = filter_by_vocabulary(candidates, model.vocabulary)
    ranked = rank(filtered, word, model.ranker, model.dld_variant)
    return Normalization(word, candidates, ranked, fallback)


def normalize(model: Model, word: str, k: int = 5) -> list[tuple[str, float]]:
    """Top ``k`` ``(text, score)`` suggestions for ``word``; never empty."""
    if k < 1:
        raise ConfigurationError(f"k must be >= 1, got {k}")
    return explain(model, word).top(k)


def baseline_nearest_vocab(
    word: str, vocabulary: Iterable[str], k: int = 5, variant: DldVariant | str = DldVariant.OSA
) -> list[tuple[str, int]]:
    """Rank the whole vocabulary by edit distance to ``word``."""
    vocabulary = list(vocabulary)
    if not vocabulary:
        raise ConfigurationError("baseline needs a non-empty vocabulary")
    word = preprocess(word)
    scored = sorted((dld(word, v, variant), v) for v in set(vocabulary))
    return [(v, d) for d, v in scored[:k]]


# -- persistence -------------------------------------------------------------


def model_to_dict(model: Model) -> dict:
    d = model.dictionary
    return {
        "format": FORMAT_NAME,
        "schema_version": SCHEMA_VERSION,
        "dictionary": {
            "k_max": d.k_max,
            "recording_mode": d.recording_mode.value,
            "entries": [[key, [[right, n] for right, n in values.items()]] for key, values in d.entries.items()],
        },
        "vocabulary": sorted(model.vocabulary),
        "generation": {
            "variant": model.generation.variant.value,
            "cutoff": model.generation.cutoff,
            "k_max": model.generation.k_max,
        },
        "ranker": model.ranker.value,
        "dld_variant": model.dld_variant.value,
        "metadata": dict(model.metadata),
    }


def model_from_dict(data: dict) -> Model:
    if not isinstance(data, dict) or data.get("format") != FORMAT_NAME:
        raise ModelFormatError("not an ngramnorm model file")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ModelFormatError(f"unsupported schema_version {version!r} (expected {SCHEMA_VERSION})")
    try:
        dd = data["dictionary"]
        entries = {key: {right: n for right, n in values} for key, values in dd["entries"]}
        dictionary = RuleDictionary(dd["k_max"], dd["recording_mode"], entries)
        g = data["generation"]
        return Model(
            dictionary=dictionary,
            vocabulary=frozenset(data["vocabulary"]),
            generation=GenerationConfig(g["variant"], g["cutoff"], g["k_max"]),
            ranker=data["ranker"],
            dld_variant=data["dld_variant"],
            metadata=dict(data["metadata"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"invalid model file: {exc}") from exc


def dumps_model(model: Model) -> str:
    return json.dumps(model_to_dict(model), ensure_ascii=False, indent=1, sort_keys=True) + "\n"


def loads_model(text: str) -> Model:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"model file is not valid JSON: {exc}") from exc
    return model_from_dict(data)


def atomic_write_text(path: str | Path, text: str) -> None:
    """Write ``text`` to a temp file next to ``path`` and rename it into place."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_model(model: Model, path: str | Path) -> None:
    atomic_write_text(path, dumps_model(model))


def load_model(path: str | Path) -> Model:
    with open(path, encoding="utf-8") as fh:
        return loads_model(fh.read())
