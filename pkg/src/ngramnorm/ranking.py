"""Candidate ranking by edit distance to the input or by rule likelihood."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from ngramnorm.distance import DldVariant, dld
from ngramnorm.errors import ConfigurationError, StaleTraceError, UnknownKeyError
from ngramnorm.generation import Candidate, TraceStep
from ngramnorm.rules import RuleDictionary, rule_probability


class Ranker(str, enum.Enum):
    DLD = "dld"
    LIKELIHOOD = "likelihood"


@dataclass(frozen=True)
class RankedSuggestions:
    """Ordered ``(text, score)`` pairs.

    Scores are distances (ascending) for the ``dld`` ranker and likelihoods
    (descending) for the ``likelihood`` ranker.
    """

    input: str
    ordered: tuple[tuple[str, float], ...]
    ranker: Ranker

    @property
    def texts(self) -> list[str]:
        return [text for text, _ in self.ordered]

    def top_k(self, k: int) -> list[str]:
        return top_k(self, k)


def likelihood(trace: Iterable[TraceStep], dictionary: RuleDictionary) -> float:
    """Product of the probabilities of the applied rules in ``trace``.

    Pass-through steps contribute a factor of 1.

    Raises:
        StaleTraceError: an applied rule is not (or no longer) in the dictionary.
    """
    result = 1.0
    for step in trace:
        if step.passthrough:
            continue
        try:
            p = rule_probability(dictionary, step.rule)
        except UnknownKeyError:
            p = 0.0
        if p == 0.0:
            raise StaleTraceError(f"rule {step.rule} is not in the dictionary")
        result *= p
    return result


def _dedupe(candidates: Iterable[Candidate]) -> list[Candidate]:
    best: dict[str, Candidate] = {}
    for cand in candidates:
        old = best.get(cand.text)
        if old is None or cand.likelihood > old.likelihood:
            best[cand.text] = cand
    return list(best.values())


def rank_by_dld(
    candidates: Sequence[Candidate], input_word: str, variant: DldVariant | str = DldVariant.OSA
) -> RankedSuggestions:
    """Closest to ``input_word`` first; ties by likelihood, then text."""
    if not candidates:
        raise ConfigurationError("nothing to rank")
    scored = [(dld(c.text, input_word, variant), -c.likelihood, c.text) for c in _dedupe(candidates)]
    scored.sort()
    return RankedSuggestions(input_word, tuple((text, d) for d, _, text in scored), Ranker.DLD)


def rank_by_likelihood(
    candidates: Sequence[Candidate], input_word: str, variant: DldVariant | str = DldVariant.OSA
) -> RankedSuggestions:
    """Most likely first; ties by distance to ``input_word``, then text."""
    if not candidates:
        raise ConfigurationError("nothing to rank")
    scored = [(-c.likelihood, dld(c.text, input_word, variant), c.text) for c in _dedupe(candidates)]
    scored.sort()
    return RankedSuggestions(input_word, tuple((text, -neg) for neg, _, text in scored), Ranker.LIKELIHOOD)


def rank(
    candidates: Sequence[Candidate],
    input_word: str,
    ranker: Ranker | str = Ranker.DLD,
    variant: DldVariant | str = DldVariant.OSA,
) -> RankedSuggestions:
    if Ranker(ranker) is Ranker.DLD:
        return rank_by_dld(candidates, input_word, variant)
    return rank_by_likelihood(candidates, input_word, variant)


def top_k(ranked: RankedSuggestions, k: int) -> list[str]:
    if k < 1:
        raise ConfigurationError(f"k must be >= 1, got {k}")
    return [text for text, _ in ranked.ordered[:k]]


def is_sorted(ranked: RankedSuggestions) -> bool:
    scores = [score for _, score in ranked.ordered]
    if ranked.ranker is Ranker.DLD:
        return all(a <= b for a, b in zip(scores, scores[1:]))
    return all(a >= b or math.isclose(a, b) for a, b in zip(scores, scores[1:]))
