"""Candidate generation by recursive rule application.

A word is rewritten left to right. At each position every window
``word[i:i+k]`` (``k`` in ``1..k_max``, clamped at the end) that is a
dictionary key branches into each of its replacements and advances past the
window. A position where no window is a key copies its character unchanged.

Partial rewrites are grouped by how much of the input they have consumed.
Before a group is extended it is pruned to the ``cutoff`` most likely
distinct partial texts. Because every extension of a given position
multiplies all partials there by the same factors, this returns exactly the
``cutoff`` most likely complete candidates, and larger cutoffs only ever add
candidates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from ngramnorm.errors import ConfigurationError
from ngramnorm.rules import Rule, RuleDictionary, rule_probability

# Relative slack when pruning, so float noise never drops a tied partial.
_PRUNE_SLACK = 1e-9


class Variant(str, enum.Enum):
    """Where single-character rules may rewrite.

    ``V1`` allows them anywhere. ``V2`` allows them to rewrite only the
    word's final character; earlier single characters may still be kept via
    a recorded identity rule but never changed.
    """

    V1 = "v1"
    V2 = "v2"


class TraceStep(NamedTuple):
    """One applied rule, or a pass-through of a character with no matching key."""

    wrong: str
    right: str
    passthrough: bool = False

    @property
    def rule(self) -> Rule:
        return Rule(self.wrong, self.right)


@dataclass(frozen=True)
class Candidate:
    text: str
    trace: tuple[TraceStep, ...]
    likelihood: float


@dataclass(frozen=True)
class GenerationConfig:
    variant: Variant = Variant.V1
    # None means unbounded.
    cutoff: int | None = 100
    k_max: int = 2

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.cutoff is not None and (not isinstance(self.cutoff, int) or self.cutoff < 1):
            raise ConfigurationError(f"cutoff must be a positive int or None, got {self.cutoff!r}")


def _steps_at(word: str, i: int, dictionary: RuleDictionary, config: GenerationConfig):
    """Return ``(advance, step, probability)`` options for position ``i``."""
    final = i == len(word) - 1
    steps = []
    matched = False
    windows = dict.fromkeys(word[i:i + k] for k in range(1, config.k_max + 1))
    for window in windows:
        if window not in dictionary:
            continue
        matched = True
        for right in dictionary.replacements(window):
            if config.variant is Variant.V2 and len(window) == 1 and not final and right != window:
                continue
            rule = Rule(window, right)
            steps.append((len(window), TraceStep(window, right), rule_probability(dictionary, rule)))
    if not matched:
        steps.append((1, TraceStep(word[i], word[i], passthrough=True), 1.0))
    return steps


def _prune(partials: dict, cutoff: int | None) -> Iterable:
    if cutoff is None or len(partials) <= cutoff:
        return partials.values()
    ordered = sorted(partials.values(), key=lambda c: (-c.likelihood, c.text))
    threshold = ordered[cutoff - 1].likelihood * (1 - _PRUNE_SLACK)
    return [c for c in ordered if c.likelihood >= threshold]


def _better(new: Candidate, old: Candidate | None) -> bool:
    if old is None:
        return True
    if new.likelihood != old.likelihood:
        return new.likelihood > old.likelihood
    return new.trace < old.trace


def generate(word: str, dictionary: RuleDictionary, config: GenerationConfig = GenerationConfig()) -> list[Candidate]:
    """All (or the ``cutoff`` most likely) rewrites of ``word``.

    Results are deduplicated by text, keeping the most likely trace, and
    ordered by likelihood descending then text. Under ``V2`` the list can be
    empty when a mid-word character only has rewriting rules.
    """
    if not word:
        raise ConfigurationError("cannot generate candidates for an empty word")
    if config.k_max != dictionary.k_max:
        raise ConfigurationError(f"config k_max={config.k_max} does not match dictionary k_max={dictionary.k_max}")
    n = len(word)
    # frontier[i] maps partial text -> best partial candidate that consumed word[:i]
    frontier: list[dict[str, Candidate]] = [{} for _ in range(n + 1)]
    frontier[0][""] = Candidate("", (), 1.0)
    for i in range(n):
        if not frontier[i]:
            continue
        steps = _steps_at(word, i, dictionary, config)
        for partial in _prune(frontier[i], config.cutoff):
            for advance, step, prob in steps:
                text = partial.text + step.right
                new = Candidate(text, partial.trace + (step,), partial.likelihood * prob)
                group = frontier[i + advance]
                if _better(new, group.get(text)):
                    group[text] = new
        frontier[i] = {}
    done = sorted(frontier[n].values(), key=lambda c: (-c.likelihood, c.text))
    return done if config.cutoff is None else done[: config.cutoff]


def passthrough_candidate(word: str) -> Candidate:
    """The word itself, kept character by character."""
    return Candidate(word, tuple(TraceStep(ch, ch, passthrough=True) for ch in word), 1.0)


class FilterResult(NamedTuple):
    candidates: list[Candidate]
    fallback: bool


def filter_by_vocabulary(candidates: Sequence[Candidate], vocabulary: frozenset[str] | set[str]) -> FilterResult:
    """Keep in-vocabulary candidates; keep everything if none are known."""
    if not candidates:
        raise ConfigurationError("filter_by_vocabulary needs at least one candidate")
    known = [c for c in candidates if c.text in vocabulary]
    if known:
        return FilterResult(known, False)
    return FilterResult(list(candidates), True)
