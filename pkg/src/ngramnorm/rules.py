"""Rewrite-rule extraction from labeled word pairs.

A two-pointer walk over the wrong and correct spellings records one
``wrong_sub -> right_sub`` rule per step. Rules from all window lengths
``1..k_max`` are pooled into a :class:`RuleDictionary`, which keeps integer
counts; rule probabilities are derived from those counts on demand.
"""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from ngramnorm.errors import (
    ConfigurationError,
    IncompatibleDictionariesError,
    RuleValidationError,
    UnknownKeyError,
)
from ngramnorm.preprocessing import TrainingPair

MAX_WINDOW = 4


class RecordingMode(str, enum.Enum):
    """Which wrong-side key is recorded when the windows disagree.

    ``LITERAL`` records the whole wrong window ``w[i:i+k]``. ``SHORT_KEY``
    records only ``w[i]``, the single character the wrong pointer consumes.
    """

    LITERAL = "literal"
    SHORT_KEY = "short_key"


class Rule(NamedTuple):
    wrong: str
    right: str

    @property
    def is_identity(self) -> bool:
        return self.wrong == self.right

    def __str__(self):
        return f"{self.wrong}->{self.right}"


def extract_rules(pair: TrainingPair, k: int, mode: RecordingMode = RecordingMode.SHORT_KEY) -> list[Rule]:
    """Walk both words with window ``k`` and return the rules in recording order.

    On a window match both pointers advance by ``k``; otherwise the wrong
    pointer advances by one and the right pointer by ``k``. Windows are
    clamped at the string ends, and a rule is recorded on every step.

    >>> extract_rules(TrainingPair("d2", "dito"), 2)
    [Rule(wrong='d', right='di'), Rule(wrong='2', right='to')]
    """
    if k < 1:
        raise ConfigurationError(f"window length must be >= 1, got {k}")
    mode = RecordingMode(mode)
    w, r = pair.wrong, pair.correct
    ptr_w = ptr_r = 0
    rules = []
    while ptr_w < len(w) and ptr_r < len(r):
        sub_w = w[ptr_w:ptr_w + k]
        sub_r = r[ptr_r:ptr_r + k]
        if sub_w == sub_r:
            rules.append(Rule(sub_w, sub_r))
            ptr_w += k
        else:
            key = sub_w if mode is RecordingMode.LITERAL else w[ptr_w]
            rules.append(Rule(key, sub_r))
            ptr_w += 1
        ptr_r += k
    return rules


@dataclass(frozen=True)
class RuleDictionary:
    """Multimap ``wrong_sub -> {right_sub: count}`` with canonical ordering.

    Treat instances as values: :meth:`add_rule` and :meth:`merge` return new
    dictionaries and never touch the receiver.
    """

    k_max: int
    recording_mode: RecordingMode = RecordingMode.SHORT_KEY
    entries: Mapping[str, Mapping[str, int]] = field(default_factory=dict)

    def __post_init__(self):
        if not 1 <= self.k_max <= MAX_WINDOW:
            raise ConfigurationError(f"k_max must be in [1, {MAX_WINDOW}], got {self.k_max}")
        object.__setattr__(self, "recording_mode", RecordingMode(self.recording_mode))
        canonical = {}
        for key in sorted(self.entries):
            values = self.entries[key]
            for right, count in values.items():
                self._validate(Rule(key, right))
                if not isinstance(count, int) or count < 1:
                    raise RuleValidationError(f"count for {key}->{right} must be a positive int, got {count!r}")
            if values:
                canonical[key] = {right: values[right] for right in sorted(values)}
        object.__setattr__(self, "entries", canonical)

    @classmethod
    def from_rules(cls, rules: Iterable[Rule], k_max: int, mode: RecordingMode = RecordingMode.SHORT_KEY):
        counts: dict[str, Counter] = defaultdict(Counter)
        for rule in rules:
            counts[rule.wrong][rule.right] += 1
        return cls(k_max, mode, {key: dict(c) for key, c in counts.items()})

    def _validate(self, rule: Rule) -> None:
        if not rule.wrong or not rule.right:
            raise RuleValidationError(f"rule sides must be non-empty: {rule!r}")
        if len(rule.wrong) > self.k_max or len(rule.right) > self.k_max:
            raise RuleValidationError(f"rule {rule} has a side longer than k_max={self.k_max}")

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def replacements(self, key: str) -> Mapping[str, int]:
        try:
            return self.entries[key]
        except KeyError:
            raise UnknownKeyError(key) from None

    def count(self, rule: Rule) -> int:
        return self.entries.get(rule.wrong, {}).get(rule.right, 0)

    def key_total(self, key: str) -> int:
        return sum(self.replacements(key).values())

    def rules(self) -> list[tuple[Rule, int]]:
        """All ``(rule, count)`` pairs in canonical order."""
        return [(Rule(key, right), n) for key, values in self.entries.items() for right, n in values.items()]

    def probability(self, rule: Rule) -> float:
        return rule_probability(self, rule)

    def add_rule(self, rule: Rule, count: int = 1) -> "RuleDictionary":
        return add_rule(self, rule, count)

    def merge(self, other: "RuleDictionary") -> "RuleDictionary":
        return merge_dictionaries(self, other)


def build_dictionary(
    pairs: Iterable[TrainingPair], k_max: int = 2, mode: RecordingMode = RecordingMode.SHORT_KEY
) -> RuleDictionary:
    """Pool the rules of every pair for every window length in ``1..k_max``."""
    pairs = list(pairs)
    if not pairs:
        raise ConfigurationError("cannot build a rule dictionary from zero pairs")
    if not 1 <= k_max <= MAX_WINDOW:
        raise ConfigurationError(f"k_max must be in [1, {MAX_WINDOW}], got {k_max}")
    rules = (rule for pair in pairs for k in range(1, k_max + 1) for rule in extract_rules(pair, k, mode))
    return RuleDictionary.from_rules(rules, k_max, mode)


def rule_probability(dictionary: RuleDictionary, rule: Rule) -> float:
    """Count of ``rule`` over the total count of rules sharing its key.

    Raises:
        UnknownKeyError: ``rule.wrong`` is not a key. An absent right side
            under a present key is probability 0, not an error.
    """
    values = dictionary.replacements(rule.wrong)
    return values.get(rule.right, 0) / sum(values.values())


def add_rule(dictionary: RuleDictionary, rule: Rule, count: int = 1) -> RuleDictionary:
    """Return a copy of ``dictionary`` with ``count`` more observations of ``rule``."""
    rule = Rule(*rule)
    dictionary._validate(rule)
    if not isinstance(count, int) or count < 1:
        raise RuleValidationError(f"count must be a positive int, got {count!r}")
    entries = {key: dict(values) for key, values in dictionary.entries.items()}
    values = entries.setdefault(rule.wrong, {})
    values[rule.right] = values.get(rule.right, 0) + count
    return RuleDictionary(dictionary.k_max, dictionary.recording_mode, entries)


def merge_dictionaries(a: RuleDictionary, b: RuleDictionary) -> RuleDictionary:
    """Key-wise union with summed counts."""
    if a.k_max != b.k_max or a.recording_mode is not b.recording_mode:
        raise IncompatibleDictionariesError(
            f"cannot merge (k_max={a.k_max}, {a.recording_mode.value}) "
            f"with (k_max={b.k_max}, {b.recording_mode.value})"
        )
    counts: dict[str, Counter] = defaultdict(Counter)
    for source in (a, b):
        for key, values in source.entries.items():
            counts[key].update(values)
    return RuleDictionary(a.k_max, a.recording_mode, {key: dict(c) for key, c in counts.items()})
