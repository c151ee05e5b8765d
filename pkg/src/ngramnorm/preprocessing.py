"""Token preprocessing and corpus ingestion.

Pairs files are UTF-8 TSV (``wrong<TAB>correct``, no header). Vocabulary files
hold one word per line. Both are preprocessed on load.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from ngramnorm.errors import ConfigurationError, EmptyTokenError

logger = logging.getLogger(__name__)

# ASCII hyphen-minus plus the Unicode hyphen and non-breaking hyphen.
HYPHENS = ("-", "‐", "‑")


def preprocess(raw: str) -> str:
    """Lowercase, drop hyphens and standardize whitespace.

    Internal whitespace runs collapse to one space; callers that need single
    tokens split on it.

    >>> preprocess(" D-2 ")
    'd2'

    Raises:
        EmptyTokenError: nothing is left after stripping.
    """
    text = raw.lower()
    for hyphen in HYPHENS:
        text = text.replace(hyphen, "")
    text = " ".join(text.split())
    if not text:
        raise EmptyTokenError(f"empty token after preprocessing: {raw!r}")
    return text


@dataclass(frozen=True)
class TrainingPair:
    """One labeled example: an abbreviated word and its normalized form."""

    wrong: str
    correct: str

    def __post_init__(self):
        for name in ("wrong", "correct"):
            value = getattr(self, name)
            if not value:
                raise EmptyTokenError(f"{name} side is empty")
            if any(ch.isspace() for ch in value) or any(h in value for h in HYPHENS):
                raise ConfigurationError(f"{name} side {value!r} is not a single normalized token")
            if value != value.lower():
                raise ConfigurationError(f"{name} side {value!r} is not lowercase")

    @classmethod
    def from_raw(cls, wrong: str, correct: str) -> "TrainingPair":
        return cls(preprocess(wrong), preprocess(correct))


class Skipped(NamedTuple):
    line_number: int
    line: str
    reason: str


class PairsLoad(NamedTuple):
    pairs: list[TrainingPair]
    skipped: list[Skipped]


def parse_pairs(lines: Iterable[str]) -> PairsLoad:
    """Parse TSV lines into pairs, collecting 1-based diagnostics for bad lines.

    Blank lines are ignored silently. Lines with a wrong number of fields, an
    empty side, or a side that still contains a space after preprocessing are
    skipped and reported.
    """
    pairs: list[TrainingPair] = []
    skipped: list[Skipped] = []
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            skipped.append(Skipped(lineno, line, f"expected 2 tab-separated fields, got {len(fields)}"))
            continue
        try:
            pair = TrainingPair.from_raw(*fields)
        except (EmptyTokenError, ConfigurationError) as exc:
            skipped.append(Skipped(lineno, line, str(exc)))
            continue
        pairs.append(pair)
    for item in skipped:
        logger.warning("line %d skipped: %s", item.line_number, item.reason)
    return PairsLoad(pairs, skipped)


def read_pairs(path: str | Path) -> PairsLoad:
    with open(path, encoding="utf-8") as fh:
        return parse_pairs(fh)


def parse_vocabulary(lines: Iterable[str]) -> frozenset[str]:
    """Preprocess one word per line; blank lines and duplicates are ignored."""
    words = set()
    for line in lines:
        try:
            words.add(preprocess(line))
        except EmptyTokenError:
            continue
    return frozenset(words)


def read_vocabulary(path: str | Path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return parse_vocabulary(fh)


def write_pairs(pairs: Iterable[TrainingPair], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for pair in pairs:
            fh.write(f"{pair.wrong}\t{pair.correct}\n")


def train_test_split(
    pairs: Sequence[TrainingPair], n_test: int, seed: int = 0
) -> tuple[list[TrainingPair], list[TrainingPair]]:
    """Seeded shuffle, then hold out the last ``n_test`` pairs (e.g. 298/100)."""
    if not 0 < n_test < len(pairs):
        raise ConfigurationError(f"n_test must be in (0, {len(pairs)}), got {n_test}")
    shuffled = list(pairs)
    random.Random(seed).shuffle(shuffled)
    return shuffled[:-n_test], shuffled[-n_test:]
