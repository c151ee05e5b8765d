"""Damerau-Levenshtein distance.

Two variants are provided:

* ``osa`` (optimal string alignment, the default): adjacent transpositions
  are allowed but no substring is edited more than once. Computed with three
  rolling rows, so memory is linear in the shorter string.
* ``unrestricted``: the true edit metric over insertions, deletions,
  substitutions and adjacent transpositions (Lowrance-Wagner).

Strings are compared as sequences of Unicode code points.
"""

from __future__ import annotations

import enum
from collections import deque
from functools import lru_cache


class DldVariant(str, enum.Enum):
    OSA = "osa"
    UNRESTRICTED = "unrestricted"


def dld(a: str, b: str, variant: DldVariant | str = DldVariant.OSA) -> int:
    """Edit distance between ``a`` and ``b`` counting adjacent transpositions.

    >>> dld("teh", "the")
    1
    >>> dld("ca", "abc"), dld("ca", "abc", "unrestricted")
    (3, 2)
    """
    if DldVariant(variant) is DldVariant.OSA:
        return _osa(a, b)
    return _unrestricted(a, b)


def _osa(a: str, b: str) -> int:
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    width = len(b) + 1
    before = [0] * width
    prev = list(range(width))
    for i in range(1, len(a) + 1):
        cur = [i] + [0] * len(b)
        ca = a[i - 1]
        for j in range(1, width):
            cb = b[j - 1]
            cost = 0 if ca == cb else 1
            best = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
            if i > 1 and j > 1 and ca == b[j - 2] and a[i - 2] == cb:
                best = min(best, before[j - 2] + 1)
            cur[j] = best
        before, prev = prev, cur
    return prev[-1]


def _unrestricted(a: str, b: str) -> int:
    if a == b:
        return 0
    if not a or not b:
        return len(a) + len(b)
    inf = len(a) + len(b)
    # d is offset by one row/column holding the sentinel `inf`.
    d = [[inf] * (len(b) + 2) for _ in range(len(a) + 2)]
    for i in range(len(a) + 1):
        d[i + 1][0] = inf
        d[i + 1][1] = i
    for j in range(len(b) + 1):
        d[0][j + 1] = inf
        d[1][j + 1] = j
    last_row: dict[str, int] = {}
    for i in range(1, len(a) + 1):
        last_col = 0
        for j in range(1, len(b) + 1):
            k = last_row.get(b[j - 1], 0)
            l = last_col
            if a[i - 1] == b[j - 1]:
                cost = 0
                last_col = j
            else:
                cost = 1
            d[i + 1][j + 1] = min(
                d[i][j] + cost,
                d[i + 1][j] + 1,
                d[i][j + 1] + 1,
                d[k][l] + (i - k - 1) + 1 + (j - l - 1),
            )
        last_row[a[i - 1]] = i
    return d[len(a) + 1][len(b) + 1]


ORACLE_MAX_LEN = 8


def dld_oracle(a: str, b: str, variant: DldVariant | str = DldVariant.OSA) -> int:
    """Slow reference distance, for tests only.

    ``osa`` evaluates the defining recursion over prefixes directly.
    ``unrestricted`` runs a breadth-first search over edit operations on
    whole strings, which is the metric's definition; intermediate strings are
    limited to the input alphabet and one character past the longer input.

    Raises:
        ValueError: either input is longer than ``ORACLE_MAX_LEN``.
    """
    if len(a) > ORACLE_MAX_LEN or len(b) > ORACLE_MAX_LEN:
        raise ValueError(f"oracle inputs are limited to {ORACLE_MAX_LEN} characters")
    if DldVariant(variant) is DldVariant.OSA:
        return _osa_recursive(a, b)
    alphabet = "".join(sorted(set(a) | set(b)))
    return _bfs_distances(a, alphabet, max(len(a), len(b)) + 1).get(b, -1)


def _osa_recursive(a: str, b: str) -> int:
    @lru_cache(maxsize=None)
    def dist(i: int, j: int) -> int:
        if i == 0:
            return j
        if j == 0:
            return i
        options = [
            dist(i - 1, j) + 1,
            dist(i, j - 1) + 1,
            dist(i - 1, j - 1) + (a[i - 1] != b[j - 1]),
        ]
        if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
            options.append(dist(i - 2, j - 2) + 1)
        return min(options)

    return dist(len(a), len(b))


def _neighbours(s: str, alphabet: str, max_len: int):
    for i in range(len(s)):
        yield s[:i] + s[i + 1:]
        for c in alphabet:
            if c != s[i]:
                yield s[:i] + c + s[i + 1:]
        if i + 1 < len(s) and s[i] != s[i + 1]:
            yield s[:i] + s[i + 1] + s[i] + s[i + 2:]
    if len(s) < max_len:
        for i in range(len(s) + 1):
            for c in alphabet:
                yield s[:i] + c + s[i:]


@lru_cache(maxsize=4096)
def _bfs_distances(source: str, alphabet: str, max_len: int) -> dict[str, int]:
    seen = {source: 0}
    queue = deque([source])
    while queue:
        s = queue.popleft()
        depth = seen[s] + 1
        for t in _neighbours(s, alphabet, max_len):
            if t not in seen:
                seen[t] = depth
                queue.append(t)
    return seen
