"""Synthetic textspeak corpus for demos and tests.

Abbreviations are produced from a list of common Tagalog words with a handful
of phonetic contraction habits seen in online text (``to`` -> ``2``, dropped
vowels, ``ka`` -> ``k`` ...). The output is a stand-in for a real annotated
corpus, not a substitute for one.
"""

from __future__ import annotations

import random
import re

from ngramnorm.preprocessing import TrainingPair

WORDS = """
dito doon diyan tuloy dahil nakakatawa salamat talaga lang naman kasi
ngayon bukas kahapon mamaya ulan bagyo hangin baha init lamig panahon
walang wala meron mayroon sige tayo kayo sila kami ako ikaw siya
ano bakit paano kailan saan sino alin ito iyan iyon yung yun
pasok klase trabaho bahay eskwela opisina kalsada daan lugar probinsya
malakas mahina malamig mainit maulan maaraw basa tuyo malinis marumi
paki pakisabi pakitingin nakita nakikita makikita titingnan tingnan
sana baka siguro talagang totoo tama mali pwede puwede hindi huwag
kumain kain uminom inom matulog tulog gising gumising umuwi uwi
nagtatanong nagsasabi sinasabi tinatanong sinabi tanong sagot balita
announcement advisory signal suspendido suspended walang pasok kanselado
mabuti masaya malungkot galit takot kawawa grabe sobra medyo konti
marami lahat iba isa dalawa tatlo apat lima anim pito walo siyam sampu
kita tayo natin namin ninyo nila niya nito niyan niyon dun dyan
muna pa na nga po opo oo hindi nang ng sa si ni kay para pero
baha bumaha bumabaha lumilindol lindol kidlat kulog dilim liwanag
tubig kuryente brownout signal number one two tatlo
""".split()

# (pattern, replacement) contractions; applied to a word at random.
CONTRACTIONS = [
    ("to", "2"),
    ("tu", "2"),
    ("ka", "k"),
    ("na", "n"),
    ("ma", "m"),
    ("sa", "s"),
    ("pa", "p"),
    ("ba", "b"),
    ("la", "l"),
    ("ko", "q"),
    ("po", "p"),
    ("ng", "ng"),
    ("nga", "ng"),
    ("yo", "u"),
    ("iyo", "yo"),
    ("ayo", "au"),
    ("ala", "la"),
    ("aw", "au"),
    ("ay", "ai"),
]
VOWELS = "aeiou"


def abbreviate(word: str, rng: random.Random) -> str:
    """Apply one or two random contractions to ``word``."""
    out = word
    for _ in range(rng.choice((1, 1, 2))):
        options = [(p, r) for p, r in CONTRACTIONS if p in out and p != r]
        choices = ["vowel"] * 2 + options
        pick = rng.choice(choices)
        if pick == "vowel":
            spots = [m.start() for m in re.finditer(f"[{VOWELS}]", out) if 0 < m.start() < len(out) - 1]
            if spots:
                i = rng.choice(spots)
                out = out[:i] + out[i + 1:]
        else:
            pattern, repl = pick
            spots = [m.start() for m in re.finditer(re.escape(pattern), out)]
            i = rng.choice(spots)
            out = out[:i] + repl + out[i + len(pattern):]
    return out


def vocabulary() -> frozenset[str]:
    return frozenset(WORDS)


def synthetic_pairs(n: int, seed: int = 0) -> list[TrainingPair]:
    """``n`` distinct ``(abbreviation, word)`` pairs, deterministic in ``seed``."""
    rng = random.Random(seed)
    words = sorted(set(WORDS))
    seen: set[tuple[str, str]] = set()
    pairs = []
    attempts = 0
    while len(pairs) < n:
        attempts += 1
        if attempts > 1000 * n:
            raise RuntimeError(f"could not draw {n} distinct pairs")
        word = rng.choice(words)
        if len(word) < 3:
            continue
        short = abbreviate(word, rng)
        if short == word or (short, word) in seen:
            continue
        seen.add((short, word))
        pairs.append(TrainingPair(short, word))
    return pairs
