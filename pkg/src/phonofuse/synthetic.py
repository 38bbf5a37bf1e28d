"""Seeded generator of noisy keyword corpora for exercising the channels.

Each sample is a short line of filler words in which the category keyword
appears verbatim, in a corrupted form, or not at all. Corruptions mimic
transcription noise: ``-ed``/``-ing`` swaps, plural insertion and consonant
substitution that keeps the vowels in place.

Run ``python -m phonofuse.synthetic OUT_DIR`` to write a corpus to disk.
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path
from typing import Sequence

DEFAULT_KEYWORDS = (
    "absolutely", "affairs", "agreement", "announced", "government",
    "minister", "president", "significant",
)
DEFAULT_FILLER = (
    "deal", "fares", "fee", "foreign", "green", "idea", "market", "meant", "new",
    "news", "office", "people", "percent", "price", "public", "said", "sound",
    "state", "talks", "today", "trade", "tree", "week", "aunt", "ounce", "gate",
)
NOISE = ("the", "a", "of", "null", "null null", "i am", "its", "more")
PUNCT = ("", "", ".", ",", "!", "?")
_VOWELS = "aeiou"
_CONSONANTS = "bcdfghjklmnpqrstvwxz"


def swap_suffix(word: str) -> str:
    if word.endswith("ed"):
        return word[:-2] + "ing"
    if word.endswith("ing"):
        return word[:-3] + "ed"
    return word + ("d" if word.endswith("e") else "ed")


def pluralize(word: str) -> str:
    return word + ("es" if word.endswith(("s", "x", "z", "ch", "sh")) else "s")


def substitute_consonant(word: str, rng: random.Random) -> str:
    positions = [i for i, ch in enumerate(word) if ch not in _VOWELS]
    if not positions:
        return word
    i = rng.choice(positions)
    replacement = rng.choice([c for c in _CONSONANTS if c != word[i]])
    return word[:i] + replacement + word[i + 1:]


def corrupt(word: str, rng: random.Random) -> str:
    kind = rng.randrange(3)
    if kind == 0:
        return swap_suffix(word)
    if kind == 1:
        return pluralize(word)
    return substitute_consonant(word, rng)


def make_sample(keyword: str, filler: Sequence[str], rng: random.Random) -> str:
    words = [rng.choice(filler) for _ in range(rng.randint(2, 7))]
    roll = rng.random()
    if roll < 0.2:
        form = keyword
    elif roll < 0.75:
        form = corrupt(keyword, rng)
    else:
        form = None
    if form is not None:
        words.insert(rng.randint(0, len(words)), form)
    for _ in range(rng.randint(0, 2)):
        words.insert(rng.randint(0, len(words)), rng.choice(NOISE))
    if rng.random() < 0.15:
        words.insert(rng.randint(0, len(words)), str(rng.randint(0, 2500)))
    text = " ".join(w + rng.choice(PUNCT) for w in words)
    return text.capitalize() if rng.random() < 0.5 else text


def generate_corpus(
    seed: int,
    keywords: Sequence[str] = DEFAULT_KEYWORDS,
    filler: Sequence[str] = DEFAULT_FILLER,
    n_samples: int = 10,
) -> dict[str, list[str]]:
    """Return ``{keyword: [sample text, ...]}``; identical for identical arguments."""
    rng = random.Random(seed)
    return {kw: [make_sample(kw, filler, rng) for _ in range(n_samples)] for kw in keywords}


def write_corpus(corpus: dict[str, list[str]], root: str | Path) -> Path:
    root = Path(root)
    for keyword, samples in corpus.items():
        category = root / keyword.upper()
        category.mkdir(parents=True, exist_ok=True)
        for i, text in enumerate(samples):
            (category / f"{i:04d}.txt").write_text(text + "\n", encoding="utf-8")
    return root


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("out", help="directory to create the corpus in")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=10, help="samples per category")
    parser.add_argument("--keywords", help="comma-separated keyword list")
    args = parser.parse_args(argv)
    keywords = args.keywords.split(",") if args.keywords else DEFAULT_KEYWORDS
    write_corpus(generate_corpus(args.seed, keywords, n_samples=args.samples), args.out)


if __name__ == "__main__":
    main()
