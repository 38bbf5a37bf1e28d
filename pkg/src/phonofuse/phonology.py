"""Articulatory classes of ARPAbet phonemes and class-based pattern pruning."""

from __future__ import annotations

import enum
from typing import AbstractSet, Iterable, Sequence

from .errors import ClassificationError
from .pronlex import Lexicon, strip_stress
from .text_normalize import NormalizedTranscript


class PhonemeClass(enum.Enum):
    VOWEL = "vowel"
    PLOSIVE = "plosive"
    FRICATIVE = "fricative"
    AFFRICATE = "affricate"
    NASAL = "nasal"
    LIQUID = "liquid"
    GLIDE = "glide"


_CLASS_MEMBERS = {
    PhonemeClass.VOWEL: "AA AE AH AO AW AY EH ER EY IH IY OW OY UH UW",
    PhonemeClass.PLOSIVE: "P B T D K G",
    PhonemeClass.FRICATIVE: "F V TH DH S Z SH ZH HH",
    PhonemeClass.AFFRICATE: "CH JH",
    PhonemeClass.NASAL: "M N NG",
    PhonemeClass.LIQUID: "L R",
    PhonemeClass.GLIDE: "W Y",
}

CLASS_TABLE: dict[str, PhonemeClass] = {
    symbol: cls for cls, members in _CLASS_MEMBERS.items() for symbol in members.split()
}

# A pruned pattern is a tuple of symbols: vowel letters A/E/I/O/U or consonant bases.
PrunedPattern = tuple[str, ...]

STAGE_I = frozenset({PhonemeClass.VOWEL, PhonemeClass.PLOSIVE})
STAGE_II = frozenset({PhonemeClass.VOWEL, PhonemeClass.FRICATIVE})


def classify(symbol: str) -> PhonemeClass:
    try:
        return CLASS_TABLE[symbol]
    except KeyError:
        raise ClassificationError(f"unknown ARPAbet symbol {symbol!r}") from None


def vowel_letter(symbol: str) -> str:
    """Collapse a vowel phoneme to its first letter (``IY`` -> ``I``)."""
    if classify(symbol) is not PhonemeClass.VOWEL:
        raise ValueError(f"{symbol!r} is not a vowel")
    return symbol[0]


def parse_classes(spec: str) -> frozenset[PhonemeClass]:
    """Parse a comma-separated class list such as ``"vowel,plosive"``."""
    names = [part.strip().lower() for part in spec.split(",") if part.strip()]
    if not names:
        raise ValueError("empty class list")
    try:
        return frozenset(PhonemeClass(name) for name in names)
    except ValueError:
        known = ", ".join(c.value for c in PhonemeClass)
        raise ValueError(f"unknown phoneme class in {spec!r} (known: {known})") from None


def prune(phonemes: Sequence[str], classes: AbstractSet[PhonemeClass]) -> PrunedPattern:
    """Keep only symbols of the given classes, rendering vowels as letters.

    >>> prune(["AH", "G", "R", "IY", "M", "AH", "N", "T"], STAGE_I)
    ('A', 'G', 'I', 'A', 'T')
    """
    if not classes:
        raise ValueError("class set must be non-empty")
    out = []
    for symbol in phonemes:
        cls = classify(symbol)
        if cls in classes:
            out.append(symbol[0] if cls is PhonemeClass.VOWEL else symbol)
    return tuple(out)


def phonemize_stream(
    transcript: NormalizedTranscript | Iterable[str], lexicon: Lexicon
) -> tuple[list[str], int]:
    """Concatenate the stress-free primary pronunciations of all tokens.

    Out-of-vocabulary tokens contribute nothing; returns ``(symbols, oov_count)``.
    """
    tokens = transcript.tokens if isinstance(transcript, NormalizedTranscript) else transcript
    stream: list[str] = []
    oov = 0
    for token in tokens:
        pron = lexicon.lookup(token)
        if pron is None:
            oov += 1
        else:
            stream += strip_stress(pron.phonemes)
    return stream, oov
