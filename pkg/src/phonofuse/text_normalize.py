"""Transcript cleaning: lowercasing, contraction expansion, numeral spelling,
tokenization into letter runs and stop-word removal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import NumeralError

DEFAULT_STOP_WORDS = frozenset("""
    a an the
    i me my myself we our ours ourselves you your yours yourself yourselves
    he him his himself she her hers herself it its itself they them their
    theirs themselves
    what which who whom whose this that these those
    am is are was were be been being have has had having do does did doing
    can could will would shall should may might must ought
    and but if or because as until while nor so than too very
    of at by for with about against between into through during before after
    above below to from up down in out on off over under
    again further then once here there when where why how
    all any both each few more most other some such no not only own same
    just now like also
    s t d ll m o re ve y
""".split())

DEFAULT_MARKER_TOKENS = frozenset({"null"})

DEFAULT_CONTRACTIONS: dict[str, str] = {
    "ain't": "am not",
    "aren't": "are not",
    "can't": "can not",
    "couldn't": "could not",
    "didn't": "did not",
    "doesn't": "does not",
    "don't": "do not",
    "hadn't": "had not",
    "hasn't": "has not",
    "haven't": "have not",
    "isn't": "is not",
    "mightn't": "might not",
    "mustn't": "must not",
    "needn't": "need not",
    "shan't": "shall not",
    "shouldn't": "should not",
    "wasn't": "was not",
    "weren't": "were not",
    "won't": "will not",
    "wouldn't": "would not",
    "i'm": "i am",
    "you're": "you are",
    "we're": "we are",
    "they're": "they are",
    "he's": "he is",
    "she's": "she is",
    "it's": "it is",
    "that's": "that is",
    "there's": "there is",
    "what's": "what is",
    "let's": "let us",
    "i've": "i have",
    "you've": "you have",
    "we've": "we have",
    "they've": "they have",
    "i'll": "i will",
    "you'll": "you will",
    "he'll": "he will",
    "she'll": "she will",
    "we'll": "we will",
    "they'll": "they will",
    "it'll": "it will",
    "i'd": "i would",
    "you'd": "you would",
    "he'd": "he would",
    "she'd": "she would",
    "we'd": "we would",
    "they'd": "they would",
    "y'all": "you all",
    "o'clock": "of the clock",
}

_ONES = (
    "zero one two three four five six seven eight nine ten eleven twelve "
    "thirteen fourteen fifteen sixteen seventeen eighteen nineteen"
).split()
_TENS = "_ _ twenty thirty forty fifty sixty seventy eighty ninety".split()
_SCALES = ((1_000_000, "million"), (1_000, "thousand"))
MAX_NUMERAL = 999_999_999

_TOKEN_RE = re.compile(r"[a-z]+|\d+(?:[.,]\d+)*")
_CONTRACTION_RE = re.compile(r"[a-z]+(?:'[a-z]+)+")
_GROUPED_RE = re.compile(r"\d{1,3}(?:,\d{3})+")
_WORD_RE = re.compile(r"[a-z]+")


def is_token(surface: str) -> bool:
    """True if ``surface`` is a non-empty run of ASCII lowercase letters."""
    return bool(_WORD_RE.fullmatch(surface))


@dataclass(frozen=True)
class NormalizeConfig:
    stop_words: frozenset[str] = DEFAULT_STOP_WORDS
    contractions: Mapping[str, str] = field(
        default_factory=lambda: dict(DEFAULT_CONTRACTIONS)
    )
    remove_marker_tokens: frozenset[str] = DEFAULT_MARKER_TOKENS

    def __post_init__(self):
        object.__setattr__(self, "stop_words", frozenset(self.stop_words))
        object.__setattr__(
            self, "remove_marker_tokens", frozenset(self.remove_marker_tokens)
        )
        for word in self.stop_words | self.remove_marker_tokens:
            if word != word.lower():
                raise ValueError(f"stop/marker word must be lowercase: {word!r}")
        for short, expansion in self.contractions.items():
            if short != short.lower() or expansion != expansion.lower():
                raise ValueError(f"contraction must be lowercase: {short!r}")
            if "'" not in short:
                raise ValueError(f"contraction key lacks an apostrophe: {short!r}")
            if "'" in expansion:
                raise ValueError(f"expansion contains an apostrophe: {expansion!r}")

    @property
    def removed(self) -> frozenset[str]:
        return self.stop_words | self.remove_marker_tokens

    def keeping(self, word: str) -> "NormalizeConfig":
        """Copy of this config in which ``word`` is neither a stop word nor a marker."""
        return NormalizeConfig(
            stop_words=self.stop_words - {word},
            contractions=self.contractions,
            remove_marker_tokens=self.remove_marker_tokens - {word},
        )

    def as_dict(self) -> dict:
        return {
            "contractions": dict(sorted(self.contractions.items())),
            "remove_marker_tokens": sorted(self.remove_marker_tokens),
            "stop_words": sorted(self.stop_words),
        }


@dataclass(frozen=True)
class NormalizedTranscript:
    source_id: str
    tokens: tuple[str, ...]


def _below_thousand(n: int) -> list[str]:
    words = []
    hundreds, rest = divmod(n, 100)
    if hundreds:
        words += [_ONES[hundreds], "hundred"]
    if rest >= 20:
        tens, ones = divmod(rest, 10)
        words.append(_TENS[tens])
        if ones:
            words.append(_ONES[ones])
    elif rest:
        words.append(_ONES[rest])
    return words


def number_to_words(numeral: str) -> list[str]:
    """Spell a decimal integer in ``[0, 999_999_999]`` as English cardinal words.

    >>> number_to_words("105")
    ['one', 'hundred', 'five']
    """
    if not numeral or not numeral.isascii() or not numeral.isdigit():
        raise NumeralError(numeral, "not a string of decimal digits")
    n = int(numeral)
    if n > MAX_NUMERAL:
        raise NumeralError(numeral, f"exceeds {MAX_NUMERAL:,}")
    if n == 0:
        return ["zero"]
    words = []
    for scale, name in _SCALES:
        chunk, n = divmod(n, scale)
        if chunk:
            words += _below_thousand(chunk) + [name]
    return words + _below_thousand(n)


def _numeral_tokens(numeral: str) -> list[str]:
    if _GROUPED_RE.fullmatch(numeral):
        numeral = numeral.replace(",", "")
    if numeral.isdigit() and int(numeral) <= MAX_NUMERAL:
        return number_to_words(numeral)
    # decimals, odd groupings and very large numbers are read digit by digit
    return [_ONES[int(ch)] for ch in numeral if ch.isdigit()]


def expand_contractions(text: str, contractions: Mapping[str, str]) -> str:
    """Replace known contractions in lowercased ``text`` with their expansions."""
    return _CONTRACTION_RE.sub(
        lambda m: contractions.get(m.group(0), m.group(0)), text
    )


def tokenize(raw_text: str, contractions: Mapping[str, str] | None = None) -> list[str]:
    """Lowercase, expand contractions and split ``raw_text`` into word tokens.

    Letter runs become tokens, digit runs are spelled out, everything else
    separates tokens.
    """
    if contractions is None:
        contractions = DEFAULT_CONTRACTIONS
    text = raw_text.lower().replace("’", "'")
    text = expand_contractions(text, contractions)
    tokens: list[str] = []
    for match in _TOKEN_RE.finditer(text):
        piece = match.group(0)
        if piece[0].isdigit():
            tokens += _numeral_tokens(piece)
        else:
            tokens.append(piece)
    return tokens


def remove_stop_words(tokens: Iterable[str], config: NormalizeConfig) -> list[str]:
    removed = config.removed
    return [tok for tok in tokens if tok not in removed]


def normalize(
    raw_text: str, config: NormalizeConfig | None = None, source_id: str = ""
) -> NormalizedTranscript:
    config = config or NormalizeConfig()
    tokens = remove_stop_words(tokenize(raw_text, config.contractions), config)
    return NormalizedTranscript(source_id=source_id, tokens=tuple(tokens))


def read_stop_words(path: str | Path) -> frozenset[str]:
    """Read a stop-word file: one word per line, ``#`` starts a comment."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.split("#", 1)[0].strip()
        if word:
            words.add(word.lower())
    return frozenset(words)


def read_contractions(path: str | Path) -> dict[str, str]:
    """Read a contraction file of ``contracted<TAB>expansion`` lines."""
    table = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        short, sep, expansion = line.partition("\t")
        if not sep or not short.strip() or not expansion.strip():
            raise ValueError(f"{path}:{lineno}: expected 'contracted<TAB>expansion'")
        table[short.strip().lower()] = expansion.strip().lower()
    return table


def load_config(
    stopwords_path: str | Path | None = None,
    contractions_path: str | Path | None = None,
    marker_tokens: Sequence[str] | None = None,
) -> NormalizeConfig:
    kwargs = {}
    if stopwords_path is not None:
        kwargs["stop_words"] = read_stop_words(stopwords_path)
    if contractions_path is not None:
        kwargs["contractions"] = read_contractions(contractions_path)
    if marker_tokens is not None:
        kwargs["remove_marker_tokens"] = frozenset(marker_tokens)
    return NormalizeConfig(**kwargs)
