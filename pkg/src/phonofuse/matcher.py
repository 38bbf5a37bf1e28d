"""Keyword detection channels and their OR fusion.

Four channels are computed per transcript:

* ``baseline``        exact token match
* ``stem``            Porter-stem match
* ``vowel_plosive``   vowel+plosive pruned pattern found in the phoneme stream
* ``vowel_fricative`` vowel+fricative pruned pattern found in the phoneme stream

The fused decision is the OR of the last three. The baseline is reported
for comparison only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import InvalidKeywordError
from .phonology import STAGE_I, STAGE_II, PrunedPattern, phonemize_stream, prune
from .pronlex import Lexicon, strip_stress
from .stemmer import stem
from .text_normalize import NormalizeConfig, NormalizedTranscript, is_token, tokenize

BASELINE = "baseline"
STEM = "stem"
VOWEL_PLOSIVE = "vowel_plosive"
VOWEL_FRICATIVE = "vowel_fricative"

CHANNELS = (BASELINE, STEM, VOWEL_PLOSIVE, VOWEL_FRICATIVE)
FUSION_CHANNELS = (STEM, VOWEL_PLOSIVE, VOWEL_FRICATIVE)
STAGE_CLASSES = {VOWEL_PLOSIVE: STAGE_I, VOWEL_FRICATIVE: STAGE_II}


@dataclass(frozen=True)
class DetectConfig:
    normalize: NormalizeConfig = field(default_factory=NormalizeConfig)
    channels: frozenset[str] = frozenset(CHANNELS)

    def __post_init__(self):
        channels = frozenset(self.channels)
        object.__setattr__(self, "channels", channels)
        unknown = channels - set(CHANNELS)
        if unknown:
            raise ValueError(f"unknown channel(s): {', '.join(sorted(unknown))}")
        if not channels & set(FUSION_CHANNELS):
            raise ValueError(
                "at least one of stem, vowel_plosive, vowel_fricative must be enabled"
            )

    def keeping(self, word: str) -> "DetectConfig":
        return DetectConfig(self.normalize.keeping(word), self.channels)

    def as_dict(self) -> dict:
        return {"channels": [c for c in CHANNELS if c in self.channels], **self.normalize.as_dict()}


@dataclass(frozen=True)
class ChannelResult:
    channel: str
    count: int = 0
    available: bool = True

    def __post_init__(self):
        if self.count < 0 or (not self.available and self.count):
            raise ValueError(f"inconsistent channel result {self!r}")

    @property
    def detected(self) -> bool:
        return self.available and self.count >= 1

    @classmethod
    def unavailable(cls, channel: str) -> "ChannelResult":
        return cls(channel, 0, False)


@dataclass(frozen=True)
class DetectionOutcome:
    keyword: str
    source_id: str
    results: Mapping[str, ChannelResult]
    oov_count: int = 0

    def __getitem__(self, channel: str) -> ChannelResult:
        return self.results[channel]

    @property
    def fused_detected(self) -> bool:
        return fuse(self.results.values())


def fuse(results: Iterable[ChannelResult]) -> bool:
    """OR over the available fusion-member channels."""
    return any(r.detected for r in results if r.channel in FUSION_CHANNELS)


def normalize_keyword(keyword: str, config: NormalizeConfig) -> str:
    tokens = tokenize(keyword, config.contractions)
    if len(tokens) != 1 or not is_token(tokens[0]):
        raise InvalidKeywordError(f"keyword {keyword!r} must normalize to a single word")
    word = tokens[0]
    if word in config.removed:
        raise InvalidKeywordError(f"keyword {keyword!r} is a stop word or marker token")
    return word


def baseline_count(tokens: Sequence[str], keyword: str) -> int:
    return sum(1 for tok in tokens if tok == keyword)


def stem_count(transcript: NormalizedTranscript | Sequence[str], keyword: str) -> int:
    tokens = transcript.tokens if isinstance(transcript, NormalizedTranscript) else transcript
    target = stem(keyword)
    return sum(1 for tok in tokens if stem(tok) == target)


def pattern_count(stream: Sequence[str], needle: Sequence[str]) -> int:
    """Non-overlapping left-to-right occurrences of ``needle`` in ``stream``.

    Symbols are compared whole, so ``S`` never matches inside ``SH``.
    """
    if not needle:
        raise ValueError("needle must be non-empty")
    # Knuth-Morris-Pratt failure table
    fail = [0] * len(needle)
    k = 0
    for i in range(1, len(needle)):
        while k and needle[i] != needle[k]:
            k = fail[k - 1]
        if needle[i] == needle[k]:
            k += 1
        fail[i] = k

    count = k = 0
    for symbol in stream:
        while k and symbol != needle[k]:
            k = fail[k - 1]
        if symbol == needle[k]:
            k += 1
            if k == len(needle):
                count += 1
                k = 0  # resume after the match
    return count


def keyword_needles(keyword: str, lexicon: Lexicon) -> dict[str, PrunedPattern]:
    """Pruned patterns of the keyword per phoneme stage (empty if OOV)."""
    pron = lexicon.lookup(keyword)
    if pron is None:
        return {channel: () for channel in STAGE_CLASSES}
    symbols = strip_stress(pron.phonemes)
    return {channel: prune(symbols, classes) for channel, classes in STAGE_CLASSES.items()}


def detect(
    transcript: NormalizedTranscript,
    keyword: str,
    lexicon: Lexicon,
    config: DetectConfig | None = None,
) -> DetectionOutcome:
    config = config or DetectConfig()
    word = normalize_keyword(keyword, config.normalize)
    enabled = config.channels
    results = {}

    for channel, fn in ((BASELINE, baseline_count), (STEM, stem_count)):
        if channel in enabled:
            results[channel] = ChannelResult(channel, fn(transcript.tokens, word))
        else:
            results[channel] = ChannelResult.unavailable(channel)

    stream, oov = phonemize_stream(transcript, lexicon)
    needles = keyword_needles(word, lexicon)
    for channel, classes in STAGE_CLASSES.items():
        needle = needles[channel]
        if channel not in enabled or not needle:
            results[channel] = ChannelResult.unavailable(channel)
            continue
        results[channel] = ChannelResult(channel, pattern_count(prune(stream, classes), needle))

    return DetectionOutcome(word, transcript.source_id, results, oov)
