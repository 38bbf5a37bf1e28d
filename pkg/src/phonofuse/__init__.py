"""Keyword recognition in noisy speech transcripts by fusing stem matching
with vowel+plosive and vowel+fricative phoneme-pattern matching."""

from .errors import (
    DataError,
    DatasetError,
    EmptyLexiconError,
    InvalidKeywordError,
    LexiconError,
    NumeralError,
    PhonofuseError,
)
from .matcher import CHANNELS, DetectConfig, detect
from .pronlex import Lexicon, load_lexicon, parse_cmudict
from .stemmer import stem
from .text_normalize import NormalizeConfig, normalize, tokenize

__version__ = "0.1.0"

__all__ = [
    "CHANNELS",
    "DataError",
    "DatasetError",
    "DetectConfig",
    "EmptyLexiconError",
    "InvalidKeywordError",
    "Lexicon",
    "LexiconError",
    "NormalizeConfig",
    "NumeralError",
    "PhonofuseError",
    "detect",
    "load_lexicon",
    "normalize",
    "parse_cmudict",
    "stem",
    "tokenize",
]
