"""CMU pronouncing dictionary reader and word -> phoneme lookup.

Accepts the ``cmudict-0.7b`` layout::

    ;;; comment
    ABOUT  AH0 B AW1 T
    A(2)  EY1

as well as the later lowercase release, which uses single spaces and
trailing ``# ...`` annotations.
"""

from __future__ import annotations

import io
import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import BinaryIO, Iterable, NamedTuple, Sequence

from .errors import EmptyLexiconError, LexiconError

log = logging.getLogger(__name__)

VOWELS = frozenset("AA AE AH AO AW AY EH ER EY IH IY OW OY UH UW".split())
CONSONANTS = frozenset(
    "B CH D DH F G HH JH K L M N NG P R S SH T TH V W Y Z ZH".split()
)
SYMBOLS = VOWELS | CONSONANTS

MINI_LEXICON = "mini_cmudict.txt"

_ALTERNATE_RE = re.compile(r"^(.+?)\(([^()]*)\)$")
_PHONE_RE = re.compile(r"^([A-Z]+)([012]?)$")


class Phoneme(NamedTuple):
    base: str
    stress: int | None = None

    def __str__(self):
        return self.base if self.stress is None else f"{self.base}{self.stress}"


_PHONEME_CACHE: dict[str, Phoneme] = {}


def parse_phoneme(text: str) -> Phoneme:
    """Parse ``"AW1"`` into ``Phoneme("AW", 1)``; raises ValueError if invalid."""
    cached = _PHONEME_CACHE.get(text)
    if cached is not None:
        return cached
    m = _PHONE_RE.match(text)
    if not m or m.group(1) not in SYMBOLS:
        raise ValueError(f"unknown phoneme symbol {text!r}")
    base, digit = m.groups()
    if digit and base not in VOWELS:
        raise ValueError(f"stress digit on consonant {text!r}")
    phoneme = Phoneme(base, int(digit) if digit else None)
    _PHONEME_CACHE[text] = phoneme
    return phoneme


@dataclass(frozen=True)
class Pronunciation:
    word: str
    variant: int
    phonemes: tuple[Phoneme, ...]

    def __str__(self):
        return " ".join(map(str, self.phonemes))


def strip_stress(phonemes: Iterable[Phoneme]) -> list[str]:
    return [p.base for p in phonemes]


def format_entry(pron: Pronunciation) -> str:
    """Render an entry as a canonical ``cmudict-0.7b`` line (no newline)."""
    head = pron.word.upper()
    if pron.variant > 1:
        head += f"({pron.variant})"
    return f"{head}  {pron}"


@dataclass
class ParseReport:
    lines: int = 0
    entries: int = 0
    comments: int = 0
    blank: int = 0
    decode_errors: int = 0
    malformed: Counter = field(default_factory=Counter)

    @property
    def skipped(self) -> int:
        return self.decode_errors + sum(self.malformed.values())


class Lexicon:
    """Immutable mapping of lowercase words to their pronunciation variants."""

    def __init__(self, entries: dict[str, tuple[Pronunciation, ...]], source: str = ""):
        self._entries = entries
        self.source = source

    def __len__(self):
        return len(self._entries)

    def __contains__(self, word):
        return word in self._entries

    def __iter__(self):
        return iter(self._entries)

    def variants(self, word: str) -> tuple[Pronunciation, ...]:
        return self._entries.get(word, ())

    def lookup(self, word: str) -> Pronunciation | None:
        """Primary (variant 1) pronunciation of ``word``, or None if out of vocabulary."""
        prons = self._entries.get(word)
        return prons[0] if prons else None

    def entry_count(self) -> int:
        return sum(len(v) for v in self._entries.values())


def _parse_line(line: str) -> tuple[str, int, tuple[Phoneme, ...]]:
    """Split one entry line into (word, variant, phonemes); ValueError tags the reason."""
    line = line.split(" #", 1)[0]
    parts = line.split()
    if len(parts) < 2:
        raise ValueError("no_phonemes")
    head, phones = parts[0], parts[1:]
    variant = 1
    m = _ALTERNATE_RE.match(head)
    if m:
        head, index = m.groups()
        if not index.isdigit() or int(index) < 2:
            raise ValueError("bad_alternate_index")
        variant = int(index)
    if not head.isascii():
        raise ValueError("non_ascii_headword")
    try:
        phonemes = tuple(parse_phoneme(p) for p in phones)
    except ValueError:
        raise ValueError("unknown_phoneme") from None
    return head.lower(), variant, phonemes


def parse_cmudict(stream: BinaryIO | Iterable[bytes], source: str = "") -> tuple[Lexicon, ParseReport]:
    """Parse a CMU dictionary byte stream.

    Malformed lines are skipped and tallied in the returned report; an
    empty result raises EmptyLexiconError.
    """
    report = ParseReport()
    staged: dict[str, dict[int, tuple[Phoneme, ...]]] = {}
    for raw in stream:
        report.lines += 1
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError:
            report.decode_errors += 1
            continue
        line = line.strip()
        if not line:
            report.blank += 1
            continue
        if line.startswith(";;;"):
            report.comments += 1
            continue
        try:
            word, variant, phonemes = _parse_line(line)
        except ValueError as exc:
            report.malformed[str(exc)] += 1
            continue
        variants = staged.setdefault(word, {})
        if variant in variants:
            report.malformed["duplicate_variant"] += 1
            continue
        variants[variant] = phonemes

    entries = {}
    for word, variants in staged.items():
        if 1 not in variants:
            report.malformed["missing_primary"] += len(variants)
            continue
        entries[word] = tuple(
            Pronunciation(word, v, variants[v]) for v in sorted(variants)
        )
    report.entries = sum(len(v) for v in entries.values())
    if not entries:
        raise EmptyLexiconError(f"empty lexicon: no entries parsed from {source or 'stream'}")
    if report.skipped:
        log.info("%s: skipped %d malformed lines", source or "lexicon", report.skipped)
    return Lexicon(entries, source=source), report


def load_lexicon(path: str | Path | None = None) -> tuple[Lexicon, ParseReport]:
    """Load a dictionary file; with no path, the bundled mini lexicon."""
    if path is None:
        data = resources.files("phonofuse").joinpath("data").joinpath(MINI_LEXICON).read_bytes()
        return parse_cmudict(io.BytesIO(data), source=MINI_LEXICON)
    path = Path(path)
    try:
        with path.open("rb") as fh:
            return parse_cmudict(fh, source=str(path))
    except OSError as exc:
        raise LexiconError(f"cannot read dictionary {path}: {exc.strerror or exc}") from exc


def lookup(lexicon: Lexicon, word: str) -> Pronunciation | None:
    return lexicon.lookup(word)


def format_lexicon(lexicon: Lexicon) -> Sequence[str]:
    return [format_entry(p) for word in lexicon for p in lexicon.variants(word)]
