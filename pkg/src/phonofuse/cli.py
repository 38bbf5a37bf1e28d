"""Command line interface: ``phonofuse <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 data error (lexicon, dataset, input files).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import __version__
from .errors import DataError, PhonofuseError
from .evaluation import evaluate, load_dataset, write_report
from .matcher import CHANNELS, DetectConfig, detect
from .phonology import parse_classes, prune
from .pronlex import load_lexicon, strip_stress
from .stemmer import stem
from .text_normalize import is_token, load_config, normalize

PROG = "phonofuse"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _words(raw):
    words = [w.lower() for w in raw]
    for w in words:
        if not is_token(w):
            raise UsageError(f"not a plain word: {w!r}")
    return words


def _channels(value):
    return frozenset(c.strip() for c in value.split(",") if c.strip())


def _detect_config(args) -> DetectConfig:
    try:
        normalize_config = load_config(args.stopwords, args.contractions)
    except OSError as exc:
        raise DataError(f"cannot read config file: {exc}") from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        return DetectConfig(normalize_config, args.channels)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_normalize(args, out):
    try:
        config = load_config(args.stopwords, args.contractions)
    except OSError as exc:
        raise DataError(f"cannot read config file: {exc}") from exc
    if args.file:
        text = _read_text(args.file)
    elif args.text:
        text = " ".join(args.text)
    else:
        text = sys.stdin.read()
    print(" ".join(normalize(text, config).tokens), file=out)


def cmd_stem(args, out):
    for word in _words(args.words):
        print(f"{word}\t{stem(word)}", file=out)


def cmd_phonemize(args, out):
    lexicon, _ = load_lexicon(args.dict)
    for word in _words(args.words):
        pron = lexicon.lookup(word)
        if pron is None:
            print(f"{PROG}: {word!r} is not in the lexicon", file=sys.stderr)
            print("", file=out)
        elif args.strip_stress:
            print(" ".join(strip_stress(pron.phonemes)), file=out)
        else:
            print(str(pron), file=out)


def cmd_prune(args, out):
    try:
        classes = parse_classes(args.classes)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    lexicon, _ = load_lexicon(args.dict)
    for word in _words(args.words):
        pron = lexicon.lookup(word)
        if pron is None:
            print(f"{PROG}: {word!r} is not in the lexicon", file=sys.stderr)
            print("", file=out)
        else:
            print(" ".join(prune(strip_stress(pron.phonemes), classes)), file=out)


def _read_text(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc


def cmd_detect(args, out):
    config = _detect_config(args)
    lexicon, _ = load_lexicon(args.dict)
    transcript = normalize(_read_text(args.transcript), config.normalize, args.transcript)
    try:
        outcome = detect(transcript, args.keyword, lexicon, config)
    except PhonofuseError as exc:
        raise UsageError(str(exc)) from exc
    for channel in CHANNELS:
        r = outcome[channel]
        print(f"{channel} {r.count} {str(r.detected).lower()} {str(r.available).lower()}", file=out)
    print(f"fused {str(outcome.fused_detected).lower()}", file=out)


def cmd_evaluate(args, out):
    if args.jobs is not None and args.jobs < 1:
        raise UsageError("--jobs must be a positive integer")
    config = _detect_config(args)
    dataset = load_dataset(args.dataset)
    lexicon, _ = load_lexicon(args.dict)
    report = evaluate(dataset, lexicon, config, jobs=args.jobs or os.cpu_count() or 1,
                      timestamp=args.timestamp)
    n = sum(s.n_samples for s in report.categories)
    print(f"{PROG}: evaluated {n} samples in {len(report.categories)} categories",
          file=sys.stderr)
    if report.meta["errored_samples"]:
        print(f"{PROG}: warning: {report.meta['errored_samples']} unreadable samples skipped",
              file=sys.stderr)
    try:
        text = write_report(report, args.format, args.out)
    except OSError as exc:
        raise DataError(f"cannot write report: {exc}") from exc
    if args.out is None:
        out.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Keyword recognition in noisy speech transcripts.")
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add_dict(p):
        p.add_argument("--dict", metavar="PATH",
                       help="CMU dictionary file (default: bundled mini lexicon)")

    def add_normalize_opts(p):
        p.add_argument("--stopwords", metavar="FILE", help="stop-word list, one per line")
        p.add_argument("--contractions", metavar="FILE",
                       help="contraction table, 'contracted<TAB>expansion' per line")

    def add_channels(p):
        p.add_argument("--channels", type=_channels, default=frozenset(CHANNELS),
                       help="comma-separated subset of: " + ",".join(CHANNELS))

    p = sub.add_parser("normalize", help="print the normalized token sequence of a text")
    p.add_argument("text", nargs="*", help="text to normalize (default: stdin)")
    p.add_argument("--file", metavar="PATH", help="read the text from a file")
    add_normalize_opts(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("stem", help="print word<TAB>stem for each word")
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_stem)

    p = sub.add_parser("phonemize", help="print the primary pronunciation of each word")
    p.add_argument("words", nargs="+")
    p.add_argument("--strip-stress", action="store_true", help="drop stress digits")
    add_dict(p)
    p.set_defaults(func=cmd_phonemize)

    p = sub.add_parser("prune", help="print the pruned pattern of each word")
    p.add_argument("words", nargs="+")
    p.add_argument("--classes", default="vowel,plosive",
                   help="comma-separated phoneme classes (default: vowel,plosive)")
    add_dict(p)
    p.set_defaults(func=cmd_prune)

    p = sub.add_parser("detect", help="run all channels on one transcript")
    p.add_argument("--transcript", required=True, metavar="FILE")
    p.add_argument("--keyword", required=True)
    add_dict(p)
    add_normalize_opts(p)
    add_channels(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("evaluate", help="evaluate a directory-per-category corpus")
    p.add_argument("--dataset", required=True, metavar="DIR")
    add_dict(p)
    p.add_argument("--out", metavar="PATH", help="report file (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, metavar="N", help="worker processes (default: CPU count)")
    p.add_argument("--timestamp", metavar="TEXT",
                   help="value recorded as meta.timestamp (default: null)")
    add_normalize_opts(p)
    add_channels(p)
    p.set_defaults(func=cmd_evaluate)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format=f"{PROG}: %(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
