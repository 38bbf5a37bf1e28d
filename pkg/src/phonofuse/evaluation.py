"""Corpus evaluation: per-category and aggregate recognition rates.

A dataset is a directory with one sub-directory per keyword category,
each holding UTF-8 transcript samples::

    root/ABOUT/0001.txt
    root/ABOUT/0002.txt
    root/AFFAIRS/0001.txt
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .errors import DatasetError
from .matcher import CHANNELS, FUSION_CHANNELS, DetectConfig, detect
from .pronlex import Lexicon
from .text_normalize import is_token, normalize

log = logging.getLogger(__name__)

FUSED = "fused"
COLUMNS = CHANNELS + (FUSED,)
RATE_PLACES = 4


@dataclass(frozen=True)
class Category:
    name: str
    samples: tuple[Path, ...]


@dataclass(frozen=True)
class Dataset:
    root: Path
    categories: tuple[Category, ...]


def load_dataset(root: str | Path) -> Dataset:
    root = Path(root)
    if not root.is_dir():
        raise DatasetError(f"dataset root {root} does not exist or is not a directory")
    categories = []
    for sub in sorted(root.iterdir(), key=lambda p: p.name):
        if not sub.is_dir() or sub.name.startswith("."):
            continue
        keyword = sub.name.lower()
        if not is_token(keyword):
            raise DatasetError(f"category directory {sub.name!r} is not a plain word")
        samples = tuple(
            sorted((p for p in sub.iterdir() if p.suffix == ".txt" and p.is_file()),
                   key=lambda p: p.name)
        )
        if not samples:
            raise DatasetError(f"category {sub.name} has no .txt samples")
        categories.append(Category(keyword, samples))
    if not categories:
        raise DatasetError(f"no categories found under {root}")
    return Dataset(root, tuple(categories))


@dataclass(frozen=True)
class CategoryStats:
    category: str
    n_samples: int
    counts: Mapping[str, int]
    oov_samples: int = 0

    def rate(self, column: str) -> Fraction:
        return Fraction(self.counts[column], self.n_samples)

    @property
    def rates(self) -> dict[str, Fraction]:
        return {c: self.rate(c) for c in COLUMNS}


@dataclass
class EvalReport:
    categories: list[CategoryStats]
    meta: dict = field(default_factory=dict)

    def macro(self) -> dict[str, Fraction]:
        n = len(self.categories)
        return {c: sum((s.rate(c) for s in self.categories), Fraction(0)) / n for c in COLUMNS}

    def micro(self) -> dict[str, Fraction]:
        total = sum(s.n_samples for s in self.categories)
        return {c: Fraction(sum(s.counts[c] for s in self.categories), total) for c in COLUMNS}


def config_digest(config: DetectConfig) -> str:
    canonical = json.dumps(config.as_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def _score_texts(
    keyword: str, texts: Sequence[tuple[str, str]], lexicon: Lexicon, config: DetectConfig
) -> CategoryStats:
    # a category keyword must survive stop-word removal to be detectable at all
    config = config.keeping(keyword)
    counts = dict.fromkeys(COLUMNS, 0)
    oov_samples = 0
    for source_id, text in texts:
        outcome = detect(normalize(text, config.normalize, source_id), keyword, lexicon, config)
        for channel in CHANNELS:
            counts[channel] += outcome[channel].detected
        counts[FUSED] += outcome.fused_detected
        oov_samples += outcome.oov_count > 0
    return CategoryStats(keyword, len(texts), counts, oov_samples)


def evaluate_texts(
    categories: Mapping[str, Sequence[str]],
    lexicon: Lexicon,
    config: DetectConfig | None = None,
) -> list[CategoryStats]:
    """Score in-memory transcripts, ``{keyword: [text, ...]}``, in sorted keyword order."""
    config = config or DetectConfig()
    stats = []
    for keyword in sorted(categories):
        texts = [(f"{keyword}/{i}", t) for i, t in enumerate(categories[keyword])]
        if not texts:
            raise DatasetError(f"category {keyword} has no samples")
        stats.append(_score_texts(keyword, texts, lexicon, config))
    return stats


def _read_category(category: Category, root: Path):
    texts, errored = [], []
    for path in category.samples:
        source_id = path.relative_to(root).as_posix()
        try:
            texts.append((source_id, path.read_text(encoding="utf-8")))
        except (OSError, UnicodeDecodeError) as exc:
            errored.append(f"{source_id}: {exc}")
    return texts, errored


_worker_state: dict = {}


def _init_worker(lexicon, config, root):
    _worker_state.update(lexicon=lexicon, config=config, root=root)


def _run_category(category: Category):
    return _evaluate_category(category, **_worker_state)


def _evaluate_category(category: Category, lexicon, config, root):
    texts, errored = _read_category(category, root)
    if not texts:
        raise DatasetError(f"category {category.name}: no readable samples")
    return _score_texts(category.name, texts, lexicon, config), errored


def evaluate(
    dataset: Dataset,
    lexicon: Lexicon,
    config: DetectConfig | None = None,
    jobs: int = 1,
    timestamp: str | None = None,
) -> EvalReport:
    """Run detection over every sample and aggregate the rates.

    Unreadable samples are excluded from the counts and logged as warnings.
    Results do not depend on ``jobs``.
    """
    config = config or DetectConfig()
    jobs = max(1, min(jobs, len(dataset.categories)))
    if jobs == 1:
        results = [
            _evaluate_category(c, lexicon, config, dataset.root) for c in dataset.categories
        ]
    else:
        with ProcessPoolExecutor(
            max_workers=jobs,
            initializer=_init_worker,
            initargs=(lexicon, config, dataset.root),
        ) as pool:
            results = list(pool.map(_run_category, dataset.categories))

    stats, errored = [], []
    for category_stats, category_errors in results:
        stats.append(category_stats)
        errored += category_errors
    for message in errored:
        log.warning("skipped unreadable sample %s", message)

    meta = {
        "dataset": dataset.root.name,
        "dict_path": lexicon.source,
        "config_digest": config_digest(config),
        "channels": [c for c in CHANNELS if c in config.channels],
        "errored_samples": len(errored),
        "timestamp": timestamp,
    }
    return EvalReport(stats, meta)


def _rounded(value: Fraction) -> float:
    return float(round(value, RATE_PLACES))


def report_to_dict(report: EvalReport) -> dict:
    return {
        "meta": dict(report.meta),
        "categories": [
            {
                "category": s.category,
                "n_samples": s.n_samples,
                "counts": {c: s.counts[c] for c in COLUMNS},
                "rates": {c: _rounded(r) for c, r in s.rates.items()},
                "oov_samples": s.oov_samples,
            }
            for s in report.categories
        ],
        "aggregate": {
            "macro": {c: _rounded(r) for c, r in report.macro().items()},
            "micro": {c: _rounded(r) for c, r in report.micro().items()},
        },
    }


def report_from_dict(data: dict) -> EvalReport:
    stats = [
        CategoryStats(
            category=c["category"],
            n_samples=c["n_samples"],
            counts={k: c["counts"][k] for k in COLUMNS},
            oov_samples=c["oov_samples"],
        )
        for c in data["categories"]
    ]
    return EvalReport(stats, dict(data["meta"]))


def render_json(report: EvalReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def render_csv(report: EvalReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("category", "n_samples") + COLUMNS + ("oov_samples",))

    def fmt(rates):
        return [f"{float(rates[c]):.{RATE_PLACES}f}" for c in COLUMNS]

    for s in report.categories:
        writer.writerow([s.category, s.n_samples, *fmt(s.rates), s.oov_samples])
    writer.writerow([
        "__aggregate__",
        sum(s.n_samples for s in report.categories),
        *fmt(report.macro()),
        sum(s.oov_samples for s in report.categories),
    ])
    return buf.getvalue()


def write_report(report: EvalReport, fmt: str = "json", out: str | Path | None = None) -> str:
    """Serialize ``report`` as json or csv; writes to ``out`` when given."""
    if fmt == "json":
        text = render_json(report)
    elif fmt == "csv":
        text = render_csv(report)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
    return text


def dominance_violations(stats: CategoryStats, available: Mapping[str, bool]) -> list[str]:
    """List broken rate orderings for one category (empty when consistent)."""
    problems = []
    fused = stats.rate(FUSED)
    for channel in FUSION_CHANNELS:
        if fused < stats.rate(channel):
            problems.append(f"{stats.category}: fused < {channel}")
    base = stats.rate("baseline")
    for channel in FUSION_CHANNELS:
        if available.get(channel, True) and stats.rate(channel) < base:
            problems.append(f"{stats.category}: {channel} < baseline")
    return problems
