"""Exit criteria. Each test records a PASS/FAIL line printed at the end of the run."""

import io
import itertools
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from importlib import resources

from phonofuse.evaluation import (
    _rounded,
    dominance_violations,
    evaluate,
    evaluate_texts,
    load_dataset,
    render_json,
)
from phonofuse.matcher import (
    BASELINE,
    FUSION_CHANNELS,
    ChannelResult,
    DetectionOutcome,
    baseline_count,
    keyword_needles,
    pattern_count,
)
from phonofuse.phonology import STAGE_I, prune
from phonofuse.pronlex import load_lexicon, parse_cmudict, strip_stress
from phonofuse.stemmer import stem
from phonofuse.synthetic import generate_corpus

from .conftest import ACCEPTANCE_RESULTS, CORPUS, FIXTURES, read_tsv, real_cmudict_path
from .test_matcher import PATTERN_ALPHABET, brute_force_count


@contextmanager
def criterion(key, title):
    ACCEPTANCE_RESULTS[key] = (False, title)
    yield
    ACCEPTANCE_RESULTS[key] = (True, title)


def test_ac1_golden_stemming():
    with criterion("AC1", "golden stems + 100-word reference fixture, < 1 s"):
        stem.cache_clear()
        start = time.perf_counter()
        golden = {"significant": "signific", "significance": "signific",
                  "president": "presid", "absolutely": "absolut"}
        assert {w: stem(w) for w in golden} == golden
        fixture = read_tsv("porter_reference.tsv")
        assert len(fixture) == 100
        assert [stem(w) for w, _ in fixture] == [s for _, s in fixture]
        assert time.perf_counter() - start < 1.0


def test_ac2_stage_one_pruning(mini_lexicon):
    with criterion("AC2", "vowel+plosive patterns AAT / AGIAT / AE"):
        expected = {"announced": ("A", "A", "T"),
                    "agreement": ("A", "G", "I", "A", "T"),
                    "affairs": ("A", "E")}
        for word, pattern in expected.items():
            symbols = strip_stress(mini_lexicon.lookup(word).phonemes)
            assert prune(symbols, STAGE_I) == pattern


def test_ac3_baseline_fixture():
    with criterion("AC3", "sliding-window baseline counts 'significant' twice"):
        tokens = ["significance", "significant", "null", "null", "a", "significant"]
        assert baseline_count(tokens, "significant") == 2


def test_ac4_phoneme_lookup(mini_lexicon):
    with criterion("AC4", "about -> AH0 B AW1 T; lexicon entry counts"):
        assert str(mini_lexicon.lookup("about")) == "AH0 B AW1 T"
        raw = resources.files("phonofuse").joinpath("data").joinpath("mini_cmudict.txt").read_bytes()
        entry_lines = [ln for ln in raw.decode().splitlines() if ln.strip() and not ln.startswith(";;;")]
        lexicon, report = parse_cmudict(io.BytesIO(raw))
        assert report.entries == lexicon.entry_count() == len(entry_lines)
        assert report.skipped == 0
        path = real_cmudict_path()
        if path is not None:
            real, _ = load_lexicon(path)
            assert len(real) >= 120_000
            assert str(real.lookup("about")) == "AH0 B AW1 T"


def test_ac5_dominance_on_synthetic_corpora(mini_lexicon):
    with criterion("AC5", "dominance on 200 seeded synthetic corpora, 0 violations, < 60 s"):
        start = time.perf_counter()
        rng = random.Random(20201)
        violations = []
        for _ in range(200):
            corpus = generate_corpus(rng.randrange(2**32), n_samples=rng.randint(5, 20))
            for stats in evaluate_texts(corpus, mini_lexicon):
                needles = keyword_needles(stats.category, mini_lexicon)
                available = {c: bool(n) for c, n in needles.items()}
                violations += dominance_violations(stats, available)
        assert violations == []
        assert time.perf_counter() - start < 60


def test_ac6_fusion_truth_table():
    with criterion("AC6", "fused == OR over available fusion channels, exhaustive"):
        states = [(0, False), (0, True), (1, True)]
        checked = 0
        for combo in itertools.product(states, repeat=len(FUSION_CHANNELS) + 1):
            results = {
                channel: ChannelResult(channel, count, available)
                for channel, (count, available) in zip((BASELINE,) + FUSION_CHANNELS, combo)
            }
            expected = any(count and available for count, available in combo[1:])
            assert DetectionOutcome("kw", "s", results).fused_detected == expected
            checked += 1
        assert checked == 81


def test_ac7_pattern_count_oracle():
    with criterion("AC7", "pattern_count == brute-force scan on 1,000 random pairs"):
        rng = random.Random(7)
        for _ in range(1000):
            alphabet = rng.sample(PATTERN_ALPHABET, rng.randint(1, 4))
            stream = [rng.choice(alphabet) for _ in range(rng.randint(0, 50))]
            needle = [rng.choice(alphabet) for _ in range(rng.randint(1, 5))]
            assert pattern_count(stream, needle) == brute_force_count(stream, needle)


def test_ac8_golden_report(mini_lexicon):
    with criterion("AC8", "fixture corpus report byte-identical to hand-computed file"):
        report = evaluate(load_dataset(CORPUS), mini_lexicon)
        assert render_json(report) == (FIXTURES / "expected_report.json").read_text()


def test_ac9_jobs_determinism(tmp_path):
    with criterion("AC9", "evaluate --jobs 1 and --jobs 8 produce identical bytes"):
        outputs = []
        for jobs in ("1", "8"):
            out = tmp_path / f"report-{jobs}.json"
            proc = subprocess.run(
                [sys.executable, "-m", "phonofuse", "evaluate", "--dataset", str(CORPUS),
                 "--jobs", jobs, "--out", str(out)],
                capture_output=True, text=True,
            )
            assert proc.returncode == 0, proc.stderr
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]


def test_ac10_corpus_scale_rates_not_asserted():
    with criterion("AC10", "LRW-scale rates: no target asserted; 4-place rate rendering only"):
        assert _rounded(Fraction(3296, 10000)) == 0.3296
        assert _rounded(Fraction(1, 6)) == 0.1667
