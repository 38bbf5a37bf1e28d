import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phonofuse.errors import NumeralError
from phonofuse.text_normalize import (
    DEFAULT_STOP_WORDS,
    NormalizeConfig,
    is_token,
    load_config,
    normalize,
    number_to_words,
    read_contractions,
    read_stop_words,
    remove_stop_words,
    tokenize,
)

num2words = pytest.importorskip("num2words").num2words


def oracle_words(n):
    # num2words says "one hundred and five", "twenty-one", "one thousand, two"
    text = num2words(n).replace("-", " ").replace(",", "")
    return [w for w in text.split() if w != "and"]


@pytest.mark.parametrize(
    "raw, expected",
    [
        ("", []),
        ("I am significant.", ["i", "am", "significant"]),
        ("couldn't stop", ["could", "not", "stop"]),
        ("Vice-President", ["vice", "president"]),
        ("#win! $5", ["win", "five"]),
        ("It’s 1,000 o'clock", ["it", "is", "one", "thousand", "of", "the", "clock"]),
        ("pi is 3.14", ["pi", "is", "three", "one", "four"]),
        ("john's", ["john", "s"]),
    ],
)
def test_tokenize(raw, expected):
    assert tokenize(raw) == expected


@pytest.mark.parametrize(
    "numeral, expected",
    [
        ("0", ["zero"]),
        ("21", ["twenty", "one"]),
        ("105", ["one", "hundred", "five"]),
        ("007", ["seven"]),
        ("1000000", ["one", "million"]),
        ("999999999", "nine hundred ninety nine million nine hundred ninety nine "
                      "thousand nine hundred ninety nine".split()),
    ],
)
def test_number_to_words_examples(numeral, expected):
    assert number_to_words(numeral) == expected


def test_number_to_words_matches_oracle_up_to_ten_thousand():
    mismatches = [n for n in range(10_001) if number_to_words(str(n)) != oracle_words(n)]
    assert mismatches == []


def test_number_to_words_matches_oracle_on_large_values():
    rng = random.Random(7)
    for n in [rng.randrange(10_000, 1_000_000_000) for _ in range(2000)]:
        assert number_to_words(str(n)) == oracle_words(n)


@pytest.mark.parametrize("bad", ["", "12a", "-3", "1000000000", "٣"])
def test_number_to_words_rejects(bad):
    with pytest.raises(NumeralError) as err:
        number_to_words(bad)
    assert repr(bad) in str(err.value)


def test_oversized_numeral_in_text_is_read_digitwise():
    assert tokenize("1234567890") == ["one", "two", "three", "four", "five",
                                      "six", "seven", "eight", "nine", "zero"]


@pytest.mark.parametrize(
    "tokens, expected",
    [
        (["null", "null", "a", "significant"], ["significant"]),
        (["i", "am", "significant"], ["significant"]),
        ([], []),
    ],
)
def test_remove_stop_words(tokens, expected):
    assert remove_stop_words(tokens, NormalizeConfig()) == expected


@pytest.mark.parametrize(
    "raw, expected",
    [
        ("a significant null", ("significant",)),
        ("Vice President", ("vice", "president")),
        ("the of an", ()),
    ],
)
def test_normalize(raw, expected):
    assert normalize(raw, NormalizeConfig(), "s1").tokens == expected


def test_function_words_and_markers_are_removed():
    line = ("significant significant its significance i am significant "
            "i have significant more significant null null significant")
    assert set(normalize(line).tokens) == {"significant", "significance"}


def test_marker_tokens_configurable():
    config = NormalizeConfig(remove_marker_tokens=frozenset())
    assert normalize("null significant", config).tokens == ("null", "significant")


def test_keeping_exempts_word():
    config = NormalizeConfig().keeping("about")
    assert "about" not in config.removed
    assert normalize("talk about it", config).tokens == ("talk", "about")


def test_config_validation():
    with pytest.raises(ValueError):
        NormalizeConfig(stop_words=frozenset({"The"}))
    with pytest.raises(ValueError):
        NormalizeConfig(contractions={"cant": "can not"})
    with pytest.raises(ValueError):
        NormalizeConfig(contractions={"can't": "can't"})


def test_default_lists_are_pinned():
    assert 140 <= len(DEFAULT_STOP_WORDS) <= 160
    assert {"a", "the", "an", "of", "like", "for", "its", "i", "am", "have", "more"} <= DEFAULT_STOP_WORDS
    assert len(NormalizeConfig().contractions) >= 40


def test_override_files(tmp_path):
    sw = tmp_path / "stop.txt"
    sw.write_text("# custom list\nfoo\nBAR  # trailing comment\n\n", encoding="utf-8")
    ct = tmp_path / "contractions.txt"
    ct.write_text("# comment\nfoo'd\tfoo would\n", encoding="utf-8")
    assert read_stop_words(sw) == {"foo", "bar"}
    assert read_contractions(ct) == {"foo'd": "foo would"}
    config = load_config(sw, ct)
    assert normalize("Foo'd bar the", config).tokens == ("would", "the")


def test_bad_contraction_file(tmp_path):
    ct = tmp_path / "c.txt"
    ct.write_text("can't can not\n", encoding="utf-8")
    with pytest.raises(ValueError):
        read_contractions(ct)


texts = st.text(
    alphabet=st.sampled_from(list("abcdefghijklmnopqrstuvwxyzABCXYZ0123456789 .,'-!#’\t\n")),
    max_size=80,
)


@settings(max_examples=300)
@given(texts)
def test_normalize_properties(raw):
    config = NormalizeConfig()
    tokens = normalize(raw, config).tokens
    assert all(is_token(t) for t in tokens)
    assert not set(tokens) & config.removed
    # idempotence
    assert normalize(" ".join(tokens), config).tokens == tokens


@settings(max_examples=300)
@given(st.lists(st.sampled_from(["cat", "dog", "the", "a", "null", "zebra", "Fish"]), max_size=15))
def test_tokens_keep_input_order(words):
    raw = " ".join(words)
    expected = [w.lower() for w in words if w.lower() not in NormalizeConfig().removed]
    assert list(normalize(raw).tokens) == expected
