"""Porter's suffix-stripping stemmer (the original 1980 rule set).

Within each step only the rule with the longest matching suffix is
considered; if its condition fails the step leaves the word alone.
Words of two letters or fewer are returned unchanged.
"""

from __future__ import annotations

from functools import lru_cache

_VOWELS = frozenset("aeiou")


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _cv_form(word: str) -> str:
    return "".join("c" if _is_consonant(word, i) else "v" for i in range(len(word)))


def measure(word: str) -> int:
    """Number of VC sequences in the ``[C](VC)^m[V]`` form of ``word``.

    >>> measure("tr"), measure("trouble"), measure("presid")
    (0, 1, 2)
    """
    form = _cv_form(word)
    return sum(1 for a, b in zip(form, form[1:]) if a == "v" and b == "c")


def _has_vowel(stem: str) -> bool:
    return "v" in _cv_form(stem)


def _ends_double_consonant(stem: str) -> bool:
    return len(stem) >= 2 and stem[-1] == stem[-2] and _is_consonant(stem, len(stem) - 1)


def _ends_cvc(stem: str) -> bool:
    # *o: consonant-vowel-consonant, final consonant not w, x or y
    if len(stem) < 3 or stem[-1] in "wxy":
        return False
    return _cv_form(stem)[-3:] == "cvc"


def _m_gt(n):
    return lambda stem: measure(stem) > n


_m0 = _m_gt(0)
_m1 = _m_gt(1)


def _apply(word: str, rules, condition):
    """Apply the longest-suffix rule of ``rules``.

    Returns ``(new_word, fired)``; ``fired`` is true only when the
    condition held and the replacement was made.
    """
    best = None
    for suffix, replacement in rules:
        if word.endswith(suffix) and (best is None or len(suffix) > len(best[0])):
            best = (suffix, replacement)
    if best is None:
        return word, False
    suffix, replacement = best
    stem = word[: len(word) - len(suffix)]
    if not condition(stem):
        return word, False
    return stem + replacement, True


_STEP1A = (("sses", "ss"), ("ies", "i"), ("ss", "ss"), ("s", ""))

_STEP2 = (
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
    ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
    ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
)

_STEP3 = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
)

_STEP4 = tuple((s, "") for s in (
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement", "ment",
    "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
))


def _step1a(word):
    return _apply(word, _STEP1A, lambda stem: True)[0]


def _step1b(word):
    if word.endswith("eed"):
        return _apply(word, (("eed", "ee"),), _m0)[0]
    for suffix in ("ed", "ing"):
        if word.endswith(suffix):
            stem = word[: -len(suffix)]
            if not _has_vowel(stem):
                return word
            return _step1b_tidy(stem)
    return word


def _step1b_tidy(stem):
    if stem.endswith(("at", "bl", "iz")):
        return stem + "e"
    if _ends_double_consonant(stem) and stem[-1] not in "lsz":
        return stem[:-1]
    if measure(stem) == 1 and _ends_cvc(stem):
        return stem + "e"
    return stem


def _step1c(word):
    if word.endswith("y") and _has_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


def _step4(word):
    def condition(stem):
        if not _m1(stem):
            return False
        if word[len(stem):] == "ion":
            return stem.endswith(("s", "t"))
        return True

    return _apply(word, _STEP4, condition)[0]


def _step5a(word):
    if not word.endswith("e"):
        return word
    stem = word[:-1]
    m = measure(stem)
    if m > 1 or (m == 1 and not _ends_cvc(stem)):
        return stem
    return word


def _step5b(word):
    if measure(word) > 1 and _ends_double_consonant(word) and word.endswith("l"):
        return word[:-1]
    return word


@lru_cache(maxsize=65536)
def stem(word: str) -> str:
    """Porter stem of a lowercase word, e.g. ``"president"`` -> ``"presid"``."""
    if len(word) <= 2:
        return word
    word = _step1a(word)
    word = _step1b(word)
    word = _step1c(word)
    word = _apply(word, _STEP2, _m0)[0]
    word = _apply(word, _STEP3, _m0)[0]
    word = _step4(word)
    word = _step5a(word)
    return _step5b(word)
