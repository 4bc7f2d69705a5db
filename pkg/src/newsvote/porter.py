"""Porter stemmer for English.

Implements the classic 1980 suffix-stripping algorithm in the form used by
the author's reference implementation (the variant that the standard
conformance vocabulary was generated from): step 2 carries the amended
``bli -> ble`` rule and the extra ``logi -> log`` rule, and words of length
one or two are returned unchanged.

Stemming is NOT idempotent in general; callers must not re-stem output.
Input is expected to be lowercase; digits are treated as consonants, so
alphanumeric tokens pass through deterministically.
"""

from __future__ import annotations

_VOWELS = frozenset("aeiou")


def _is_cons(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return True if i == 0 else not _is_cons(word, i - 1)
    return True


def _measure(word: str, end: int) -> int:
    """Number of vowel->consonant transitions in word[:end] (the m value)."""
    m = 0
    in_vowel_run = False
    for i in range(end):
        if not _is_cons(word, i):
            in_vowel_run = True
        elif in_vowel_run:
            m += 1
            in_vowel_run = False
    return m


def _has_vowel(word: str, end: int) -> bool:
    for i in range(end):
        if not _is_cons(word, i):
            return True
    return False


def _ends_double_cons(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_cons(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    """True when the word ends consonant-vowel-consonant and the final
    consonant is not w, x or y (the *o condition)."""
    n = len(word)
    if n < 3:
        return False
    if not _is_cons(word, n - 1) or _is_cons(word, n - 2) or not _is_cons(word, n - 3):
        return False
    return word[-1] not in "wxy"


def _step1a(word: str) -> str:
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ies"):
        return word[:-2]
    if word.endswith("ss"):
        return word
    if word.endswith("s"):
        return word[:-1]
    return word


def _step1b(word: str) -> str:
    if word.endswith("eed"):
        if _measure(word, len(word) - 3) > 0:
            return word[:-1]
        return word
    if word.endswith("ed") and _has_vowel(word, len(word) - 2):
        word = word[:-2]
    elif word.endswith("ing") and _has_vowel(word, len(word) - 3):
        word = word[:-3]
    else:
        return word
    # cleanup after a successful ed/ing removal
    if word.endswith(("at", "bl", "iz")):
        return word + "e"
    if _ends_double_cons(word) and word[-1] not in "lsz":
        return word[:-1]
    if _measure(word, len(word)) == 1 and _ends_cvc(word):
        return word + "e"
    return word


def _step1c(word: str) -> str:
    if word.endswith("y") and _has_vowel(word, len(word) - 1):
        return word[:-1] + "i"
    return word


# (suffix, replacement) pairs; within a step only the longest matching
# suffix is considered, and the rule fires only when m(stem) clears the
# step's threshold.
_STEP2_RULES = (
    ("ational", "ate"),
    ("tional", "tion"),
    ("enci", "ence"),
    ("anci", "ance"),
    ("izer", "ize"),
    ("bli", "ble"),
    ("alli", "al"),
    ("entli", "ent"),
    ("eli", "e"),
    ("ousli", "ous"),
    ("ization", "ize"),
    ("ation", "ate"),
    ("ator", "ate"),
    ("alism", "al"),
    ("iveness", "ive"),
    ("fulness", "ful"),
    ("ousness", "ous"),
    ("aliti", "al"),
    ("iviti", "ive"),
    ("biliti", "ble"),
    ("logi", "log"),
)

_STEP3_RULES = (
    ("icate", "ic"),
    ("ative", ""),
    ("alize", "al"),
    ("iciti", "ic"),
    ("ical", "ic"),
    ("ful", ""),
    ("ness", ""),
)

_STEP4_SUFFIXES = (
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
    "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
)


def _longest_match(word: str, rules) -> tuple[str, str] | None:
    best = None
    for suffix, repl in rules:
        if word.endswith(suffix):
            if best is None or len(suffix) > len(best[0]):
                best = (suffix, repl)
    return best


def _apply_table(word: str, rules, min_measure: int) -> str:
    match = _longest_match(word, rules)
    if match is None:
        return word
    suffix, repl = match
    stem_len = len(word) - len(suffix)
    if _measure(word, stem_len) > min_measure - 1:
        return word[:stem_len] + repl
    return word


def _step4(word: str) -> str:
    best = None
    for suffix in _STEP4_SUFFIXES:
        if word.endswith(suffix):
            if best is None or len(suffix) > len(best):
                best = suffix
    if best is None:
        return word
    stem_len = len(word) - len(best)
    if _measure(word, stem_len) <= 1:
        return word
    if best == "ion" and (stem_len == 0 or word[stem_len - 1] not in "st"):
        return word
    return word[:stem_len]


def _step5a(word: str) -> str:
    if word.endswith("e"):
        m = _measure(word, len(word))
        if m > 1:
            return word[:-1]
        if m == 1 and not _ends_cvc(word[:-1]):
            return word[:-1]
    return word


def _step5b(word: str) -> str:
    if word.endswith("l") and _ends_double_cons(word) and _measure(word, len(word)) > 1:
        return word[:-1]
    return word


def porter_stem(word: str) -> str:
    """Stem one lowercase token. Words of length <= 2 pass through."""
    if len(word) <= 2:
        return word
    word = _step1a(word)
    word = _step1b(word)
    word = _step1c(word)
    word = _apply_table(word, _STEP2_RULES, 1)
    word = _apply_table(word, _STEP3_RULES, 1)
    word = _step4(word)
    word = _step5a(word)
    word = _step5b(word)
    return word


class CachingStemmer:
    """porter_stem with a memo table; corpora repeat words heavily."""

    def __init__(self):
        self._cache: dict[str, str] = {}

    def __call__(self, word: str) -> str:
        stem = self._cache.get(word)
        if stem is None:
            stem = porter_stem(word)
            self._cache[word] = stem
        return stem
