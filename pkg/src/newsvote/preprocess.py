"""Text normalization: URL stripping, punctuation removal, tokenization,
stopword filtering and stemming.

The pipeline order is fixed: URL removal, then punctuation removal and
lowercasing, then whitespace tokenization, then stopword filtering, then
stemming.  Stopwords are matched against the un-stemmed token; stemming
last means the stopword list never has to anticipate stemmed forms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .porter import CachingStemmer, porter_stem

_URL_RE = re.compile(r"(?:https?://|www\.)\S*")
_NON_ALNUM_RE = re.compile(r"[^A-Za-z0-9\s]")
_WS_RE = re.compile(r"\s+")
_TOKEN_RE = re.compile(r"[a-z0-9]+")


def _load_builtin_stopwords() -> frozenset[str]:
    text = resources.files("newsvote.data").joinpath("stopwords_english.txt").read_text("utf-8")
    return frozenset(_parse_stopword_lines(text.splitlines()))


def _parse_stopword_lines(lines) -> set[str]:
    terms = set()
    for line in lines:
        term = line.split("#", 1)[0].strip().lower()
        if not term:
            continue
        if not _TOKEN_RE.fullmatch(term):
            raise ValueError(f"invalid stopword {term!r}: must be lowercase alphanumeric")
        terms.add(term)
    return terms


def load_stopwords(path: str) -> frozenset[str]:
    """Read a stopword file: one term per line, '#' starts a comment."""
    with open(path, encoding="utf-8") as f:
        return frozenset(_parse_stopword_lines(f))


BUILTIN_STOPWORDS = _load_builtin_stopwords()


@dataclass(frozen=True)
class PreprocessConfig:
    remove_urls: bool = True
    remove_stopwords: bool = True
    stem: bool = True
    remove_names: bool = False
    stopword_list: frozenset[str] = BUILTIN_STOPWORDS
    min_token_len: int = 2
    include_title: bool = True
    include_author: bool = True
    include_body: bool = True

    def __post_init__(self):
        if self.min_token_len < 1:
            raise ValueError("min_token_len must be >= 1")
        for term in self.stopword_list:
            if not term or not _TOKEN_RE.fullmatch(term):
                raise ValueError(f"invalid stopword {term!r}")


@dataclass(frozen=True)
class TokenizedDocument:
    doc_id: int
    tokens: tuple[str, ...]
    label: int | None = None


def strip_capitalized_tokens(raw: str) -> str:
    """Drop capitalized words that do not start a sentence (crude proper-name
    filter, off by default). Sentence starts are the first word of the text
    and any word following ., ! or ?."""
    out = []
    sentence_start = True
    for tok in raw.split():
        first_alpha = next((c for c in tok if c.isalpha()), "")
        is_capitalized = first_alpha.isupper()
        if sentence_start or not is_capitalized:
            out.append(tok)
        sentence_start = tok.rstrip('"\')]').endswith((".", "!", "?"))
    return " ".join(out)


def sanitize(raw: str, config: PreprocessConfig = PreprocessConfig()) -> str:
    """Normalize raw text to lowercase alphanumeric words separated by
    single spaces. URLs (http://, https://, www. up to whitespace) are
    removed first when enabled. Idempotent."""
    text = raw
    if config.remove_urls:
        text = _URL_RE.sub(" ", text)
    text = _NON_ALNUM_RE.sub(" ", text)
    text = text.lower()
    return _WS_RE.sub(" ", text).strip()


def tokenize(clean: str, min_token_len: int = 2) -> list[str]:
    """Split sanitized text on whitespace, dropping short tokens."""
    return [t for t in clean.split() if len(t) >= min_token_len]


def preprocess_text(raw: str, config: PreprocessConfig = PreprocessConfig(),
                    stemmer=porter_stem) -> list[str]:
    """Full cleaning pipeline for one piece of raw text."""
    if config.remove_names:
        raw = strip_capitalized_tokens(raw)
    tokens = tokenize(sanitize(raw, config), config.min_token_len)
    if config.remove_stopwords:
        tokens = [t for t in tokens if t not in config.stopword_list]
    if config.stem:
        tokens = [stemmer(t) for t in tokens]
        tokens = [t for t in tokens if len(t) >= config.min_token_len]
    return tokens


def preprocess_document(doc, config: PreprocessConfig = PreprocessConfig(),
                        stemmer=porter_stem) -> TokenizedDocument:
    """Fuse a document's text fields and run the cleaning pipeline."""
    parts = []
    if config.include_title and doc.title:
        parts.append(doc.title)
    if config.include_author and doc.author:
        parts.append(doc.author)
    if config.include_body and doc.body:
        parts.append(doc.body)
    tokens = preprocess_text(" ".join(parts), config, stemmer)
    return TokenizedDocument(doc_id=doc.id, tokens=tuple(tokens), label=doc.label)


def preprocess_corpus(docs, config: PreprocessConfig = PreprocessConfig()) -> list[TokenizedDocument]:
    """Preprocess a document sequence with a shared stem cache."""
    stemmer = CachingStemmer() if config.stem else porter_stem
    return [preprocess_document(d, config, stemmer) for d in docs]
