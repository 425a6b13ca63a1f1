"""Sentence segmentation, tokenization, stopword removal and synonym expansion."""

import itertools
import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .resources import load_shipped_list, read_word_list

Tokens = Tuple[str, ...]

DEFAULT_MAX_VARIANTS = 64

_PARAGRAPH_BREAK = re.compile(r"\n[ \t\r\f\v]*\n")
_SENTENCE_END = re.compile(r"[.!?]+(?=\s|$)")
_WHITESPACE = re.compile(r"\s+")
_OPENING_MARKS = "\"'„“”«»‚‘’([{"


@dataclass(frozen=True, slots=True)
class Sentence:
    """A segmented sentence with its tokens and character length."""

    text: str
    tokens: Tokens
    char_len: int

    @classmethod
    def from_text(cls, text: str) -> "Sentence":
        normalized = _WHITESPACE.sub(" ", text).strip()
        return cls(
            text=normalized,
            tokens=tuple(tokenize(normalized)),
            char_len=sum(1 for ch in normalized if not ch.isspace()),
        )


@dataclass(frozen=True)
class StopwordSet:
    """Lowercase stopwords for one language."""

    lang: str
    words: FrozenSet[str] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", frozenset(w.lower() for w in self.words))

    def __contains__(self, token: object) -> bool:
        return token in self.words

    @classmethod
    def for_language(cls, lang: str) -> "StopwordSet":
        """Shipped list for ``lang`` (empty for languages without one)."""
        return cls(lang=lang, words=load_shipped_list("stopwords", lang))

    @classmethod
    def from_file(cls, lang: str, path: Path) -> "StopwordSet":
        return cls(lang=lang, words=read_word_list(Path(path)))


@dataclass(frozen=True)
class SynonymLexicon:
    """Token -> synonyms, stored exactly as given (symmetry is not assumed)."""

    entries: Mapping[str, FrozenSet[str]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for token, synonyms in self.entries.items():
            if token in synonyms:
                raise ValueError(f"Token '{token}' lists itself as a synonym")

    def synonyms(self, token: str) -> FrozenSet[str]:
        return self.entries.get(token, frozenset())

    def __len__(self) -> int:
        return len(self.entries)


def load_synonyms(path: Path) -> SynonymLexicon:
    """
    Load a synonym lexicon from ``word<TAB>syn1,syn2,...`` lines.

    Self-references are dropped and repeated words are merged.
    """
    entries: dict = {}
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            word, _, rest = line.partition("\t")
            word = word.strip().lower()
            synonyms = {s.strip().lower() for s in rest.split(",") if s.strip()}
            synonyms.discard(word)
            if word and synonyms:
                entries.setdefault(word, set()).update(synonyms)
    return SynonymLexicon({w: frozenset(s) for w, s in entries.items()})


def load_abbreviations(lang: str, path: Optional[Path] = None) -> FrozenSet[str]:
    """Abbreviations that do not end a sentence."""
    if path is not None:
        return read_word_list(Path(path))
    return load_shipped_list("abbreviations", lang)


def _is_abbreviation(word: str, abbreviations: FrozenSet[str]) -> bool:
    word = word.lstrip(_OPENING_MARKS)
    if word in abbreviations:
        return True
    # "Dr." may open a sentence while the list holds "dr."
    return word[:1].lower() + word[1:] in abbreviations


def _starts_new_sentence(text: str, pos: int) -> bool:
    rest = text[pos:].lstrip()
    if not rest:
        return True
    rest = rest.lstrip(_OPENING_MARKS)
    return bool(rest) and rest[0].isupper()


def _segment_paragraph(paragraph: str, abbreviations: FrozenSet[str]) -> List[str]:
    pieces = []
    start = 0
    for match in _SENTENCE_END.finditer(paragraph):
        end = match.end()
        if not _starts_new_sentence(paragraph, end):
            continue
        if match.group() == ".":
            word_start = max(paragraph.rfind(" ", start, end), paragraph.rfind("\n", start, end)) + 1
            if _is_abbreviation(paragraph[word_start:end], abbreviations):
                continue
        pieces.append(paragraph[start:end])
        start = end
    pieces.append(paragraph[start:])
    return [p for p in pieces if p.strip()]


def segment_sentences(
    text: str, abbreviations: Iterable[str] = frozenset()
) -> List[Sentence]:
    """
    Split plain text into sentences.

    A sentence ends at ``.``, ``!`` or ``?`` followed by whitespace and a
    capital letter, or by the end of the text; a single ``.`` closing a
    listed abbreviation does not end one. Blank lines always do.
    """
    abbrevs = frozenset(abbreviations)
    sentences = []
    for paragraph in _PARAGRAPH_BREAK.split(text):
        for piece in _segment_paragraph(paragraph, abbrevs):
            sentences.append(Sentence.from_text(piece))
    return sentences


def _strip_token(raw: str) -> str:
    start, end = 0, len(raw)
    while start < end and unicodedata.category(raw[start])[0] == "P":
        start += 1
    while end > start and unicodedata.category(raw[end - 1])[0] == "P":
        end -= 1
    return raw[start:end]


def tokenize(sentence_text: str) -> List[str]:
    """Lowercase, split on whitespace, strip edge punctuation; inner hyphens stay."""
    tokens = []
    for raw in sentence_text.lower().split():
        token = _strip_token(raw)
        if token:
            tokens.append(token)
    return tokens


def remove_stopwords(tokens: Sequence[str], stops: StopwordSet) -> List[str]:
    return [t for t in tokens if t not in stops.words]


def expand_synonyms(
    tokens: Sequence[str],
    lex: SynonymLexicon,
    max_variants: int = DEFAULT_MAX_VARIANTS,
) -> List[Tokens]:
    """
    Enumerate sentence variants by substituting tokens with listed synonyms.

    Positions vary left-to-right with the rightmost position changing fastest,
    synonyms are tried in sorted order, and the original sentence always
    comes first. At most ``max_variants`` variants are produced.
    """
    if max_variants < 1:
        raise ValueError("max_variants must be at least 1")
    options = [(token, *sorted(lex.synonyms(token))) for token in tokens]
    return list(itertools.islice(itertools.product(*options), max_variants))


def join_tokens(tokens: Iterable[str]) -> str:
    return " ".join(tokens)
