"""Annotated articles, question-answer pairs, and target-word classification.

External taggers are decoupled behind a JSONL format; ``fallback_tag`` is a
deterministic rule-based substitute so the test suite needs no ML models.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources as importlib_resources
from pathlib import Path
from typing import IO, Iterable

from .entity import KnowledgeBase, default_kb
from .errors import NoTargetError, ParseError, ValidationError
from .numeric import recognize_numeric

POS_TAGS = (
    "noun", "phrasal-noun", "verb", "phrasal-verb", "adjective", "adverb",
    "number", "determiner", "other",
)
ENTITY_TAGS = ("person", "location", "organization", "none")
ROLES = (
    "subject", "object", "adjective-of-subject", "adjective-of-object",
    "predicate", "adverb",
)

TARGET_TYPES = (
    "T1Temporal", "T1Numeric", "T2Person", "T2Location", "T2Organization",
    "T3Noun", "T3Adjective", "T3Verb", "T3Adverb",
)
TYPE_RANK = {t: i for i, t in enumerate(TARGET_TYPES)}
ROLE_RANK = {r: i for i, r in enumerate(ROLES)}
NO_ROLE_RANK = len(ROLES)

_ENTITY_TO_TYPE = {"person": "T2Person", "location": "T2Location", "organization": "T2Organization"}
_POS_TO_TYPE = {
    "noun": "T3Noun", "phrasal-noun": "T3Noun",
    "adjective": "T3Adjective",
    "verb": "T3Verb", "phrasal-verb": "T3Verb",
    "adverb": "T3Adverb",
}
_TEMPORAL_KINDS = {"weekday", "month", "time-of-day"}


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str
    entity: str = "none"
    start: int = 0
    end: int = 0


@dataclass(frozen=True)
class RoleSpan:
    role: str
    first_token: int
    last_token: int


@dataclass(frozen=True)
class AnnotatedSentence:
    text: str
    tokens: tuple[Token, ...]
    roles: tuple[RoleSpan, ...] = ()


@dataclass(frozen=True)
class AnnotatedArticle:
    article_id: str
    sentences: tuple[AnnotatedSentence, ...]


@dataclass(frozen=True)
class QAPair:
    question: str
    answer_text: str
    article_id: str
    answer_location: tuple[int, int, int] | None = None  # (sentence, first, last)


@dataclass(frozen=True)
class TargetWord:
    token_range: tuple[int, int]  # inclusive indices into the answer's tokens
    surface: str
    target_type: str
    role: str | None = None
    lemma: str | None = None

    def preference_key(self, position: int) -> tuple[int, int, int]:
        role_rank = ROLE_RANK[self.role] if self.role else NO_ROLE_RANK
        return (role_rank, TYPE_RANK[self.target_type], position)


def _validate_sentence(text: str, tokens: list[Token], roles: list[RoleSpan], line: int) -> AnnotatedSentence:
    prev_end = 0
    for tok in tokens:
        if tok.pos not in POS_TAGS:
            raise ValidationError(f"line {line}: unknown pos {tok.pos!r}")
        if tok.entity not in ENTITY_TAGS:
            raise ValidationError(f"line {line}: unknown entity {tok.entity!r}")
        if not (0 <= tok.start < tok.end <= len(text)):
            raise ValidationError(
                f"line {line}: token span [{tok.start}, {tok.end}) outside sentence of length {len(text)}"
            )
        if tok.start < prev_end:
            raise ValidationError(f"line {line}: token {tok.surface!r} overlaps its predecessor")
        if text[tok.start:tok.end] != tok.surface:
            raise ValidationError(
                f"line {line}: surface {tok.surface!r} does not match text slice "
                f"{text[tok.start:tok.end]!r}"
            )
        prev_end = tok.end
    for span in roles:
        if span.role not in ROLES:
            raise ValidationError(f"line {line}: unknown role {span.role!r}")
        if not (0 <= span.first_token <= span.last_token < len(tokens)):
            raise ValidationError(f"line {line}: role span outside token range")
    return AnnotatedSentence(text=text, tokens=tuple(tokens), roles=tuple(roles))


def _parse_sentence_obj(obj: dict, line: int) -> AnnotatedSentence:
    for key in ("text", "tokens"):
        if key not in obj:
            raise ParseError("sentence object missing key", line=line, field=key)
    tokens = []
    for i, raw in enumerate(obj["tokens"]):
        for key in ("surface", "lemma", "pos", "entity", "start", "end"):
            if key not in raw:
                raise ParseError(f"token #{i} missing key", line=line, field=key)
        tokens.append(Token(
            surface=raw["surface"], lemma=raw["lemma"], pos=raw["pos"],
            entity=raw["entity"], start=raw["start"], end=raw["end"],
        ))
    roles = []
    for i, raw in enumerate(obj.get("roles", ())):
        for key in ("role", "first_token", "last_token"):
            if key not in raw:
                raise ParseError(f"role #{i} missing key", line=line, field=key)
        roles.append(RoleSpan(role=raw["role"], first_token=raw["first_token"],
                              last_token=raw["last_token"]))
    return _validate_sentence(obj["text"], tokens, roles, line)


def _iter_lines(source: str | Path | IO[str]) -> list[str]:
    if hasattr(source, "read"):
        return source.read().splitlines()
    return Path(source).read_text(encoding="utf-8").splitlines()


def _parse_json_line(line: str, lineno: int) -> dict:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object", line=lineno)
    return obj


def load_articles(source: str | Path | IO[str]) -> dict[str, AnnotatedArticle]:
    """Read a file holding one or more articles (header line, then sentences)."""
    articles: dict[str, AnnotatedArticle] = {}
    current_id: str | None = None
    sentences: list[AnnotatedSentence] = []

    def flush(lineno: int) -> None:
        nonlocal current_id, sentences
        if current_id is None:
            return
        if not sentences:
            raise ParseError(f"article {current_id!r} has no sentences", line=lineno)
        articles[current_id] = AnnotatedArticle(current_id, tuple(sentences))
        current_id, sentences = None, []

    lineno = 0
    for lineno, line in enumerate(_iter_lines(source), start=1):
        if not line.strip():
            continue
        obj = _parse_json_line(line, lineno)
        if "article_id" in obj and "text" not in obj:
            flush(lineno)
            if not obj["article_id"]:
                raise ParseError("article_id must be non-empty", line=lineno, field="article_id")
            if obj["article_id"] in articles:
                raise ParseError(f"duplicate article_id {obj['article_id']!r}", line=lineno)
            current_id = obj["article_id"]
        else:
            if current_id is None:
                raise ParseError("sentence line before any article header", line=lineno)
            sentences.append(_parse_sentence_obj(obj, lineno))
    flush(lineno + 1)
    if not articles:
        raise ParseError("no articles found", line=1)
    return articles


def parse_article(source: str | Path | IO[str]) -> AnnotatedArticle:
    """Read a single-article document; errors if the file holds several."""
    articles = load_articles(source)
    if len(articles) != 1:
        raise ParseError(f"expected one article, found {len(articles)}; use load_articles")
    return next(iter(articles.values()))


def load_qaps(source: str | Path | IO[str]) -> list[QAPair]:
    qaps: list[QAPair] = []
    for lineno, line in enumerate(_iter_lines(source), start=1):
        if not line.strip():
            continue
        obj = _parse_json_line(line, lineno)
        for key in ("article_id", "question", "answer_text"):
            if key not in obj:
                raise ParseError("QAP missing key", line=lineno, field=key)
        if not obj["answer_text"]:
            raise ParseError("answer_text must be non-empty", line=lineno, field="answer_text")
        loc_keys = ("answer_sentence", "answer_first_token", "answer_last_token")
        present = [k for k in loc_keys if k in obj]
        if present and len(present) != 3:
            raise ParseError(
                f"answer location needs all of {loc_keys}, found {present}", line=lineno
            )
        location = tuple(obj[k] for k in loc_keys) if len(present) == 3 else None
        qaps.append(QAPair(
            question=obj["question"], answer_text=obj["answer_text"],
            article_id=obj["article_id"], answer_location=location,
        ))
    return qaps


# ---------------------------------------------------------------------------
# Fallback tagger
# ---------------------------------------------------------------------------

_SENTENCE_SPLIT_RE = re.compile(r"(?<=[.!?])\s+")
_TOKEN_RE = re.compile(
    r"\d{1,2}:[0-5]\d"               # clock times
    r"|\d{1,3}(?:,\d{3})+"           # grouped numbers
    r"|\d+(?:\.\d+)?(?:st|nd|rd|th)?"  # digits, decimals, digit ordinals
    r"|[A-Za-z]+(?:[-'’][A-Za-z]+)*"  # words incl. hyphen/apostrophe compounds
    r"|[^\sA-Za-z0-9]"               # single punctuation marks
)

_DETERMINERS = {
    "the", "a", "an", "this", "that", "these", "those", "no", "every", "each",
    "some", "any", "his", "her", "its", "their", "my", "our", "your", "many",
    "few", "several", "all", "both", "much", "most",
}
_PRONOUNS = {
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "them", "us",
    "myself", "yourself", "himself", "herself", "itself", "ourselves",
    "themselves", "someone", "anyone", "everyone", "something", "anything",
    "everything", "who", "whom", "what", "which", "one",
}
_CLOSED_OTHER = {
    "of", "in", "on", "at", "to", "from", "with", "by", "for", "as", "into",
    "onto", "over", "under", "about", "and", "or", "but", "nor", "so", "yet",
    "if", "when", "while", "because", "than", "that", "whether", "be", "am",
    "is", "are", "was", "were", "been", "being", "can", "could", "will",
    "would", "shall", "should", "may", "might", "must", "do", "does", "did",
    "has", "have", "had", "not", "there", "up", "down", "out", "off", "least",
}

_SUFFIX_POS = (
    ("ly", "adverb"),
    ("tion", "noun"), ("sion", "noun"), ("ness", "noun"), ("ment", "noun"),
    ("ity", "noun"), ("ance", "noun"), ("ence", "noun"), ("ism", "noun"),
    ("ous", "adjective"), ("ful", "adjective"), ("ive", "adjective"),
    ("able", "adjective"), ("ible", "adjective"), ("ic", "adjective"),
    ("al", "adjective"),
    ("ize", "verb"), ("ise", "verb"), ("ing", "verb"), ("ed", "verb"),
)


def _load_default_lexicon() -> dict:
    ref = importlib_resources.files("distractorgen").joinpath("data/lexicon.json")
    return json.loads(ref.read_text(encoding="utf-8"))


_DEFAULT_LEXICON: dict | None = None


def _lexicon() -> dict:
    global _DEFAULT_LEXICON
    if _DEFAULT_LEXICON is None:
        _DEFAULT_LEXICON = _load_default_lexicon()
    return _DEFAULT_LEXICON


def _pos_for_word(word: str, lexicon: dict) -> str:
    low = word.casefold()
    if low in _PRONOUNS:
        return "other"
    if low in _DETERMINERS:
        return "determiner"
    if low in _CLOSED_OTHER:
        return "other"
    words = lexicon.get("words", {})
    if low in words:
        return words[low]
    if not word[:1].isalpha():
        return "other"
    for suffix, pos in _SUFFIX_POS:
        if low.endswith(suffix) and len(low) > len(suffix) + 2:
            return pos
    return "noun"


def fallback_tag(
    raw: str,
    kb: KnowledgeBase | None = None,
    lexicon: dict | None = None,
    article_id: str = "inline",
) -> AnnotatedArticle:
    """Deterministic rule-based annotation of plain text (no role spans)."""
    if not raw or not raw.strip():
        raise ValidationError("empty input")
    kb = kb if kb is not None else default_kb()
    lexicon = lexicon if lexicon is not None else _lexicon()
    gazetteer = kb.gazetteer()
    phrases = {k.casefold(): v for k, v in lexicon.get("phrases", {}).items()}
    max_gaz_len = max((len(k.split()) for k in gazetteer), default=1)
    max_phrase_len = max((len(k.split()) for k in phrases), default=1)

    sentences: list[AnnotatedSentence] = []
    for sent_text in _SENTENCE_SPLIT_RE.split(raw.strip()):
        if not sent_text:
            continue
        matches = list(_TOKEN_RE.finditer(sent_text))
        surfaces = [m.group(0) for m in matches]
        pos_tags = []
        entities = ["none"] * len(surfaces)

        # Entity runs from the gazetteer: longest title-cased match wins.
        i = 0
        while i < len(surfaces):
            hit_len = 0
            hit_cat = ""
            if surfaces[i][:1].isupper():
                for run in range(min(max_gaz_len, len(surfaces) - i), 0, -1):
                    window = surfaces[i:i + run]
                    if not all(w[:1].isupper() for w in window):
                        continue
                    cat = gazetteer.get(" ".join(window).casefold())
                    if cat:
                        hit_len, hit_cat = run, cat
                        break
            if hit_len:
                for k in range(i, i + hit_len):
                    entities[k] = hit_cat
                i += hit_len
            else:
                i += 1

        # Phrasal runs from the lexicon.
        phrase_pos = [""] * len(surfaces)
        i = 0
        while i < len(surfaces):
            hit_len = 0
            hit_pos = ""
            for run in range(min(max_phrase_len, len(surfaces) - i), 1, -1):
                pos = phrases.get(" ".join(surfaces[i:i + run]).casefold())
                if pos:
                    hit_len, hit_pos = run, pos
                    break
            if hit_len:
                for k in range(i, i + hit_len):
                    phrase_pos[k] = hit_pos
                i += hit_len
            else:
                i += 1

        for idx, surface in enumerate(surfaces):
            if entities[idx] != "none":
                pos_tags.append("noun")
            elif recognize_numeric(surface) is not None:
                pos_tags.append("number")
            elif phrase_pos[idx]:
                pos_tags.append(phrase_pos[idx])
            else:
                pos_tags.append(_pos_for_word(surface, lexicon))

        tokens = [
            Token(surface=s, lemma=s.casefold(), pos=p, entity=e,
                  start=m.start(), end=m.end())
            for s, p, e, m in zip(surfaces, pos_tags, entities, matches)
        ]
        sentences.append(AnnotatedSentence(text=sent_text, tokens=tuple(tokens)))
    if not sentences:
        raise ValidationError("no sentences found")
    return AnnotatedArticle(article_id=article_id, sentences=tuple(sentences))


# ---------------------------------------------------------------------------
# Target classification
# ---------------------------------------------------------------------------

def align_token_spans(text: str, surfaces: Iterable[str]) -> list[tuple[int, int]]:
    """Character spans of each surface inside ``text``; the surfaces must
    concatenate to the text modulo whitespace."""
    spans: list[tuple[int, int]] = []
    pos = 0
    for surface in surfaces:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if not text.startswith(surface, pos):
            raise ValidationError(
                f"token {surface!r} does not align with text at offset {pos}: {text!r}"
            )
        spans.append((pos, pos + len(surface)))
        pos += len(surface)
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if pos != len(text):
        raise ValidationError(f"text has unmatched trailing content: {text[pos:]!r}")
    return spans


def answer_tokens(
    qap: QAPair,
    article: AnnotatedArticle,
    kb: KnowledgeBase | None = None,
) -> tuple[list[Token], list[RoleSpan], int]:
    """Tokens of the answer plus the covering sentence's role spans and the
    answer's first-token offset within that sentence (−1 when fallback-tagged)."""
    if qap.answer_location is not None:
        sent_idx, first, last = qap.answer_location
        if not (0 <= sent_idx < len(article.sentences)):
            raise ValidationError(f"answer sentence {sent_idx} out of range")
        sentence = article.sentences[sent_idx]
        if not (0 <= first <= last < len(sentence.tokens)):
            raise ValidationError(f"answer tokens [{first}, {last}] out of range")
        tokens = list(sentence.tokens[first:last + 1])
        align_token_spans(qap.answer_text, [t.surface for t in tokens])
        return tokens, list(sentence.roles), first
    tagged = fallback_tag(qap.answer_text, kb=kb)
    tokens = [t for sentence in tagged.sentences for t in sentence.tokens]
    return tokens, [], -1


def _role_for(first: int, last: int, roles: list[RoleSpan]) -> str | None:
    """Narrowest role span containing token range [first, last] (sentence coords)."""
    best: RoleSpan | None = None
    for span in roles:
        if span.first_token <= first and last <= span.last_token:
            if best is None or (span.last_token - span.first_token) < (best.last_token - best.first_token):
                best = span
    return best.role if best else None


def classify_targets(
    qap: QAPair,
    article: AnnotatedArticle,
    kb: KnowledgeBase | None = None,
) -> list[TargetWord]:
    """All substitutable answer spans, in replacement-preference order."""
    tokens, roles, sent_offset = answer_tokens(qap, article, kb=kb)
    spans = align_token_spans(qap.answer_text, [t.surface for t in tokens])

    raw: list[tuple[int, TargetWord]] = []
    used = [False] * len(tokens)

    def add(first: int, last: int, target_type: str) -> None:
        for k in range(first, last + 1):
            used[k] = True
        surface = qap.answer_text[spans[first][0]:spans[last][1]]
        role = None
        if sent_offset >= 0 and roles:
            role = _role_for(sent_offset + first, sent_offset + last, roles)
        raw.append((first, TargetWord(
            token_range=(first, last), surface=surface, target_type=target_type,
            role=role, lemma=tokens[first].lemma if first == last else None,
        )))

    i = 0
    while i < len(tokens):
        tok = tokens[i]
        # Entity runs first: a tagged entity outranks its POS.
        if tok.entity in _ENTITY_TO_TYPE:
            j = i
            while j + 1 < len(tokens) and tokens[j + 1].entity == tok.entity:
                j += 1
            add(i, j, _ENTITY_TO_TYPE[tok.entity])
            i = j + 1
            continue
        # Numeric targets, including "X to Y" ranges spanning three tokens.
        if tok.pos != "verb":
            if (
                i + 2 < len(tokens)
                and tokens[i + 1].surface.casefold() in ("to", "–", "-")
                and tokens[i + 2].entity == "none"
            ):
                run_surface = qap.answer_text[spans[i][0]:spans[i + 2][1]]
                hit = recognize_numeric(run_surface)
                if hit is not None and hit.kind == "range":
                    add(i, i + 2, "T1Temporal" if hit.surface_format.endpoint_kind in _TEMPORAL_KINDS else "T1Numeric")
                    i += 3
                    continue
            hit = recognize_numeric(tok.surface)
            if hit is not None and tok.pos in ("number", "noun", "adjective", "other"):
                kind = hit.surface_format.endpoint_kind if hit.kind == "range" else hit.kind
                add(i, i, "T1Temporal" if kind in _TEMPORAL_KINDS else "T1Numeric")
                i += 1
                continue
        # Phrasal runs collapse into a single target.
        if tok.pos in ("phrasal-noun", "phrasal-verb"):
            j = i
            while j + 1 < len(tokens) and tokens[j + 1].pos == tok.pos:
                j += 1
            add(i, j, _POS_TO_TYPE[tok.pos])
            i = j + 1
            continue
        if tok.pos in _POS_TO_TYPE:
            add(i, i, _POS_TO_TYPE[tok.pos])
        i += 1

    if not raw:
        raise NoTargetError(f"answer {qap.answer_text!r} has no substitutable token")
    raw.sort(key=lambda item: item[1].preference_key(item[0]))
    return [target for _, target in raw]
