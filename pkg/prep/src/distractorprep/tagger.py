"""Tagger adapters producing the annotated-article line format.

The builtin adapter is a small deterministic rule tagger good enough for toy
corpora; real POS/NE/SRL tools plug in through the same interface by emitting
the same sentence dictionaries.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Protocol

BUILTIN_TAGGER_ID = "builtin-rules"
BUILTIN_TAGGER_VERSION = "1.0"

_SENTENCE_RE = re.compile(r"(?<=[.!?])\s+")
_TOKEN_RE = re.compile(
    r"\d{1,2}:[0-5]\d|\d{1,3}(?:,\d{3})+|\d+(?:\.\d+)?(?:st|nd|rd|th)?"
    r"|[A-Za-z]+(?:[-'’][A-Za-z]+)*|[^\sA-Za-z0-9]"
)

_DETERMINERS = {"the", "a", "an", "this", "that", "these", "those", "his", "her",
                "its", "their", "my", "our", "your", "no", "every", "each", "some"}
_PRONOUNS = {"i", "you", "he", "she", "it", "we", "they", "him", "them", "us",
             "someone", "anyone", "everyone", "something", "who", "what", "which"}
_FUNCTION = {"of", "in", "on", "at", "to", "from", "with", "by", "for", "and",
             "or", "but", "if", "when", "while", "than", "as", "is", "are",
             "was", "were", "be", "been", "can", "could", "will", "would",
             "may", "might", "must", "do", "does", "did", "has", "have", "had", "not"}
_DAY_MONTH = {
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday",
    "january", "february", "march", "april", "may", "june", "july", "august",
    "september", "october", "november", "december",
}


class TaggerAdapter(Protocol):
    tagger_id: str
    version: str

    def tag(self, text: str) -> list[dict]:
        """Return sentence dictionaries in the annotated-article line format."""


class TaggerFailure(Exception):
    """An adapter could not annotate an article."""


def _pos_of(word: str) -> str:
    low = word.casefold()
    if low in _PRONOUNS:
        return "other"
    if low in _DETERMINERS:
        return "determiner"
    if low in _FUNCTION:
        return "other"
    if not word[:1].isalpha():
        return "other"
    if low.endswith("ly"):
        return "adverb"
    if low.endswith(("ing", "ed", "ize", "ise")):
        return "verb"
    if low.endswith(("ous", "ful", "ive", "able", "ible", "al", "ic")):
        return "adjective"
    return "noun"


class BuiltinTagger:
    """Deterministic rule tagger; an optional gazetteer adds entity tags."""

    tagger_id = BUILTIN_TAGGER_ID
    version = BUILTIN_TAGGER_VERSION

    def __init__(self, gazetteer: dict[str, str] | None = None):
        # casefolded surface -> category
        self.gazetteer = dict(gazetteer or {})
        self._max_run = max((len(k.split()) for k in self.gazetteer), default=1)

    @classmethod
    def with_kb_file(cls, path: str | Path) -> "BuiltinTagger":
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
        gazetteer: dict[str, str] = {}
        for category, groups in doc.items():
            for surfaces in groups.values():
                for surface in surfaces:
                    gazetteer.setdefault(surface.casefold(), category)
        return cls(gazetteer)

    def tag(self, text: str) -> list[dict]:
        if not text or not text.strip():
            raise TaggerFailure("empty article text")
        sentences = []
        for sent in _SENTENCE_RE.split(text.strip()):
            if not sent:
                continue
            matches = list(_TOKEN_RE.finditer(sent))
            surfaces = [m.group(0) for m in matches]
            entities = ["none"] * len(surfaces)
            i = 0
            while i < len(surfaces):
                hit = 0
                cat = ""
                if surfaces[i][:1].isupper():
                    for run in range(min(self._max_run, len(surfaces) - i), 0, -1):
                        window = surfaces[i:i + run]
                        if not all(w[:1].isupper() for w in window):
                            continue
                        category = self.gazetteer.get(" ".join(window).casefold())
                        if category:
                            hit, cat = run, category
                            break
                if hit:
                    for k in range(i, i + hit):
                        entities[k] = cat
                    i += hit
                else:
                    i += 1
            tokens = []
            for m, surface, entity in zip(matches, surfaces, entities):
                low = surface.casefold()
                if entity != "none":
                    pos = "noun"
                elif surface[:1].isdigit() or (low in _DAY_MONTH and surface[:1].isupper()):
                    pos = "number"
                else:
                    pos = _pos_of(surface)
                tokens.append({
                    "surface": surface, "lemma": low, "pos": pos, "entity": entity,
                    "start": m.start(), "end": m.end(),
                })
            sentences.append({"text": sent, "tokens": tokens, "roles": []})
        if not sentences:
            raise TaggerFailure("no sentences found")
        return sentences


def get_tagger(name: str, kb_path: str | Path | None = None) -> TaggerAdapter:
    if name == "builtin":
        if kb_path:
            return BuiltinTagger.with_kb_file(kb_path)
        return BuiltinTagger()
    raise TaggerFailure(f"unknown tagger adapter {name!r}")
