"""Named-entity distractors: swap in peers from the article or a knowledge base."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources as importlib_resources
from pathlib import Path
from random import Random
from typing import IO

from .errors import InsufficientCandidatesError, ParseError, ValidationError

CATEGORIES = ("person", "location", "organization")


@dataclass(frozen=True)
class KnowledgeBase:
    """Curated peer groups per entity category.

    Lookups are case-insensitive; returned surfaces keep their stored casing.
    """

    groups: dict[str, dict[str, tuple[str, ...]]]

    def __post_init__(self) -> None:
        for category, groups in self.groups.items():
            if category not in CATEGORIES:
                raise ValidationError(f"unknown entity category {category!r}")
            for name, surfaces in groups.items():
                if not surfaces:
                    raise ValidationError(f"group {name!r} in {category!r} is empty")

    def peers(self, category: str, name: str) -> set[str]:
        """Union of all groups containing ``name``, minus the name itself."""
        needle = name.casefold()
        out: set[str] = set()
        for surfaces in self.groups.get(category, {}).values():
            if any(s.casefold() == needle for s in surfaces):
                out.update(s for s in surfaces if s.casefold() != needle)
        return out

    def gazetteer(self) -> dict[str, str]:
        """Casefolded surface -> category, across every group."""
        out: dict[str, str] = {}
        for category in CATEGORIES:
            for surfaces in self.groups.get(category, {}).values():
                for s in surfaces:
                    out.setdefault(s.casefold(), category)
        return out


def load_kb(source: str | Path | IO[str]) -> KnowledgeBase:
    text = source.read() if hasattr(source, "read") else Path(source).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("knowledge base must be a JSON object keyed by category")
    groups: dict[str, dict[str, tuple[str, ...]]] = {}
    for category, raw_groups in doc.items():
        if category not in CATEGORIES:
            raise ParseError(f"unknown category {category!r}", field=category)
        if not isinstance(raw_groups, dict):
            raise ParseError(f"category {category!r} must map group names to lists", field=category)
        groups[category] = {name: tuple(surfaces) for name, surfaces in raw_groups.items()}
    return KnowledgeBase(groups=groups)


def default_kb() -> KnowledgeBase:
    """The knowledge base bundled with the package."""
    ref = importlib_resources.files("distractorgen").joinpath("data/kb.json")
    return load_kb(ref.open("r", encoding="utf-8"))


def collect_article_entities(article, category: str) -> set[str]:
    """Surfaces of all maximal entity runs of ``category``, deduplicated
    case-insensitively (first casing wins)."""
    found: dict[str, str] = {}
    for sentence in article.sentences:
        i = 0
        tokens = sentence.tokens
        while i < len(tokens):
            if tokens[i].entity != category:
                i += 1
                continue
            j = i
            while j + 1 < len(tokens) and tokens[j + 1].entity == category:
                j += 1
            surface = sentence.text[tokens[i].start:tokens[j].end]
            found.setdefault(surface.casefold(), surface)
            i = j + 1
    return set(found.values())


def kb_peers(kb: KnowledgeBase, category: str, name: str) -> set[str]:
    return kb.peers(category, name)


_TYPE_TO_CATEGORY = {"T2Person": "person", "T2Location": "location",
                     "T2Organization": "organization"}


def entity_distractor_draws(
    target,
    article,
    kb: KnowledgeBase,
    n: int,
    rng: Random,
    category: str | None = None,
) -> list[tuple[str, str]]:
    """Draw ``n`` distinct entity surfaces with their source ("article" or "kb").

    ``target`` is a TargetWord (category derived from its type) or a bare
    surface string with an explicit ``category``. The article pool is
    exhausted before the knowledge base is consulted.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    target_surface = getattr(target, "surface", target)
    if category is None:
        target_type = getattr(target, "target_type", None)
        category = _TYPE_TO_CATEGORY.get(target_type or "")
        if category is None:
            raise ValueError(f"cannot derive entity category from {target!r}")
    needle = target_surface.casefold()
    article_pool = sorted(
        s for s in collect_article_entities(article, category) if s.casefold() != needle
    )
    picked: list[tuple[str, str]] = []
    taken: set[str] = {needle}

    if len(article_pool) >= n:
        for surface in rng.sample(article_pool, n):
            picked.append((surface, "article"))
        return picked

    shuffled = list(article_pool)
    rng.shuffle(shuffled)
    for surface in shuffled:
        picked.append((surface, "article"))
        taken.add(surface.casefold())

    kb_pool = sorted(s for s in kb.peers(category, target_surface) if s.casefold() not in taken)
    remaining = n - len(picked)
    if len(kb_pool) < remaining:
        for surface in kb_pool:
            picked.append((surface, "kb"))
        raise InsufficientCandidatesError(
            f"only {len(picked)} same-category entities available for {target_surface!r}, needed {n}",
            found=[s for s, _ in picked],
        )
    for surface in rng.sample(kb_pool, remaining):
        picked.append((surface, "kb"))
    return picked


def generate_entity_distractors(
    target,
    article,
    kb: KnowledgeBase,
    n: int,
    rng: Random,
    category: str | None = None,
) -> list[str]:
    """``n`` distinct same-category entity surfaces, none equal to the target."""
    return [s for s, _ in entity_distractor_draws(target, article, kb, n, rng, category=category)]
