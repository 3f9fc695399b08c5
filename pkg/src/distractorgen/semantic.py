"""Candidate generation, filtering, scoring and ranking for lexical targets.

The ranking score is entropy-shaped: a candidate's combined similarity r' is
mapped through r = -r' * ln(r'), which peaks at r' = 1/e. Middling similarity
therefore outranks both near-identical and barely-related candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .annotation import TargetWord
from .config import Config
from .errors import OutOfVocabularyError, ValidationError
from .lexres import LexicalGraph, VectorTable, hypernym_candidates, is_antonym, neighborhood, wup


@dataclass(frozen=True)
class Candidate:
    text: str
    s_v: float
    s_n: float
    s_d: float
    antonym: bool
    r_prime: float
    r: float


def levenshtein(a: str, b: str) -> int:
    """Minimum number of single-character edits transforming ``a`` into ``b``."""
    if a == b:
        return 0
    if len(a) > len(b):
        a, b = b, a
    previous = list(range(len(a) + 1))
    for i, cb in enumerate(b, start=1):
        current = [i]
        for j, ca in enumerate(a, start=1):
            cost = 0 if ca == cb else 1
            current.append(min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost))
        previous = current
    return previous[len(a)]


def _common_prefix_len(a: str, b: str) -> int:
    n = 0
    for ca, cb in zip(a, b):
        if ca != cb:
            break
        n += 1
    return n


def is_filtered(target_surface: str, candidate: str, prefix_len: int = 3) -> bool:
    """The two removal rules: target containment, and likely misspellings
    (shared prefix of >= ``prefix_len`` chars with edit distance < 3)."""
    target = " ".join(target_surface.split()).casefold()
    cand = candidate.casefold()
    if target in cand.split():
        return True
    if target in cand:
        return True
    if _common_prefix_len(target, cand) >= prefix_len and levenshtein(target, cand) < 3:
        return True
    return False


def filter_candidates(target: TargetWord | str, candidates: list[str]) -> list[str]:
    surface = target.surface if isinstance(target, TargetWord) else target
    return [c for c in candidates if not is_filtered(surface, c)]


def _vocab_query_words(target: TargetWord) -> list[str]:
    seen: set[str] = set()
    out: list[str] = []
    for w in (target.surface, target.surface.lower(), target.lemma or ""):
        if w and w not in seen:
            seen.add(w)
            out.append(w)
    return out


def generate_candidates(
    target: TargetWord,
    vectors: VectorTable,
    graph: LexicalGraph,
    cfg: Config,
    sim_lo: float | None = None,
    sim_hi: float | None = None,
) -> list[tuple[str, float]]:
    """Union of in-interval embedding neighbors and direct hypernyms, as
    (text, similarity) pairs. Hypernym-only candidates get the interval floor
    as their similarity."""
    lo = cfg.sim_lo if sim_lo is None else sim_lo
    hi = cfg.sim_hi if sim_hi is None else sim_hi
    exclude = {w.casefold() for w in _vocab_query_words(target)}

    pairs: list[tuple[str, float]] = []
    seen: set[str] = set(exclude)
    for query in _vocab_query_words(target):
        if query not in vectors:
            continue
        try:
            found = neighborhood(vectors, query, lo, hi)
        except OutOfVocabularyError:
            continue
        for word, sim in found:
            if word.casefold() not in seen:
                seen.add(word.casefold())
                pairs.append((word, sim))
        break

    for query in _vocab_query_words(target):
        for lemma in hypernym_candidates(graph, query):
            if lemma.casefold() not in seen:
                seen.add(lemma.casefold())
                pairs.append((lemma, lo))
    return pairs


def _wup_lookup_word(graph: LexicalGraph, text: str) -> str:
    """Full surface when present, else the phrase head (last token)."""
    if graph.has_lemma(text):
        return text
    parts = text.split()
    return parts[-1] if parts else text


def entropy_rank(r_prime: float) -> float:
    """The final ranking map r = -r' * ln(r'); zero at r' = 1, peak at 1/e."""
    if not 0.0 < r_prime <= 1.0:
        raise ValidationError(f"r_prime out of (0, 1]: {r_prime}")
    if r_prime == 1.0:
        return 0.0
    return -r_prime * math.log(r_prime)


def score_candidate(
    target: TargetWord | str,
    text: str,
    s_v: float,
    graph: LexicalGraph,
    cfg: Config,
) -> Candidate:
    """Compute all component scores and the final ranking score for one candidate."""
    surface = target.surface if isinstance(target, TargetWord) else target
    edit = levenshtein(text, surface)
    if cfg.sd_inverted:
        s_d = 1.0 / (1.0 + math.exp(min(edit, 700)))
    else:
        s_d = 1.0 - 1.0 / (1.0 + math.exp(min(edit, 700)))
    wup_score = wup(graph, _wup_lookup_word(graph, text), _wup_lookup_word(graph, surface))
    s_n = cfg.wup_fallback if wup_score is None else wup_score
    antonym = is_antonym(graph, text, surface)
    sv_eff = min(max(s_v, 0.0), 1.0)
    if antonym:
        r_prime = (2.0 * sv_eff + s_n + s_d) / 4.0
    else:
        r_prime = (sv_eff + s_n + s_d) / 3.0
    return Candidate(text=text, s_v=s_v, s_n=s_n, s_d=s_d, antonym=antonym,
                     r_prime=r_prime, r=entropy_rank(r_prime))


def rank_and_select(candidates: list[Candidate], k: int) -> list[Candidate]:
    """Top ``k`` by ranking score; ties broken by higher similarity, then text."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ordered = sorted(candidates, key=lambda c: (-c.r, -c.s_v, c.text))
    return ordered[:k]
