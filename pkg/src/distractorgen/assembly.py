"""Per-QAP orchestration: route targets, substitute, relax thresholds on shortfall."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from random import Random

from .annotation import (
    AnnotatedArticle,
    QAPair,
    TargetWord,
    align_token_spans,
    answer_tokens,
    classify_targets,
)
from .config import Config
from .entity import KnowledgeBase, entity_distractor_draws
from .errors import InsufficientCandidatesError, ValidationError
from .lexres import LexicalGraph, VectorTable
from .numeric import numeric_distractor_draws
from .semantic import filter_candidates, generate_candidates, rank_and_select, score_candidate

DISTRACTORS_PER_MCQ = 3

_VOWELS = "aeiouAEIOU"


@dataclass(frozen=True)
class Resources:
    vectors: VectorTable
    graph: LexicalGraph
    kb: KnowledgeBase


@dataclass(frozen=True)
class Provenance:
    target: str
    target_type: str
    replacement: str
    source: str                      # numeric | entity | semantic
    detail: dict = field(default_factory=dict)
    relax_round: int = 0

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "target_type": self.target_type,
            "replacement": self.replacement,
            "source": self.source,
            "detail": self.detail,
            "relax_round": self.relax_round,
        }


@dataclass(frozen=True)
class MCQ:
    question: str
    answer: str
    distractors: tuple[str, str, str]
    provenance: tuple[Provenance, ...]
    article_id: str = ""

    def __post_init__(self) -> None:
        if len(self.distractors) != DISTRACTORS_PER_MCQ:
            raise ValidationError(f"an MCQ needs exactly {DISTRACTORS_PER_MCQ} distractors")
        normalized = {_normalize(d) for d in self.distractors}
        if len(normalized) != DISTRACTORS_PER_MCQ or _normalize(self.answer) in normalized:
            raise ValidationError("distractors must be pairwise distinct and differ from the answer")


@dataclass(frozen=True)
class GenerationResult:
    """Outcome for one QAP; may carry fewer than three distractors (shortfall)."""

    question: str
    answer: str
    article_id: str
    distractors: tuple[str, ...]
    provenance: tuple[Provenance, ...]

    @property
    def complete(self) -> bool:
        return len(self.distractors) == DISTRACTORS_PER_MCQ

    def to_mcq(self) -> MCQ:
        if not self.complete:
            raise ValidationError(
                f"only {len(self.distractors)} distractors for question {self.question!r}"
            )
        return MCQ(
            question=self.question, answer=self.answer,
            distractors=tuple(self.distractors), provenance=self.provenance,
            article_id=self.article_id,
        )


def _normalize(text: str) -> str:
    return " ".join(text.split()).casefold()


def derive_rng(seed: int, index: int) -> Random:
    """Independent per-QAP stream so parallel and serial runs agree."""
    digest = hashlib.sha256(f"{seed}:{index}".encode("utf-8")).digest()
    return Random(int.from_bytes(digest[:8], "big"))


def _match_case(original: str, replacement: str) -> str:
    alpha = [c for c in original if c.isalpha()]
    if alpha and all(c.isupper() for c in alpha) and len(alpha) > 1:
        return replacement.upper()
    first = next((c for c in original if c.isalpha()), "")
    if not first:
        return replacement
    chars = list(replacement)
    for i, c in enumerate(chars):
        if c.isalpha():
            chars[i] = c.upper() if first.isupper() else c.lower()
            break
    return "".join(chars)


def substitute(answer: str, span: tuple[int, int], replacement: str) -> str:
    """Replace ``span`` in ``answer``, matching the original capitalization and
    re-agreeing an immediately preceding indefinite article."""
    start, end = span
    if not (0 <= start <= end <= len(answer)):
        raise ValidationError(f"span {span} outside answer of length {len(answer)}")
    rep = _match_case(answer[start:end], replacement)
    head = answer[:start]

    stripped = head.rstrip()
    words = stripped.split()
    if words and words[-1].lower() in ("a", "an") and rep[:1].isalpha():
        article = "an" if rep[0] in _VOWELS else "a"
        old = words[-1]
        if old.lower() != article:
            new_article = article.capitalize() if old[0].isupper() else article
            head = stripped[: len(stripped) - len(old)] + new_article + head[len(stripped):]
    return head + rep + answer[end:]


def _target_span(spans: list[tuple[int, int]], target: TargetWord) -> tuple[int, int]:
    first, last = target.token_range
    return (spans[first][0], spans[last][1])


def generate_mcq(
    qap: QAPair,
    article: AnnotatedArticle,
    resources: Resources,
    cfg: Config,
    rng: Random,
) -> GenerationResult:
    """Generate up to three distractors for one QAP.

    Targets are consumed in preference order; when all targets are exhausted
    with fewer than three distractors, the similarity interval is widened and
    the lexical targets are retried, up to ``cfg.relax_max_rounds`` times.
    """
    targets = classify_targets(qap, article, kb=resources.kb)
    tokens, _, _ = answer_tokens(qap, article, kb=resources.kb)
    spans = align_token_spans(qap.answer_text, [t.surface for t in tokens])

    distractors: list[str] = []
    provenance: list[Provenance] = []
    seen = {_normalize(qap.answer_text)}

    def try_add(target: TargetWord, replacement: str, source: str, detail: dict, rnd: int) -> bool:
        candidate = substitute(qap.answer_text, _target_span(spans, target), replacement)
        key = _normalize(candidate)
        if key in seen:
            return False
        seen.add(key)
        distractors.append(candidate)
        provenance.append(Provenance(
            target=target.surface, target_type=target.target_type,
            replacement=replacement, source=source, detail=detail, relax_round=rnd,
        ))
        return True

    def run_semantic(target: TargetWord, needed: int, rnd: int) -> None:
        lo, hi = cfg.relaxed(rnd)
        pairs = generate_candidates(target, resources.vectors, resources.graph, cfg,
                                    sim_lo=lo, sim_hi=hi)
        surviving = set(filter_candidates(target, [text for text, _ in pairs]))
        scored = [
            score_candidate(target, text, s_v, resources.graph, cfg)
            for text, s_v in pairs
            if text in surviving
        ]
        if not scored:
            return
        added = 0
        for cand in rank_and_select(scored, len(scored)):
            if added >= needed:
                break
            detail = {
                "s_v": round(cand.s_v, 6), "s_n": round(cand.s_n, 6),
                "s_d": round(cand.s_d, 6), "antonym": cand.antonym,
                "r_prime": round(cand.r_prime, 6), "r": round(cand.r, 6),
            }
            if try_add(target, cand.text, "semantic", detail, rnd):
                added += 1

    for relax_round in range(cfg.relax_max_rounds + 1):
        for target in targets:
            if len(distractors) >= DISTRACTORS_PER_MCQ:
                break
            needed = DISTRACTORS_PER_MCQ - len(distractors)
            kind = target.target_type
            if kind.startswith("T1"):
                if relax_round:
                    continue
                try:
                    draws = numeric_distractor_draws(target, needed, cfg, rng)
                except InsufficientCandidatesError as exc:
                    draws = [(text, "partial") for text in exc.found]
                for text, label in draws:
                    try_add(target, text, "numeric", {"strategy": label}, relax_round)
            elif kind.startswith("T2"):
                if relax_round:
                    continue
                try:
                    draws = entity_distractor_draws(target, article, resources.kb, needed, rng)
                except InsufficientCandidatesError as exc:
                    draws = [(text, "partial") for text in exc.found]
                for text, pool in draws:
                    try_add(target, text, "entity", {"pool": pool}, relax_round)
            else:
                run_semantic(target, needed, relax_round)
        if len(distractors) >= DISTRACTORS_PER_MCQ:
            break
        if not any(t.target_type.startswith("T3") for t in targets):
            break  # widening the interval cannot add candidates
    return GenerationResult(
        question=qap.question, answer=qap.answer_text, article_id=qap.article_id,
        distractors=tuple(distractors), provenance=tuple(provenance),
    )
