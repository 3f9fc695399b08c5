"""Word vectors and the synset/hypernym/antonym graph.

Both resources are immutable after load; queries are pure functions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable

import numpy as np

from .errors import OutOfVocabularyError, ParseError, ValidationError


def _open_lines(source: str | Path | IO[str]) -> Iterable[str]:
    if hasattr(source, "read"):
        return source.read().splitlines()
    return Path(source).read_text(encoding="utf-8").splitlines()


class VectorTable:
    """Dense word vectors of a fixed dimension; zero vectors are rejected."""

    def __init__(self, dimension: int, entries: dict[str, np.ndarray]):
        if dimension < 1:
            raise ValidationError(f"dimension must be positive, got {dimension}")
        self.dimension = dimension
        self._entries: dict[str, np.ndarray] = {}
        self._norms: dict[str, float] = {}
        for word, vec in entries.items():
            arr = np.asarray(vec, dtype=np.float64)
            if arr.shape != (dimension,):
                raise ValidationError(f"vector for {word!r} has shape {arr.shape}, want ({dimension},)")
            norm = float(np.linalg.norm(arr))
            if norm == 0.0:
                raise ValidationError(f"zero vector for {word!r}")
            self._entries[word] = arr
            self._norms[word] = norm

    def __contains__(self, word: str) -> bool:
        return word in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def words(self) -> Iterable[str]:
        return self._entries.keys()

    def vector(self, word: str) -> np.ndarray:
        try:
            return self._entries[word]
        except KeyError:
            raise OutOfVocabularyError(f"word {word!r} not in vector table") from None

    def norm(self, word: str) -> float:
        return self._norms[word]


def load_vectors(source: str | Path | IO[str]) -> VectorTable:
    """Load the text vector format: optional "<count> <dimension>" header, then
    one line per word."""
    lines = list(_open_lines(source))
    entries: dict[str, np.ndarray] = {}
    start = 0
    declared_count = None
    dimension = None
    if lines:
        head = lines[0].split()
        if len(head) == 2:
            try:
                declared_count, dimension = int(head[0]), int(head[1])
                start = 1
            except ValueError:
                pass
    for lineno, line in enumerate(lines[start:], start=start + 1):
        if not line.strip():
            continue
        fields = line.rstrip("\n").split(" ")
        word, values = fields[0], fields[1:]
        if not word:
            raise ParseError("empty word", line=lineno)
        if dimension is None:
            dimension = len(values)
            if dimension == 0:
                raise ParseError("row has no vector components", line=lineno)
        if len(values) != dimension:
            raise ParseError(
                f"expected {dimension} components, found {len(values)}", line=lineno
            )
        if word in entries:
            raise ParseError(f"duplicate word {word!r}", line=lineno)
        try:
            vec = np.array([float(x) for x in values], dtype=np.float64)
        except ValueError as exc:
            raise ParseError(f"bad float: {exc}", line=lineno) from None
        if float(np.linalg.norm(vec)) == 0.0:
            raise ParseError(f"zero vector for {word!r}", line=lineno)
        entries[word] = vec
    if dimension is None:
        raise ParseError("vector file contains no rows", line=1)
    if declared_count is not None and declared_count != len(entries):
        raise ParseError(
            f"header declares {declared_count} rows, file has {len(entries)}", line=1
        )
    return VectorTable(dimension, entries)


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValidationError(f"dimension mismatch: {a.shape} vs {b.shape}")
    na, nb = float(np.linalg.norm(a)), float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        raise ValidationError("cosine undefined for zero vectors")
    return float(np.dot(a, b) / (na * nb))


def neighborhood(table: VectorTable, word: str, lo: float, hi: float) -> list[tuple[str, float]]:
    """All words with similarity to ``word`` inside [lo, hi], most similar first,
    ties broken lexicographically."""
    if not (0.0 <= lo < hi <= 1.0):
        raise ValidationError(f"need 0 <= lo < hi <= 1, got [{lo}, {hi}]")
    target = table.vector(word)
    tnorm = table.norm(word)
    out: list[tuple[str, float]] = []
    for other in table.words():
        if other == word:
            continue
        vec = table._entries[other]
        sim = float(np.dot(vec, target) / (table._norms[other] * tnorm))
        if lo <= sim <= hi:
            out.append((other, sim))
    out.sort(key=lambda pair: (-pair[1], pair[0]))
    return out


@dataclass(frozen=True)
class Synset:
    id: str
    pos: str
    lemmas: tuple[str, ...]
    hypernyms: tuple[str, ...] = ()


@dataclass
class LexicalGraph:
    """Synsets with hypernym edges plus a symmetric antonym relation.

    Depths are precomputed at load: a root has depth 1 and every other
    synset's depth is min over parents of parent depth + 1.
    """

    synsets: dict[str, Synset]
    antonyms: set[frozenset[str]]
    depths: dict[str, int] = field(default_factory=dict)
    _lemma_index: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for synset in self.synsets.values():
            for parent in synset.hypernyms:
                if parent not in self.synsets:
                    raise ValidationError(
                        f"synset {synset.id!r} names unknown hypernym {parent!r}"
                    )
        self.depths = _compute_depths(self.synsets)
        index: dict[str, list[str]] = {}
        for synset in self.synsets.values():
            for lemma in synset.lemmas:
                index.setdefault(lemma.casefold(), []).append(synset.id)
        self._lemma_index = {k: tuple(v) for k, v in index.items()}

    def synsets_of(self, lemma: str) -> tuple[str, ...]:
        return self._lemma_index.get(lemma.casefold(), ())

    def has_lemma(self, lemma: str) -> bool:
        return lemma.casefold() in self._lemma_index

    def ancestors(self, synset_id: str) -> set[str]:
        """The synset itself plus all transitive hypernyms."""
        seen: set[str] = set()
        stack = [synset_id]
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(self.synsets[node].hypernyms)
        return seen


def _compute_depths(synsets: dict[str, Synset]) -> dict[str, int]:
    children: dict[str, list[str]] = {sid: [] for sid in synsets}
    indegree = {sid: len(synsets[sid].hypernyms) for sid in synsets}
    for sid, synset in synsets.items():
        for parent in synset.hypernyms:
            children[parent].append(sid)
    # Kahn's algorithm over reversed edges (parents first); a leftover node
    # means the hypernym graph has a cycle.
    depths: dict[str, int] = {}
    queue = [sid for sid, deg in indegree.items() if deg == 0]
    order: list[str] = []
    while queue:
        node = queue.pop()
        order.append(node)
        parents = synsets[node].hypernyms
        depths[node] = 1 if not parents else min(depths[p] for p in parents) + 1
        for child in children[node]:
            indegree[child] -= 1
            if indegree[child] == 0:
                queue.append(child)
    if len(order) != len(synsets):
        cyclic = sorted(set(synsets) - set(order))
        raise ValidationError(f"hypernym graph has a cycle involving: {', '.join(cyclic)}")
    return depths


def load_lexical_graph(source: str | Path | IO[str]) -> LexicalGraph:
    text = source.read() if hasattr(source, "read") else Path(source).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", line=exc.lineno) from None
    if not isinstance(doc, dict) or "synsets" not in doc:
        raise ParseError("lexical graph file must be an object with a 'synsets' list", field="synsets")
    synsets: dict[str, Synset] = {}
    for i, raw in enumerate(doc["synsets"]):
        for key in ("id", "pos", "lemmas"):
            if key not in raw:
                raise ParseError(f"synset #{i} missing key", field=key)
        sid = raw["id"]
        if sid in synsets:
            raise ParseError(f"duplicate synset id {sid!r}", field="id")
        if not raw["lemmas"]:
            raise ParseError(f"synset {sid!r} has no lemmas", field="lemmas")
        synsets[sid] = Synset(
            id=sid,
            pos=raw["pos"],
            lemmas=tuple(raw["lemmas"]),
            hypernyms=tuple(raw.get("hypernyms", ())),
        )
    antonyms: set[frozenset[str]] = set()
    for pair in doc.get("antonyms", ()):
        if len(pair) != 2:
            raise ParseError(f"antonym entry must have two lemmas, got {pair!r}", field="antonyms")
        a, b = pair[0].casefold(), pair[1].casefold()
        if a == b:
            raise ParseError(f"antonym pair maps a lemma to itself: {pair!r}", field="antonyms")
        antonyms.add(frozenset((a, b)))
    return LexicalGraph(synsets=synsets, antonyms=antonyms)


def wup(graph: LexicalGraph, a: str, b: str) -> float | None:
    """Wu-Palmer similarity, maximized over synset pairs; None when either
    lemma is absent from the graph."""
    sa_ids = graph.synsets_of(a)
    sb_ids = graph.synsets_of(b)
    if not sa_ids or not sb_ids:
        return None
    best: float | None = None
    for sa in sa_ids:
        anc_a = graph.ancestors(sa)
        for sb in sb_ids:
            common = anc_a & graph.ancestors(sb)
            if not common:
                continue
            lcs_depth = max(graph.depths[c] for c in common)
            score = 2.0 * lcs_depth / (graph.depths[sa] + graph.depths[sb])
            if best is None or score > best:
                best = score
    return best


def is_antonym(graph: LexicalGraph, a: str, b: str) -> bool:
    if a.casefold() == b.casefold():
        return False
    return frozenset((a.casefold(), b.casefold())) in graph.antonyms


def hypernym_candidates(graph: LexicalGraph, word: str) -> list[str]:
    """Lemmas of direct hypernym synsets of every synset containing ``word``."""
    out: list[str] = []
    seen: set[str] = {word.casefold()}
    for sid in graph.synsets_of(word):
        for parent in graph.synsets[sid].hypernyms:
            for lemma in graph.synsets[parent].lemmas:
                if lemma.casefold() not in seen:
                    seen.add(lemma.casefold())
                    out.append(lemma)
    return out
