#!/usr/bin/env python3
"""Regenerate the bundled fixture corpus under src/distractorgen/data/fixtures/.

The corpus is engineered so that every distractor word needed by the bundled
QAPs falls inside the default similarity interval of its target, while decoy
words (too close, too far, or caught by the candidate filters) demonstrate
the exclusion paths. Deterministic: rerunning reproduces identical bytes.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "distractorgen" / "data" / "fixtures"

PUNCT_NO_SPACE = {".", ",", ":", ";", "!", "?"}


def build_sentence(token_defs, roles=()):
    """token_defs: (surface, lemma, pos[, entity]) tuples; offsets computed here."""
    text = ""
    tokens = []
    for t in token_defs:
        surface, lemma, pos = t[0], t[1], t[2]
        entity = t[3] if len(t) > 3 else "none"
        if text and surface not in PUNCT_NO_SPACE:
            text += " "
        start = len(text)
        text += surface
        tokens.append({
            "surface": surface, "lemma": lemma, "pos": pos, "entity": entity,
            "start": start, "end": start + len(surface),
        })
    role_objs = [{"role": r, "first_token": f, "last_token": l} for r, f, l in roles]
    return {"text": text, "tokens": tokens, "roles": role_objs}


D, N, V, A, ADV, NUM, O = "determiner", "noun", "verb", "adjective", "adverb", "number", "other"

ARTICLES = {
    "sat1a1": [
        build_sentence(
            [("Chie", "chie", N, "person"), ("sat", "sit", V), ("in", "in", O),
             ("the", "the", D), ("kitchen", "kitchen", N), (".", ".", O)],
            roles=[("subject", 0, 0), ("predicate", 1, 1), ("adverb", 2, 4)],
        ),
        build_sentence(
            [("Chie", "chie", N, "person"), ("heard", "hear", V), ("her", "her", D),
             ("soft", "soft", A), ("scuttling", "scuttle", A), ("footsteps", "footstep", N),
             (",", ",", O), ("the", "the", D), ("creak", "creak", N), ("of", "of", O),
             ("the", "the", D), ("door", "door", N), (".", ".", O)],
            roles=[("subject", 0, 0), ("predicate", 1, 1), ("object", 2, 12)],
        ),
    ],
    "sat1a3": [
        build_sentence(
            [("Each", "each", D), ("cell", "cell", N), ("can", "can", O),
             ("copy", "copy", V), ("the", "the", D),
             ("deoxyribonucleic", "deoxyribonucleic", A), ("acid", "acid", N),
             ("molecule", "molecule", N), (".", ".", O)],
            roles=[("subject", 0, 1), ("predicate", 2, 3), ("object", 4, 7)],
        ),
    ],
    "sat1a5": [
        build_sentence(
            [("Deep", "deep", N, "organization"), ("Space", "space", N, "organization"),
             ("Industries", "industry", N, "organization"), ("of", "of", O),
             ("Virginia", "virginia", N, "location"), ("hopes", "hope", V),
             ("to", "to", O), ("be", "be", O), ("harvesting", "harvest", V),
             ("metals", "metal", N), ("from", "from", O), ("asteroids", "asteroid", N),
             ("by", "by", O), ("2020", "2020", NUM), (".", ".", O)],
            roles=[("subject", 0, 4), ("predicate", 5, 8), ("object", 9, 9),
                   ("adverb", 10, 11), ("adverb", 12, 13)],
        ),
    ],
    "sat2a1": [
        build_sentence(
            [("No", "no", D), ("man", "man", N), ("likes", "like", V), ("to", "to", O),
             ("acknowledge", "acknowledge", V), ("that", "that", O), ("he", "he", O),
             ("has", "have", O), ("made", "make", V), ("a", "a", D),
             ("mistake", "mistake", N), ("in", "in", O), ("the", "the", D),
             ("choice", "choice", N), ("of", "of", O), ("his", "his", D),
             ("profession", "profession", N), (".", ".", O)],
            roles=[("subject", 0, 1), ("predicate", 2, 4), ("object", 5, 17)],
        ),
    ],
    "sat2a2": [
        build_sentence(
            [("Ethics", "ethic", N), ("should", "should", O), ("apply", "apply", V),
             ("when", "when", O), ("someone", "someone", O), ("makes", "make", V),
             ("an", "an", D), ("economic", "economic", A), ("decision", "decision", N),
             (".", ".", O)],
            roles=[("subject", 0, 0), ("predicate", 1, 2), ("adverb", 3, 9)],
        ),
    ],
    "sat2a3": [
        build_sentence(
            [("A", "a", D), ("British", "british", A), ("study", "study", N),
             ("examined", "examine", V), ("the", "the", D), ("way", "way", N),
             ("women", "woman", N), ("search", "search", V), ("for", "for", O),
             ("medical", "medical", A), ("information", "information", N),
             ("online", "online", ADV), (".", ".", O)],
            roles=[("subject", 0, 2), ("predicate", 3, 3), ("object", 4, 11)],
        ),
        build_sentence(
            [("An", "an", D), ("experienced", "experienced", A), ("Internet", "internet", N),
             ("user", "user", N), ("can", "can", O), (",", ",", O), ("at", "at", O),
             ("least", "least", O), ("in", "in", O), ("some", "some", D),
             ("cases", "case", N), (",", ",", O), ("assess", "assess", V),
             ("the", "the", D), ("trustworthiness", "trustworthiness", N),
             ("and", "and", O), ("probable", "probable", A), ("value", "value", N),
             ("of", "of", O), ("a", "a", D), ("Web", "web", N), ("page", "page", N),
             ("in", "in", O), ("a", "a", D), ("matter", "matter", N), ("of", "of", O),
             ("seconds", "second", N), (".", ".", O)],
            roles=[("subject", 0, 3), ("adjective-of-subject", 1, 1), ("adverb", 6, 10),
                   ("predicate", 12, 12), ("object", 13, 21),
                   ("adjective-of-object", 16, 16), ("adverb", 22, 26)],
        ),
    ],
    "sat2a4": [
        build_sentence(
            [("A", "a", D), ("woman", "woman", N), ("knows", "know", V),
             ("the", "the", D), ("cost", "cost", N), ("of", "of", O),
             ("life", "life", N), ("better", "better", ADV), ("than", "than", O),
             ("a", "a", D), ("man", "man", N), (".", ".", O)],
            roles=[("subject", 0, 1), ("predicate", 2, 2), ("object", 3, 6),
                   ("adverb", 7, 10)],
        ),
    ],
    "sat2a5": [
        build_sentence(
            [("Many", "many", D), ("scholars", "scholar", N), ("admit", "admit", V),
             ("that", "that", O), ("their", "their", D), ("insights", "insight", N),
             ("are", "be", O), ("subject", "subject", A), ("to", "to", O),
             ("egocentrism", "egocentrism", N), (",", ",", O), ("social", "social", A),
             ("projection", "projection", N), (",", ",", O), ("and", "and", O),
             ("multiple", "multiple", A), ("attribution", "attribution", N),
             ("errors", "error", N), (".", ".", O)],
            roles=[("subject", 1, 1), ("predicate", 2, 2), ("object", 3, 18),
                   ("subject", 4, 5)],
        ),
    ],
    "geo1": [
        build_sentence(
            [("The", "the", D), ("company", "company", N), ("opened", "open", V),
             ("its", "its", D), ("headquarters", "headquarters", N), ("in", "in", O),
             ("New", "new", N, "location"), ("York", "york", N, "location"),
             ("last", "last", A), ("year", "year", N), (".", ".", O)],
            roles=[("subject", 0, 1), ("predicate", 2, 2), ("object", 3, 4),
                   ("adverb", 5, 7), ("adverb", 8, 9)],
        ),
    ],
    "sched1": [
        build_sentence(
            [("The", "the", D), ("committee", "committee", N), ("meets", "meet", V),
             ("on", "on", O), ("Friday", "friday", NUM), (".", ".", O)],
            roles=[("subject", 0, 1), ("predicate", 2, 2), ("adverb", 3, 4)],
        ),
    ],
}

# (article_id, question, sentence index, first token, last token)
QAPS = [
    ("sat1a1", "What did Chie hear?", 1, 2, 12),
    ("sat1a3", "What can each cell copy?", 0, 4, 8),
    ("sat1a5", "When does Deep Space Industries of Virginia hope to be harvesting metals from asteroids?", 0, 12, 14),
    ("sat2a1", "What does no man like to acknowledge?", 0, 5, 17),
    ("sat2a2", "When should ethics apply?", 0, 3, 9),
    ("sat2a3", "What did a British study of the way women search for medical information online indicate?", 1, 0, 27),
    ("sat2a4", "What does a woman know better than a man?", 0, 3, 6),
    ("sat2a5", "What are subject to egocentrism, social projection, and multiple attribution errors?", 0, 4, 5),
    ("geo1", "Where did the company open its headquarters?", 0, 5, 7),
    ("sched1", "When does the committee meet?", 0, 3, 5),
]

# Word vectors: each anchor word owns a basis axis; each related word is
# sim * anchor_axis + sqrt(1 - sim^2) * own_axis, so the cosine to its anchor
# is exactly sim and it is orthogonal to everything else.
ANCHORS = [
    "choice", "profession", "decision", "economic", "creak", "door",
    "molecule", "internet", "experienced", "cost", "life", "insights",
]
RELATED = [
    ("way", "choice", 0.72),
    ("association", "profession", 0.70),
    ("engineering", "profession", 0.68),
    ("request", "decision", 0.70),
    ("proposition", "decision", 0.72),
    ("political", "economic", 0.80),
    ("knock", "creak", 0.70),
    ("driveway", "door", 0.72),
    ("stairwell", "door", 0.68),
    ("doorway", "door", 0.70),      # survives the interval, removed by filter 1
    ("window", "door", 0.30),       # below the interval
    ("gate", "door", 0.95),         # above the interval
    ("coenzyme", "molecule", 0.74),
    ("polymer", "molecule", 0.70),
    ("trimer", "molecule", 0.66),
    ("Supernet", "internet", 0.80),
    ("CogNet", "internet", 0.75),
    ("inexperienced", "experienced", 0.80),  # removed by filter 1 (substring)
    ("naive", "experienced", 0.70),          # antonym of the target
    ("risk", "cost", 0.70),
    ("happiness", "life", 0.70),
    ("experience", "life", 0.75),
    ("perspectives", "insights", 0.74),
    ("findings", "insights", 0.71),
    ("valuables", "insights", 0.68),
]

LEXGRAPH = {
    "synsets": [
        {"id": "understanding.n.01", "pos": "noun", "lemmas": ["understanding"], "hypernyms": []},
        {"id": "insight.n.01", "pos": "noun", "lemmas": ["insights", "insight"],
         "hypernyms": ["understanding.n.01"]},
        {"id": "canine.n.01", "pos": "noun", "lemmas": ["canine"], "hypernyms": []},
        {"id": "dog.n.01", "pos": "noun", "lemmas": ["dog"], "hypernyms": ["canine.n.01"]},
    ],
    "antonyms": [["experienced", "inexperienced"], ["experienced", "naive"]],
}


def write_articles() -> None:
    lines = []
    for article_id, sentences in ARTICLES.items():
        lines.append(json.dumps({"article_id": article_id}, ensure_ascii=False))
        for sentence in sentences:
            lines.append(json.dumps(sentence, ensure_ascii=False))
    (FIXTURES / "articles.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")

    solo = [json.dumps({"article_id": "sat1a1"}, ensure_ascii=False)]
    solo += [json.dumps(s, ensure_ascii=False) for s in ARTICLES["sat1a1"]]
    (FIXTURES / "sat_t1a1.jsonl").write_text("\n".join(solo) + "\n", encoding="utf-8")


def write_qaps() -> None:
    lines = []
    for article_id, question, sent, first, last in QAPS:
        sentence = ARTICLES[article_id][sent]
        start = sentence["tokens"][first]["start"]
        end = sentence["tokens"][last]["end"]
        lines.append(json.dumps({
            "article_id": article_id,
            "question": question,
            "answer_text": sentence["text"][start:end],
            "answer_sentence": sent,
            "answer_first_token": first,
            "answer_last_token": last,
        }, ensure_ascii=False))
    (FIXTURES / "qaps.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_vectors() -> None:
    words = ANCHORS + [w for w, _, _ in RELATED]
    dim = len(words)
    axis = {w: i for i, w in enumerate(words)}
    rows = [f"{len(words)} {dim}"]
    for word in ANCHORS:
        vec = [0.0] * dim
        vec[axis[word]] = 1.0
        rows.append(word + " " + " ".join(repr(x) for x in vec))
    for word, anchor, sim in RELATED:
        vec = [0.0] * dim
        vec[axis[anchor]] = sim
        vec[axis[word]] = math.sqrt(1.0 - sim * sim)
        rows.append(word + " " + " ".join(repr(x) for x in vec))
    (FIXTURES / "vectors.txt").write_text("\n".join(rows) + "\n", encoding="utf-8")


def write_lexgraph() -> None:
    (FIXTURES / "lexgraph.json").write_text(
        json.dumps(LEXGRAPH, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )


def write_eval_fixture() -> None:
    """101 MCQs / 303 distractors with 296 relevant, 291 sufficient and 85
    fully-adequate MCQs (the published evaluation arithmetic)."""
    mcq_lines = []
    label_lines = []
    for i in range(1, 102):
        question = f"eval-q{i:03d}?"
        labels = [
            {"grammatical": True, "relevant_with_distraction": True, "sufficient_distraction": True}
            for _ in range(3)
        ]
        if i <= 5:
            labels[2]["sufficient_distraction"] = False       # relevant, not sufficient
        elif 86 <= i <= 94:
            labels[0]["grammatical"] = False                  # breaks adequacy
        elif i >= 95:
            labels[0]["relevant_with_distraction"] = False    # breaks adequacy
            labels[0]["sufficient_distraction"] = False
        mcq_lines.append(json.dumps({
            "article_id": f"eval-a{i:03d}",
            "question": question,
            "answer": f"answer {i:03d}",
            "distractors": [f"distractor {i:03d}{c}" for c in "abc"],
            "provenance": [],
        }, ensure_ascii=False))
        label_lines.append(json.dumps({"question": question, "labels": labels}, ensure_ascii=False))
    (FIXTURES / "eval_mcqs.jsonl").write_text("\n".join(mcq_lines) + "\n", encoding="utf-8")
    (FIXTURES / "eval_labels.jsonl").write_text("\n".join(label_lines) + "\n", encoding="utf-8")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    write_articles()
    write_qaps()
    write_vectors()
    write_lexgraph()
    write_eval_fixture()
    print(f"wrote fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()
