#!/usr/bin/env python3
"""Compare candidate rankings under the two edit-distance score shapes.

The default shape 1 - 1/(1+e^E) grows with the edit distance; the inverted
flag switches to 1/(1+e^E), which shrinks with it. This sweep shows how the
selected distractors differ over the bundled corpus.
"""

from __future__ import annotations

from importlib import resources as importlib_resources
from pathlib import Path

from distractorgen import Config, load_articles, load_kb, load_lexical_graph, load_qaps, load_vectors
from distractorgen.assembly import Resources, derive_rng, generate_mcq


def run(corpus, resources, cfg, seed=2020):
    articles, qaps = corpus
    rows = []
    for i, qap in enumerate(qaps):
        result = generate_mcq(qap, articles[qap.article_id], resources, cfg, derive_rng(seed, i))
        rows.append((qap.answer_text, result.distractors))
    return rows


def main() -> None:
    base = Path(str(importlib_resources.files("distractorgen").joinpath("data/fixtures")))
    kb_path = Path(str(importlib_resources.files("distractorgen").joinpath("data/kb.json")))
    corpus = (load_articles(base / "articles.jsonl"), load_qaps(base / "qaps.jsonl"))
    resources = Resources(
        vectors=load_vectors(base / "vectors.txt"),
        graph=load_lexical_graph(base / "lexgraph.json"),
        kb=load_kb(kb_path),
    )
    default = run(corpus, resources, Config())
    inverted = run(corpus, resources, Config(sd_inverted=True))

    changed = 0
    for (answer, a), (_, b) in zip(default, inverted):
        if a != b:
            changed += 1
            print(f"answer: {answer}")
            print(f"  default : {list(a)}")
            print(f"  inverted: {list(b)}")
    print(f"\n{changed}/{len(default)} QAPs changed distractors under the inverted score")


if __name__ == "__main__":
    main()
