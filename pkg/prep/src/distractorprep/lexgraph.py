"""Convert a tab-separated lexical release into the lexical-graph JSON format.

Source format, one record per line:

    synset <TAB> id <TAB> pos <TAB> lemma1,lemma2 <TAB> parent1,parent2
    antonym <TAB> lemma1 <TAB> lemma2

The hypernym column may be empty for roots. Blank lines and ``#`` comments
are skipped.
"""

from __future__ import annotations

import json
from pathlib import Path

from .manifest import atomic_write_text


class ConversionError(Exception):
    pass


def parse_release(path: str | Path) -> dict:
    synsets: list[dict] = []
    seen: set[str] = set()
    antonyms: list[list[str]] = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        kind = fields[0]
        if kind == "synset":
            if len(fields) < 4:
                raise ConversionError(f"line {lineno}: synset record needs id, pos, lemmas")
            sid, pos, lemmas = fields[1], fields[2], fields[3]
            if sid in seen:
                raise ConversionError(f"line {lineno}: duplicate synset id {sid!r}")
            seen.add(sid)
            hypernyms = fields[4].split(",") if len(fields) > 4 and fields[4] else []
            synsets.append({
                "id": sid, "pos": pos,
                "lemmas": [w for w in lemmas.split(",") if w],
                "hypernyms": hypernyms,
            })
        elif kind == "antonym":
            if len(fields) != 3:
                raise ConversionError(f"line {lineno}: antonym record needs two lemmas")
            antonyms.append([fields[1], fields[2]])
        else:
            raise ConversionError(f"line {lineno}: unknown record type {kind!r}")
    for synset in synsets:
        for parent in synset["hypernyms"]:
            if parent not in seen:
                raise ConversionError(
                    f"synset {synset['id']!r} references unknown hypernym {parent!r}"
                )
    _reject_cycles(synsets)
    return {"synsets": synsets, "antonyms": antonyms}


def _reject_cycles(synsets: list[dict]) -> None:
    parents = {s["id"]: list(s["hypernyms"]) for s in synsets}
    state: dict[str, int] = {}  # 1 = on stack, 2 = done

    def visit(node: str, trail: list[str]) -> None:
        state[node] = 1
        trail.append(node)
        for parent in parents[node]:
            if state.get(parent) == 1:
                cycle = trail[trail.index(parent):] + [parent]
                raise ConversionError("hypernym cycle: " + " -> ".join(cycle))
            if state.get(parent) != 2:
                visit(parent, trail)
        trail.pop()
        state[node] = 2

    for sid in parents:
        if state.get(sid) != 2:
            visit(sid, [])


def convert_lexical_graph(source: str | Path, out_path: str | Path) -> None:
    doc = parse_release(source)
    atomic_write_text(out_path, json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
