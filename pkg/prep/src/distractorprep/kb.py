"""Build knowledge-base JSON from curated CSV lists (category,group,surface)."""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .manifest import atomic_write_text

CATEGORIES = ("person", "location", "organization")


class ConversionError(Exception):
    pass


def build_kb(source: str | Path, out_path: str | Path) -> None:
    groups: dict[str, dict[str, list[str]]] = {}
    with open(source, newline="", encoding="utf-8") as handle:
        for lineno, row in enumerate(csv.reader(handle), start=1):
            if not row or row[0].startswith("#"):
                continue
            if len(row) != 3:
                raise ConversionError(f"line {lineno}: need category,group,surface")
            category, group, surface = (f.strip() for f in row)
            if category not in CATEGORIES:
                raise ConversionError(f"line {lineno}: unknown category {category!r}")
            if not surface:
                raise ConversionError(f"line {lineno}: empty surface")
            bucket = groups.setdefault(category, {}).setdefault(group, [])
            if surface not in bucket:
                bucket.append(surface)
    if not groups:
        raise ConversionError("no knowledge-base rows found")
    atomic_write_text(out_path, json.dumps(groups, indent=2, ensure_ascii=False) + "\n")
