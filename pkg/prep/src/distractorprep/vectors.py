"""Normalize pretrained text-format vector files for the primary loader.

Ensures a count/dimension header, validates per-row dimensions, and drops
zero vectors (reporting how many were dropped).
"""

from __future__ import annotations

from pathlib import Path

from .manifest import atomic_write_text


class ConversionError(Exception):
    pass


def convert_vectors(source: str | Path, out_path: str | Path) -> int:
    """Returns the number of zero vectors dropped."""
    lines = Path(source).read_text(encoding="utf-8").splitlines()
    start = 0
    if lines:
        head = lines[0].split()
        if len(head) == 2 and all(f.lstrip("-").isdigit() for f in head):
            start = 1

    dimension: int | None = None
    rows: list[str] = []
    dropped = 0
    for lineno, line in enumerate(lines[start:], start=start + 1):
        if not line.strip():
            continue
        fields = line.rstrip("\n").split(" ")
        word, values = fields[0], fields[1:]
        if dimension is None:
            dimension = len(values)
            if dimension == 0:
                raise ConversionError(f"line {lineno}: row has no vector components")
        if len(values) != dimension:
            raise ConversionError(
                f"line {lineno}: expected {dimension} components, found {len(values)}"
            )
        try:
            floats = [float(v) for v in values]
        except ValueError as exc:
            raise ConversionError(f"line {lineno}: bad float ({exc})") from None
        if all(v == 0.0 for v in floats):
            dropped += 1
            continue
        rows.append(line)
    if dimension is None:
        raise ConversionError("vector source contains no rows")
    header = f"{len(rows)} {dimension}"
    atomic_write_text(out_path, "\n".join([header, *rows]) + "\n")
    return dropped
