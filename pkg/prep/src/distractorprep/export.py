"""Export raw article text into the annotated-article JSONL format."""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .manifest import PrepManifest, atomic_write_text
from .primary import check_with_primary
from .tagger import TaggerAdapter, TaggerFailure


def export_annotations(
    input_dir: str | Path,
    out_dir: str | Path,
    tagger: TaggerAdapter,
    manifest: PrepManifest,
    validate: bool = True,
    primary_cmd=None,
) -> list[str]:
    """Tag every ``*.txt`` under ``input_dir`` into ``out_dir``.

    Returns a list of per-article error messages; outputs for failed articles
    are not written. Successful outputs are checksummed into the manifest.
    """
    input_dir = Path(input_dir)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest.set_tagger(tagger.tagger_id, tagger.version)

    errors: list[str] = []
    for source in sorted(input_dir.glob("*.txt")):
        article_id = source.stem
        manifest.record_input(source)
        try:
            sentences = tagger.tag(source.read_text(encoding="utf-8"))
        except TaggerFailure as exc:
            errors.append(f"{source.name}: {exc}")
            continue
        lines = [json.dumps({"article_id": article_id}, ensure_ascii=False)]
        lines += [json.dumps(s, ensure_ascii=False) for s in sentences]
        target = out_dir / f"{article_id}.jsonl"
        atomic_write_text(target, "\n".join(lines) + "\n")
        if validate:
            kwargs = {} if primary_cmd is None else {"command": primary_cmd}
            check_with_primary("articles", target, **kwargs)
        manifest.record_output(target)
    for message in errors:
        print(f"error: {message}", file=sys.stderr)
    return errors
