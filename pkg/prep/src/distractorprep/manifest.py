"""Build manifest: inputs, tagger identity, outputs with checksums.

Serialization is timestamp-free and key-sorted so a rerun over identical
inputs reproduces the manifest byte for byte.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path


def sha256_of(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def atomic_write_text(path: str | Path, text: str) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


@dataclass
class PrepManifest:
    inputs: list[str] = field(default_factory=list)
    tagger: dict[str, str] = field(default_factory=dict)   # {"id": ..., "version": ...}
    outputs: dict[str, str] = field(default_factory=dict)  # path -> sha256
    warnings: list[str] = field(default_factory=list)

    def record_input(self, path: str | Path) -> None:
        name = str(path)
        if name not in self.inputs:
            self.inputs.append(name)

    def record_output(self, path: str | Path) -> None:
        self.outputs[str(path)] = sha256_of(path)

    def set_tagger(self, tagger_id: str, version: str) -> None:
        if self.tagger and (self.tagger.get("id"), self.tagger.get("version")) != (tagger_id, version):
            self.warnings.append(
                f"tagger changed from {self.tagger.get('id')}:{self.tagger.get('version')} "
                f"to {tagger_id}:{version}"
            )
        self.tagger = {"id": tagger_id, "version": version}

    def to_json(self) -> str:
        doc = {
            "inputs": sorted(self.inputs),
            "tagger": self.tagger,
            "outputs": dict(sorted(self.outputs.items())),
            "warnings": self.warnings,
        }
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def save(self, path: str | Path) -> None:
        atomic_write_text(path, self.to_json())

    @classmethod
    def load(cls, path: str | Path) -> "PrepManifest":
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(
            inputs=list(doc.get("inputs", [])),
            tagger=dict(doc.get("tagger", {})),
            outputs=dict(doc.get("outputs", {})),
            warnings=list(doc.get("warnings", [])),
        )
