"""Validation hook: run emitted files through the primary component's check mode."""

from __future__ import annotations

import subprocess
import sys
from pathlib import Path

DEFAULT_PRIMARY_CMD = (sys.executable, "-m", "distractorgen")


class PrimaryCheckFailure(Exception):
    def __init__(self, kind: str, path: str, output: str):
        super().__init__(f"{kind} file {path} rejected by primary check:\n{output}")
        self.kind = kind
        self.path = path
        self.output = output


def check_with_primary(kind: str, path: str | Path, command=DEFAULT_PRIMARY_CMD) -> None:
    """``kind`` is one of articles/qaps/vectors/lexgraph/kb. Raises on any
    rejection or on warnings in the check output."""
    proc = subprocess.run(
        [*command, "check", f"--{kind}", str(path)],
        capture_output=True, text=True,
    )
    combined = proc.stdout + proc.stderr
    if proc.returncode != 0 or "warning" in combined.lower():
        raise PrimaryCheckFailure(kind, str(path), combined.strip())
