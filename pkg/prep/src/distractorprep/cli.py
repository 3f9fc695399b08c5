"""Command-line surface for the prep toolchain."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .export import export_annotations
from .kb import ConversionError as KbError, build_kb
from .lexgraph import ConversionError as GraphError, convert_lexical_graph
from .manifest import PrepManifest
from .primary import PrimaryCheckFailure, check_with_primary
from .tagger import TaggerFailure, get_tagger
from .vectors import ConversionError as VectorError, convert_vectors


def _load_manifest(path: str | None) -> PrepManifest:
    if path and Path(path).exists():
        return PrepManifest.load(path)
    return PrepManifest()


def _finish(manifest: PrepManifest, path: str | None) -> None:
    if path:
        manifest.save(path)
        for warning in manifest.warnings:
            print(f"warning: {warning}", file=sys.stderr)


def cmd_export(args: argparse.Namespace) -> int:
    manifest = _load_manifest(args.manifest)
    try:
        tagger = get_tagger(args.tagger, kb_path=args.kb)
        errors = export_annotations(
            args.input, args.out, tagger, manifest, validate=not args.no_validate,
        )
    except (TaggerFailure, PrimaryCheckFailure, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _finish(manifest, args.manifest)
    return 1 if errors else 0


def cmd_convert_lexgraph(args: argparse.Namespace) -> int:
    manifest = _load_manifest(args.manifest)
    try:
        convert_lexical_graph(args.source, args.out)
        if not args.no_validate:
            check_with_primary("lexgraph", args.out)
    except (GraphError, PrimaryCheckFailure, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    manifest.record_input(args.source)
    manifest.record_output(args.out)
    _finish(manifest, args.manifest)
    return 0


def cmd_convert_vectors(args: argparse.Namespace) -> int:
    manifest = _load_manifest(args.manifest)
    try:
        dropped = convert_vectors(args.source, args.out)
        if not args.no_validate:
            check_with_primary("vectors", args.out)
    except (VectorError, PrimaryCheckFailure, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"dropped {dropped} zero vectors")
    manifest.record_input(args.source)
    manifest.record_output(args.out)
    _finish(manifest, args.manifest)
    return 0


def cmd_build_kb(args: argparse.Namespace) -> int:
    manifest = _load_manifest(args.manifest)
    try:
        build_kb(args.source, args.out)
        if not args.no_validate:
            check_with_primary("kb", args.out)
    except (KbError, PrimaryCheckFailure, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    manifest.record_input(args.source)
    manifest.record_output(args.out)
    _finish(manifest, args.manifest)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distractor-prep")
    sub = parser.add_subparsers(dest="command", required=True)

    exp = sub.add_parser("export-annotations", help="tag raw .txt articles into JSONL")
    exp.add_argument("--input", required=True, help="directory of .txt articles")
    exp.add_argument("--out", required=True, help="output directory")
    exp.add_argument("--tagger", default="builtin")
    exp.add_argument("--kb", default=None, help="KB file for the builtin gazetteer")
    exp.add_argument("--manifest", default=None)
    exp.add_argument("--no-validate", action="store_true")
    exp.set_defaults(func=cmd_export)

    lex = sub.add_parser("convert-lexgraph", help="TSV release to lexical-graph JSON")
    lex.add_argument("--source", required=True)
    lex.add_argument("--out", required=True)
    lex.add_argument("--manifest", default=None)
    lex.add_argument("--no-validate", action="store_true")
    lex.set_defaults(func=cmd_convert_lexgraph)

    vec = sub.add_parser("convert-vectors", help="normalize a text vector file")
    vec.add_argument("--source", required=True)
    vec.add_argument("--out", required=True)
    vec.add_argument("--manifest", default=None)
    vec.add_argument("--no-validate", action="store_true")
    vec.set_defaults(func=cmd_convert_vectors)

    kb = sub.add_parser("build-kb", help="CSV lists to knowledge-base JSON")
    kb.add_argument("--source", required=True)
    kb.add_argument("--out", required=True)
    kb.add_argument("--manifest", default=None)
    kb.add_argument("--no-validate", action="store_true")
    kb.set_defaults(func=cmd_build_kb)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())
