"""Command-line entry points: MCQ generation, evaluation metrics, file checking.

Exit codes for ``generate``: 0 all QAPs yielded three distractors, 2 at least
one shortfall (partial results are still written), 1 unreadable or invalid
inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .annotation import load_articles, load_qaps
from .assembly import DISTRACTORS_PER_MCQ, Resources, derive_rng, generate_mcq
from .config import Config
from .entity import load_kb
from .errors import ConfigError, DistractorError, NoTargetError
from .lexres import load_lexical_graph, load_vectors

SEED_ENV_VAR = "DISTRACTOR_SEED"

_CONFIG_KEYS = {
    "sim_lo": float, "sim_hi": float, "wup_fallback": float, "relax_step": float,
    "relax_max_rounds": int, "sd_inverted": bool, "seed": int,
    "strategies": list, "local_windows": dict, "global_domains": dict,
}


def load_config(path: str | Path | None) -> Config:
    """Config from a JSON file; documented defaults when ``path`` is None.
    Unknown keys are rejected so threshold typos cannot silently pass."""
    if path is None:
        cfg = Config()
        cfg.validate()
        return cfg
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError("(file)", f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError("(file)", "config must be a JSON object")
    kwargs = {}
    for key, value in doc.items():
        if key not in _CONFIG_KEYS:
            raise ConfigError(key, "unknown configuration key")
        want = _CONFIG_KEYS[key]
        if want is float and isinstance(value, (int, float)) and not isinstance(value, bool):
            value = float(value)
        elif not isinstance(value, want) or (want is int and isinstance(value, bool)):
            raise ConfigError(key, f"expected {want.__name__}, got {type(value).__name__}")
        if key == "strategies":
            value = tuple(value)
        if key == "local_windows":
            value = {k: int(v) for k, v in value.items()}
        if key == "global_domains":
            value = {k: (int(v[0]), int(v[1])) for k, v in value.items()}
        kwargs[key] = value
    cfg = Config(**kwargs)
    cfg.validate()
    return cfg


def _resolve_seed(arg_seed: int | None, cfg: Config) -> int:
    if arg_seed is not None:
        return arg_seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ConfigError(SEED_ENV_VAR, f"not an integer: {env!r}") from None
    if cfg.seed is not None:
        return cfg.seed
    return 0


def _mcq_line(result) -> str:
    obj = {
        "article_id": result.article_id,
        "question": result.question,
        "answer": result.answer,
        "distractors": list(result.distractors),
        "provenance": [p.to_dict() for p in result.provenance],
    }
    return json.dumps(obj, ensure_ascii=False)


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        cfg = load_config(args.config)
        articles = load_articles(args.articles)
        qaps = load_qaps(args.qaps)
        resources = Resources(
            vectors=load_vectors(args.vectors),
            graph=load_lexical_graph(args.lexgraph),
            kb=load_kb(args.kb),
        )
    except (DistractorError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    for qap in qaps:
        if qap.article_id not in articles:
            print(f"error: QAP references unknown article_id {qap.article_id!r}", file=sys.stderr)
            return 1

    seed = _resolve_seed(args.seed, cfg)
    lines: list[str] = []
    shortfall = False
    for index, qap in enumerate(qaps):
        rng = derive_rng(seed, index)
        try:
            result = generate_mcq(qap, articles[qap.article_id], resources, cfg, rng)
        except NoTargetError as exc:
            print(f"warning: skipping QAP {qap.question!r}: {exc}", file=sys.stderr)
            shortfall = True
            continue
        except DistractorError as exc:
            print(f"error: QAP {qap.question!r}: {exc}", file=sys.stderr)
            return 1
        if not result.complete:
            print(
                f"warning: {len(result.distractors)}/{DISTRACTORS_PER_MCQ} distractors "
                f"for QAP {qap.question!r}",
                file=sys.stderr,
            )
            shortfall = True
        lines.append(_mcq_line(result))

    text = "".join(line + "\n" for line in lines)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 2 if shortfall else 0


@dataclass(frozen=True)
class EvalLabels:
    grammatical: bool
    relevant_with_distraction: bool
    sufficient_distraction: bool


@dataclass(frozen=True)
class EvalReport:
    n_mcqs: int
    n_distractors: int
    n_grammatical: int
    n_relevant: int
    n_sufficient: int
    n_adequate_mcq: int
    n_acceptable_mcq: int

    @property
    def pct_grammatical(self) -> float:
        return 100.0 * self.n_grammatical / self.n_distractors

    @property
    def pct_relevant(self) -> float:
        return 100.0 * self.n_relevant / self.n_distractors

    @property
    def pct_sufficient(self) -> float:
        return 100.0 * self.n_sufficient / self.n_distractors

    @property
    def pct_adequate_mcq(self) -> float:
        return 100.0 * self.n_adequate_mcq / self.n_mcqs

    @property
    def pct_acceptable_mcq(self) -> float:
        return 100.0 * self.n_acceptable_mcq / self.n_mcqs

    def to_dict(self) -> dict:
        return {
            "counts": {
                "mcqs": self.n_mcqs,
                "distractors": self.n_distractors,
                "grammatical": self.n_grammatical,
                "relevant_with_distraction": self.n_relevant,
                "sufficient_distraction": self.n_sufficient,
                "adequate_mcqs": self.n_adequate_mcq,
                "acceptable_mcqs": self.n_acceptable_mcq,
            },
            "percentages": {
                "grammatical": round(self.pct_grammatical, 1),
                "relevant_with_distraction": round(self.pct_relevant, 1),
                "sufficient_distraction": round(self.pct_sufficient, 1),
                "adequate_mcqs": round(self.pct_adequate_mcq, 1),
                "acceptable_mcqs": round(self.pct_acceptable_mcq, 1),
            },
        }

    def table(self) -> str:
        rows = [
            ("grammatical distractors", self.n_grammatical, self.n_distractors, self.pct_grammatical),
            ("relevant with distraction", self.n_relevant, self.n_distractors, self.pct_relevant),
            ("sufficient distraction", self.n_sufficient, self.n_distractors, self.pct_sufficient),
            ("adequate MCQs", self.n_adequate_mcq, self.n_mcqs, self.pct_adequate_mcq),
            ("acceptable MCQs", self.n_acceptable_mcq, self.n_mcqs, self.pct_acceptable_mcq),
        ]
        width = max(len(r[0]) for r in rows)
        lines = [f"{name:<{width}}  {num:>4}/{den:<4} {pct:6.1f}%" for name, num, den, pct in rows]
        return "\n".join(lines)


def compute_eval_report(
    mcq_distractor_counts: dict[str, int],
    labels_by_question: dict[str, list[EvalLabels]],
) -> EvalReport:
    n_mcqs = len(mcq_distractor_counts)
    n_distractors = n_grammatical = n_relevant = n_sufficient = 0
    n_adequate = n_acceptable = 0
    for question in mcq_distractor_counts:
        labels = labels_by_question[question]
        adequate_here = 0
        for lab in labels:
            n_distractors += 1
            n_grammatical += lab.grammatical
            n_relevant += lab.relevant_with_distraction
            n_sufficient += lab.sufficient_distraction
            adequate_here += lab.grammatical and lab.relevant_with_distraction
        n_adequate += adequate_here == DISTRACTORS_PER_MCQ
        n_acceptable += adequate_here >= 1
    return EvalReport(
        n_mcqs=n_mcqs, n_distractors=n_distractors, n_grammatical=n_grammatical,
        n_relevant=n_relevant, n_sufficient=n_sufficient,
        n_adequate_mcq=n_adequate, n_acceptable_mcq=n_acceptable,
    )


def _load_mcq_lines(path: str | Path) -> dict[str, int]:
    counts: dict[str, int] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        obj = json.loads(line)
        for key in ("question", "distractors"):
            if key not in obj:
                raise DistractorError(f"MCQ line {lineno} missing {key!r}")
        if obj["question"] in counts:
            raise DistractorError(f"duplicate MCQ question {obj['question']!r}")
        counts[obj["question"]] = len(obj["distractors"])
    return counts


def _load_labels(path: str | Path) -> dict[str, list[EvalLabels]]:
    out: dict[str, list[EvalLabels]] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        obj = json.loads(line)
        for key in ("question", "labels"):
            if key not in obj:
                raise DistractorError(f"label line {lineno} missing {key!r}")
        labels = []
        for i, raw in enumerate(obj["labels"]):
            lab = EvalLabels(
                grammatical=bool(raw["grammatical"]),
                relevant_with_distraction=bool(raw["relevant_with_distraction"]),
                sufficient_distraction=bool(raw["sufficient_distraction"]),
            )
            if lab.sufficient_distraction and not lab.relevant_with_distraction:
                raise DistractorError(
                    f"label {i} for question {obj['question']!r} marks sufficient "
                    "distraction without relevance"
                )
            labels.append(lab)
        out[obj["question"]] = labels
    return out


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        counts = _load_mcq_lines(args.mcqs)
        labels = _load_labels(args.labels)
    except (DistractorError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for question, n in counts.items():
        if question not in labels:
            print(f"error: no labels for question {question!r}", file=sys.stderr)
            return 1
        if n != DISTRACTORS_PER_MCQ or len(labels[question]) != DISTRACTORS_PER_MCQ:
            print(
                f"error: question {question!r} needs {DISTRACTORS_PER_MCQ} distractors "
                f"and {DISTRACTORS_PER_MCQ} labels",
                file=sys.stderr,
            )
            return 1
    for question in labels:
        if question not in counts:
            print(f"error: labels for unknown question {question!r}", file=sys.stderr)
            return 1

    report = compute_eval_report(counts, labels)
    payload = json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    print(report.table(), file=sys.stderr)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    """Validate resource files by loading them through the package parsers."""
    checks = []
    if args.articles:
        checks.append(("articles", args.articles, load_articles))
    if args.qaps:
        checks.append(("qaps", args.qaps, load_qaps))
    if args.vectors:
        checks.append(("vectors", args.vectors, load_vectors))
    if args.lexgraph:
        checks.append(("lexgraph", args.lexgraph, load_lexical_graph))
    if args.kb:
        checks.append(("kb", args.kb, load_kb))
    if not checks:
        print("error: nothing to check; pass at least one file", file=sys.stderr)
        return 1
    status = 0
    for label, path, loader in checks:
        try:
            loader(path)
        except (DistractorError, OSError) as exc:
            print(f"error: {label} {path}: {exc}", file=sys.stderr)
            status = 1
        else:
            print(f"OK: {label} {path}")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distractorgen")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate MCQs from articles and QAPs")
    gen.add_argument("--articles", required=True)
    gen.add_argument("--qaps", required=True)
    gen.add_argument("--vectors", required=True)
    gen.add_argument("--lexgraph", required=True)
    gen.add_argument("--kb", required=True)
    gen.add_argument("--config", default=None)
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=cmd_generate)

    ev = sub.add_parser("eval", help="compute adequacy metrics from human labels")
    ev.add_argument("--mcqs", required=True)
    ev.add_argument("--labels", required=True)
    ev.add_argument("--out", default=None)
    ev.set_defaults(func=cmd_eval)

    chk = sub.add_parser("check", help="validate resource files")
    chk.add_argument("--articles", default=None)
    chk.add_argument("--qaps", default=None)
    chk.add_argument("--vectors", default=None)
    chk.add_argument("--lexgraph", default=None)
    chk.add_argument("--kb", default=None)
    chk.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
