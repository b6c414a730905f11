"""Command-line front end: translit, stem, ingest, eval.

Resources come from an optional JSON config file; command-line flags win
over config values. Payload goes to stdout, diagnostics and traces to
stderr, and the exit code is 0 exactly when no resource or parse error
occurred.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from . import seed_stem_rules, seed_tag_rules
from .errors import GujhinError
from .evaluator import evaluate, parse_gold, render_report
from .pipeline import Pipeline, TagRuleTable, TokenResult, load_tag_rules
from .pos_lexicon import TagLexicon
from .script_map import build_default_table, parse_exceptions
from .stemmer import StemRuleSet, load_rules


@dataclass
class Config:
    exceptions_file: Path | None = None
    stem_rules_file: Path | None = None
    tag_rules_file: Path | None = None
    corpus_dir: Path | None = None
    gold_file: Path | None = None
    snapshot_file: Path | None = None
    danda: bool = True
    trace: bool = False

    _PATH_FIELDS = (
        "exceptions_file",
        "stem_rules_file",
        "tag_rules_file",
        "corpus_dir",
        "gold_file",
        "snapshot_file",
    )

    @classmethod
    def load(cls, path: str | Path) -> "Config":
        """Read a JSON config; relative paths resolve against the file."""
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise GujhinError(f"bad config {path}: {exc}") from None
        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise GujhinError(f"unknown config keys in {path}: {sorted(unknown)}")
        config = cls()
        for key, value in raw.items():
            if key in cls._PATH_FIELDS:
                value = (path.parent / value).resolve() if value else None
            setattr(config, key, value)
        return config

    def validate(self, snapshot_is_input: bool = False) -> None:
        """Every referenced path must exist; name the missing one.

        ``snapshot_file`` is only checked when the command reads it
        (translit/eval); for ingest it is the output path.
        """
        for name in self._PATH_FIELDS:
            if name == "snapshot_file" and not snapshot_is_input:
                continue
            value = getattr(self, name)
            if value is not None and not Path(value).exists():
                raise GujhinError(f"{name.replace('_', ' ')} not found: {value}")


def _apply_overrides(config: Config, args: argparse.Namespace) -> Config:
    overrides = {
        "exceptions_file": args.exceptions,
        "stem_rules_file": args.stem_rules,
        "tag_rules_file": args.tag_rules,
        "corpus_dir": getattr(args, "corpus", None),
        "gold_file": getattr(args, "gold", None),
        "snapshot_file": getattr(args, "lexicon", None),
    }
    for name, value in overrides.items():
        if value is not None:
            setattr(config, name, Path(value).resolve())
    if args.no_danda:
        config.danda = False
    if args.trace:
        config.trace = True
    return config


def _build_pipeline(config: Config) -> Pipeline:
    extra = {}
    if config.exceptions_file:
        extra = parse_exceptions(
            Path(config.exceptions_file).read_text(encoding="utf-8"),
            source=str(config.exceptions_file),
        )
    table = build_default_table(extra_exceptions=extra, danda=config.danda)

    if config.stem_rules_file:
        stem_rules = load_rules(
            Path(config.stem_rules_file).read_text(encoding="utf-8"),
            source=str(config.stem_rules_file),
        )
    else:
        stem_rules = seed_stem_rules()

    if config.tag_rules_file:
        tag_rules = load_tag_rules(
            Path(config.tag_rules_file).read_text(encoding="utf-8"),
            source=str(config.tag_rules_file),
        )
    else:
        tag_rules = seed_tag_rules()

    lexicon = TagLexicon()
    if config.snapshot_file:
        lexicon = TagLexicon.load(config.snapshot_file)
    if config.corpus_dir:
        lexicon.ingest_dir(config.corpus_dir)
    return Pipeline(table=table, lexicon=lexicon, stem_rules=stem_rules, tag_rules=tag_rules)


def _trace_line(result: TokenResult) -> str:
    return "\t".join(
        [
            result.source,
            result.path.value,
            result.tag_used or "-",
            result.stem_rule_id or "-",
            result.tag_suffix_rule_id or "-",
            result.output,
        ]
    )


def cmd_translit(args: argparse.Namespace, config: Config) -> int:
    pipeline = _build_pipeline(config)
    stream = open(args.input, encoding="utf-8") if args.input else sys.stdin
    try:
        for line in stream:
            results, output = pipeline.process_text(line.rstrip("\n"))
            print(output)
            if config.trace:
                for result in results:
                    print(_trace_line(result), file=sys.stderr)
    finally:
        if args.input:
            stream.close()
    return 0


def cmd_stem(args: argparse.Namespace, config: Config) -> int:
    if config.stem_rules_file:
        rules = load_rules(
            Path(config.stem_rules_file).read_text(encoding="utf-8"),
            source=str(config.stem_rules_file),
        )
    else:
        rules = seed_stem_rules()
    words = args.words or sys.stdin.read().split()
    print("surface\tstem\tsuffix\trule_id")
    for word in words:
        result = rules.stem(word)
        print(f"{word}\t{result.stem}\t{result.suffix}\t{result.rule_id or '-'}")
    return 0


def cmd_ingest(args: argparse.Namespace, config: Config) -> int:
    if config.corpus_dir is None:
        raise GujhinError("no corpus directory (set corpus_dir in config or pass --corpus)")
    lexicon = TagLexicon()
    diagnostics = lexicon.ingest_dir(config.corpus_dir)
    for diag in diagnostics:
        print(
            f"{diag.source}:{diag.line}:{diag.column}: {diag.reason}",
            file=sys.stderr,
        )
    print(f"sentences={lexicon.total_sentences}")
    print(f"tokens={lexicon.total_tokens}")
    print(f"entries={len(lexicon)}")
    print(f"malformed={len(diagnostics)}")
    out = args.out or config.snapshot_file
    if out:
        lexicon.save(out)
        print(f"snapshot={out}")
    return 0


def cmd_eval(args: argparse.Namespace, config: Config) -> int:
    if config.gold_file is None:
        raise GujhinError("no gold file (set gold_file in config or pass --gold)")
    gold = parse_gold(
        Path(config.gold_file).read_text(encoding="utf-8"),
        source=str(config.gold_file),
    )
    pipeline = _build_pipeline(config)
    outputs = []
    for sentence in gold:
        for record in sentence:
            result = pipeline.process_token(record.source)
            outputs.append(result.output)
            if config.trace:
                print(_trace_line(result), file=sys.stderr)
    report = evaluate(gold, outputs)
    print(render_report(report, kv=args.kv))
    return 0


def _add_resource_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--exceptions", help="transliteration exceptions file")
    parser.add_argument("--stem-rules", help="stem rule file (default: packaged seed rules)")
    parser.add_argument("--tag-rules", help="tag rule file (default: packaged seed rules)")
    parser.add_argument("--no-danda", action="store_true", help="keep '.' instead of danda")
    parser.add_argument("--trace", action="store_true", help="per-token decisions on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gujhin",
        description="Gujarati to Hindi transliteration with stemming and tag-aware rules",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("translit", help="transliterate text from stdin or a file")
    _add_resource_flags(p)
    p.add_argument("--corpus", help="tagged corpus directory for the lexicon")
    p.add_argument("--lexicon", help="lexicon snapshot file to load")
    p.add_argument("-i", "--input", help="input file (default: stdin)")
    p.set_defaults(func=cmd_translit, snapshot_is_input=True)

    p = sub.add_parser("stem", help="print stem/suffix splits for words")
    _add_resource_flags(p)
    p.add_argument("words", nargs="*", help="words to stem (default: stdin)")
    p.set_defaults(func=cmd_stem)

    p = sub.add_parser("ingest", help="build a lexicon from a tagged corpus directory")
    _add_resource_flags(p)
    p.add_argument("--corpus", help="tagged corpus directory")
    p.add_argument("-o", "--out", help="snapshot file to write")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("eval", help="score the pipeline against a gold file")
    _add_resource_flags(p)
    p.add_argument("--corpus", help="tagged corpus directory for the lexicon")
    p.add_argument("--lexicon", help="lexicon snapshot file to load")
    p.add_argument("--gold", help="gold TSV file")
    p.add_argument("--kv", action="store_true", help="key=value output instead of a table")
    p.set_defaults(func=cmd_eval, snapshot_is_input=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = Config.load(args.config) if args.config else Config()
        config = _apply_overrides(config, args)
        config.validate(snapshot_is_input=getattr(args, "snapshot_is_input", False))
        return args.func(args, config)
    except (GujhinError, OSError) as exc:
        print(f"gujhin: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
