"""Tagged-corpus ingestion and word-class lookup.

Corpus files hold one sentence per line as whitespace-separated
``word_TAG`` tokens (e.g. ``પ્રતિબંધ_NN``). Malformed tokens are reported
as diagnostics and skipped; they never abort an ingestion run.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import MalformedTokenError, ParseError

SNAPSHOT_HEADER = "#gujhin-lexicon-v1"


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: str


@dataclass(frozen=True)
class Diagnostic:
    source: str
    line: int
    column: int
    token: str
    reason: str


def parse_token(text: str) -> TaggedToken:
    """Split ``word_TAG`` on the LAST underscore.

    Surfaces may legitimately contain underscores from upstream tooling;
    tags never do, so the rightmost underscore is the separator.
    """
    surface, sep, tag = text.rpartition("_")
    if not sep:
        raise MalformedTokenError(f"no underscore in token {text!r}")
    if not surface:
        raise MalformedTokenError(f"empty surface in token {text!r}")
    if not tag:
        raise MalformedTokenError(f"empty tag in token {text!r}")
    return TaggedToken(unicodedata.normalize("NFC", surface), tag)


class TagLexicon:
    """word -> tag-frequency map; single-writer while ingesting, then frozen
    by convention and safe for concurrent lookups."""

    def __init__(self) -> None:
        self.entries: dict[str, Counter[str]] = {}
        self.total_tokens = 0
        self.total_sentences = 0

    def ingest_text(self, text: str, source: str = "<text>") -> list[Diagnostic]:
        """Count all well-formed tokens; return diagnostics for the rest."""
        diagnostics: list[Diagnostic] = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            self.total_sentences += 1
            pos = 0
            for token in line.split():
                start = line.index(token, pos)
                pos = start + len(token)
                column = start + 1
                try:
                    tagged = parse_token(token)
                except MalformedTokenError as exc:
                    diagnostics.append(Diagnostic(source, lineno, column, token, str(exc)))
                    continue
                self.entries.setdefault(tagged.surface, Counter())[tagged.tag] += 1
                self.total_tokens += 1
        return diagnostics

    def ingest_file(self, path: str | Path) -> list[Diagnostic]:
        path = Path(path)
        return self.ingest_text(path.read_text(encoding="utf-8"), source=str(path))

    def ingest_dir(self, path: str | Path) -> list[Diagnostic]:
        """Ingest every ``*.txt`` file, in lexicographic filename order."""
        diagnostics: list[Diagnostic] = []
        for file in sorted(Path(path).glob("*.txt")):
            diagnostics.extend(self.ingest_file(file))
        return diagnostics

    def lookup(self, surface: str) -> str | None:
        """Most frequent tag for ``surface``; lexicographic tie-break;
        None for never-seen words (this drives the naive fallback)."""
        counts = self.entries.get(unicodedata.normalize("NFC", surface))
        if not counts:
            return None
        return min(counts, key=lambda tag: (-counts[tag], tag))

    def __len__(self) -> int:
        return len(self.entries)

    def save(self, path: str | Path) -> None:
        """Write the versioned plain-text snapshot (diff-friendly: sorted)."""
        lines = [SNAPSHOT_HEADER, f"#sentences={self.total_sentences}"]
        for surface in sorted(self.entries):
            for tag in sorted(self.entries[surface]):
                lines.append(f"{surface}\t{tag}\t{self.entries[surface][tag]}")
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "TagLexicon":
        path = Path(path)
        text = path.read_text(encoding="utf-8")
        lines = text.splitlines()
        if not lines or lines[0].strip() != SNAPSHOT_HEADER:
            raise ParseError(
                f"not a lexicon snapshot (expected {SNAPSHOT_HEADER!r} header)",
                line=1,
                source=str(path),
            )
        lexicon = cls()
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            if line.startswith("#sentences="):
                lexicon.total_sentences = int(line.split("=", 1)[1])
                continue
            if line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise ParseError("expected surface<TAB>tag<TAB>count", line=lineno, source=str(path))
            surface, tag, count_raw = fields
            try:
                count = int(count_raw)
            except ValueError:
                raise ParseError(f"bad count {count_raw!r}", line=lineno, source=str(path)) from None
            if count < 1:
                raise ParseError(f"count must be >= 1, got {count}", line=lineno, source=str(path))
            lexicon.entries.setdefault(surface, Counter())[tag] += count
            lexicon.total_tokens += count
        return lexicon
