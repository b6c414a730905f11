"""Tag-aware transliteration pipeline.

Per token: look the surface form up in the tag lexicon; if a tag is found,
stem with that tag and try a tag-conditioned suffix rule (the knowledge
that ergative ે becomes the separate postposition ने while locative ે
becomes पर lives here). Whenever no tag or no rule applies, the token
falls back to naive codepoint mapping, so the pipeline is total.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum

from . import script_map
from .errors import DuplicateRuleError, ParseError
from .pos_lexicon import TagLexicon
from .script_map import TransliterationTable, transliterate_string
from .stemmer import StemRuleSet, tag_matches


class RuleAction(Enum):
    EMIT_SEPARATE_WORD = "SEP"
    ATTACH_TO_STEM = "ATTACH"


class TokenPath(Enum):
    TAG_CONDITIONED = "TagConditioned"
    NAIVE_FALLBACK = "NaiveFallback"
    PASSTHROUGH = "Passthrough"


@dataclass(frozen=True)
class TagSuffixRule:
    suffix: str
    tag_pattern: str | None
    action: RuleAction
    target: str
    rule_id: str


@dataclass(frozen=True)
class TokenResult:
    """Decision trace for one token."""

    source: str
    output: str
    path: TokenPath
    tag_used: str | None = None
    stem_rule_id: str | None = None
    tag_suffix_rule_id: str | None = None


class TagRuleTable:
    """Suffix-rendering rules keyed on (suffix, tag pattern)."""

    def __init__(self, rules: list[TagSuffixRule]):
        self.rules = list(rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def match(self, suffix: str, tag: str | None) -> TagSuffixRule | None:
        """Most specific matching rule: exact tag beats ``*`` beats absent;
        remaining ties go to file order."""
        def specificity(rule: TagSuffixRule) -> int:
            if rule.tag_pattern is None:
                return 2
            if rule.tag_pattern == "*":
                return 1
            return 0

        candidates = [
            (specificity(rule), index, rule)
            for index, rule in enumerate(self.rules)
            if rule.suffix == suffix and tag_matches(rule.tag_pattern, tag)
        ]
        if not candidates:
            return None
        return min(candidates)[2]

    def by_id(self, rule_id: str) -> TagSuffixRule:
        for rule in self.rules:
            if rule.rule_id == rule_id:
                return rule
        raise KeyError(rule_id)


def load_tag_rules(text: str, source: str | None = None) -> TagRuleTable:
    """Parse a tag-rule file.

    Format: ``suffix<TAB>tag_pattern<TAB>SEP|ATTACH<TAB>target<TAB>rule_id``,
    ``-`` for an absent tag pattern, ``#`` comments and blank lines ignored.
    """
    rules: list[TagSuffixRule] = []
    seen_keys: set[tuple[str, str | None]] = set()
    seen_ids: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise ParseError(
                f"expected 5 tab-separated fields, got {len(fields)}",
                line=lineno,
                source=source,
            )
        suffix_raw, tag_raw, action_raw, target_raw, rule_id = fields
        suffix = unicodedata.normalize("NFC", suffix_raw)
        if not suffix:
            raise ParseError("empty suffix", line=lineno, source=source)
        try:
            action = RuleAction(action_raw)
        except ValueError:
            raise ParseError(
                f"action must be SEP or ATTACH, got {action_raw!r}",
                line=lineno,
                source=source,
            ) from None
        target = unicodedata.normalize("NFC", target_raw)
        if not target or any(c.isspace() for c in target):
            raise ParseError(
                f"target must be non-empty and whitespace-free: {target_raw!r}",
                line=lineno,
                source=source,
            )
        if not rule_id.strip():
            raise ParseError("empty rule_id", line=lineno, source=source)
        rule_id = rule_id.strip()
        tag_pattern = None if tag_raw == "-" else tag_raw
        key = (suffix, tag_pattern)
        if key in seen_keys:
            raise DuplicateRuleError(
                f"duplicate rule for suffix {suffix!r}, tag {tag_raw!r}",
                line=lineno,
                source=source,
            )
        if rule_id in seen_ids:
            raise DuplicateRuleError(f"duplicate rule_id {rule_id!r}", line=lineno, source=source)
        seen_keys.add(key)
        seen_ids.add(rule_id)
        rules.append(TagSuffixRule(suffix, tag_pattern, action, target, rule_id))
    return TagRuleTable(rules)


def _is_punct(c: str) -> bool:
    return unicodedata.category(c).startswith("P")


@dataclass(frozen=True)
class Pipeline:
    """Read-only bundle of the four processing resources.

    Everything is immutable during processing, so one pipeline can serve
    any number of concurrent documents.
    """

    table: TransliterationTable
    lexicon: TagLexicon = field(default_factory=TagLexicon)
    stem_rules: StemRuleSet = field(default_factory=lambda: StemRuleSet([]))
    tag_rules: TagRuleTable = field(default_factory=lambda: TagRuleTable([]))

    def process_token(self, token: str) -> TokenResult:
        """Run one whitespace-free token through the tag/stem/rule cascade."""
        token = unicodedata.normalize("NFC", token)
        if not script_map.contains_gujarati(token):
            return TokenResult(token, token, TokenPath.PASSTHROUGH)
        tag = self.lexicon.lookup(token)
        if tag is not None:
            split = self.stem_rules.stem(token, tag)
            if split.rule_id is not None:
                rule = self.tag_rules.match(split.suffix, tag)
                if rule is not None:
                    stem_out = transliterate_string(self.table, split.stem)
                    if rule.action is RuleAction.EMIT_SEPARATE_WORD:
                        output = stem_out + " " + rule.target
                    else:
                        output = stem_out + rule.target
                    return TokenResult(
                        token,
                        output,
                        TokenPath.TAG_CONDITIONED,
                        tag_used=tag,
                        stem_rule_id=split.rule_id,
                        tag_suffix_rule_id=rule.rule_id,
                    )
        return TokenResult(
            token,
            transliterate_string(self.table, token),
            TokenPath.NAIVE_FALLBACK,
            tag_used=tag,
        )

    def process_text(self, text: str) -> tuple[list[TokenResult], str]:
        """Tokenize on whitespace, detach edge punctuation, process, rejoin.

        Detached punctuation becomes its own Passthrough result; a detached
        "." in sentence-final position is rendered through the table's
        punctuation rules (the danda). Chunk pieces are glued back without
        spaces; chunks are joined with single spaces.
        """
        text = unicodedata.normalize("NFC", text)
        results: list[TokenResult] = []
        chunk_outputs: list[str] = []
        for chunk in text.split():
            outputs: list[str] = []
            offset = 0
            for piece in _split_edge_punctuation(chunk):
                offset += len(piece)
                result = None
                if len(piece) == 1 and _is_punct(piece):
                    # A chunk-final character was followed by whitespace or
                    # end of text in the original, hence following=None.
                    following = chunk[offset] if offset < len(chunk) else None
                    mapped = script_map.punctuation_target(self.table, piece, following)
                    if mapped is not None:
                        result = TokenResult(piece, mapped, TokenPath.PASSTHROUGH)
                if result is None:
                    result = self.process_token(piece)
                results.append(result)
                outputs.append(result.output)
            chunk_outputs.append("".join(outputs))
        return results, " ".join(chunk_outputs)


def _split_edge_punctuation(chunk: str) -> list[str]:
    """Split a whitespace token into leading punctuation characters, the
    core, and trailing punctuation characters, preserving order."""
    start = 0
    end = len(chunk)
    while start < end and _is_punct(chunk[start]):
        start += 1
    while end > start and _is_punct(chunk[end - 1]):
        end -= 1
    pieces = list(chunk[:start])
    if end > start:
        pieces.append(chunk[start:end])
    pieces.extend(chunk[end:])
    return pieces
