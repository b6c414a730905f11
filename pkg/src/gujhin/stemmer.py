"""Ordered-rule suffix stripping for Gujarati surface forms.

A rule set strips at most one suffix per word (composite suffixes like
ઓમાંથી are encoded as single rules, not as chains), trying longer suffixes
before shorter ones. Each rule carries a minimum-stem guard so degenerate
empty or single-matra stems never escape.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from .errors import DuplicateRuleError, ParseError

DEFAULT_MIN_STEM = 2
DEFAULT_PRIORITY = 100


def tag_matches(pattern: str | None, tag: str | None) -> bool:
    """Tag matcher shared with the pipeline's tag-suffix rules.

    ``None`` (absent) matches anything; ``"*"`` matches any present tag;
    otherwise the match is exact string equality (no tag hierarchy: NN
    does not match NNP).
    """
    if pattern is None:
        return True
    if pattern == "*":
        return tag is not None
    return tag == pattern


@dataclass(frozen=True)
class StemRule:
    suffix: str
    min_stem_codepoints: int = DEFAULT_MIN_STEM
    tag_pattern: str | None = None
    priority: int = DEFAULT_PRIORITY
    rule_id: str = ""


@dataclass(frozen=True)
class StemResult:
    """Split of a surface form; stem + suffix always equals the input."""

    stem: str
    suffix: str
    rule_id: str | None


class StemRuleSet:
    """Rules ordered longest-suffix first, then priority, then file order."""

    def __init__(self, rules: list[StemRule]):
        indexed = sorted(
            enumerate(rules),
            key=lambda item: (-len(item[1].suffix), item[1].priority, item[0]),
        )
        self.rules = [rule for _, rule in indexed]

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def stem(self, surface: str, tag: str | None = None) -> StemResult:
        """Strip the first matching suffix; no-match returns the word whole.

        Exactly zero or one rule fires (no recursive stripping). The fired
        rule must leave at least ``min_stem_codepoints`` codepoints.
        """
        for rule in self.rules:
            if not surface.endswith(rule.suffix):
                continue
            if not tag_matches(rule.tag_pattern, tag):
                continue
            stem_len = len(surface) - len(rule.suffix)
            if stem_len < rule.min_stem_codepoints:
                continue
            return StemResult(surface[:stem_len], rule.suffix, rule.rule_id)
        return StemResult(surface, "", None)

    def by_id(self, rule_id: str) -> StemRule:
        for rule in self.rules:
            if rule.rule_id == rule_id:
                return rule
        raise KeyError(rule_id)


def load_rules(text: str, source: str | None = None) -> StemRuleSet:
    """Parse a rule file.

    Format, one rule per line, tab-separated:
    ``suffix<TAB>min_stem<TAB>tag_pattern<TAB>priority<TAB>rule_id``
    with ``-`` for an absent tag pattern. ``#`` lines and blank lines are
    ignored. Duplicate (suffix, tag_pattern) pairs and duplicate rule ids
    are rejected.
    """
    rules: list[StemRule] = []
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
        suffix_raw, min_stem_raw, tag_raw, priority_raw, rule_id = fields
        suffix = unicodedata.normalize("NFC", suffix_raw)
        if not suffix:
            raise ParseError("empty suffix", line=lineno, source=source)
        try:
            min_stem = int(min_stem_raw)
            priority = int(priority_raw)
        except ValueError:
            raise ParseError(
                f"min_stem and priority must be integers: {min_stem_raw!r}, {priority_raw!r}",
                line=lineno,
                source=source,
            ) from None
        if min_stem < 1:
            raise ParseError(f"min_stem must be >= 1, got {min_stem}", line=lineno, source=source)
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
        rules.append(StemRule(suffix, min_stem, tag_pattern, priority, rule_id))
    return StemRuleSet(rules)
