"""Codepoint-level Gujarati to Devanagari mapping.

The two Unicode blocks are structurally parallel: for almost every assigned
Gujarati codepoint, subtracting ``0x0180`` lands on the corresponding
Devanagari codepoint (U+0A97 GA -> U+0917 GA, U+0ACD virama -> U+094D, the
digits U+0AE6..U+0AEF -> U+0966..U+096F, and so on). The default table is
therefore built from that offset rule plus an explicit exceptions list for
the handful of codepoints the rule cannot serve, instead of a hand-typed
hundred-row table. Everything outside the Gujarati block passes through
unchanged: mapping must never destroy user text.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

from .errors import NotInvertibleError, ParseError

GUJARATI_BLOCK_START = 0x0A80
GUJARATI_BLOCK_END = 0x0AFF
DEVANAGARI_BLOCK_START = 0x0900
DEVANAGARI_BLOCK_END = 0x097F

# Offset between the parallel blocks (U+0A80 - U+0900).
BLOCK_OFFSET = 0x0180

# Only this window is eligible for the offset rule; assigned block
# codepoints outside it (U+0AF0 abbreviation sign, U+0AF1 rupee sign,
# U+0AF9 ZHA, U+0AFA..U+0AFF) have no parallel Devanagari counterpart
# and become pass-through exceptions.
MAP_WINDOW_START = 0x0A81
MAP_WINDOW_END = 0x0AEF

DANDA = "।"


def _assigned(cp: int) -> bool:
    return unicodedata.category(chr(cp)) != "Cn"


@dataclass(frozen=True)
class PunctuationRule:
    """Target for one punctuation character, individually switchable."""

    target: str
    enabled: bool = True


@dataclass(frozen=True)
class TransliterationTable:
    """Immutable source->target codepoint table.

    ``exceptions`` overrides ``mappings``; an empty exception target means
    the character passes through unchanged. Safe to share across threads.
    """

    mappings: dict[int, int]
    exceptions: dict[int, str] = field(default_factory=dict)
    punctuation_rules: dict[str, PunctuationRule] = field(default_factory=dict)

    def reverse_mappings(self) -> dict[int, int]:
        """Target->source map over the non-exception entries (injective)."""
        return {tgt: src for src, tgt in self.mappings.items() if src not in self.exceptions}


def build_default_table(
    extra_exceptions: dict[int, str] | None = None,
    danda: bool = True,
) -> TransliterationTable:
    """Build the offset-rule table for the current Unicode database.

    ``extra_exceptions`` entries (e.g. from :func:`parse_exceptions`) override
    both the computed mappings and the computed pass-through exceptions.
    ``danda=False`` disables the sentence-final "." -> danda rule.
    """
    mappings: dict[int, int] = {}
    exceptions: dict[int, str] = {}
    for cp in range(GUJARATI_BLOCK_START, GUJARATI_BLOCK_END + 1):
        if not _assigned(cp):
            continue
        image = cp - BLOCK_OFFSET
        if MAP_WINDOW_START <= cp <= MAP_WINDOW_END and _assigned(image):
            mappings[cp] = image
        else:
            exceptions[cp] = ""
    if extra_exceptions:
        exceptions.update(extra_exceptions)
    return TransliterationTable(
        mappings=mappings,
        exceptions=exceptions,
        punctuation_rules={".": PunctuationRule(DANDA, enabled=danda)},
    )


def parse_exceptions(text: str, source: str | None = None) -> dict[int, str]:
    """Parse an exceptions file: ``U+XXXX<TAB>target`` per line.

    An empty target (or a line with no TAB at all, since editors strip
    trailing tabs) means pass-through. ``#`` lines and blank lines are
    ignored.
    """
    result: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) > 2:
            raise ParseError("expected U+XXXX<TAB>target", line=lineno, source=source)
        spec = fields[0].strip()
        target = fields[1] if len(fields) == 2 else ""
        if not spec.upper().startswith("U+"):
            raise ParseError(f"codepoint must start with U+: {spec!r}", line=lineno, source=source)
        try:
            cp = int(spec[2:], 16)
        except ValueError:
            raise ParseError(f"bad hex codepoint: {spec!r}", line=lineno, source=source) from None
        if not 0 <= cp <= 0x10FFFF:
            raise ParseError(f"codepoint out of range: {spec!r}", line=lineno, source=source)
        result[cp] = unicodedata.normalize("NFC", target) if target else ""
    return result


def transliterate_char(table: TransliterationTable, c: str) -> str:
    """Map a single character. Total: unknown characters come back as-is."""
    cp = ord(c)
    if cp in table.exceptions:
        target = table.exceptions[cp]
        return target if target else c
    if cp in table.mappings:
        return chr(table.mappings[cp])
    return c


def punctuation_target(table: TransliterationTable, c: str, following: str | None) -> str | None:
    """Mapped target for ``c`` if its rule is enabled and position is
    sentence-final (followed by whitespace or end of text), else None."""
    rule = table.punctuation_rules.get(c)
    if rule is None or not rule.enabled:
        return None
    if following is None or following.isspace():
        return rule.target
    return None


def transliterate_string(table: TransliterationTable, s: str) -> str:
    """Transliterate a whole string, NFC-normalizing first."""
    s = unicodedata.normalize("NFC", s)
    out: list[str] = []
    for i, c in enumerate(s):
        following = s[i + 1] if i + 1 < len(s) else None
        mapped = punctuation_target(table, c, following)
        out.append(mapped if mapped is not None else transliterate_char(table, c))
    return "".join(out)


def reverse_transliterate(table: TransliterationTable, s: str) -> str:
    """Invert :func:`transliterate_string` on the non-exception domain.

    Raises :class:`NotInvertibleError` for Devanagari codepoints that are
    not images of any mapped Gujarati codepoint (e.g. the nukta forms
    U+0958..U+095F).
    """
    reverse = table.reverse_mappings()
    s = unicodedata.normalize("NFC", s)
    out: list[str] = []
    for i, c in enumerate(s):
        cp = ord(c)
        if cp in reverse:
            out.append(chr(reverse[cp]))
        elif DEVANAGARI_BLOCK_START <= cp <= DEVANAGARI_BLOCK_END:
            raise NotInvertibleError(
                f"no Gujarati preimage for {c!r} (U+{cp:04X}) at position {i}"
            )
        else:
            out.append(c)
    return "".join(out)


def contains_gujarati(s: str) -> bool:
    """True if any codepoint of ``s`` lies in the Gujarati block."""
    return any(GUJARATI_BLOCK_START <= ord(c) <= GUJARATI_BLOCK_END for c in s)
