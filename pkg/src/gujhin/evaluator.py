"""Word-level scoring of system outputs against a gold file.

Each gold record carries the reference translation and a list of
acceptable transliterations; an output is "same" when it equals the
reference translation and "wrong" when it matches nothing in the
acceptable list. Efficiency is 100 minus the wrong percentage. All
comparisons are NFC-normalized exact string equality.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from decimal import Decimal
from typing import Sequence

from .errors import EmptyEvaluationError, LengthMismatchError, ParseError


def _round2(numerator: int, denominator: int) -> Decimal:
    """Round ``100 * numerator / denominator`` to 2 decimals, half to even.

    Exact integer arithmetic throughout; the result is a terminating
    two-place Decimal, so wrong_pct + efficiency_pct == 100.00 holds
    exactly for every count combination.
    """
    scaled, remainder = divmod(10000 * numerator, denominator)
    double = 2 * remainder
    if double > denominator or (double == denominator and scaled % 2 == 1):
        scaled += 1
    return (Decimal(scaled) / Decimal(100)).quantize(Decimal("0.01"))


@dataclass(frozen=True)
class GoldRecord:
    source: str
    reference_translation: str
    acceptable_transliterations: tuple[str, ...]


@dataclass(frozen=True)
class EvalReport:
    sentences: int
    words: int
    same_count: int
    wrong_count: int

    def same_pct_exact(self) -> Decimal:
        return _round2(self.same_count, self.words)

    def wrong_pct_exact(self) -> Decimal:
        return _round2(self.wrong_count, self.words)

    def efficiency_pct_exact(self) -> Decimal:
        return _round2(self.words - self.wrong_count, self.words)

    @property
    def same_pct(self) -> float:
        return float(self.same_pct_exact())

    @property
    def wrong_pct(self) -> float:
        return float(self.wrong_pct_exact())

    @property
    def efficiency_pct(self) -> float:
        return float(self.efficiency_pct_exact())


def _nfc(s: str) -> str:
    return unicodedata.normalize("NFC", s)


def evaluate(
    gold: Sequence[Sequence[GoldRecord]],
    outputs: Sequence[str],
) -> EvalReport:
    """Score ``outputs`` against sentence-grouped gold records (1:1 aligned)."""
    records = [record for sentence in gold for record in sentence]
    if not records:
        raise EmptyEvaluationError("no gold records to evaluate")
    if len(outputs) != len(records):
        raise LengthMismatchError(
            f"{len(records)} gold records but {len(outputs)} outputs"
        )
    same = 0
    wrong = 0
    for record, output in zip(records, outputs):
        out = _nfc(output)
        if out == _nfc(record.reference_translation):
            same += 1
        if all(out != _nfc(accepted) for accepted in record.acceptable_transliterations):
            wrong += 1
    return EvalReport(
        sentences=len(gold),
        words=len(records),
        same_count=same,
        wrong_count=wrong,
    )


def parse_gold(text: str, source: str | None = None) -> list[list[GoldRecord]]:
    """Parse a gold TSV: ``source<TAB>reference<TAB>translit1|translit2|...``.

    Blank line = sentence boundary; ``#`` comment lines ignored.
    """
    sentences: list[list[GoldRecord]] = []
    current: list[GoldRecord] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if line.lstrip().startswith("#"):
            continue
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ParseError(
                f"expected 3 tab-separated columns, got {len(fields)}",
                line=lineno,
                source=source,
            )
        src, reference, accepted_raw = fields
        if not src or not reference:
            raise ParseError("source and reference must be non-empty", line=lineno, source=source)
        accepted = tuple(_nfc(a) for a in accepted_raw.split("|") if a)
        if not accepted:
            raise ParseError("acceptable-transliteration list is empty", line=lineno, source=source)
        if len(set(accepted)) != len(accepted):
            raise ParseError("duplicate acceptable transliteration", line=lineno, source=source)
        current.append(GoldRecord(_nfc(src), _nfc(reference), accepted))
    if current:
        sentences.append(current)
    return sentences


_REPORT_ROWS = [
    ("Sentences evaluated", "sentences", lambda r: str(r.sentences)),
    ("Words evaluated", "words", lambda r: str(r.words)),
    (
        "Words where transliteration equals translation",
        "same_count",
        lambda r: str(r.same_count),
    ),
    (
        "Share where transliteration equals translation (%)",
        "same_pct",
        lambda r: str(r.same_pct_exact()),
    ),
    ("Words with wrong transliteration", "wrong_count", lambda r: str(r.wrong_count)),
    ("Share with wrong transliteration (%)", "wrong_pct", lambda r: str(r.wrong_pct_exact())),
    ("Transliteration efficiency (%)", "efficiency_pct", lambda r: str(r.efficiency_pct_exact())),
]


def render_report(report: EvalReport, kv: bool = False) -> str:
    """Render the seven counter/percentage rows, aligned or as key=value."""
    if kv:
        return "\n".join(f"{key}={fmt(report)}" for _, key, fmt in _REPORT_ROWS)
    width = max(len(label) for label, _, _ in _REPORT_ROWS)
    return "\n".join(
        f"{label:<{width}}  {fmt(report):>8}" for label, _, fmt in _REPORT_ROWS
    )
