"""Gujarati to Hindi transliteration with stemming and tag-aware rules."""

from importlib import resources

from .errors import (
    DuplicateRuleError,
    EmptyEvaluationError,
    GujhinError,
    LengthMismatchError,
    MalformedTokenError,
    NotInvertibleError,
    ParseError,
)
from .evaluator import EvalReport, GoldRecord, evaluate, parse_gold, render_report
from .pipeline import (
    Pipeline,
    RuleAction,
    TagRuleTable,
    TagSuffixRule,
    TokenPath,
    TokenResult,
    load_tag_rules,
)
from .pos_lexicon import TagLexicon, TaggedToken, parse_token
from .script_map import (
    TransliterationTable,
    build_default_table,
    parse_exceptions,
    reverse_transliterate,
    transliterate_char,
    transliterate_string,
)
from .stemmer import StemResult, StemRule, StemRuleSet, load_rules

__version__ = "0.1.0"


def _data_text(name: str) -> str:
    return (resources.files(__name__) / "data" / name).read_text(encoding="utf-8")


def seed_stem_rules() -> StemRuleSet:
    """The packaged reconstruction of common Gujarati suffixes."""
    return load_rules(_data_text("stem_rules.tsv"), source="stem_rules.tsv")


def seed_tag_rules() -> TagRuleTable:
    """The packaged tag-conditioned suffix rendering rules."""
    return load_tag_rules(_data_text("tag_rules.tsv"), source="tag_rules.tsv")
