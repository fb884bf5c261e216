"""Worked-example fixtures with expected verdicts, and the regression runner."""

from __future__ import annotations

from .loader import (
    PAIR_CHECKS,
    SET_CHECKS,
    Fixture,
    default_corpus_path,
    get_fixture,
    load_corpus,
    load_default_corpus,
    parse_corpus,
    select_fixtures,
)
from .runner import CheckOutcome, CorpusReport, FixtureResult, run_corpus, run_fixture

__all__ = [
    "CheckOutcome",
    "CorpusReport",
    "Fixture",
    "FixtureResult",
    "PAIR_CHECKS",
    "SET_CHECKS",
    "default_corpus_path",
    "get_fixture",
    "load_corpus",
    "load_default_corpus",
    "parse_corpus",
    "run_corpus",
    "run_fixture",
    "select_fixtures",
]
