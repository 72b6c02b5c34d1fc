from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import make_corpus  # noqa: E402


@pytest.fixture(scope="session")
def small_corpus():
    """Quick seeded corpus for unit-level invariant tests."""
    return make_corpus(ns=range(0, 8), ps=(0.1, 0.3, 0.5), count=8)
