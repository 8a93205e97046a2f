from __future__ import annotations

from pathlib import Path

import pytest

from kintegration import load_graph

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def sample_graph():
    """Three complete communities of four nodes, bridges 02-12 and 13-22."""
    return load_graph(DATA_DIR / "sample_edges.txt", DATA_DIR / "sample_communities.txt")
