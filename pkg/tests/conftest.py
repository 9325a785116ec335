import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphbench.generators import random_graph
from graphbench.graph_core import save_edge_csv


@pytest.fixture(scope="session")
def got_like_csv(tmp_path_factory):
    """A ~800-node / ~3000-edge edge-list file at the paper-scale target."""
    g = random_graph(800, 3000 / (800 * 799 / 2), seed=42)
    path = tmp_path_factory.mktemp("data") / "got_like.csv"
    save_edge_csv(g, path)
    return path
