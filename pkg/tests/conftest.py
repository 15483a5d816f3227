"""Pytest configuration and fixtures."""

import pytest

from lightsout.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    format_edge_list,
    path_graph,
    star_graph,
)


@pytest.fixture
def temp_config_dir(tmp_path):
    """Create a temporary config directory."""
    config_dir = tmp_path / ".config" / "lightsout"
    config_dir.mkdir(parents=True)
    return config_dir


@pytest.fixture
def temp_config_file(temp_config_dir):
    """Create a temporary config file path."""
    return temp_config_dir / "config.json"


@pytest.fixture
def named_graphs() -> dict[str, Graph]:
    """Small graphs with hand-checked nullities."""
    return {
        "K0": empty_graph(0),
        "K1": empty_graph(1),
        "P2": path_graph(2),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "P5": path_graph(5),
        "P6": path_graph(6),
        "C6": cycle_graph(6),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "star3": star_graph(3),
    }


@pytest.fixture
def write_graph(tmp_path):
    """Write a graph as an edge-list file and return its path."""

    def _write(G: Graph, name: str = "graph.txt"):
        path = tmp_path / name
        path.write_text(format_edge_list(G), encoding="utf-8")
        return path

    return _write
