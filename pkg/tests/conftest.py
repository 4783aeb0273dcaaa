from __future__ import annotations

import json

import pytest

from wordrep.graphs import Graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def graph_file(tmp_path):
    def write(g: Graph, name: str = "graph.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(g.to_json_obj()))
        return str(path)

    return write


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
