import random

import pytest

from chromakit.fixtures import DC_EXAMPLE, HOUSE_ADJ_EXAMPLE
from chromakit.graph import complete_graph, cycle_graph, new_graph, path_graph, random_multigraph

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def _corpus():
    graphs = [
        new_graph(0, []),
        new_graph(1, []),
        new_graph(3, []),
        DC_EXAMPLE,
        HOUSE_ADJ_EXAMPLE,
        complete_graph(4),
        complete_graph(5),
    ]
    graphs += [cycle_graph(n) for n in range(1, 8)]
    graphs += [path_graph(n) for n in range(1, 7)]
    rng = random.Random(20240611)
    graphs += [random_multigraph(rng, 6, 9) for _ in range(15)]
    graphs += [random_multigraph(rng, 7, 12, allow_loops=False, allow_parallel=False) for _ in range(15)]
    return graphs


CORPUS = _corpus()


@pytest.fixture(params=range(len(CORPUS)), ids=lambda i: f"g{i}")
def corpus_graph(request):
    return CORPUS[request.param]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
