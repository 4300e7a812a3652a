import random

import pytest

from specpart.graph import (
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_cycle_complement,
    gen_friendship,
    gen_petersen,
    gen_triangular,
    random_graph,
    three_triangles_graph,
)

_criteria: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    _criteria.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}".rstrip())


def random_connected_graphs(count, n_range=(3, 7), p_range=(0.3, 0.9), seed=2024):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_graph(rng.randint(*n_range), rng.uniform(*p_range), rng)
        if g.is_connected():
            out.append(g)
    return out


def family_corpus():
    """Named connected graphs used across the suite."""
    corpus = {f"K{n}": gen_complete(n) for n in range(2, 8)}
    for p in range(2, 5):
        for a in range(2, 4):
            if p * a <= 9:
                corpus[f"K{p}x{a}"] = gen_complete_multipartite([a] * p)
    corpus.update({f"T{v}": gen_triangular(v) for v in (4, 5)})
    corpus.update({f"F{v}": gen_friendship(v) for v in range(2, 5)})
    corpus.update({f"coC{2 * s + 1}": gen_cycle_complement(2 * s + 1) for s in (2, 3)})
    corpus["C5"] = gen_cycle(5)
    corpus["petersen"] = gen_petersen()
    corpus["three_triangles"] = three_triangles_graph()
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return family_corpus()
