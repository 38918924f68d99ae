import itertools
import random

import pytest

from dpcolor.cover import MatchingAssignment
from dpcolor.graph import Graph, generate, random_tree


def naive_cycles(g: Graph, k: int) -> set:
    """All simple k-cycles as frozensets of edges, by plain permutation search."""
    found = set()
    for vs in itertools.permutations(range(g.n), k):
        if vs[0] != min(vs):
            continue
        if all(g.has_edge(vs[i], vs[(i + 1) % k]) for i in range(k)):
            found.add(frozenset(frozenset((vs[i], vs[(i + 1) % k])) for i in range(k)))
    return found


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_lists(rng, g, max_size=3, universe=4):
    return {
        v: frozenset(rng.sample(range(1, universe + 1), rng.randint(1, max_size)))
        for v in g.vertices()
    }


def random_partial_matchings(rng, g, lists, drop=0.2):
    pairs = {}
    for u, v in g.sorted_edges():
        a, b = sorted(lists[u]), sorted(lists[v])
        k = min(len(a), len(b))
        ps = zip(rng.sample(a, k), rng.sample(b, k))
        pairs[(u, v)] = frozenset(p for p in ps if rng.random() >= drop)
    return MatchingAssignment(pairs)


def random_instance(rng, n_max=6, t_max=3, universe=None, drop=0.2):
    n = rng.randint(1, n_max)
    g = random_graph(rng, n, rng.uniform(0.2, 0.9))
    lists = random_lists(rng, g, t_max, universe or t_max + 1)
    return g, lists, random_partial_matchings(rng, g, lists, drop)


def all_graphs(n: int):
    slots = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        yield Graph.from_edges(n, [e for i, e in enumerate(slots) if mask >> i & 1])


def planar_corpus(seed: int = 0) -> dict:
    """Curated planar graphs; names are for messages only."""
    rng = random.Random(seed)
    corpus = {}
    for k in range(3, 11):
        corpus[f"C{k}"] = generate("cycle", k)
    for k in range(1, 5):
        corpus[f"K{k}"] = generate("complete", k)
    for k in range(1, 8):
        corpus[f"P{k}"] = generate("path", k)
        corpus[f"star{k}"] = generate("star", k)
    for k in range(3, 9):
        corpus[f"W{k}"] = generate("wheel", k)
    for k in range(1, 6):
        corpus[f"grid{k}"] = generate("grid", k)
    for i in range(10):
        corpus[f"tree{i}"] = random_tree(rng.randint(1, 30), rng)
    corpus["dodecahedral"] = generate("dodecahedral")
    corpus["dodecahedral-line"] = generate("dodecahedral-line")
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return planar_corpus()


@pytest.fixture
def rng():
    return random.Random(20171022)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
