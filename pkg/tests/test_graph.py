import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from networkx.algorithms import isomorphism

from dpcolor.graph import (
    F53Witness,
    Graph,
    GraphFormatError,
    canon,
    count_f53,
    degeneracy,
    find_f53,
    generate,
    has_cycle_len,
    is_cycle,
    iter_f53,
    parse_graph,
    parse_signed_graph,
    remove_vertices,
)

from conftest import naive_cycles


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(slots), unique=True) if slots else st.just([]))
    return Graph.from_edges(n, chosen)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges)
    return h


# ----------------------------------------------------------------- parsing

def test_parse_c4():
    g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert g.n == 4
    assert g.edges == {(0, 1), (1, 2), (2, 3), (0, 3)}


def test_parse_isolated_vertex():
    g = parse_graph("1 0\n")
    assert g.n == 1 and g.m == 0


def test_parse_comments_and_blank_lines():
    g = parse_graph("# a triangle\n\n3 3\n0 1\n# mid\n1 2\n2 0\n")
    assert g.m == 3


@pytest.mark.parametrize(
    "text, fragment, line",
    [
        ("3 3\n0 0\n0 1\n1 2\n", "self-loop", 2),
        ("3 1\n0 3\n", "out of range", 2),
        ("3 2\n0 1\n1 0\n", "duplicate", 3),
        ("3 2\n0 1\n", "declares 2 edges", None),
        ("3 1\n0 x\n", "integer", 2),
        ("3 1\n0 1 2\n", "fields", 2),
        ("", "header", None),
    ],
)
def test_parse_errors(text, fragment, line):
    with pytest.raises(GraphFormatError, match=fragment) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_parse_signed():
    g, signs = parse_signed_graph("3 2\n0 1 +1\n2 1 -1\n")
    assert signs == {(0, 1): 1, (1, 2): -1}
    with pytest.raises(GraphFormatError, match="sign"):
        parse_signed_graph("2 1\n0 1 0\n")


@given(graphs())
def test_text_round_trip(g):
    assert parse_graph(g.to_text(comment="x")) == g


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphFormatError):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(1, 1)])


# -------------------------------------------------------------- generators

def test_generate_cycle_4():
    assert generate("cycle", 4).edges == {(0, 1), (1, 2), (2, 3), (0, 3)}


def test_generate_complete_4():
    g = generate("complete", 4)
    assert g.n == 4 and g.m == 6


def test_generate_dodecahedron_matches_networkx():
    g = generate("dodecahedral")
    assert (g.n, g.m) == (20, 30)
    assert nx.is_isomorphic(to_nx(g), nx.dodecahedral_graph())


def test_generate_dodecahedral_line():
    g = generate("dodecahedral-line")
    assert (g.n, g.m) == (30, 60)
    assert all(g.degree(v) == 4 for v in g.vertices())
    # handshake: 30 edges of a cubic graph, each line-graph vertex has 2 + 2 neighbours
    assert 2 * g.m == sum(g.degree(v) for v in g.vertices())
    assert nx.is_isomorphic(to_nx(g), nx.line_graph(nx.dodecahedral_graph()))
    assert nx.check_planarity(to_nx(g))[0]


@pytest.mark.parametrize("family, param", [("cycle", 2), ("complete", 0), ("nope", 3), ("path", None)])
def test_generate_errors(family, param):
    with pytest.raises(ValueError):
        generate(family, param)


def test_generate_sizes():
    assert generate("path", 5).m == 4
    assert generate("star", 4).n == 5
    assert generate("wheel", 5).m == 10
    assert generate("grid", 3).m == 12


# --------------------------------------------------------------- degeneracy

@pytest.mark.parametrize(
    "g, expected",
    [
        (generate("cycle", 6), 2),
        (generate("complete", 4), 3),
        (generate("dodecahedral-line"), 4),
        (Graph(0, frozenset()), 0),
    ],
)
def test_degeneracy_values(g, expected):
    assert degeneracy(g).degeneracy == expected


def test_degeneracy_tie_break():
    # all degrees equal: smallest ids peel first
    assert degeneracy(generate("cycle", 5)).ordering == (0, 1, 2, 3, 4)


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_degeneracy_ordering_certifies(g):
    rep = degeneracy(g)
    assert sorted(rep.ordering) == list(g.vertices())
    pos = {v: i for i, v in enumerate(rep.ordering)}
    for v in g.vertices():
        later = sum(1 for w in g.adj[v] if pos[w] > pos[v])
        assert later <= rep.degeneracy
    if g.n:
        # the peeling suffix from the maximum step has min degree == degeneracy
        i = rep.removal_degrees.index(rep.degeneracy)
        suffix = set(rep.ordering[i:])
        assert min(len(g.adj[v] & suffix) for v in suffix) == rep.degeneracy
        assert rep.degeneracy == max(nx.core_number(to_nx(g)).values())


# ------------------------------------------------------------------ cycles

def test_cycle_witness_on_c5():
    assert has_cycle_len(generate("cycle", 5), 5) == [0, 1, 2, 3, 4]


def test_k4_has_no_c6():
    assert has_cycle_len(generate("complete", 4), 6) is None


def test_dodecahedral_line_has_no_c4():
    g = generate("dodecahedral-line")
    assert has_cycle_len(g, 4) is None
    # exhaustive over edge pairs: a 4-cycle needs two vertices with 2 common neighbours
    for u in g.vertices():
        for v in g.vertices():
            if u < v:
                assert len(g.adj[u] & g.adj[v]) <= 1


def test_cycle_length_must_be_three_or_more():
    with pytest.raises(ValueError):
        has_cycle_len(generate("cycle", 3), 2)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), st.integers(3, 7))
def test_cycle_search_matches_naive(g, k):
    w = has_cycle_len(g, k)
    naive = naive_cycles(g, k)
    assert (w is not None) == bool(naive)
    if w is not None:
        assert len(w) == k and is_cycle(g, w)


def test_cycle_search_matches_naive_n10():
    rng = random.Random(5)
    for _ in range(25):
        g = Graph.from_edges(10, [(u, v) for u in range(10) for v in range(u + 1, 10) if rng.random() < 0.25])
        for k in (3, 4, 5, 6):
            assert (has_cycle_len(g, k) is not None) == bool(naive_cycles(g, k))


# ------------------------------------------------------------------ F_5^3

def test_f53_absent_on_small_or_low_degree():
    assert find_f53(generate("cycle", 6)) is None
    assert find_f53(generate("complete", 4)) is None


def test_f53_dodecahedral_line():
    g = generate("dodecahedral-line")
    w = find_f53(g)
    assert w is not None
    assert w.check(g) == []
    vs = w.vertices
    assert sum(1 for i in range(6) for j in range(i + 1, 6) if g.has_edge(vs[i], vs[j])) == 7


F53_PATTERN = nx.Graph([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 6)])


def _nx_f53_subgraphs(g, induced, deg4=True):
    h = to_nx(g)
    gm = isomorphism.GraphMatcher(h, F53_PATTERN)
    it = gm.subgraph_isomorphisms_iter() if induced else gm.subgraph_monomorphisms_iter()
    out = set()
    for mapping in it:
        inv = {p: x for x, p in mapping.items()}
        if not deg4 or all(g.degree(inv[i]) == 4 for i in range(1, 7)):
            out.add(frozenset(canon(inv[a], inv[b]) for a, b in F53_PATTERN.edges))
    return out


def test_f53_enumeration_matches_networkx():
    g = generate("dodecahedral-line")
    expected = _nx_f53_subgraphs(g, induced=True)
    assert count_f53(g) == len(expected) == 60
    assert {frozenset(canon(*e) for e in w.gadget_edges) for w in iter_f53(g)} == expected


def test_f53_search_order_is_deterministic():
    g = generate("dodecahedral-line")
    first = find_f53(g)
    assert first == next(iter_f53(g))
    # chord (v2, v6) comes from the lexicographically first eligible ordered pair
    pairs = sorted((w.v2, w.v6) for w in iter_f53(g))
    assert (first.v2, first.v6) == pairs[0]


def test_f53_requires_induced():
    # C6 + chord 1-5 + extra chord 2-4 between gadget vertices; pad degrees to 4
    base = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 5), (2, 4)]
    w = F53Witness(0, 1, 2, 3, 4, 5)
    g = Graph.from_edges(6, base)
    assert any("internal edges" in p for p in w.check(g))


def test_chords_close_four_cycles_on_c4_free_corpus(corpus):
    for name, g in corpus.items():
        if has_cycle_len(g, 4) is not None:
            continue
        for s in _nx_f53_subgraphs(g, induced=False, deg4=False):
            vs = sorted({x for e in s for x in e})
            internal = sum(1 for i in range(6) for j in range(i + 1, 6) if g.has_edge(vs[i], vs[j]))
            assert internal == 7, name


@given(graphs(max_n=9))
@settings(max_examples=100)
def test_f53_witnesses_recheck(g):
    for w in iter_f53(g):
        assert w.check(g) == []


# ----------------------------------------------------------------- removal

def test_remove_vertex_from_c4():
    g, remap = remove_vertices(generate("cycle", 4), {0})
    assert remap == {1: 0, 2: 1, 3: 2}
    assert g.edges == {(0, 1), (1, 2)}


def test_remove_nothing_is_identity():
    c = generate("cycle", 5)
    g, remap = remove_vertices(c, set())
    assert g == c and remap == {v: v for v in c.vertices()}


def test_remove_everything():
    g, remap = remove_vertices(generate("cycle", 6), range(6))
    assert g.n == 0 and g.m == 0 and remap == {}


@given(graphs(), st.data())
def test_remove_vertices_properties(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))) if g.n else st.just(set()))
    h, remap = remove_vertices(g, s)
    assert h.n == g.n - len(s)
    inv = {new: old for old, new in remap.items()}
    for u, v in h.edges:
        assert g.has_edge(inv[u], inv[v])
    kept = [v for v in g.vertices() if v not in s]
    assert h.m == sum(1 for u, v in g.edges if u in remap and v in remap)
    assert sorted(remap) == kept


def test_corpus_is_planar(corpus):
    for name, g in corpus.items():
        assert nx.check_planarity(to_nx(g))[0], name
