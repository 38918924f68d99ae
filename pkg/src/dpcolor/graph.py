"""Host graphs: representation, edge-list I/O, generators, degeneracy,
fixed-length cycle search and the F_5^3 gadget search.

Vertices are dense integer ids ``0..n-1``. Edges are stored as ordered
pairs ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional


class GraphFormatError(ValueError):
    """Raised for malformed edge-list documents or invalid edges."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def canon(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        adj = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if u > v:
                raise GraphFormatError(f"edge {e} not in canonical (u < v) form")
            if not (0 <= u and v < self.n):
                raise GraphFormatError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, canonicalising pairs. Duplicates collapse silently."""
        es = set()
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            es.add(canon(u, v))
        return cls(n, frozenset(es))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def components(self) -> int:
        seen = [False] * self.n
        count = 0
        for s in range(self.n):
            if seen[s]:
                continue
            count += 1
            seen[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
        return count

    def to_text(self, comment: Optional[str] = None) -> str:
        lines = []
        if comment:
            lines.extend(f"# {c}" for c in comment.splitlines())
        lines.append(f"{self.n} {self.m}")
        lines.extend(f"{u} {v}" for u, v in self.sorted_edges())
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- parsing

def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield lineno, s.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {tok!r}", lineno) from None


def _parse_edge_document(text: str, ncols: int) -> tuple[int, list[tuple[int, list[int]]]]:
    lines = _content_lines(text)
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise GraphFormatError("missing header line 'n m'") from None
    if len(toks) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    n, m = (_int(t, lineno) for t in toks)
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", lineno)
    rows = []
    for lineno, toks in lines:
        if len(toks) != ncols:
            raise GraphFormatError(f"expected {ncols} fields, got {len(toks)}", lineno)
        rows.append((lineno, [_int(t, lineno) for t in toks]))
    if len(rows) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(rows)} edge lines follow")
    return n, rows


def _check_edge(n: int, u: int, v: int, lineno: int, seen: set) -> tuple[int, int]:
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u}", lineno)
    for x in (u, v):
        if not 0 <= x < n:
            raise GraphFormatError(f"endpoint {x} out of range 0..{n - 1}", lineno)
    e = canon(u, v)
    if e in seen:
        raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
    seen.add(e)
    return e


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: ``n m`` header then ``m`` lines ``u v``.

    Lines starting with ``#`` are comments. Duplicate edges and self-loops
    are rejected with the offending line number.
    """
    n, rows = _parse_edge_document(text, 2)
    seen: set = set()
    for lineno, (u, v) in rows:
        _check_edge(n, u, v, lineno, seen)
    return Graph(n, frozenset(seen))


def parse_signed_graph(text: str) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Parse the signs file: edge lines extended to ``u v s`` with s = +1/-1."""
    n, rows = _parse_edge_document(text, 3)
    seen: set = set()
    signs = {}
    for lineno, (u, v, s) in rows:
        e = _check_edge(n, u, v, lineno, seen)
        if s not in (1, -1):
            raise GraphFormatError(f"sign must be +1 or -1, got {s}", lineno)
        signs[e] = s
    return Graph(n, frozenset(seen)), signs


# ------------------------------------------------------------- generators

def dodecahedron() -> Graph:
    # outer pentagon 0-4, middle 10-cycle 5-14, inner pentagon 15-19
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + 2 * i))
        edges.append((15 + i, 15 + (i + 1) % 5))
        edges.append((15 + i, 5 + 2 * i + 1))
    for j in range(10):
        edges.append((5 + j, 5 + (j + 1) % 10))
    return Graph.from_edges(20, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` is the i-th edge of ``g`` in sorted order."""
    es = g.sorted_edges()
    index = {e: i for i, e in enumerate(es)}
    edges = []
    for v in g.vertices():
        inc = [index[canon(v, w)] for w in g.neighbors(v)]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                edges.append((inc[a], inc[b]))
    return Graph.from_edges(len(es), edges)


def _cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _star(n):
    # n leaves around hub 0
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def _wheel(n):
    # rim 0..n-1, hub n
    return Graph.from_edges(n + 1, [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)])


def _grid(n):
    def vid(r, c):
        return r * n + c
    edges = []
    for r in range(n):
        for c in range(n):
            if c + 1 < n:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < n:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph.from_edges(n * n, edges)


# family -> (builder, minimum parameter); None marks parameterless families
FAMILIES = {
    "cycle": (_cycle, 3),
    "complete": (_complete, 1),
    "path": (_path, 1),
    "star": (_star, 1),
    "wheel": (_wheel, 3),
    "grid": (_grid, 1),
    "dodecahedral": (None, None),
    "dodecahedral-line": (None, None),
}


def generate(family: str, parameter: Optional[int] = None) -> Graph:
    """Canonically labelled member of a named family.

    ``cycle n`` (n >= 3), ``complete n``, ``path n`` (n vertices), ``star n``
    (n leaves), ``wheel n`` (n rim vertices), ``grid n`` (n x n). The two
    dodecahedral families ignore ``parameter``.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family == "dodecahedral":
        return dodecahedron()
    if family == "dodecahedral-line":
        return line_graph(dodecahedron())
    builder, low = FAMILIES[family]
    if parameter is None or parameter < low:
        raise ValueError(f"family {family!r} needs parameter >= {low}, got {parameter}")
    return builder(parameter)


def random_tree(n: int, rng) -> Graph:
    """Uniform random recursive tree: vertex i attaches to a random earlier vertex."""
    return Graph.from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])


# ------------------------------------------------------------- degeneracy

@dataclass(frozen=True)
class DegeneracyReport:
    degeneracy: int
    ordering: tuple  # removal order; each vertex has <= degeneracy later neighbours
    removal_degrees: tuple  # current degree of each vertex when peeled


def degeneracy(g: Graph) -> DegeneracyReport:
    """Minimum-degree peeling, smallest id first among ties."""
    deg = [g.degree(v) for v in g.vertices()]
    alive = [True] * g.n
    order = []
    at_removal = []
    for _ in range(g.n):
        v = min((x for x in g.vertices() if alive[x]), key=lambda x: (deg[x], x))
        order.append(v)
        at_removal.append(deg[v])
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
    return DegeneracyReport(max(at_removal, default=0), tuple(order), tuple(at_removal))


# ----------------------------------------------------------------- cycles

def has_cycle_len(g: Graph, k: int) -> Optional[list[int]]:
    """Return some simple k-cycle as a vertex list, or None if there is none.

    Exhaustive: each cycle is looked for from its smallest vertex, extending
    paths through larger vertices only.
    """
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    for s in g.vertices():
        path = [s]
        on_path = {s}

        def extend():
            last = path[-1]
            if len(path) == k:
                return s in g.adj[last]
            for w in sorted(g.adj[last]):
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    if extend():
                        return True
                    path.pop()
                    on_path.discard(w)
            return False

        if extend():
            return path
    return None


def is_cycle(g: Graph, cyc: list[int]) -> bool:
    k = len(cyc)
    return (
        k >= 3
        and len(set(cyc)) == k
        and all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))
    )


# ------------------------------------------------------------ F_5^3 gadget

@dataclass(frozen=True)
class F53Witness:
    """C_6 v1..v6 plus chord v2v6; all six vertices of host degree 4."""

    v1: int
    v2: int
    v3: int
    v4: int
    v5: int
    v6: int

    @property
    def vertices(self) -> tuple:
        return (self.v1, self.v2, self.v3, self.v4, self.v5, self.v6)

    @property
    def gadget_edges(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % 6]) for i in range(6)] + [(self.v2, self.v6)]

    def check(self, g: Graph) -> list[str]:
        """Problems with this witness in ``g``; empty when it is valid."""
        problems = []
        vs = self.vertices
        if len(set(vs)) != 6:
            return ["witness vertices are not distinct"]
        if any(not 0 <= v < g.n for v in vs):
            return ["witness vertex outside the graph"]
        for u, v in self.gadget_edges:
            if not g.has_edge(u, v):
                problems.append(f"missing gadget edge {u}-{v}")
        for v in vs:
            if g.degree(v) != 4:
                problems.append(f"vertex {v} has degree {g.degree(v)}, not 4")
        internal = sum(1 for i in range(6) for j in range(i + 1, 6) if g.has_edge(vs[i], vs[j]))
        if internal != 7:
            problems.append(f"{internal} internal edges, expected exactly 7")
        return problems


def _internal_edges(g: Graph, vs) -> int:
    return sum(1 for i in range(len(vs)) for j in range(i + 1, len(vs)) if g.has_edge(vs[i], vs[j]))


def iter_f53(g: Graph) -> Iterator[F53Witness]:
    """All F_5^3 witnesses in deterministic order.

    Order: chord (v2, v6) over ordered adjacent pairs lexicographically, then
    v1 ascending among common neighbours, then the path v2-v3-v4-v5-v6 by
    lexicographic DFS. Each gadget appears twice (the reflection v2<->v6).
    """
    deg4 = [g.degree(v) == 4 for v in g.vertices()]
    for v2 in g.vertices():
        if not deg4[v2]:
            continue
        for v6 in sorted(g.adj[v2]):
            if not deg4[v6]:
                continue
            for v1 in sorted(g.adj[v2] & g.adj[v6]):
                if not deg4[v1]:
                    continue
                used = {v1, v2, v6}
                for v3 in sorted(g.adj[v2]):
                    if v3 in used or not deg4[v3]:
                        continue
                    for v4 in sorted(g.adj[v3]):
                        if v4 in used or v4 == v3 or not deg4[v4]:
                            continue
                        for v5 in sorted(g.adj[v4] & g.adj[v6]):
                            if v5 in used or v5 in (v3, v4) or not deg4[v5]:
                                continue
                            if _internal_edges(g, (v1, v2, v3, v4, v5, v6)) == 7:
                                yield F53Witness(v1, v2, v3, v4, v5, v6)


def find_f53(g: Graph) -> Optional[F53Witness]:
    return next(iter_f53(g), None)


def count_f53(g: Graph) -> int:
    """Number of distinct F_5^3 subgraphs (reflections identified)."""
    return len({frozenset(canon(*e) for e in w.gadget_edges) for w in iter_f53(g)})


# ---------------------------------------------------------------- removal

def remove_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the complement of ``s``.

    Survivors are renumbered densely in increasing order of their old ids;
    the returned dict maps old id -> new id.
    """
    s = set(s)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    remap = {}
    for v in g.vertices():
        if v not in s:
            remap[v] = len(remap)
    edges = frozenset(
        (remap[u], remap[v]) for u, v in g.edges if u in remap and v in remap
    )
    return Graph(len(remap), edges), remap
