"""List assignments, matching assignments, the cover graph, coloring
verification and the list / signed-graph adapters.

A list assignment is a plain ``dict[int, frozenset[int]]``. A coloring is a
``dict[int, int]``. Matchings are stored per canonical edge ``(u, v)`` with
``u < v``; a pair ``(a, b)`` always reads (color at u, color at v).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .graph import Graph, canon

Lists = dict  # vertex -> frozenset of colors
Coloring = dict  # vertex -> color


class InstanceError(ValueError):
    """A list/matching assignment is inconsistent with its host graph."""


@dataclass(frozen=True)
class MatchingAssignment:
    pairs: Mapping  # (u, v) with u < v -> frozenset of (a, b)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for (u, v), ps in self.pairs.items():
            if u >= v:
                raise InstanceError(f"matching key {(u, v)} is not canonical (u < v)")
            for a, b in ps:
                if (u, v, a) in index:
                    raise InstanceError(f"color {a} at {u} matched twice on edge {u}-{v}")
                if (v, u, b) in index:
                    raise InstanceError(f"color {b} at {v} matched twice on edge {u}-{v}")
                index[(u, v, a)] = b
                index[(v, u, b)] = a
        object.__setattr__(self, "pairs", {e: frozenset(ps) for e, ps in self.pairs.items()})
        object.__setattr__(self, "_index", index)

    def partner(self, u: int, a: int, v: int) -> Optional[int]:
        """Color at v matched to (u, a) on edge uv, or None."""
        return self._index.get((u, v, a))

    def on_edge(self, u: int, v: int) -> frozenset:
        """Pairs on edge uv, oriented as (color at u, color at v)."""
        ps = self.pairs.get(canon(u, v), frozenset())
        if u < v:
            return ps
        return frozenset((b, a) for a, b in ps)

    def size(self) -> int:
        return sum(len(ps) for ps in self.pairs.values())


def validate_instance(g: Graph, lists: Lists, m: Optional[MatchingAssignment] = None) -> None:
    """Raise InstanceError unless ``lists`` (and ``m``) are well formed over g."""
    for v in g.vertices():
        if v not in lists:
            raise InstanceError(f"vertex {v} has no list")
        if not lists[v]:
            raise InstanceError(f"vertex {v} has an empty list")
    extra = set(lists) - set(g.vertices())
    if extra:
        raise InstanceError(f"lists given for non-vertices {sorted(extra)}")
    if m is None:
        return
    for e in g.edges:
        if e not in m.pairs:
            raise InstanceError(f"edge {e[0]}-{e[1]} has no matching entry")
    for (u, v), ps in m.pairs.items():
        if (u, v) not in g.edges:
            raise InstanceError(f"matching given for non-edge {u}-{v}")
        for a, b in ps:
            if a not in lists[u]:
                raise InstanceError(f"matching on {u}-{v} uses color {a} absent from L({u})")
            if b not in lists[v]:
                raise InstanceError(f"matching on {u}-{v} uses color {b} absent from L({v})")


# ------------------------------------------------------------ constructors

def nk(k: int) -> frozenset:
    """Symmetric color set of size k: {0, +-1, .., +-r} (odd) or {+-1, .., +-r} (even)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    r = k // 2
    colors = {i for i in range(1, r + 1)} | {-i for i in range(1, r + 1)}
    if k % 2:
        colors.add(0)
    return frozenset(colors)


def full_lists(g: Graph, t: int) -> Lists:
    if t < 1:
        raise ValueError("t must be >= 1")
    return {v: frozenset(range(1, t + 1)) for v in g.vertices()}


def identity_matchings(g: Graph, lists: Lists) -> MatchingAssignment:
    return MatchingAssignment(
        {(u, v): frozenset((c, c) for c in lists[u] & lists[v]) for u, v in g.edges}
    )


@dataclass(frozen=True)
class SignedGraph:
    graph: Graph
    signs: Mapping  # canonical edge -> +1 / -1

    def __post_init__(self):
        for e in self.graph.edges:
            if self.signs.get(e) not in (1, -1):
                raise InstanceError(f"edge {e[0]}-{e[1]} has no valid sign")

    def sign(self, u: int, v: int) -> int:
        return self.signs[canon(u, v)]


def signed_instance(sg: SignedGraph, k: int) -> tuple[Lists, MatchingAssignment]:
    colors = nk(k)
    lists = {v: colors for v in sg.graph.vertices()}
    pairs = {}
    for e in sg.graph.edges:
        s = sg.signs[e]
        pairs[e] = frozenset((i, s * i) for i in colors)
    return lists, MatchingAssignment(pairs)


def random_matchings(g: Graph, lists: Lists, seed: int) -> MatchingAssignment:
    """Uniformly random maximum matching on every edge.

    Uses ``random.Random(seed)``; edges are visited in sorted order and, per
    edge, the larger side is sampled without replacement against the
    sorted smaller side.
    """
    rng = random.Random(seed)
    pairs = {}
    for u, v in g.sorted_edges():
        a, b = sorted(lists[u]), sorted(lists[v])
        if len(a) <= len(b):
            pairs[(u, v)] = frozenset(zip(a, rng.sample(b, len(a))))
        else:
            pairs[(u, v)] = frozenset(zip(rng.sample(a, len(b)), b))
    return MatchingAssignment(pairs)


def twist(g: Graph, lists: Lists, m: MatchingAssignment, pi: Mapping) -> tuple[Lists, MatchingAssignment]:
    """Relabel colors at each vertex by the bijection ``pi[u]`` (a dict)."""
    new_lists = {}
    for v in g.vertices():
        p = pi.get(v)
        if p is None:
            new_lists[v] = lists[v]
            continue
        if set(p) != set(lists[v]):
            raise InstanceError(f"relabelling at {v} is not defined exactly on L({v})")
        image = frozenset(p[c] for c in lists[v])
        if len(image) != len(lists[v]):
            raise InstanceError(f"relabelling at {v} is not injective")
        new_lists[v] = image

    def at(v, c):
        p = pi.get(v)
        return c if p is None else p[c]

    new_pairs = {
        (u, v): frozenset((at(u, a), at(v, b)) for a, b in ps) for (u, v), ps in m.pairs.items()
    }
    return new_lists, MatchingAssignment(new_pairs)


# ------------------------------------------------------------------ cover

@dataclass(frozen=True)
class CoverGraph:
    vertices: frozenset  # (u, c)
    fiber_edges: frozenset  # frozenset({(u, a), (u, b)})
    cross_edges: frozenset  # frozenset({(u, a), (v, b)})

    @property
    def edges(self) -> frozenset:
        return self.fiber_edges | self.cross_edges

    def is_independent(self, points) -> bool:
        pts = list(points)
        es = self.edges
        return all(
            frozenset((pts[i], pts[j])) not in es
            for i in range(len(pts))
            for j in range(i + 1, len(pts))
        )


def build_cover(g: Graph, lists: Lists, m: MatchingAssignment) -> CoverGraph:
    validate_instance(g, lists, m)
    verts = frozenset((u, c) for u in g.vertices() for c in lists[u])
    fiber = set()
    for u in g.vertices():
        cs = sorted(lists[u])
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                fiber.add(frozenset(((u, cs[i]), (u, cs[j]))))
    cross = frozenset(
        frozenset(((u, a), (v, b))) for (u, v), ps in m.pairs.items() for a, b in ps
    )
    return CoverGraph(verts, frozenset(fiber), cross)


# ---------------------------------------------------------- verification

@dataclass(frozen=True)
class Violation:
    kind: str  # "uncolored" | "not-in-list" | "matched-edge" | "unknown-vertex"
    vertex: Optional[int] = None
    edge: Optional[tuple] = None
    detail: str = ""

    def __str__(self):
        if self.kind == "uncolored":
            return f"uncolored vertex {self.vertex}"
        if self.kind == "not-in-list":
            return f"vertex {self.vertex}: {self.detail}"
        if self.kind == "unknown-vertex":
            return f"color given for non-vertex {self.vertex}"
        return f"edge {self.edge[0]}-{self.edge[1]}: {self.detail}"

    def to_json(self) -> dict:
        d = {"kind": self.kind, "message": str(self)}
        if self.vertex is not None:
            d["vertex"] = self.vertex
        if self.edge is not None:
            d["edge"] = list(self.edge)
        return d


def verify_coloring(g: Graph, lists: Lists, m: MatchingAssignment, f: Mapping) -> list[Violation]:
    """Every reason ``f`` fails to be a DP-coloring; empty list if it is one."""
    out = []
    for v in sorted(set(f) - set(g.vertices())):
        out.append(Violation("unknown-vertex", vertex=v))
    for v in g.vertices():
        if v not in f:
            out.append(Violation("uncolored", vertex=v))
        elif f[v] not in lists.get(v, ()):
            out.append(Violation("not-in-list", vertex=v, detail=f"color {f[v]} not in its list"))
    for u, v in g.sorted_edges():
        if u in f and v in f and (f[u], f[v]) in m.pairs.get((u, v), ()):
            out.append(
                Violation("matched-edge", edge=(u, v), detail=f"colors ({f[u]}, {f[v]}) are matched")
            )
    return out


def is_proper_list_coloring(g: Graph, lists: Lists, f: Mapping) -> bool:
    return all(v in f and f[v] in lists[v] for v in g.vertices()) and all(
        f[u] != f[v] for u, v in g.edges
    )


def is_signed_coloring(sg: SignedGraph, k: int, f: Mapping) -> bool:
    colors = nk(k)
    g = sg.graph
    return all(v in f and f[v] in colors for v in g.vertices()) and all(
        f[u] != sg.signs[(u, v)] * f[v] for u, v in g.edges
    )


# -------------------------------------------------------------------- JSON

def lists_to_json(lists: Lists) -> dict:
    return {str(v): sorted(cs) for v, cs in sorted(lists.items())}


def lists_from_json(doc) -> Lists:
    if not isinstance(doc, dict):
        raise InstanceError("lists document must be a JSON object")
    out = {}
    for k, cs in doc.items():
        try:
            v = int(k)
        except ValueError:
            raise InstanceError(f"list key {k!r} is not a vertex id") from None
        if not isinstance(cs, list) or not all(isinstance(c, int) for c in cs):
            raise InstanceError(f"list for vertex {v} must be an array of integers")
        if len(set(cs)) != len(cs):
            raise InstanceError(f"list for vertex {v} repeats a color")
        out[v] = frozenset(cs)
    return out


def matchings_to_json(m: MatchingAssignment) -> list:
    return [
        {"u": u, "v": v, "pairs": [list(p) for p in sorted(ps)]} for (u, v), ps in sorted(m.pairs.items())
    ]


def matchings_from_json(doc) -> MatchingAssignment:
    if not isinstance(doc, list):
        raise InstanceError("matchings document must be a JSON array")
    pairs = {}
    for entry in doc:
        try:
            u, v, ps = entry["u"], entry["v"], entry["pairs"]
            ps = frozenset((int(a), int(b)) for a, b in ps)
        except (KeyError, TypeError, ValueError):
            raise InstanceError(f"malformed matching entry {entry!r}") from None
        if u >= v:
            raise InstanceError(f"matching entry {u}-{v} must have u < v")
        if (u, v) in pairs:
            raise InstanceError(f"duplicate matching entry for {u}-{v}")
        pairs[(u, v)] = ps
    return MatchingAssignment(pairs)


def coloring_to_json(f: Mapping) -> dict:
    return {str(v): c for v, c in sorted(f.items())}


def coloring_from_json(doc) -> Coloring:
    if not isinstance(doc, dict):
        raise InstanceError("coloring document must be a JSON object")
    try:
        return {int(k): int(c) for k, c in doc.items()}
    except (TypeError, ValueError):
        raise InstanceError("coloring must map vertex ids to integers") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
