"""Exact DP-coloring search, exact DP-chromatic numbers of small graphs,
degeneracy-greedy coloring and the constructive 4-coloring of planar
graphs without 4-cycles (reduce, then replay with residual lists).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from .cover import (
    Coloring,
    InstanceError,
    Lists,
    MatchingAssignment,
    SignedGraph,
    full_lists,
    nk,
    validate_instance,
    verify_coloring,
)
from .graph import F53Witness, Graph, canon, degeneracy, find_f53, has_cycle_len, remove_vertices


@dataclass
class Guards:
    """Size limits for the exhaustive routines."""

    max_product: int = 10**7  # product of list sizes for brute force
    max_free_edges: int = 4  # |E| - |V| + components for dp_chromatic
    max_t: int = 4


DEFAULT_GUARDS = Guards()


class GuardExceeded(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class ContainsC4(PreconditionError):
    def __init__(self, witness: list[int]):
        self.witness = witness
        super().__init__(f"graph contains a 4-cycle: {'-'.join(map(str, witness))}")


# ------------------------------------------------------------ exact search

def solve_transversal(g: Graph, lists: Lists, m: MatchingAssignment) -> Optional[Coloring]:
    """A DP-coloring of (g, lists, m), or None if none exists.

    Backtracking in increasing vertex order with forward checking on the
    domains of uncolored neighbours. Complete.
    """
    validate_instance(g, lists, m)
    n = g.n
    domains = [set(lists[v]) for v in g.vertices()]
    color = [None] * n

    def assign(v):
        if v == n:
            return True
        for c in sorted(domains[v]):
            pruned = []
            dead = False
            for w in g.adj[v]:
                if color[w] is not None or w < v:
                    continue
                b = m.partner(v, c, w)
                if b is not None and b in domains[w]:
                    domains[w].discard(b)
                    pruned.append((w, b))
                    if not domains[w]:
                        dead = True
                        break
            if not dead:
                color[v] = c
                if assign(v + 1):
                    return True
                color[v] = None
            for w, b in pruned:
                domains[w].add(b)
        return False

    if assign(0):
        return {v: color[v] for v in g.vertices()}
    return None


def _check_product(lists, vertices, guards):
    size = math.prod(len(lists[v]) for v in vertices)
    if size > guards.max_product:
        raise GuardExceeded(f"search space {size} exceeds guard {guards.max_product}")


def brute_force_transversal(
    g: Graph, lists: Lists, m: MatchingAssignment, guards: Guards = DEFAULT_GUARDS
) -> Optional[Coloring]:
    """Lexicographically first DP-coloring by plain product enumeration."""
    validate_instance(g, lists, m)
    _check_product(lists, g.vertices(), guards)
    edges = [(u, v, m.pairs[(u, v)]) for u, v in g.sorted_edges()]
    for choice in itertools.product(*(sorted(lists[v]) for v in g.vertices())):
        if all((choice[u], choice[v]) not in ps for u, v, ps in edges):
            return dict(enumerate(choice))
    return None


def direct_list_color(g: Graph, lists: Lists, guards: Guards = DEFAULT_GUARDS) -> Optional[Coloring]:
    """Proper coloring with f(u) in L(u), by exhaustive enumeration."""
    validate_instance(g, lists)
    _check_product(lists, g.vertices(), guards)
    edges = g.sorted_edges()
    for choice in itertools.product(*(sorted(lists[v]) for v in g.vertices())):
        if all(choice[u] != choice[v] for u, v in edges):
            return dict(enumerate(choice))
    return None


def direct_signed_color(sg: SignedGraph, k: int, guards: Guards = DEFAULT_GUARDS) -> Optional[Coloring]:
    """Signed k-coloring f: V -> N_k with f(u) != sign(uv) f(v), exhaustively."""
    g = sg.graph
    colors = sorted(nk(k))
    if len(colors) ** g.n > guards.max_product:
        raise GuardExceeded(f"search space {len(colors) ** g.n} exceeds guard {guards.max_product}")
    edges = [(u, v, sg.signs[(u, v)]) for u, v in g.sorted_edges()]
    for choice in itertools.product(colors, repeat=g.n):
        if all(choice[u] != s * choice[v] for u, v, s in edges):
            return dict(enumerate(choice))
    return None


# ------------------------------------------------------- chromatic number

def spanning_forest(g: Graph) -> list[tuple[int, int]]:
    """BFS forest edges, roots and neighbours taken in increasing order."""
    seen = [False] * g.n
    tree = []
    for r in g.vertices():
        if seen[r]:
            continue
        seen[r] = True
        queue = [r]
        for x in queue:
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    tree.append(canon(x, y))
                    queue.append(y)
    return sorted(tree)


def normalized_assignments(g: Graph, t: int):
    """All matching assignments with lists {1..t}, perfect matchings, and
    identity on a fixed spanning forest; lexicographic in the permutations
    placed on the remaining edges (sorted)."""
    tree = set(spanning_forest(g))
    free = [e for e in g.sorted_edges() if e not in tree]
    ident = frozenset((c, c) for c in range(1, t + 1))
    base = {e: ident for e in tree}
    perms = list(itertools.permutations(range(1, t + 1)))
    for combo in itertools.product(perms, repeat=len(free)):
        pairs = dict(base)
        for e, p in zip(free, combo):
            pairs[e] = frozenset(zip(range(1, t + 1), p))
        yield MatchingAssignment(pairs)


def free_edge_count(g: Graph) -> int:
    return g.m - g.n + g.components()


@dataclass(frozen=True)
class ChromaticCertificate:
    value: Optional[int]  # None when the bound t_max was not enough
    t_max: int
    # per t tried: number of normalized assignments checked before stopping
    searched: tuple
    # failing assignment at value - 1 (or at t_max when value is None)
    failing_t: Optional[int] = None
    failing: Optional[MatchingAssignment] = None
    # total normalized assignments at ``value``; all were solvable
    exhaustive_count: Optional[int] = None


def dp_chromatic(g: Graph, t_max: int = 4, guards: Guards = DEFAULT_GUARDS) -> ChromaticCertificate:
    """Exact DP-chromatic number by enumerating normalized assignments.

    Worst cases have lists of exactly t colors and perfect matchings, and a
    per-vertex relabelling turns the matchings on a spanning forest into
    identities, so only (t!)^(|E| - |V| + components) assignments remain.
    The reported failure is the lexicographically first one.
    """
    free = free_edge_count(g)
    if free > guards.max_free_edges:
        raise GuardExceeded(f"{free} free edges exceeds guard {guards.max_free_edges}")
    if t_max > guards.max_t:
        raise GuardExceeded(f"t_max {t_max} exceeds guard {guards.max_t}")
    searched = []
    failing, failing_t = None, None
    for t in range(1, t_max + 1):
        lists = full_lists(g, t) if g.n else {}
        count = 0
        bad = None
        for m in normalized_assignments(g, t):
            count += 1
            if solve_transversal(g, lists, m) is None:
                bad = m
                break
        searched.append(count)
        if bad is None:
            return ChromaticCertificate(t, t_max, tuple(searched), failing_t, failing, count)
        if brute_force_transversal(g, lists, bad, guards) is not None:
            raise AssertionError("exact search and brute force disagree")
        failing, failing_t = bad, t
    return ChromaticCertificate(None, t_max, tuple(searched), failing_t, failing, None)


# --------------------------------------------------------- greedy coloring

def residual_list(v: int, lists: Lists, m: MatchingAssignment, partial: Mapping, g: Graph) -> frozenset:
    """L(v) minus colors matched to the chosen colors of colored neighbours."""
    if v in partial:
        raise PreconditionError(f"vertex {v} is already colored")
    out = set(lists[v])
    for u in g.adj[v]:
        if u in partial:
            b = m.partner(u, partial[u], v)
            if b is not None:
                out.discard(b)
    return frozenset(out)


def greedy_degenerate_color(g: Graph, lists: Lists, m: MatchingAssignment) -> Coloring:
    """Color in reverse degeneracy order, smallest available color each time."""
    validate_instance(g, lists, m)
    rep = degeneracy(g)
    short = [v for v in g.vertices() if len(lists[v]) < rep.degeneracy + 1]
    if short:
        raise PreconditionError(
            f"lists need at least {rep.degeneracy + 1} colors (degeneracy + 1); vertex {short[0]} has {len(lists[short[0]])}"
        )
    f = {}
    for v in reversed(rep.ordering):
        f[v] = min(residual_list(v, lists, m, f, g))
    return f


# ---------------------------------------------------------------- reduction

@dataclass(frozen=True)
class LowDegree:
    vertex: int
    neighbors: tuple  # alive neighbours at removal time


@dataclass(frozen=True)
class Gadget:
    witness: F53Witness
    external: tuple  # per witness vertex (v1..v6): alive outside neighbours


ReductionStep = Union[LowDegree, Gadget]


@dataclass(frozen=True)
class ReductionTrace:
    """Steps use original vertex ids. ``remaps[i]`` is the old->new id table
    of the graph after step i (ids relative to the graph before it)."""

    steps: tuple
    remaps: tuple = field(repr=False)


class ReductionStuck(Exception):
    """Neither a vertex of degree <= 3 nor an F_5^3 gadget is left."""

    def __init__(self, trace: ReductionTrace, remainder: Graph, labels: tuple):
        self.trace = trace
        self.remainder = remainder
        self.labels = labels  # remainder vertex i is original vertex labels[i]
        super().__init__(
            f"reduction stuck after {len(trace.steps)} steps on {remainder.n} vertices "
            f"(min degree {min(remainder.degree(v) for v in remainder.vertices())})"
        )

    def remainder_original_edges(self) -> list[tuple[int, int]]:
        return sorted(canon(self.labels[u], self.labels[v]) for u, v in self.remainder.edges)


def reduce(g: Graph) -> ReductionTrace:
    """Peel g down to nothing: smallest-id vertex of degree <= 3 if any,
    otherwise the first F_5^3 gadget. Raises ReductionStuck otherwise."""
    steps, remaps = [], []
    cur = g
    labels = tuple(g.vertices())
    while cur.n:
        low = next((v for v in cur.vertices() if cur.degree(v) <= 3), None)
        if low is not None:
            steps.append(LowDegree(labels[low], tuple(sorted(labels[w] for w in cur.adj[low]))))
            removed = [low]
        else:
            w = find_f53(cur)
            if w is None:
                raise ReductionStuck(ReductionTrace(tuple(steps), tuple(remaps)), cur, labels)
            inside = set(w.vertices)
            external = tuple(
                tuple(sorted(labels[x] for x in cur.adj[v] - inside)) for v in w.vertices
            )
            steps.append(Gadget(F53Witness(*(labels[v] for v in w.vertices)), external))
            removed = w.vertices
        cur, remap = remove_vertices(cur, removed)
        remaps.append(remap)
        inverse = sorted(remap, key=remap.get)
        labels = tuple(labels[old] for old in inverse)
    return ReductionTrace(tuple(steps), tuple(remaps))


def color_gadget(w: F53Witness, lstar: Mapping, m: MatchingAssignment) -> Coloring:
    """Color the six gadget vertices from their residual lists.

    v2 takes the smallest color that leaves at least two colors at v1; then
    v3, v4, v5, v6, v1 greedily take their smallest surviving color. Only
    the seven gadget edges constrain the choices.
    """
    need = {w.v1: 2, w.v2: 3, w.v3: 2, w.v4: 2, w.v5: 2, w.v6: 3}
    for v, k in need.items():
        if len(lstar[v]) < k:
            raise PreconditionError(f"gadget vertex {v} has {len(lstar[v])} residual colors, needs {k}")
    nbrs = {v: set() for v in w.vertices}
    for a, b in w.gadget_edges:
        nbrs[a].add(b)
        nbrs[b].add(a)

    def available(v, f):
        out = set(lstar[v])
        for u in nbrs[v]:
            if u in f:
                out.discard(m.partner(u, f[u], v))
        return out

    f = {}
    for c in sorted(lstar[w.v2]):
        if len(available(w.v1, {w.v2: c})) >= 2:
            f[w.v2] = c
            break
    else:
        raise PreconditionError("no color at v2 leaves two colors at v1")
    for v in (w.v3, w.v4, w.v5, w.v6, w.v1):
        avail = available(v, f)
        if not avail:
            raise PreconditionError(f"gadget vertex {v} ran out of colors")
        f[v] = min(avail)
    return f


def color_planar_c4free(g: Graph, lists: Lists, m: MatchingAssignment) -> Coloring:
    """DP-coloring of a planar graph without 4-cycles from lists of size >= 4.

    Planarity is the caller's responsibility; a non-planar input may raise
    ReductionStuck with the irreducible remainder attached.
    """
    cyc = has_cycle_len(g, 4)
    if cyc is not None:
        raise ContainsC4(cyc)
    validate_instance(g, lists, m)
    short = [v for v in g.vertices() if len(lists[v]) < 4]
    if short:
        raise PreconditionError(f"vertex {short[0]} has fewer than 4 colors")
    trace = reduce(g)
    f = {}
    for step in reversed(trace.steps):
        if isinstance(step, LowDegree):
            f[step.vertex] = min(residual_list(step.vertex, lists, m, f, g))
        else:
            lstar = {v: residual_list(v, lists, m, f, g) for v in step.witness.vertices}
            f.update(color_gadget(step.witness, lstar, m))
    bad = verify_coloring(g, lists, m, f)
    if bad:
        raise AssertionError(f"constructed coloring is invalid: {bad[0]}")
    return f
