"""Deliberately naive reference implementations and graph generators.

Nothing here shares code paths with the structural algorithms: canonical
forms come from trying every relabelling, interval recognition from trying
clique arrangements, and cliques from Bron-Kerbosch.
"""
from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .canonizer import CanonicalForm
from .cliques import CliqueFamily
from .graph_core import Graph, connected_components

MAX_BRUTE_N = 9
MAX_BRUTE_CLIQUES = 9
MAX_ENUM_N = 7


class OracleLimitError(ValueError):
    pass


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)


def brute_canonical(g: Graph) -> CanonicalForm:
    """Least row-major upper-triangle encoding over all ``n!`` relabellings."""
    n = g.n
    if n > MAX_BRUTE_N:
        raise OracleLimitError(f"brute_canonical is capped at n={MAX_BRUTE_N}")
    if n <= 1:
        return CanonicalForm(n, "", tuple(range(1, n + 1)))
    adj = np.zeros((n, n), dtype=np.int8)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1
    perms = _perms(n).astype(np.intp)  # row p: label i+1 goes to vertex p[i]
    iu, ju = np.triu_indices(n, 1)
    table = adj[perms[:, iu], perms[:, ju]]
    weights = 1 << np.arange(len(iu) - 1, -1, -1, dtype=np.int64)
    keys = table.astype(np.int64) @ weights
    best = int(np.argmin(keys))
    order = perms[best]
    bits = "".join(str(int(b)) for b in table[best])
    bijection = [0] * n
    for label, v in enumerate(order, start=1):
        bijection[int(v)] = label
    return CanonicalForm(n, bits, tuple(bijection))


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Search for an edge-preserving bijection, one vertex at a time."""
    if g.n != h.n:
        return False
    n = g.n
    if n > MAX_BRUTE_N:
        raise OracleLimitError(f"brute_isomorphic is capped at n={MAX_BRUTE_N}")
    if g.m != h.m or sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return False
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or len(h.adj[w]) != len(g.adj[v]):
                continue
            if all((u in g.adj[v]) == (image[u] in h.adj[w]) for u in range(v)):
                image[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        return False

    return extend(0)


# cliques ----------------------------------------------------------------------


def bron_kerbosch(g: Graph, pivot: bool = True) -> CliqueFamily:
    found: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            found.append(frozenset(r))
            return
        if pivot:
            u = max(p | x, key=lambda w: len(p & g.adj[w]))
            candidates = p - g.adj[u]
        else:
            candidates = set(p)
        for v in sorted(candidates):
            expand(r | {v}, p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    if g.n:
        expand(set(), set(range(g.n)), set())
    return CliqueFamily.from_masks(g.n, (sum(1 << v for v in c) for c in found))


# interval structure by exhaustive arrangement ---------------------------------


def _component_arrangements(cliques: Sequence[frozenset[int]], first: int | None = None) -> Iterator[tuple[int, ...]]:
    """All orders of ``cliques`` with every vertex in a contiguous run.

    Plain permutation search; a partial order is abandoned as soon as a
    vertex reappears after having been left. ``first`` pins the opening clique.
    """
    k = len(cliques)
    if k > MAX_BRUTE_CLIQUES:
        raise OracleLimitError(f"arrangement search is capped at {MAX_BRUTE_CLIQUES} cliques")

    def grow(seq: list[int], closed: frozenset[int], open_: frozenset[int]):
        if len(seq) == k:
            yield tuple(seq)
            return
        for c in range(k) if seq or first is None else (first,):
            if c in seq:
                continue
            clique = cliques[c]
            if clique & closed:
                continue
            yield from grow(seq + [c], closed | (open_ - clique), clique)

    yield from grow([], frozenset(), frozenset())


def _component_cliques(g: Graph, comp: Sequence[int]) -> list[frozenset[int]]:
    fam = bron_kerbosch(g)
    inside = set(comp)
    return [frozenset(c.members) for c in fam if set(c.members) <= inside]


def brute_is_interval(g: Graph) -> tuple[bool, list[tuple[int, int]] | None]:
    """Decide membership by trying clique arrangements per component.

    On success also returns intervals ``(a, b)`` with components laid end to
    end starting at point 1. Non-chordal graphs are rejected up front, which
    keeps the arrangement search within its clique cap.
    """
    if not is_chordal(g):
        return False, None
    intervals: list[tuple[int, int] | None] = [None] * g.n
    offset = 0
    for comp in connected_components(g):
        cliques = _component_cliques(g, comp)
        arrangement = next(_component_arrangements(cliques), None)
        if arrangement is None:
            return False, None
        for pos, c in enumerate(arrangement, start=offset + 1):
            for v in cliques[c]:
                a, b = intervals[v] or (pos, pos)
                intervals[v] = (min(a, pos), max(b, pos))
        offset += len(cliques)
    return True, [iv for iv in intervals if iv is not None]


def brute_possible_ends(g: Graph) -> set[frozenset[int]]:
    """Cliques that open at least one valid arrangement of all cliques.

    Components of a disconnected graph may be concatenated in any order, so
    the arrangements searched are those of the whole clique set.
    """
    fam = bron_kerbosch(g)
    cliques = [frozenset(c.members) for c in fam]
    ends: set[frozenset[int]] = set()
    for c in range(len(cliques)):
        if next(_component_arrangements(cliques, first=c), None) is not None:
            ends.add(cliques[c])
    return ends


def is_chordal(g: Graph) -> bool:
    """Repeatedly strip simplicial vertices."""
    alive = set(range(g.n))
    while alive:
        for v in sorted(alive):
            nb = g.adj[v] & alive
            if all(nb - {u} <= g.adj[u] for u in nb):
                alive.remove(v)
                break
        else:
            return False
    return True


# generators -------------------------------------------------------------------


def random_interval_graph(n: int, seed: int, max_coordinate: int | None = None) -> tuple[Graph, list[tuple[int, int]]]:
    """Intersection graph of ``n`` random closed integer intervals.

    Endpoints are two independent uniform draws from ``[1, max_coordinate]``
    (default ``2n``), sorted. Only ``random.Random(seed).random()`` is used,
    whose output sequence Python guarantees across versions.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_coordinate is None:
        max_coordinate = max(1, 2 * n)
    rng = random.Random(seed)
    intervals = []
    for _ in range(n):
        a = 1 + int(rng.random() * max_coordinate)
        b = 1 + int(rng.random() * max_coordinate)
        intervals.append((min(a, b), max(a, b)))
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if max(intervals[u][0], intervals[v][0]) <= min(intervals[u][1], intervals[v][1])
    ]
    return Graph.from_edges(n, edges), intervals


def random_graph(n: int, seed: int, p: float = 0.5) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_permutation(n: int, rng: random.Random) -> list[int]:
    pi = list(range(n))
    for i in range(n - 1, 0, -1):
        j = int(rng.random() * (i + 1))
        pi[i], pi[j] = pi[j], pi[i]
    return pi


@lru_cache(maxsize=None)
def _representatives(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    reps: dict[str, Graph] = {}
    for base in _representatives(n - 1):
        edges = base.edges()
        for subset in range(1 << (n - 1)):
            g = Graph.from_edges(n, edges + [(u, n - 1) for u in range(n - 1) if subset >> u & 1])
            form = brute_canonical(g)
            if form.bits not in reps:
                reps[form.bits] = form.graph()
    return tuple(reps[k] for k in sorted(reps))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices.

    Every graph on ``n`` vertices is a smaller one plus a vertex, so classes
    are grown one vertex at a time and deduplicated by brute canonical form.
    Each yielded graph is its own brute canonical graph.
    """
    if not 0 <= n <= MAX_ENUM_N:
        raise OracleLimitError(f"enumerate_graphs is capped at n={MAX_ENUM_N}")
    yield from _representatives(n)


def interval_graphs(n: int) -> list[Graph]:
    return [g for g in enumerate_graphs(n) if brute_is_interval(g)[0]]
