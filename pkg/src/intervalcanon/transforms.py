"""Incidence and split-incidence graphs, their inverses, and WL refinement.

In both constructions the original vertices keep indices ``0..n-1`` and
edge ``i`` (in lexicographic edge order) becomes vertex ``n + i``.
"""
from __future__ import annotations

import hashlib
from collections import Counter
from itertools import combinations

import numpy as np

from .graph_core import Graph, component_masks, iter_bits

WL2_MAX_N = 200


class NotAnIncidenceGraph(ValueError):
    pass


class NotASplitIncidenceGraph(ValueError):
    pass


def incidence_graph(g: Graph) -> tuple[Graph, list[str]]:
    """Subdivide every edge. Also returns ``"vertex"``/``"edge"`` part labels."""
    edges = g.edges()
    new = [(u, g.n + i) for i, e in enumerate(edges) for u in e]
    h = Graph.from_edges(g.n + len(edges), new)
    return h, ["vertex"] * g.n + ["edge"] * len(edges)


def split_incidence_graph(g: Graph) -> Graph:
    h, _ = incidence_graph(g)
    return Graph.from_edges(h.n, h.edges() + list(combinations(range(g.n), 2)))


def _rebuild(h: Graph, vertex_part: list[int], edge_part: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(sorted(vertex_part))}
    return Graph.from_edges(len(index), [tuple(index[u] for u in sorted(h.adj[e])) for e in edge_part])


def _edge_side_ok(h: Graph, side: int, other: int) -> bool:
    """Every vertex of ``side`` has two neighbours, in ``other``, and no pair repeats."""
    pairs = set()
    for e in iter_bits(side):
        nb = h.masks[e]
        if nb.bit_count() != 2 or nb & ~other:
            return False
        if nb in pairs:
            return False
        pairs.add(nb)
    return True


def reconstruct_from_incidence(h: Graph) -> Graph:
    """Invert :func:`incidence_graph`.

    Each component is 2-coloured; the colour class holding the component's
    least vertex is read as original vertices when that reading is valid,
    otherwise the other class is. Even cycles read both ways, so the result
    is only determined up to isomorphism on such inputs.
    """
    vertex_part: list[int] = []
    edge_part: list[int] = []
    for comp in component_masks(h, (1 << h.n) - 1):
        sides = _two_colour(h, comp)
        if sides is None:
            raise NotAnIncidenceGraph("graph is not bipartite")
        first, second = sides
        if _edge_side_ok(h, second, first):
            vs, es = first, second
        elif _edge_side_ok(h, first, second):
            vs, es = second, first
        else:
            low = (comp & -comp).bit_length() - 1
            raise NotAnIncidenceGraph(
                f"component of vertex {low} has no side of degree-2 vertices with distinct neighbour pairs"
            )
        vertex_part.extend(iter_bits(vs))
        edge_part.extend(iter_bits(es))
    edge_part.sort(key=lambda e: sorted(h.adj[e]))
    return _rebuild(h, vertex_part, edge_part)


def _two_colour(h: Graph, comp: int) -> tuple[int, int] | None:
    """Sides of a connected bipartite component; the first holds its least vertex."""
    start = (comp & -comp).bit_length() - 1
    colour = {start: 0}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in h.adj[v]:
            if u not in colour:
                colour[u] = 1 - colour[v]
                stack.append(u)
            elif colour[u] == colour[v]:
                return None
    first = sum(1 << v for v, c in colour.items() if c == 0)
    return first, comp & ~first


def reconstruct_from_split(h: Graph) -> Graph:
    """Invert :func:`split_incidence_graph`.

    The original vertices must form a clique and every other vertex must see
    exactly two of them. With four or more original vertices those have
    degree at least three, which pins the split down; smaller inputs (at most
    six vertices) are resolved by search, preferring the largest clique side
    and then the lexicographically least one. That makes ``K3`` read as three
    isolated vertices rather than a single edge.
    """
    n = h.n
    if n == 0:
        return Graph(0, ())
    full = (1 << n) - 1
    if n <= 6:
        candidates = sorted(
            (c for c in range(1, full + 1)),
            key=lambda c: (-c.bit_count(), tuple(iter_bits(c))),
        )
    else:
        candidates = [sum(1 << v for v in range(n) if h.degree(v) != 2)]
    for clique in candidates:
        if _split_ok(h, clique, full & ~clique):
            edge_part = sorted(iter_bits(full & ~clique), key=lambda e: sorted(h.adj[e]))
            return _rebuild(h, list(iter_bits(clique)), edge_part)
    raise NotASplitIncidenceGraph("no clique/independent split with degree-2 edge vertices")


def _split_ok(h: Graph, clique: int, rest: int) -> bool:
    for v in iter_bits(clique):
        if clique & ~(h.masks[v] | 1 << v):
            return False
    return _edge_side_ok(h, rest, clique)


# Weisfeiler-Lehman -------------------------------------------------------------


def _digest(obj) -> str:
    return hashlib.sha256(repr(obj).encode()).hexdigest()[:16]


def _wl1(g: Graph) -> tuple[str, ...]:
    colours = [0] * g.n
    history = []
    classes = 1
    while True:
        sigs = [(colours[v], tuple(sorted(colours[u] for u in g.adj[v]))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        history.append(_digest(sorted(Counter(sigs).items())))
        colours = [palette[s] for s in sigs]
        if len(palette) == classes:
            break
        classes = len(palette)
    history.append(_digest(sorted(Counter(colours).values())))
    return tuple(history)


def _wl2(g: Graph) -> tuple[str, ...]:
    n = g.n
    if n > WL2_MAX_N:
        raise ValueError(f"2-WL is capped at n={WL2_MAX_N}")
    if n == 0:
        return (_digest(()),)
    adj = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1
    colours = adj.copy()
    np.fill_diagonal(colours, 2)  # atomic types: 0 non-adjacent, 1 adjacent, 2 equal
    history = []
    classes = len(np.unique(colours))
    while True:
        base = int(colours.max()) + 1
        # multiset over w of (c(u, w), c(w, v)), for every pair (u, v)
        pairs = colours[:, :, None] * base + colours[None, :, :]
        pairs = np.sort(pairs, axis=1)
        rows = np.concatenate([colours.reshape(n * n, 1), pairs.transpose(0, 2, 1).reshape(n * n, n)], axis=1)
        uniq, inverse, counts = np.unique(rows, axis=0, return_inverse=True, return_counts=True)
        history.append(hashlib.sha256(uniq.tobytes() + counts.tobytes()).hexdigest()[:16])
        colours = inverse.reshape(n, n).astype(np.int64)
        if len(uniq) == classes:
            break
        classes = len(uniq)
    history.append(_digest(sorted(np.unique(colours, return_counts=True)[1].tolist())))
    return tuple(history)


def wl_refine(g: Graph, k: int = 1) -> tuple[str, ...]:
    """Stable colouring signature, comparable across graphs.

    Colours are renamed each round by sorted order of their refinement
    signatures, so the renaming depends only on the isomorphism type. The
    signature records a digest of every round's colour histogram and the
    final class sizes.
    """
    if k == 1:
        return _wl1(g)
    if k == 2:
        return _wl2(g)
    raise ValueError("k must be 1 or 2")


def wl_distinguishes(g: Graph, h: Graph, k: int = 1) -> bool:
    if g.n != h.n:
        return True
    return wl_refine(g, k) != wl_refine(h, k)
