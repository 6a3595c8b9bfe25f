"""Undirected simple graphs on dense 0-based vertex indices, plus text I/O.

Vertex sets handed back to callers are sorted tuples. Internally most
algorithms work on Python ints used as bitmasks (bit ``v`` set means vertex
``v`` is a member), which makes the neighbourhood intersections that dominate
clique enumeration a single machine-level AND for small graphs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Usage error: bad vertex index, non-bijective map and so on."""


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nb:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        """Build from open-neighbourhood bitmasks."""
        return cls(len(masks), tuple(frozenset(iter_bits(m)) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighbourhoods as bitmasks."""
        return tuple(sum(1 << u for u in nb) for nb in self.adj)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(m | (1 << v) for v, m in enumerate(self.masks))

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_set(mask: int) -> VertexSet:
    return tuple(iter_bits(mask))


def set_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return tuple(sorted(g.adj[v] | {v}))


def induced_subgraph(g: Graph, w: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``g[w]`` relabelled to ``0..|w|-1`` in ascending order of ``w``.

    The second value maps old indices to new ones.
    """
    ws = sorted(set(w))
    for v in ws:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(ws)}
    adj = tuple(frozenset(index[u] for u in g.adj[v] if u in index) for v in ws)
    return Graph(len(ws), adj), index


def connected_components(g: Graph) -> list[VertexSet]:
    return [mask_to_set(c) for c in component_masks(g, (1 << g.n) - 1)]


def component_masks(g: Graph, within: int) -> list[int]:
    """Components of ``g[within]`` as bitmasks, ordered by least vertex."""
    masks = g.masks
    out = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = masks[v] & within & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rest &= ~comp
    return out


def apply_permutation(g: Graph, pi: Sequence[int]) -> Graph:
    """Relabel so that vertex ``v`` of ``g`` becomes ``pi[v]``."""
    if len(pi) != g.n or sorted(pi) != list(range(g.n)):
        raise GraphError("permutation is not a bijection on the vertex set")
    adj: list[frozenset[int]] = [frozenset()] * g.n
    for v in range(g.n):
        adj[pi[v]] = frozenset(pi[u] for u in g.adj[v])
    return Graph(g.n, tuple(adj))


# graph6 ---------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"n={n} too large for graph6")


def write_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", offset=base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", offset=base + i)

    def take(start: int, count: int) -> int:
        if start + count > len(s):
            raise GraphFormatError("truncated size header", offset=base + len(s))
        val = 0
        for ch in s[start:start + count]:
            val = (val << 6) | (ord(ch) - 63)
        return val

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == "~":
        n, pos = take(2, 6), 8
    else:
        n, pos = take(1, 3), 4

    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - pos < need:
        raise GraphFormatError(
            f"truncated payload: expected {need} data bytes, got {len(s) - pos}",
            offset=base + len(s),
        )
    if len(s) - pos > need:
        raise GraphFormatError("trailing data after graph6 payload", offset=base + pos + need)

    nbrs: list[set[int]] = [set() for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[pos + k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                nbrs[i].add(j)
                nbrs[j].add(i)
            k += 1
    return Graph(n, tuple(frozenset(x) for x in nbrs))


# edge list ------------------------------------------------------------------


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based).

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise GraphFormatError("missing 'n m' header", line=1)

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", line=lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", line=lineno) from None
        return a, b

    hline, header = rows[0]
    n, m = ints(hline, header)
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", line=hline)
    if len(rows) - 1 != m:
        raise GraphFormatError(
            f"header announces {m} edges, found {len(rows) - 1}", line=rows[-1][0]
        )
    seen: set[tuple[int, int]] = set()
    for lineno, line in rows[1:]:
        u, v = ints(lineno, line)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range in edge ({u}, {v})", line=lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", line=lineno)
        seen.add(key)
    return Graph.from_edges(n, seen)


def parse_graph(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edges":
        return parse_edge_list(text)
    raise GraphError(f"unknown format {fmt!r}")
