"""Maximal cliques from pairs of closed neighbourhoods, and vertex spans.

In an interval graph every maximal clique equals ``N[u] & N[v]`` for some
(possibly equal) members ``u, v``. Only adjacent-or-equal pairs are tried:
a non-adjacent pair can never both sit in the same clique.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Graph, VertexSet, iter_bits, mask_to_set


@dataclass(frozen=True)
class MaxClique:
    id: int
    members: VertexSet
    mask: int

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CliqueFamily:
    n: int
    cliques: tuple[MaxClique, ...]
    membership: tuple[tuple[int, ...], ...]

    @classmethod
    def from_masks(cls, n: int, masks) -> CliqueFamily:
        """Deduplicate, sort lexicographically by member list, assign ids."""
        members = sorted({m: mask_to_set(m) for m in masks}.items(), key=lambda kv: kv[1])
        cliques = tuple(MaxClique(i, mem, m) for i, (m, mem) in enumerate(members))
        memb: list[list[int]] = [[] for _ in range(n)]
        for c in cliques:
            for v in c.members:
                memb[v].append(c.id)
        return cls(n, cliques, tuple(tuple(x) for x in memb))

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    @property
    def masks(self) -> list[int]:
        return [c.mask for c in self.cliques]

    @property
    def member_sets(self) -> list[VertexSet]:
        return [c.members for c in self.cliques]


def is_clique(g: Graph, mask: int) -> bool:
    closed = g.closed_masks
    return all(closed[v] & mask == mask for v in iter_bits(mask))


def is_maximal_clique(g: Graph, mask: int, within: int | None = None) -> bool:
    """Clique test plus "no outside vertex sees every member".

    ``within`` restricts the host to an induced subgraph.
    """
    if within is None:
        within = (1 << g.n) - 1
    if mask == 0 or mask & ~within or not is_clique(g, mask):
        return False
    common = within
    for v in iter_bits(mask):
        common &= g.closed_masks[v]
    return common == mask


def candidate_clique_masks(g: Graph, within: int | None = None) -> set[int]:
    """Distinct maximal cliques of ``g[within]`` of the form ``N[u] & N[v]``."""
    if within is None:
        within = (1 << g.n) - 1
    closed = g.closed_masks
    found: set[int] = set()
    rejected: set[int] = set()
    for u in iter_bits(within):
        nu = closed[u] & within
        for v in iter_bits(nu):
            if v < u:
                continue
            c = nu & closed[v]
            if c in found or c in rejected:
                continue
            if is_maximal_clique(g, c, within):
                found.add(c)
            else:
                rejected.add(c)
    return found


def candidate_max_cliques(g: Graph) -> CliqueFamily:
    return CliqueFamily.from_masks(g.n, candidate_clique_masks(g))


def span(fam: CliqueFamily, v: int) -> int:
    if not 0 <= v < fam.n:
        raise ValueError(f"vertex {v} out of range for n={fam.n}")
    return len(fam.membership[v])


def spans(fam: CliqueFamily) -> list[int]:
    return [len(ids) for ids in fam.membership]


def edge_coverage_check(g: Graph, fam: CliqueFamily) -> tuple[int, int] | None:
    """First edge (lexicographic) lying in no clique of ``fam``, or ``None``."""
    masks = fam.masks
    for u in range(g.n):
        for v in sorted(g.adj[u]):
            if v < u:
                continue
            both = (1 << u) | (1 << v)
            if not any(c & both == both for c in masks):
                return (u, v)
    return None
