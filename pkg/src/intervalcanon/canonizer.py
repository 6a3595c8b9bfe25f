"""Canonical forms of interval graphs by recursive lexicographic leaders.

For a connected graph every possible end ``M`` yields a weak order on the
maximal cliques. Its incomparability blocks are laid out left to right;
vertices private to a block of two or more cliques form a module, which is
canonized recursively (component by component) and dropped in as one unit.
Every other vertex is placed by the first block it occurs in and the number
of blocks it spans. Vertices with equal placement are closed-neighbourhood
twins, so their relative order cannot change the encoding. The least
encoding over all possible ends is the canonical form of the component, and
components are concatenated in ascending ``(size, bits)`` order.

An encoding is the row-major upper triangle of the adjacency matrix under
the labelling, as a ``'0'``/``'1'`` string: ``(1,2), (1,3), ..., (1,n), (2,3), ...``.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cliques import CliqueFamily, candidate_clique_masks, edge_coverage_check
from .end_order import (
    ConsistencyError,
    ModuleError,
    PrecRelation,
    Status,
    incomparability_classes,
    module_mask,
    prec_from_masks,
)
from .graph_core import Graph, VertexSet, component_masks, iter_bits, mask_to_set, write_graph6


class NotInterval(Exception):
    """The input is not an interval graph.

    ``reason`` is one of ``uncovered-edge``, ``no-possible-end``,
    ``module-failure`` or ``verification-mismatch``; ``component`` names the
    offending vertex set when there is one.
    """

    def __init__(self, reason: str, component: VertexSet = (), detail: str = ""):
        msg = reason if not component else f"{reason} in component {list(component)}"
        if detail:
            msg = f"{msg}: {detail}"
        super().__init__(msg)
        self.reason = reason
        self.component = component
        self.detail = detail


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    bits: str
    bijection: tuple[int, ...]

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[int]) -> CanonicalForm:
        """Form of ``g`` labelled so that ``order[i]`` receives label ``i + 1``."""
        bijection = [0] * len(order)
        for label, v in enumerate(order, start=1):
            bijection[v] = label
        return cls(len(order), encode(g, order), tuple(bijection))

    @property
    def order(self) -> tuple[int, ...]:
        out = [0] * self.n
        for v, label in enumerate(self.bijection):
            out[label - 1] = v
        return tuple(out)

    def graph(self) -> Graph:
        """The canonical graph itself, with label ``i`` stored as vertex ``i - 1``."""
        edges = []
        k = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.bits[k] == "1":
                    edges.append((i, j))
                k += 1
        return Graph.from_edges(self.n, edges)

    @property
    def graph6(self) -> str:
        return write_graph6(self.graph())

    @property
    def digest(self) -> str:
        return hashlib.sha256(f"{self.n}:{self.bits}".encode()).hexdigest()


@dataclass(frozen=True)
class QuotientOrder:
    """Vertex classes of one end-rooted layout, in layout order.

    Module classes have ``module_block`` set to their block position; all
    other classes are single vertices. Consecutive classes with the same
    ``(least_block, span)`` are incomparable twins.
    """

    blocks: tuple[tuple[int, ...], ...]
    classes: tuple[VertexSet, ...]
    least_block: tuple[int, ...]
    span: tuple[int, ...]
    module_block: tuple[int | None, ...]


def encode(g: Graph, order: Sequence[int]) -> str:
    masks = g.masks
    out = []
    for i, u in enumerate(order):
        mu = masks[u]
        out.extend("1" if mu >> v & 1 else "0" for v in order[i + 1:])
    return "".join(out)


def lex_leader(forms: Iterable[CanonicalForm]) -> CanonicalForm:
    forms = list(forms)
    if not forms:
        raise ValueError("lexicographic leader of an empty collection")
    if len({f.n for f in forms}) != 1:
        raise ValueError("lexicographic leader needs forms of equal size")
    return min(forms, key=lambda f: f.bits)


def lex_disjoint_union(forms: Sequence[CanonicalForm]) -> CanonicalForm:
    """Block-diagonal union in ascending ``(n, bits)`` order.

    The inputs are read as one graph whose vertices are the inputs' vertices
    concatenated in the given order, and the returned bijection is over that
    combined vertex set.
    """
    offsets = []
    total = 0
    for f in forms:
        offsets.append(total)
        total += f.n
    ranked = sorted(range(len(forms)), key=lambda i: (forms[i].n, forms[i].bits))
    bijection = [0] * total
    rows: list[list[str]] = []
    base = 0
    for i in ranked:
        f = forms[i]
        for v, label in enumerate(f.bijection):
            bijection[offsets[i] + v] = base + label
        k = 0
        for r in range(f.n):
            width = f.n - r - 1
            rows.append(list(f.bits[k:k + width]) + ["0"] * (total - base - f.n))
            k += width
        base += f.n
    return CanonicalForm(total, "".join("".join(r) for r in rows), tuple(bijection))


# the recursive procedure ------------------------------------------------------


@dataclass
class _Layout:
    order: list[int]
    cliques: list[int]
    bits: str


def quotient_from_masks(g: Graph, within: int, masks: Sequence[int], pr: PrecRelation) -> QuotientOrder:
    blocks = incomparability_classes(pr).blocks
    module_of: dict[int, int] = {}
    entries: list[tuple[tuple[int, int], VertexSet, int | None]] = []
    for pos, block in enumerate(blocks):
        if len(block) > 1:
            s = module_mask(g, masks, block, within)
            for v in iter_bits(s):
                module_of[v] = pos
            entries.append(((pos, 1), mask_to_set(s), pos))

    block_of_clique = {c: pos for pos, block in enumerate(blocks) for c in block}
    seen: dict[int, set[int]] = {}
    for c, m in enumerate(masks):
        for v in iter_bits(m):
            if v not in module_of:
                seen.setdefault(v, set()).add(block_of_clique[c])
    for v, where in seen.items():
        first, last = min(where), max(where)
        if last - first + 1 != len(where):
            raise ConsistencyError(f"vertex {v} occupies non-consecutive blocks")
        entries.append(((first, len(where)), (v,), None))

    entries.sort(key=lambda e: (e[0], e[1]))
    for a, b in zip(entries, entries[1:]):
        if a[0] == b[0]:
            if a[2] is not None or b[2] is not None:
                raise ConsistencyError("a module class is tied with another class")
            u, v = a[1][0], b[1][0]
            if g.closed_masks[u] & within != g.closed_masks[v] & within:
                raise ConsistencyError(f"tied vertices {u} and {v} are not twins")
    return QuotientOrder(
        blocks=blocks,
        classes=tuple(e[1] for e in entries),
        least_block=tuple(e[0][0] for e in entries),
        span=tuple(e[0][1] for e in entries),
        module_block=tuple(e[2] for e in entries),
    )


def quotient_order(g: Graph, w: Iterable[int], fam: CliqueFamily, pr: PrecRelation) -> QuotientOrder:
    """Layout classes of ``g[w]`` whose maximal cliques are ``fam``."""
    if pr.status is not Status.WEAK_ORDER:
        raise ValueError("quotient order needs a weak order")
    within = 0
    for v in w:
        within |= 1 << v
    return quotient_from_masks(g, within, fam.masks, pr)


class _Canonizer:
    """One canonization run; the memo is private to the run."""

    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict[int, _Layout] = {}

    def component(self, within: int, masks: Sequence[int] | None = None, bound: int | None = None) -> _Layout:
        hit = self.memo.get(within)
        if hit is not None:
            return hit
        if masks is None:
            masks = candidate_clique_masks(self.g, within)
        masks = sorted(masks, key=mask_to_set)
        k = len(masks)
        if bound is not None and k > bound:
            raise ConsistencyError(f"module has {k} cliques but its block only {bound}")
        if k == 1:
            layout = _Layout(list(iter_bits(within)), [masks[0]], "1" * (within.bit_count() * (within.bit_count() - 1) // 2))
            self.memo[within] = layout
            return layout

        memb_count: dict[int, int] = {}
        for m in masks:
            for v in iter_bits(m):
                memb_count[v] = memb_count.get(v, 0) + 1
        best: _Layout | None = None
        module_failure: Exception | None = None
        for root in range(k):
            # a first clique always owns a vertex found in no other clique
            if not any(memb_count[v] == 1 for v in iter_bits(masks[root])):
                continue
            pr = prec_from_masks(masks, root)
            if pr.status is not Status.WEAK_ORDER:
                continue
            try:
                layout = self.with_end(within, masks, pr, k)
            except ModuleError as exc:
                module_failure = exc
                continue
            if best is None or layout.bits < best.bits:
                best = layout
        if best is None:
            if module_failure is not None:
                raise NotInterval("module-failure", mask_to_set(within), str(module_failure))
            raise NotInterval("no-possible-end", mask_to_set(within))
        self.memo[within] = best
        return best

    def with_end(self, within: int, masks: Sequence[int], pr: PrecRelation, bound: int) -> _Layout:
        q = quotient_from_masks(self.g, within, masks, pr)
        order: list[int] = []
        inserted: dict[int, list[int]] = {}
        for cls, block_pos in zip(q.classes, q.module_block):
            if block_pos is None:
                order.extend(cls)
                continue
            block = q.blocks[block_pos]
            if len(block) >= bound:
                raise ConsistencyError("recursion would not shrink the clique bound")
            s = 0
            for v in cls:
                s |= 1 << v
            parts = []
            for h in component_masks(self.g, s):
                back = {}
                for c in block:
                    piece = masks[c] & h
                    if piece:
                        if piece in back:
                            raise ModuleError("two block cliques coincide inside the module")
                        back[piece] = masks[c]
                sub = self.component(h, list(back), bound=len(block))
                parts.append((sub, back))
            parts.sort(key=lambda p: (len(p[0].order), p[0].bits))
            clique_seq: list[int] = []
            for sub, back in parts:
                order.extend(sub.order)
                clique_seq.extend(back[c] for c in sub.cliques)
            if sorted(clique_seq) != sorted(masks[c] for c in block):
                raise ModuleError("module layout does not account for every block clique")
            inserted[block_pos] = clique_seq

        cliques: list[int] = []
        for pos, block in enumerate(q.blocks):
            if pos in inserted:
                cliques.extend(inserted[pos])
            else:
                cliques.extend(masks[c] for c in block)
        return _Layout(order, cliques, encode(self.g, order))


@dataclass(frozen=True)
class Canonization:
    form: CanonicalForm
    components: tuple[VertexSet, ...]
    clique_orders: tuple[tuple[VertexSet, ...], ...]


def canonize(g: Graph) -> Canonization:
    """Full run: condition checks, per-component layouts and the union."""
    all_cliques = candidate_clique_masks(g)
    uncovered = edge_coverage_check(g, CliqueFamily.from_masks(g.n, all_cliques))
    if uncovered is not None:
        raise NotInterval("uncovered-edge", (), f"edge {uncovered} lies in no candidate clique")
    run = _Canonizer(g)
    layouts = []
    comps = component_masks(g, (1 << g.n) - 1)
    for comp in comps:
        try:
            layouts.append(run.component(comp, [c for c in all_cliques if c & comp]))
        except ConsistencyError as exc:
            raise NotInterval("module-failure", mask_to_set(comp), str(exc)) from exc
    ranked = sorted(zip(comps, layouts), key=lambda p: (len(p[1].order), p[1].bits))
    order = [v for _, lay in ranked for v in lay.order]
    form = CanonicalForm.from_order(g, order)
    return Canonization(
        form,
        tuple(mask_to_set(c) for c, _ in ranked),
        tuple(tuple(mask_to_set(m) for m in lay.cliques) for _, lay in ranked),
    )


def representation_from_clique_orders(n: int, clique_orders: Sequence[Sequence[VertexSet]]) -> list[tuple[int, int]]:
    """Intervals of clique positions, components laid end to end from 1."""
    first = [0] * n
    last = [0] * n
    pos = 0
    for seq in clique_orders:
        for clique in seq:
            pos += 1
            for v in clique:
                if not first[v]:
                    first[v] = pos
                last[v] = pos
    return list(zip(first, last))


def intersection_graph(intervals: Sequence[tuple[int, int]]) -> Graph:
    edges = [
        (u, v)
        for u in range(len(intervals))
        for v in range(u + 1, len(intervals))
        if max(intervals[u][0], intervals[v][0]) <= min(intervals[u][1], intervals[v][1])
    ]
    return Graph.from_edges(len(intervals), edges)


def canonical_form(g: Graph) -> CanonicalForm:
    result = canonize(g)
    rep = representation_from_clique_orders(g.n, result.clique_orders)
    if any(a == 0 for a, _ in rep) or intersection_graph(rep) != g:
        raise NotInterval("verification-mismatch", (), "clique layout does not reproduce the graph")
    return result.form


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        # still reject non-interval inputs rather than answering
        canonical_form(g)
        canonical_form(h)
        return False
    return canonical_form(g).bits == canonical_form(h).bits
