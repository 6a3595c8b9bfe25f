"""The order that choosing an end clique forces on the other maximal cliques.

Given a root clique ``M`` the relation starts with ``M < C`` for every other
clique and is closed under the two propagation rules

* ``C < D`` if some ``E < D`` shares a vertex with ``C`` that ``D`` lacks;
* ``C < D`` if some ``C < E`` shares a vertex with ``D`` that ``C`` lacks.

It is asymmetric exactly when ``M`` can be the first clique of an interval
model, and then it is a strict weak order whose incomparability classes are
the places where modules sit.

Cliques are handled as vertex bitmasks and sets of clique ids as id
bitmasks, so the closure runs on plain integer operations.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .cliques import CliqueFamily
from .graph_core import Graph, VertexSet, iter_bits, mask_to_set


class Status(enum.Enum):
    WEAK_ORDER = "WeakOrder"
    ASYMMETRY_VIOLATED = "AsymmetryViolated"


class ConsistencyError(RuntimeError):
    """An invariant that holds on interval graphs failed on this input."""


class ModuleError(ConsistencyError):
    pass


@dataclass(frozen=True)
class PrecRelation:
    masks: tuple[int, ...]
    root: int
    succ: tuple[int, ...]
    pred: tuple[int, ...]
    status: Status

    @property
    def k(self) -> int:
        return len(self.masks)

    def holds(self, c: int, d: int) -> bool:
        return bool(self.succ[c] >> d & 1)

    @property
    def rel(self) -> list[list[bool]]:
        return [[self.holds(c, d) for d in range(self.k)] for c in range(self.k)]

    def pairs(self) -> set[tuple[int, int]]:
        return {(c, d) for c in range(self.k) for d in iter_bits(self.succ[c])}


@dataclass(frozen=True)
class IncomparabilityClasses:
    blocks: tuple[tuple[int, ...], ...]

    def position(self) -> dict[int, int]:
        return {c: i for i, b in enumerate(self.blocks) for c in b}


def clique_membership(masks: Sequence[int]) -> dict[int, int]:
    """Vertex -> bitmask of the clique ids containing it."""
    memb: dict[int, int] = {}
    for i, m in enumerate(masks):
        for v in iter_bits(m):
            memb[v] = memb.get(v, 0) | (1 << i)
    return memb


def closure(masks: Sequence[int], root: int, early_exit: bool = True):
    """Worklist fixed point. Returns ``(succ, pred, violated)``."""
    k = len(masks)
    memb = clique_membership(masks)
    succ = [0] * k
    pred = [0] * k
    touching: dict[int, int] = {}

    def cliques_meeting(vmask: int) -> int:
        hit = touching.get(vmask)
        if hit is None:
            hit = 0
            for v in iter_bits(vmask):
                hit |= memb[v]
            touching[vmask] = hit
        return hit

    violated = False
    work: list[tuple[int, int]] = []

    def add(c: int, d: int) -> bool:
        nonlocal violated
        succ[c] |= 1 << d
        pred[d] |= 1 << c
        work.append((c, d))
        if succ[d] >> c & 1:
            violated = True
            return early_exit
        return False

    for c in range(k):
        if c != root and add(root, c):
            return succ, pred, True

    while work:
        e, d = work.pop()
        # (e, d) plays the role of "E < D" in the first rule ...
        for c in iter_bits(cliques_meeting(masks[e] & ~masks[d]) & ~pred[d]):
            if add(c, d):
                return succ, pred, True
        # ... and of "C < E" in the second.
        for d2 in iter_bits(cliques_meeting(masks[d] & ~masks[e]) & ~succ[e]):
            if add(e, d2):
                return succ, pred, True
    return succ, pred, violated


def _check_weak_order(succ: Sequence[int], pred: Sequence[int]) -> None:
    k = len(succ)
    full = (1 << k) - 1
    for c in range(k):
        if succ[c] >> c & 1:
            raise ConsistencyError(f"relation is reflexive at clique {c}")
        for d in iter_bits(succ[c]):
            if succ[d] & ~succ[c]:
                raise ConsistencyError(f"transitivity fails through {c} < {d}")
    for c in range(k):
        inc = full & ~(succ[c] | pred[c])
        for d in iter_bits(inc):
            if full & ~(succ[d] | pred[d]) != inc:
                raise ConsistencyError(f"incomparability not transitive at {c}, {d}")


def prec_from_masks(masks: Sequence[int], root: int, early_exit: bool = True) -> PrecRelation:
    if not 0 <= root < len(masks):
        raise ValueError(f"root clique {root} out of range")
    succ, pred, violated = closure(masks, root, early_exit)
    if violated:
        status = Status.ASYMMETRY_VIOLATED
    else:
        _check_weak_order(succ, pred)
        status = Status.WEAK_ORDER
    return PrecRelation(tuple(masks), root, tuple(succ), tuple(pred), status)


def compute_prec(fam: CliqueFamily, root: int, early_exit: bool = True) -> PrecRelation:
    return prec_from_masks(fam.masks, root, early_exit)


def classify(pr: PrecRelation) -> Status:
    return pr.status


def incomparability_classes(pr: PrecRelation) -> IncomparabilityClasses:
    if pr.status is not Status.WEAK_ORDER:
        raise ValueError("incomparability classes need a weak order")
    groups: dict[int, list[int]] = {}
    for c in range(pr.k):
        groups.setdefault(pr.pred[c], []).append(c)
    # in a weak order the predecessor sets of successive blocks are nested
    ordered = sorted(groups.items(), key=lambda kv: kv[0].bit_count())
    return IncomparabilityClasses(tuple(tuple(ids) for _, ids in ordered))


def module_mask(g: Graph, masks: Sequence[int], block: Sequence[int], within: int) -> int:
    """Vertices private to ``block``, checked three ways.

    The span formula and the set-difference formula must agree, every clique
    outside the block must meet all block cliques in the same set, and the
    result must be a module of ``g[within]``.
    """
    inside = set(block)
    union_in = 0
    for c in block:
        union_in |= masks[c]
    union_out = 0
    for d, m in enumerate(masks):
        if d not in inside:
            union_out |= m
    by_difference = union_in & ~union_out

    memb = clique_membership(masks)
    by_span = 0
    for v in iter_bits(union_in):
        if memb[v].bit_count() <= len(block):
            by_span |= 1 << v
    if by_span != by_difference:
        raise ModuleError("span and set-difference descriptions of the module differ")

    for d, m in enumerate(masks):
        if d in inside:
            continue
        meets = {m & masks[c] for c in block}
        if len(meets) > 1:
            raise ModuleError(f"clique {d} meets the block cliques unevenly")

    outside_view = None
    for v in iter_bits(by_span):
        view = g.masks[v] & within & ~by_span
        if outside_view is None:
            outside_view = view
        elif view != outside_view:
            raise ModuleError("vertices of the block see the outside differently")
    return by_span


def module_vertices(g: Graph, fam: CliqueFamily, block: Sequence[int]) -> VertexSet:
    return mask_to_set(module_mask(g, fam.masks, block, (1 << g.n) - 1))
