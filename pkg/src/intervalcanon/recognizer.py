"""Interval graph recognition with a checkable certificate.

A graph is accepted only when the clique layout found during canonization,
turned into intervals of clique positions, reproduces the graph edge for
edge. The intervals are therefore a minimal interval model: point ``p`` is
the ``p``-th maximal clique.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .canonizer import NotInterval, canonize, representation_from_clique_orders
from .graph_core import Graph


@dataclass(frozen=True)
class IntervalRepresentation:
    intervals: tuple[tuple[int, int], ...]
    minimal: bool = False

    def __post_init__(self) -> None:
        for v, (a, b) in enumerate(self.intervals):
            if not 1 <= a <= b:
                raise ValueError(f"interval of vertex {v} is not [a, b] with 1 <= a <= b: {(a, b)}")

    def __len__(self) -> int:
        return len(self.intervals)

    def points(self) -> set[int]:
        return {p for a, b in self.intervals for p in range(a, b + 1)}

    def endpoints(self) -> set[int]:
        return {x for iv in self.intervals for x in iv}

    def to_text(self) -> str:
        return "".join(f"{v} {a} {b}\n" for v, (a, b) in enumerate(self.intervals))

    @classmethod
    def from_text(cls, text: str) -> IntervalRepresentation:
        found: dict[int, tuple[int, int]] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                v, a, b = (int(x) for x in line.split())
            except ValueError:
                raise ValueError(f"line {lineno}: expected 'v a b', got {line!r}") from None
            if v in found:
                raise ValueError(f"line {lineno}: vertex {v} listed twice")
            found[v] = (a, b)
        if sorted(found) != list(range(len(found))):
            raise ValueError("certificate vertices are not 0..n-1")
        return cls(tuple(found[v] for v in range(len(found))))


@dataclass(frozen=True)
class RecognitionResult:
    accepted: bool
    certificate: IntervalRepresentation | None = None
    reason: str | None = None
    detail: str = ""

    @property
    def verdict(self) -> str:
        return "accept" if self.accepted else "reject"


def verify_representation(g: Graph, rep: IntervalRepresentation | Sequence[tuple[int, int]]) -> bool:
    intervals = rep.intervals if isinstance(rep, IntervalRepresentation) else tuple(rep)
    if len(intervals) != g.n:
        raise ValueError(f"representation covers {len(intervals)} vertices, graph has {g.n}")
    for u in range(g.n):
        au, bu = intervals[u]
        for v in range(u + 1, g.n):
            av, bv = intervals[v]
            if (max(au, av) <= min(bu, bv)) != (v in g.adj[u]):
                return False
    return True


def recognize(g: Graph) -> RecognitionResult:
    try:
        result = canonize(g)
    except NotInterval as exc:
        return RecognitionResult(False, reason=exc.reason, detail=str(exc))
    intervals = representation_from_clique_orders(g.n, result.clique_orders)
    if any(a == 0 for a, _ in intervals):
        return RecognitionResult(False, reason="verification-mismatch", detail="a vertex lies in no clique")
    rep = IntervalRepresentation(tuple(intervals), minimal=True)
    if not verify_representation(g, rep):
        return RecognitionResult(
            False, reason="verification-mismatch", detail="clique layout does not reproduce the graph"
        )
    return RecognitionResult(True, certificate=rep)
