"""Interval modules ``[a, b]`` over A_n and their distinguished members.

Every indecomposable module of a type-A_n algebra is a thin interval
module: K at each vertex of ``a..b``, identity maps on the arrows inside,
zero elsewhere.  Over ``KQ/I`` only intervals containing no relation are
modules.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quiver import QuiverSpec


@dataclass(frozen=True, order=True)
class IntervalModule:
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b:
            raise ValueError(f"invalid interval [{self.a},{self.b}]")

    @property
    def dim(self) -> int:
        return self.b - self.a + 1

    def __contains__(self, v: int) -> bool:
        return self.a <= v <= self.b

    def vertices(self) -> range:
        return range(self.a, self.b + 1)

    def dim_vector(self, n: int) -> np.ndarray:
        d = np.zeros(n, dtype=np.int64)
        d[self.a - 1:self.b] = 1
        return d

    def meet(self, other: "IntervalModule") -> "IntervalModule | None":
        lo, hi = max(self.a, other.a), min(self.b, other.b)
        return IntervalModule(lo, hi) if lo <= hi else None

    def issubset(self, other: "IntervalModule") -> bool:
        return other.a <= self.a and self.b <= other.b

    def as_list(self) -> list[int]:
        return [self.a, self.b]

    def __str__(self):
        return f"[{self.a},{self.b}]"


def interval_from_dim_vector(d) -> IntervalModule | None:
    """The interval with 0/1 dimension vector ``d``, or None if ``d`` is not one."""
    d = np.asarray(d)
    support = np.flatnonzero(d)
    if support.size == 0 or np.any((d != 0) & (d != 1)):
        return None
    a, b = int(support[0]) + 1, int(support[-1]) + 1
    if support.size != b - a + 1:
        return None
    return IntervalModule(a, b)


def split_support(vertices) -> list[IntervalModule]:
    """Decompose a vertex set into maximal runs of consecutive vertices."""
    vs = sorted(set(vertices))
    pieces = []
    start = prev = None
    for v in vs:
        if start is None:
            start = prev = v
        elif v == prev + 1:
            prev = v
        else:
            pieces.append(IntervalModule(start, prev))
            start = prev = v
    if start is not None:
        pieces.append(IntervalModule(start, prev))
    return pieces


def is_module(q: QuiverSpec, m: IntervalModule) -> bool:
    """``[a,b]`` is a KQ/I-module iff no relation lies inside it."""
    return m.b <= q.n and not any(r.within(m.a, m.b) for r in q.relations)


def enumerate_indecomposables(q: QuiverSpec) -> list[IntervalModule]:
    return [
        IntervalModule(a, b)
        for a in range(1, q.n + 1)
        for b in range(a, q.n + 1)
        if is_module(q, IntervalModule(a, b))
    ]


def farthest_vertex(q: QuiverSpec, start: int, step: int, outward: bool) -> int:
    """Farthest vertex reached from ``start`` moving by ``step`` along
    (``outward``) or against the arrows, without completing a relation."""
    path = [start]
    v = start
    while 1 <= v + step <= q.n:
        nxt = v + step
        ok = q.has_arrow(v, nxt) if outward else q.has_arrow(nxt, v)
        if not ok:
            break
        trial = path + [nxt]
        directed = trial if outward else trial[::-1]
        if q.path_is_zero(directed):
            break
        path = trial
        v = nxt
    return v


def projective(q: QuiverSpec, i: int) -> IntervalModule:
    """P(i): the vertices reachable from ``i`` by non-zero paths."""
    return IntervalModule(farthest_vertex(q, i, -1, True), farthest_vertex(q, i, +1, True))


def injective(q: QuiverSpec, i: int) -> IntervalModule:
    """I(i): the vertices with a non-zero path into ``i``."""
    return IntervalModule(farthest_vertex(q, i, -1, False), farthest_vertex(q, i, +1, False))


def simple(q: QuiverSpec, i: int) -> IntervalModule:
    if not 1 <= i <= q.n:
        raise ValueError(f"vertex {i} out of range 1..{q.n}")
    return IntervalModule(i, i)


def radical_of_projective(q: QuiverSpec, i: int) -> list[IntervalModule]:
    p = projective(q, i)
    return split_support(v for v in p.vertices() if v != i)


def socle(m: IntervalModule, q: QuiverSpec) -> list[IntervalModule]:
    """Simples at the vertices of ``m`` with no arrow leaving them inside ``m``."""
    return [
        IntervalModule(v, v) for v in m.vertices()
        if not any(q.has_arrow(v, w) for w in (v - 1, v + 1) if w in m)
    ]


def top(m: IntervalModule, q: QuiverSpec) -> list[IntervalModule]:
    """Simples at the vertices of ``m`` with no arrow entering them inside ``m``."""
    return [
        IntervalModule(v, v) for v in m.vertices()
        if not any(q.has_arrow(w, v) for w in (v - 1, v + 1) if w in m)
    ]


def is_uniserial(m: IntervalModule, q: QuiverSpec) -> bool:
    orient = q.orientation[m.a - 1:m.b - 1]
    return len(set(orient)) <= 1


def labels(m: IntervalModule, q: QuiverSpec) -> list[str]:
    """``P(i)``/``I(i)``/``S(i)`` names that ``m`` carries."""
    out = []
    for i in range(1, q.n + 1):
        if projective(q, i) == m:
            out.append(f"P({i})")
    for i in range(1, q.n + 1):
        if injective(q, i) == m:
            out.append(f"I({i})")
    if m.a == m.b:
        out.append(f"S({m.a})")
    return out
