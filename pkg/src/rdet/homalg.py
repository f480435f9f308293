"""Morphisms between interval modules.

Hom spaces between indecomposables are at most one-dimensional, so a
non-zero morphism is stored as its support: the vertices where it acts as
the identity.  The zero morphism is ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intervals import IntervalModule, split_support
from .quiver import QuiverSpec


class HomError(ValueError):
    pass


@dataclass(frozen=True)
class HomArrow:
    source: IntervalModule
    target: IntervalModule
    support: IntervalModule

    def __post_init__(self):
        if not (self.support.issubset(self.source) and self.support.issubset(self.target)):
            raise HomError(f"support {self.support} not inside {self.source} and {self.target}")

    @property
    def is_mono(self) -> bool:
        return self.support == self.source

    @property
    def is_epi(self) -> bool:
        return self.support == self.target

    @property
    def is_iso(self) -> bool:
        return self.is_mono and self.is_epi

    def is_valid(self, q: QuiverSpec) -> bool:
        """Check that identity-on-support commutes with both representations."""
        for u, v in q.arrows():
            lam_u = 1 if u in self.support else 0
            lam_v = 1 if v in self.support else 0
            s_map = 1 if (u in self.source and v in self.source) else 0
            t_map = 1 if (u in self.target and v in self.target) else 0
            if t_map * lam_u != lam_v * s_map:
                return False
        return True

    def __str__(self):
        return f"{self.source} -> {self.target} (supp {self.support})"


def _solve(m: IntervalModule, n: IntervalModule, q: QuiverSpec) -> list[list[int]]:
    """Free classes of the vertexwise commutation system for Hom(m, n).

    One scalar unknown per vertex of ``m`` meet ``n``; each arrow ``u -> v``
    contributes ``t(u,v) * x_u = x_v * s(u,v)`` where ``s``/``t`` are the
    arrow's maps in ``m``/``n`` and ``x_w = 0`` off the overlap.
    """
    overlap = m.meet(n)
    if overlap is None:
        return []
    parent = {v: v for v in overlap.vertices()}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    killed = set()
    for u, v in q.arrows():
        s_map = u in m and v in m
        t_map = u in n and v in n
        if s_map and t_map:
            parent[find(u)] = find(v)
        elif t_map and u in overlap:
            killed.add(u)
        elif s_map and v in overlap:
            killed.add(v)
    dead = {find(v) for v in killed}
    classes: dict[int, list[int]] = {}
    for v in overlap.vertices():
        root = find(v)
        if root not in dead:
            classes.setdefault(root, []).append(v)
    return list(classes.values())


def hom_dim(m: IntervalModule, n: IntervalModule, q: QuiverSpec) -> int:
    return len(_solve(m, n, q))


def basis_hom(m: IntervalModule, n: IntervalModule, q: QuiverSpec) -> HomArrow | None:
    classes = _solve(m, n, q)
    if not classes:
        return None
    if len(classes) > 1:
        raise HomError(f"Hom({m}, {n}) has dimension {len(classes)} > 1")
    (support,) = split_support(classes[0])
    return HomArrow(m, n, support)


def identity(m: IntervalModule) -> HomArrow:
    return HomArrow(m, m, m)


def kernel(f: HomArrow, q: QuiverSpec | None = None) -> list[IntervalModule]:
    return split_support(v for v in f.source.vertices() if v not in f.support)


def cokernel(f: HomArrow, q: QuiverSpec | None = None) -> list[IntervalModule]:
    return split_support(v for v in f.target.vertices() if v not in f.support)


def image(f: HomArrow | None, q: QuiverSpec | None = None) -> IntervalModule | None:
    return None if f is None else f.support


def compose(g: HomArrow | None, f: HomArrow | None, q: QuiverSpec | None = None) -> HomArrow | None:
    """``g o f``; None stands for the zero morphism."""
    if f is None or g is None:
        return None
    if f.target != g.source:
        raise HomError(f"cannot compose {g} after {f}")
    support = f.support.meet(g.support)
    if support is None:
        return None
    return HomArrow(f.source, g.target, support)


def factors_through(fprime: HomArrow | None, f: HomArrow, q: QuiverSpec) -> bool:
    """Is there ``h`` with ``fprime = f o h``?"""
    if fprime is None:
        return True
    if fprime.target != f.target:
        raise HomError(f"targets differ: {fprime.target} vs {f.target}")
    if not fprime.support.issubset(f.support):
        return False
    h = basis_hom(fprime.source, f.source, q)
    lifted = compose(f, h, q)
    return lifted is not None and lifted.support == fprime.support
