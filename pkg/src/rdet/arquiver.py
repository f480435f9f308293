"""Auslander-Reiten quiver of a type-A_n algebra.

Irreducible morphisms are found globally: a non-zero basis map ``X -> Y``
between non-isomorphic indecomposables is irreducible iff it is not a
non-zero composite ``X -> Z -> Y`` through a third indecomposable.  Almost
split sequences then come from the mesh at each non-projective ``N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import kernels
from .homalg import HomArrow
from .intervals import (
    IntervalModule,
    enumerate_indecomposables,
    injective,
    interval_from_dim_vector,
    is_module,
    labels,
    projective,
    farthest_vertex,
)
from .quiver import QuiverSpec

MONO = "mono"
EPI = "epi"


class ARQuiverError(RuntimeError):
    """Internal inconsistency while building the AR quiver."""


@dataclass(frozen=True)
class IrreducibleMorphism:
    arrow: HomArrow
    kind: str

    @property
    def source(self) -> IntervalModule:
        return self.arrow.source

    @property
    def target(self) -> IntervalModule:
        return self.arrow.target

    def __str__(self):
        return f"{self.arrow.source} -> {self.arrow.target} ({self.kind})"


@dataclass(frozen=True)
class AlmostSplitSeq:
    left: IntervalModule
    middle: tuple[IntervalModule, ...]
    right: IntervalModule

    def to_dict(self) -> dict:
        return {
            "left": self.left.as_list(),
            "middle": [m.as_list() for m in self.middle],
            "right": self.right.as_list(),
        }

    def __str__(self):
        mid = " + ".join(map(str, self.middle))
        return f"0 -> {self.left} -> {mid} -> {self.right} -> 0"


class ARQuiver:
    """All indecomposables, Hom/composite tables, irreducibles and meshes of one algebra."""

    def __init__(self, q: QuiverSpec):
        self.q = q
        self.modules = enumerate_indecomposables(q)
        self.index = {m: i for i, m in enumerate(self.modules)}
        self.a = np.array([m.a for m in self.modules], dtype=np.int64)
        self.b = np.array([m.b for m in self.modules], dtype=np.int64)
        right = kernels.right_mask(q.orientation, q.n)
        self.H = kernels.hom_table(self.a, self.b, right, q.n)
        self.T = kernels.composite_table(self.H, self.a, self.b)
        self.irr = kernels.irreducible_table(self.H, self.T)
        self.projectives = [projective(q, i) for i in range(1, q.n + 1)]
        self.injectives = [injective(q, i) for i in range(1, q.n + 1)]

    def hom(self, x: IntervalModule, y: IntervalModule) -> HomArrow | None:
        """Basis morphism from the Hom table (None when Hom is zero)."""
        if not self.H[self.index[x], self.index[y]]:
            return None
        return HomArrow(x, y, x.meet(y))

    @cached_property
    def irreducibles(self) -> list[IrreducibleMorphism]:
        out = []
        for i, j in zip(*np.nonzero(self.irr)):
            x, y = self.modules[i], self.modules[j]
            f = HomArrow(x, y, x.meet(y))
            if f.is_mono == f.is_epi:
                raise ARQuiverError(f"irreducible {f} is neither a proper mono nor a proper epi")
            out.append(IrreducibleMorphism(f, MONO if f.is_mono else EPI))
        return out

    def arrows_into(self, y: IntervalModule) -> list[IntervalModule]:
        j = self.index[y]
        return [self.modules[i] for i in np.flatnonzero(self.irr[:, j])]

    def arrows_out_of(self, x: IntervalModule) -> list[IntervalModule]:
        i = self.index[x]
        return [self.modules[j] for j in np.flatnonzero(self.irr[i, :])]

    @cached_property
    def sequences(self) -> list[AlmostSplitSeq]:
        n = self.q.n
        proj = set(self.projectives)
        seqs = []
        for m in self.modules:
            if m in proj:
                continue
            middle = tuple(self.arrows_into(m))
            total = sum((x.dim_vector(n) for x in middle), np.zeros(n, dtype=np.int64))
            left = interval_from_dim_vector(total - m.dim_vector(n))
            if left is None or not is_module(self.q, left):
                raise ARQuiverError(f"mesh ending at {m} has no valid left term")
            seqs.append(AlmostSplitSeq(left, middle, m))
        return seqs

    @cached_property
    def _tau(self) -> dict[IntervalModule, IntervalModule]:
        return {s.right: s.left for s in self.sequences}

    @cached_property
    def _tau_inv(self) -> dict[IntervalModule, IntervalModule]:
        return {s.left: s.right for s in self.sequences}

    def tau(self, m: IntervalModule) -> IntervalModule | None:
        return self._tau.get(m)

    def tau_inv(self, m: IntervalModule) -> IntervalModule | None:
        return self._tau_inv.get(m)

    def labels(self, m: IntervalModule) -> list[str]:
        return labels(m, self.q)


@lru_cache(maxsize=512)
def ar_quiver(q: QuiverSpec) -> ARQuiver:
    return ARQuiver(q)


def irreducible_pairs(q: QuiverSpec) -> list[IrreducibleMorphism]:
    return ar_quiver(q).irreducibles


def almost_split_sequences(q: QuiverSpec) -> list[AlmostSplitSeq]:
    return ar_quiver(q).sequences


def tau(m: IntervalModule, q: QuiverSpec) -> IntervalModule | None:
    return ar_quiver(q).tau(m)


def tau_inv(m: IntervalModule, q: QuiverSpec) -> IntervalModule | None:
    return ar_quiver(q).tau_inv(m)


def string_ass(q: QuiverSpec, i: int) -> AlmostSplitSeq:
    """The one-middle-term sequence ``0 -> M(U) -> M(N) -> M(V) -> 0`` of arrow ``i``.

    ``V`` is the longest non-zero path leaving the tail of the arrow on the far
    side from its head; ``U`` is the longest non-zero path arriving at the head
    from the far side.  Both stop at a change of orientation or where a
    relation would be completed.
    """
    if not 1 <= i <= q.n - 1:
        raise ValueError(f"arrow index {i} out of range 1..{q.n - 1}")
    tail, head = q.arrow(i)
    away = tail - head
    v_end = farthest_vertex(q, tail, away, outward=True)
    u_end = farthest_vertex(q, head, -away, outward=False)
    v = IntervalModule(min(tail, v_end), max(tail, v_end))
    u = IntervalModule(min(head, u_end), max(head, u_end))
    n_mod = IntervalModule(min(v.a, u.a), max(v.b, u.b))
    return AlmostSplitSeq(u, (n_mod,), v)


def export_dot(q: QuiverSpec) -> str:
    ar = ar_quiver(q)

    def node(m):
        return f"m{m.a}_{m.b}"

    lines = ["digraph AR {", "  rankdir=LR;", '  node [shape=box, fontname="Helvetica"];']
    for m in ar.modules:
        label = str(m)
        names = ar.labels(m)
        if names:
            label += "\\n" + " ".join(names)
        lines.append(f'  {node(m)} [label="{label}"];')
    for f in ar.irreducibles:
        style = 'color="black", arrowhead="normal"' if f.kind == MONO else 'color="blue", arrowhead="empty"'
        lines.append(f'  {node(f.source)} -> {node(f.target)} [style="solid", {style}, kind="{f.kind}"];')
    for s in ar.sequences:
        lines.append(f'  {node(s.right)} -> {node(s.left)} [style="dashed", constraint="false", label="tau"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
