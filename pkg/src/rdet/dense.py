"""Dense exact linear algebra over QQ for representations of the A_n line.

Independent of the interval combinatorics in :mod:`rdet.homalg`: a
representation is a dimension per vertex plus a matrix per arrow, and Hom
is the nullspace of the full commutation system.  Used for verification.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import zeros
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .intervals import IntervalModule
from .quiver import QuiverSpec


@dataclass
class Representation:
    dims: dict[int, int]
    maps: dict[tuple[int, int], object]  # (tail, head) -> sympy Matrix (head_dim x tail_dim)


def interval_representation(m: IntervalModule, q: QuiverSpec) -> Representation:
    dims = {v: (1 if v in m else 0) for v in range(1, q.n + 1)}
    maps = {}
    for u, v in q.arrows():
        mat = zeros(dims[v], dims[u])
        if dims[u] and dims[v]:
            mat[0, 0] = 1
        maps[(u, v)] = mat
    return Representation(dims, maps)


def hom_space(x: Representation, y: Representation, q: QuiverSpec) -> list[dict[int, object]]:
    """Basis of Hom(x, y) as lists of per-vertex matrices."""
    offsets, size = {}, 0
    for v in range(1, q.n + 1):
        offsets[v] = size
        size += y.dims[v] * x.dims[v]
    if size == 0:
        return []

    def idx(v, r, c):
        return offsets[v] + r * x.dims[v] + c

    rows = []
    for (u, v), xa in x.maps.items():
        ya = y.maps[(u, v)]
        # (ya * phi_u - phi_v * xa)[r, c] = 0 for r < dim y_v, c < dim x_u
        for r in range(y.dims[v]):
            for c in range(x.dims[u]):
                row = [QQ(0)] * size
                for k in range(y.dims[u]):
                    if ya[r, k]:
                        row[idx(u, k, c)] += QQ(int(ya[r, k]))
                for k in range(x.dims[v]):
                    if xa[k, c]:
                        row[idx(v, r, k)] -= QQ(int(xa[k, c]))
                rows.append(row)
    if rows:
        system = DomainMatrix(rows, (len(rows), size), QQ)
        null = system.nullspace().to_Matrix()
        vectors = [null.row(i) for i in range(null.rows)]
    else:
        vectors = [[1 if j == i else 0 for j in range(size)] for i in range(size)]
    basis = []
    for vec in vectors:
        mats = {}
        for v in range(1, q.n + 1):
            mat = zeros(y.dims[v], x.dims[v])
            for r in range(y.dims[v]):
                for c in range(x.dims[v]):
                    mat[r, c] = vec[idx(v, r, c)]
            mats[v] = mat
        basis.append(mats)
    return basis


def dense_hom(m: IntervalModule, n: IntervalModule, q: QuiverSpec):
    """(dimension, support vertices of the first basis vector) for interval modules."""
    basis = hom_space(interval_representation(m, q), interval_representation(n, q), q)
    if not basis:
        return 0, ()
    support = tuple(v for v, mat in basis[0].items() if any(e != 0 for e in mat))
    return len(basis), support
