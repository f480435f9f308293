"""numba ``@njit`` implementations of the table kernels (same contracts as ``_numpy``)."""

import numpy as np
from numba import njit


@njit(cache=True)
def hom_table(a, b, right, n):
    N = a.shape[0]
    H = np.zeros((N, N), dtype=np.uint8)
    for i in range(N):
        for j in range(N):
            e = max(a[i], a[j])
            f = min(b[i], b[j])
            if e > f:
                continue
            ok = True
            if e >= 2:
                u = e - 1
                if a[i] <= u and a[j] > u and right[u]:
                    ok = False
                elif a[j] <= u and a[i] > u and not right[u]:
                    ok = False
            if ok and f <= n - 1:
                v = f + 1
                if b[i] >= v and b[j] < v and not right[f]:
                    ok = False
                elif b[j] >= v and b[i] < v and right[f]:
                    ok = False
            if ok:
                H[i, j] = 1
    return H


@njit(cache=True)
def composite_table(H, a, b):
    N = a.shape[0]
    T = np.zeros((N, N, N), dtype=np.bool_)
    for x in range(N):
        for z in range(N):
            if H[x, z] == 0:
                continue
            lo_xz = max(a[x], a[z])
            hi_xz = min(b[x], b[z])
            for y in range(N):
                if H[z, y] != 0 and max(lo_xz, a[y]) <= min(hi_xz, b[y]):
                    T[x, z, y] = True
    return T


@njit(cache=True)
def irreducible_table(H, T):
    N = H.shape[0]
    irr = np.zeros((N, N), dtype=np.bool_)
    for x in range(N):
        for y in range(N):
            if x == y or H[x, y] == 0:
                continue
            hit = False
            for z in range(N):
                if z != x and z != y and T[x, z, y]:
                    hit = True
                    break
            irr[x, y] = not hit
    return irr


@njit(cache=True)
def oracle_marks(H, T, x, y):
    N = H.shape[0]
    marks = np.ones(N, dtype=np.bool_)
    for c in range(N):
        lifts_c = H[c, x] != 0 and T[c, x, y]
        for xp in range(N):
            if H[xp, y] == 0:
                continue
            premise = (not T[c, xp, y]) or lifts_c
            conclusion = H[xp, x] != 0 and T[xp, x, y]
            if premise and not conclusion:
                marks[c] = False
                break
    return marks
