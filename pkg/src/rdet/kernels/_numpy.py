"""Vectorised numpy implementations of the table kernels."""

import numpy as np


def hom_table(a, b, right, n):
    Ai, Aj = a[:, None], a[None, :]
    Bi, Bj = b[:, None], b[None, :]
    e = np.maximum(Ai, Aj)
    f = np.minimum(Bi, Bj)
    ok = e <= f
    # arrow between e-1 and e; right[k] means k -> k+1
    left_arrow = right[np.clip(e - 1, 0, n)]
    has_left = e >= 2
    u_in_x_only = (Ai <= e - 1) & (Aj > e - 1)
    u_in_y_only = (Aj <= e - 1) & (Ai > e - 1)
    ok &= ~(has_left & u_in_x_only & left_arrow)
    ok &= ~(has_left & u_in_y_only & ~left_arrow)
    right_arrow = right[np.clip(f, 0, n)]
    has_right = f <= n - 1
    v_in_x_only = (Bi >= f + 1) & (Bj < f + 1)
    v_in_y_only = (Bj >= f + 1) & (Bi < f + 1)
    ok &= ~(has_right & v_in_x_only & ~right_arrow)
    ok &= ~(has_right & v_in_y_only & right_arrow)
    return ok.astype(np.uint8)


def composite_table(H, a, b):
    lo = np.maximum(np.maximum(a[:, None, None], a[None, :, None]), a[None, None, :])
    hi = np.minimum(np.minimum(b[:, None, None], b[None, :, None]), b[None, None, :])
    Hb = H.astype(bool)
    return Hb[:, :, None] & Hb[None, :, :] & (lo <= hi)


def irreducible_table(H, T):
    N = H.shape[0]
    through = T.copy()
    idx = np.arange(N)
    through[idx, idx, :] = False
    through[:, idx, idx] = False
    irr = H.astype(bool) & ~through.any(axis=1)
    irr[idx, idx] = False
    return irr


def oracle_marks(H, T, x, y):
    Hb = H.astype(bool)
    # premise[c, x']: every f' o phi (phi: C -> X') factors through f
    lifts_c = Hb[:, x] & T[:, x, y]
    premise = ~T[:, :, y] | lifts_c[:, None]
    conclusion = Hb[:, x] & T[:, x, y]
    relevant = Hb[:, y]
    bad = premise & ~conclusion[None, :] & relevant[None, :]
    return ~bad.any(axis=1)
