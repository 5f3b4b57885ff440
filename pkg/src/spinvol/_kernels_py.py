"""Pure Python/numpy implementations of the hot kernels.

Mirrors the compiled extension `_kernels_c` function for function; selected
at import time by `spinvol.kernels` when the extension is unavailable or
SPINVOL_PURE is set.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

_RESCALE = 1e250


def cm_v2_grid(g1sq, g2sq, u13, u14, u23, u24):
    """Squared tetrahedron volume over a grid of two squared edge lengths.

    g1sq runs over the AB^2 axis (rows), g2sq over CD^2 (columns); the four
    remaining squared edges AC^2=u13, AD^2=u14, BC^2=u23, BD^2=u24 are fixed.
    Returns V^2 = P/144 with P the bordered-determinant polynomial.
    """
    u12 = np.asarray(g1sq, dtype=float)[:, None]
    u34 = np.asarray(g2sq, dtype=float)[None, :]
    p = (u12 * u34 * (u13 + u14 + u23 + u24 - u12 - u34)
         + u13 * u24 * (u12 + u14 + u23 + u34 - u13 - u24)
         + u14 * u23 * (u12 + u13 + u24 + u34 - u14 - u23)
         - u12 * u13 * u23 - u12 * u14 * u24
         - u13 * u14 * u34 - u23 * u24 * u34)
    return p / 144.0


def cm_dv2_du12_grid(g1sq, g2sq, u13, u14, u23, u24):
    """d(V^2)/d(AB^2) over the same grid layout as cm_v2_grid."""
    u12 = np.asarray(g1sq, dtype=float)[:, None]
    u34 = np.asarray(g2sq, dtype=float)[None, :]
    dp = (u34 * (u13 + u14 + u23 + u24 - 2.0 * u12 - u34)
          + u13 * u24 + u14 * u23 - u13 * u23 - u14 * u24)
    return dp / 144.0


def cm_v2_point(u12, u13, u14, u23, u24, u34):
    """Scalar V^2 from the six squared edge lengths."""
    p = (u12 * u34 * (u13 + u14 + u23 + u24 - u12 - u34)
         + u13 * u24 * (u12 + u14 + u23 + u34 - u13 - u24)
         + u14 * u23 * (u12 + u13 + u24 + u34 - u14 - u23)
         - u12 * u13 * u23 - u12 * u14 * u24
         - u13 * u14 * u34 - u23 * u24 * u34)
    return p / 144.0


def cm_dv2_du12_point(u12, u13, u14, u23, u24, u34):
    dp = (u34 * (u13 + u14 + u23 + u24 - 2.0 * u12 - u34)
          + u13 * u24 + u14 * u23 - u13 * u23 - u14 * u24)
    return dp / 144.0


def sweep_recurrence(E, F, x, seed_ratio):
    """Two-sided three-term recurrence for the 6j sweep.

    E, F are the recurrence coefficient arrays over the n admissible values
    x; seed_ratio is f(x_lo+1)/f(x_lo).  Returns (f, top_sign): f spliced at
    the backward pass's maximum and scaled to f[m] = 1, top_sign the sign of
    the (possibly underflowed) last entry.
    """
    E = np.asarray(E, dtype=float)
    F = np.asarray(F, dtype=float)
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    fwd = np.zeros(n)
    fwd[0] = 1.0
    fwd[1] = seed_ratio
    for k in range(1, n - 1):
        fwd[k + 1] = -(F[k] * fwd[k] + (x[k] + 1.0) * E[k] * fwd[k - 1]) \
            / (x[k] * E[k + 1])
        if abs(fwd[k + 1]) > _RESCALE:
            fwd[: k + 2] /= _RESCALE
    bwd = np.zeros(n)
    bwd[n - 1] = 1.0
    bwd[n - 2] = -F[n - 1] / ((x[n - 1] + 1.0) * E[n - 1])
    for k in range(n - 2, 0, -1):
        bwd[k - 1] = -(x[k] * E[k + 1] * bwd[k + 1] + F[k] * bwd[k]) \
            / ((x[k] + 1.0) * E[k])
        if abs(bwd[k - 1]) > _RESCALE:
            bwd[k - 1:] /= _RESCALE
    m = int(np.argmax(np.abs(bwd)))
    if fwd[m] == 0.0 or not np.isfinite(fwd[m]):
        m = int(np.argmax(np.abs(fwd)))
    if bwd[m] == 0.0 or not np.isfinite(bwd[m]):
        out = fwd / fwd[m]
        return out, (1.0 if out[n - 1] > 0 else -1.0)
    out = np.empty(n)
    out[: m + 1] = fwd[: m + 1] / fwd[m]
    out[m:] = bwd[m:] / bwd[m]
    top_sign = 1.0 if bwd[m] > 0 else -1.0
    return out, top_sign


def marching_squares(field, level, ax1, ax2):
    """Level-set segments of a scalar field sampled on a rectilinear grid.

    field[i, j] is the sample at (ax1[i], ax2[j]).  Returns (points, keys):
    points is an (nseg, 2, 2) float array of segment endpoints in (ax1, ax2)
    coordinates, keys an (nseg, 2, 3) int array identifying the grid edge
    each endpoint lies on, for exact stitching (orientation, i, j) with
    orientation 0 = edge (i,j)-(i+1,j) and 1 = edge (i,j)-(i,j+1).
    """
    f = np.asarray(field, dtype=float) - level
    ax1 = np.asarray(ax1, dtype=float)
    ax2 = np.asarray(ax2, dtype=float)
    inside = f > 0.0
    pts = []
    keys = []
    # cells where at least one corner differs from corner (i, j)
    cells = np.argwhere(
        (inside[:-1, :-1] != inside[1:, :-1])
        | (inside[:-1, :-1] != inside[1:, 1:])
        | (inside[:-1, :-1] != inside[:-1, 1:]))
    for ci, cj in cells:
        i, j = int(ci), int(cj)
        code = (int(inside[i, j]) | int(inside[i + 1, j]) << 1
                | int(inside[i + 1, j + 1]) << 2 | int(inside[i, j + 1]) << 3)
        if code in (0, 15):
            continue
        if code in (5, 10):
            center = 0.25 * (f[i, j] + f[i + 1, j] + f[i, j + 1] + f[i + 1, j + 1])
            segs = _MS_AMBIGUOUS[(code, bool(center > 0.0))]
        else:
            segs = _MS_TABLE[code]
        for e1, e2 in segs:
            pts.append((_ms_edge_point(f, ax1, ax2, i, j, e1),
                        _ms_edge_point(f, ax1, ax2, i, j, e2)))
            keys.append((_ms_edge_key(i, j, e1), _ms_edge_key(i, j, e2)))
    if not pts:
        return (np.zeros((0, 2, 2)), np.zeros((0, 2, 3), dtype=np.int64))
    return (np.asarray(pts, dtype=float), np.asarray(keys, dtype=np.int64))


def _ms_edge_point(f, ax1, ax2, i, j, edge):
    """Linear zero crossing on one of the cell's edges (0 bottom, 1 right,
    2 top, 3 left)."""
    if edge == 0:
        v1, v2 = f[i, j], f[i + 1, j]
        t = v1 / (v1 - v2)
        return (ax1[i] + t * (ax1[i + 1] - ax1[i]), ax2[j])
    if edge == 1:
        v1, v2 = f[i + 1, j], f[i + 1, j + 1]
        t = v1 / (v1 - v2)
        return (ax1[i + 1], ax2[j] + t * (ax2[j + 1] - ax2[j]))
    if edge == 2:
        v1, v2 = f[i, j + 1], f[i + 1, j + 1]
        t = v1 / (v1 - v2)
        return (ax1[i] + t * (ax1[i + 1] - ax1[i]), ax2[j + 1])
    v1, v2 = f[i, j], f[i, j + 1]
    t = v1 / (v1 - v2)
    return (ax1[i], ax2[j] + t * (ax2[j + 1] - ax2[j]))


def _ms_edge_key(i, j, edge):
    """Grid-global id of a cell edge: (orientation, i, j) with orientation
    0 = horizontal edge (i,j)-(i+1,j) and 1 = vertical edge (i,j)-(i,j+1)."""
    if edge == 0:
        return (0, i, j)
    if edge == 1:
        return (1, i + 1, j)
    if edge == 2:
        return (0, i, j + 1)
    return (1, i, j)


# Corner bits: 1=(i,j), 2=(i+1,j), 4=(i+1,j+1), 8=(i,j+1); edge ids as in
# _ms_edge_point.  Segment orientation is irrelevant: chains are stitched
# by edge keys afterwards.
_MS_TABLE = {
    1: ((3, 0),), 2: ((0, 1),), 3: ((3, 1),), 4: ((1, 2),),
    6: ((0, 2),), 7: ((2, 3),), 8: ((2, 3),), 9: ((0, 2),),
    11: ((1, 2),), 12: ((3, 1),), 13: ((0, 1),), 14: ((3, 0),),
}
# saddle cells: the sign of the cell-center average picks the topology
_MS_AMBIGUOUS = {
    (5, True): ((0, 1), (2, 3)),
    (5, False): ((3, 0), (1, 2)),
    (10, True): ((3, 0), (1, 2)),
    (10, False): ((0, 1), (2, 3)),
}
