# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors _kernels_py function for function."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

BACKEND = "compiled"

cdef double _RESCALE = 1e250


def cm_v2_grid(g1sq, g2sq, double u13, double u14, double u23, double u24):
    cdef double[::1] a1 = np.ascontiguousarray(g1sq, dtype=np.float64)
    cdef double[::1] a2 = np.ascontiguousarray(g2sq, dtype=np.float64)
    cdef Py_ssize_t n1 = a1.shape[0], n2 = a2.shape[0], i, j
    out_arr = np.empty((n1, n2), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double u12, u34, p, fixed = u13 + u14 + u23 + u24
    cdef double c1324 = u13 * u24, c1423 = u14 * u23
    cdef double c121323 = u13 * u23, c121424 = u14 * u24
    cdef double c131434 = u13 * u14, c232434 = u23 * u24
    for i in range(n1):
        u12 = a1[i]
        for j in range(n2):
            u34 = a2[j]
            p = (u12 * u34 * (fixed - u12 - u34)
                 + c1324 * (u12 + u14 + u23 + u34 - u13 - u24)
                 + c1423 * (u12 + u13 + u24 + u34 - u14 - u23)
                 - u12 * c121323 - u12 * c121424
                 - c131434 * u34 - c232434 * u34)
            out[i, j] = p / 144.0
    return out_arr


def cm_dv2_du12_grid(g1sq, g2sq, double u13, double u14, double u23, double u24):
    cdef double[::1] a1 = np.ascontiguousarray(g1sq, dtype=np.float64)
    cdef double[::1] a2 = np.ascontiguousarray(g2sq, dtype=np.float64)
    cdef Py_ssize_t n1 = a1.shape[0], n2 = a2.shape[0], i, j
    out_arr = np.empty((n1, n2), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double u12, u34, fixed = u13 + u14 + u23 + u24
    cdef double cross = u13 * u24 + u14 * u23 - u13 * u23 - u14 * u24
    for i in range(n1):
        u12 = a1[i]
        for j in range(n2):
            u34 = a2[j]
            out[i, j] = (u34 * (fixed - 2.0 * u12 - u34) + cross) / 144.0
    return out_arr


def cm_v2_point(double u12, double u13, double u14, double u23, double u24,
                double u34):
    cdef double p = (u12 * u34 * (u13 + u14 + u23 + u24 - u12 - u34)
                     + u13 * u24 * (u12 + u14 + u23 + u34 - u13 - u24)
                     + u14 * u23 * (u12 + u13 + u24 + u34 - u14 - u23)
                     - u12 * u13 * u23 - u12 * u14 * u24
                     - u13 * u14 * u34 - u23 * u24 * u34)
    return p / 144.0


def cm_dv2_du12_point(double u12, double u13, double u14, double u23,
                      double u24, double u34):
    return (u34 * (u13 + u14 + u23 + u24 - 2.0 * u12 - u34)
            + u13 * u24 + u14 * u23 - u13 * u23 - u14 * u24) / 144.0


def sweep_recurrence(E, F, x, double seed_ratio):
    cdef double[::1] e = np.ascontiguousarray(E, dtype=np.float64)
    cdef double[::1] f = np.ascontiguousarray(F, dtype=np.float64)
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t n = xv.shape[0], k, m, i
    fwd_arr = np.zeros(n, dtype=np.float64)
    bwd_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] fwd = fwd_arr
    cdef double[::1] bwd = bwd_arr
    fwd[0] = 1.0
    fwd[1] = seed_ratio
    for k in range(1, n - 1):
        fwd[k + 1] = -(f[k] * fwd[k] + (xv[k] + 1.0) * e[k] * fwd[k - 1]) \
            / (xv[k] * e[k + 1])
        if fabs(fwd[k + 1]) > _RESCALE:
            for i in range(k + 2):
                fwd[i] /= _RESCALE
    bwd[n - 1] = 1.0
    bwd[n - 2] = -f[n - 1] / ((xv[n - 1] + 1.0) * e[n - 1])
    for k in range(n - 2, 0, -1):
        bwd[k - 1] = -(xv[k] * e[k + 1] * bwd[k + 1] + f[k] * bwd[k]) \
            / ((xv[k] + 1.0) * e[k])
        if fabs(bwd[k - 1]) > _RESCALE:
            for i in range(k - 1, n):
                bwd[i] /= _RESCALE
    m = 0
    for k in range(n):
        if fabs(bwd[k]) > fabs(bwd[m]):
            m = k
    if fwd[m] == 0.0 or fwd[m] != fwd[m]:
        m = 0
        for k in range(n):
            if fabs(fwd[k]) > fabs(fwd[m]):
                m = k
    if bwd[m] == 0.0 or bwd[m] != bwd[m]:
        out0 = fwd_arr / fwd_arr[m]
        return out0, (1.0 if out0[n - 1] > 0 else -1.0)
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    for k in range(m + 1):
        out[k] = fwd[k] / fwd[m]
    for k in range(m, n):
        out[k] = bwd[k] / bwd[m]
    return out_arr, (1.0 if bwd[m] > 0 else -1.0)


# Corner bits: 1=(i,j), 2=(i+1,j), 4=(i+1,j+1), 8=(i,j+1); edges 0 bottom,
# 1 right, 2 top, 3 left (same tables as the python backend).
_MS_TABLE = {
    1: ((3, 0),), 2: ((0, 1),), 3: ((3, 1),), 4: ((1, 2),),
    6: ((0, 2),), 7: ((2, 3),), 8: ((2, 3),), 9: ((0, 2),),
    11: ((1, 2),), 12: ((3, 1),), 13: ((0, 1),), 14: ((3, 0),),
}
_MS_AMBIGUOUS = {
    (5, True): ((0, 1), (2, 3)),
    (5, False): ((3, 0), (1, 2)),
    (10, True): ((3, 0), (1, 2)),
    (10, False): ((0, 1), (2, 3)),
}


def marching_squares(field, double level, ax1, ax2):
    cdef double[:, ::1] farr = np.ascontiguousarray(field, dtype=np.float64)
    cdef double[::1] x1 = np.ascontiguousarray(ax1, dtype=np.float64)
    cdef double[::1] x2 = np.ascontiguousarray(ax2, dtype=np.float64)
    cdef Py_ssize_t n1 = farr.shape[0], n2 = farr.shape[1], i, j
    cdef int code
    cdef double v00, v10, v11, v01, center
    pts = []
    keys = []
    for i in range(n1 - 1):
        for j in range(n2 - 1):
            v00 = farr[i, j] - level
            v10 = farr[i + 1, j] - level
            v11 = farr[i + 1, j + 1] - level
            v01 = farr[i, j + 1] - level
            code = ((v00 > 0.0) | ((v10 > 0.0) << 1)
                    | ((v11 > 0.0) << 2) | ((v01 > 0.0) << 3))
            if code == 0 or code == 15:
                continue
            if code == 5 or code == 10:
                center = 0.25 * (v00 + v10 + v11 + v01)
                segs = _MS_AMBIGUOUS[(code, center > 0.0)]
            else:
                segs = _MS_TABLE[code]
            for e1, e2 in segs:
                pts.append((
                    _edge_point(v00, v10, v11, v01, x1, x2, i, j, e1),
                    _edge_point(v00, v10, v11, v01, x1, x2, i, j, e2)))
                keys.append((_edge_key(i, j, e1), _edge_key(i, j, e2)))
    if not pts:
        return (np.zeros((0, 2, 2)), np.zeros((0, 2, 3), dtype=np.int64))
    return (np.asarray(pts, dtype=np.float64), np.asarray(keys, dtype=np.int64))


cdef inline tuple _edge_point(double v00, double v10, double v11, double v01,
                              double[::1] x1, double[::1] x2,
                              Py_ssize_t i, Py_ssize_t j, int edge):
    cdef double t
    if edge == 0:
        t = v00 / (v00 - v10)
        return (x1[i] + t * (x1[i + 1] - x1[i]), x2[j])
    if edge == 1:
        t = v10 / (v10 - v11)
        return (x1[i + 1], x2[j] + t * (x2[j + 1] - x2[j]))
    if edge == 2:
        t = v01 / (v01 - v11)
        return (x1[i] + t * (x1[i + 1] - x1[i]), x2[j + 1])
    t = v00 / (v00 - v01)
    return (x1[i], x2[j] + t * (x2[j + 1] - x2[j]))


cdef inline tuple _edge_key(Py_ssize_t i, Py_ssize_t j, int edge):
    if edge == 0:
        return (0, i, j)
    if edge == 1:
        return (1, i + 1, j)
    if edge == 2:
        return (0, i, j + 1)
    return (1, i, j)
