"""Numba backend: fused, early-exiting scan kernels over the carrier arrays.

Layout contract (shared with the numpy backend): elements live in two
C-contiguous ``(N, k, k)`` int64 arrays holding real and imaginary entry
parts already reduced mod n.  ``red``/``roff`` give an optional lookup
table mapping ``v + roff -> v mod n`` for every intermediate sum the
k-term products can produce; ``roff < 0`` means reduce with ``%`` instead
(only very large scalar rings hit that path).
"""

from __future__ import annotations

import numpy as np
from numba import config, njit, prange

from .. import opcodes as op

NAME = "numba"

# 2-core sandboxes and CI boxes: the portable threading layer is enough
config.THREADING_LAYER = "workqueue"

_AXA_A = op.AXA_A
_XAX_X = op.XAX_X
_AX_HERM = op.AX_HERM
_XA_HERM = op.XA_HERM
_AXS_XA = op.AXS_XA
_XC2_A = op.XC2_A
_C2X_A = op.C2X_A
_AX2_X = op.AX2_X
_X2A_X = op.X2A_X
_AX_XA = op.AX_XA
_CN_CN1X = op.CN_CN1X
_XCN1_CN = op.XCN1_CN
_AXCN_A = op.AXCN_A
_AXCN_CN = op.AXCN_CN
_XA_CENTRAL = op.XA_CENTRAL
_AX_CN = op.AX_CN
_XA_CN = op.XA_CN
_X_CNXCN = op.X_CNXCN
_XAX_CN = op.XAX_CN
_X_CN = op.X_CN


@njit(cache=True, inline="always")
def _redv(v, n, red, roff):
    if roff >= 0:
        return red[v + roff]
    return v % n


@njit(cache=True, inline="always")
def _cmul(ar, ai, br, bi, outr, outi, n, red, roff):
    k = ar.shape[0]
    for i in range(k):
        for j in range(k):
            sr = 0
            si = 0
            for t in range(k):
                sr += ar[i, t] * br[t, j] - ai[i, t] * bi[t, j]
                si += ar[i, t] * bi[t, j] + ai[i, t] * br[t, j]
            outr[i, j] = _redv(sr, n, red, roff)
            outi[i, j] = _redv(si, n, red, roff)


@njit(cache=True, inline="always")
def _eq(pr, pi, qr, qi):
    k = pr.shape[0]
    for i in range(k):
        for j in range(k):
            if pr[i, j] != qr[i, j] or pi[i, j] != qi[i, j]:
                return False
    return True


@njit(cache=True, inline="always")
def _star_eq(pr, pi, qr, qi, n, conj, trans):
    # star(p) == q, star = entrywise conjugation then transpose
    k = pr.shape[0]
    for i in range(k):
        for j in range(k):
            if trans:
                vr = pr[j, i]
                vi = pi[j, i]
            else:
                vr = pr[i, j]
                vi = pi[i, j]
            if conj and vi != 0:
                vi = n - vi
            if vr != qr[i, j] or vi != qi[i, j]:
                return False
    return True


@njit(cache=True)
def _eval_heavy(code, ar, ai, a2r, a2i, cnr, cni, cn1r, cn1i,
                xr, xi, axr, axi, xar, xai, t1r, t1i, t2r, t2i,
                n, red, roff):
    if code == _AXA_A:
        _cmul(axr, axi, ar, ai, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, ar, ai)
    if code == _XAX_X:
        _cmul(xar, xai, xr, xi, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, xr, xi)
    if code == _XC2_A:
        _cmul(xr, xi, a2r, a2i, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, ar, ai)
    if code == _C2X_A:
        _cmul(a2r, a2i, xr, xi, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, ar, ai)
    if code == _AX2_X:
        _cmul(axr, axi, xr, xi, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, xr, xi)
    if code == _X2A_X:
        _cmul(xr, xi, xar, xai, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, xr, xi)
    if code == _CN_CN1X:
        _cmul(cn1r, cn1i, xr, xi, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, cnr, cni)
    if code == _XCN1_CN:
        _cmul(xr, xi, cn1r, cn1i, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, cnr, cni)
    if code == _AXCN_A:
        _cmul(axr, axi, cnr, cni, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, ar, ai)
    if code == _AXCN_CN:
        _cmul(axr, axi, cnr, cni, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, cnr, cni)
    if code == _X_CNXCN:
        _cmul(cnr, cni, xr, xi, t1r, t1i, n, red, roff)
        _cmul(t1r, t1i, cnr, cni, t2r, t2i, n, red, roff)
        return _eq(t2r, t2i, xr, xi)
    if code == _XAX_CN:
        _cmul(xar, xai, xr, xi, t1r, t1i, n, red, roff)
        return _eq(t1r, t1i, cnr, cni)
    return False


@njit(cache=True, inline="always")
def _eval_code(code, ar, ai, a2r, a2i, cnr, cni, cn1r, cn1i,
               xr, xi, axr, axi, xar, xai, t1r, t1i, t2r, t2i,
               n, B, conj, trans, red, roff, center, weights):
    # comparisons of the products every scan already holds stay inline (they
    # reject almost every candidate); anything needing another product is a
    # rare out-of-line call
    if code == _AX_HERM:
        return _star_eq(axr, axi, axr, axi, n, conj, trans)
    if code == _XA_HERM:
        return _star_eq(xar, xai, xar, xai, n, conj, trans)
    if code == _AXS_XA:
        return _star_eq(axr, axi, xar, xai, n, conj, trans)
    if code == _AX_XA:
        return _eq(axr, axi, xar, xai)
    if code == _AX_CN:
        return _eq(axr, axi, cnr, cni)
    if code == _XA_CN:
        return _eq(xar, xai, cnr, cni)
    if code == _X_CN:
        return _eq(xr, xi, cnr, cni)
    if code == _XA_CENTRAL:
        k = xar.shape[0]
        idx = 0
        for i in range(k):
            for j in range(k):
                if B != n:
                    d = xar[i, j] * n + xai[i, j]
                else:
                    d = xar[i, j]
                idx += d * weights[i * k + j]
        return center[idx] != 0
    return _eval_heavy(code, ar, ai, a2r, a2i, cnr, cni, cn1r, cn1i,
                       xr, xi, axr, axi, xar, xai, t1r, t1i, t2r, t2i,
                       n, red, roff)


@njit(cache=True, inline="always")
def _pow_weights(k, B):
    weights = np.empty(k * k, dtype=np.int64)
    w = 1
    for p in range(k * k):
        weights[p] = w
        w *= B
    return weights


@njit(cache=True, parallel=True)
def scan_systems(re, im, n, B, conj, trans, red, roff, a_idx, codes, offs,
                 cn_idx, cn1_idx, center):
    """First witness and witness count of each system for each scanned element.

    ``codes``/``offs`` pack S systems CSR-style; ``cn_idx[t]``/``cn1_idx[t]``
    optionally name per-element constants loaded into the CN/CN1 registers
    (-1: zeros).  Exponent-indexed opcodes are valid here only when the
    caller supplies the power constants through those registers.
    """
    N = re.shape[0]
    k = re.shape[1]
    A = a_idx.size
    S = offs.size - 1
    first = np.full((A, S), -1, dtype=np.int64)
    count = np.zeros((A, S), dtype=np.int64)
    weights = _pow_weights(k, B)
    for t in prange(A):
        a = a_idx[t]
        ar = re[a]
        ai = im[a]
        a2r = np.empty((k, k), dtype=np.int64)
        a2i = np.empty((k, k), dtype=np.int64)
        _cmul(ar, ai, ar, ai, a2r, a2i, n, red, roff)
        cnr = np.zeros((k, k), dtype=np.int64)
        cni = np.zeros((k, k), dtype=np.int64)
        c = cn_idx[t]
        if c >= 0:
            cr = re[c]
            ci = im[c]
            for i in range(k):
                for j in range(k):
                    cnr[i, j] = cr[i, j]
                    cni[i, j] = ci[i, j]
        cn1r = np.zeros((k, k), dtype=np.int64)
        cn1i = np.zeros((k, k), dtype=np.int64)
        c1 = cn1_idx[t]
        if c1 >= 0:
            cr1 = re[c1]
            ci1 = im[c1]
            for i in range(k):
                for j in range(k):
                    cn1r[i, j] = cr1[i, j]
                    cn1i[i, j] = ci1[i, j]
        axr = np.empty((k, k), dtype=np.int64)
        axi = np.empty((k, k), dtype=np.int64)
        xar = np.empty((k, k), dtype=np.int64)
        xai = np.empty((k, k), dtype=np.int64)
        t1r = np.empty((k, k), dtype=np.int64)
        t1i = np.empty((k, k), dtype=np.int64)
        t2r = np.empty((k, k), dtype=np.int64)
        t2i = np.empty((k, k), dtype=np.int64)
        for x in range(N):
            xr = re[x]
            xi = im[x]
            _cmul(ar, ai, xr, xi, axr, axi, n, red, roff)
            _cmul(xr, xi, ar, ai, xar, xai, n, red, roff)
            for s in range(S):
                ok = True
                for ci_ in range(offs[s], offs[s + 1]):
                    if not _eval_code(codes[ci_], ar, ai, a2r, a2i,
                                      cnr, cni, cn1r, cn1i,
                                      xr, xi, axr, axi, xar, xai,
                                      t1r, t1i, t2r, t2i,
                                      n, B, conj, trans, red, roff,
                                      center, weights):
                        ok = False
                        break
                if ok:
                    if first[t, s] < 0:
                        first[t, s] = x
                    count[t, s] += 1
    return first, count


@njit(cache=True)
def solve_mask(re, im, n, B, conj, trans, red, roff, a, codes, cnr, cni, cn1r, cn1i, center):
    """Boolean witness mask over the whole carrier for one element and system."""
    N = re.shape[0]
    k = re.shape[1]
    mask = np.zeros(N, dtype=np.bool_)
    weights = _pow_weights(k, B)
    ar = re[a]
    ai = im[a]
    a2r = np.empty((k, k), dtype=np.int64)
    a2i = np.empty((k, k), dtype=np.int64)
    _cmul(ar, ai, ar, ai, a2r, a2i, n, red, roff)
    axr = np.empty((k, k), dtype=np.int64)
    axi = np.empty((k, k), dtype=np.int64)
    xar = np.empty((k, k), dtype=np.int64)
    xai = np.empty((k, k), dtype=np.int64)
    t1r = np.empty((k, k), dtype=np.int64)
    t1i = np.empty((k, k), dtype=np.int64)
    t2r = np.empty((k, k), dtype=np.int64)
    t2i = np.empty((k, k), dtype=np.int64)
    for x in range(N):
        xr = re[x]
        xi = im[x]
        _cmul(ar, ai, xr, xi, axr, axi, n, red, roff)
        _cmul(xr, xi, ar, ai, xar, xai, n, red, roff)
        ok = True
        for ci in range(codes.size):
            if not _eval_code(codes[ci], ar, ai, a2r, a2i,
                              cnr, cni, cn1r, cn1i,
                              xr, xi, axr, axi, xar, xai,
                              t1r, t1i, t2r, t2i,
                              n, B, conj, trans, red, roff, center, weights):
                ok = False
                break
        mask[x] = ok
    return mask


@njit(cache=True)
def center_scan(re, im, n, B, conj, trans, red, roff):
    """Mask of elements commuting with the whole carrier."""
    N = re.shape[0]
    k = re.shape[1]
    out = np.zeros(N, dtype=np.uint8)
    t1r = np.empty((k, k), dtype=np.int64)
    t1i = np.empty((k, k), dtype=np.int64)
    t2r = np.empty((k, k), dtype=np.int64)
    t2i = np.empty((k, k), dtype=np.int64)
    for c in range(N):
        ok = True
        for r in range(N):
            _cmul(re[c], im[c], re[r], im[r], t1r, t1i, n, red, roff)
            _cmul(re[r], im[r], re[c], im[c], t2r, t2i, n, red, roff)
            if not _eq(t1r, t1i, t2r, t2i):
                ok = False
                break
        if ok:
            out[c] = 1
    return out


@njit(cache=True, inline="always")
def _is_one(pr, pi, n):
    k = pr.shape[0]
    one = 1 % n
    for i in range(k):
        for j in range(k):
            want = one if i == j else 0
            if pr[i, j] != want or pi[i, j] != 0:
                return False
    return True


@njit(cache=True, parallel=True)
def units_scan(re, im, n, B, conj, trans, red, roff):
    """Index of the two-sided inverse per element, -1 where none exists."""
    N = re.shape[0]
    k = re.shape[1]
    inv = np.full(N, -1, dtype=np.int64)
    for u in prange(N):
        t1r = np.empty((k, k), dtype=np.int64)
        t1i = np.empty((k, k), dtype=np.int64)
        t2r = np.empty((k, k), dtype=np.int64)
        t2i = np.empty((k, k), dtype=np.int64)
        for v in range(N):
            _cmul(re[u], im[u], re[v], im[v], t1r, t1i, n, red, roff)
            if _is_one(t1r, t1i, n):
                _cmul(re[v], im[v], re[u], im[u], t2r, t2i, n, red, roff)
                if _is_one(t2r, t2i, n):
                    inv[u] = v
                    break
    return inv
