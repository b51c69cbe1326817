"""Pure-numpy backend: broadcasting scans with progressive candidate filtering.

Semantically identical to the numba backend; selected with
``STARINV_BACKEND=numpy``.  Candidate sets shrink as each equation of a
system is applied, so later (more expensive) equations only touch
survivors of the earlier ones.
"""

from __future__ import annotations

import numpy as np

from .. import opcodes as op

NAME = "numpy"


def _bmul(ar, ai, br, bi, n):
    return (ar @ br - ai @ bi) % n, (ar @ bi + ai @ br) % n


def _star(r, i, n, conj, trans):
    if conj:
        i = (-i) % n
    if trans:
        r = r.swapaxes(-1, -2)
        i = i.swapaxes(-1, -2)
    return r, i


def _eq(pr, pi, qr, qi):
    return ((pr == qr) & (pi == qi)).all(axis=(-1, -2))


def _encode(r, i, n, B, weights):
    d = r * n + i if B != n else r
    return d.reshape(d.shape[0], -1) @ weights


def _eval_code(code, sub, ctx):
    """Boolean keep-mask over the candidate subset ``sub``."""
    (re, im, n, B, conj, trans, center, weights,
     ar, ai, a2r, a2i, cnr, cni, cn1r, cn1i, axr, axi, xar, xai) = ctx
    xr, xi = re[sub], im[sub]
    pax = axr[sub], axi[sub]
    pxa = xar[sub], xai[sub]
    if code == op.AXA_A:
        tr, ti = _bmul(*pax, ar, ai, n)
        return _eq(tr, ti, ar, ai)
    if code == op.XAX_X:
        tr, ti = _bmul(*pxa, xr, xi, n)
        return _eq(tr, ti, xr, xi)
    if code == op.AX_HERM:
        return _eq(*_star(*pax, n, conj, trans), *pax)
    if code == op.XA_HERM:
        return _eq(*_star(*pxa, n, conj, trans), *pxa)
    if code == op.AXS_XA:
        return _eq(*_star(*pax, n, conj, trans), *pxa)
    if code == op.XC2_A:
        tr, ti = _bmul(xr, xi, a2r, a2i, n)
        return _eq(tr, ti, ar, ai)
    if code == op.C2X_A:
        tr, ti = _bmul(a2r, a2i, xr, xi, n)
        return _eq(tr, ti, ar, ai)
    if code == op.AX2_X:
        tr, ti = _bmul(*pax, xr, xi, n)
        return _eq(tr, ti, xr, xi)
    if code == op.X2A_X:
        tr, ti = _bmul(xr, xi, *pxa, n)
        return _eq(tr, ti, xr, xi)
    if code == op.AX_XA:
        return _eq(*pax, *pxa)
    if code == op.CN_CN1X:
        tr, ti = _bmul(cn1r, cn1i, xr, xi, n)
        return _eq(tr, ti, cnr, cni)
    if code == op.XCN1_CN:
        tr, ti = _bmul(xr, xi, cn1r, cn1i, n)
        return _eq(tr, ti, cnr, cni)
    if code == op.AXCN_A:
        tr, ti = _bmul(*pax, cnr, cni, n)
        return _eq(tr, ti, ar, ai)
    if code == op.AXCN_CN:
        tr, ti = _bmul(*pax, cnr, cni, n)
        return _eq(tr, ti, cnr, cni)
    if code == op.XA_CENTRAL:
        return center[_encode(*pxa, n, B, weights)] != 0
    if code == op.AX_CN:
        return _eq(*pax, cnr, cni)
    if code == op.XA_CN:
        return _eq(*pxa, cnr, cni)
    if code == op.X_CNXCN:
        tr, ti = _bmul(cnr, cni, xr, xi, n)
        tr, ti = _bmul(tr, ti, cnr, cni, n)
        return _eq(tr, ti, xr, xi)
    if code == op.XAX_CN:
        tr, ti = _bmul(*pxa, xr, xi, n)
        return _eq(tr, ti, cnr, cni)
    if code == op.X_CN:
        return _eq(xr, xi, cnr, cni)
    raise ValueError(f"unknown opcode {code}")


def _weights(k, B):
    return B ** np.arange(k * k, dtype=np.int64)


def _run_system(codes, ctx, N):
    sub = np.arange(N, dtype=np.int64)
    for code in codes:
        if sub.size == 0:
            break
        sub = sub[_eval_code(int(code), sub, ctx)]
    return sub


def _make_ctx(re, im, n, B, conj, trans, center, a, cn, cn1):
    k = re.shape[1]
    ar, ai = re[a], im[a]
    a2r, a2i = _bmul(ar, ai, ar, ai, n)
    if cn is None:
        cnr = cni = np.zeros((k, k), dtype=np.int64)
    else:
        cnr, cni = cn
    if cn1 is None:
        cn1r = cn1i = np.zeros((k, k), dtype=np.int64)
    else:
        cn1r, cn1i = cn1
    axr, axi = _bmul(ar, ai, re, im, n)
    xar, xai = _bmul(re, im, ar, ai, n)
    return (re, im, n, B, conj, trans, center, _weights(k, B),
            ar, ai, a2r, a2i, cnr, cni, cn1r, cn1i, axr, axi, xar, xai)


def scan_systems(re, im, n, B, conj, trans, red, roff, a_idx, codes, offs,
                 cn_idx, cn1_idx, center):
    """First witness and witness count of each system for each scanned element."""
    N = re.shape[0]
    A = a_idx.size
    S = offs.size - 1
    first = np.full((A, S), -1, dtype=np.int64)
    count = np.zeros((A, S), dtype=np.int64)
    for t in range(A):
        a = int(a_idx[t])
        c = int(cn_idx[t])
        c1 = int(cn1_idx[t])
        cn = (re[c], im[c]) if c >= 0 else None
        cn1 = (re[c1], im[c1]) if c1 >= 0 else None
        ctx = _make_ctx(re, im, n, B, conj, trans, center, a, cn, cn1)
        for s in range(S):
            sub = _run_system(codes[offs[s]:offs[s + 1]], ctx, N)
            if sub.size:
                first[t, s] = sub[0]
                count[t, s] = sub.size
    return first, count


def solve_mask(re, im, n, B, conj, trans, red, roff, a, codes, cnr, cni, cn1r, cn1i, center):
    """Boolean witness mask over the whole carrier for one element and system."""
    N = re.shape[0]
    ctx = _make_ctx(re, im, n, B, conj, trans, center, a, (cnr, cni), (cn1r, cn1i))
    sub = _run_system(codes, ctx, N)
    mask = np.zeros(N, dtype=bool)
    mask[sub] = True
    return mask


def center_scan(re, im, n, B, conj, trans, red, roff):
    """Mask of elements commuting with the whole carrier."""
    N = re.shape[0]
    cand = np.arange(N, dtype=np.int64)
    for r in range(N):
        if cand.size == 0:
            break
        lr, li = _bmul(re[cand], im[cand], re[r], im[r], n)
        rr, ri = _bmul(re[r], im[r], re[cand], im[cand], n)
        cand = cand[_eq(lr, li, rr, ri)]
    out = np.zeros(N, dtype=np.uint8)
    out[cand] = 1
    return out


def units_scan(re, im, n, B, conj, trans, red, roff):
    """Index of the two-sided inverse per element, -1 where none exists."""
    N, k = re.shape[0], re.shape[1]
    one_r = np.eye(k, dtype=np.int64) % n
    one_i = np.zeros((k, k), dtype=np.int64)
    inv = np.full(N, -1, dtype=np.int64)
    open_ = np.arange(N, dtype=np.int64)
    for v in range(N):
        lr, li = _bmul(re[open_], im[open_], re[v], im[v], n)
        hits = open_[_eq(lr, li, one_r, one_i)]
        if hits.size:
            rr, ri = _bmul(re[v], im[v], re[hits], im[hits], n)
            hits = hits[_eq(rr, ri, one_r, one_i)]
            inv[hits] = v
            open_ = open_[inv[open_] < 0]
    return inv
