# cython: language_level=3
"""Compiled twin of mfcat._kernel_py (exact sparse Gaussian elimination).

Same API and same algorithm as the pure-Python module; entries are arbitrary
precision Python ints, so the speedup comes from typed index loops and lean
list handling in the merge/normalize hot paths, not from machine arithmetic.
"""

from fractions import Fraction
from math import gcd


def row_from_items(items):
    acc = {}
    for c, re, im in items:
        if c in acc:
            pre, pim = acc[c]
            acc[c] = (pre + re, pim + im)
        else:
            acc[c] = (re, im)
    cols, res, ims = [], [], []
    for c in sorted(acc):
        re, im = acc[c]
        if re or im:
            cols.append(c)
            res.append(re)
            ims.append(im)
    return cols, res, ims


def row_axpy(a_re, a_im, v, b_re, b_im, p):
    cdef list vc = v[0], vr = v[1], vi = v[2]
    cdef list pc = p[0], pr = p[1], pi = p[2]
    cdef Py_ssize_t nv = len(vc), np_ = len(pc)
    cdef Py_ssize_t i = 0, j = 0
    cdef long long ci, cj
    cdef list cols = [], res = [], ims = []
    cdef object re, im
    cdef bint a_simple = (a_im == 0), b_simple = (b_im == 0)
    while i < nv and j < np_:
        ci = vc[i]
        cj = pc[j]
        if ci < cj:
            if a_simple:
                re = a_re * vr[i]
                im = a_re * vi[i]
            else:
                re = a_re * vr[i] - a_im * vi[i]
                im = a_re * vi[i] + a_im * vr[i]
            if re or im:
                cols.append(ci)
                res.append(re)
                ims.append(im)
            i += 1
        elif cj < ci:
            if b_simple:
                re = -(b_re * pr[j])
                im = -(b_re * pi[j])
            else:
                re = -(b_re * pr[j] - b_im * pi[j])
                im = -(b_re * pi[j] + b_im * pr[j])
            if re or im:
                cols.append(cj)
                res.append(re)
                ims.append(im)
            j += 1
        else:
            if a_simple:
                re = a_re * vr[i]
                im = a_re * vi[i]
            else:
                re = a_re * vr[i] - a_im * vi[i]
                im = a_re * vi[i] + a_im * vr[i]
            if b_simple:
                re = re - b_re * pr[j]
                im = im - b_re * pi[j]
            else:
                re = re - (b_re * pr[j] - b_im * pi[j])
                im = im - (b_re * pi[j] + b_im * pr[j])
            if re or im:
                cols.append(ci)
                res.append(re)
                ims.append(im)
            i += 1
            j += 1
    while i < nv:
        if a_simple:
            re = a_re * vr[i]
            im = a_re * vi[i]
        else:
            re = a_re * vr[i] - a_im * vi[i]
            im = a_re * vi[i] + a_im * vr[i]
        if re or im:
            cols.append(vc[i])
            res.append(re)
            ims.append(im)
        i += 1
    while j < np_:
        if b_simple:
            re = -(b_re * pr[j])
            im = -(b_re * pi[j])
        else:
            re = -(b_re * pr[j] - b_im * pi[j])
            im = -(b_re * pi[j] + b_im * pr[j])
        if re or im:
            cols.append(pc[j])
            res.append(re)
            ims.append(im)
        j += 1
    return cols, res, ims


def row_normalize(row):
    cdef list cols = row[0], res = row[1], ims = row[2]
    cdef Py_ssize_t n = len(cols), k
    if n == 0:
        return row
    cdef object g = 0
    for k in range(n):
        g = gcd(g, res[k])
        if g == 1:
            break
    if g != 1:
        for k in range(n):
            g = gcd(g, ims[k])
            if g == 1:
                break
    cdef list nres, nims
    if g > 1:
        nres = [x // g for x in res]
        nims = [x // g for x in ims]
    else:
        nres = res
        nims = ims
    if nres[0] < 0 or (nres[0] == 0 and nims[0] < 0):
        nres = [-x for x in nres]
        nims = [-x for x in nims]
    return cols, nres, nims


class Echelon:
    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        pivots = self.pivots
        while True:
            cols = row[0]
            if not cols:
                return row
            p = pivots.get(cols[0])
            if p is None:
                return row
            row = row_axpy(p[1][0], p[2][0], row, row[1][0], row[2][0], p)
            row = row_normalize(row)

    def insert(self, row):
        row = self.reduce(row_normalize(row))
        if not row[0]:
            return False
        self.pivots[row[0][0]] = row
        return True


def rank(rows, presort=False):
    if presort:
        rows = sorted(rows, key=lambda r: (len(r[0]), r[0], r[1], r[2]))
    ech = Echelon()
    cdef Py_ssize_t n = 0
    for row in rows:
        if ech.insert(row):
            n += 1
    return n


def _gauss_div(num_re, num_im, den_re, den_im):
    norm = den_re * den_re + den_im * den_im
    re = (num_re * den_re + num_im * den_im) / Fraction(norm)
    im = (num_im * den_re - num_re * den_im) / Fraction(norm)
    return re, im


def nullspace(rows, ncols):
    ech = Echelon()
    for row in rows:
        ech.insert(row)
    pivot_cols = sorted(ech.pivots)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    cdef Py_ssize_t idx, m
    for f in free_cols:
        vec = {f: (Fraction(1), Fraction(0))}
        for p in reversed(pivot_cols):
            if p > f:
                continue
            cols, res, ims = ech.pivots[p]
            acc_re = Fraction(0)
            acc_im = Fraction(0)
            m = len(cols)
            for idx in range(1, m):
                entry = vec.get(cols[idx])
                if entry is None:
                    continue
                xr, xi = entry
                acc_re += res[idx] * xr - ims[idx] * xi
                acc_im += res[idx] * xi + ims[idx] * xr
            if acc_re or acc_im:
                re, im = _gauss_div(-acc_re, -acc_im, res[0], ims[0])
                vec[p] = (re, im)
        basis.append(vec)
    return free_cols, basis


def select_independent(base_rows, cand_rows):
    ech = Echelon()
    for row in base_rows:
        ech.insert(row)
    chosen = []
    cdef Py_ssize_t idx = 0
    for row in cand_rows:
        if ech.insert(row):
            chosen.append(idx)
        idx += 1
    return chosen


def solve(columns, rhs, nvars=None):
    ncols = len(columns)
    by_coord = {}
    cdef Py_ssize_t idx
    for c, (cc, cr, ci) in enumerate(columns):
        for idx in range(len(cc)):
            by_coord.setdefault(cc[idx], []).append((c, cr[idx], ci[idx]))
    rc, rr, ri = rhs
    for idx in range(len(rc)):
        by_coord.setdefault(rc[idx], []).append((ncols, -rr[idx], -ri[idx]))
    rows = [row_from_items(items) for _, items in sorted(by_coord.items())]
    free_cols, basis = nullspace(rows, ncols + 1)
    for f, vec in zip(free_cols, basis):
        if f == ncols:
            return [vec.get(c, (Fraction(0), Fraction(0))) for c in range(ncols)]
    if not rc:
        return [(Fraction(0), Fraction(0))] * ncols
    return None


# A prime p ≡ 1 (mod 4), so that -1 has a square root mod p and Gaussian
# integers map into GF(p).  Ranks over GF(p) bound ranks over ℚ(i) from
# below, which turns a full-rank elimination mod p into an exact certificate.
MODP = 2013265921


def _find_imag(p):
    for g in range(2, 1000):
        t = pow(g, (p - 1) // 4, p)
        if t * t % p == p - 1:
            return t
    raise ValueError("no square root of -1 mod %d" % p)


MODP_I = _find_imag(MODP)


def rank_modp(rows, p=MODP, imag=MODP_I):
    """Rank of the row set after reduction mod p (with i ↦ imag).

    Always ≤ the rank over ℚ(i); equality is not guaranteed, so use the
    result only as a lower bound / full-rank certificate.
    """
    from bisect import insort

    cdef Py_ssize_t idx
    pivots = {}
    order = []
    rk = 0
    for cols, res, ims in rows:
        d = {}
        for idx in range(len(cols)):
            v = (res[idx] + imag * ims[idx]) % p
            if v:
                d[cols[idx]] = v
        for c in order:
            f = d.get(c)
            if not f:
                continue
            for cc, vv in pivots[c].items():
                w = (d.get(cc, 0) - f * vv) % p
                if w:
                    d[cc] = w
                elif cc in d:
                    del d[cc]
        if d:
            lead = min(d)
            inv = pow(d[lead], p - 2, p)
            pivots[lead] = {cc: vv * inv % p for cc, vv in d.items()}
            insort(order, lead)
            rk += 1
    return rk
