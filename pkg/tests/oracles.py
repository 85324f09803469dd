"""Independent oracles that pin expected values for the test suite.

Everything here is deliberately redundant with the package: diagrams,
Coxeter numbers, and the vertex involution are restated locally; the
Hom-degree grids are regenerated from the reflection recursion alone;
and the brute-force morphism counter assembles and solves its linear
systems densely with sympy (its own pivoting) instead of the package
kernel.  Tests compare package output against these, never the other
way around.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

import sympy


# ---------------------------------------------------------------------------
# diagrams, Coxeter numbers, vertex involution (restated locally)
# ---------------------------------------------------------------------------


def edges(letter, l):
    if letter == "A":
        return tuple((i, i + 1) for i in range(1, l))
    if letter == "D":
        return tuple((i, i + 1) for i in range(1, l - 2)) + (
            (l - 2, l - 1),
            (l - 2, l),
        )
    return {
        6: ((1, 2), (2, 3), (2, 4), (3, 5), (4, 6)),
        7: ((1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (6, 7)),
        8: ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (7, 8)),
    }[l]


def coxeter(letter, l):
    if letter == "A":
        return l + 1
    if letter == "D":
        return 2 * l - 2
    return {6: 12, 7: 18, 8: 30}[l]


def adjacency(letter, l):
    adj = {k: [] for k in range(1, l + 1)}
    for u, v in edges(letter, l):
        adj[u].append(v)
        adj[v].append(u)
    return adj


def involution(letter, l, k):
    """The vertex carrying the dual orbit (matches the grid palindromes)."""
    if letter == "A":
        return l + 1 - k
    if letter == "D":
        if l % 2 and k >= l - 1:
            return 2 * l - 1 - k
        return k
    if l == 6:
        return {1: 1, 2: 2, 3: 4, 4: 3, 5: 6, 6: 5}[k]
    return k


# ---------------------------------------------------------------------------
# reflection recursion: regenerate a full grid from delta seeds
# ---------------------------------------------------------------------------


def knit_grid(letter, l):
    """Full grid {(k, k'): ((c, mult), ...)} from the recursion alone.

    Seed m_k(0) = delta(k, k'); evolve m_k(v + 1) = sum over neighbours
    of m(v) minus m_k(v - 1) up to v = h - 2.  Every level must stay
    nonnegative and the level after h - 2 must vanish identically, or
    the recursion (hence the seed data) is inconsistent.
    """
    h = coxeter(letter, l)
    adj = adjacency(letter, l)
    verts = range(1, l + 1)
    grid = {}
    for seed in verts:
        prev = {k: 0 for k in verts}
        cur = {k: int(k == seed) for k in verts}
        hist = {k: Counter({0: 1} if k == seed else {}) for k in verts}
        for v in range(1, h):
            nxt = {}
            for k in verts:
                m = sum(cur[i] for i in adj[k]) - prev[k]
                if m < 0:
                    raise AssertionError(
                        "negative multiplicity at %s%d k=%d v=%d" % (letter, l, k, v)
                    )
                nxt[k] = m
            if v <= h - 2:
                for k in verts:
                    if nxt[k]:
                        hist[k][v] += nxt[k]
            else:
                if any(nxt.values()):
                    raise AssertionError(
                        "recursion does not terminate at %s%d seed=%d" % (letter, l, seed)
                    )
            prev, cur = cur, nxt
        for k in verts:
            grid[(seed, k)] = tuple(sorted(hist[k].items()))
    return grid


def mesh_violations(grid, letter, l):
    """Check the cone identity on a finished grid; return violation strings.

    For every pair (k', k): the union of c(k', k_i) over neighbours k_i
    of k must equal {c - 1 : c != 0} + {c + 1 : drop c = h - 2 when k is
    the dual vertex of k'} taken over c(k', k).
    """
    h = coxeter(letter, l)
    adj = adjacency(letter, l)
    bad = []
    for kp in range(1, l + 1):
        dual = involution(letter, l, kp)
        for k in range(1, l + 1):
            left = Counter()
            for ki in adj[k]:
                for c, m in grid[(kp, ki)]:
                    left[c] += m
            right = Counter()
            for c, m in grid[(kp, k)]:
                if c != 0:
                    right[c - 1] += m
                if not (c == h - 2 and k == dual):
                    right[c + 1] += m
            if left != right:
                bad.append("%s%d mesh fails at (k'=%d, k=%d)" % (letter, l, kp, k))
    return bad


# ---------------------------------------------------------------------------
# Poincare series of the Jacobi algebra (exact integer polynomial division)
# ---------------------------------------------------------------------------


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_divexact(num, den):
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        coef = num[shift + len(den) - 1]
        if coef % den[-1]:
            raise AssertionError("inexact polynomial division")
        coef //= den[-1]
        out[shift] = coef
        for i, b in enumerate(den):
            num[shift + i] -= coef * b
    if any(num):
        raise AssertionError("inexact polynomial division")
    return out


def jacobi_poincare(a, b, c, h):
    """Coefficient list of prod_i (t^(h - a_i) - 1) / (t^(a_i) - 1)."""
    num = [1]
    den = [1]
    for w in (a, b, c):
        num = _poly_mul(num, [-1] + [0] * (h - w - 1) + [1])
        den = _poly_mul(den, [-1] + [0] * (w - 1) + [1])
    return _poly_divexact(num, den)


# ---------------------------------------------------------------------------
# dense sympy morphism counter (independent assembly and pivoting)
# ---------------------------------------------------------------------------

_X, _Y, _Z = sympy.symbols("x y z")


def _to_sympy(p):
    expr = sympy.Integer(0)
    for (ex, ey, ez), g in p.terms.items():
        coef = sympy.Rational(g.re) + sympy.I * sympy.Rational(g.im)
        expr += coef * _X**ex * _Y**ey * _Z**ez
    return expr


def _monomials(weights, h, delta):
    """Exponent triples of normalized weighted degree delta (a Fraction)."""
    t = Fraction(delta) * h / 2
    if t.denominator != 1 or t < 0:
        return []
    t = int(t)
    a, b, c = weights
    out = []
    for ex in range(t // a + 1):
        for ey in range((t - a * ex) // b + 1):
            rem = t - a * ex - b * ey
            if rem % c == 0:
                out.append((ex, ey, rem // c))
    return sorted(out)


def _expr_rows(exprs, unknowns):
    """Split polynomial identities into linear rows over the unknowns."""
    rows = []
    for expr in exprs:
        poly = sympy.expand(expr).as_poly(_X, _Y, _Z, domain="EX")
        if poly is None:
            continue
        for coeff in poly.coeffs():
            rows.append(coeff)
    mat, rhs = sympy.linear_eq_to_matrix(rows, list(unknowns))
    if any(v != 0 for v in rhs):
        raise AssertionError("morphism system is not homogeneous")
    return mat


def _entry_coords(mat, slots, blk):
    """Coordinates of one block matrix on the (blk, i, j, mon) slots."""
    coords = {}
    for (b, i, j, mon), pos in slots.items():
        if b != blk:
            continue
        expr = sympy.expand(mat[i, j])
        if expr == 0:
            continue
        pdict = expr.as_poly(_X, _Y, _Z, domain="QQ_I").as_dict()
        coords[(i, j)] = pdict
    row = {}
    for (b, i, j, mon), pos in slots.items():
        if b != blk:
            continue
        row[pos] = coords.get((i, j), {}).get(mon, 0)
    leftovers = set()
    for (i, j), pdict in coords.items():
        allowed = {mon for (b, a, bb, mon) in slots if b == blk and (a, bb) == (i, j)}
        leftovers |= {m for m in pdict if m not in allowed}
    if leftovers:
        raise AssertionError("boundary leaves the degree window")
    return row


def sympy_hom_dim(src, dst, weights, h):
    """dim Hom(src, dst) by dense symbolic elimination.

    src/dst carry .r, .phi, .psi and the slot vector .S (first half the
    even slots, second half the odd slots).  weights = (a, b, c).
    """
    r = src.r
    ss, sbs = src.S[:r], src.S[r:]
    sd, sbd = dst.S[: dst.r], dst.S[dst.r :]
    svars = []
    slots = {}

    def block(blk, degrees):
        mat = sympy.Matrix(dst.r, r, lambda i, j: 0)
        for i in range(dst.r):
            for j in range(r):
                for mon in _monomials(weights, h, degrees(i, j)):
                    s = sympy.Symbol("v%d" % len(svars))
                    slots[(blk, i, j, mon)] = len(svars)
                    svars.append(s)
                    mat[i, j] += s * _X ** mon[0] * _Y ** mon[1] * _Z ** mon[2]
        return mat

    F0 = block(0, lambda i, j: sd[i] - ss[j])
    F1 = block(1, lambda i, j: sbd[i] - sbs[j])
    if not svars:
        return 0
    dst_phi = sympy.Matrix(dst.r, dst.r, lambda i, j: _to_sympy(dst.phi[i][j]))
    dst_psi = sympy.Matrix(dst.r, dst.r, lambda i, j: _to_sympy(dst.psi[i][j]))
    src_phi = sympy.Matrix(r, r, lambda i, j: _to_sympy(src.phi[i][j]))
    src_psi = sympy.Matrix(r, r, lambda i, j: _to_sympy(src.psi[i][j]))

    cocycle = list(dst_phi * F1 - F0 * src_phi) + list(dst_psi * F0 - F1 * src_psi)
    C = _expr_rows(cocycle, svars)
    nullity = len(svars) - C.rank()

    # boundary images of the two homotopy slot families
    zero = sympy.zeros(dst.r, r)
    gens = []
    for i in range(dst.r):
        for j in range(r):
            for mon in _monomials(weights, h, sd[i] - sbs[j] - 1):
                HA = zero.copy()
                HA[i, j] = _X ** mon[0] * _Y ** mon[1] * _Z ** mon[2]
                gens.append((HA, zero))
            for mon in _monomials(weights, h, sbd[i] - ss[j] - 1):
                HB = zero.copy()
                HB[i, j] = _X ** mon[0] * _Y ** mon[1] * _Z ** mon[2]
                gens.append((zero, HB))
    if not gens:
        return nullity

    rows = []
    for HA, HB in gens:
        G0 = dst_phi * HB + HA * src_psi
        G1 = dst_psi * HA + HB * src_phi
        row = dict(_entry_coords(G0, slots, 0))
        row.update(_entry_coords(G1, slots, 1))
        rows.append([row.get(pos, 0) for pos in range(len(svars))])
    B = sympy.Matrix(rows)
    return nullity - B.rank()
