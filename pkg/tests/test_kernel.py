"""Linear-algebra backends: compiled and pure-Python twins must agree."""

from __future__ import annotations

import os
import subprocess
import sys
from fractions import Fraction

import pytest

from mfcat import _kernel_py as pyk
from mfcat.catalog import get_catalog
from mfcat.homcat import _System

try:
    from mfcat import _kernel as ck
except ImportError:
    ck = None

needs_compiled = pytest.mark.skipif(ck is None, reason="compiled kernel missing")


def _systems():
    """Raw sparse rows from genuine Hom systems (realistic structure)."""
    out = []
    for t, k, kp, n in (("A3", 1, 2, 0), ("D4", 1, 3, 1), ("D5", 3, 3, 0),
                        ("E6", 2, 5, 1)):
        cat = get_catalog(t)
        out.append(_System(cat.object(k, 0), cat.object(kp, n)))
    return out


def _dot(row, vec):
    """Exact <row, vec> over Q(i); vec maps col -> (Fraction, Fraction)."""
    re = Fraction(0)
    im = Fraction(0)
    cols, res, ims = row
    for idx in range(len(cols)):
        v = vec.get(cols[idx])
        if v is None:
            continue
        re += res[idx] * v[0] - ims[idx] * v[1]
        im += res[idx] * v[1] + ims[idx] * v[0]
    return re, im


def test_row_from_items_merges_and_normalizes():
    row = pyk.row_from_items([(3, 1, 0), (1, 2, -1), (3, -1, 0), (2, 0, 0)])
    assert row == ([1], [2], [-1])
    assert pyk.row_from_items([]) == ([], [], [])


def test_nullspace_vectors_annihilate_the_rows():
    for sys_ in _systems():
        rows = sys_.cocycle_rows
        free_cols, basis = pyk.nullspace(rows, sys_.nvars)
        assert len(free_cols) == len(basis)
        assert len(basis) == sys_.nvars - pyk.rank(list(rows))
        for vec in basis:
            for row in rows:
                assert _dot(row, vec) == (0, 0)


def test_select_independent_extends_a_basis():
    for sys_ in _systems():
        rows = list(sys_.boundary_rows)
        if not rows:
            continue
        chosen = pyk.select_independent([], rows)
        assert pyk.rank([rows[i] for i in chosen]) == len(chosen)
        assert pyk.rank(rows) == len(chosen)
        # nothing is independent of a spanning set
        assert pyk.select_independent(rows, rows) == []


def test_solve_reproduces_the_right_hand_side():
    for sys_ in _systems():
        cols = list(sys_.boundary_rows)
        if len(cols) < 2:
            continue
        # rhs = first column + I * second column
        items = []
        c0, r0, i0 = cols[0]
        for idx in range(len(c0)):
            items.append((c0[idx], r0[idx], i0[idx]))
        c1, r1, i1 = cols[1]
        for idx in range(len(c1)):
            items.append((c1[idx], -i1[idx], r1[idx]))
        rhs = pyk.row_from_items(items)
        sol = pyk.solve(cols, rhs)
        assert sol is not None
        # substitute back: sum_c sol_c * cols[c] must equal rhs exactly
        acc = {}
        for (re, im), (cc, cr, ci) in zip(sol, cols):
            for idx in range(len(cc)):
                ore, oim = acc.get(cc[idx], (Fraction(0), Fraction(0)))
                acc[cc[idx]] = (ore + re * cr[idx] - im * ci[idx],
                                oim + re * ci[idx] + im * cr[idx])
        want = {}
        rc, rr, ri = rhs
        for idx in range(len(rc)):
            want[rc[idx]] = (Fraction(rr[idx]), Fraction(ri[idx]))
        assert {c: v for c, v in acc.items() if v != (0, 0)} == want


def test_solve_reports_unsolvable_systems():
    cols = [pyk.row_from_items([(0, 1, 0)]), pyk.row_from_items([(0, 0, 1)])]
    rhs = pyk.row_from_items([(1, 1, 0)])
    assert pyk.solve(cols, rhs) is None


def test_modp_rank_is_a_lower_bound_and_usually_exact():
    for sys_ in _systems():
        for rows in (sys_.cocycle_rows, sys_.boundary_rows):
            exact = pyk.rank(list(rows))
            modp = pyk.rank_modp(rows)
            assert modp <= exact
            # the engine's certificate route relies on these being equal on
            # catalog systems at the shipped prime
            assert modp == exact


@needs_compiled
def test_compiled_and_pure_backends_agree():
    for sys_ in _systems():
        for rows in (sys_.cocycle_rows, sys_.boundary_rows):
            rows = list(rows)
            assert ck.rank(list(rows)) == pyk.rank(list(rows))
            assert ck.rank(list(rows), presort=True) == pyk.rank(
                list(rows), presort=True)
            assert ck.rank_modp(rows) == pyk.rank_modp(rows)
        rows = sys_.cocycle_rows
        assert ck.nullspace(rows, sys_.nvars) == pyk.nullspace(rows, sys_.nvars)
        cand = list(sys_.boundary_rows)
        assert (ck.select_independent([], cand)
                == pyk.select_independent([], cand))
    assert (ck.MODP, ck.MODP_I) == (pyk.MODP, pyk.MODP_I)


@needs_compiled
def test_backend_selector_honors_the_environment():
    code = "import mfcat.kernel as k; print(k.BACKEND)"
    env = dict(os.environ)
    env.pop("MFCAT_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True)
    assert out.stdout.strip() == "compiled"
    env["MFCAT_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True)
    assert out.stdout.strip() == "python"
