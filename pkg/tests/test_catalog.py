"""Catalog layer: diagrams, per-vertex data, object construction, windows."""

from __future__ import annotations

from fractions import Fraction

import pytest

from mfcat.catalog import (
    DynkinDiagram,
    dynkin_distance,
    get_catalog,
    principal_decomposition,
)
from mfcat.gring import PolyError, ade_polynomial
from mfcat.mf import verify_grading, verify_mf

from helpers import CATALOG_SCOPE


def test_diagram_shapes_and_distances():
    dia = DynkinDiagram("E", 6, None)
    assert list(dia.vertices) == list(range(1, 7))
    assert sorted(dia.neighbors(2)) == [1, 3, 4]
    assert dynkin_distance("E6", 1, 6) == 3
    dia = DynkinDiagram("D", 6, None)
    assert sorted(dia.neighbors(4)) == [3, 5, 6]
    assert dynkin_distance("D6", 5, 6) == 2
    dia = DynkinDiagram("A", 5, 2)
    assert sorted(dia.neighbors(3)) == [2, 4]
    assert dynkin_distance("A5", 1, 5, b=2) == 4


def test_distance_is_a_tree_metric():
    for t, b in (("A6", 3), ("D7", None), ("E8", None)):
        dia = DynkinDiagram(t[0], int(t[1]), b)
        verts = dia.vertices
        for u in verts:
            assert dia.distance(u, u) == 0
            for v in verts:
                assert dia.distance(u, v) == dia.distance(v, u)
                # tree distance drops by one across some neighbor
                if u != v:
                    assert any(dia.distance(w, v) == dia.distance(u, v) - 1
                               for w in dia.neighbors(u))


def test_sigma_is_the_distance_parity_to_the_base():
    for t, b in (("A5", 1), ("A5", 4), ("D6", None), ("E7", None)):
        cat = get_catalog(t, b)
        base, pi1, pi2 = principal_decomposition(t, b)
        for k in cat.diagram.vertices:
            want = 1 if cat.diagram.distance(k, base) % 2 else 2
            assert cat.sigma(k) == want
            assert (k in pi1) == (cat.sigma(k) == 1)
            assert (k in pi2) == (cat.sigma(k) == 2)
        assert sorted(pi1 + pi2) == list(cat.diagram.vertices)
        # the two sides are independent sets of the tree
        for u, v in cat.diagram.edges:
            assert cat.sigma(u) != cat.sigma(v)


def test_every_catalog_object_verifies():
    # a broad but quick slice; the full scope runs in the acceptance gate
    for t, b in (("A1", 1), ("A5", 2), ("A8", 8), ("D4", None), ("D6", None),
                 ("E6", None), ("E8", None)):
        cat = get_catalog(t, b)
        for k in cat.diagram.vertices:
            g = cat.object(k, 0)
            assert verify_mf(g) == []
            assert verify_grading(g) == []
            assert g.r == 2 * cat.nu(k)


def test_slot_values_are_signed_pairs_on_the_phase_ray():
    for t, b in CATALOG_SCOPE[::7]:
        cat = get_catalog(t, b)
        for k in cat.diagram.vertices:
            first, second = cat.slot_values(k)
            assert len(first) == len(second) == 2 * cat.nu(k)
            assert sum(first) == 0 and sum(second) == 0
            g = cat.object(k, 0)
            ph = cat.phase(k, 0)
            assert sorted(g.S[:g.r]) == sorted(v + ph for v in first)
            assert sorted(g.S[g.r:]) == sorted(v + ph for v in second)


def test_phase_and_shift_bookkeeping():
    cat = get_catalog("E7")
    assert cat.phase(7, 0) == Fraction(cat.sigma(7), 18)
    assert cat.phase(7, 9) == cat.phase(7, 0) + 1
    g0, g9 = cat.object(7, 0), cat.object(7, 9)
    assert [s + 1 for s in g0.S] == list(g9.S)
    assert g0.phi == g9.phi and g0.psi == g9.psi


def test_objects_in_window_enumeration():
    for t, b in (("A3", 2), ("D5", None), ("E6", None)):
        cat = get_catalog(t, b)
        win = cat.objects_in_window(0, 2)
        assert len(win) == cat.l * cat.h
        assert all(0 < ph <= 2 for ph, _, _ in win)
        assert win == sorted(win)
        # each (k, n) appears once and matches its phase
        assert len({(k, n) for _, k, n in win}) == len(win)
        for ph, k, n in win:
            assert cat.phase(k, n) == ph
        # shifting the window by one phase unit shifts n by h/2 exactly
        # when h is even; in general the object count is preserved
        assert len(cat.objects_in_window(1, 3)) == len(win)


def test_unknown_types_and_vertices_are_rejected():
    with pytest.raises(PolyError):
        get_catalog("Z4")
    with pytest.raises(PolyError):
        get_catalog("A3", 7)
    with pytest.raises(PolyError):
        get_catalog("D3")
    cat = get_catalog("D5")
    with pytest.raises(PolyError):
        cat.object(6, 0)


def test_catalogs_are_cached_and_polynomials_match():
    assert get_catalog("E6") is get_catalog("E6")
    assert get_catalog("A4", 2) is get_catalog("A4", 2)
    assert get_catalog("A4", 2) is not get_catalog("A4", 3)
    for t, b in (("A4", 2), ("D5", None), ("E8", None)):
        cat = get_catalog(t, b)
        f, W = ade_polynomial(t, b)
        assert cat.f == f and cat.W == W
