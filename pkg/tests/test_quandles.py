"""Dihedral quandles, colorings, and the 3-cocycle state sum."""

from __future__ import annotations

import os

import pytest

from torusbraid.braids import word
from torusbraid.errors import PreconditionError
from torusbraid.movies import read_movie, slide_movie
from torusbraid.quandles import (
    GroupRingElement,
    Quandle,
    TriplePoint,
    boltzmann_exponent,
    braid_monodromy,
    check_quandle,
    cocycle_invariant,
    dihedral_quandle,
    mirror_chart,
    mochizuki_theta,
    torus_colorings,
    triple_points,
)

FIXTURE = os.path.join(os.path.dirname(__file__), "data", "acceptance_movie.txt")

ACCEPT_A = word(4, [1, 2, 2, 2, 3])
ACCEPT_B = word(4, [1, 2, 3]) ** 4

# Triple points of the generated movie for the coloring (0, 0, 2, 2), in
# temporal order: sign and sheet colors bottom to top at each move.
EXPECTED_TRIPLES = (
    (-1, (0, 2, 2)),
    (-1, (0, 2, 2)),
    (1, (2, 2, 0)),
    (1, (1, 1, 0)),
    (-1, (0, 1, 0)),
    (1, (0, 2, 2)),
    (1, (1, 2, 0)),
    (-1, (1, 1, 0)),
    (-1, (0, 2, 1)),
    (1, (1, 0, 2)),
    (1, (0, 1, 0)),
    (-1, (1, 2, 1)),
    (-1, (0, 0, 2)),
    (1, (2, 1, 2)),
    (1, (2, 0, 0)),
    (-1, (1, 0, 2)),
    (1, (0, 0, 2)),
    (1, (1, 1, 2)),
    (-1, (2, 0, 0)),
    (-1, (2, 0, 0)),
)


def test_dihedral_axioms():
    for p in (2, 3, 5, 7, 9):
        check_quandle(dihedral_quandle(p))  # raises on any axiom violation


def test_check_quandle_rejects_broken_table():
    # constant rows break idempotency except on the fixed element
    broken = Quandle(3, ((0, 0, 0), (0, 0, 0), (0, 0, 0)), "broken")
    with pytest.raises(PreconditionError):
        check_quandle(broken)


def test_dihedral_operation_values():
    q = dihedral_quandle(3)
    assert q.op(0, 1) == 2  # 2*1 - 0 mod 3
    assert q.op(2, 2) == 2
    assert q.op_inv(q.op(1, 2), 2) == 1


def test_monodromy_positive_and_negative():
    q = dihedral_quandle(3)
    # (u, v) -> (v, u * v) under a positive crossing
    assert braid_monodromy(word(2, [1]), q, (0, 1)) == (1, 2)
    # and the negative crossing undoes it
    assert braid_monodromy(word(2, [-1]), q, (1, 2)) == (0, 1)


def test_coloring_census_frozen():
    q = dihedral_quandle(3)
    cols = torus_colorings(ACCEPT_A, ACCEPT_B, q)
    assert cols == [
        (0, 0, 0, 0), (0, 0, 1, 1), (0, 0, 2, 2),
        (1, 1, 0, 0), (1, 1, 1, 1), (1, 1, 2, 2),
        (2, 2, 0, 0), (2, 2, 1, 1), (2, 2, 2, 2),
    ]
    constant = [v for v in cols if len(set(v)) == 1]
    assert len(constant) == 3 and len(cols) == 9


def test_coloring_requires_matching_degrees():
    q = dihedral_quandle(3)
    with pytest.raises(PreconditionError):
        torus_colorings(word(2, [1]), word(3, [1]), q)


def test_mochizuki_values():
    assert mochizuki_theta(2, 1, 2) == 1
    assert mochizuki_theta(1, 2, 0) == 0
    assert mochizuki_theta(0, 2, 1) == 1
    assert mochizuki_theta(1, 2, 1) == 1
    assert mochizuki_theta(0, 0, 0) == 0
    # degenerate whenever two adjacent arguments agree
    for x in range(3):
        for y in range(3):
            assert mochizuki_theta(x, x, y) == 0
            assert mochizuki_theta(x, y, y) == 0


def test_group_ring_algebra():
    one = GroupRingElement.monomial(0)
    t = GroupRingElement.monomial(1)
    s = one + t + t
    assert s.coeffs == (1, 2, 0)
    assert str(s) == "1 + 2t"
    assert s.conjugate().coeffs == (1, 0, 2)
    assert GroupRingElement.zero().coeffs == (0, 0, 0)
    assert GroupRingElement.monomial(5).coeffs == (0, 0, 1)  # exponents mod 3


def test_triple_points_frozen_sequence():
    q = dihedral_quandle(3)
    movie = slide_movie(ACCEPT_A, ACCEPT_B)
    tps = triple_points(movie, (0, 0, 2, 2), q)
    assert tuple((tp.sign, tp.colors) for tp in tps) == EXPECTED_TRIPLES


def test_boltzmann_exponent_distinguished_coloring():
    q = dihedral_quandle(3)
    movie = slide_movie(ACCEPT_A, ACCEPT_B)
    assert boltzmann_exponent(triple_points(movie, (0, 0, 2, 2), q)) == 2


def test_constant_colorings_contribute_zero():
    q = dihedral_quandle(3)
    movie = slide_movie(ACCEPT_A, ACCEPT_B)
    for c in range(3):
        tps = triple_points(movie, (c, c, c, c), q)
        assert boltzmann_exponent(tps) == 0


def test_cocycle_invariant_value():
    phi = cocycle_invariant(ACCEPT_A, ACCEPT_B)
    assert phi.coeffs == (3, 0, 6)
    assert str(phi) == "3 + 6t^2"


def test_cocycle_invariant_mirror():
    am, bm = mirror_chart(ACCEPT_A, ACCEPT_B)
    phi = cocycle_invariant(am, bm)
    assert phi.coeffs == (3, 6, 0)
    assert str(phi) == "3 + 6t"


def test_mirror_is_conjugate_elsewhere():
    pairs = [
        (word(3, [1]), word(3, [1, 2]) ** 3),
        (word(3, [1, 2]), word(3, [1, 2]) ** 3),
    ]
    for a, b in pairs:
        phi = cocycle_invariant(a, b)
        am, bm = mirror_chart(a, b)
        assert cocycle_invariant(am, bm) == phi.conjugate()


def test_cocycle_with_supplied_movie_matches():
    fixture = read_movie(FIXTURE)
    assert cocycle_invariant(ACCEPT_A, ACCEPT_B, movie=fixture).coeffs == (3, 0, 6)


def test_cocycle_rejects_foreign_movie():
    fixture = read_movie(FIXTURE)
    other = word(4, [1, 3])
    with pytest.raises(PreconditionError):
        cocycle_invariant(other, ACCEPT_B, movie=fixture)


def test_mirror_chart_letters():
    am, bm = mirror_chart(word(2, [1, 1]), word(2, [-1]))
    assert am == word(2, [-1, -1])
    assert bm == word(2, [1])


def test_negative_window_triples_cancel_in_pairs():
    """A negative R3 followed by its reverse contributes zero in total."""
    q = dihedral_quandle(3)
    am, bm = mirror_chart(ACCEPT_A, ACCEPT_B)
    movie = slide_movie(am, bm)
    for coloring in torus_colorings(am, bm, q):
        tps = triple_points(movie, coloring, q)
        assert len(tps) == 20
        total = boltzmann_exponent(tps)
        assert 0 <= total < 3
