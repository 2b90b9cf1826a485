"""Laurent arithmetic, Alexander polynomials, and ribbon certificates."""

from __future__ import annotations

import random

import pytest

from torusbraid.braids import (
    BraidWord,
    braids_equal,
    cable_lift,
    closure_components,
    garside_delta,
    word,
)
from torusbraid.errors import PreconditionError, SearchBudgetExceeded
from torusbraid.ribbon import (
    CableDecomposition,
    Laurent,
    alexander_polynomial,
    read_witness,
    reduced_burau,
    ribbon_verdict,
    search_decomposition,
    unknot_check,
    verify_decomposition,
    write_witness,
)

TREFOIL_POLY = Laurent(((0, 1), (1, -1), (2, 1)))


def test_laurent_basics():
    one = Laurent.const(1)
    t = Laurent.t_power(1)
    p = (t - one) * (t + one)
    assert p == Laurent(((0, -1), (2, 1)))
    assert str(p) == "t^2 - 1"
    assert str(Laurent.t_power(-2, 3)) == "3t^-2"
    assert Laurent.const(0).is_zero()


def test_laurent_exact_division():
    t = Laurent.t_power(1)
    one = Laurent.const(1)
    num = one - Laurent.t_power(4)
    assert num.exact_div(one - t) == Laurent(((0, 1), (1, 1), (2, 1), (3, 1)))
    with pytest.raises(ValueError):
        (t + one).exact_div(t - one)


def test_burau_satisfies_braid_relation():
    for m in (3, 4, 5):
        lhs = reduced_burau(word(m, [1, 2, 1]))
        rhs = reduced_burau(word(m, [2, 1, 2]))
        assert lhs == rhs


def test_burau_inverse_letters():
    for m in (2, 3, 4):
        for i in range(1, m):
            assert reduced_burau(word(m, [i, -i])) == reduced_burau(BraidWord(m, ()))


def test_alexander_unknots():
    one = Laurent.const(1)
    assert alexander_polynomial(word(2, [1])) == one
    assert alexander_polynomial(word(2, [-1])) == one
    assert alexander_polynomial(word(3, [1, 2])) == one
    assert alexander_polynomial(word(4, [1, 2, 3])) == one


def test_alexander_trefoil_and_mirror():
    assert alexander_polynomial(word(2, [1, 1, 1])) == TREFOIL_POLY
    assert alexander_polynomial(word(2, [-1, -1, -1])) == TREFOIL_POLY


def test_alexander_figure_eight():
    assert alexander_polynomial(word(3, [1, -2, 1, -2])) == Laurent(
        ((0, 1), (1, -3), (2, 1))
    )


def test_alexander_rejects_links():
    with pytest.raises(PreconditionError):
        alexander_polynomial(word(2, [1, 1]))  # Hopf link closure


def test_alexander_markov_invariance():
    rng = random.Random(20240815)
    done = 0
    while done < 60:
        deg = rng.randint(2, 4)
        w = word(
            deg,
            [rng.choice([1, -1]) * rng.randint(1, deg - 1) for _ in range(rng.randint(1, 8))],
        )
        if closure_components(w) != 1:
            continue
        base = alexander_polynomial(w)
        g = word(deg, [rng.choice([1, -1]) * rng.randint(1, deg - 1)])
        assert alexander_polynomial(g * w * g.inverse()) == base
        stab = BraidWord(deg + 1, w.letters + ((deg, rng.choice([1, -1])),))
        assert alexander_polynomial(stab) == base
        done += 1


def test_alexander_is_palindromic():
    rng = random.Random(31)
    done = 0
    while done < 40:
        deg = rng.randint(2, 4)
        w = word(
            deg,
            [rng.choice([1, -1]) * rng.randint(1, deg - 1) for _ in range(rng.randint(1, 9))],
        )
        if closure_components(w) != 1:
            continue
        poly = alexander_polynomial(w)
        coeffs = dict(poly.terms)
        top = poly.max_exp()
        assert all(coeffs[e] == coeffs[top - e] for e in coeffs)
        done += 1


# ---------------------------------------------------------------------------
# unknot detection
# ---------------------------------------------------------------------------


def test_unknot_check_anchors():
    assert unknot_check(word(2, [1])).status == "Unknot"
    assert unknot_check(word(2, [-1])).status == "Unknot"
    assert unknot_check(word(3, [1, 2])).status == "Unknot"
    verdict = unknot_check(word(2, [1, 1, 1]))
    assert verdict.status == "NotUnknot"
    assert "t^2 - t + 1" in verdict.evidence


def test_unknot_check_never_rejects_stabilized_trivial():
    rng = random.Random(4)
    for _ in range(60):
        degree, letters = 1, []
        for _ in range(rng.randint(1, 6)):
            if rng.random() < 0.7 or degree == 1:
                letters.append((degree, rng.choice([1, -1])))
                degree += 1
            else:
                g = (rng.randint(1, degree - 1), rng.choice([1, -1]))
                letters = [g] + letters + [(g[0], -g[1])]
        w = BraidWord(degree, tuple(letters))
        assert unknot_check(w).status in ("Unknot", "Unknown")


def test_unknot_check_rejects_links():
    with pytest.raises(PreconditionError):
        unknot_check(word(3, [1]))


# ---------------------------------------------------------------------------
# cable decompositions
# ---------------------------------------------------------------------------


def _example_witness() -> CableDecomposition:
    return CableDecomposition(
        2, 2, word(2, [1, 1]),
        (word(2, [1, 1]), word(2, [1, 1])),
        (word(2, [1]), word(2, [1])),
    )


def test_verify_example_witness():
    assert verify_decomposition(word(4, [1, 3]), garside_delta(4) ** 2, _example_witness())


def test_verify_rejects_tampered_witness():
    w = _example_witness()
    bad = CableDecomposition(
        2, 2, w.tubular, (word(2, [1]), word(2, [1, 1])), w.vertical
    )
    assert not verify_decomposition(word(4, [1, 3]), garside_delta(4) ** 2, bad)


def test_verify_trivial_pair():
    triv = CableDecomposition(
        1, 2, BraidWord(2, ()), (BraidWord(1, ()),) * 2, (BraidWord(1, ()),) * 2
    )
    assert verify_decomposition(BraidWord(2, ()), BraidWord(2, ()), triv)


def test_verify_dimension_mismatch():
    with pytest.raises(PreconditionError):
        verify_decomposition(word(2, [1]), word(2, [1]), _example_witness())


def test_decomposition_field_validation():
    with pytest.raises(PreconditionError):
        CableDecomposition(2, 2, word(3, [1]), (word(2, []),) * 2, (word(2, []),) * 2)
    with pytest.raises(PreconditionError):
        CableDecomposition(2, 2, word(2, [1]), (word(3, [1]),) * 2, (word(2, []),) * 2)


def test_search_recovers_example_witness():
    found = search_decomposition(word(4, [1, 3]), garside_delta(4) ** 2, 2, 2)
    assert found == _example_witness()


def test_search_powers_of_half_twist():
    a = word(4, [1, 3])
    for k in (2, 3, 4):
        found = search_decomposition(a, garside_delta(4) ** k, 2, 2)
        assert found is not None
        assert found.tubular == word(2, [1] * k)
        assert verify_decomposition(a, garside_delta(4) ** k, found)


def test_search_returns_none_when_blocks_do_not_map():
    # b = sigma2 crosses the two cables without permuting them as blocks
    assert search_decomposition(word(4, [2, -2]), word(4, [2]), 2, 2) is None


def test_search_returns_none_for_non_interior_a():
    assert search_decomposition(word(4, [2, 2]), garside_delta(4) ** 2, 2, 2) is None


def test_search_budget_is_distinct():
    with pytest.raises(SearchBudgetExceeded):
        search_decomposition(
            word(4, [1, 3]), garside_delta(4) ** 2, 2, 2, state_budget=1
        )


def test_random_forward_compositions_always_verify():
    rng = random.Random(12)
    for _ in range(20):
        n, m = 2, 2
        tubular = word(m, [rng.choice([1, -1]) for _ in range(rng.randint(0, 3))] or [])
        interior = tuple(
            word(n, [rng.choice([1, -1]) for _ in range(rng.randint(0, 3))])
            for _ in range(m)
        )
        vertical = tuple(
            word(n, [rng.choice([1, -1]) for _ in range(rng.randint(0, 3))])
            for _ in range(m)
        )
        cd = CableDecomposition(n, m, tubular, interior, vertical)
        b = cable_lift(tubular, n)
        for j in range(m):
            from torusbraid.braids import iota_embed

            b = b * iota_embed(interior[j], n * j, n * (m - 1 - j))
        a = BraidWord(n * m, ())
        for j in range(m):
            from torusbraid.braids import iota_embed

            a = a * iota_embed(vertical[j], n * j, n * (m - 1 - j))
        assert verify_decomposition(a, b, cd)


# ---------------------------------------------------------------------------
# verdicts and witness files
# ---------------------------------------------------------------------------


def test_ribbon_family():
    a = word(4, [1, 3])
    for k in (2, 3, 4, 5, 6, 7):
        v = ribbon_verdict(a, garside_delta(4) ** k, 2, 2)
        assert v.status == "Ribbon"
        assert v.certificate is not None
        assert all(c.status == "Unknot" for c in v.cable_checks)
        assert verify_decomposition(a, garside_delta(4) ** k, v.certificate)


def test_ribbon_example_cable_lift():
    v = ribbon_verdict(word(4, [1, 3]), garside_delta(4) ** 2, 2, 2)
    lift = cable_lift(v.certificate.tubular, 2)
    assert braids_equal(lift, word(4, [2, 1, 3, 2, 2, 1, 3, 2]))


def test_ribbon_trivial_pair():
    v = ribbon_verdict(BraidWord(2, ()), BraidWord(2, ()), 1, 2)
    assert v.status == "Ribbon"


def test_ribbon_unknown_when_no_witness():
    v = ribbon_verdict(word(4, [2, 2]), garside_delta(4) ** 2, 2, 2)
    assert v.status == "Unknown"
    assert v.reason == "no cable decomposition found"


def test_ribbon_unknown_with_knotted_cable():
    # vertical braids are trefoils: the witness verifies but (R3) fails
    a = word(4, [1, 1, 1, 3, 3, 3])
    b = garside_delta(4) ** 2
    witness = CableDecomposition(
        2, 2, word(2, [1, 1]),
        (word(2, [1, 1]), word(2, [1, 1])),
        (word(2, [1, 1, 1]), word(2, [1, 1, 1])),
    )
    v = ribbon_verdict(a, b, 2, 2, witness)
    assert v.status == "Unknown"
    assert "not certified unknotted" in v.reason


def test_ribbon_requires_commuting():
    with pytest.raises(PreconditionError):
        ribbon_verdict(word(4, [1, 2]), word(4, [2, 3]), 2, 2)


def test_witness_round_trip(tmp_path):
    path = str(tmp_path / "witness.txt")
    write_witness(_example_witness(), path)
    back = read_witness(path)
    assert back == _example_witness()
    assert verify_decomposition(word(4, [1, 3]), garside_delta(4) ** 2, back)


def test_witness_file_rejects_missing_fields(tmp_path):
    path = str(tmp_path / "bad.txt")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("blocks 2 x 2\ntubular: 1 1\n")
    with pytest.raises(PreconditionError):
        read_witness(path)
