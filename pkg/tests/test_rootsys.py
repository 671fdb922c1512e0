import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hodgekit.numth import central_binomial_mod4
from hodgekit.rootsys import (
    NON_SELF_DUAL,
    ORTHOGONAL,
    SYMPLECTIC,
    RootSystem,
    Weight,
    admissible_factors,
    autoduality,
    dual_weight,
    fundamental_weight,
    is_minuscule,
    minuscule_weights,
    rep_dimension,
    verify_minuscule_table,
    weight_length,
    weight_root_coordinates,
)

CLASSICAL_RANGE = [("A", range(1, 11)), ("B", range(2, 11)), ("C", range(2, 11)), ("D", range(3, 11))]


def all_systems(max_rank=10):
    for kind, ranks in CLASSICAL_RANGE:
        for l in ranks:
            if l <= max_rank:
                yield RootSystem(kind, l)
    yield RootSystem("E", 6)
    yield RootSystem("E", 7)


def test_positive_root_counts():
    expected = {
        ("A", 5): 15,
        ("B", 4): 16,
        ("C", 6): 36,
        ("D", 7): 42,
        ("E", 6): 36,
        ("E", 7): 63,
    }
    for (kind, l), count in expected.items():
        assert len(RootSystem(kind, l).positive_roots) == count


def test_cartan_matrix_shapes():
    b3 = RootSystem("B", 3)
    assert b3.cartan == [[2, -1, 0], [-1, 2, -2], [0, -1, 2]]
    c3 = RootSystem("C", 3)
    assert c3.cartan == [[2, -1, 0], [-1, 2, -1], [0, -2, 2]]


def test_minuscule_sets_match_table():
    # A_l: all fundamentals; B_l: the last; C_l: the first;
    # D_l: first and the two at the fork; E6: the two ends; E7: the last.
    for rs in all_systems():
        got = {w.coords.index(1) + 1 for w in minuscule_weights(rs)}
        l = rs.rank
        if rs.kind == "A":
            expected = set(range(1, l + 1))
        elif rs.kind == "B":
            expected = {l}
        elif rs.kind == "C":
            expected = {1}
        elif rs.kind == "D":
            expected = {1, l - 1, l}
        elif l == 6:
            expected = {1, 6}
        else:
            expected = {7}
        assert got == expected, rs.name


def test_definitional_pairings_on_returned_weights():
    for rs in all_systems(max_rank=6):
        for w in minuscule_weights(rs):
            values = {rs.pair_coroot(w, beta) for beta in rs.all_roots()}
            assert values <= {-1, 0, 1}


def test_dimensions_match_closed_forms():
    for l in range(1, 11):
        rs = RootSystem("A", l)
        for j in range(1, l + 1):
            assert rep_dimension(rs, fundamental_weight(rs, j)) == math.comb(l + 1, j)
    for l in range(2, 11):
        rs = RootSystem("B", l)
        assert rep_dimension(rs, fundamental_weight(rs, l)) == 2 ** l
        rs = RootSystem("C", l)
        assert rep_dimension(rs, fundamental_weight(rs, 1)) == 2 * l
    for l in range(3, 11):
        rs = RootSystem("D", l)
        assert rep_dimension(rs, fundamental_weight(rs, 1)) == 2 * l
        assert rep_dimension(rs, fundamental_weight(rs, l)) == 2 ** (l - 1)
        assert rep_dimension(rs, fundamental_weight(rs, l - 1)) == 2 ** (l - 1)
    e6, e7 = RootSystem("E", 6), RootSystem("E", 7)
    assert rep_dimension(e6, fundamental_weight(e6, 1)) == 27
    assert rep_dimension(e7, fundamental_weight(e7, 7)) == 56


def test_trivial_representation_dimension():
    rs = RootSystem("A", 1)
    assert rep_dimension(rs, Weight((0,))) == 1


def test_adjoint_dimension_spot_check():
    # highest root of A_2: (1,1); dim of the adjoint is 8
    rs = RootSystem("A", 2)
    assert rep_dimension(rs, Weight((1, 1))) == 8


def test_autoduality_signs():
    for l in range(1, 11):
        rs = RootSystem("A", l)
        for j in range(1, l + 1):
            expected = NON_SELF_DUAL
            if l == 2 * j - 1:
                expected = ORTHOGONAL if j % 2 == 0 else SYMPLECTIC
            assert autoduality(rs, fundamental_weight(rs, j)) == expected, (l, j)
    for l in range(2, 11):
        rs = RootSystem("B", l)
        expected = ORTHOGONAL if l % 4 in (0, 3) else SYMPLECTIC
        assert autoduality(rs, fundamental_weight(rs, l)) == expected
        rs = RootSystem("C", l)
        assert autoduality(rs, fundamental_weight(rs, 1)) == SYMPLECTIC
    for l in range(3, 11):
        rs = RootSystem("D", l)
        assert autoduality(rs, fundamental_weight(rs, 1)) == ORTHOGONAL
        if l % 2 == 1:
            expected = NON_SELF_DUAL
        elif l % 4 == 0:
            expected = ORTHOGONAL
        else:
            expected = SYMPLECTIC
        assert autoduality(rs, fundamental_weight(rs, l)) == expected
    e6, e7 = RootSystem("E", 6), RootSystem("E", 7)
    assert autoduality(e6, fundamental_weight(e6, 1)) == NON_SELF_DUAL
    assert autoduality(e7, fundamental_weight(e7, 7)) == SYMPLECTIC


def test_autoduality_invariant_under_dual():
    for rs in all_systems(max_rank=6):
        for w in minuscule_weights(rs):
            assert autoduality(rs, dual_weight(rs, w)) == autoduality(rs, w)


def test_weight_length_examples():
    c4 = RootSystem("C", 4)
    assert weight_length(c4, fundamental_weight(c4, 1)) == 1
    a1 = RootSystem("A", 1)
    assert weight_length(a1, Weight((2,))) == 2
    assert weight_length(a1, Weight((0,))) == 0


def test_minuscule_length_one_for_classical():
    for rs in all_systems():
        if rs.kind == "E":
            continue
        for w in minuscule_weights(rs):
            assert weight_length(rs, w) == 1, (rs.name, w)


def test_root_coordinates_are_exact():
    a3 = RootSystem("A", 3)
    coords = weight_root_coordinates(a3, fundamental_weight(a3, 2))
    assert coords == [Fraction(1, 2), Fraction(1), Fraction(1, 2)]


def test_verify_minuscule_table_passes():
    for rs in all_systems(max_rank=6):
        assert verify_minuscule_table(rs)["ok"], rs.name


def test_admissible_factors_examples():
    # dim 6 orthogonal: only the D3 standard; the A3 middle wedge is cut
    hits = admissible_factors(6, ORTHOGONAL)
    assert [(rs.name, w.coords) for rs, w in hits] == [("D3", (1, 0, 0))]
    # dim 70 orthogonal includes the A7 middle wedge (k=3)
    hits = admissible_factors(70, ORTHOGONAL, max_rank=12)
    assert ("A7", (0, 0, 0, 1, 0, 0, 0)) in [(rs.name, w.coords) for rs, w in hits]
    assert admissible_factors(3, SYMPLECTIC) == []


def test_admissible_factors_dim2_degenerate_symplectic():
    hits = admissible_factors(2, SYMPLECTIC)
    assert [(rs.name, w.coords) for rs, w in hits] == [("C1", (1,))]


def test_admissible_factors_every_hit_is_minuscule():
    for dim, duality in [(6, ORTHOGONAL), (8, SYMPLECTIC), (10, NON_SELF_DUAL)]:
        for rs, w in admissible_factors(dim, duality, max_rank=8):
            assert is_minuscule(rs, w)
            assert rep_dimension(rs, w) == dim


def test_binomial_fact_agrees_with_numth():
    for z in range(1, 257):
        expected = 2 if z & (z - 1) == 0 else 0
        assert central_binomial_mod4(z) == expected
        assert math.comb(2 * z, z) % 4 == expected


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([("A", 4), ("B", 3), ("C", 3), ("D", 4)]),
    st.lists(st.integers(min_value=0, max_value=3), min_size=4, max_size=4),
)
def test_dual_is_involutive_on_dominant_weights(spec, coords):
    kind, rank = spec
    rs = RootSystem(kind, rank)
    w = Weight(tuple(coords[:rank]))
    assert dual_weight(rs, dual_weight(rs, w)) == w
    assert rep_dimension(rs, dual_weight(rs, w)) == rep_dimension(rs, w)


def test_non_dominant_rejected():
    rs = RootSystem("A", 2)
    with pytest.raises(ValueError):
        rep_dimension(rs, Weight((-1, 0)))
    with pytest.raises(ValueError):
        weight_length(rs, Weight((-1, 0)))
    with pytest.raises(ValueError):
        autoduality(rs, Weight((2, 0)))


def test_bad_kind_and_rank():
    with pytest.raises(ValueError):
        RootSystem("F", 4)
    with pytest.raises(ValueError):
        RootSystem("D", 2)
    with pytest.raises(ValueError):
        RootSystem("E", 8)
