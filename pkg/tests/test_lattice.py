import pytest
from hypothesis import given, settings, strategies as st

from garnier import lattice as L
from garnier.exact import rational
from garnier.lattice import X10, X21

coeff = st.integers(-6, 6)


def divisors(model):
    return st.lists(coeff, min_size=model.rank, max_size=model.rank).map(
        lambda c: L.DivisorClass(model, tuple(rational(x) for x in c)))


def curves(model):
    return st.lists(coeff, min_size=model.rank, max_size=model.rank).map(
        lambda c: L.CurveClass(model, tuple(rational(x) for x in c)))


def test_parse_compact_notation():
    D = X10.divisor("3Hq+2Hr-E{1,2,3}-2E7")
    assert [str(c) for c in D.coeffs] == ["3", "2", "-1", "-1", "-1", "0", "0", "0", "-2", "0", "0", "0"]
    assert X10.divisor("1/2Hq-E5") == X10.divisor("Hq") * rational("1/2") - X10.divisor("E5")
    assert str(X10.curve("hq-e1-e3-e5")) == "hq-e1-e3-e5"
    with pytest.raises(ValueError):
        X10.divisor("E11")


def test_pairing_is_diagonal():
    for model in (L.P2xP2, X10, X21):
        for i in range(model.rank):
            for j in range(model.rank):
                want = 0 if i != j else (1 if i < 2 else -1)
                assert L.pairing(model.basis_divisor(i), model.basis_curve(j)) == want


def test_anticanonical_classes():
    assert L.anticanonical(X10) == X10.divisor("3Hq+3Hr-E{1,2,3,4,5,6,8,10}-2E7-2E9")
    assert L.anticanonical(X21) == X21.divisor(
        "3Hq+3Hr-E{1,2,3,4,5,6,8,10,11,12,13}-2E7-2E9-3E{14,15,16,17,18,19}-2E20-2E21")


def test_cartan_matrix():
    C = L.root_datum().cartan()
    assert C[0][0] == rational("-5/2")
    for i in range(1, 6):
        assert C[i][i] == -2 and C[0][i] == 1 and C[i][0] == 1
        for j in range(1, 6):
            if i != j:
                assert C[i][j] == 0


def test_delta():
    rd = L.root_datum()
    assert rd.delta == X10.divisor("3Hq+2Hr-E{1,2,3,4,5,6,7,8,9,10}")
    assert rd.delta_check == X10.curve("2hq+2hr-e{1,2,3,4,5,6,7,8,9,10}")
    assert L.pairing(rd.delta, rd.delta_check) == 0


def test_known_table_rows():
    assert L.table_action("wk0", X10).describe() == ["Hr -> Hq+Hr-E9-E10", "E9 -> Hq-E10", "E10 -> Hq-E9"]
    assert L.table_action("s1", X10).describe() == ["E7 -> E9", "E8 -> E10", "E9 -> E7", "E10 -> E8"]
    with pytest.raises(ValueError):
        L.table_action("wa0", X10)


@pytest.mark.parametrize("model", ["X10", "X21"])
def test_table_maps_are_involutions_preserving_structure(model):
    for g in L.GENERATORS:
        if g not in L.TABLES[model]:
            continue
        m = L.table_action(g, model)
        assert m.then(m).is_identity(), g
        assert m.preserves_pairing(), g
        assert m.is_integral(), g
        assert m(L.anticanonical(model)) == L.anticanonical(model), g


def test_errata_version_is_also_an_involution():
    m = L.table_action("wa0", X21, errata=True)
    assert m.then(m).is_identity() and m.preserves_pairing()
    assert m(L.anticanonical(X21)) == L.anticanonical(X21)
    assert m != L.table_action("wa0", X21)


def test_simple_reflections_are_realized_by_generators():
    for i, g in L.REFLECTION_GENERATORS.items():
        assert L.reflection_map(i) == L.table_action(g, X10)


def test_alpha0_reflection_is_not_integral():
    D = L.reflect_alpha0_demo()
    assert any(c.denominator != 1 for c in D.coeffs)
    with pytest.raises(ValueError):
        L.reflect(0, X10.divisor("Hq"))


def test_sigma_permutes_roots():
    assert L.sigma_root_permutation(1) == {1: 2, 2: 1, 3: 3, 4: 4, 5: 5}
    for j, (x, y) in L.STATED_SIGMA_TRANSPOSITIONS.items():
        perm = L.sigma_root_permutation(j)
        assert perm[x] == y and perm[y] == x
        assert all(perm[k] == k for k in range(1, 6) if k not in (x, y))


def test_braid_orders():
    assert L.braid_report() == {"s1s2": 3, "s2s3": 3, "s3s4": 3}


def test_translation_shifts():
    assert L.root_shift_vector(1) == (-1, 2, 0, 0, 0, 0)
    assert L.root_shift_vector(0) == (5, -2, -2, -2, -2, -2)


def test_literal_alpha0_formula_breaks_the_product_identity():
    prod = L.BiLatticeMap.identity(X10)
    for i in range(1, 6):
        prod = prod.then(L.translation_map(i).inverse())
    t0 = L.translation_map(0)
    lit = L.translation_map(0, "literal")
    assert t0.then(t0) == prod
    assert lit.then(lit) != prod
    for i in range(1, 6):
        assert L.translation_map(i, "literal") == L.translation_map(i)


def test_degree_sequence_quadratic():
    seq = L.degree_sequence(L.translation_map(1), 20)
    assert seq[:6] == [9, 29, 61, 105, 161, 229]
    assert {seq[n + 2] - 2 * seq[n + 1] + seq[n] for n in range(18)} == {12}


def test_word_parsing_and_conventions():
    assert L.parse_word("w_kappa1, s4") == ["wk1", "s4"]
    assert L.parse_word(["w_kappaInf", "sigma2"]) == ["wkI", "s2"]
    with pytest.raises(ValueError):
        L.parse_word("wt3")
    a, b = L.table_action("s1", X10), L.table_action("s2", X10)
    assert L.word_action("s1,s2", X10, "right_first") == L.compose_maps([a, b], "right_first")
    assert L.word_action("s1,s2", X10, "right_first") == L.word_action("s2,s1", X10, "left_first")
    assert L.word_action("s1,s2", X10) != L.word_action("s2,s1", X10)


def test_vertical_leaves_orthogonal_to_coroots():
    rd = L.root_datum()
    for _, D in L.vertical_leaves():
        assert all(L.pairing(D, c) == 0 for c in rd.coroots)


def test_map_json_roundtrip():
    m = L.table_action("wa0", X21)
    assert L.map_from_json(m.to_json()) == m


@settings(max_examples=60, deadline=None)
@given(divisors(X10), curves(X10), st.integers(1, 5))
def test_reflection_properties(D, c, i):
    r = L.reflect(i, D)
    assert L.reflect(i, r) == D
    assert L.pairing(r, L.reflect(i, c)) == L.pairing(D, c)


@settings(max_examples=60, deadline=None)
@given(divisors(X10), st.integers(0, 5))
def test_translation_fixes_delta_and_is_linear(D, i):
    rd = L.root_datum()
    t = L.translation_map(i)
    assert t(rd.delta) == rd.delta
    assert L.kac_translate(i, D + rd.delta) == L.kac_translate(i, D) + rd.delta
    assert L.pairing(t(D), rd.delta_check) == L.pairing(D, rd.delta_check)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5))
def test_translations_commute(i, j):
    a, b = L.translation_map(i), L.translation_map(j)
    assert a.then(b) == b.then(a)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([g for g in L.GENERATORS if g != "wa0"]), min_size=1, max_size=6))
def test_word_inverse_is_reversed_word(word):
    m = L.word_action(word, X10)
    assert m.then(L.word_action(list(reversed(word)), X10)).is_identity()
    assert m.preserves_pairing()
