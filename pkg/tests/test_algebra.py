"""Structure-constant algebra layer: axiom checks, Galois map, translation map, presets."""

import pytest

from duplicial.algebra import (
    BialgebraData,
    CoalgebraData,
    HopfData,
    StructureError,
    bialgebra_from_json,
    bialgebra_to_json,
    check_structure,
    galois_beta,
    group_algebra,
    make_preset,
    polynomial_dual_numbers,
    solve_antipode,
    sweedler_h4,
    translation_map,
)
from duplicial.linalg import GF, LinMap, QQ, compose, kron, rank, scalar_space


Z2 = make_preset("group_algebra:Z2")
Z3 = make_preset("group_algebra:Z3")
H4 = make_preset("sweedler_h4")
IDEM = make_preset("idempotent_monoid_algebra")
HOPF_PRESETS = [Z2, Z3, H4, make_preset("dual_group_algebra:Z3")]


class TestCheckStructure:
    def test_group_algebra_z2_fully_hopf(self):
        report = check_structure(Z2, "hopf")
        assert report.passed, str(report)
        assert Z2.antipode == LinMap.identity(Z2.space)

    def test_idempotent_monoid_is_bialgebra_not_hopf(self):
        assert check_structure(IDEM, "bialgebra").passed
        report = check_structure(IDEM, "hopf")
        assert not report.passed
        assert any("antipode exists" == item.name for item in report.failures())

    def test_zero_comult_fails_counit_with_witness(self):
        space = Z2.space
        broken = CoalgebraData(
            space,
            LinMap.zero(space, space.tensor(space)),
            LinMap.from_rows(space, scalar_space(QQ), [[1, 1]]),
        )
        report = check_structure(broken, "coalgebra")
        failures = [item for item in report.items if not item.passed]
        assert failures and all(item.witness is not None for item in failures)

    def test_all_hopf_presets_pass(self):
        for preset in HOPF_PRESETS:
            assert check_structure(preset, "hopf").passed, preset.name


class TestTranslationMap:
    def test_group_like_goes_to_g_tensor_ginv(self):
        trans = translation_map(Z3)
        n = Z3.dim
        g = Z3.basis_index("g")
        ginv = Z3.basis_index("g2")
        col = trans.column(g)
        assert col[g * n + ginv] == 1 and sum(map(bool, col)) == 1

    def test_unit_goes_to_unit_tensor_unit(self):
        trans = translation_map(Z2)
        assert trans.column(0) == (1, 0, 0, 0)

    def test_sweedler_x(self):
        trans = translation_map(H4)
        x = H4.basis_index("x")
        one, g, gx = H4.basis_index("1"), H4.basis_index("g"), H4.basis_index("gx")
        col = trans.column(x)
        # x (x) 1 - g (x) gx
        expected = {x * 4 + one: 1, g * 4 + gx: -1}
        assert {i: c for i, c in enumerate(col) if c} == expected

    def test_plus_times_minus_contracts_to_counit(self):
        # h_+ h_- = eta(eps(h)) as a matrix identity
        for preset in HOPF_PRESETS:
            trans = translation_map(preset)
            lhs = compose(preset.mult, trans)
            rhs = compose(preset.unit, preset.counit)
            assert lhs == rhs, preset.name


class TestGaloisBeta:
    def test_z2_invertible_and_sends_g_tensor_g_to_g_tensor_1(self):
        beta, ok, beta_inv = galois_beta(Z2)
        assert ok and beta_inv is not None
        g = Z2.basis_index("g")
        col = beta.column(g * 2 + g)
        assert {i: c for i, c in enumerate(col) if c} == {g * 2 + 0: 1}

    def test_unit_row_fixed(self):
        # beta(1 (x) h) = 1 (x) h since Delta(1) = 1 (x) 1
        for preset in HOPF_PRESETS:
            beta, _, _ = galois_beta(preset)
            insert = kron(preset.unit, LinMap.identity(preset.space))
            assert compose(beta, insert) == insert, preset.name

    def test_idempotent_beta_singular(self):
        beta, ok, beta_inv = galois_beta(IDEM)
        assert not ok and beta_inv is None
        assert rank(beta) < 4
        e = IDEM.basis_index("e")
        assert beta.column(e * 2 + 0) == beta.column(e * 2 + e)

    def test_invertibility_iff_antipode_solvable(self):
        for preset in HOPF_PRESETS:
            assert galois_beta(preset)[1]
            assert solve_antipode(BialgebraData(preset.algebra, preset.coalgebra)) is not None
        assert not galois_beta(IDEM)[1]
        assert solve_antipode(IDEM) is None

    def test_beta_inverse_consistent_with_translation(self):
        for preset in HOPF_PRESETS:
            _, _, beta_inv = galois_beta(preset)
            insert = kron(LinMap.identity(preset.space), preset.unit)
            assert compose(beta_inv, insert) == translation_map(preset), preset.name


class TestPresets:
    def test_z3_antipode_is_inversion_permutation(self):
        assert Z3.dim == 3
        s = Z3.antipode
        perm = {j: next(i for i in range(3) if s.entry(i, j)) for j in range(3)}
        g, g2 = Z3.basis_index("g"), Z3.basis_index("g2")
        assert perm == {0: 0, g: g2, g2: g}

    def test_sweedler_antipode_order_four_on_x(self):
        s = H4.antipode
        s2 = compose(s, s)
        assert s2 != LinMap.identity(H4.space)
        assert compose(s2, s2) == LinMap.identity(H4.space)

    def test_trivial_group_is_ground_field(self):
        triv = make_preset("group_algebra:Z1")
        assert triv.dim == 1
        assert triv.mult == LinMap.identity(triv.mult.codomain)

    def test_bad_cayley_table_names_triple(self):
        with pytest.raises(ValueError, match=r"triple \(0, 0, 1\)|no identity|not associative"):
            make_preset("group_algebra:[[0,1],[0,1]]")

    def test_explicit_table_matches_shortcut(self):
        a = make_preset("group_algebra:[[0,1],[1,0]]")
        assert a.mult == Z2.mult and a.antipode == Z2.antipode

    def test_sweedler_rejects_characteristic_two(self):
        with pytest.raises(StructureError):
            sweedler_h4(GF(2))

    def test_presets_over_prime_field(self):
        assert check_structure(group_algebra([[0, 1], [1, 0]], GF(5)), "hopf").passed
        assert check_structure(sweedler_h4(GF(7)), "hopf").passed

    def test_dual_numbers_algebra(self):
        assert check_structure(polynomial_dual_numbers(), "algebra").passed


class TestJsonFormat:
    def test_roundtrip_all_presets(self):
        for preset in HOPF_PRESETS + [IDEM]:
            doc = bialgebra_to_json(preset)
            back = bialgebra_from_json(doc)
            assert back.mult == preset.mult
            assert back.comult == preset.comult
            assert back.counit == preset.counit
            if isinstance(preset, HopfData):
                assert isinstance(back, HopfData) and back.antipode == preset.antipode

    def test_unit_is_derived_when_missing(self):
        doc = bialgebra_to_json(Z2)
        del doc["unit"]
        back = bialgebra_from_json(doc)
        assert back.unit == Z2.unit

    def test_rational_coefficients_as_strings(self):
        doc = bialgebra_to_json(Z2)
        doc["mult"][0][0] = ["1/2", 0]
        back = bialgebra_from_json(doc)
        assert back.mult.entry(0, 0) == pytest.approx(0.5)
