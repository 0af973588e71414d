import math

import numpy as np
import pytest

from xpoincare.algebra import (GENERATOR_NAMES, STRUCTURE_CONSTANTS,
                               GeneratorIndex as G, ad_matrix, casimir_lambda,
                               casimir_mu, commutator, exp_ad,
                               invariance_residual, jacobi_check,
                               jacobi_residual, table_from_json_obj,
                               table_to_json_obj)


def basis(i):
    v = np.zeros(15)
    v[i] = 1.0
    return v


def test_antisymmetry_exact():
    f = STRUCTURE_CONSTANTS.dense
    assert np.abs(f + np.swapaxes(f, 0, 1)).max() == 0


def test_values_are_small_integers():
    vals = set(np.unique(STRUCTURE_CONSTANTS.dense))
    assert vals <= {-1, 0, 1}


@pytest.mark.parametrize("a,b,expect", [
    (G.J1, G.J2, {G.J3: 1.0}),
    (G.GAM0, G.GAM1, {G.K1: 1.0}),
    (G.GAM1, G.P1, {G.GS: -1.0}),
    (G.P0, G.P2, {}),
    (G.K1, G.P0, {G.P1: -1.0}),
    (G.GAM0, G.GS, {G.P0: 1.0}),   # -eta^{00} = +1, mostly-plus metric
    (G.GAM2, G.GS, {G.P2: -1.0}),
])
def test_commutator_table_entries(a, b, expect):
    z = commutator(basis(a), basis(b))
    want = np.zeros(15)
    for c, v in expect.items():
        want[c] = v
    assert np.array_equal(z, want)


def test_commutator_bilinear_antisymmetric():
    rng = np.random.default_rng(0)
    x, y = rng.integers(-3, 4, size=15), rng.integers(-3, 4, size=15)
    assert np.array_equal(commutator(x, y), -commutator(y, x))
    z = rng.integers(-3, 4, size=15)
    assert np.array_equal(commutator(x + 2 * z, y),
                          commutator(x, y) + 2 * commutator(z, y))


def test_extended_translations_commute():
    assert np.abs(STRUCTURE_CONSTANTS.dense[10:, 10:, :]).max() == 0


def test_jacobi_identity_exact():
    rep = jacobi_check()
    assert rep.max_violation == 0
    assert rep.violations == []


def test_jacobi_degenerate_triple_is_zero():
    assert np.abs(jacobi_residual(G.J1, G.J1, G.K2)).max() == 0


def test_jacobi_detects_mutated_table():
    obj = table_to_json_obj()
    for row in obj["entries"]:
        if (row["a"], row["b"], row["c"]) == ("J1", "J2", "J3"):
            row["f"] = -1
    rep = jacobi_check(table_from_json_obj(obj))
    assert rep.max_violation > 0
    triples = {v[:3] for v in rep.violations}
    assert ("J1", "J2", "K1") in triples
    # the violating component sits in the K sector
    comp = {v[3] for v in rep.violations if v[:3] == ("J1", "J2", "K1")}
    assert comp <= {"K1", "K2", "K3"}


def test_ad_matrix_p0_pattern():
    # Gam rows couple into the Gs column; K rows carry the boost action on P
    F = ad_matrix(G.P0)
    assert F[G.GAM0, G.GS] == 1.0
    assert all(F[G.K1 + j, G.P1 + j] == 1.0 for j in range(3))
    mask = np.zeros((15, 15), dtype=bool)
    mask[G.GAM0, G.GS] = True
    for j in range(3):
        mask[G.K1 + j, G.P1 + j] = True
    assert np.abs(F[~mask]).max() == 0


def test_ad_matrix_gs_couples_gam_rows_to_p():
    F = ad_matrix(G.GS)
    nz = np.argwhere(F != 0)
    assert len(nz) > 0
    for r, s in nz:
        assert 6 <= r <= 9 and 10 <= s <= 13


def test_ad_matrix_j3_rotates_pairs():
    F = ad_matrix(G.J3)
    for i, j in [(G.J1, G.J2), (G.K1, G.K2), (G.GAM1, G.GAM2), (G.P1, G.P2)]:
        assert F[i, j] == 1.0 and F[j, i] == -1.0
    mask = np.zeros((15, 15), dtype=bool)
    for i, j in [(G.J1, G.J2), (G.K1, G.K2), (G.GAM1, G.GAM2), (G.P1, G.P2)]:
        mask[i, j] = mask[j, i] = True
    assert np.abs(F[~mask]).max() == 0


def test_exp_ad_of_zero_is_identity():
    assert np.abs(exp_ad(np.zeros(15)) - np.eye(15)).max() == 0


def test_exp_ad_dirac_gs_entry():
    # temporal-dominant omega slot is trig, spatial is hyperbolic
    x = np.zeros(15)
    x[6:10] = [0.0, math.pi / 3, 0.0, 0.0]
    assert exp_ad(x)[14, 14] == pytest.approx(math.cosh(math.pi / 3), abs=1e-12)
    x[6:10] = [math.pi / 3, 0.0, 0.0, 0.0]
    assert exp_ad(x)[14, 14] == pytest.approx(0.5, abs=1e-12)


def test_exp_ad_one_parameter_subgroup():
    rng = np.random.default_rng(3)
    for _ in range(20):
        x = rng.normal(size=15) * 0.5
        s, t = rng.uniform(-1.5, 1.5, size=2)
        lhs = exp_ad(x, s) @ exp_ad(x, t)
        assert np.abs(lhs - exp_ad(x, s + t)).max() < 1e-10


def test_exp_ad_unimodular():
    for a in range(15):
        for tau in np.linspace(-2.0, 2.0, 9):
            assert abs(np.linalg.det(exp_ad(basis(a), tau)) - 1.0) < 1e-10


def test_casimir_mu_diagonal():
    k = casimir_mu()
    assert np.array_equal(np.diag(k)[10:], [1, -1, -1, -1, 1])
    assert np.abs(k[:10, :]).max() == 0 and np.abs(k - k.T).max() == 0


def test_casimir_mu_invariant_under_all_rows():
    assert np.abs(invariance_residual(casimir_mu())).max() == 0


def test_casimir_lambda_subgroup_only():
    res = invariance_residual(casimir_lambda())
    assert np.abs(res[:10]).max() == 0
    # observed defect on every translation row is exactly 1
    assert np.array_equal(res[10:], [1, 1, 1, 1, 1])


def test_table_json_roundtrip():
    obj = table_to_json_obj()
    assert obj["order"] == list(GENERATOR_NAMES)
    assert len(obj["entries"]) == 50
    t2 = table_from_json_obj(obj)
    assert np.array_equal(t2.dense, STRUCTURE_CONSTANTS.dense)
