"""Sector basis: labels, multiplicities, ladders, embeddings, biorthogonality."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dicke4 import su4_algebra as su4
from dicke4 import symmetric_sector as sec

counts4 = st.tuples(*(st.integers(min_value=0, max_value=4),) * 4).filter(
    lambda t: 1 <= sum(t) <= 8)


def tr_prod(t1, t2):
    entries = {}
    for w, cf in t2.items():
        r, c = su4.word_entry(w)
        entries[(r, c)] = entries.get((r, c), 0) + cf
    total = Fraction(0)
    for w, cf in t1.items():
        r, c = su4.word_entry(w)
        total += cf * entries.get((c, r), 0)
    return total


# ------------------------------------------------------------------- labels

def test_sector_dimension_closed_form():
    for z in range(1, 21):
        assert sec.sector_dimension(z) == (z + 1) * (z + 2) * (z + 3) // 6
        assert len(sec.enumerate_basis(z)) == sec.sector_dimension(z)
    with pytest.raises(ValueError):
        sec.sector_dimension(0)


@given(counts4)
def test_config_label_round_trip(counts):
    cfg = sec.Config(*counts)
    qn = sec.qn_from_config(cfg)
    assert sec.config_from_qn(cfg.z, qn) == cfg
    assert qn.q + (Fraction(cfg.gamma + cfg.delta, 2)) == Fraction(cfg.z, 2)


def test_config_from_qn_rejects_foreign_labels():
    with pytest.raises(ValueError):
        sec.config_from_qn(2, sec.qnum(Fraction(3, 2), Fraction(1, 2), 0))
    with pytest.raises(ValueError):
        sec.config_from_qn(2, sec.qnum(1, 2, 0))     # q3 > q
    with pytest.raises(ValueError):
        sec.config_from_qn(3, sec.qnum(1, 0, 0))     # sigma3 not half-integral


def test_multiplicities_tile_the_full_operator_space():
    # the 4^Z word space is exactly partitioned by the configurations
    for z in range(1, 7):
        total = sum(sec.multiplicity(cfg) for cfg in sec.basis(z).configs)
        assert total == 4 ** z


def test_basis_order_puts_the_dicke_block_first():
    for z in (1, 2, 3, 5):
        states = sec.enumerate_basis(z)
        half_z = Fraction(z, 2)
        lead = states[: z + 1]
        assert all(qn.q == half_z for qn in lead)
        assert [qn.q3 for qn in lead] == sorted(
            (qn.q3 for qn in lead), reverse=True)
        assert all(qn.q < half_z for qn in states[z + 1:])


def test_dual_label_flips_sigma3_only():
    qn = sec.qnum(Fraction(1, 2), Fraction(-1, 2), 1)
    assert sec.dual_qn(qn) == sec.qnum(Fraction(1, 2), Fraction(-1, 2), -1)
    assert sec.dual_qn(sec.dual_qn(qn)) == qn


# ------------------------------------------------------------------ ladders

def test_worked_ladder_example_three_sites():
    # coefficient = count of the replaced factor: Q- on u^3 replaces one of
    # the three u factors
    coeff, target = sec.apply_ladder(
        "Q-", sec.qnum(Fraction(3, 2), Fraction(3, 2), 0), 3)
    assert coeff == Fraction(3)
    assert target == sec.qnum(Fraction(3, 2), Fraction(1, 2), 0)


def test_ladder_annihilation_at_block_edges():
    top = sec.qnum(1, 1, 0)
    coeff, target = sec.apply_ladder("Q+", top, 2)
    assert coeff == 0 and target is None
    coeff, target = sec.apply_ladder("Sigma-", top, 2)   # no s factor present
    assert coeff == 0 and target is None


@pytest.mark.parametrize("z", [1, 2, 3])
def test_ladder_action_matches_word_expansion(z):
    """Label arithmetic against the literal symmetrized word route, exactly."""
    for qn in sec.enumerate_basis(z):
        spread = sec.state_operator_sum(z, qn)
        for op in su4.SUPEROPERATORS:
            coeff, target = sec.apply_ladder(op, qn, z)
            via_words = su4.apply_superoperator(op, spread)
            expected = {}
            if target is not None and coeff:
                expected = su4.clean(su4.scale(
                    sec.state_operator_sum(z, target), coeff))
            assert via_words == expected, (z, qn, op)


def test_diagonal_ladder_eigenvalues():
    qn = sec.qnum(1, 0, 1)          # z=4 config (1,1,2,0)
    coeff, target = sec.apply_ladder("Q3", qn, 4)
    assert (coeff, target) == (Fraction(0), qn)
    coeff, _ = sec.apply_ladder("Sigma3", qn, 4)
    assert coeff == Fraction(1)
    coeff, _ = sec.apply_ladder("M3", qn, 4)
    assert coeff == Fraction(1, 2)   # (alpha - delta)/2


def test_qtilde_eigenvalue_is_q():
    for z in (2, 3):
        for qn in sec.enumerate_basis(z):
            assert sec.apply_qtilde(qn) == qn.q
            spread = sec.state_operator_sum(z, qn)
            out = su4.qtilde_apply(spread)
            expect = su4.clean(su4.scale(spread, qn.q))
            assert out == expect


# ------------------------------------------------- embeddings and pairings

def test_embedded_states_have_unit_or_zero_trace():
    for z in (1, 2, 3):
        for qn, cfg in zip(sec.basis(z).states, sec.basis(z).configs):
            tr = np.trace(sec.embed_dense(z, qn))
            want = 1.0 if cfg.gamma == 0 and cfg.delta == 0 else 0.0
            assert abs(tr - want) <= 1e-14


def test_embedded_adjoint_flips_sigma3():
    z = 3
    qn = sec.qnum(Fraction(1, 2), Fraction(1, 2), 1)
    lhs = sec.embed_dense(z, qn).conj().T
    rhs = sec.embed_dense(z, sec.dual_qn(qn))
    assert np.abs(lhs - rhs).max() <= 1e-15


def test_biorthogonality_pairing():
    # M(cfg) * Tr{P_dual P'} = delta on labels, exact
    for z in (1, 2, 3):
        b = sec.basis(z)
        for i, qn_i in enumerate(b.states):
            left = sec.state_operator_sum(z, sec.dual_qn(qn_i))
            mult = sec.multiplicity(b.configs[i])
            for j, qn_j in enumerate(b.states):
                right = sec.state_operator_sum(z, qn_j)
                val = mult * tr_prod(left, right)
                assert val == (1 if i == j else 0), (qn_i, qn_j)


def test_extract_inverts_embed():
    rng = random.Random(5)
    for z in (1, 2, 3):
        b = sec.basis(z)
        for _ in range(6):
            i = rng.randrange(b.dimension)
            v = sec.extract_coefficients(z, sec.embed_dense(z, b.states[i]))
            expect = np.zeros(b.dimension)
            expect[i] = 1.0
            assert np.abs(v.coeffs - expect).max() <= 1e-12


def test_extract_rejects_asymmetric_matrices():
    rho = np.zeros((4, 4))
    rho[0, 1] = 1.0           # |11><10|, not swap invariant
    with pytest.raises(ValueError):
        sec.extract_coefficients(2, rho)


def test_permutation_defect_detects_broken_symmetry():
    z = 3
    sym = sec.embed_dense(z, sec.qnum(Fraction(3, 2), Fraction(1, 2), 0))
    assert sec.permutation_defect(z, sym) <= 1e-15
    broken = sym.copy()
    broken[1, 1] += 0.2
    assert sec.permutation_defect(z, broken) > 0.1
    with pytest.raises(ValueError):
        sec.permutation_defect(2, sym)


def test_extract_bell_triplet_components():
    psi = np.array([0.0, 1.0, 1.0, 0.0]) / math.sqrt(2.0)   # (|10> + |01>)/sqrt2
    v = sec.extract_coefficients(2, np.outer(psi, psi))
    comps = {qn: c for qn, c in zip(sec.basis(2).states, v.coeffs) if abs(c) > 1e-12}
    assert set(comps) == {sec.qnum(1, 0, 0), sec.qnum(0, 0, 0)}
    assert comps[sec.qnum(1, 0, 0)] == pytest.approx(1.0, abs=1e-12)
    assert comps[sec.qnum(0, 0, 0)] == pytest.approx(1.0, abs=1e-12)


def test_extract_ghz_components():
    psi = np.zeros(8)
    psi[0] = 1.0 / math.sqrt(2.0)    # |111>
    psi[7] = -1.0 / math.sqrt(2.0)   # |000>
    v = sec.extract_coefficients(3, np.outer(psi, psi))
    h = Fraction(3, 2)
    comps = {qn: c for qn, c in zip(sec.basis(3).states, v.coeffs) if abs(c) > 1e-12}
    assert set(comps) == {sec.qnum(h, h, 0), sec.qnum(h, -h, 0),
                          sec.qnum(0, 0, h), sec.qnum(0, 0, -h)}
    assert comps[sec.qnum(h, h, 0)] == pytest.approx(0.5, abs=1e-12)
    assert comps[sec.qnum(h, -h, 0)] == pytest.approx(0.5, abs=1e-12)
    assert comps[sec.qnum(0, 0, h)] == pytest.approx(-0.5, abs=1e-12)
    assert comps[sec.qnum(0, 0, -h)] == pytest.approx(-0.5, abs=1e-12)


# ------------------------------------------------------------------ vectors

def test_vector_round_trip_through_dense():
    v = sec.SymmetricVector.from_components(
        2, {(1, 1, 0): 0.25, (1, 0, 0): 0.5, (0, 0, 0): -0.125})
    back = sec.extract_coefficients(2, v.to_dense())
    assert np.abs(back.coeffs - v.coeffs).max() <= 1e-12


def test_vector_trace_counts_only_dicke_states():
    v = sec.SymmetricVector.from_components(
        2, {(1, 1, 0): 0.3, (0, 0, 0): 9.0, (0, 0, 1): 4.0})
    assert v.trace() == pytest.approx(0.3, abs=1e-15)


def test_from_components_rejects_foreign_label():
    with pytest.raises(ValueError):
        sec.SymmetricVector.from_components(2, {(2, 0, 0): 1.0})


def test_vector_shape_validation():
    with pytest.raises(ValueError):
        sec.SymmetricVector(2, np.zeros(9))   # dimension is 10


def test_coeff_lookup_accepts_plain_tuples():
    v = sec.SymmetricVector.from_components(3, {(Fraction(3, 2), Fraction(1, 2), 0): 2.0})
    assert v.coeff(("3/2", "1/2", 0)) == 2.0
