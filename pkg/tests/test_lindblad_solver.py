"""Factorized propagator, block spectra, closed forms, collective model."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.sparse.linalg import expm_multiply

from dicke4 import lindblad_solver as ls
from dicke4.symmetric_sector import SymmetricVector, basis, qnum

taus_moderate = st.floats(min_value=0.0, max_value=5.0,
                          allow_nan=False, allow_infinity=False)
s_interior = st.floats(min_value=0.05, max_value=0.95,
                       allow_nan=False, allow_infinity=False)


def random_vector(z, rng):
    return SymmetricVector(z, np.array(
        [rng.gauss(0, 1) for _ in range(basis(z).dimension)]))


# -------------------------------------------------------------- parameters

def test_model_params_validation():
    ls.ModelParams(z=3, s=0.5)
    with pytest.raises(ValueError):
        ls.ModelParams(z=0, s=0.5)
    with pytest.raises(ValueError):
        ls.ModelParams(z=2, s=1.5)
    with pytest.raises(ValueError):
        ls.ModelParams(z=2, s=0.5, ctilde=-0.1)
    with pytest.raises(ValueError):
        ls.ModelParams(z=2, s=0.5, ctilde=float("inf"))


def test_select_ordering_switches_at_half():
    assert ls.select_ordering(0.0) == "minus_first"
    assert ls.select_ordering(0.5) == "minus_first"
    assert ls.select_ordering(0.51) == "plus_first"
    assert ls.select_ordering(1.0) == "plus_first"


# ----------------------------------------------------- scalar coefficients

def test_bch_coefficients_pure_decay():
    tau = 0.8
    f = -math.expm1(-tau)
    co = ls.bch_coefficients(0.0, tau)
    assert co.a == 0.0
    assert co.b == pytest.approx(-tau, abs=1e-15)
    assert co.c == pytest.approx(f, abs=1e-15)
    assert co.f_coeff == 0.0
    assert co.e == pytest.approx(-tau, abs=1e-15)
    assert co.d == pytest.approx(f * math.exp(tau), rel=1e-13)
    assert co.f_tau == f


def test_bch_coefficients_balanced_at_log_two():
    co = ls.bch_coefficients(0.5, math.log(2.0))
    assert co.f_tau == pytest.approx(0.5, abs=1e-15)
    assert co.a == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert co.c == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert co.b == pytest.approx(math.log(8.0 / 9.0), abs=1e-15)
    assert co.d == co.a and co.f_coeff == co.c
    assert co.e == pytest.approx(math.log(9.0 / 8.0), abs=1e-15)


@given(s_interior, st.floats(min_value=0.0, max_value=8.0))
@settings(max_examples=200, deadline=None)
def test_bch_mirror_symmetry(s, tau):
    # swapping s -> 1-s swaps the roles of the two orderings
    left = ls.bch_coefficients(s, tau)
    right = ls.bch_coefficients(1.0 - s, tau)
    assert left.a == pytest.approx(right.d, rel=1e-13, abs=1e-15)
    assert left.b == pytest.approx(-right.e, rel=1e-13, abs=1e-15)
    assert left.c == pytest.approx(right.f_coeff, rel=1e-13, abs=1e-15)


def test_bch_zero_time_is_identity():
    co = ls.bch_coefficients(0.7, 0.0)
    assert (co.a, co.b, co.c, co.d, co.e, co.f_coeff, co.f_tau) == (
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)


def test_bch_domain_validation():
    with pytest.raises(ValueError):
        ls.bch_coefficients(0.5, -0.1)
    with pytest.raises(ValueError):
        ls.bch_coefficients(1.2, 1.0)
    with pytest.raises(ValueError):
        ls.bch_coefficients(0.5, float("nan"))


def test_bch_limit_domain_degeneration():
    # at extreme weight and large tau one denominator rounds to zero; the
    # combined-coefficient call must refuse rather than return inf
    with pytest.raises(ValueError):
        ls.bch_coefficients(1.0, 40.0)
    with pytest.raises(ValueError):
        ls.bch_coefficients(0.0, 40.0)
    # moderate times stay fine at the extremes
    ls.bch_coefficients(0.0, 30.0)
    ls.bch_coefficients(1.0, 30.0)


def test_propagation_survives_where_combined_coefficients_degenerate():
    v = SymmetricVector.from_components(2, {(1, 1, 0): 1.0})
    p = ls.ModelParams(z=2, s=0.0)
    out = ls.propagate_bch(v, p, 40.0)          # auto-selected ordering
    assert out.coeffs[basis(2).index[qnum(1, -1, 0)]] == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        ls.propagate_bch(v, p, 40.0, ordering="plus_first")


# ------------------------------------------------------------- propagation

def test_ladder_matrices_entries():
    qp, qm = ls.ladder_matrices(2)
    b = basis(2)
    i_top = b.index[qnum(1, 1, 0)]
    i_mid = b.index[qnum(1, 0, 0)]
    assert qm[i_mid, i_top] == 2.0     # two excited sites to lower
    assert qp[i_top, i_mid] == 1.0
    assert qp[:, i_top].nnz == 0       # annihilated at the block edge


@pytest.mark.parametrize("z", [1, 2, 3, 4, 5])
def test_orderings_agree(z):
    rng = random.Random(40 + z)
    v = random_vector(z, rng)
    for s in (0.1, 0.5, 0.9):
        p = ls.ModelParams(z=z, s=s)
        for tau in (0.3, 1.0, 3.0):
            w1 = ls.propagate_bch(v, p, tau, ordering="minus_first").coeffs
            w2 = ls.propagate_bch(v, p, tau, ordering="plus_first").coeffs
            scale = max(1.0, np.abs(w1).max())
            assert np.abs(w1 - w2).max() <= 1e-12 * scale, (z, s, tau)


@given(s_interior, taus_moderate, taus_moderate)
@settings(max_examples=60, deadline=None)
def test_semigroup_property(s, tau1, tau2):
    rng = random.Random(int(s * 1000) + 1)
    v = random_vector(3, rng)
    p = ls.ModelParams(z=3, s=s, ctilde=0.9)
    once = ls.evolve(v, p, tau1 + tau2)
    twice = ls.evolve(ls.evolve(v, p, tau1), p, tau2)
    assert np.abs(once.coeffs - twice.coeffs).max() <= 1e-10


def test_propagator_matches_matrix_exponential():
    # full-generator cross-check on the sector matrix, all blocks at once
    rng = random.Random(47)
    z = 4
    v = random_vector(z, rng)
    for s in (0.0, 0.3, 0.8):
        for ct in (0.5, 1.4):
            p = ls.ModelParams(z=z, s=s, ctilde=ct)
            lv = ls.liouvillian_matrix(p)
            for tau in (0.2, 1.0, 4.0):
                expected = expm_multiply(lv * tau, v.coeffs.astype(float))
                got = ls.evolve(v, p, tau).coeffs
                assert np.abs(got - expected).max() <= 1e-8, (s, ct, tau)


def test_trace_is_conserved_for_any_dephasing():
    rng = random.Random(53)
    v = random_vector(4, rng)
    t0 = v.trace()
    for ct in (0.0, 0.5, 2.5):
        p = ls.ModelParams(z=4, s=0.7, ctilde=ct)
        assert ls.evolve(v, p, 3.0).trace() == pytest.approx(t0, abs=1e-10)


def test_mismatched_sizes_rejected():
    v = SymmetricVector.from_components(2, {(1, 1, 0): 1.0})
    with pytest.raises(ValueError):
        ls.propagate_bch(v, ls.ModelParams(z=3, s=0.0), 1.0)
    with pytest.raises(ValueError):
        ls.propagate_bch(v, ls.ModelParams(z=2, s=0.0), 1.0, ordering="sideways")


def test_dephasing_factor_properties():
    rng = random.Random(59)
    v = random_vector(3, rng)
    p = ls.ModelParams(z=3, s=0.4)
    tau, ct = 1.3, 1.8
    # leading block untouched
    deph = ls.apply_dephasing_factor(v, ct, tau)
    assert np.array_equal(deph.coeffs[:4], v.coeffs[:4])
    # commutes with the damping/pumping propagator
    before = ls.propagate_bch(ls.apply_dephasing_factor(v, ct, tau), p, tau)
    after = ls.apply_dephasing_factor(ls.propagate_bch(v, p, tau), ct, tau)
    assert np.abs(before.coeffs - after.coeffs).max() <= 1e-12


def test_decay_closed_form_matches_propagator():
    for z in (1, 2, 3, 4):
        p = ls.ModelParams(z=z, s=0.0)
        for qn in basis(z).states:
            v0 = SymmetricVector.from_components(z, {qn: 1.0})
            for tau in (0.0, 0.4, 2.0):
                closed = ls.propagate_decay_closed_form(qn, z, tau)
                direct = ls.propagate_bch(v0, p, tau)
                assert np.abs(closed.coeffs - direct.coeffs).max() <= 1e-12


def test_decay_asymptotics():
    # s=0: everything in a (q, sigma3) block slides to the bottom rung,
    # damped by the block's sigma value through the overall envelope
    z = 4
    v = SymmetricVector.from_components(z, {(2, 2, 0): 1.0})
    out = ls.propagate_bch(v, ls.ModelParams(z=z, s=0.0), 40.0)
    expect = np.zeros(basis(z).dimension)
    expect[basis(z).index[qnum(2, -2, 0)]] = 1.0
    assert np.abs(out.coeffs - expect).max() <= 1e-6


def test_balanced_pumping_asymptotics():
    z = 4
    v = SymmetricVector.from_components(z, {(2, 2, 0): 1.0})
    out = ls.evolve(v, ls.ModelParams(z=z, s=0.5), 40.0)
    b = basis(z)
    expect = np.zeros(b.dimension)
    for k in range(z + 1):
        expect[b.index[qnum(2, 2 - k, 0)]] = math.comb(z, k) / 2.0 ** z
    assert np.abs(out.coeffs - expect).max() <= 1e-6


# ------------------------------------------------------------ block spectra

def test_block_matrix_conserves_trace():
    for s in (0.0, 0.35, 1.0):
        block = ls.dicke_block_matrix(ls.ModelParams(z=5, s=s))
        assert np.abs(block.sum(axis=0)).max() <= 1e-12


def test_block_matrix_ignores_dephasing():
    a = ls.dicke_block_matrix(ls.ModelParams(z=4, s=0.3, ctilde=0.5))
    b = ls.dicke_block_matrix(ls.ModelParams(z=4, s=0.3, ctilde=2.0))
    assert np.array_equal(a, b)


def test_spectrum_is_integer_ladder():
    for z in (1, 3, 6):
        for s in (0.0, 0.5, 0.9):
            vals, stat = ls.spectrum(ls.ModelParams(z=z, s=s))
            assert np.abs(vals - (-np.arange(z + 1.0))).max() <= 1e-8
            weights = stat.coeffs[: z + 1]
            expect = np.array([math.comb(z, k) * s ** (z - k) * (1 - s) ** k
                               for k in range(z + 1)])
            assert np.abs(weights - expect).max() <= 1e-10
            assert np.abs(stat.coeffs[z + 1:]).max(initial=0.0) == 0.0


def test_block_eigenmodes_normalization():
    modes = ls.block_eigenmodes(ls.ModelParams(z=3, s=0.25))
    vals = [lam for lam, _ in modes]
    assert vals == sorted(vals, reverse=True)
    stat = modes[0][1]
    assert stat.trace() == pytest.approx(1.0, abs=1e-12)
    for lam, mode in modes[1:]:
        assert abs(mode.trace()) <= 1e-10            # decaying modes are traceless
        top = np.abs(mode.coeffs).max()
        assert top == pytest.approx(1.0, abs=1e-12)
        lead = mode.coeffs[np.nonzero(np.abs(mode.coeffs) > 1e-12)[0][0]]
        assert lead > 0


# --------------------------------------------------------- collective model

def test_collective_ladder_weights_two_sites():
    lam_minus, lam_plus = ls.collective_ladder_weights(2)
    assert np.array_equal(lam_minus, np.array([2.0, 2.0, 0.0]))
    assert np.array_equal(lam_plus, np.array([0.0, 2.0, 2.0]))


def test_truncated_model_conserves_trace():
    rhos = ls.truncated_dicke_propagate(3, 0.4, (Fraction(3, 2), Fraction(3, 2)),
                                        np.linspace(0.0, 6.0, 7))
    traces = np.einsum("tii->t", rhos).real
    assert np.abs(traces - 1.0).max() <= 1e-9


def test_truncated_model_agrees_with_sector_for_one_site():
    # collective spin-1/2 rates equal the single-site rates, so the two
    # models coincide at z = 1 (and only there)
    z, s = 1, 0.3
    taus = np.array([0.0, 0.5, 1.5, 3.0])
    rhos = ls.truncated_dicke_propagate(z, s, (Fraction(1, 2), Fraction(1, 2)), taus)
    m_diag = np.array([0.5, -0.5])
    v0 = SymmetricVector.from_components(z, {(Fraction(1, 2), Fraction(1, 2), 0): 1.0})
    p = ls.ModelParams(z=z, s=s)
    b = basis(z)
    for rho, tau in zip(rhos, taus):
        collective = float(np.real(np.diag(rho) @ m_diag))
        sector = float((ls.propagate_bch(v0, p, float(tau)).coeffs
                        * b.q3_values * b.trace_values).sum())
        assert collective == pytest.approx(sector, abs=1e-8)


def test_truncated_model_decays_faster_than_the_sector():
    # superradiant enhancement: from the fully excited state the collective
    # inversion falls below the independent-site curve at intermediate times
    z, s = 3, 0.2
    tau = 1.0
    rho = ls.truncated_dicke_propagate(z, s, (Fraction(3, 2), Fraction(3, 2)), tau)
    m_diag = 0.5 * z - np.arange(z + 1)
    collective = float(np.real(np.diag(rho) @ m_diag))
    v0 = SymmetricVector.from_components(z, {(Fraction(3, 2), Fraction(3, 2), 0): 1.0})
    b = basis(z)
    sector = float((ls.propagate_bch(v0, ls.ModelParams(z=z, s=s), tau).coeffs
                    * b.q3_values * b.trace_values).sum())
    assert collective < sector - 0.05


def test_truncated_decay_formula_two_sites():
    # starting from M = 1 at s = 0 the collective inversion follows
    # (1 + tau) e^(-2 tau) - 1/2 per site
    taus = np.linspace(0.0, 5.0, 11)
    rhos = ls.truncated_dicke_propagate(2, 0.0, (1, 1), taus)
    m_diag = np.array([1.0, 0.0, -1.0])
    got = np.einsum("tii,i->t", rhos, m_diag).real / 2.0
    expect = (1.0 + taus) * np.exp(-2.0 * taus) - 0.5
    assert np.abs(got - expect).max() <= 1e-8


def test_truncated_model_scalar_tau_and_matrix_initial():
    rho0 = np.zeros((3, 3), dtype=complex)
    rho0[1, 1] = 1.0
    out = ls.truncated_dicke_propagate(2, 0.0, rho0, 1.0)
    assert out.shape == (3, 3)
    same = ls.truncated_dicke_propagate(2, 0.0, (0, 0), 1.0)
    assert np.abs(out - same).max() <= 1e-12


def test_truncated_model_rejects_bad_input():
    with pytest.raises(ValueError):
        ls.truncated_dicke_propagate(2, 0.0, (2, 0), 1.0)       # M outside spin 1
    with pytest.raises(ValueError):
        ls.truncated_dicke_propagate(2, 0.0, (Fraction(1, 2), 0), 1.0)
    with pytest.raises(ValueError):
        ls.truncated_dicke_propagate(2, 0.0, (1, 1), [-1.0])
    with pytest.raises(ValueError):
        ls.truncated_dicke_propagate(2, 0.0, np.eye(4), 1.0)
