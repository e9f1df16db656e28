"""Symmetric-sector Lindblad dynamics of Z driven-damped qubits (B = 1 units).

In the sector basis the master equation reads

    dP/dtau = [ -Z/2 + (1-s) Q- - (1-2s) Q3 + s Q+ ] P
              + (1 - 2 ctilde) (Z/2 - Qtilde) P

with tau = B t, pumping weight s in [0, 1] and ctilde = C/B (ctilde = 1/2
switches the pure-dephasing term off).  Q+- only move q3 within a (q, sigma3)
block, and the dephasing term is diagonal with eigenvalue
(1-2 ctilde)(Z/2 - q), so propagation is exact:

  * the damping/pumping part exponentiates in closed form as a product of
    three exponentials, exp(a Q+) exp(b Q3) exp(c Q-), whose scalar
    coefficients follow from the su(2) composition law of the block algebra;
  * each ladder exponential is a finite series (Q+- are nilpotent on a
    block, degree <= Z), evaluated by sparse ladder walks;
  * the dephasing factor is a per-block scalar.

The propagator carries two equivalent factorization orderings; the ordering
whose denominator 1 - (weight)*f(tau) stays away from zero is selected
automatically (the Q- -first form degenerates as s -> 1, the Q+ -first form
as s -> 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
import scipy.sparse as sp
from scipy.integrate import solve_ivp

from .symmetric_sector import SymmetricVector, basis, config_from_qn, qnum

ORDERINGS = ("minus_first", "plus_first")


@dataclass(frozen=True)
class ModelParams:
    """Model configuration: site count, pumping weight, dephasing strength."""
    z: int
    s: float
    ctilde: float = 0.5

    def __post_init__(self):
        if not isinstance(self.z, int) or self.z < 1:
            raise ValueError(f"need at least one site, got z={self.z}")
        if not 0.0 <= self.s <= 1.0:
            raise ValueError(f"pumping weight s={self.s} outside [0, 1]")
        if not (math.isfinite(self.ctilde) and self.ctilde >= 0.0):
            raise ValueError(f"dephasing ratio ctilde={self.ctilde} must be >= 0")


@dataclass(frozen=True)
class BchCoefficients:
    """Scalar coefficients of the two factorized propagator orderings.

    minus_first: P(tau) = e^(-Z tau/2) exp(a Q+) exp(b Q3) exp(c Q-) P(0)
    plus_first:  P(tau) = e^(-Z tau/2) exp(d Q-) exp(e Q3) exp(f_coeff Q+) P(0)
    f_tau = 1 - e^(-tau).
    """
    a: float
    b: float
    c: float
    d: float
    e: float
    f_coeff: float
    f_tau: float


def _check_domain(s: float, tau: float) -> float:
    if not (math.isfinite(tau) and tau >= 0.0):
        raise ValueError(f"tau={tau} must be finite and >= 0")
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"pumping weight s={s} outside [0, 1]")
    return -math.expm1(-tau)


def _triple(weight: float, f: float, tau: float):
    """One ordering's (raising, diagonal, lowering) coefficients:

    ( wf/(1-wf), -tau - 2 log(1-wf), (1-w)f/(1-wf) )

    The denominator reaches zero only when wf rounds to 1, i.e. in the
    tau -> inf limit at an extreme weight, where these coefficients
    genuinely diverge; the complementary ordering stays regular there.
    """
    den = 1.0 - weight * f
    if den <= 0.0:
        raise ValueError(
            f"factorization coefficients diverge (weight {weight} with "
            f"f(tau)={f}); use the complementary ordering")
    return weight * f / den, -tau - 2.0 * math.log(den), (1.0 - weight) * f / den


def bch_coefficients(s: float, tau: float) -> BchCoefficients:
    """Closed-form factorization coefficients at pumping weight s, time tau.

    Raises the limit-domain error if either triple degenerates; propagation
    avoids that by computing only the triple its ordering needs.
    """
    f = _check_domain(s, tau)
    a, b, c = _triple(s, f, tau)
    d, neg_e, f_coeff = _triple(1.0 - s, f, tau)
    return BchCoefficients(a=a, b=b, c=c, d=d, e=-neg_e,
                           f_coeff=f_coeff, f_tau=f)


@lru_cache(maxsize=None)
def ladder_matrices(z: int):
    """Sparse matrices of Q+ and Q- on the sector coefficient vector.

    Column j holds the image of basis state j: Q+- P_{q,q3,s3} =
    (q -+ q3) P_{q,q3 +- 1,s3}.  Entries are the exact integer counts.
    """
    b = basis(z)
    rows_p, cols_p, vals_p = [], [], []
    rows_m, cols_m, vals_m = [], [], []
    for j, qn in enumerate(b.states):
        q, q3, s3 = qn
        up = q - q3          # = beta, coefficient of Q+
        if up:
            rows_p.append(b.index[qnum(q, q3 + 1, s3)])
            cols_p.append(j)
            vals_p.append(float(up))
        down = q + q3        # = alpha, coefficient of Q-
        if down:
            rows_m.append(b.index[qnum(q, q3 - 1, s3)])
            cols_m.append(j)
            vals_m.append(float(down))
    dim = b.dimension
    qp = sp.csr_matrix((vals_p, (rows_p, cols_p)), shape=(dim, dim))
    qm = sp.csr_matrix((vals_m, (rows_m, cols_m)), shape=(dim, dim))
    return qp, qm


def liouvillian_matrix(p: ModelParams) -> sp.csr_matrix:
    """Sector matrix of the full generator acting on coefficient vectors."""
    b = basis(p.z)
    qp, qm = ladder_matrices(p.z)
    diag = (-0.5 * p.z
            - (1.0 - 2.0 * p.s) * b.q3_values
            + (1.0 - 2.0 * p.ctilde) * (0.5 * p.z - b.q_values))
    return (sp.diags(diag) + (1.0 - p.s) * qm + p.s * qp).tocsr()


def _exp_ladder(mat: sp.csr_matrix, coeff: float, vec: np.ndarray, z: int) -> np.ndarray:
    """exp(coeff * mat) @ vec by the finite nilpotent series (<= Z+1 terms)."""
    out = vec.copy()
    if coeff == 0.0:
        return out
    term = vec
    for k in range(1, z + 2):
        term = mat @ term
        term = term * (coeff / k)
        if not term.any():
            break
        out += term
    return out


def select_ordering(s: float) -> str:
    """Factorization whose denominator stays >= 1/2 for all tau."""
    return "minus_first" if s <= 0.5 else "plus_first"


def propagate_bch(v: SymmetricVector, p: ModelParams, tau: float,
                  ordering: str | None = None) -> SymmetricVector:
    """Exact damping/pumping propagation by the factorized exponentials.

    Covers the ctilde = 1/2 generator; for other ctilde compose with
    `apply_dephasing_factor` (the two parts commute), as `evolve` does.
    """
    if v.z != p.z:
        raise ValueError(f"state has z={v.z}, params have z={p.z}")
    if ordering is None:
        ordering = select_ordering(p.s)
    if ordering not in ORDERINGS:
        raise ValueError(f"unknown ordering {ordering!r}")
    f = _check_domain(p.s, tau)
    b = basis(p.z)
    qp, qm = ladder_matrices(p.z)
    w = np.array(v.coeffs, dtype=complex if np.iscomplexobj(v.coeffs) else float)
    if ordering == "minus_first":
        up, diag, down = _triple(p.s, f, tau)
        w = _exp_ladder(qm, down, w, p.z)
        w = w * np.exp(diag * b.q3_values)
        w = _exp_ladder(qp, up, w, p.z)
    else:
        down, neg_diag, up = _triple(1.0 - p.s, f, tau)
        w = _exp_ladder(qp, up, w, p.z)
        w = w * np.exp(-neg_diag * b.q3_values)
        w = _exp_ladder(qm, down, w, p.z)
    w *= math.exp(-0.5 * p.z * tau)
    return SymmetricVector(p.z, w)


def apply_dephasing_factor(v: SymmetricVector, ctilde: float, tau: float) -> SymmetricVector:
    """Pure-dephasing part: each block picks up e^((1-2 ctilde)(Z/2-q) tau).

    Generalized Dicke states (q = Z/2) are untouched for every ctilde.
    """
    b = basis(v.z)
    factor = np.exp((1.0 - 2.0 * ctilde) * (0.5 * v.z - b.q_values) * tau)
    return SymmetricVector(v.z, v.coeffs * factor)


def evolve(v: SymmetricVector, p: ModelParams, tau: float,
           ordering: str | None = None) -> SymmetricVector:
    """Full propagation: factorized damping/pumping plus dephasing factor."""
    out = propagate_bch(v, p, tau, ordering)
    if p.ctilde != 0.5:
        out = apply_dephasing_factor(out, p.ctilde, tau)
    return out


def propagate_decay_closed_form(qn, z: int, tau: float) -> SymmetricVector:
    """Pure-decay (s = 0) evolution of one basis state, in closed form:

    P(tau) = e^(-Z tau/2) * sum_k C(q+q3, k) f^k (1-f)^(q3-k) P_{q,q3-k,s3}
    """
    qn = qnum(*qn)
    config_from_qn(z, qn)   # validates the label
    f = -math.expm1(-tau)
    n_down = int(qn.q + qn.q3)
    comps = {}
    for k in range(n_down + 1):
        weight = (math.comb(n_down, k) * f ** k
                  * math.exp(-tau * float(qn.q3 - k))
                  * math.exp(-0.5 * z * tau))
        comps[qnum(qn.q, qn.q3 - k, qn.sigma3)] = weight
    return SymmetricVector.from_components(z, comps)


def dicke_block_matrix(p: ModelParams) -> np.ndarray:
    """Generator restricted to the leading q = Z/2 block (Z+1 states)."""
    n = p.z + 1
    return liouvillian_matrix(p)[:n, :n].toarray()


def spectrum(p: ModelParams):
    """Eigenvalues of the q = Z/2 block (descending) and the stationary state.

    The eigenvalues come out as 0, -1, ..., -Z; the null eigenvector,
    normalized to unit trace, carries the binomial weights
    C(Z, Z/2+q3) s^(Z/2+q3) (1-s)^(Z/2-q3).
    """
    block = dicke_block_matrix(p)
    vals, vecs = np.linalg.eig(block)
    if np.abs(vals.imag).max(initial=0.0) > 1e-9:
        raise ArithmeticError(f"block eigenvalues not real: {vals}")
    vals = vals.real
    order = np.argsort(-vals)
    vals = vals[order]
    vecs = vecs[:, order].real
    stat = vecs[:, 0]
    total = stat.sum()       # trace: the block states all have unit trace
    if abs(total) < 1e-12:
        raise ArithmeticError("stationary eigenvector has zero trace")
    full = np.zeros(basis(p.z).dimension)
    full[:p.z + 1] = stat / total
    return vals, SymmetricVector(p.z, full)


def block_eigenmodes(p: ModelParams):
    """All (eigenvalue, mode) pairs of the q = Z/2 block, eigenvalues
    descending.  The stationary mode is trace-normalized; decaying modes are
    traceless and normalized to max-abs 1 with their first nonzero
    coefficient positive."""
    block = dicke_block_matrix(p)
    vals, vecs = np.linalg.eig(block)
    order = np.argsort(-vals.real)
    dim_full = basis(p.z).dimension
    modes = []
    for rank, j in enumerate(order):
        vec = vecs[:, j].real
        if rank == 0:
            vec = vec / vec.sum()
        else:
            vec = vec / np.abs(vec).max()
            lead = vec[np.nonzero(np.abs(vec) > 1e-12)[0][0]]
            if lead < 0:
                vec = -vec
        full = np.zeros(dim_full)
        full[:p.z + 1] = vec
        modes.append((float(vals[j].real), SymmetricVector(p.z, full)))
    return modes


def collective_ladder_weights(z: int):
    """lambda-(M) = (S+M)(S-M+1) and lambda+(M) = (S-M)(S+M+1) for the
    spin-S = Z/2 multiplet, indexed by k with M = Z/2 - k (descending)."""
    s_tot = 0.5 * z
    m = s_tot - np.arange(z + 1)
    lam_minus = (s_tot + m) * (s_tot - m + 1.0)
    lam_plus = (s_tot - m) * (s_tot + m + 1.0)
    return lam_minus, lam_plus


def truncated_dicke_propagate(z: int, s: float, initial, taus):
    """Numerically integrate the collective (spin-Z/2 truncated) model.

    The density matrix lives on the (Z+1)^2 Dicke basis |Z/2,M><Z/2,M'|,
    rows/columns indexed by k with M = Z/2 - k.  `initial` is either an
    (M, M') label pair or a (Z+1)x(Z+1) matrix.  Returns the propagated
    matrix at each requested tau (stacked when `taus` is a sequence).

    Integrates dP/dtau = -(1-s)/2 [S+S- P + P S+S- - 2 S- P S+]
                         -  s/2   [S-S+ P + P S-S+ - 2 S+ P S-]
    with RK45 at rtol 1e-10.
    """
    if z < 1:
        raise ValueError(f"need at least one site, got z={z}")
    n = z + 1
    if isinstance(initial, np.ndarray):
        if initial.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} Dicke-basis matrix")
        rho0 = initial.astype(complex)
    else:
        m, mp = (Fraction(x) for x in initial)
        ks = [Fraction(z, 2) - m, Fraction(z, 2) - mp]
        if any(k.denominator != 1 or not 0 <= k <= z for k in ks):
            raise ValueError(f"labels {initial} outside the spin-{z}/2 multiplet")
        rho0 = np.zeros((n, n), dtype=complex)
        rho0[int(ks[0]), int(ks[1])] = 1.0

    lam_minus, lam_plus = collective_ladder_weights(z)
    loss = -0.5 * ((1.0 - s) * np.add.outer(lam_minus, lam_minus)
                   + s * np.add.outer(lam_plus, lam_plus))
    gain_down = (1.0 - s) * np.sqrt(np.outer(lam_minus, lam_minus))
    gain_up = s * np.sqrt(np.outer(lam_plus, lam_plus))

    def rhs(_t, y):
        rho = y.reshape(n, n)
        out = loss * rho
        out[1:, 1:] += gain_down[:-1, :-1] * rho[:-1, :-1]
        out[:-1, :-1] += gain_up[1:, 1:] * rho[1:, 1:]
        return out.reshape(-1)

    scalar = np.isscalar(taus)
    t_eval = np.atleast_1d(np.asarray(taus, dtype=float))
    if np.any(t_eval < 0):
        raise ValueError("tau values must be >= 0")
    order = np.argsort(t_eval)
    t_sorted = t_eval[order]
    out = np.empty((len(t_eval), n, n), dtype=complex)
    nonzero = t_sorted > 0
    if nonzero.any():
        sol = solve_ivp(rhs, (0.0, float(t_sorted[-1])), rho0.reshape(-1),
                        method="RK45", rtol=1e-10, atol=1e-12,
                        t_eval=t_sorted[nonzero])
        if not sol.success:
            raise RuntimeError(f"collective-model integration failed: {sol.message}")
        out[order[nonzero]] = sol.y.T.reshape(-1, n, n)
    out[order[~nonzero]] = rho0
    return out[0] if scalar else out
