"""Quadratic Hamiltonian of the pumped comb modes and its Gaussian ground state.

The 2N+1 lower-branch modes at the comb wave numbers couple pairwise through
pump-induced parametric terms.  In quadratures the Hamiltonian splits into
two symmetric blocks (H_qq, H_pp); the ground state is the Gaussian with
width matrix V solving hbar^2 V H_pp V = H_qq, and its covariance matrix is
block diagonal in (q..., p...) ordering.  hbar = 1 internally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import matfun
from .errors import NotPositiveDefinite, UnstableHamiltonian
from .microcavity import MicrocavityParams, effective_potential, lower_branch_energy
from .phasematch import PumpComb

HBAR = 1.0


@dataclass(frozen=True)
class QuadraticForm:
    """Block pair (H_qq, H_pp) of the comb Hamiltonian, units of energy."""

    hqq: np.ndarray
    hpp: np.ndarray

    def __post_init__(self):
        hqq = matfun.check_symmetric(self.hqq)
        hpp = matfun.check_symmetric(self.hpp)
        if hqq.shape != hpp.shape:
            raise ValueError("H_qq and H_pp must have the same dimension")
        object.__setattr__(self, "hqq", hqq)
        object.__setattr__(self, "hpp", hpp)

    @property
    def n_modes(self) -> int:
        return self.hqq.shape[0]

    def big_h(self) -> np.ndarray:
        """Full quadrature-space matrix H = blockdiag(H_qq, H_pp) / hbar."""
        n = self.n_modes
        h = np.zeros((2 * n, 2 * n))
        h[:n, :n] = self.hqq
        h[n:, n:] = self.hpp
        return h / HBAR


@dataclass(frozen=True)
class GaussianState:
    """Zero-mean Gaussian ground state: width matrix V, covariance Sigma, energy."""

    v: np.ndarray
    sigma: np.ndarray
    energy: float

    @property
    def n_modes(self) -> int:
        return self.v.shape[0]


def coupling_matrix(p: MicrocavityParams, comb: PumpComb) -> np.ndarray:
    """Pump-induced mode-coupling matrix R, symmetric with zero diagonal.

    R[m,n] = (1/2)(R_X^2/A) V^(1111)(k_m, k_n, k_n - k_m) P_m P_n, symmetrized
    over (m, n): the Hamiltonian's unordered double sum only ever contains
    R[m,n] + R[n,m], so averaging the two orderings of the potential leaves
    the physics unchanged while making the symmetry exact.
    """
    pumps = comb.pump_wavevectors(p)
    amps = comb.amplitudes
    n = comb.n_modes
    prefactor = 0.5 * p.r_x**2 / p.area
    r = np.zeros((n, n))
    for m in range(n):
        for l in range(m + 1, n):
            v_ml = effective_potential(p, pumps[m], pumps[l], pumps[l] - pumps[m], (1, 1, 1, 1))
            v_lm = effective_potential(p, pumps[l], pumps[m], pumps[m] - pumps[l], (1, 1, 1, 1))
            r[m, l] = r[l, m] = prefactor * 0.5 * (v_ml + v_lm) * amps[m] * amps[l]
    return r


def build_quadratic_form(p: MicrocavityParams, comb: PumpComb) -> QuadraticForm:
    """Quadrature blocks H_qq = diag(E1/2) + S, H_pp = diag(E1/2) - S.

    S carries Re R once per unordered pair; the unordered double sum of the
    Hamiltonian visits each pair twice, which restores the factor 2.
    """
    e1 = np.array([lower_branch_energy(p, kp) for kp in comb.pump_wavevectors(p)])
    s = coupling_matrix(p, comb)
    d = np.diag(e1 / 2.0)
    return QuadraticForm(hqq=d + s, hpp=d - s)


def ground_state(qf: QuadraticForm) -> GaussianState:
    """Exact Gaussian ground state of a stable quadratic form.

    V = (1/hbar) Hpp^(-1/2) (Hpp^(1/2) Hqq Hpp^(1/2))^(1/2) Hpp^(-1/2) solves
    the stationarity condition hbar^2 V Hpp V = Hqq for any positive definite
    blocks (and reduces to Hpp^(-1/4) Hqq^(1/2) Hpp^(-1/4) when they commute).
    Energy E = Tr((Hqq^(1/2) Hpp Hqq^(1/2))^(1/2));
    Sigma = (1/2) blockdiag(V^(-1), hbar^2 V).
    """
    try:
        hpp_sqrt = matfun.sym_power(qf.hpp, 0.5)
        hpp_isqrt = matfun.sym_power(qf.hpp, -0.5)
        inner = matfun.sym_power(hpp_sqrt @ qf.hqq @ hpp_sqrt, 0.5)
        energy = matfun.trace_sqrt_product(qf.hqq, qf.hpp)
    except NotPositiveDefinite as exc:
        raise UnstableHamiltonian(
            "quadratic form is not positive definite (pump too strong): " + str(exc)
        ) from exc
    v = (hpp_isqrt @ inner @ hpp_isqrt) / HBAR
    v = 0.5 * (v + v.T)
    v_inv = matfun.sym_power(v, -1.0)

    n = qf.n_modes
    sigma = np.zeros((2 * n, 2 * n))
    sigma[:n, :n] = 0.5 * v_inv
    sigma[n:, n:] = 0.5 * HBAR**2 * v
    return GaussianState(v=v, sigma=sigma, energy=energy)


def mean_photon_numbers(gs: GaussianState) -> np.ndarray:
    """Mode occupations <a_n^dag a_n> from the covariance diagonal."""
    n = gs.n_modes
    qq = np.diag(gs.sigma)[:n]
    pp = np.diag(gs.sigma)[n:]
    return (qq / HBAR + pp / HBAR - 1.0) / 2.0


def symplectic_eigenvalues(sigma: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of a covariance matrix in (q..., p...) ordering."""
    n = sigma.shape[0] // 2
    omega = np.zeros((2 * n, 2 * n))
    omega[:n, n:] = np.eye(n)
    omega[n:, :n] = -np.eye(n)
    ev = np.linalg.eigvals(1j * omega @ sigma)
    return np.sort(np.abs(ev.real))[::2][::-1][::-1]


def uniform_pump_scale(
    p: MicrocavityParams,
    comb: PumpComb,
    floor_fraction: float = 0.1,
) -> float:
    """Largest uniform pump amplitude keeping the form safely positive definite.

    Returns P such that with amplitudes P_n = P the smallest eigenvalue of
    either block stays at floor_fraction * E1(k_0)/2.  Couplings scale as P^2,
    so the smallest block eigenvalue is a concave, eventually decreasing
    function of P^2 and the crossing is found by bisection.
    """
    if not 0.0 < floor_fraction < 1.0:
        raise ValueError("floor_fraction must be in (0, 1)")
    base = PumpComb(
        n_lines=comb.n_lines,
        k0_ratio=comb.k0_ratio,
        dk0_ratio=comb.dk0_ratio,
        gamma=comb.gamma,
        amplitudes=(1.0,) * comb.n_modes,
    )
    e1 = np.array([lower_branch_energy(p, kp) for kp in base.pump_wavevectors(p)])
    d = np.diag(e1 / 2.0)
    s_unit = coupling_matrix(p, base)
    floor = floor_fraction * lower_branch_energy(
        p, base.pump_wavevectors(p)[base.n_lines]
    ) / 2.0

    def min_eig(t: float) -> float:
        lo_q = np.linalg.eigvalsh(d + t * s_unit)[0]
        lo_p = np.linalg.eigvalsh(d - t * s_unit)[0]
        return min(lo_q, lo_p)

    hi = 1.0
    while min_eig(hi) > floor:
        hi *= 2.0
        if hi > 1e12:
            raise ValueError("pump coupling never destabilizes the form; check inputs")
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if min_eig(mid) > floor:
            lo = mid
        else:
            hi = mid
    return float(np.sqrt(lo))


def state_to_json(gs: GaussianState, path) -> None:
    """Serialize a Gaussian state; quadrature ordering is documented in the file."""
    payload = {
        "n_modes": gs.n_modes,
        "energy": gs.energy,
        "V": gs.v.flatten().tolist(),
        "Sigma": gs.sigma.flatten().tolist(),
        "ordering": "q_-N..q_N,p_-N..p_N (row-major matrices, hbar = 1)",
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def state_from_json(path) -> GaussianState:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    n = payload["n_modes"]
    v = np.array(payload["V"]).reshape(n, n)
    sigma = np.array(payload["Sigma"]).reshape(2 * n, 2 * n)
    return GaussianState(v=v, sigma=sigma, energy=payload["energy"])
