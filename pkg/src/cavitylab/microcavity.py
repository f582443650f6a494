"""Polariton physics of a pumped planar microcavity.

Dispersions of the two polariton branches, the orthogonal mixing matrix
between exciton/photon and polariton modes, effective branch-dependent
interaction potentials, pair-mixing coefficients, and Schmidt coefficients
of the resulting multi-pair state.

Unit convention: hbar = c = 1, energies in eV.  Wave vectors are stored as
their energy equivalent (hbar*c*k in eV); user-facing interfaces quote the
dimensionless ratio hbar*c*k / E_C and convert via ``wavevector_from_ratio``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCoupling

# Coefficients > this threshold count towards the Schmidt number.
SCHMIDT_THRESHOLD = 1e-12


@dataclass(frozen=True)
class MicrocavityParams:
    """Material and cavity constants.

    e_c, e_x      cavity photon energy at k=0 and exciton energy (eV)
    hbar_omega    half the vacuum Rabi splitting (eV)
    e_b           exciton binding energy (eV)
    r_x           exciton radius (length units consistent with ``area``)
    area          sample surface area
    """

    e_c: float = 1.5
    e_x: float = 1.5
    hbar_omega: float = 2e-3
    e_b: float = 10e-3
    r_x: float = 1.0
    area: float = 1.0

    def __post_init__(self):
        if self.hbar_omega <= 0 or self.e_b <= 0 or self.e_c <= 0 or self.e_x <= 0:
            raise ValueError("e_c, e_x, hbar_omega and e_b must be positive")

    @property
    def detuning(self) -> float:
        """Normalized detuning (E_C - E_X) / (2 hbar Omega)."""
        return (self.e_c - self.e_x) / (2.0 * self.hbar_omega)

    @property
    def splitting_ratio(self) -> float:
        """Polariton splitting to binding energy ratio 2 hbar Omega / E_b."""
        return 2.0 * self.hbar_omega / self.e_b


@dataclass(frozen=True)
class WaveVector2D:
    """In-plane wave vector, stored as hbar*c*(kx, ky) in eV."""

    kx: float
    ky: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.kx) and math.isfinite(self.ky)):
            raise ValueError("wave-vector components must be finite")

    @property
    def modulus(self) -> float:
        return math.hypot(self.kx, self.ky)

    def __add__(self, other: "WaveVector2D") -> "WaveVector2D":
        return WaveVector2D(self.kx + other.kx, self.ky + other.ky)

    def __sub__(self, other: "WaveVector2D") -> "WaveVector2D":
        return WaveVector2D(self.kx - other.kx, self.ky - other.ky)


def wavevector_from_ratio(p: MicrocavityParams, rx: float, ry: float = 0.0) -> WaveVector2D:
    """Build a wave vector from the dimensionless components hbar*c*k / E_C."""
    return WaveVector2D(rx * p.e_c, ry * p.e_c)


def cavity_energy(p: MicrocavityParams, k: WaveVector2D) -> float:
    """Cavity photon dispersion E_C(k) = E_C sqrt(1 + (hbar c k / E_C)^2)."""
    return p.e_c * math.sqrt(1.0 + (k.modulus / p.e_c) ** 2)


def polariton_energies(p: MicrocavityParams, k: WaveVector2D) -> tuple[float, float]:
    """Lower and upper polariton branch energies (E_1, E_2) at wave vector k."""
    ec = cavity_energy(p, k)
    s = math.sqrt((ec - p.e_x) ** 2 + 4.0 * p.hbar_omega**2)
    return 0.5 * (ec + p.e_x - s), 0.5 * (ec + p.e_x + s)


def lower_branch_energy(p: MicrocavityParams, k: WaveVector2D) -> float:
    return polariton_energies(p, k)[0]


def hopfield(p: MicrocavityParams, k: WaveVector2D) -> np.ndarray:
    """Orthogonal exciton/photon <-> polariton mixing matrix at wave vector k.

    Row index: 1 = exciton, 2 = photon component; column index: branch.
    M11 = M22 = 1/sqrt(1 + rho^2), M12 = -M21 = sqrt(1 - M11^2) with
    rho = (E_2(k) - E_C(k)) / (hbar Omega).
    """
    ec = cavity_energy(p, k)
    e2 = polariton_energies(p, k)[1]
    rho = (e2 - ec) / p.hbar_omega
    m11 = 1.0 / math.sqrt(1.0 + rho * rho)
    m12 = math.sqrt(1.0 - m11 * m11)
    return np.array([[m11, m12], [-m12, m11]])


def effective_potential(
    p: MicrocavityParams,
    k: WaveVector2D,
    kp: WaveVector2D,
    q: WaveVector2D,
    branches: tuple[int, int, int, int],
) -> float:
    """Effective branch-dependent pair-scattering potential.

    Combines a Coulomb part proportional to the binding energy with a
    saturation part proportional to hbar Omega; branch weights enter through
    the mixing-matrix elements at the four shifted wave vectors.  The value
    is an energy (same units as e_b).
    """
    j1, j2, j3, j4 = branches
    for j in branches:
        if j not in (1, 2):
            raise ValueError(f"branch indices must be 1 or 2, got {branches}")
    m_a = hopfield(p, k + q)
    m_b = hopfield(p, kp - q)
    m_c = hopfield(p, k)
    m_d = hopfield(p, kp)
    coulomb = 12.0 * p.e_b * m_a[0, j1 - 1] * m_b[0, j2 - 1] * m_c[0, j3 - 1] * m_d[0, j4 - 1]
    saturation = (
        (16.0 * math.pi / 7.0)
        * p.hbar_omega
        * (
            m_a[1, j1 - 1] * m_b[0, j2 - 1] * m_c[0, j3 - 1] * m_d[0, j4 - 1]
            + m_a[0, j1 - 1] * m_b[0, j2 - 1] * m_c[0, j3 - 1] * m_d[1, j4 - 1]
        )
    )
    return coulomb - saturation


def alpha_coefficient(p: MicrocavityParams, kp: WaveVector2D, q: WaveVector2D) -> float:
    """Pair-state mixing coefficient for pump wave vector kp and scattering q.

    alpha = V^(1,2,2,2) / sqrt((V^(1,2,2,2))^2 + (V^(2,1,2,2))^2), evaluated
    at k = k' = kp.  The sign of the numerator is preserved.
    """
    v1222 = effective_potential(p, kp, kp, q, (1, 2, 2, 2))
    v2122 = effective_potential(p, kp, kp, q, (2, 1, 2, 2))
    norm = math.hypot(v1222, v2122)
    if abs(v1222) < 1e-30 and abs(v2122) < 1e-30:
        raise DegenerateCoupling("both scattering potentials vanish")
    return v1222 / norm


@dataclass(frozen=True)
class PairState:
    """State of N branch-entangled polariton pairs, one mixing weight per pair."""

    alphas: tuple[float, ...]

    def __init__(self, alphas):
        values = tuple(float(a) for a in alphas)
        for a in values:
            if not 0.0 <= a <= 1.0:
                raise ValueError(f"pair weights must lie in [0, 1], got {a}")
        object.__setattr__(self, "alphas", values)


def schmidt_coefficients(s: PairState) -> np.ndarray:
    """Schmidt coefficients of the multi-pair state across the branch bipartition.

    All 2^N products of per-pair weights {alpha_n, sqrt(1 - alpha_n^2)},
    sorted in descending order.  Squares sum to one.
    """
    coeffs = [1.0]
    for a in s.alphas:
        b = math.sqrt(max(0.0, 1.0 - a * a))
        coeffs = [c * w for c, w in itertools.product(coeffs, (a, b))]
    out = np.sort(np.array(coeffs))[::-1]
    return out


def schmidt_number(s: PairState) -> int:
    """Count of Schmidt coefficients above the numerical noise floor."""
    return int(np.sum(schmidt_coefficients(s) > SCHMIDT_THRESHOLD))
