"""Phase-matching map for a frequency-comb pump on the lower polariton branch.

The pump comb injects polaritons at 2N+1 equidistant wave numbers on the
kx axis; ``eta`` scores how well a signal at wave vector k together with the
conjugate idler conserves energy for every pump pair, as a sum of Lorentzian
weights with the polariton broadening as width.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np

from .microcavity import MicrocavityParams, WaveVector2D, lower_branch_energy


@dataclass(frozen=True)
class PumpComb:
    """Frequency-comb pump: 2N+1 lines at k_n = k0 + n*dk0 on the kx axis.

    n_lines       N, number of lines above/below the central one
    k0_ratio      central wave number as hbar*c*k0 / E_C
    dk0_ratio     line separation as hbar*c*dk0 / E_C
    gamma         polariton broadening (eV)
    amplitudes    2N+1 pump spectral amplitudes, index n = -N..N
    """

    n_lines: int
    k0_ratio: float = 0.015
    dk0_ratio: float = 0.004
    gamma: float = 1e-6
    amplitudes: tuple[float, ...] = field(default=())

    def __post_init__(self):
        if self.n_lines < 1:
            raise ValueError("n_lines must be >= 1")
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if self.dk0_ratio <= 0:
            raise ValueError("dk0_ratio must be positive")
        if not self.amplitudes:
            object.__setattr__(self, "amplitudes", (1.0,) * self.n_modes)
        elif len(self.amplitudes) != self.n_modes:
            raise ValueError(f"need {self.n_modes} amplitudes, got {len(self.amplitudes)}")

    @property
    def n_modes(self) -> int:
        return 2 * self.n_lines + 1

    def k_ratio(self, n: int) -> float:
        """Dimensionless wave number of comb line n (n = -N..N)."""
        return self.k0_ratio + n * self.dk0_ratio

    def pump_wavevectors(self, p: MicrocavityParams) -> list[WaveVector2D]:
        """Wave vectors of all comb lines in internal (eV) units, n = -N..N."""
        nn = self.n_lines
        return [WaveVector2D(self.k_ratio(n) * p.e_c, 0.0) for n in range(-nn, nn + 1)]


@dataclass(frozen=True)
class GridSpec:
    """Rectangular wave-vector grid in dimensionless hbar*c*k / E_C units."""

    kx_range: tuple[float, float]
    ky_range: tuple[float, float]
    nx: int
    ny: int

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise ValueError("grid needs at least 2 samples per axis")
        if self.kx_range[0] >= self.kx_range[1] or self.ky_range[0] >= self.ky_range[1]:
            raise ValueError("grid ranges must be nondegenerate")

    def axis(self, which: str) -> np.ndarray:
        """Axis samples, centered so a symmetric range mirrors exactly in floats."""
        lo, hi = self.kx_range if which == "x" else self.ky_range
        n = self.nx if which == "x" else self.ny
        center = 0.5 * (lo + hi)
        step = (hi - lo) / (n - 1)
        return center + (np.arange(n) - (n - 1) / 2.0) * step


def eta(p: MicrocavityParams, comb: PumpComb, k: WaveVector2D) -> float:
    """Phase-matching function at a single wave vector.

    Double sum over comb pairs (m, n) of
    gamma^2 / ([E1(k) + E1(k_n + k_m - k) - E1(k_n) - E1(k_m)]^2 + gamma^2).
    Bounded by (2N+1)^2; at a pump point at least 4N+1 terms match exactly.
    """
    pumps = comb.pump_wavevectors(p)
    e_pump = [lower_branch_energy(p, kp) for kp in pumps]
    e_k = lower_branch_energy(p, k)
    g2 = comb.gamma**2
    total = 0.0
    for m, km in enumerate(pumps):
        for n, kn in enumerate(pumps):
            idler = WaveVector2D(kn.kx + km.kx - k.kx, kn.ky + km.ky - k.ky)
            mismatch = e_k + lower_branch_energy(p, idler) - e_pump[n] - e_pump[m]
            total += g2 / (mismatch * mismatch + g2)
    return total


@dataclass(frozen=True)
class EtaMap:
    """Grid evaluation of the phase-matching function (kx fastest-varying)."""

    kx: np.ndarray
    ky: np.ndarray
    values: np.ndarray  # shape (ny, nx)


def eta_map(p: MicrocavityParams, comb: PumpComb, g: GridSpec) -> EtaMap:
    """Evaluate eta at every grid node.

    The lower-branch dispersion on the shifted arguments k_n + k_m - k
    depends on the pair only through s = m + n, so those 4N+1 grids are
    computed once and reused; they dominate the cost.
    """
    kx = g.axis("x") * p.e_c
    ky = g.axis("y") * p.e_c
    kxg, kyg = np.meshgrid(kx, ky)

    nn = comb.n_lines
    k_pump = np.array([(comb.k0_ratio + n * comb.dk0_ratio) * p.e_c for n in range(-nn, nn + 1)])
    e_pump = _e1_grid(p, k_pump, np.zeros_like(k_pump))
    e_k = _e1_grid(p, kxg, kyg)

    # Shifted-argument energies keyed by s = m + n (k_n + k_m = (2 k0 + s dk0) e_x).
    e_shift = {}
    for s in range(-2 * nn, 2 * nn + 1):
        sx = (2.0 * comb.k0_ratio + s * comb.dk0_ratio) * p.e_c
        e_shift[s] = _e1_grid(p, sx - kxg, -kyg)

    g2 = comb.gamma**2
    total = np.zeros_like(e_k)
    for m in range(comb.n_modes):
        for n in range(comb.n_modes):
            s = (m - nn) + (n - nn)
            mismatch = e_k + e_shift[s] - e_pump[n] - e_pump[m]
            total += g2 / (mismatch * mismatch + g2)
    return EtaMap(kx=kx / p.e_c, ky=ky / p.e_c, values=total)


def _e1_grid(p: MicrocavityParams, kx, ky):
    """Vectorized lower-branch dispersion over arrays of (eV-unit) components."""
    k2 = np.asarray(kx) ** 2 + np.asarray(ky) ** 2
    ec = p.e_c * np.sqrt(1.0 + k2 / p.e_c**2)
    return 0.5 * (ec + p.e_x - np.sqrt((ec - p.e_x) ** 2 + 4.0 * p.hbar_omega**2))


def write_eta_csv(m: EtaMap, path) -> None:
    """Write the map as CSV rows kx,ky,eta with kx fastest-varying."""
    buf = io.StringIO()
    buf.write("kx,ky,eta\n")
    for iy, ky in enumerate(m.ky):
        for ix, kx in enumerate(m.kx):
            buf.write(f"{kx:.17g},{ky:.17g},{m.values[iy, ix]:.17g}\n")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(buf.getvalue())
