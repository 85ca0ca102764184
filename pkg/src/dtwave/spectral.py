"""Fourier machinery for 2*tau-periodic wave profiles.

A profile phi(xi) is stored as a truncated complex Fourier series

    phi(xi) = sum_{n=-N..N} coeff_n * exp(i n pi xi / tau)

with coefficients on the signed index set -N..N.  Wrapped (FFT) ordering is
used only internally when transforming; all public formulas index n over
signed integers.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

__all__ = [
    "WaveParams",
    "FourierWave",
    "dft",
    "idft",
    "wave_from_samples",
    "write_wave_csv",
    "read_wave_csv",
]

#: relative tolerance for the Hermitian-symmetry (real-valuedness) check
HERMITIAN_TOL = 1e-12


@dataclass(frozen=True)
class WaveParams:
    """Travelling-wave discretization parameters.

    c is the wave speed, sigma the space step, kappa = c*dt the step along
    the wave coordinate, tau the half-period of the sought profile.
    """

    c: float
    sigma: float
    kappa: float
    tau: float

    def __post_init__(self):
        for name in ("sigma", "kappa", "tau"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive")

    @property
    def period(self) -> float:
        return 2.0 * self.tau

    def require_subcharacteristic(self):
        if self.c**2 == 1.0:
            raise ValueError("wave speed c with c^2 = 1 is degenerate here")


class FourierWave:
    """Truncated complex Fourier series of a real 2*tau-periodic profile."""

    def __init__(self, tau: float, coeffs):
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.ndim != 1 or coeffs.size % 2 != 1:
            raise ValueError("coeffs must be a 1-d array of odd length 2N+1")
        if not tau > 0.0:
            raise ValueError("tau must be positive")
        self.tau = float(tau)
        self.coeffs = coeffs

    # -- indexing -----------------------------------------------------------

    @property
    def n_max(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def n_values(self) -> np.ndarray:
        n = self.n_max
        return np.arange(-n, n + 1)

    def coeff(self, n: int) -> complex:
        if abs(n) > self.n_max:
            return 0.0 + 0.0j
        return complex(self.coeffs[n + self.n_max])

    @property
    def period(self) -> float:
        return 2.0 * self.tau

    # -- reality / symmetry -------------------------------------------------

    def hermitian_defect(self) -> float:
        """max |coeff(-n) - conj(coeff(n))|, zero for a real-valued profile."""
        return float(np.max(np.abs(self.coeffs[::-1] - np.conj(self.coeffs))))

    def require_hermitian(self, tol: float = HERMITIAN_TOL):
        scale = float(np.max(np.abs(self.coeffs))) if self.coeffs.size else 0.0
        if scale and self.hermitian_defect() > tol * scale:
            raise ValueError("coefficients are not Hermitian-symmetric: "
                             "the represented profile is not real-valued")

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, xi, *, check: bool = True):
        """Evaluate the profile at arbitrary xi by direct summation.

        Off-grid points are needed (resonance windows, shifted stencils), so
        no grid interpolation is attempted.  The paired n/-n terms are summed
        in explicitly real form, so the result is real by construction.
        """
        if check:
            self.require_hermitian()
        xi_arr = np.atleast_1d(np.asarray(xi, dtype=float))
        out = np.full(xi_arr.shape, float(np.real(self.coeffs[self.n_max])))
        n_max = self.n_max
        # chunk the mode loop to bound the (modes x points) work arrays
        block = max(1, 2**22 // max(xi_arr.size, 1))
        for start in range(1, n_max + 1, block):
            n = np.arange(start, min(start + block, n_max + 1))
            c = self.coeffs[n + n_max]
            ang = np.outer(xi_arr, n) * (np.pi / self.tau)
            out += 2.0 * (np.cos(ang) @ np.real(c) - np.sin(ang) @ np.imag(c))
        return out if np.ndim(xi) else float(out[0])

    def sample(self, m: int, *, check: bool = True) -> np.ndarray:
        """Values on the uniform grid xi_j = j * 2 tau / m via a padded FFT."""
        if m < self.coeffs.size:
            raise ValueError("m must be at least 2N+1")
        if check:
            self.require_hermitian()
        wrapped = np.zeros(m, dtype=complex)
        n = self.n_values
        wrapped[np.mod(n, m)] = self.coeffs
        return np.real(m * np.fft.ifft(wrapped))

    def grid(self, m: int) -> np.ndarray:
        return np.arange(m) * (self.period / m)

    # -- calculus -----------------------------------------------------------

    def derivative(self, order: int = 1) -> "FourierWave":
        """Differentiate by multiplying coefficients with (i n pi / tau)^order."""
        if order < 1 or order > 4:
            raise ValueError("order must be in 1..4")
        factor = (1j * self.n_values * np.pi / self.tau) ** order
        return FourierWave(self.tau, self.coeffs * factor)

    def mean(self) -> float:
        return float(np.real(self.coeffs[self.n_max]))

    def tail_max(self, fraction: float = 0.9) -> float:
        """max |coeff_n| over the trailing index band fraction*N < |n| <= N."""
        n_max = self.n_max
        cut = int(np.floor(fraction * n_max))
        mask = np.abs(self.n_values) > cut
        if not np.any(mask):
            return 0.0
        return float(np.max(np.abs(self.coeffs[mask])))


def dft(values) -> np.ndarray:
    """Forward transform X_k = sum_j values_j exp(-2 pi i j k / M)."""
    return np.fft.fft(np.asarray(values))


def idft(values) -> np.ndarray:
    return np.fft.ifft(np.asarray(values))


def wave_from_samples(values, tau: float) -> FourierWave:
    """Fit the (2N+1 = len(values))-term series interpolating uniform samples."""
    values = np.asarray(values)
    m = values.size
    if m % 2 != 1:
        raise ValueError("need an odd number of samples")
    wrapped = dft(values) / m
    n_max = (m - 1) // 2
    coeffs = np.empty(m, dtype=complex)
    n = np.arange(-n_max, n_max + 1)
    coeffs[:] = wrapped[np.mod(n, m)]
    return FourierWave(tau, coeffs)


def write_wave_csv(wave: FourierWave, path) -> None:
    """Serialize as CSV columns (n, re, im); the header records tau and N."""
    n = wave.n_values
    data = np.column_stack([n, np.real(wave.coeffs), np.imag(wave.coeffs)])
    header = f"tau={wave.tau:.17g} n_max={wave.n_max}\nn,re,im"
    np.savetxt(path, data, fmt=["%d", "%.17g", "%.17g"], delimiter=",",
               header=header, comments="# ")


def read_wave_csv(path) -> FourierWave:
    if isinstance(path, (str, bytes)) or hasattr(path, "__fspath__"):
        with open(path) as fh:
            return read_wave_csv(fh)
    first = path.readline()
    if not first.startswith("#"):
        raise ValueError("missing header line with tau")
    fields = dict(tok.split("=") for tok in first[1:].split())
    tau = float(fields["tau"])
    data = np.loadtxt(path, delimiter=",", comments="#",
                      skiprows=1, ndmin=2)
    order = np.argsort(data[:, 0])
    coeffs = data[order, 1] + 1j * data[order, 2]
    return FourierWave(tau, coeffs)
