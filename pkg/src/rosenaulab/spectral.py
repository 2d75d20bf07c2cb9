"""Periodic grid, discrete Fourier transforms and spectral calculus.

Transform convention (used everywhere in this package):

    forward:   u_hat[k] = (1/N) * sum_j u[j] * exp(-i k X_j)
    inverse:   u[j]     = sum_k u_hat[k] * exp(+i k X_j)

with X_j = 2*pi*j/N the normalized nodes and integer wavenumbers k stored in
transform-native (wrapped) order 0, 1, ..., N/2-1, -N/2, ..., -1.  numpy's
``fft``/``ifft`` are wrapped to match: the DC coefficient of a constant field C
equals C.  Physical-space derivatives on [a, b] carry the chain-rule factor
``scale = 2*pi/(b-a)`` per derivative order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigurationError, SymmetryError

__all__ = [
    "Grid",
    "Field",
    "SpectralField",
    "make_grid",
    "forward_dft",
    "inverse_dft",
    "spectral_derivative",
    "quadrature",
    "translate",
    "resample",
]

# Imaginary residue larger than this fraction of the field norm means the
# spectrum did not represent real data.
_IMAG_TOL = 1e-10


def _freeze(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class Grid:
    """Uniform periodic grid on [a, b) with N nodes.

    Attributes
    ----------
    a, b : float
        Domain endpoints, b > a.  The right endpoint is excluded (periodicity).
    N : int
        Even node count, N >= 4.
    nodes : ndarray
        x_j = a + j*(b-a)/N, strictly increasing, x_0 = a.
    wavenumbers : ndarray
        Integer wavenumbers in transform-native order.
    scale : float
        2*pi/(b-a); one factor per derivative order maps normalized to
        physical derivatives.
    """

    a: float
    b: float
    N: int
    nodes: np.ndarray
    wavenumbers: np.ndarray
    scale: float

    @property
    def dx(self) -> float:
        return (self.b - self.a) / self.N

    @property
    def length(self) -> float:
        return self.b - self.a

    def wavenumbers_physical(self) -> np.ndarray:
        """Physical (dimensional) wavenumbers scale*k in native order."""
        return self.scale * self.wavenumbers

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Grid)
            and self.a == other.a
            and self.b == other.b
            and self.N == other.N
        )

    def __hash__(self):
        return hash((self.a, self.b, self.N))


def make_grid(a: float, b: float, N: int) -> Grid:
    """Build the periodic grid for [a, b] with N nodes.

    Raises
    ------
    ConfigurationError
        If b <= a, N is odd, or N < 4.
    """
    if not b > a:
        raise ConfigurationError(f"domain endpoints must satisfy b > a, got a={a}, b={b}")
    if N % 2 != 0:
        raise ConfigurationError(f"node count N must be even, got N={N}")
    if N < 4:
        raise ConfigurationError(f"node count N must be at least 4, got N={N}")
    dx = (b - a) / N
    nodes = a + dx * np.arange(N)
    # fftfreq(N, 1/N) yields the integer wavenumbers in wrapped order
    wavenumbers = np.fft.fftfreq(N, d=1.0 / N).astype(np.int64)
    scale = 2.0 * np.pi / (b - a)
    return Grid(a=float(a), b=float(b), N=int(N), nodes=_freeze(nodes),
                wavenumbers=_freeze(wavenumbers), scale=scale)


@dataclass(frozen=True)
class Field:
    """Real nodal values on a grid."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.shape != (self.grid.N,):
            raise ConfigurationError(
                f"field has {values.shape} values, grid expects ({self.grid.N},)")
        if not np.all(np.isfinite(values)):
            raise ConfigurationError("field values must be finite")
        object.__setattr__(self, "values", _freeze(values))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))


@dataclass(frozen=True)
class SpectralField:
    """Complex Fourier coefficients on a grid, transform-native ordering."""

    grid: Grid
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=np.complex128)
        if coeffs.shape != (self.grid.N,):
            raise ConfigurationError(
                f"spectrum has {coeffs.shape} coefficients, grid expects ({self.grid.N},)")
        object.__setattr__(self, "coeffs", _freeze(coeffs))

    def conjugate_symmetry_defect(self) -> float:
        """Max |u_hat[-k] - conj(u_hat[k])| relative to the largest coefficient."""
        c = self.coeffs
        defect = np.max(np.abs(c[_reflect_index(self.grid.N)] - np.conj(c)))
        norm = np.max(np.abs(c))
        return float(defect / norm) if norm > 0 else 0.0


def _reflect_index(N: int) -> np.ndarray:
    # index of mode -k for each native slot k; Nyquist (-N/2) maps to itself
    return (-np.arange(N)) % N


def _symmetrize(coeffs: np.ndarray) -> np.ndarray:
    """Project onto the conjugate-symmetric subspace (real-field spectra)."""
    return 0.5 * (coeffs + np.conj(coeffs[_reflect_index(len(coeffs))]))


def forward_dft(f: Field) -> SpectralField:
    """Forward transform with the 1/N normalization.

    The result of transforming real data is conjugate-symmetric by
    construction; a defect above 1e-13 relative indicates corrupted input and
    raises ``SymmetryError``.
    """
    coeffs = np.fft.fft(f.values) / f.grid.N
    out = SpectralField(grid=f.grid, coeffs=coeffs)
    if out.conjugate_symmetry_defect() > 1e-13:
        raise SymmetryError("transform of real data lost conjugate symmetry")
    return out


def inverse_dft(s: SpectralField) -> Field:
    """Inverse transform back to real nodal values.

    Imaginary residue below 1e-10 of the field norm is discarded; anything
    larger means the coefficients do not represent a real field.
    """
    u = np.fft.ifft(s.coeffs) * s.grid.N
    re = u.real
    imag_max = float(np.max(np.abs(u.imag)))
    norm = float(np.max(np.abs(re)))
    if imag_max > _IMAG_TOL * max(norm, 1e-300):
        raise SymmetryError(
            f"imaginary residue {imag_max:.3e} exceeds {_IMAG_TOL:g} of field norm {norm:.3e}")
    return Field(grid=s.grid, values=re)


def spectral_derivative(f: Field, order: int) -> Field:
    """d^order/dx^order of a periodic field, computed in Fourier space.

    Supports orders 1..4.  For odd orders the Nyquist mode is zeroed so the
    derivative of a real field stays real (its (i*k)^odd factor has no
    conjugate partner on an even grid).
    """
    if order not in (1, 2, 3, 4):
        raise ConfigurationError(f"derivative order must be in 1..4, got {order}")
    grid = f.grid
    symbol = (1j * grid.wavenumbers_physical()) ** order
    coeffs = np.fft.fft(f.values) / grid.N * symbol
    if order % 2 == 1:
        coeffs[grid.N // 2] = 0.0
    # the symbol amplifies transform round-off asymmetry by kappa^order;
    # project back so reality of the result is structural
    return inverse_dft(SpectralField(grid=grid, coeffs=_symmetrize(coeffs)))


def quadrature(f: Field) -> float:
    """Integral of f over [a, b]: the periodic rectangle rule dx * sum(f).

    Spectrally accurate for smooth periodic integrands.
    """
    return float(f.grid.dx * np.sum(f.values))


def translate(f: Field, delta: float) -> Field:
    """f(x - delta) by Fourier phase shift; exact for grid-resolved fields.

    The Nyquist mode is given the real (cosine) interpretation so the result
    stays real for arbitrary (non-grid-aligned) shifts.
    """
    grid = f.grid
    coeffs = np.fft.fft(f.values) / grid.N
    phase = np.exp(-1j * grid.wavenumbers_physical() * delta)
    # cosine convention for the unpaired Nyquist mode
    nyq = grid.N // 2
    phase[nyq] = np.cos(grid.wavenumbers_physical()[nyq] * delta)
    return inverse_dft(SpectralField(grid=grid, coeffs=coeffs * phase))


def resample(f: Field, N_new: int) -> Field:
    """Resample onto a grid with N_new nodes by trigonometric interpolation.

    Up-sampling zero-pads the spectrum (with Nyquist splitting); down-sampling
    evaluates the interpolant at the new nodes, which on nested grids
    coincides with subsampling.
    """
    grid = f.grid
    if N_new == grid.N:
        return f
    new_grid = make_grid(grid.a, grid.b, N_new)
    if N_new > grid.N:
        old = np.fft.fft(f.values) / grid.N
        padded = np.zeros(N_new, dtype=np.complex128)
        half = grid.N // 2
        padded[:half] = old[:half]
        # split the old Nyquist coefficient between +half and -half
        padded[half] = 0.5 * old[half]
        padded[N_new - half] = 0.5 * np.conj(old[half])
        padded[N_new - half + 1:] = old[half + 1:]
        return inverse_dft(SpectralField(grid=new_grid, coeffs=padded))
    coeffs = np.fft.fft(f.values) / grid.N
    X_new = 2.0 * np.pi * np.arange(N_new) / N_new
    basis = np.exp(1j * np.outer(X_new, grid.wavenumbers))
    u = basis @ coeffs
    imag_max = float(np.max(np.abs(u.imag)))
    norm = float(np.max(np.abs(u.real)))
    if imag_max > _IMAG_TOL * max(norm, 1e-300):
        raise SymmetryError("resampling produced a non-real field")
    return Field(grid=new_grid, values=u.real)
