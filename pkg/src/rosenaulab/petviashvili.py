"""Solitary-wave profiles Q_c by Petviashvili fixed-point iteration.

A traveling wave u(x,t) = Q(x - ct) of the Rosenau equation satisfies

    c*Q'''' + (c-1)*Q = Q^{p+1}/(p+1),

or per Fourier mode (kappa the physical wavenumber)

    (c*kappa^4 + c - 1) * Q_hat = (Q^{p+1})_hat / (p+1).

The naive fixed-point map diverges or collapses to zero; the iteration is
stabilized by a power of the factor

    M_n = sum_k (c*kappa^4+c-1) |Q_hat|^2  /  [ (1/(p+1)) sum_k (Q^{p+1})_hat conj(Q_hat) ],

which equals 1 exactly at a fixed point:

    Q_hat_{n+1} = M_n^nu * (Q_n^{p+1})_hat / ((p+1)*(c*kappa^4 + c - 1)).

The default exponent nu = (p+1)/p is the classical optimum for a homogeneous
nonlinearity of degree p+1.  Convergence is monitored by three quantities:
the successive-iterate distance Error(n), the factor gap |1 - M_n|, and the
sup-norm residual RES(n) of the profile equation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .exceptions import ConfigurationError, NonConvergenceError
from .solver import _nodal_power
from .spectral import (Field, Grid, SpectralField, forward_dft, inverse_dft,
                       spectral_derivative)

__all__ = [
    "PetviashviliConfig",
    "IterationRecord",
    "SolitaryProfile",
    "stabilizing_factor",
    "iterate_once",
    "residual_operator",
    "solve_profile",
]

_AMPLITUDE_BOUND = 1e6


def default_initial_guess(grid: Grid) -> Field:
    """Unit-amplitude Gaussian centered on the grid midpoint."""
    mid = 0.5 * (grid.a + grid.b)
    return Field(grid=grid, values=np.exp(-((grid.nodes - mid) ** 2)))


@dataclass(frozen=True)
class PetviashviliConfig:
    """Iteration parameters; construction validates the linear denominator.

    Speeds with c*kappa^4 + c - 1 = 0 somewhere on the grid (notably c = 1,
    which zeroes the k = 0 entry) are rejected.  Speeds in (0, 1) make the
    denominator change sign across the grid; that is allowed but warned
    about, since no solitary wave is expected there.
    """

    c: float
    p: float
    grid: Grid
    nu: float | None = None
    initial_guess: Field | None = None
    tol_error: float = 1e-12
    tol_factor: float = 1e-10
    tol_residual: float = 1e-10
    max_iters: int = 200

    def __post_init__(self):
        if self.p <= 0:
            raise ConfigurationError(f"nonlinearity exponent must be positive, got p={self.p}")
        if self.max_iters < 1:
            raise ConfigurationError("max_iters must be at least 1")
        for name in ("tol_error", "tol_factor", "tol_residual"):
            if getattr(self, name) <= 0:
                raise ConfigurationError(f"{name} must be positive")
        den = self.denominator()
        if np.min(np.abs(den)) < 1e-10 * (1.0 + abs(self.c)):
            raise ConfigurationError(
                f"speed c={self.c} makes c*k^4 + c - 1 vanish on this grid "
                "(c = 1 always does, at k = 0); no iteration is possible")
        if np.min(den) < 0.0 < np.max(den):
            warnings.warn(
                f"c*k^4 + c - 1 changes sign on the grid for c={self.c}; "
                "no solitary wave is expected for speeds in (0, 1) and the "
                "iteration will likely collapse", stacklevel=2)
        if self.nu is None:
            object.__setattr__(self, "nu", (self.p + 1.0) / self.p)
        if self.initial_guess is None:
            object.__setattr__(self, "initial_guess", default_initial_guess(self.grid))
        elif self.initial_guess.grid != self.grid:
            raise ConfigurationError("initial guess lives on a different grid")

    def denominator(self) -> np.ndarray:
        kappa = self.grid.wavenumbers_physical()
        return self.c * kappa**4 + self.c - 1.0


@dataclass(frozen=True)
class IterationRecord:
    """Per-iteration diagnostics; error_max drives the stopping rule, the
    L2 distance is recorded alongside."""

    error_max: float
    error_l2: float
    factor_gap: float
    residual: float


@dataclass(frozen=True)
class SolitaryProfile:
    """Converged profile with its full diagnostic history."""

    Q: Field
    c: float
    p: float
    iterations: int
    history: tuple

    @property
    def residuals(self) -> np.ndarray:
        return np.array([r.residual for r in self.history])

    @property
    def errors(self) -> np.ndarray:
        return np.array([r.error_max for r in self.history])

    @property
    def factor_gaps(self) -> np.ndarray:
        return np.array([r.factor_gap for r in self.history])

    def peak_amplitude(self) -> float:
        return self.Q.max_abs()


def stabilizing_factor(Qhat: SpectralField, cfg: PetviashviliConfig) -> float:
    """Discrete M_n; conjugate pairing keeps both sums real for real Q."""
    den_op = cfg.denominator()
    coeffs = Qhat.coeffs
    numerator = np.sum(den_op * np.abs(coeffs) ** 2)
    q = (np.fft.ifft(coeffs) * cfg.grid.N).real
    w_hat = np.fft.fft(_nodal_power(q, cfg.p)) / cfg.grid.N
    pairing = np.sum(w_hat * np.conj(coeffs))
    if abs(pairing.imag) > 1e-10 * max(abs(pairing.real), 1e-300):
        raise ConfigurationError("stabilizing factor lost reality; input not a real field?")
    denominator = pairing.real
    if abs(denominator) < 1e-14 * abs(numerator):
        raise NonConvergenceError(
            "stabilizing-factor denominator degenerated (iterate collapsed to zero)",
            history=())
    return float(numerator / denominator)


def iterate_once(Qhat_n: SpectralField, cfg: PetviashviliConfig) -> SpectralField:
    """One stabilized fixed-point update in Fourier space."""
    M_n = stabilizing_factor(Qhat_n, cfg)
    q = (np.fft.ifft(Qhat_n.coeffs) * cfg.grid.N).real
    if np.max(np.abs(q)) > _AMPLITUDE_BOUND:
        raise NonConvergenceError(
            f"iterate exceeded amplitude bound {_AMPLITUDE_BOUND:g}", history=())
    w_hat = np.fft.fft(_nodal_power(q, cfg.p)) / cfg.grid.N
    if M_n < 0 and abs(cfg.nu - round(cfg.nu)) > 1e-12:
        raise NonConvergenceError(
            f"stabilizing factor {M_n:g} went negative with non-integer nu={cfg.nu}",
            history=())
    factor = abs(M_n) ** cfg.nu * (-1.0 if M_n < 0 and round(cfg.nu) % 2 else 1.0)
    return SpectralField(grid=cfg.grid, coeffs=factor * w_hat / cfg.denominator())


def residual_operator(Q: Field, c: float, p: float) -> Field:
    """R(Q) = c*Q'''' + (c-1)*Q - Q^{p+1}/(p+1), the profile-equation defect."""
    q4 = spectral_derivative(Q, 4)
    values = c * q4.values + (c - 1.0) * Q.values - _nodal_power(Q.values, p)
    return Field(grid=Q.grid, values=values)


def _recenter(Q: Field) -> Field:
    """Shift the dominant peak onto the grid midpoint (translation is free)."""
    idx = int(np.argmax(np.abs(Q.values)))
    return Field(grid=Q.grid, values=np.roll(Q.values, Q.grid.N // 2 - idx))


def solve_profile(cfg: PetviashviliConfig) -> SolitaryProfile:
    """Iterate to convergence; the profile is recentred before it is returned.

    Convergence requires all three monitors below their tolerances.  On
    failure raises ``NonConvergenceError`` carrying the history collected so
    far (the c in (0, 1) collapse shows up here as a degenerate denominator
    or an exhausted iteration budget).
    """
    if cfg.initial_guess.max_abs() == 0.0:
        raise ConfigurationError("initial guess must not be identically zero")
    Q_prev = cfg.initial_guess
    Qhat = forward_dft(Q_prev)
    history: list[IterationRecord] = []
    for n in range(1, cfg.max_iters + 1):
        M_n = stabilizing_factor(Qhat, cfg)
        try:
            Qhat = iterate_once(Qhat, cfg)
        except NonConvergenceError as err:
            raise NonConvergenceError(str(err), history=tuple(history)) from None
        Q = inverse_dft(Qhat)
        diff = Q.values - Q_prev.values
        rec = IterationRecord(
            error_max=float(np.max(np.abs(diff))),
            error_l2=float(np.sqrt(cfg.grid.dx * np.sum(diff**2))),
            factor_gap=abs(1.0 - M_n),
            residual=residual_operator(Q, cfg.c, cfg.p).max_abs(),
        )
        history.append(rec)
        if (rec.error_max < cfg.tol_error and rec.factor_gap < cfg.tol_factor
                and rec.residual < cfg.tol_residual):
            return SolitaryProfile(Q=_recenter(Q), c=cfg.c, p=cfg.p,
                                   iterations=n, history=tuple(history))
        Q_prev = Q
    raise NonConvergenceError(
        f"no convergence within {cfg.max_iters} iterations "
        f"(last: error={history[-1].error_max:.3e}, "
        f"|1-M|={history[-1].factor_gap:.3e}, RES={history[-1].residual:.3e})",
        history=tuple(history))
