"""Closed-form periodic traveling-wave solutions of the quadratic equation

    u_t + u_x + (u^2)_x + u_xxxxt = 0.

The traveling ansatz u(x,t) = F(xi), xi = k*x - c*t, with

    F = a0 + a2*phi^2 + a4*phi^4,     (phi')^2 = c0 + c2*phi^2 + c4*phi^4 = P(phi)

closes when

    a0 = (112*c*c2^2*k^4 + c - k)/(2k),   a2 = 560*c*c2*c4*k^3,
    a4 = 840*c*c4^2*k^3,                  c0 = 2*c2^2/(9*c4),

leaving c2, c4 (and the phase xi0) free.  The quartic P factors differently
depending on the signs of c2 and c4, giving one rational case and six
elliptic-function cases:

    I    c2 = 0, c4 > 0    phi = eps/(sqrt(c4)*(xi - xi0))        (rational)
    IIa  c4 > 0, c2 < 0    phi above the largest root, singular
    IIb  c4 > 0, c2 < 0    phi between the middle roots, smooth
    IIc  c4 > 0, c2 < 0    phi below the smallest root, singular
    IId  c4 < 0, c2 > 0    phi in [phi4, phi3], smooth
    IIe  c4 < 0, c2 > 0    phi in [phi2, phi1], smooth
    IIf  c4 > 0, c2 > 0    no real roots: phi = b*tn(...), singular

with roots phi1 = sqrt(-2c2/3c4) = -phi4, phi2 = sqrt(-c2/3c4) = -phi3.

Pole convention: rational-denominator poles (IIa, IIc) are tagged NaN;
tn poles (IIf) are tagged signed infinities.  No exceptions -- callers
plotting the singular cases need the pole locations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .exceptions import ConfigurationError
from .jacobi import ellipk, sn_cn_dn, tn

__all__ = [
    "EllipticCase",
    "EllipticCaseParams",
    "derive_case_params",
    "evaluate_phi",
    "evaluate_solution",
    "phi_period",
    "ode_residual_phi",
    "pde_residual",
    "integrated_ode_residual",
]

_SQRT2 = math.sqrt(2.0)

# Moduli and root ratios are scale-invariant within each case family.
_MODULUS_ABC = 2.0 * math.sqrt(3.0 * _SQRT2 - 4.0)   # 0.985171...
_MODULUS_DE = 3.0 - 2.0 * _SQRT2                     # 0.171573...
_MODULUS_F = 1.0 / _SQRT2

_POLE_DEN_TOL = 1e-12


class EllipticCase(Enum):
    I = "I"
    IIA = "IIa"
    IIB = "IIb"
    IIC = "IIc"
    IID = "IId"
    IIE = "IIe"
    IIF = "IIf"

    @classmethod
    def from_label(cls, label: str) -> "EllipticCase":
        for case in cls:
            if case.value.lower() == label.lower():
                return case
        raise ConfigurationError(
            f"unknown case {label!r}; expected one of {[c.value for c in cls]}")


@dataclass(frozen=True)
class EllipticCaseParams:
    """Free constants of one case together with every derived quantity.

    ``roots``, ``m``, ``g`` and ``R`` are None where the case has no use for
    them (Case I has only the quadruple root at zero; IIf has no root ratio).
    """

    case: EllipticCase
    c: float
    k: float
    c2: float
    c4: float
    xi0: float
    epsilon: int
    a0: float
    a2: float
    a4: float
    c0: float
    roots: tuple | None
    m: float | None
    g: float | None
    R: float | None


def _check_signs(case: EllipticCase, c2: float, c4: float) -> None:
    if case is EllipticCase.I:
        if c2 != 0.0:
            raise ConfigurationError(f"case I requires c2 = 0, got c2={c2}")
        if c4 <= 0.0:
            raise ConfigurationError(f"case I requires c4 > 0, got c4={c4}")
    elif case in (EllipticCase.IIA, EllipticCase.IIB, EllipticCase.IIC):
        if c4 <= 0.0:
            raise ConfigurationError(f"case {case.value} requires c4 > 0, got c4={c4}")
        if c2 >= 0.0:
            raise ConfigurationError(f"case {case.value} requires c2 < 0, got c2={c2}")
    elif case in (EllipticCase.IID, EllipticCase.IIE):
        if c4 >= 0.0:
            raise ConfigurationError(f"case {case.value} requires c4 < 0, got c4={c4}")
        if c2 <= 0.0:
            raise ConfigurationError(f"case {case.value} requires c2 > 0, got c2={c2}")
    else:  # IIf
        if c4 <= 0.0:
            raise ConfigurationError(f"case IIf requires c4 > 0, got c4={c4}")
        if c2 <= 0.0:
            raise ConfigurationError(f"case IIf requires c2 > 0, got c2={c2}")


def derive_case_params(case: EllipticCase, c: float, k: float, c2: float,
                       c4: float, xi0: float = 0.0,
                       epsilon: int = 1) -> EllipticCaseParams:
    """Fill in every derived constant for one case.

    Raises ``ConfigurationError`` when k = 0, epsilon is not +-1, or the
    case's sign constraints on (c2, c4) are violated.
    """
    if isinstance(case, str):
        case = EllipticCase.from_label(case)
    if k == 0.0:
        raise ConfigurationError("wavenumber k must be nonzero")
    if epsilon not in (1, -1):
        raise ConfigurationError(f"epsilon must be +1 or -1, got {epsilon}")
    _check_signs(case, c2, c4)

    a0 = (112.0 * c * c2**2 * k**4 + c - k) / (2.0 * k)
    a2 = 560.0 * c * c2 * c4 * k**3
    a4 = 840.0 * c * c4**2 * k**3
    c0 = 2.0 * c2**2 / (9.0 * c4)

    roots = m = g = R = None
    if case in (EllipticCase.IIA, EllipticCase.IIB, EllipticCase.IIC,
                EllipticCase.IID, EllipticCase.IIE):
        phi1 = math.sqrt(-2.0 * c2 / (3.0 * c4))
        phi2 = math.sqrt(-c2 / (3.0 * c4))
        roots = (phi1, phi2, -phi2, -phi1)
        g = 2.0 * (_SQRT2 - 1.0) * math.sqrt(-3.0 * c4 / c2)
        if case in (EllipticCase.IIA, EllipticCase.IIC):
            m, R = _MODULUS_ABC, 4.0 - 2.0 * _SQRT2
        elif case is EllipticCase.IIB:
            m, R = _MODULUS_ABC, 2.0 * (_SQRT2 - 1.0)
        else:
            m, R = _MODULUS_DE, 3.0 - 2.0 * _SQRT2
    elif case is EllipticCase.IIF:
        b = math.sqrt(c2 / (3.0 * c4))
        a = math.sqrt(2.0 * c2 / (3.0 * c4))
        roots = (1j * a, 1j * b, -1j * b, -1j * a)
        g = math.sqrt(3.0 * c4 / (2.0 * c2))
        m = _MODULUS_F

    params = EllipticCaseParams(case=case, c=c, k=k, c2=c2, c4=c4, xi0=xi0,
                                epsilon=epsilon, a0=a0, a2=a2, a4=a4, c0=c0,
                                roots=roots, m=m, g=g, R=R)
    # structural identity of the coefficient system
    assert abs(params.c0 * c4 - 2.0 * c2**2 / 9.0) <= 1e-12 * max(1.0, abs(c2) ** 2)
    return params


def evaluate_phi(params: EllipticCaseParams, xi):
    """phi(xi) for one case; poles tagged NaN (rational) or +-inf (tn)."""
    xi = np.asarray(xi, dtype=np.float64)
    case = params.case
    dxi = xi - params.xi0

    if case is EllipticCase.I:
        den = math.sqrt(params.c4) * dxi
        with np.errstate(divide="ignore"):
            phi = np.where(np.abs(den) < _POLE_DEN_TOL, np.nan,
                           params.epsilon / np.where(den == 0, 1.0, den))
        return phi if xi.ndim else float(phi)

    if case is EllipticCase.IIF:
        b = math.sqrt(params.c2 / (3.0 * params.c4))
        w = math.sqrt(2.0 * params.c2 / 3.0)
        phi = b * tn(w * dxi, params.m)
        return phi if xi.ndim else float(phi)

    phi1, phi2, phi3, phi4 = params.roots
    R = params.R
    if case in (EllipticCase.IIA, EllipticCase.IIB, EllipticCase.IIC):
        w = math.sqrt(params.c4) / params.g
    else:
        w = math.sqrt(-params.c4) / params.g
    s2 = sn_cn_dn(w * dxi, params.m)[0] ** 2

    if case is EllipticCase.IIA:
        num, den = phi1 - phi2 * R * s2, 1.0 - R * s2
    elif case is EllipticCase.IIB:
        num, den = phi2 - phi1 * R * s2, 1.0 - R * s2
    elif case is EllipticCase.IIC:
        num, den = phi4 - phi3 * R * s2, 1.0 - R * s2
    elif case is EllipticCase.IID:
        num, den = phi4 + phi1 * R * s2, 1.0 + R * s2
    else:  # IIE: sweeps [phi2, phi1]; the sign on the phi3 term makes the
        # sweep non-degenerate (a "+" would collapse phi to the constant phi2)
        num, den = phi2 - phi3 * R * s2, 1.0 - R * s2

    num = np.asarray(num, dtype=np.float64)
    den = np.asarray(den, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        phi = np.where(np.abs(den) < _POLE_DEN_TOL, np.nan, num / den)
    return phi if xi.ndim else float(phi)


def evaluate_solution(params: EllipticCaseParams, x, t: float = 0.0):
    """u(x, t) = a0 + a2*phi^2 + a4*phi^4 at xi = k*x - c*t; tags propagate."""
    xi = params.k * np.asarray(x, dtype=np.float64) - params.c * t
    phi = evaluate_phi(params, xi)
    return params.a0 + params.a2 * phi**2 + params.a4 * phi**4


def phi_period(params: EllipticCaseParams) -> float:
    """Fundamental period of phi in xi (sn^2 and tn both have period 2K)."""
    case = params.case
    if case is EllipticCase.I:
        raise ConfigurationError("case I is rational, not periodic")
    if case is EllipticCase.IIF:
        return 2.0 * ellipk(params.m) / math.sqrt(2.0 * params.c2 / 3.0)
    w = math.sqrt(abs(params.c4)) / params.g
    return 2.0 * ellipk(params.m) / w


def _poly_p(params: EllipticCaseParams, phi):
    return params.c0 + params.c2 * phi**2 + params.c4 * phi**4


def ode_residual_phi(params: EllipticCaseParams, xi_samples,
                     h: float = 1e-5) -> float:
    """max |(phi')^2 - P(phi)| with phi' from a 5-point stencil.

    Samples must keep clear of poles (the spec margin is 1e-3 in xi); a
    non-finite stencil value raises ``ConfigurationError``.
    """
    xi = np.asarray(xi_samples, dtype=np.float64)
    offsets = np.array([-2.0, -1.0, 0.0, 1.0, 2.0]) * h
    weights = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / (12.0 * h)
    stencil = evaluate_phi(params, xi[:, None] + offsets[None, :])
    if not np.all(np.isfinite(stencil)):
        raise ConfigurationError("stencil touched a pole; move samples away")
    dphi = stencil @ weights
    phi0 = stencil[:, 2]
    return float(np.max(np.abs(dphi**2 - _poly_p(params, phi0))))


# ---------------------------------------------------------------------------
# Extended-precision finite-difference oracles.
#
# Five nested derivatives (u_xxxxt) amplify double-precision noise by
# ~1/(hx^4*ht); at any step size the composite error floor sits orders of
# magnitude above the stated tolerances.  The residual checks therefore
# re-evaluate the printed formulas with mpmath (independent sn/cn/dn too),
# so the check verifies the mathematics rather than float64 round-off.
# ---------------------------------------------------------------------------

# (offset, numerator, denominator): weights stay exact rationals so the
# extended-precision path is not polluted by double round-off after the
# 1/h^4 amplification.
_D1_5 = [(-2, 1, 12), (-1, -8, 12), (1, 8, 12), (2, -1, 12)]
_D2_5 = [(-2, -1, 12), (-1, 16, 12), (0, -30, 12), (1, 16, 12), (2, -1, 12)]
_D3_7 = [(-3, 1, 8), (-2, -8, 8), (-1, 13, 8), (1, -13, 8), (2, 8, 8), (3, -1, 8)]
_D4_7 = [(-3, -1, 6), (-2, 12, 6), (-1, -39, 6), (0, 56, 6),
         (1, -39, 6), (2, 12, 6), (3, -1, 6)]


def _mp_weights(table, mpf):
    return [(j, mpf(num) / den) for j, num, den in table]


def _mp_solution_factory(params: EllipticCaseParams, mp):
    """u(x, t) evaluator over mpmath reals, rebuilt from the case constants."""
    c, k = mp.mpf(params.c), mp.mpf(params.k)
    c2, c4 = mp.mpf(params.c2), mp.mpf(params.c4)
    xi0 = mp.mpf(params.xi0)
    a0 = (112 * c * c2**2 * k**4 + c - k) / (2 * k)
    a2 = 560 * c * c2 * c4 * k**3
    a4 = 840 * c * c4**2 * k**3
    case = params.case

    if case is EllipticCase.I:
        def phi(xi):
            return params.epsilon / (mp.sqrt(c4) * (xi - xi0))
    elif case is EllipticCase.IIF:
        b = mp.sqrt(c2 / (3 * c4))
        w = mp.sqrt(2 * c2 / 3)
        msq = mp.mpf(1) / 2

        def phi(xi):
            u = w * (xi - xi0)
            return b * mp.ellipfun("sn", u, msq) / mp.ellipfun("cn", u, msq)
    else:
        phi1 = mp.sqrt(-2 * c2 / (3 * c4))
        phi2 = mp.sqrt(-c2 / (3 * c4))
        g = 2 * (mp.sqrt(2) - 1) * mp.sqrt(-3 * c4 / c2)
        if case in (EllipticCase.IIA, EllipticCase.IIB, EllipticCase.IIC):
            msq = 4 * (3 * mp.sqrt(2) - 4)
            w = mp.sqrt(c4) / g
        else:
            msq = (3 - 2 * mp.sqrt(2)) ** 2
            w = mp.sqrt(-c4) / g
        if case is EllipticCase.IIA:
            Rv, top, bot = 4 - 2 * mp.sqrt(2), phi1, -phi2
        elif case is EllipticCase.IIB:
            Rv, top, bot = 2 * (mp.sqrt(2) - 1), phi2, -phi1
        elif case is EllipticCase.IIC:
            Rv, top, bot = 4 - 2 * mp.sqrt(2), -phi1, phi2
        elif case is EllipticCase.IID:
            Rv, top, bot = 3 - 2 * mp.sqrt(2), -phi1, phi1
        else:  # IIE
            Rv, top, bot = 3 - 2 * mp.sqrt(2), phi2, phi2

        sign = -1 if case is EllipticCase.IID else 1

        def phi(xi):
            s2 = mp.ellipfun("sn", w * (xi - xi0), msq) ** 2
            return (top + bot * Rv * s2) / (1 - sign * Rv * s2)

    def u(x, t):
        p = phi(k * x - c * t)
        return a0 + a2 * p**2 + a4 * p**4

    return u


def pde_residual(params: EllipticCaseParams, x_window, t: float = 0.0,
                 hx: float = 1e-3, ht: float = 1e-3, dps: int = 40) -> float:
    """End-to-end check: max |u_t + u_x + (u^2)_x + u_xxxxt| on the window.

    All terms come from centered finite differences of the composed solution
    on a local (x, t) stencil; evaluation runs at ``dps`` decimal digits (see
    module note).  The window must exclude poles.
    """
    import mpmath

    with mpmath.workdps(dps):
        u = _mp_solution_factory(params, mpmath)
        d1 = _mp_weights(_D1_5, mpmath.mpf)
        d4 = _mp_weights(_D4_7, mpmath.mpf)
        hx_, ht_ = mpmath.mpf(hx), mpmath.mpf(ht)
        t_ = mpmath.mpf(t)
        worst = mpmath.mpf(0)
        for x in np.asarray(x_window, dtype=np.float64):
            x_ = mpmath.mpf(float(x))
            u00 = u(x_, t_)
            u_x = sum(wt * u(x_ + j * hx_, t_) for j, wt in d1) / hx_
            u_t = sum(wt * u(x_, t_ + j * ht_) for j, wt in d1) / ht_

            def u4x(tv):
                return sum(wt * u(x_ + j * hx_, tv) for j, wt in d4) / hx_**4

            u_xxxxt = sum(wt * u4x(t_ + j * ht_) for j, wt in d1) / ht_
            res = abs(u_t + u_x + 2 * u00 * u_x + u_xxxxt)
            worst = max(worst, res)
        return float(worst)


def integrated_ode_residual(params: EllipticCaseParams, xi_samples,
                            h: float = 1e-4, dps: int = 40) -> float:
    """Residual of the twice-integrated traveling-wave equation

        c*k^4*(F'''*F' - (F'')^2/2) - (k/3)*F^3 + ((c-k)/2)*F^2 + K1*F + K0

    where the integration constants K0, K1 are recomputed from their closed
    forms (they depend on c, k, c2 only).  Extended precision as above.
    """
    import mpmath

    with mpmath.workdps(dps):
        c, k = mpmath.mpf(params.c), mpmath.mpf(params.k)
        c2 = mpmath.mpf(params.c2)
        K1 = (18 * c * k - 9 * k**2 + c**2 * (41216 * c2**4 * k**8 - 9)) / (36 * k)
        K0 = (c / 8 + c**3 / (24 * k**2) - c**2 / (8 * k) - k / 24
              - mpmath.mpf(5152) / 9 * c**2 * c2**4 * k**6 * (c - k)
              + mpmath.mpf(2057216) / 81 * c**3 * c2**6 * k**10)
        u = _mp_solution_factory(params, mpmath)
        d1 = _mp_weights(_D1_5, mpmath.mpf)
        d2 = _mp_weights(_D2_5, mpmath.mpf)
        d3 = _mp_weights(_D3_7, mpmath.mpf)
        h_ = mpmath.mpf(h)

        def F(xi):
            # u(x, 0) with x = xi/k evaluates F(xi)
            return u(xi / k, mpmath.mpf(0))

        worst = mpmath.mpf(0)
        for xi in np.asarray(xi_samples, dtype=np.float64):
            xi_ = mpmath.mpf(float(xi))
            F0 = F(xi_)
            F1 = sum(wt * F(xi_ + j * h_) for j, wt in d1) / h_
            F2 = sum(wt * F(xi_ + j * h_) for j, wt in d2) / h_**2
            F3 = sum(wt * F(xi_ + j * h_) for j, wt in d3) / h_**3
            res = abs(c * k**4 * (F3 * F1 - F2**2 / 2)
                      - (k / 3) * F0**3 + (c - k) / 2 * F0**2 + K1 * F0 + K0)
            worst = max(worst, res)
        return float(worst)
