"""Jacobi elliptic functions sn, cn, dn, tn by the descending AGM ladder.

Modulus convention
------------------
The second argument of every function here is the MODULUS m, i.e. sn(u, m)
inverts the incomplete integral of the first kind with integrand
1/sqrt(1 - m^2 sin^2(theta)).  The PARAMETER of the Abramowitz-Stegun / scipy
convention is m^2.  Mixing the two is the classic elliptic-function bug;
callers passing scipy-style parameters must take the square root first.

Algorithm: arithmetic-geometric-mean ladder (descending Landen
transformation).  Arguments are first reduced modulo the real period 4K(m),
so absolute accuracy stays near machine precision for arbitrary u.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigurationError

__all__ = [
    "JacobiArgs",
    "jacobi_sn",
    "jacobi_cn",
    "jacobi_dn",
    "jacobi_tn",
    "sn_cn_dn",
    "tn",
    "ellipk",
]

_LADDER_TOL = 1e-16
_TRIG_MODULUS = 1e-12  # below this the functions are circular to full precision


@dataclass(frozen=True)
class JacobiArgs:
    """Argument pair (u, modulus) with the modulus convention pinned above."""

    u: float
    modulus: float

    def __post_init__(self):
        if not 0.0 <= self.modulus < 1.0:
            raise ConfigurationError(
                f"modulus must lie in [0, 1), got {self.modulus} "
                "(remember: modulus, not the squared parameter)")


def _agm_sequence(modulus: float):
    """Descending ladder (a_n, c_n); terminates when c_n is negligible."""
    a = [1.0]
    b = [float(np.sqrt((1.0 - modulus) * (1.0 + modulus)))]
    c = [float(modulus)]
    while abs(c[-1]) > _LADDER_TOL and len(a) < 32:
        an, bn = a[-1], b[-1]
        a.append(0.5 * (an + bn))
        b.append(float(np.sqrt(an * bn)))
        c.append(0.5 * (an - bn))
    return a, c


def ellipk(modulus: float) -> float:
    """Complete elliptic integral K(m), modulus convention."""
    if not 0.0 <= modulus < 1.0:
        raise ConfigurationError(f"modulus must lie in [0, 1), got {modulus}")
    a, _ = _agm_sequence(modulus)
    return float(np.pi / (2.0 * a[-1]))


def sn_cn_dn(u, modulus: float):
    """Vectorized (sn, cn, dn) for real u and scalar modulus in [0, 1)."""
    if not 0.0 <= modulus < 1.0:
        raise ConfigurationError(f"modulus must lie in [0, 1), got {modulus}")
    u = np.asarray(u, dtype=np.float64)
    if modulus < _TRIG_MODULUS:
        return np.sin(u), np.cos(u), np.ones_like(u)

    a, c = _agm_sequence(modulus)
    n_levels = len(a) - 1
    period = 4.0 * np.pi / (2.0 * a[-1])  # 4K(m)
    u_red = u - period * np.round(u / period)

    phi = (2.0**n_levels) * a[-1] * u_red
    phi1 = phi
    for n in range(n_levels, 0, -1):
        arg = np.clip((c[n] / a[n]) * np.sin(phi), -1.0, 1.0)
        phi_prev = 0.5 * (phi + np.arcsin(arg))
        if n == 1:
            phi1 = phi
        phi = phi_prev

    sn = np.sin(phi)
    cn = np.cos(phi)
    # The ladder quotient for dn degenerates to 0/0 where cn -> 0; there the
    # Pythagorean branch is exact because dn >= sqrt(1-m^2) > 0.
    denom = np.cos(phi1 - phi)
    with np.errstate(divide="ignore", invalid="ignore"):
        dn_ladder = np.where(np.abs(denom) > 0.5, cn / np.where(denom == 0, 1.0, denom), 0.0)
    dn_pyth = np.sqrt(np.maximum(1.0 - (modulus * sn) ** 2, 0.0))
    dn = np.where(np.abs(cn) > 0.5, dn_ladder, dn_pyth)
    if u.ndim == 0:
        return float(sn), float(cn), float(dn)
    return sn, cn, dn


def tn(u, modulus: float):
    """tn = sn/cn; poles are signaled as signed infinities, not exceptions."""
    sn, cn, _ = sn_cn_dn(u, modulus)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.divide(sn, cn)
        out = np.where((np.asarray(cn) == 0.0), np.sign(sn) * np.inf, out)
    if np.ndim(u) == 0:
        return float(out)
    return out


def jacobi_sn(args: JacobiArgs) -> float:
    return sn_cn_dn(args.u, args.modulus)[0]


def jacobi_cn(args: JacobiArgs) -> float:
    return sn_cn_dn(args.u, args.modulus)[1]


def jacobi_dn(args: JacobiArgs) -> float:
    return sn_cn_dn(args.u, args.modulus)[2]


def jacobi_tn(args: JacobiArgs) -> float:
    return tn(args.u, args.modulus)
