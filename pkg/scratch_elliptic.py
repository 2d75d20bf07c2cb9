"""Scratch verification of elliptic case formulas (not part of deliverable)."""
import numpy as np
from rosenaulab.elliptic import (EllipticCase, derive_case_params, evaluate_phi,
                                 evaluate_solution, phi_period, ode_residual_phi,
                                 pde_residual, integrated_ode_residual)

# mpmath ellipfun convention check
import mpmath
print("mpmath sn(1.2, m=0) vs sin(1.2):", mpmath.ellipfun('sn', 1.2, 0), np.sin(1.2))
print("mpmath sn(1.2, m=0.25):", mpmath.ellipfun('sn', 1.2, 0.25))
import scipy.special as sp
print("scipy ellipj(1.2, m=0.25):", sp.ellipj(1.2, 0.25)[0])

# my ladder vs scipy (parameter = modulus^2)
from rosenaulab.jacobi import sn_cn_dn, ellipk
for m in (0.0, 0.3, 0.985171, 0.999):
    u = np.linspace(-8, 8, 41)
    sn, cn, dn = sn_cn_dn(u, m)
    s2, c2_, d2, _ = sp.ellipj(u, m*m)
    print(f"m={m}: max|sn-scipy|={np.max(np.abs(sn-s2)):.2e} cn:{np.max(np.abs(cn-c2_)):.2e} dn:{np.max(np.abs(dn-d2)):.2e} K={ellipk(m):.6f} scipyK={sp.ellipk(m*m):.6f}")

# Case derivations: section-2.1 parameter set
pa = derive_case_params(EllipticCase.IIA, c=1, k=1, c2=-1, c4=1)
print("IIa:", pa.a0, pa.a2, pa.a4, pa.c0, pa.m, pa.g, pa.R, pa.roots)
pb = derive_case_params(EllipticCase.IIB, c=1, k=1, c2=-1, c4=1)
print("IIb R:", pb.R, " u(0,0):", evaluate_solution(pb, 0.0, 0.0))

# ODE residuals per case
def check(case, c2, c4, xi_lo, xi_hi, n=200):
    p = derive_case_params(case, c=1, k=1, c2=c2, c4=c4)
    xi = np.linspace(xi_lo, xi_hi, n)
    try:
        r = ode_residual_phi(p, xi)
        print(f"{case.value}: ode residual {r:.3e}  phi range [{np.nanmin(evaluate_phi(p, xi)):.4f},{np.nanmax(evaluate_phi(p, xi)):.4f}]")
    except Exception as e:
        print(f"{case.value}: FAILED {e}")

check(EllipticCase.I, 0.0, 1.0, 1.0, 5.0)
# IIb smooth: one period
pbT = phi_period(pb)
print("IIb period:", pbT)
check(EllipticCase.IIB, -1, 1, 0.0, pbT)
# IIa: sample between xi0 and first pole
paT = phi_period(pa)
print("IIa period:", paT)
xi = np.linspace(-0.3, 0.3, 100)   # near xi0=0, phi near phi1, away from poles?
phi = evaluate_phi(pa, xi)
print("IIa phi sample:", phi[:5], phi[-5:])
check(EllipticCase.IIA, -1, 1, -0.3, 0.3)
check(EllipticCase.IIC, -1, 1, -0.3, 0.3)
check(EllipticCase.IID, 1, -1, 0.0, 5.0)
check(EllipticCase.IIE, 1, -1, 0.0, 5.0)
check(EllipticCase.IIF, 1, 1, -0.5, 0.5)

# IIe sweep check
pe = derive_case_params(EllipticCase.IIE, c=1, k=1, c2=1, c4=-1)
xe = np.linspace(0, phi_period(pe), 50)
print("IIe phi range:", evaluate_phi(pe, xe).min(), evaluate_phi(pe, xe).max(), "roots:", pe.roots)
pd = derive_case_params(EllipticCase.IID, c=1, k=1, c2=1, c4=-1)
xd = np.linspace(0, phi_period(pd), 50)
print("IId phi range:", evaluate_phi(pd, xd).min(), evaluate_phi(pd, xd).max())
