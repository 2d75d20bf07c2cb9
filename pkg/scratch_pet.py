"""Scratch: Petviashvili convergence behavior across (c, p)."""
import time
import warnings
import numpy as np
from rosenaulab.spectral import make_grid, forward_dft, Field, translate
from rosenaulab.petviashvili import (PetviashviliConfig, solve_profile,
                                     iterate_once, stabilizing_factor,
                                     residual_operator)
from rosenaulab.exceptions import NonConvergenceError

grid = make_grid(-50.0, 50.0, 1024)

for c, p in ((2.0, 1.0), (-2.0, 1.0), (2.0, 8.0), (2.0, 15.0), (2.0, 30.0), (1.2, 1.0)):
    t0 = time.time()
    cfg = PetviashviliConfig(c=c, p=p, grid=grid)
    try:
        prof = solve_profile(cfg)
        Q = prof.Q.values
        # evenness about midpoint after recentering
        refl = Q[(-np.arange(grid.N)) % grid.N]
        refl = np.roll(refl, 0)
        # reflection about index N/2: j -> N - j maps node N/2 to N/2
        even_gap = np.max(np.abs(Q - refl)) / np.max(np.abs(Q))
        # sign changes each side of peak
        peak = np.argmax(np.abs(Q))
        left = Q[:peak]; right = Q[peak:]
        sc_left = np.sum(np.abs(np.diff(np.sign(left[np.abs(left) > 1e-13]))) > 0)
        sc_right = np.sum(np.abs(np.diff(np.sign(right[np.abs(right) > 1e-13]))) > 0)
        print(f"c={c} p={p}: iters={prof.iterations} peak={prof.peak_amplitude():.6f} "
              f"RES={prof.history[-1].residual:.2e} |1-M|={prof.history[-1].factor_gap:.2e} "
              f"even={even_gap:.2e} signs L/R={sc_left}/{sc_right} edge={np.abs(Q[0]):.1e} ({time.time()-t0:.1f}s)")
    except NonConvergenceError as e:
        print(f"c={c} p={p}: NON-CONVERGENCE ({e}) after {len(e.history)} iters")

# c=0.5 expected failure
with warnings.catch_warnings(record=True) as w:
    warnings.simplefilter("always")
    try:
        cfg = PetviashviliConfig(c=0.5, p=1.0, grid=grid)
        print("c=0.5 warning raised:", len(w) > 0)
        prof = solve_profile(cfg)
        print("c=0.5 unexpectedly converged, peak", prof.peak_amplitude())
    except NonConvergenceError as e:
        print("c=0.5: NonConvergence as expected:", str(e)[:80])

# scaling oracle: M(alpha Q) = alpha^{-p} M(Q) at fixed point
cfg = PetviashviliConfig(c=2.0, p=1.0, grid=grid)
prof = solve_profile(cfg)
Qhat = forward_dft(prof.Q)
M1 = stabilizing_factor(Qhat, cfg)
from rosenaulab.spectral import SpectralField
M2 = stabilizing_factor(SpectralField(grid=grid, coeffs=2.0 * Qhat.coeffs), cfg)
print(f"M at fixed point: {M1:.2e} gap {abs(1-M1):.2e}; M(2Q)={M2:.6f} (expect 0.5)")

# fixed-point self-consistency
Qhat2 = iterate_once(Qhat, cfg)
print("self-map distance:", np.max(np.abs(Qhat2.coeffs - Qhat.coeffs)))

# RES decay monotonic after first ~5 iters?
res = prof.residuals
print("RES first 10:", res[:10])
print("RES last 6:", res[-6:])
print("monotone after 5:", np.all(np.diff(res[5:]) < 0))
