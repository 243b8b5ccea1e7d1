"""
Brute-force oracle versus closed forms
======================================

Every closed-form expression in the library is backed by an independent
numerical oracle: Landau-level wavefunctions are integrated by
Gauss-Laguerre quadrature and differentiated on a grid, and the TFD
covariance blocks are recomputed as expectation values in a truncated
Fock space. This script runs the aggregate verification report and
shows one covariance comparison entry by entry.
"""

import numpy as np

from landau_tfd import (
    PhysicalParams,
    SweepConfig,
    covariance_g,
    oracle_covariance_1pm,
    run_verify,
)

p = PhysicalParams(omega=0.5, omega_ref=1.0, beta=2.0)
t = 0.25 * p.period

# the oracle builds 60x60 ladder matrices, applies the quadrature
# operators to the two-mode squeezed state, and contracts
g_plus, g_minus = oracle_covariance_1pm(t, p, dim=60)
closed = covariance_g(t, p)

print("quarter-period covariance block (oracle vs closed form):")
print("  oracle:\n", np.array2string(g_plus, precision=12, prefix="   "))
print("  closed:\n", np.array2string(closed.block_1p, precision=12, prefix="   "))
print(f"  max deviation: {np.max(np.abs(g_plus - closed.block_1p)):.2e}")

# the full report also covers Laguerre orthogonality, wavefunction
# Gram matrices, ladder coefficients, commutators, and the rate
report = run_verify(SweepConfig(mode="verify", params=p))
print("\naggregate verification report:")
for check in report.checks:
    status = "pass" if check.passed else "FAIL"
    print(f"  [{status}] {check.name}: max deviation {check.max_deviation:.2e} (tolerance {check.tolerance:.0e})")
print("all passed" if report.passed else "FAILURES PRESENT")
