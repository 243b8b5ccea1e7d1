"""
Complexity oscillations of a thermofield double state
======================================================

The circuit complexity of the time-evolved thermofield double of a
charged particle in a magnetic field oscillates with period pi/omega.
This script tabulates one full period at three temperatures and points
out the structure: minima at multiples of the period, a maximum at the
half period, and a temperature-independent floor at zero temperature.
"""

import math

import numpy as np

from landau_tfd import LN6, PhysicalParams, complexity, complexity_rate

# figure defaults: reference frequency 1, cyclotron frequency 0.1
omega, omega_ref = 0.1, 1.0
period = math.pi / omega

# zero temperature is a first-class value: pass beta = inf
temperatures = [("cold (beta*hw = 10)", 10.0 / omega), ("warm (beta*hw = 1)", 1.0 / omega), ("zero T", math.inf)]

print(f"period = {period:.4f}")
floor = math.sqrt(LN6**2 + 2.0 * math.log(omega_ref / omega) ** 2)
print(f"zero-temperature floor = {floor:.6f}\n")

header = "t/period " + " ".join(f"{label:>22s}" for label, _ in temperatures)
print(header)
for frac in np.linspace(0.0, 1.0, 11):
    row = [f"{frac:8.2f}"]
    for _, beta in temperatures:
        p = PhysicalParams(omega=omega, omega_ref=omega_ref, beta=beta)
        row.append(f"{complexity(frac * period, p):22.6f}")
    print(" ".join(row))

# the rate vanishes at every extremum and peaks in between
print("\nrate of change at beta*hw = 1:")
p = PhysicalParams(omega=omega, omega_ref=omega_ref, beta=1.0 / omega)
for frac in (0.0, 0.25, 0.5, 0.75):
    print(f"  t = {frac:.2f} period: dC/dt = {complexity_rate(frac * period, p):+.6f}")
