"""Walk through the Unruh vacuum: its four-ket expansion, the annihilation
property that defines it, and the endpoint identity that makes the two
wedge-local mode actions collapse onto each other at r = pi/4.

Run:  python3 demos/vacuum_structure.py
"""

import math

import numpy as np

from unruhsim import (QR_GRID, R_MAX, UnruhParams, apply_operator,
                      occupations, region_modes, unruh_creation, unruh_vacuum)

print("The Unruh vacuum lives on four canonical kets whatever the angle r.")
print("Amplitudes follow (cos^2 r, -cos r sin r, +cos r sin r, -sin^2 r):\n")
print(f"{'r':>8}   " + "   ".join(f"|{''.join(map(str, occupations(k)))}>"
                                  for k in (0, 6, 9, 15)))
for r in (0.0, math.pi / 12, math.pi / 8, math.pi / 6, R_MAX):
    vac = unruh_vacuum(r)
    amps = "   ".join(f"{vac[k].real:+.4f}" for k in (0, 6, 9, 15))
    print(f"{r:8.4f}   {amps}   (norm {np.linalg.norm(vac):.12f})")

print("\nEvery Unruh mode annihilates it, for any weight split q_R:")
for r in (0.0, math.pi / 8, R_MAX):
    vac = unruh_vacuum(r)
    residual = max(
        np.linalg.norm(apply_operator(unruh_creation(UnruhParams.from_qr(r, q)).adjoint(), vac))
        for q in QR_GRID)
    print(f"  r = {r:.4f}: worst ||C_U vac|| over the q_R grid = {residual:.2e}")

print("\nThe wedge-local creators a_I^dag and a_II^dag act differently on the")
print("vacuum in general, but the gap closes exactly at the endpoint; the gap")
print("norm is |cos r - sin r| independent of the weights:")
for r in (0.0, math.pi / 8, R_MAX - 0.01, R_MAX):
    vac = unruh_vacuum(r)
    p = UnruhParams.from_qr(r, 0.8)
    a_one, a_two = region_modes(p)
    gap = np.linalg.norm(apply_operator(a_one - a_two, vac))
    print(f"  r = {r:.4f}: ||(a_I+ - a_II+) vac|| = {gap:.6f}"
          f"   |cos r - sin r| = {abs(math.cos(r) - math.sin(r)):.6f}")

print("\nAt r = pi/4 the Unruh creator is the mean of the two wedge creators,")
print("so exciting the vacuum becomes a purely wedge-local operation; that is")
print("the mechanism behind the q_R-independent negativity at the endpoint.")
