"""Sliding a rigid body's reference point along its Galois axis.

Start from the principal moments of a body at its centre of mass and move
the reference point out to a squared distance x (unit mass). The three new
principal moments trace one orbit of a one-parameter semigroup.
"""
import numpy as np

from galois_inertia import delta_extremum, invariants, j_map

t = (1.0, 2.0, 4.0)

print("x        lambda1       lambda2       lambda3")
for x in np.linspace(0.0, 3.0, 7):
    lo, mid, hi = j_map(t, x)
    print(f"{x:<6.2f} {lo:13.10f} {mid:13.10f} {hi:13.10f}")

# moving by y and then by x lands where a single move by x + y does
x, y = 0.7, 1.9
two_steps = j_map(j_map(t, y), x)
one_step = j_map(t, x + y)
print("\ntwo steps:", tuple(two_steps))
print("one step: ", tuple(one_step))
print("max difference:", max(abs(a - b) for a, b in zip(two_steps, one_step)))

# the discriminant of the outer pair is a quadratic in x, smallest at x_min
# (for this body x_min is negative, so on x >= 0 the gap only widens)
ext = delta_extremum(t)
print(f"\ndelta is smallest at x = {ext.x_min} where it equals {ext.delta_min}")
print("check:", invariants(t, ext.x_min).delta)
