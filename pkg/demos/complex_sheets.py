"""The two-valued complex continuation and its involution.

With complex moments and a complex shift the map is defined up to swapping
the outer pair, and negative shifts undo positive ones.
"""
import cmath

from galois_inertia import eq_mod_involution, involution, jbar_inverse_apply, jbar_map

t = (1 + 0.5j, 2.0, 4 - 1j)
x = 0.75 + 2j

r = jbar_map(t, x)
print("image:", r)

back = jbar_inverse_apply(r, x)
print("pulled back:", back)
print("same as the start modulo the involution:", eq_mod_involution(back, t))

swapped = jbar_map(involution(t), x)
print("image of the swapped triple:", swapped)
print("equal modulo the involution:", eq_mod_involution(swapped, r))

# the square root uses the principal branch, cut along the negative real axis
for z in (-4 + 1e-300j, -4 - 1e-300j):
    print(f"sqrt({z}) = {cmath.sqrt(z)}")
