"""Scalings and shifts combine into an affine group.

E(a, b) scales the moments by a and then shifts along the Galois axis by b.
Products of such elements compose like the affine maps B -> a B + b.
"""
from galois_inertia import (
    ExtendedElement,
    affine_compose,
    ext_apply,
    ext_inverse,
    ext_mul,
    to_affine,
)

t = (1.0, 2.0, 4.0)
e1 = ExtendedElement(2.0, 3.0, context="real")
e2 = ExtendedElement(0.5, 1.0, context="real")

prod = ext_mul(e1, e2)
print("E1 * E2 =", prod)
print("acting in one go: ", tuple(ext_apply(prod, t)))
print("acting in turn:   ", tuple(ext_apply(e1, ext_apply(e2, t))))
print("as affine maps:", to_affine(prod), affine_compose(to_affine(e1), to_affine(e2)))

# in the real semigroup a positive shift has no inverse, in the complex group it does
try:
    ext_inverse(e1)
except ValueError as exc:
    print("\nreal context:", exc)
g = ExtendedElement(2.0, 3.0)
print("complex context inverse:", ext_inverse(g), "product:", ext_mul(g, ext_inverse(g)))
