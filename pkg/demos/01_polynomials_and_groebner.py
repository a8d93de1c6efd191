#!/usr/bin/env python3
"""A tour of the exact algebra layer: GF(2) polynomials, graded variables,
reduced Groebner bases, and the standard quotient-ring queries."""

from swcohom import (Ring, buchberger, enumerate_degree, graded_dimension,
                     is_finite_dimensional, kernel_of_map, normal_form, present)

# A graded ring: z, y in degree 1, x in degree 3, w in degree 4.  This is the
# presentation of the mod-2 cohomology of the order-16 group with a cyclic
# centre of order 4, as found in the standard computer calculations.
H = Ring(("z", "y", "x", "w"), (1, 1, 3, 4))
relations = [H.parse(s) for s in ("z^2", "z*y^2", "z*x", "x^2")]

gb = buchberger(H, relations)
print("reduced Groebner basis:")
for g in gb:
    print("   ", H.format_poly(g))

alg = present(H, relations)
print("\ngraded dimensions:", [graded_dimension(alg, d) for d in range(9)])
print("degree-4 classes:", len(list(enumerate_degree(alg, 4))), "residue classes")

# Normal forms answer ideal membership on the spot.
p = H.parse("z*y^2 + z^2*w")
print("\nnormal form of z*y^2 + z^2*w:", H.format_poly(normal_form(H, p, gb)))

# Finite-dimensionality of a quotient: kill every generator.
killed = present(H, relations + [H.var(n) for n in H.names])
print("killing all generators leaves dimension:", is_finite_dimensional(killed))

# Kernels of ring maps by block elimination.  Map a two-variable ring onto
# the subring generated by y and w.
source, kernel = kernel_of_map(("u", "v"), (1, 4), alg,
                               [H.var("y"), H.var("w")])
print("\nkernel of u -> y, v -> w:")
for g in kernel:
    print("   ", source.format_poly(g))
