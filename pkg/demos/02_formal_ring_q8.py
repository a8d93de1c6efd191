#!/usr/bin/env python3
"""Building the formal ring of Stiefel-Whitney classes for the quaternion
group: rationality, tensor and exterior-power relations, Chern classes, and
the Steenrod closure, ending in a three-variable presentation."""

from swcohom import (build_formal_ring, load_fixture, minimal_generators,
                     parse_repdata)
from swcohom.formalring import SteenrodContext

data = parse_repdata(load_fixture("q8.json"))
print("real irreducibles:",
      ", ".join("%s (dim %d, type %s)" % (r.name, r.dim, r.fs_type)
                for r in data.reals))
lam = data.lambda_real[("D", 2)]
print("second exterior power of D:",
      " + ".join("%d %s" % (k, nm) for nm, k in lam.parts),
      "+ %d trivial" % lam.trivial_mult)

fr = build_formal_ring(data)
ring = fr.algebra.ring

print("\nsurviving variables:",
      ", ".join("%s (%s)" % (nm, fr.classification[nm]) for nm in ring.names))
print("eliminated:")
for nm, expr in sorted(fr.eliminated.items()):
    print("    %s = %s" % (nm, ring.format_poly(expr)))

print("\nminimal relations:")
for g in minimal_generators(ring, fr.algebra.relations):
    print("   ", ring.format_poly(g))

# The second relation is the Steenrod image of the first: Sq^1 R.
ctx = SteenrodContext(fr.sw)
R = fr.sw.ring.parse("w1(r1)^2 + w1(r2)^2 + w1(r1)*w1(r2)")
print("\nSq^1(R) =", fr.sw.ring.format_poly(ctx.sq(1, R)))
