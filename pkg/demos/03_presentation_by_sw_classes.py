#!/usr/bin/env python3
"""The candidate-map pipeline on the order-16 group number 11: one degree-one
assignment survives, the quotient-lift trick cuts eight polynomial-variable
choices to two, one is admissible, and the conclusion rewrites the cohomology
on Stiefel-Whitney generators plus a single outside class."""

from swcohom import (Solver, build_formal_ring, load_fixture, parse_cohomology,
                     parse_repdata)

data = parse_repdata(load_fixture("g16_11.json"))
H = parse_cohomology(load_fixture("g16_11_cohomology.json"))
fr = build_formal_ring(data)

solver = Solver(fr, H)
outcome = solver.run()
print("status:", outcome.status)
print("stage statistics:", outcome.stats)

fp = outcome.presentation
ring = fp.ring
print("\ngenerators:")
for i, nm in enumerate(ring.names):
    print("    %-8s degree %d  (%s)" % (nm, ring.degrees[i], fp.kinds[nm]))

print("relations:")
for g in fp.relations:
    print("   ", ring.format_poly(g))

print("\nevery Stiefel-Whitney class in these generators:")
for nm, expr in sorted(fp.sw_dictionary.items()):
    print("    %-8s = %s" % (nm, ring.format_poly(expr)))

print("\nSteenrod squares on w4(r8):")
for k, val in sorted(fp.steenrod_table["w4(r8)"].items()):
    print("    Sq^%d = %s" % (k, ring.format_poly(val)))
print("Steenrod squares on x: not determined by this method")
