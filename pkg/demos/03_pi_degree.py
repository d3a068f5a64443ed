#!/usr/bin/env python3
# PI degree via invariant factors, and the rank-4 torus realization whose
# relation images all vanish.

from uqb2 import field_init
from uqb2 import lattice, torus

print("Invariant factors and PI degree of the two commutation matrices:")
for name in ("uqb2", "balg"):
    H = lattice.NAMED_MATRICES[name]
    snf = lattice.smith_normal_form(H)
    print("  %-6s diag=%s  pideg: %s" % (
        name, snf.diag,
        {m: lattice.pi_degree(H, m) for m in (5, 6, 8, 12, 16)},
    ))
print()

print("Smith decomposition of the first matrix (U H V = D):")
snf = lattice.smith_normal_form(lattice.NAMED_MATRICES["uqb2"])
for label, M in (("U", snf.U), ("D", snf.D), ("V", snf.V)):
    print("  %s =" % label)
    for row in M:
        print("     ", row)
print()

print("Torus realization: all relation images vanish; the bracket-image")
print("comparison with X2*X4*X1 is computed and reported per m.")
for m in (5, 8, 12):
    rep = torus.verify_embedding(field_init(m))
    print("  m=%-2d relations hold: %s   bracket image == X2*X4*X1: %s" % (
        m, rep["all_relations_hold"], rep["zp_image_matches"]))
    if not rep["zp_image_matches"]:
        print("        difference:", rep["zp_difference"])
