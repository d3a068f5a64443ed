#!/usr/bin/env python3
# Isomorphism classes: the closed-form parameter predicate against the
# brute-force intertwiner solver, which must (and do) agree.

from uqb2 import field_init
from uqb2 import isoclass, repmod

ctx = field_init(5)
q = ctx.q_pow

print("V1-type modules carry a genuine q^2-shift freedom on beta:")
p2 = repmod.module_params(ctx, "V1p", 1, 1, 1, 0)
p1 = repmod.module_params(ctx, "V1p", 1, q(-2), 1, ctx.q_bracket(1, -4))
verdict = isoclass.isomorphism_verdict(ctx, p1, p2)
print("  isomorphic:", verdict.isomorphic, " witness p:", verdict.witness_p)
T = isoclass.explicit_shift_intertwiner(ctx, p1, p2, verdict.witness_p)
print("  explicit shift map intertwines:",
      isoclass.intertwines(repmod.build(ctx, p1), repmod.build(ctx, p2), T))
print()

print("V2-type: beta is an exact invariant (the e3-eigenvalue on ker e1),")
print("so a q^2-twist of beta is NOT an isomorphism; the solver agrees:")
pa = repmod.module_params(ctx, "V2p", 1, q(2) * ctx.from_int(2), 1)
pb = repmod.module_params(ctx, "V2p", 1, 2, 1)
print("  predicate:", isoclass.iso_predicate(ctx, pa, pb).isomorphic)
print("  solver:", isoclass.find_intertwiner(repmod.build(ctx, pa), repmod.build(ctx, pb)))
print()

print("The surviving V2-type freedom lives in alpha (any l-th root of unity):")
pa = repmod.module_params(ctx, "V2p", q(2), 2, 1)
pb = repmod.module_params(ctx, "V2p", 1, 2, 1)
verdict = isoclass.isomorphism_verdict(ctx, pa, pb)
print("  isomorphic:", verdict.isomorphic, " witness p:", verdict.witness_p)
print()

print("Different families are never isomorphic (distinct annihilation patterns):")
pa = repmod.module_params(ctx, "V1p", 1, 1, 1, 0)
pb = repmod.module_params(ctx, "V4p", 1, 1, 0)
print("  V1p vs V4p:", isoclass.iso_predicate(ctx, pa, pb).isomorphic,
      "/", isoclass.find_intertwiner(repmod.build(ctx, pa), repmod.build(ctx, pb)))
