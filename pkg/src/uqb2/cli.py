"""Command-line front-end: every verification, machine-readable JSON out.

Exit codes: 0 success (and all contracted checks passed), 1 a contracted
check failed, 2 usage or parse error.  Results go to stdout as a single JSON
document; diagnostics go to stderr.  Field scalars are serialized as the
vector of power-basis coordinates, each an exact rational string, so output
is deterministic and lossless.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import conformance, expr, isoclass, lattice, repmod, structure, torus
from .cyclotomic import field_init
from .pbw import PBWAlgebra


def scalar_json(c):
    return [str(f) for f in c.coeffs]


def element_json(x):
    return [
        {"i": i, "j": j, "k": k, "n": n, "coeff": scalar_json(x.terms[(i, j, k, n)])}
        for (i, j, k, n) in sorted(x.terms)
    ]


def matrix_json(M):
    return [[scalar_json(c) for c in row] for row in M]


def _emit(payload):
    json.dump(payload, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _parse_matrix(spec):
    if spec in lattice.NAMED_MATRICES:
        return lattice.NAMED_MATRICES[spec], spec
    try:
        with open(spec) as fh:
            rows = [
                [int(tok) for tok in line.split()]
                for line in fh
                if line.strip()
            ]
    except OSError as exc:
        raise ValueError("matrix %r is neither a built-in name nor a readable file: %s" % (spec, exc))
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix file must hold a square whitespace-separated integer grid")
    return tuple(tuple(r) for r in rows), spec


def _parse_params(ctx, family, text):
    values = [expr.eval_scalar(part, ctx) for part in text.split(",")]
    return repmod.module_params(ctx, family, *values)


def cmd_nf(args):
    ctx = field_init(args.m)
    x = expr.evaluate(args.expr, PBWAlgebra(ctx))
    _emit({"m": args.m, "expr": args.expr, "terms": element_json(x)})
    return 0


def cmd_central(args):
    ctx = field_init(args.m)
    alg = PBWAlgebra(ctx)
    x = expr.evaluate(args.expr, alg)
    witness = None
    for gname in ("e1", "e2"):
        c = alg.commutator(x, alg.generator(gname))
        if c:
            key = sorted(c.terms)[0]
            witness = {
                "against": gname,
                "i": key[0], "j": key[1], "k": key[2], "n": key[3],
                "coeff": scalar_json(c.terms[key]),
            }
            break
    _emit({"m": args.m, "expr": args.expr, "central": witness is None, "witness": witness})
    return 0


def cmd_pideg(args):
    H, name = _parse_matrix(args.matrix)
    snf = lattice.smith_normal_form(H)
    _emit({
        "m": args.m,
        "matrix": name,
        "invariant_factors": list(snf.diag),
        "pi_degree": lattice.pi_degree(H, args.m),
    })
    return 0


def cmd_build_module(args):
    ctx = field_init(args.m)
    r = repmod.build(ctx, _parse_params(ctx, args.family, args.params))
    _emit({
        "m": args.m,
        "family": args.family,
        "dim": r.dim,
        "generators": list(r.act),
        "matrices": {g: matrix_json(M) for g, M in r.act.items()},
    })
    return 0


def cmd_check_module(args):
    ctx = field_init(args.m)
    r = repmod.build(ctx, _parse_params(ctx, args.family, args.params))
    v = repmod.verify_relations(r)
    _emit({
        "m": args.m,
        "family": args.family,
        "dim": r.dim,
        "relations_zero": v["zero"],
        "all_zero": v["all_zero"],
    })
    return 0 if v["all_zero"] else 1


def cmd_simple(args):
    ctx = field_init(args.m)
    r = repmod.build(ctx, _parse_params(ctx, args.family, args.params))
    cert = repmod.is_simple(r)
    _emit({
        "m": args.m,
        "family": args.family,
        "dim": r.dim,
        "simple": cert.simple,
        "certificate": cert.span_dim,
    })
    return 0


def cmd_character(args):
    ctx = field_init(args.m)
    r = repmod.build(ctx, _parse_params(ctx, args.family, args.params))
    chars = repmod.central_character(r)
    _emit({
        "m": args.m,
        "family": args.family,
        "characters": {
            name: {"scalar": scalar_json(c), "zero": not c} for name, c in chars.items()
        },
    })
    return 0


def cmd_iso(args):
    ctx = field_init(args.m)
    p1 = _parse_params(ctx, args.family, args.params1)
    p2 = _parse_params(ctx, args.family, args.params2)
    verdict = isoclass.isomorphism_verdict(ctx, p1, p2)
    _emit({
        "m": args.m,
        "family": args.family,
        "isomorphic": verdict.isomorphic,
        "witness_p": verdict.witness_p,
        "intertwiner": matrix_json(verdict.intertwiner) if verdict.intertwiner else None,
    })
    return 0


def cmd_center_report(args):
    ctx = field_init(args.m)
    rep = structure.center_report(PBWAlgebra(ctx))
    contracted = [v for k, v in rep["central"].items() if k != "zp"]
    contracted += list(rep["subalgebra_central"].values())
    witness = rep["zp_witness"]
    if witness is not None:
        witness = dict(witness)
        witness["monomial"] = list(witness["monomial"])
    _emit({
        "m": args.m,
        "central": rep["central"],
        "subalgebra_central": rep["subalgebra_central"],
        "zp_witness": witness,
        "all_contracted_pass": all(contracted),
    })
    return 0 if all(contracted) else 1


def cmd_torus_check(args):
    ctx = field_init(args.m)
    emb = torus.verify_embedding(ctx)
    affine = torus.affine_center_checks(ctx)
    ok = emb["all_relations_hold"] and all(affine.values())
    _emit({
        "m": args.m,
        "relation_images_zero": {k: v.is_zero() for k, v in emb["residuals"].items()},
        "affine_center_monomials_commute": affine,
        "bracket_image_equals_X2X4X1": emb["zp_image_matches"],
        "all_contracted_pass": ok,
    })
    return 0 if ok else 1


def cmd_conformance(args):
    report = conformance.run_conformance(args.m)
    _emit(report)
    return 0 if report["all_pass"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="uqb2",
        description="Exact verification workbench for the rank-two quantized "
        "enveloping algebra's positive part at a root of unity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **extra):
        p = sub.add_parser(name, help=extra.pop("help", None))
        p.add_argument("--m", type=int, required=True, help="order of the root of unity (>= 5)")
        p.set_defaults(fn=fn)
        return p

    p = add("nf", cmd_nf, help="normal form of an expression")
    p.add_argument("expr")
    p = add("central", cmd_central, help="centrality test with witness")
    p.add_argument("expr")
    p = add("pideg", cmd_pideg, help="invariant factors and PI degree")
    p.add_argument("--matrix", required=True,
                   help="built-in name (uqb2, balg, qaspace) or a file with an integer grid")

    for name, fn in (
        ("build-module", cmd_build_module),
        ("check-module", cmd_check_module),
        ("simple", cmd_simple),
        ("character", cmd_character),
    ):
        p = add(name, fn, help="module family operation")
        p.add_argument("--family", required=True, choices=repmod.FAMILIES)
        p.add_argument("--params", required=True,
                       help="comma-separated scalar expressions, e.g. '1,q^-2,1,0'")

    p = add("iso", cmd_iso, help="isomorphism test for two parameter tuples")
    p.add_argument("--family", required=True, choices=repmod.FAMILIES)
    p.add_argument("--params1", required=True)
    p.add_argument("--params2", required=True)

    add("center-report", cmd_center_report, help="centrality survey")
    add("torus-check", cmd_torus_check, help="torus realization residuals")
    add("conformance", cmd_conformance, help="full exact-check suite for one m")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (expr.ParseError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
