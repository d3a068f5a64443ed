"""Construction and certification of the simple module families.

Seven families are built as explicit matrices over the cyclotomic field.
V1, V2, V3 are modules over the subalgebra generated by e1, e3, z, zt; the
primed families V1p, V2p, V3p extend them to modules over the full algebra
through e2 = (zt - z/(q^2-1)) e3^(-1), and V4p covers the case where e3 acts
nilpotently.  All modules are right modules: the matrix of a generator g has
row k listing the coefficients of v_k . g, so words act by left-to-right
matrix products.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .pbw import PBWElement

SUBALGEBRA_FAMILIES = ("V1", "V2", "V3")
PRIMED_FAMILIES = ("V1p", "V2p", "V3p", "V4p")
FAMILIES = SUBALGEBRA_FAMILIES + PRIMED_FAMILIES

# parameter slots per family; starred slots must be nonzero
_PARAM_SPEC = {
    "V1": (("alpha", True), ("beta", True), ("gamma", True), ("delta", False)),
    "V2": (("alpha", True), ("beta", True), ("gamma", True)),
    "V3": (("alpha", True), ("beta", True)),
    "V1p": (("alpha", True), ("beta", True), ("gamma", True), ("delta", False)),
    "V2p": (("alpha", True), ("beta", True), ("gamma", True)),
    "V3p": (("alpha", True), ("beta", True)),
    "V4p": (("alpha", True), ("beta", False), ("gamma", False)),
}


@dataclass(frozen=True)
class ModuleParams:
    family: str
    alpha: object = None
    beta: object = None
    gamma: object = None
    delta: object = None

    def values(self):
        return tuple(
            getattr(self, slot) for slot, _ in _PARAM_SPEC[self.family]
        )


def module_params(ctx, family, *values):
    """Validated parameter tuple for a family; starred slots must be nonzero."""
    if family not in _PARAM_SPEC:
        raise ValueError("unknown family %r" % (family,))
    spec = _PARAM_SPEC[family]
    if len(values) != len(spec):
        raise ValueError(
            "family %s takes %d parameters, got %d" % (family, len(spec), len(values))
        )
    fields = {}
    for (slot, must_be_nonzero), value in zip(spec, values):
        c = ctx.scalar(value)
        if must_be_nonzero and not c:
            raise ValueError("parameter %s of %s must be nonzero" % (slot, family))
        fields[slot] = c
    return ModuleParams(family=family, **fields)


@dataclass
class Representation:
    family: str
    params: object
    dim: int
    act: dict
    ctx: object

    @property
    def generator_names(self):
        return tuple(self.act)


def module_dimension(ctx, family):
    if family in ("V3", "V3p"):
        return ctx.ord_q_pow(4)
    return ctx.l


def build(ctx, params):
    """Action matrices for one family at the given parameters."""
    family = params.family
    if family not in _PARAM_SPEC:
        raise ValueError("unknown family %r" % (family,))
    for slot, must in _PARAM_SPEC[family]:
        c = getattr(params, slot)
        if c is None:
            raise ValueError("family %s needs parameter %s" % (family, slot))
        if must and not c:
            raise ValueError("parameter %s of %s must be nonzero" % (slot, family))
    d = module_dimension(ctx, family)
    zero = linalg.zero_matrix
    q = ctx.q_pow
    one = ctx.one
    a, b, g, dl = params.alpha, params.beta, params.gamma, params.delta

    act = {}
    if family == "V1":
        e1 = zero(ctx, d)
        e3 = zero(ctx, d)
        zt = zero(ctx, d)
        for k in range(d):
            e1[k][(k + 1) % d] = a
            e3[k][k] = q(-2 * k) * b
            zt[k][(k - 1) % d] = a.invert() * (dl + ctx.q_bracket(k, -4) * b * b)
        act = {"e1": e1, "e3": e3, "z": linalg.scalar_matrix(ctx, d, g), "zt": zt}
    elif family == "V2":
        e1 = zero(ctx, d)
        e3 = zero(ctx, d)
        zt = zero(ctx, d)
        for k in range(d):
            if k:
                e1[k][k - 1] = a.invert() * b * b * (-ctx.q_bracket(k, 4))
            e3[k][k] = q(2 * k) * b
            zt[k][(k + 1) % d] = a
        act = {"e1": e1, "e3": e3, "z": linalg.scalar_matrix(ctx, d, g), "zt": zt}
    elif family == "V3":
        e1 = zero(ctx, d)
        e3 = zero(ctx, d)
        zt = zero(ctx, d)
        for k in range(d):
            if k:
                e1[k][k - 1] = a * a * (-ctx.q_bracket(k, 4))
            e3[k][k] = q(2 * k) * a
            if k != d - 1:
                zt[k][k + 1] = one
        act = {"e1": e1, "e3": e3, "z": linalg.scalar_matrix(ctx, d, b), "zt": zt}
    elif family == "V1p":
        e1 = zero(ctx, d)
        e2 = zero(ctx, d)
        e3 = zero(ctx, d)
        binv = b.invert()
        coef_z = -g * binv / (q(2) - 1)
        for k in range(d):
            e1[k][(k + 1) % d] = a
            e3[k][k] = q(-2 * k) * b
            e2[k][(k - 1) % d] = (
                a.invert() * (dl + ctx.q_bracket(k, -4) * b * b) * q(2 * (k - 1)) * binv
            )
            e2[k][k] = e2[k][k] + coef_z * q(2 * k)
        act = {"e1": e1, "e2": e2, "e3": e3, "z": linalg.scalar_matrix(ctx, d, g)}
    elif family == "V2p":
        e1 = zero(ctx, d)
        e2 = zero(ctx, d)
        e3 = zero(ctx, d)
        binv = b.invert()
        for k in range(d):
            if k:
                e1[k][k - 1] = a.invert() * b * b * (-ctx.q_bracket(k, 4))
            e3[k][k] = q(2 * k) * b
            e2[k][(k + 1) % d] = a * binv * q(-2 * (k + 1))
            e2[k][k] = e2[k][k] - g * binv * q(-2 * k) / (q(2) - 1)
        act = {"e1": e1, "e2": e2, "e3": e3, "z": linalg.scalar_matrix(ctx, d, g)}
    elif family == "V3p":
        e1 = zero(ctx, d)
        e2 = zero(ctx, d)
        e3 = zero(ctx, d)
        ainv = a.invert()
        for k in range(d):
            if k:
                e1[k][k - 1] = a * a * (-ctx.q_bracket(k, 4))
            e3[k][k] = q(2 * k) * a
            if k != d - 1:
                e2[k][k + 1] = ainv * q(-2 * (k + 1))
            e2[k][k] = e2[k][k] - b * ainv * q(-2 * k) / (q(2) - 1)
        act = {"e1": e1, "e2": e2, "e3": e3, "z": linalg.scalar_matrix(ctx, d, b)}
    elif family == "V4p":
        e1 = zero(ctx, d)
        e2 = zero(ctx, d)
        e3 = zero(ctx, d)
        den = (q(4) - 1) * (q(2) - 1)
        for k in range(d):
            e1[k][k] = b * q(-2 * k)
            if k >= 2:
                e1[k][k - 2] = (
                    -q(-2 * (k - 1)) * ((q(2 * k) - 1) * (q(2 * (k - 1)) - 1) / den) * a
                )
            if k != d - 1:
                e2[k][k + 1] = one
            else:
                e2[k][0] = g
            if k:
                e3[k][k - 1] = a * ctx.q_bracket(k, 2)
        act = {"e1": e1, "e2": e2, "e3": e3, "z": linalg.scalar_matrix(ctx, d, a)}
    return Representation(family=family, params=params, dim=d, act=act, ctx=ctx)


def direct_sum(r1, r2):
    """Block-diagonal sum; useful as a non-simple control."""
    if r1.generator_names != r2.generator_names or r1.ctx.m != r2.ctx.m:
        raise ValueError("summands are not over the same algebra")
    ctx = r1.ctx
    d = r1.dim + r2.dim
    act = {}
    for gname in r1.act:
        M = linalg.zero_matrix(ctx, d)
        for i in range(r1.dim):
            for j in range(r1.dim):
                M[i][j] = r1.act[gname][i][j]
        for i in range(r2.dim):
            for j in range(r2.dim):
                M[r1.dim + i][r1.dim + j] = r2.act[gname][i][j]
        act[gname] = M
    return Representation(family="direct_sum", params=None, dim=d, act=act, ctx=ctx)


def _mm(a, b):
    return linalg.mat_mul(a, b)


def relation_residuals(rep):
    """Matrix residual of every defining relation of the relevant presentation."""
    ctx = rep.ctx
    q = ctx.q_pow
    act = rep.act
    out = {}
    if "e2" in act:  # full-algebra module
        e1, e2, e3, z = act["e1"], act["e2"], act["e3"], act["z"]
        out["e1*z-z*e1"] = linalg.mat_sub(_mm(e1, z), _mm(z, e1))
        out["e2*z-z*e2"] = linalg.mat_sub(_mm(e2, z), _mm(z, e2))
        out["e3*z-z*e3"] = linalg.mat_sub(_mm(e3, z), _mm(z, e3))
        out["e1*e3-q^-2*e3*e1"] = linalg.mat_sub(_mm(e1, e3), linalg.mat_scale(_mm(e3, e1), q(-2)))
        out["e2*e3-q^2*e3*e2-z"] = linalg.mat_sub(
            linalg.mat_sub(_mm(e2, e3), linalg.mat_scale(_mm(e3, e2), q(2))), z
        )
        out["e2*e1-q^-2*e1*e2+q^-2*e3"] = linalg.mat_add(
            linalg.mat_sub(_mm(e2, e1), linalg.mat_scale(_mm(e1, e2), q(-2))),
            linalg.mat_scale(e3, q(-2)),
        )
        c3 = q(2) + q(-2)
        out["serre_degree3"] = linalg.mat_add(
            linalg.mat_sub(_mm(_mm(e1, e1), e2), linalg.mat_scale(_mm(_mm(e1, e2), e1), c3)),
            _mm(e2, _mm(e1, e1)),
        )
        c4 = q(2) + ctx.one + q(-2)
        e22 = _mm(e2, e2)
        out["serre_degree4"] = linalg.mat_sub(
            linalg.mat_add(
                linalg.mat_sub(_mm(_mm(e22, e2), e1), linalg.mat_scale(_mm(_mm(e22, e1), e2), c4)),
                linalg.mat_scale(_mm(_mm(e2, e1), e22), c4),
            ),
            _mm(e1, _mm(e2, e22)),
        )
    else:  # module over the e1/e3/z/zt subalgebra
        e1, e3, z, zt = act["e1"], act["e3"], act["z"], act["zt"]
        out["e1*e3-q^-2*e3*e1"] = linalg.mat_sub(_mm(e1, e3), linalg.mat_scale(_mm(e3, e1), q(-2)))
        out["e1*z-z*e1"] = linalg.mat_sub(_mm(e1, z), _mm(z, e1))
        out["e3*z-z*e3"] = linalg.mat_sub(_mm(e3, z), _mm(z, e3))
        out["zt*z-z*zt"] = linalg.mat_sub(_mm(zt, z), _mm(z, zt))
        out["zt*e3-q^2*e3*zt"] = linalg.mat_sub(_mm(zt, e3), linalg.mat_scale(_mm(e3, zt), q(2)))
        out["zt*e1-e1*zt+e3^2"] = linalg.mat_add(
            linalg.mat_sub(_mm(zt, e1), _mm(e1, zt)), _mm(e3, e3)
        )
    return out


def verify_relations(rep):
    """Report {relation: residual-is-zero} plus the residual matrices."""
    residuals = relation_residuals(rep)
    return {
        "zero": {name: linalg.is_zero_matrix(mat) for name, mat in residuals.items()},
        "residuals": residuals,
        "all_zero": all(linalg.is_zero_matrix(mat) for mat in residuals.values()),
    }


@dataclass(frozen=True)
class SimplicityCertificate:
    simple: bool
    span_dim: int


def is_simple(rep):
    """Absolute simplicity via the generated matrix algebra.

    Closes the span of all words in the action matrices (right multiplication
    by generators) and certifies simplicity exactly when the span reaches the
    full d*d matrix space.
    """
    ctx = rep.ctx
    d = rep.dim
    target = d * d
    gens = list(rep.act.values())

    def vectorize(M):
        out = {}
        for i in range(d):
            row = M[i]
            for j in range(d):
                if row[j]:
                    out[i * d + j] = row[j]
        return out

    ech = linalg.SparseEchelon()
    frontier = [linalg.identity(ctx, d)]
    ech.insert(vectorize(frontier[0]))
    while frontier and len(ech) < target:
        nxt = []
        for M in frontier:
            for G in gens:
                P = linalg.mat_mul(M, G)
                if ech.insert(vectorize(P)):
                    nxt.append(P)
                    if len(ech) == target:
                        break
            if len(ech) == target:
                break
        frontier = nxt
    return SimplicityCertificate(simple=len(ech) == target, span_dim=len(ech))


def act_matrix(rep, element):
    """Matrix by which a normal-formed algebra element acts (full modules only)."""
    if not isinstance(element, PBWElement):
        raise TypeError("expected a PBW element")
    if "e2" not in rep.act:
        raise ValueError("general elements act only on full-algebra modules")
    ctx = rep.ctx
    d = rep.dim
    out = linalg.zero_matrix(ctx, d)
    for (i, j, k, n), co in element.terms.items():
        M = linalg.identity(ctx, d)
        for gname, e in (("z", i), ("e3", j), ("e1", k), ("e2", n)):
            for _ in range(e):
                M = linalg.mat_mul(M, rep.act[gname])
        out = linalg.mat_add(out, linalg.mat_scale(M, co))
    return out


def central_character(rep):
    """Scalars by which the distinguished commuting elements act.

    Full modules report e1^l, e2^l, e3^l, z, z1 and zt^l; subalgebra modules
    report e1^l, e3^l, zt^l and z.  A non-scalar value for any of these on a
    verified-simple module indicates a bug, so it raises.
    """
    ctx = rep.ctx
    l = ctx.l
    act = rep.act
    mp = lambda M, n: linalg.mat_pow(ctx, M, n)
    if "e2" in act:
        q2 = ctx.q_pow(2)
        zt = linalg.mat_add(
            linalg.mat_mul(act["e2"], act["e3"]),
            linalg.mat_scale(act["z"], (q2 - 1).invert()),
        )
        e1zt = linalg.mat_mul(act["e1"], zt)
        e3sq = linalg.mat_mul(act["e3"], act["e3"])
        z1 = linalg.mat_add(e1zt, linalg.mat_scale(e3sq, (ctx.q_pow(4) - 1).invert()))
        items = {
            "e1^l": mp(act["e1"], l),
            "e2^l": mp(act["e2"], l),
            "e3^l": mp(act["e3"], l),
            "z": act["z"],
            "z1": z1,
            "zt^l": mp(zt, l),
        }
    else:
        items = {
            "e1^l": mp(act["e1"], l),
            "e3^l": mp(act["e3"], l),
            "zt^l": mp(act["zt"], l),
            "z": act["z"],
        }
    out = {}
    for name, M in items.items():
        c = linalg.scalar_of(M)
        if c is None:
            raise ArithmeticError("%s failed to act as a scalar" % name)
        out[name] = c
    return out


def e2_from_subalgebra_action(rep):
    """Reconstruct the e2 matrix of a V1/V2/V3 module via (zt - z/(q^2-1)) e3^(-1).

    Requires the e3 action to be invertible (true for these families); used to
    cross-check the closed-form primed actions.
    """
    ctx = rep.ctx
    act = rep.act
    d = rep.dim
    e3 = act["e3"]
    # e3 is diagonal for these families
    inv = linalg.zero_matrix(ctx, d)
    for k in range(d):
        if not e3[k][k]:
            raise ValueError("e3 action is not invertible")
        inv[k][k] = e3[k][k].invert()
    q2 = ctx.q_pow(2)
    combo = linalg.mat_sub(act["zt"], linalg.mat_scale(act["z"], (q2 - 1).invert()))
    return linalg.mat_mul(combo, inv)
