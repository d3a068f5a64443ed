"""Derived structural elements and their commutation properties.

Builds the distinguished elements

    e3  = e1 e2 - q^2 e2 e1          (commutator form of the generator)
    z   = e2 e3 - q^2 e3 e2
    zt  = e2 e3 + z / (q^2 - 1)      (normal in the e2-e3-z subalgebra)
    z1  = e1 zt + e3^2 / (q^4 - 1)   (central)
    zp  = e1 w - q^4 w e1,  w = z + (q^2 - 1) e3 e2

and verifies the twisted commutation relations they satisfy, the
normal-element condition for quotient constructions, and centrality both in
the full algebra and in the subalgebra generated by e1, e3, z, zt.
"""

from __future__ import annotations

NAMED = ("e3_as_commutator", "z_as_commutator", "z_tilde", "z_one", "z_prime")

_EXP_INDEX = {"z": 0, "e3": 1, "e1": 2, "e2": 3}


def named(alg, name):
    """PBW normal form of one of the distinguished elements."""
    ctx = alg.ctx
    e1 = alg.generator("e1")
    e2 = alg.generator("e2")
    e3 = alg.generator("e3")
    z = alg.generator("z")
    if name == "e3_as_commutator":
        return e1 * e2 - ctx.q_pow(2) * (e2 * e1)
    if name == "z_as_commutator":
        return e2 * e3 - ctx.q_pow(2) * (e3 * e2)
    if name == "z_tilde":
        return e2 * e3 + z * (ctx.q_pow(2) - 1).invert()
    if name == "z_one":
        zt = named(alg, "z_tilde")
        return e1 * zt + e3 * e3 * (ctx.q_pow(4) - 1).invert()
    if name == "z_prime":
        w = z + (ctx.q_pow(2) - 1) * (e3 * e2)
        return e1 * w - ctx.q_pow(4) * (w * e1)
    raise ValueError("unknown named element %r" % (name,))


def z_one_ordered_form(alg):
    """The alternative expansion e1 e2 e3 + e1 z/(q^2-1) + e3^2/(q^4-1)."""
    ctx = alg.ctx
    e1 = alg.generator("e1")
    e2 = alg.generator("e2")
    e3 = alg.generator("e3")
    z = alg.generator("z")
    return (
        e1 * e2 * e3
        + e1 * z * (ctx.q_pow(2) - 1).invert()
        + e3 * e3 * (ctx.q_pow(4) - 1).invert()
    )


def twisted_commutation_residual(x, g, mu, corr):
    """x*g - mu*g*x - corr; zero certifies the twisted commutation rule."""
    return x * g - mu * (g * x) - corr


def gwa_condition(alg, rho, alpha, b, sigma_spec):
    """Check the normal-element equation rho*alpha - sigma(alpha) = b.

    ``sigma_spec`` maps generator names to the scalar by which the diagonal
    automorphism rescales them; ``alpha`` must be a polynomial in exactly
    those generators.
    """
    ctx = alg.ctx
    rho = ctx.scalar(rho)
    sigma_terms = {}
    for key, co in alpha.terms.items():
        factor = ctx.one
        for gname, idx in _EXP_INDEX.items():
            e = key[idx]
            if not e:
                continue
            if gname not in sigma_spec:
                raise ValueError(
                    "alpha involves %s, which sigma does not act on" % gname
                )
            factor = factor * ctx.scalar(sigma_spec[gname]) ** e
        sigma_terms[key] = co * factor
    sigma_alpha = alg.element(sigma_terms)
    return (rho * alpha - sigma_alpha - b).is_zero()


def subalgebra_generators(alg):
    """Generators (e1, e3, z, zt) of the subalgebra used for module building."""
    return (
        alg.generator("e1"),
        alg.generator("e3"),
        alg.generator("z"),
        named(alg, "z_tilde"),
    )


def zt_power_identity(alg, index, a):
    """Residuals of the two power-commutation identities against zt.

    1: e1^a zt - zt e1^a - [(1-q^-4a)/(1-q^-4)] e3^2 e1^(a-1)
    2: e1 zt^a - zt^a e1 - [(1-q^4a)/(1-q^4)] e3^2 zt^(a-1)
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    ctx = alg.ctx
    e1 = alg.generator("e1")
    e3 = alg.generator("e3")
    zt = named(alg, "z_tilde")
    e3sq = e3 * e3
    if index == 1:
        e1a = alg.power(e1, a)
        return e1a * zt - zt * e1a - ctx.q_bracket(a, -4) * (e3sq * alg.power(e1, a - 1))
    if index == 2:
        zta = alg.power(zt, a)
        return e1 * zta - zta * e1 - ctx.q_bracket(a, 4) * (e3sq * alg.power(zt, a - 1))
    raise ValueError("identity index must be 1 or 2")


def subalgebra_central_residuals(alg, x):
    """Commutators of x with each of e1, e3, z, zt."""
    e1, e3, z, zt = subalgebra_generators(alg)
    return {
        "e1": alg.commutator(x, e1),
        "e3": alg.commutator(x, e3),
        "z": alg.commutator(x, z),
        "zt": alg.commutator(x, zt),
    }


def first_commutator_witness(alg, x):
    """The first nonzero commutator of x against e1 or e2, if any."""
    for gname in ("e1", "e2"):
        c = alg.commutator(x, alg.generator(gname))
        if c:
            key = sorted(c.terms)[0]
            return {"against": gname, "monomial": key, "coeff": repr(c.terms[key])}
    return None


def center_report(alg):
    """Centrality survey of the distinguished elements.

    The elements e1^l, e2^l, e3^l, z and z1 are expected to be central; the
    commutators of zp are measured and reported as computed.  Centrality in
    the e1/e3/z/zt subalgebra is checked against all four of its generators.
    """
    ctx = alg.ctx
    l = ctx.l
    e1 = alg.generator("e1")
    e2 = alg.generator("e2")
    e3 = alg.generator("e3")
    z = alg.generator("z")
    zt = named(alg, "z_tilde")

    full = {
        "e1^l": alg.is_central(alg.power(e1, l)),
        "e2^l": alg.is_central(alg.power(e2, l)),
        "e3^l": alg.is_central(alg.power(e3, l)),
        "z": alg.is_central(z),
        "z1": alg.is_central(named(alg, "z_one")),
        "zp": alg.is_central(named(alg, "z_prime")),
    }
    sub = {}
    for label, x in (
        ("z", z),
        ("e1^l", alg.power(e1, l)),
        ("e3^l", alg.power(e3, l)),
        ("zt^l", alg.power(zt, l)),
    ):
        sub[label] = all(r.is_zero() for r in subalgebra_central_residuals(alg, x).values())
    return {
        "central": full,
        "zp_witness": first_commutator_witness(alg, named(alg, "z_prime")),
        "subalgebra_central": sub,
    }
