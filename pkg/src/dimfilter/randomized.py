"""Seeded random instances: monomial ideals and modules, maps between them,
and submodules.  Everything takes an explicit ``random.Random``."""

import random

from . import monomial
from .filtration import ModuleMap
from .modules import Presentation, Submodule
from .poly import Poly, Ring

VARIABLES = "xyzw"


def rng_for(seed):
    return random.Random(seed)


def random_ring(rng, min_vars=2, max_vars=4):
    return Ring(VARIABLES[:rng.randint(min_vars, max_vars)])


def random_exponent(rng, n, max_deg=3):
    e = [0] * n
    for _ in range(rng.randint(1, max_deg)):
        e[rng.randrange(n)] += 1
    return tuple(e)


def random_monomial_ideal(rng, n, max_gens=4, max_deg=3):
    """Minimal generators of a proper nonzero monomial ideal."""
    return monomial.minimalize([random_exponent(rng, n, max_deg)
                                for _ in range(rng.randint(1, max_gens))])


def monomial_poly(ring, e, c=1):
    return Poly(ring, {tuple(e): ring.coerce(c)})


def monomial_module(ring, ideals, name=None):
    """``⊕ R/I_i`` from exponent lists."""
    parts = [Presentation.quotient_ring([monomial_poly(ring, e) for e in I])
             for I in ideals]
    if len(parts) == 1:
        M = parts[0]
        M.name = name
        return M
    return Presentation.direct_sum(*parts, name=name)


def random_monomial_module(rng, ring, max_summands=2, **kw):
    ideals = [random_monomial_ideal(rng, ring.nvars, **kw)
              for _ in range(rng.randint(1, max_summands))]
    return monomial_module(ring, ideals), ideals


def monomial_colon(J, I):
    """``(J : I)`` for monomial ideals: ``∩_a (J : a)``."""
    out = [(0,) * len(J[0])]
    for a in I:
        out = monomial.intersect(out, monomial.minimalize(
            [tuple(max(b_i - a_i, 0) for a_i, b_i in zip(a, b)) for b in J]))
    return out


def random_map(rng, ring, src_ideals, tgt_ideals, max_deg=2):
    """A random homomorphism ``⊕ R/I_i -> ⊕ R/J_j``: the entry ``(i, j)`` is a
    combination of monomials in ``(J_j : I_i)``."""
    src = monomial_module(ring, src_ideals)
    tgt = monomial_module(ring, tgt_ideals)
    images = []
    for I in src_ideals:
        vec = {}
        for j, J in enumerate(tgt_ideals):
            colon = monomial_colon(J, I)
            for _ in range(rng.randint(0, 2)):
                g = rng.choice(colon)
                u = random_exponent(rng, ring.nvars, max_deg) if rng.random() < 0.5 else (0,) * ring.nvars
                e = tuple(a + b for a, b in zip(g, u))
                c = rng.randint(-3, 3) or 1
                key = (j, e)
                val = vec.get(key, 0) + ring.coerce(c)
                if val:
                    vec[key] = val
                else:
                    vec.pop(key, None)
        images.append(vec)
    return ModuleMap(src, tgt, images)


def random_element(rng, M, max_terms=2, max_deg=2):
    ring = M.ring
    vec = {}
    for _ in range(rng.randint(1, max_terms)):
        e = random_exponent(rng, ring.nvars, max_deg) if rng.random() < 0.7 else (0,) * ring.nvars
        key = (rng.randrange(M.rank), e)
        val = vec.get(key, 0) + ring.coerce(rng.randint(1, 3))
        vec[key] = val
    return {k: v for k, v in vec.items() if v}


def random_submodule(rng, M, max_gens=2, **kw):
    return Submodule(M, [random_element(rng, M, **kw) for _ in range(rng.randint(1, max_gens))])


def random_poly(rng, ring, max_terms=2, max_deg=2):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = random_exponent(rng, ring.nvars, max_deg)
        terms[e] = terms.get(e, 0) + ring.coerce(rng.randint(1, 3))
    return Poly(ring, {e: c for e, c in terms.items() if c})
