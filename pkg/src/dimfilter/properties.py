"""Property checks on a single module.  Each returns a ``Verdict``; ``None``
means the property does not apply to this module."""

from itertools import combinations

from . import monomial
from .errors import ContractError
from .filtration import (
    ModuleMap, check_exactness_laws, check_functor_law, dk, dk_oracle_monomial,
)
from .modules import PrimeIdeal, dim_module, dim_quotient, ext_module, is_zero, support_contains
from .randomized import random_poly, random_submodule
from .serre import depth_graded, INFINITY, is_equidimensional, is_sn, local_dim_at
from .verdict import Verdict
from .vanishing import localization_support_check, witness_primes


def _all_k(M):
    return range(max(dim_module(M), 0) + 1)


def functor_laws(M, rng):
    """Scalar multiplication, a projection and an inclusion, at every ``k``."""
    L = random_submodule(rng, M)
    maps = [("scalar", ModuleMap.scalar(M, random_poly(rng, M.ring))),
            ("projection", ModuleMap.projection(L)),
            ("inclusion", ModuleMap.inclusion(L))]
    trail = []
    ok = True
    for label, phi in maps:
        for k in _all_k(phi.source):
            good = bool(check_functor_law(phi, k))
            ok = ok and good
            if not good:
                trail.append(f"{label}: fails at k={k}")
    trail.append(f"{len(maps)} maps checked")
    return Verdict(ok, "functor-law", None, trail)


def exactness_laws(M, rng):
    L = random_submodule(rng, M)
    bad = [k for k in _all_k(M) if not check_exactness_laws(L, k)]
    return Verdict(not bad, "exactness-laws", {"k": bad[0]} if bad else None,
                   [f"submodule with {len(L.gen_vecs)} generators, k = 0..{dim_module(M)}"])


def dk_oracle(M):
    if not M.is_monomial():
        return None
    bad = [k for k in _all_k(M) if dk(M, k).submodule != dk_oracle_monomial(M, k)]
    return Verdict(not bad, "dk-oracle", {"k": bad[0]} if bad else None,
                   [f"k = 0..{dim_module(M)} against the monomial decomposition"])


def s1_equivalence(M):
    """``S_1`` (Ext criterion) against vanishing of ``D_k`` for ``k < dim M``."""
    if is_zero(M) or not M.is_graded() or not is_equidimensional(M):
        return None
    left = bool(is_sn(M, 1))
    right = all(dk(M, k).is_zero() for k in range(dim_module(M)))
    return Verdict(left == right, "s1-equivalence", None,
                   [f"S_1: {left}", f"D_k = 0 for all k < dim: {right}"],
                   {"s1": left, "dk_vanish": right})


def auslander_buchsbaum(M):
    if not M.is_graded():
        return None
    res = M.resolution(minimal=True)
    depth = depth_graded(M)
    d = M.ring.nvars
    if depth == INFINITY:
        ok = res.length == 0 and res.rank(0) == 0
        return Verdict(ok, "auslander-buchsbaum", None, ["zero module"])
    ok = depth + res.length == d
    return Verdict(ok, "auslander-buchsbaum", None,
                   [f"depth {depth} + pd {res.length} = {depth + res.length} vs {d}"],
                   {"depth": depth, "pd": res.length})


def ext_window(M):
    """``Ext^j = 0`` outside ``codim ≤ j ≤ pd`` and ``dim Ext^j ≤ d - j``."""
    if is_zero(M):
        return None
    d = M.ring.nvars
    c = d - dim_module(M)
    pd = M.resolution().length
    bad = []
    for j in range(d + 1):
        E = ext_module(j, M)
        if (j < c or j > pd) and not is_zero(E):
            bad.append(f"Ext^{j} nonzero outside the window")
        if dim_module(E) > d - j:
            bad.append(f"dim Ext^{j} = {dim_module(E)} > {d - j}")
    if is_zero(ext_module(c, M)):
        bad.append(f"Ext^{c} vanishes at the codimension")
    return Verdict(not bad, "ext-window", None, bad or [f"codim {c}, pd {pd}"])


def localization(M):
    if not M.is_monomial() or is_zero(M):
        return None
    ring = M.ring
    n = ring.nvars
    bad = []
    count = 0
    for size in range(1, n + 1):
        for S in combinations(range(n), size):
            p = PrimeIdeal.from_variables(ring, S)
            if not support_contains(p, M):
                continue
            for k in _all_k(M):
                count += 1
                if not localization_support_check(M, p, k):
                    bad.append(f"{p}, k={k}")
    return Verdict(not bad, "localization", None, bad or [f"{count} (prime, k) pairs"])


def height_arithmetic(M):
    """For monomial primes ``q ⊆ p`` over ``Ann M``: ``dim R/q = ht(p/q) + dim R/p``
    with ``ht(p/q)`` counted as the number of extra variables."""
    if not M.is_monomial() or is_zero(M):
        return None
    ring = M.ring
    n = ring.nvars
    primes = set()
    for I in M.monomial_summands():
        primes.update(monomial.associated_primes(I, n))
    primes = sorted(primes, key=lambda s: (len(s), sorted(s)))
    bad = []
    chains = 0
    for q in primes:
        for size in range(len(q), n + 1):
            for extra in combinations(sorted(set(range(n)) - q), size - len(q)):
                pv = q | frozenset(extra)
                P = PrimeIdeal.from_variables(ring, pv)
                Q = PrimeIdeal.from_variables(ring, q)
                chains += 1
                if dim_quotient(Q.gb) != (len(pv) - len(q)) + dim_quotient(P.gb):
                    bad.append(f"{Q} ⊆ {P}")
    return Verdict(not bad, "height-arithmetic", None, bad or [f"{chains} chains"])


def claim_arithmetic(M, declared=()):
    """``dim M = dim M_p + dim R/p`` at every witness prime in the support."""
    if is_zero(M) or not is_equidimensional(M):
        return None
    ws = witness_primes(M, declared)
    dm = dim_module(M)
    bad = []
    for p in ws.primes:
        if support_contains(p, M) and dm != local_dim_at(M, p) + p.dim:
            bad.append(str(p))
    return Verdict(not bad, "claim-arithmetic", None,
                   bad or [f"{len(ws.primes)} witness primes ({ws.provenance})"])


def run_all(M, rng, declared=()):
    """All applicable properties, in a fixed order."""
    out = []
    checks = [
        lambda: functor_laws(M, rng),
        lambda: exactness_laws(M, rng),
        lambda: dk_oracle(M),
        lambda: s1_equivalence(M),
        lambda: auslander_buchsbaum(M),
        lambda: ext_window(M),
        lambda: localization(M),
        lambda: height_arithmetic(M),
        lambda: claim_arithmetic(M, declared),
    ]
    names = ["functor-law", "exactness-laws", "dk-oracle", "s1-equivalence",
             "auslander-buchsbaum", "ext-window", "localization", "height-arithmetic",
             "claim-arithmetic"]
    for name, check in zip(names, checks):
        try:
            v = check()
        except ContractError as exc:
            v = Verdict(None, name, None, [f"not applicable: {exc}"])
        if v is None:
            v = Verdict(None, name, None, ["not applicable"])
        out.append(v)
    return out
