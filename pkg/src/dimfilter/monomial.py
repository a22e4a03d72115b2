"""Combinatorics of monomial ideals: irreducible decomposition, minimal and
associated primes, dimension by vertex covers.

Ideals are lists of exponent tuples and components are exponent tuples with
``0`` meaning "variable absent": ``(2, 0, 1)`` is ``(x^2, z)``.  Nothing here
touches Gröbner bases, so these routines serve as independent oracles.
"""

from itertools import combinations


def minimalize(gens):
    """Minimal generators, sorted for determinism."""
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return sorted(out)


def is_unit(gens):
    return any(not any(g) for g in gens)


def intersect(I, J):
    """Intersection of monomial ideals: pairwise lcms."""
    return minimalize([tuple(map(max, a, b)) for a in I for b in J])


def contains(big, small):
    """Whether the monomial ideal ``big`` contains ``small``."""
    return all(any(all(a <= b for a, b in zip(h, g)) for h in big) for g in small)


def irreducible_components(gens, nvars):
    """Irredundant irreducible decomposition by splitting mixed generators.

    ``x^a * u`` with ``u`` coprime to ``x`` splits ``I`` into ``I + (x^a)`` and
    ``I + (u)``.  The unit ideal has no components; the zero ideal has the
    single empty component.
    """
    raw = _split(minimalize(gens), nvars)
    raw = sorted(set(raw))
    out = []
    for q in raw:
        if any(r != q and _comp_contains(q, r) for r in raw):
            continue
        out.append(q)
    return out


def _split(gens, n):
    if is_unit(gens):
        return []
    for g in gens:
        support = [i for i in range(n) if g[i]]
        if len(support) >= 2:
            i = support[0]
            pure = tuple(g[i] if j == i else 0 for j in range(n))
            rest = tuple(0 if j == i else g[j] for j in range(n))
            return (_split(minimalize(gens + [pure]), n)
                    + _split(minimalize(gens + [rest]), n))
    comp = [0] * n
    for g in gens:
        (i,) = [j for j in range(n) if g[j]]
        comp[i] = g[i] if comp[i] == 0 else min(comp[i], g[i])
    return [tuple(comp)]


def _comp_contains(q, r):
    """Irreducible ``q`` contains irreducible ``r``."""
    return all(b == 0 or (a != 0 and a <= b) for a, b in zip(q, r))


def component_gens(comp):
    n = len(comp)
    return [tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(comp) if a]


def radical_support(comp):
    return frozenset(i for i, a in enumerate(comp) if a)


def associated_primes(gens, nvars):
    """Associated primes as frozensets of variable indices."""
    return sorted({radical_support(q) for q in irreducible_components(gens, nvars)},
                  key=lambda s: (len(s), sorted(s)))


def minimal_primes(gens, nvars):
    """Minimal primes: minimal variable sets meeting the support of every generator."""
    gens = minimalize(gens)
    if is_unit(gens):
        return []
    supports = [frozenset(i for i in range(nvars) if g[i]) for g in gens]
    covers = []
    for size in range(nvars + 1):
        for S in combinations(range(nvars), size):
            S = frozenset(S)
            if any(c <= S for c in covers):
                continue
            if all(s & S for s in supports):
                covers.append(S)
    return sorted(covers, key=lambda s: (len(s), sorted(s)))


def dimension(gens, nvars):
    """Krull dimension of ``R/I``; ``-1`` for the unit ideal."""
    mins = minimal_primes(gens, nvars)
    if not mins:
        return -1
    return nvars - min(len(s) for s in mins)
