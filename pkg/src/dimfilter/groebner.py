"""Buchberger's algorithm for ideals and submodules of free modules, plus syzygies.

The engine works on plain dicts ``{(position, exponents): coefficient}``; the
``GB`` wrapper and the ``reduce``/``buchberger``/``syzygies`` functions give the
public ``Poly``/``FreeElem`` surface.
"""

import heapq
from fractions import Fraction
from dataclasses import dataclass, field

from .errors import ContractError, ResourceError
from .poly import (
    DEGREVLEX, FreeElem, MonomialOrder, Poly, divides, mono_div, mono_lcm,
    mono_mul, to_vec, vec_to_elem, vec_to_poly, _KeyCache,
)


@dataclass
class Budget:
    coefficient_bits: int = 4096
    max_vars: int = 8
    max_degree: int = 12


budget = Budget()


def leading(vec, order):
    return max(vec, key=order.key)


def _check_coefficients(vec):
    limit = budget.coefficient_bits
    for c in vec.values():
        if c.numerator.bit_length() > limit or c.denominator.bit_length() > limit:
            raise ResourceError(
                "coefficient", f"a coefficient needs more than {limit} bits")


class _Reducer:
    """A list of reducers indexed by position, tried in insertion order."""

    def __init__(self, order, p):
        self.order = order
        self.p = p
        self.by_pos = {}

    def add(self, idx, vec):
        pos, e = leading(vec, self.order)
        lc = vec[(pos, e)]
        inv = pow(lc, -1, self.p) if self.p else 1 / lc
        self.by_pos.setdefault(pos, []).append((idx, e, inv, vec))

    def find(self, mono):
        pos, e = mono
        for entry in self.by_pos.get(pos, ()):
            if divides(entry[1], e):
                return entry
        return None

    def reduce(self, f, full=True, quotients=None):
        """Normal form of ``f``; optionally accumulate quotients by reducer index."""
        f = dict(f)
        rem = {}
        key = self.order.key
        p = self.p
        while f:
            m = max(f, key=key)
            c = f[m]
            hit = self.find(m)
            if hit is None:
                if not full:
                    rem.update(f)
                    break
                rem[m] = c
                del f[m]
                continue
            idx, be, inv, g = hit
            q = mono_div(m[1], be)
            coef = c * inv
            if p:
                coef %= p
            if quotients is not None:
                qd = quotients.setdefault(idx, {})
                v = qd.get(q, 0) + coef
                if p:
                    v %= p
                if v:
                    qd[q] = v
                else:
                    del qd[q]
            for (gp, ge), gc in g.items():
                nm = (gp, mono_mul(ge, q))
                v = f.get(nm, 0) - coef * gc
                if p:
                    v %= p
                if v:
                    f[nm] = v
                else:
                    del f[nm]
        return rem


def make_monic(vec, order, p):
    lc = vec[leading(vec, order)]
    if lc == 1:
        return vec
    inv = pow(lc, -1, p) if p else 1 / lc
    if p:
        return {m: c * inv % p for m, c in vec.items()}
    return {m: c * inv for m, c in vec.items()}


def groebner_vecs(gens, order, p, ideal=False):
    """Reduced Gröbner basis of the submodule spanned by ``gens``.

    Pairs are processed by (degree of lcm, i, j); Buchberger's chain criterion
    is applied for every rank, the coprime criterion only when ``ideal``.
    Output is sorted by leading monomial, descending.
    """
    G = []
    lms = []
    red = _Reducer(order, p)
    pending = set()
    heap = []

    def insert(h):
        h = make_monic(h, order, p)
        if not p:
            _check_coefficients(h)
        t = len(G)
        G.append(h)
        lm = leading(h, order)
        lms.append(lm)
        red.add(t, h)
        for i in range(t):
            if lms[i][0] == lm[0]:
                L = mono_lcm(lms[i][1], lm[1])
                pending.add((i, t))
                heapq.heappush(heap, (sum(L), i, t))

    for g in gens:
        if g:
            h = red.reduce(g)
            if h:
                insert(h)

    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        (pos, ei), (_, ej) = lms[i], lms[j]
        L = mono_lcm(ei, ej)
        if ideal and all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue
        if _chain(i, j, pos, L, lms, pending):
            continue
        qi, qj = mono_div(L, ei), mono_div(L, ej)
        s = {}
        for (gp, ge), c in G[i].items():
            s[(gp, mono_mul(ge, qi))] = c
        for (gp, ge), c in G[j].items():
            m = (gp, mono_mul(ge, qj))
            v = s.get(m, 0) - c
            if p:
                v %= p
            if v:
                s[m] = v
            else:
                s.pop(m, None)
        h = red.reduce(s)
        if h:
            insert(h)

    return _interreduce(G, lms, order, p)


def _chain(i, j, pos, L, lms, pending):
    for k, (kp, ek) in enumerate(lms):
        if k == i or k == j or kp != pos:
            continue
        if not divides(ek, L):
            continue
        a, b = (i, k) if i < k else (k, i)
        c, d = (j, k) if j < k else (k, j)
        if (a, b) not in pending and (c, d) not in pending:
            return True
    return False


def _interreduce(G, lms, order, p):
    keep = []
    for i, (pos, e) in enumerate(lms):
        redundant = False
        for j, (qpos, f) in enumerate(lms):
            if j == i or qpos != pos or not divides(f, e):
                continue
            if f != e or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(i)
    out = []
    for i in keep:
        red = _Reducer(order, p)
        for j in keep:
            if j != i:
                red.add(j, G[j])
        lm = lms[i]
        tail = dict(G[i])
        lc = tail.pop(lm)
        tail = red.reduce(tail)
        tail[lm] = lc
        out.append(make_monic(tail, order, p))
    out.sort(key=lambda v: order.key(leading(v, order)), reverse=True)
    return out


def divide_vec(f, gb, order, p):
    """Division with quotients: returns ({index: {exps: coeff}}, remainder)."""
    red = _Reducer(order, p)
    for i, g in enumerate(gb):
        red.add(i, g)
    quotients = {}
    rem = red.reduce(f, quotients=quotients)
    return quotients, rem


class SchreyerOrder:
    """Order induced on ``R^t`` by a Gröbner basis: ``m e_i`` is compared via
    ``m * LM(g_i)`` in the previous order, ties broken by smaller index."""

    def __init__(self, prev, lead_monos):
        self.prev = prev
        self.lead_monos = tuple(lead_monos)
        self._cache = _KeyCache(self._compute)
        self.key = self._cache.__getitem__

    def _compute(self, mono):
        i, e = mono
        lp, le = self.lead_monos[i]
        return (self.prev.key((lp, mono_mul(e, le))), -i)


def schreyer_syzygies(gb, order, p):
    """Syzygies of a Gröbner basis from its S-pair standard representations.

    Returns a Gröbner basis of the syzygy module with respect to the Schreyer
    order (also returned).  For each basis index only the S-pairs with minimal
    leading monomials are kept.
    """
    lms = [leading(g, order) for g in gb]
    sorder = SchreyerOrder(order, lms)
    red = _Reducer(order, p)
    for i, g in enumerate(gb):
        red.add(i, g)
    out = []
    for i in range(len(gb)):
        cands = []
        for j in range(i + 1, len(gb)):
            if lms[j][0] != lms[i][0]:
                continue
            L = mono_lcm(lms[i][1], lms[j][1])
            cands.append((mono_div(L, lms[i][1]), j, L))
        chosen = []
        for q, j, L in cands:
            if any(divides(q2, q) and (q2 != q or j2 < j) for q2, j2, _ in cands):
                continue
            chosen.append((q, j, L))
        for qi, j, L in chosen:
            qj = mono_div(L, lms[j][1])
            ci = gb[i][lms[i]]
            cj = gb[j][lms[j]]
            ai = pow(ci, -1, p) if p else 1 / ci
            aj = pow(cj, -1, p) if p else 1 / cj
            s = {}
            for (gp, ge), c in gb[i].items():
                s[(gp, mono_mul(ge, qi))] = c * ai % p if p else c * ai
            for (gp, ge), c in gb[j].items():
                m = (gp, mono_mul(ge, qj))
                v = s.get(m, 0) - c * aj
                if p:
                    v %= p
                if v:
                    s[m] = v
                else:
                    s.pop(m, None)
            quotients = {}
            rem = red.reduce(s, quotients=quotients)
            assert not rem, "S-pair of a Gröbner basis must reduce to zero"
            syz = {(i, qi): ai, (j, qj): (-aj % p if p else -aj)}
            for k, qd in quotients.items():
                for e, c in qd.items():
                    m = (k, e)
                    v = syz.get(m, 0) - c
                    if p:
                        v %= p
                    if v:
                        syz[m] = v
                    else:
                        syz.pop(m, None)
            out.append(syz)
    return out, sorder


def eliminate_vecs(gens, a, order, p):
    """Gröbner basis of ``span(gens) ∩ (0 ⊕ R^b)`` for gens in ``R^a ⊕ R^b``,
    shifted down to ``R^b``.  Relies on position-over-term with earlier
    positions greater."""
    gb = groebner_vecs(gens, order, p)
    out = []
    for g in gb:
        if leading(g, order)[0] >= a:
            out.append({(pos - a, e): c for (pos, e), c in g.items()})
    return out


def syzygy_vecs(gens, rank, order, p, nvars):
    """Gröbner basis of the syzygies of ``gens`` ⊂ ``R^rank`` (elimination on
    the augmented vectors ``(g_k, e_k)``)."""
    one = 1 if p else Fraction(1)
    z = (0,) * nvars
    aug = []
    for k, g in enumerate(gens):
        v = dict(g)
        v[(rank + k, z)] = one
        aug.append(v)
    return eliminate_vecs(aug, rank, order, p)


# Public surface ---------------------------------------------------------

@dataclass
class GB:
    """Reduced Gröbner basis of an ideal (rank 0 meaning polynomials) or of a
    submodule of ``R^rank``."""

    ring: object
    rank: int
    vecs: list
    order: MonomialOrder = DEGREVLEX
    reduced: bool = True
    _reducer: object = field(default=None, repr=False, compare=False)

    @property
    def is_ideal(self):
        return self.rank == 0

    @property
    def gens(self):
        if self.is_ideal:
            return [vec_to_poly(self.ring, v) for v in self.vecs]
        return [vec_to_elem(self.ring, v, self.rank) for v in self.vecs]

    def reducer(self):
        if self._reducer is None:
            r = _Reducer(self.order, self.ring.p)
            for i, v in enumerate(self.vecs):
                r.add(i, v)
            self._reducer = r
        return self._reducer

    def normal_form_vec(self, vec):
        return self.reducer().reduce(vec)

    def contains(self, x):
        return not self.normal_form_vec(to_vec(x))

    def is_unit(self):
        if self.is_ideal:
            return any(len(v) == 1 and not any(next(iter(v))[1]) for v in self.vecs)
        return all(any(leading(v, self.order) == (i, self.ring.zero_exps) for v in self.vecs)
                   for i in range(self.rank))

    def is_zero(self):
        return not self.vecs

    def leading_monomials(self):
        return [leading(v, self.order) for v in self.vecs]

    def __eq__(self, other):
        return (isinstance(other, GB) and self.ring == other.ring and self.rank == other.rank
                and self.order == other.order and self.vecs == other.vecs)

    def strings(self):
        return [str(g) for g in self.gens]

    def __repr__(self):
        return f"GB({self.strings()})"


def _as_vecs(gens):
    ring = None
    rank = None
    vecs = []
    for g in gens:
        if isinstance(g, Poly):
            r = 0
        elif isinstance(g, FreeElem):
            r = g.rank
        else:
            raise ContractError(f"cannot use {g!r} as a generator")
        if ring is None:
            ring, rank = g.ring, r
        elif g.ring != ring or r != rank:
            raise ContractError("generators live in different rings or free modules")
        vecs.append(to_vec(g))
    return ring, rank, vecs


def buchberger(gens, order=DEGREVLEX, ring=None, rank=None):
    """Reduced Gröbner basis of the ideal/submodule generated by ``gens``.

    ``ring``/``rank`` are needed only when ``gens`` is empty.
    """
    gens = list(gens)
    if gens:
        ring, rank, vecs = _as_vecs(gens)
    else:
        if ring is None:
            raise ContractError("empty generator list needs an explicit ring")
        rank = rank or 0
        vecs = []
    gb = groebner_vecs(vecs, order, ring.p, ideal=(rank == 0))
    return GB(ring, rank, gb, order)


def reduce(f, G):
    """Remainder of ``f`` on division by the Gröbner basis ``G``."""
    if isinstance(f, Poly):
        if not G.is_ideal or f.ring != G.ring:
            raise ContractError("polynomial reduced against a module basis or foreign ring")
        return vec_to_poly(G.ring, G.normal_form_vec(to_vec(f)))
    if isinstance(f, FreeElem):
        if f.rank != G.rank or f.ring != G.ring:
            raise ContractError(f"rank {f.rank} element reduced against rank {G.rank} basis")
        return vec_to_elem(G.ring, G.normal_form_vec(to_vec(f)), G.rank)
    raise ContractError(f"cannot reduce {f!r}")


def syzygies(G):
    """Gröbner basis of the syzygy module of the generators of ``G`` (itself a
    Gröbner basis), computed by Schreyer's construction and then reduced."""
    ring = G.ring
    vecs, _ = schreyer_syzygies(G.vecs, G.order, ring.p)
    return GB(ring, len(G.vecs), groebner_vecs(vecs, DEGREVLEX, ring.p))
