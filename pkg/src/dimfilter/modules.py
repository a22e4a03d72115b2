"""Finitely generated modules as cokernels, and the homological toolkit.

A ``Presentation`` is ``R^rank / span(relations)`` with relations as columns.
Modules over a quotient ``A = R/I`` are handled over ``R``; the quotient tag
is bookkeeping only.
"""

from itertools import combinations
from fractions import Fraction

from .errors import ContractError
from .groebner import (
    GB, eliminate_vecs, groebner_vecs, leading, syzygy_vecs,
)
from .poly import DEGREVLEX, FreeElem, MonomialOrder, Poly, to_vec, vec_to_elem
from .resolution import Resolution, degree_shifts, prune, resolve, vec_to_column, column_to_vec


# Ideals are rank-0 GB objects.

def ideal(ring, gens):
    gens = [g if isinstance(g, Poly) else ring.const(g) for g in gens]
    return GB(ring, 0, groebner_vecs([to_vec(g) for g in gens], DEGREVLEX, ring.p, ideal=True))


def unit_ideal(ring):
    return ideal(ring, [ring.one()])


def dim_quotient(I):
    """Krull dimension of ``R/I`` from the leading monomials of a Gröbner basis:
    the largest set of variables containing the support of no leading monomial.
    ``-1`` for the unit ideal."""
    if I.is_unit():
        return -1
    n = I.ring.nvars
    supports = [frozenset(i for i, a in enumerate(e) if a) for _, e in I.leading_monomials()]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            S = frozenset(S)
            if not any(s <= S for s in supports):
                return size
    return -1


def ideal_product(I, J):
    gens = [f * g for f in I.gens for g in J.gens]
    return ideal(I.ring, gens)


def ideal_contained(I, J):
    """``I ⊆ J``."""
    return all(J.contains(f) for f in I.gens)


def is_monomial_ideal(I):
    return all(len(v) == 1 for v in I.vecs)


def monomial_exps(I):
    return [next(iter(v))[1] for v in I.vecs]


def intersect_ideals(I, J):
    """``I ∩ J``: eliminate the first slot from ``(a, a)``, ``(b, 0)``."""
    ring = I.ring
    gens = []
    for v in I.vecs:
        w = {}
        for (_, e), c in v.items():
            w[(0, e)] = c
            w[(1, e)] = c
        gens.append(w)
    for v in J.vecs:
        gens.append({(0, e): c for (_, e), c in v.items()})
    out = eliminate_vecs(gens, 1, DEGREVLEX, ring.p)
    return GB(ring, 0, groebner_vecs(out, DEGREVLEX, ring.p, ideal=True))


def radical_member(f, I):
    """``f ∈ √I`` via ``1 ∈ I + (1 - t f)`` with one fresh variable ``t``."""
    ring = I.ring
    t = ring.fresh_name("t")
    big = ring.extend(t)
    lift = lambda g: Poly(big, {e + (0,): c for e, c in g.terms.items()})
    tf = Poly(big, {e + (1,): c for e, c in f.terms.items()})
    gens = [lift(g) for g in I.gens] + [big.one() - tf]
    return ideal(big, gens).is_unit()


def radical_equal(I, J):
    return (all(radical_member(f, J) for f in I.gens)
            and all(radical_member(g, I) for g in J.gens))


class Presentation:
    """Cokernel ``R^rank / span(relations)``; relations are the matrix columns."""

    def __init__(self, ring, rank, relations=(), name=None, quotient=None):
        self.ring = ring
        self.rank = rank
        vecs = []
        for r in relations:
            if isinstance(r, FreeElem):
                if r.rank != rank or r.ring != ring:
                    raise ContractError("relation of wrong rank or ring")
                v = to_vec(r)
            elif isinstance(r, Poly):
                if rank != 1:
                    raise ContractError("polynomial relation needs rank 1")
                v = to_vec(r)
            else:
                v = dict(r)
            if v:
                vecs.append(v)
        self.relation_vecs = vecs
        self.name = name
        self.quotient = quotient
        self._cache = {}

    @classmethod
    def quotient_ring(cls, I, name=None):
        """``R/I`` for an ideal given by polynomials or a GB; tagged as a ring."""
        if isinstance(I, GB):
            gens = I.gens
            ring = I.ring
        else:
            gens = list(I)
            ring = gens[0].ring
        return cls(ring, 1, gens, name=name, quotient=tuple(gens))

    @classmethod
    def from_matrix(cls, ring, rows, name=None):
        """Cokernel of a row-major matrix; each column is a relation."""
        rank = len(rows)
        ncols = len(rows[0]) if rows else 0
        rels = [FreeElem(ring, [rows[i][j] for i in range(rank)]) for j in range(ncols)]
        return cls(ring, rank, rels, name=name)

    @classmethod
    def free(cls, ring, rank, name=None):
        return cls(ring, rank, [], name=name)

    @classmethod
    def zero(cls, ring):
        return cls(ring, 0, [], name="0")

    @classmethod
    def direct_sum(cls, *mods, name=None):
        ring = mods[0].ring
        rels = []
        shift = 0
        for m in mods:
            for v in m.relation_vecs:
                rels.append({(pos + shift, e): c for (pos, e), c in v.items()})
            shift += m.rank
        return cls(ring, shift, rels, name=name)

    # canonical data
    @property
    def gb(self):
        if "gb" not in self._cache:
            self._cache["gb"] = GB(self.ring, self.rank,
                                   groebner_vecs(self.relation_vecs, DEGREVLEX, self.ring.p,
                                                 ideal=(self.rank == 1)))
        return self._cache["gb"]

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def relations(self):
        return [vec_to_elem(self.ring, v, self.rank) for v in self.relation_vecs]

    def matrix(self):
        rels = self.relations()
        return [[r[i] for r in rels] for i in range(self.rank)]

    def degree_shifts(self):
        cols = [vec_to_column(self.ring, v) for v in self.relation_vecs]
        return degree_shifts(self.ring, self.rank, cols)

    def is_graded(self):
        return self.degree_shifts() is not None

    def is_monomial(self):
        """Direct sum of cyclic modules with monomial relations."""
        return all(len(v) == 1 for v in self.gb.vecs)

    def monomial_summands(self):
        """``[gens of I_i]`` with ``M = ⊕ R/I_i``; requires ``is_monomial``."""
        if not self.is_monomial():
            raise ContractError("module is not a direct sum of monomial cyclic modules")
        out = [[] for _ in range(self.rank)]
        for v in self.gb.vecs:
            (pos, e), = v
            out[pos].append(e)
        return out

    def __eq__(self, other):
        return (isinstance(other, Presentation) and self.ring == other.ring
                and self.rank == other.rank and self.gb == other.gb)

    def __hash__(self):
        return hash((self.ring, self.rank, len(self.gb.vecs)))

    def __repr__(self):
        label = self.name or "M"
        return f"Presentation({label}: rank {self.rank}, {len(self.relation_vecs)} relations)"

    def resolution(self, minimal=None):
        if minimal is None:
            minimal = self.is_graded()
        return self.cached(("res", minimal), lambda: free_resolution(self, minimal))

    def pruned(self):
        """Isomorphic presentation without unit entries in the relation matrix."""
        cols = [vec_to_column(self.ring, v) for v in self.relation_vecs]
        res = prune(Resolution(self.ring, [self.rank, len(cols)], [cols]))
        return Presentation(self.ring, res.rank(0), [column_to_vec(c) for c in res.d(1)],
                            name=self.name, quotient=self.quotient)


def free_resolution(P, minimal=False):
    """Free resolution of ``P``; minimal (graded input required) when asked."""
    return resolve(P.ring, P.rank, P.relation_vecs, minimal=minimal)


class Submodule:
    """Submodule of a presentation, generated by elements of its free cover."""

    def __init__(self, ambient, generators):
        self.ambient = ambient
        rgb = ambient.gb
        gens = []
        seen = set()
        for g in generators:
            v = to_vec(g) if isinstance(g, FreeElem) else dict(g)
            if isinstance(g, FreeElem) and g.rank != ambient.rank:
                raise ContractError("generator outside the ambient free module")
            v = rgb.normal_form_vec(v)
            if v:
                key = frozenset(v.items())
                if key not in seen:
                    seen.add(key)
                    gens.append(v)
        self.gen_vecs = gens
        self._gb = None
        self._pres = None

    @classmethod
    def whole(cls, M):
        one = M.ring.coerce(1)
        z = M.ring.zero_exps
        return cls(M, [{(i, z): one} for i in range(M.rank)])

    @classmethod
    def zero(cls, M):
        return cls(M, [])

    @property
    def ring(self):
        return self.ambient.ring

    @property
    def gb(self):
        """Canonical GB of generators plus ambient relations."""
        if self._gb is None:
            M = self.ambient
            vecs = groebner_vecs(M.gb.vecs + self.gen_vecs, DEGREVLEX, M.ring.p,
                                 ideal=(M.rank == 1))
            self._gb = GB(M.ring, M.rank, vecs)
        return self._gb

    @property
    def generators(self):
        return [vec_to_elem(self.ring, v, self.ambient.rank) for v in self.gen_vecs]

    def is_zero(self):
        return not self.gen_vecs

    def __le__(self, other):
        self._same(other)
        g = other.gb
        return all(not g.normal_form_vec(v) for v in self.gen_vecs)

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        self._same(other)
        return self.gb == other.gb

    def __hash__(self):
        return hash(len(self.gb.vecs))

    def _same(self, other):
        if other.ambient is not self.ambient and other.ambient != self.ambient:
            raise ContractError("submodules of different ambient modules")

    def as_presentation(self):
        """The submodule as an abstract module on its generators."""
        if self._pres is None:
            M = self.ambient
            self._pres = Presentation(M.ring, len(self.gen_vecs),
                                      relations_among(M, self.gen_vecs))
        return self._pres

    def quotient(self):
        """``M / N`` as a presentation."""
        M = self.ambient
        return Presentation(M.ring, M.rank, M.relation_vecs + self.gen_vecs)

    def image_of(self, vecs):
        """Elements of ``M``'s cover from coefficient vectors on the generators."""
        out = []
        for v in vecs:
            acc = {}
            for (k, e), c in v.items():
                for (pos, f), d in self.gen_vecs[k].items():
                    m = (pos, tuple(a + b for a, b in zip(e, f)))
                    val = acc.get(m, 0) + c * d
                    if self.ring.p:
                        val %= self.ring.p
                    if val:
                        acc[m] = val
                    else:
                        acc.pop(m, None)
            out.append(acc)
        return out

    def __repr__(self):
        return f"Submodule({[str(g) for g in self.generators]})"


def relations_among(M, vecs):
    """Gröbner basis of ``{c ∈ R^s : Σ c_i v_i = 0 in M}`` for ``vecs`` in the
    free cover of ``M`` (kept in the given order, nothing reduced away)."""
    r = M.rank
    one = M.ring.coerce(1)
    z = M.ring.zero_exps
    aug = []
    for k, v in enumerate(vecs):
        w = {(pos, e): c for (pos, e), c in v.items()}
        w[(r + k, z)] = one
        aug.append(w)
    aug.extend(dict(v) for v in M.gb.vecs)
    return eliminate_vecs(aug, r, DEGREVLEX, M.ring.p)


def intersect(N1, N2):
    """``N1 ∩ N2`` inside their common ambient module."""
    N1._same(N2)
    M = N1.ambient
    r = M.rank
    gens = []
    for v in N1.gb.vecs:
        w = dict(v)
        w.update({(pos + r, e): c for (pos, e), c in v.items()})
        gens.append(w)
    for v in N2.gb.vecs:
        gens.append(dict(v))
    out = eliminate_vecs(gens, r, DEGREVLEX, M.ring.p)
    return Submodule(M, out)


def colon_poly(N, g):
    """``(N :_F g)`` as a submodule of the ambient module."""
    M = N.ambient
    r = M.rank
    ring = M.ring
    one = ring.coerce(1)
    z = ring.zero_exps
    gens = []
    for i in range(r):
        w = {(i, e): c for e, c in g.terms.items()}
        w[(r + i, z)] = one
        gens.append(w)
    gens.extend(dict(v) for v in N.gb.vecs)
    out = eliminate_vecs(gens, r, DEGREVLEX, ring.p)
    return Submodule(M, out)


def colon_ideal(N, b):
    """``(N :_F b)`` for an ideal ``b`` given by a GB or polynomials."""
    gens = b.gens if isinstance(b, GB) else list(b)
    gens = [g for g in gens if g.terms]
    if not gens:
        return Submodule.whole(N.ambient)
    result = None
    for g in gens:
        c = colon_poly(N, g)
        result = c if result is None else intersect(result, c)
    return result


def colon_saturate(N, b):
    """``(N : b^∞)``: iterate ``N ← (N : b)`` until the canonical GB is stable."""
    cur = N
    while True:
        nxt = colon_ideal(cur, b)
        if nxt.gb == cur.gb:
            return cur
        cur = nxt


def annihilator(M):
    """``(0 :_R M) = ∩_i (U : e_i)`` with each colon from an elimination order
    placing ``e_i`` last."""
    def compute():
        ring = M.ring
        if M.rank == 0:
            return unit_ideal(ring)
        result = None
        for i in range(M.rank):
            prio = [-pos for pos in range(M.rank)]
            prio[i] = -M.rank
            order = MonomialOrder("grevlex", prio)
            gb = groebner_vecs(M.gb.vecs, order, ring.p)
            col = [{(0, e): c for (_, e), c in v.items()} for v in gb if leading(v, order)[0] == i]
            Ii = GB(ring, 0, groebner_vecs(col, DEGREVLEX, ring.p, ideal=True))
            result = Ii if result is None else intersect_ideals(result, Ii)
            if result.is_zero():
                break
        return result
    return M.cached("ann", compute)


def is_zero(M):
    if isinstance(M, Submodule):
        return M.is_zero()
    return M.rank == 0 or M.gb.is_unit()


def dim_module(M):
    """``dim Supp M``; ``-1`` for the zero module."""
    if isinstance(M, Submodule):
        M = M.as_presentation()
    return M.cached("dim", lambda: dim_quotient(annihilator(M)))


def ext_module(j, M):
    """``Ext^j_R(M, R)`` as a pruned cokernel presentation.

    Generators are a kernel basis of the transposed ``d_{j+1}``; relations
    are the coefficient vectors of the image of the transposed ``d_j``
    together with syzygies among the kernel generators.
    """
    ring = M.ring
    if not (0 <= j <= ring.nvars):
        raise ContractError(f"Ext index {j} outside 0..{ring.nvars}")

    def compute():
        res = M.resolution()
        rj = res.rank(j)
        if rj == 0:
            return Presentation.zero(ring)
        one = ring.coerce(1)
        z = ring.zero_exps
        if j + 1 <= res.length:
            # rows of d_{j+1} are the columns of its transpose
            rows = [{} for _ in range(rj)]
            for col_idx, col in enumerate(res.d(j + 1)):
                for r, f in col.items():
                    for e, c in f.terms.items():
                        rows[r][(col_idx, e)] = c
            kernel = syzygy_vecs(rows, res.rank(j + 1), DEGREVLEX, ring.p, ring.nvars)
        else:
            kernel = [{(i, z): one} for i in range(rj)]
        m = len(kernel)
        if m == 0:
            return Presentation.zero(ring)
        image = []
        if j >= 1:
            image = [{} for _ in range(res.rank(j - 1))]
            for col_idx, col in enumerate(res.d(j)):
                for r, f in col.items():
                    for e, c in f.terms.items():
                        image[r][(col_idx, e)] = c
            image = [v for v in image if v]
        # syzygies of [kernel | image] in R^rj, projected onto the kernel slots
        aug = []
        for k, v in enumerate(kernel):
            w = dict(v)
            w[(rj + k, z)] = one
            aug.append(w)
        aug.extend(image)
        rels = eliminate_vecs(aug, rj, DEGREVLEX, ring.p)
        return Presentation(ring, m, rels, name=f"Ext^{j}").pruned()

    return M.cached(("ext", j), compute)


def support_contains(p, M):
    """``p ∈ Supp M``, i.e. ``Ann M ⊆ p``."""
    P = p.gb if isinstance(p, PrimeIdeal) else p
    return ideal_contained(annihilator(M), P)


def codim(M):
    return M.ring.nvars - dim_module(M)


class PrimeIdeal:
    """An ideal flagged prime, with a certificate kind.

    ``monomial``: generated by variables; ``linear``: degree-one generators
    with independent linear parts; ``declared``: asserted by the user and not
    verified.
    """

    def __init__(self, ring, gens, certificate=None, name=None):
        gens = [g for g in gens if g.terms]
        self.ring = ring
        self.name = name
        self.generators = gens
        auto = _certify(ring, gens)
        if certificate is None:
            if auto is None:
                raise ContractError(
                    "prime not certified as monomial or linear; mark it assume-prime")
            certificate = auto
        elif certificate in ("monomial", "linear") and auto != certificate:
            if not (certificate == "linear" and auto == "monomial"):
                raise ContractError(f"ideal fails the {certificate} prime check")
        elif certificate != "declared" and certificate not in ("monomial", "linear"):
            raise ContractError(f"unknown certificate {certificate!r}")
        self.certificate = certificate
        self.gb = ideal(ring, gens)
        if self.gb.is_unit():
            raise ContractError("the unit ideal is not prime")

    @property
    def verified(self):
        return self.certificate != "declared"

    @property
    def dim(self):
        """``dim R/p``."""
        return dim_quotient(self.gb)

    @property
    def height(self):
        return self.ring.nvars - self.dim

    def variables(self):
        """Variable indices for a monomial prime."""
        if self.certificate != "monomial":
            raise ContractError("not a monomial prime")
        return frozenset(next(iter(g.terms)).index(1) for g in self.generators)

    def contains_ideal(self, I):
        return ideal_contained(I, self.gb)

    @classmethod
    def from_variables(cls, ring, indices):
        gens = []
        for i in sorted(indices):
            e = [0] * ring.nvars
            e[i] = 1
            gens.append(Poly(ring, {tuple(e): ring.coerce(1)}))
        return cls(ring, gens, "monomial")

    def __eq__(self, other):
        return isinstance(other, PrimeIdeal) and self.gb == other.gb

    def __hash__(self):
        return hash(tuple(self.gb.strings()))

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gb.gens) + ")"

    def __repr__(self):
        return f"PrimeIdeal{self} [{self.certificate}]"


def _certify(ring, gens):
    if all(len(g.terms) == 1 and sum(next(iter(g.terms))) == 1 for g in gens):
        return "monomial"
    if all(g.degree() <= 1 for g in gens):
        rows = []
        for g in gens:
            row = [Fraction(0)] * ring.nvars
            for e, c in g.terms.items():
                if any(e):
                    row[e.index(1)] = Fraction(c)
            rows.append(row)
        if _rank(rows, ring.p) == len(gens):
            return "linear"
    return None


def _rank(rows, p):
    rows = [list(r) for r in rows]
    if p:
        rows = [[int(c) % p for c in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p) if p else 1 / rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] * inv
                rows[i] = [(a - f * b) % p if p else a - f * b
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank
