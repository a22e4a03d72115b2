"""The dimension filtration: ``D_k(M)``, the largest submodule of dimension ≤ k.

``dk`` computes it as the torsion of ``M`` with respect to
``c_k = ∏_{j ≥ d-k} Ann Ext^j(M, R)``, whose zero set is the union of all
closed sets of dimension ≤ k where ``M`` can have associated primes.
``dk_oracle_monomial`` recomputes it from a monomial primary decomposition
without any Ext machinery.
"""

from dataclasses import dataclass, field

from . import monomial
from .errors import ContractError
from .modules import (
    Presentation, Submodule, annihilator, colon_saturate, dim_module,
    dim_quotient, ext_module, ideal_product, intersect, is_zero, relations_among,
    unit_ideal,
)
from .poly import FreeElem, mono_mul, to_vec
from .verdict import Verdict


@dataclass
class FilterResult:
    k: int
    module: Presentation
    submodule: Submodule
    ideal: object = None
    ext_indices: list = field(default_factory=list)

    def is_zero(self):
        return self.submodule.is_zero()

    @property
    def generators(self):
        return self.submodule.generators


def dk(M, k):
    """``D_k(M)`` as a submodule of ``M``."""
    if not isinstance(k, int) or k < 0:
        raise ContractError("k must be ≥ 0")

    def compute():
        if k >= dim_module(M):
            return FilterResult(k, M, Submodule.whole(M))
        ring = M.ring
        d = ring.nvars
        c = unit_ideal(ring)
        used = []
        for j in range(d - k, d + 1):
            E = ext_module(j, M)
            if is_zero(E):
                continue
            used.append(j)
            c = ideal_product(c, annihilator(E))
        if dim_quotient(c) > k:
            raise AssertionError(f"torsion ideal for D_{k} has dimension {dim_quotient(c)}")
        sub = colon_saturate(Submodule.zero(M), c)
        return FilterResult(k, M, sub, c, used)

    return M.cached(("dk", k), compute)


def monomial_summands(M):
    """``[I_1, ..., I_r]`` (exponent lists) from relations that are single terms."""
    out = [[] for _ in range(M.rank)]
    for v in M.relation_vecs:
        if len(v) != 1:
            raise ContractError("dk_oracle_monomial needs monomial relations")
        (pos, e), = v
        out[pos].append(e)
    return out


def dk_oracle_monomial(M, k):
    """``D_k`` of ``⊕ R/I_i`` from monomial decompositions: per summand, the
    intersection of the irreducible components of dimension > k, modulo I_i."""
    if k < 0:
        raise ContractError("k must be ≥ 0")
    n = M.ring.nvars
    one = M.ring.coerce(1)
    gens = []
    for pos, I in enumerate(monomial_summands(M)):
        comps = monomial.irreducible_components(I, n)
        J = [(0,) * n]
        for q in comps:
            if n - len(monomial.radical_support(q)) > k:
                J = monomial.intersect(J, monomial.component_gens(q))
        gens.extend({(pos, e): one} for e in J)
    return Submodule(M, gens)


class ModuleMap:
    """Homomorphism given by the images of the source generators, as elements
    of the target's free cover.  Well-definedness is checked on construction."""

    def __init__(self, source, target, images):
        if len(images) != source.rank:
            raise ContractError("need one image per source generator")
        self.source = source
        self.target = target
        vecs = []
        for im in images:
            if isinstance(im, FreeElem):
                if im.rank != target.rank:
                    raise ContractError("image outside the target free module")
                im = to_vec(im)
            vecs.append(dict(im))
        self.image_vecs = vecs
        for rel in source.relation_vecs:
            if target.gb.normal_form_vec(self.apply_vec(rel)):
                raise ContractError("map does not respect the source relations")

    def apply_vec(self, v):
        p = self.source.ring.p
        out = {}
        for (i, e), c in v.items():
            for (pos, f), d in self.image_vecs[i].items():
                m = (pos, mono_mul(e, f))
                val = out.get(m, 0) + c * d
                if p:
                    val %= p
                if val:
                    out[m] = val
                else:
                    out.pop(m, None)
        return out

    def image(self, N):
        if N.ambient is not self.source and N.ambient != self.source:
            raise ContractError("submodule not in the source module")
        return Submodule(self.target, [self.apply_vec(v) for v in N.gen_vecs])

    @classmethod
    def identity(cls, M):
        return cls(M, M, [_basis(M, i) for i in range(M.rank)])

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, [{} for _ in range(source.rank)])

    @classmethod
    def scalar(cls, M, f):
        """Multiplication by the polynomial ``f``."""
        return cls(M, M, [{(i, e): c for e, c in f.terms.items()} for i in range(M.rank)])

    @classmethod
    def projection(cls, L):
        """``M -> M/L``."""
        M = L.ambient
        return cls(M, L.quotient(), [_basis(M, i) for i in range(M.rank)])

    @classmethod
    def inclusion(cls, L):
        """``L -> M`` from the abstract presentation of ``L``."""
        return cls(L.as_presentation(), L.ambient, L.gen_vecs)


def _basis(M, i):
    return {(i, M.ring.zero_exps): M.ring.coerce(1)}


def check_functor_law(phi, k):
    """``phi(D_k(source)) ⊆ D_k(target)``."""
    src = dk(phi.source, k).submodule
    tgt = dk(phi.target, k).submodule
    img = phi.image(src)
    ok = img <= tgt
    return Verdict(ok, "functor-law", None,
                   [f"image of D_{k}(source) {'inside' if ok else 'NOT inside'} D_{k}(target)"],
                   {"image": img.gb.strings(), "target": tgt.gb.strings()})


def submodule_in_ambient(L, sub):
    """A submodule of ``L.as_presentation()`` pushed into ``L``'s ambient module."""
    return Submodule(L.ambient, L.image_of(sub.gen_vecs))


def check_exactness_laws(L, k):
    """Intersection, left exactness and finite direct sums for ``L ⊆ M``.

    (1) ``D_k(L) = D_k(M) ∩ L`` inside ``M``;
    (2) the kernel of ``D_k(M) -> M/L``, computed from syzygies, equals the
        image of ``D_k(L)``, and ``D_k(M)`` maps into ``D_k(M/L)``;
    (3) ``D_k(M ⊕ M/L) = D_k(M) ⊕ D_k(M/L)``.
    """
    if not isinstance(L, Submodule):
        raise ContractError("L must be a submodule")
    M = L.ambient
    dkM = dk(M, k).submodule
    dkL = submodule_in_ambient(L, dk(L.as_presentation(), k).submodule)
    meet = intersect(dkM, L)
    law1 = dkL == meet

    Q = L.quotient()
    proj = ModuleMap.projection(L)
    into = proj.image(dkM) <= dk(Q, k).submodule
    kernel = relations_among(Q, dkM.gen_vecs)
    ker = submodule_in_ambient(dkM, Submodule(dkM.as_presentation(), kernel))
    law2 = into and ker == dkL

    S = Presentation.direct_sum(M, Q)
    dkQ = dk(Q, k).submodule
    shifted = [{(pos + M.rank, e): c for (pos, e), c in v.items()} for v in dkQ.gen_vecs]
    summed = Submodule(S, dkM.gen_vecs + shifted)
    law3 = dk(S, k).submodule == summed

    trail = [
        f"D_k(L) = D_k(M) ∩ L: {law1}",
        f"ker(D_k(M) -> D_k(M/L)) = D_k(L) and image inside D_k(M/L): {law2}",
        f"D_k(M ⊕ M/L) = D_k(M) ⊕ D_k(M/L): {law3}",
    ]
    return Verdict(law1 and law2 and law3, "exactness-laws", None, trail,
                   {"dk_L": dkL.gb.strings(), "dk_M_cap_L": meet.gb.strings()})
