"""Condition (ii): vanishing of the derived filtration functors ``D^i_k(M)``.

The ``i = 0`` stratum is decided directly with ``dk``.  For ``i ≥ 1`` the
checker looks for a refuting prime: if ``H^i`` of ``M_p`` at its maximal
ideal is nonzero and ``r = dim R/p < dim M - i`` then ``D^i_r(M) ≠ 0``.
Local cohomology is read off Ext supports by local duality.  Candidate primes
are the minimal primes of the Ext annihilators, which is where a minimal
depth drop must occur; "holds" is only reported when that set is certified.
"""

from dataclasses import dataclass, field

from . import monomial
from .errors import ContractError
from .filtration import dk
from .modules import (
    PrimeIdeal, annihilator, dim_module, ext_module, ideal_product,
    is_monomial_ideal, is_zero, monomial_exps, radical_member, support_contains,
)
from .serre import ambient_ring_of, check_hypotheses, is_sn
from .verdict import Verdict

HOLDS = "holds"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"
OUT_OF_RANGE = "out of theorem range"


@dataclass
class WitnessSet:
    """Candidate primes with their provenance.

    ``provenance`` is ``complete`` (monomial decompositions only),
    ``declared`` (some primes come from declarations that were checked to
    cover the Ext supports) or ``incomplete``.
    """
    primes: list
    provenance: str
    reason: str = ""
    by_index: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def complete(self):
        return self.provenance != "incomplete"


def _cert_label(p):
    return "declared, unverified" if p.certificate == "declared" else p.certificate


@dataclass
class Witness:
    prime: PrimeIdeal
    i: int
    r: int
    ext_index: int
    bound: int

    def as_dict(self):
        return {"prime": str(self.prime), "i": self.i, "r": self.r,
                "ext_index": self.ext_index, "bound": self.bound,
                "certificate": _cert_label(self.prime)}

    def recheck(self, M):
        """Re-derive both defining conditions from scratch."""
        return (self.r == self.prime.dim and self.r < self.bound
                and self.bound == dim_module(M) - self.i
                and self.ext_index == self.prime.height - self.i
                and support_contains(self.prime, ext_module(self.ext_index, M)))


@dataclass
class ConditionIIVerdict:
    n: int
    status: str
    witness: Witness = None
    reason: str = ""
    provenance: str = ""
    cells: dict = field(default_factory=dict)  # (i, k) -> "zero" | "nonzero" | "no witness"

    def __bool__(self):
        return self.status == HOLDS


def _declared_cover(I, declared):
    """Declared primes over ``I`` if they cover ``V(I)``, else ``None``.

    Covering means the product of those primes lies in ``√I``; then every
    minimal prime of ``I`` is one of them.
    """
    over = [p for p in declared if p.contains_ideal(I)]
    if not over:
        return None
    prod = over[0].gb
    for p in over[1:]:
        prod = ideal_product(prod, p.gb)
    if all(radical_member(f, I) for f in prod.gens):
        return over
    return None


def witness_primes(M, declared=()):
    """Minimal primes of ``Ann Ext^j(M, R)`` over all ``j``, minus the zero ideal.

    Monomial annihilators are decomposed combinatorially.  Otherwise the
    ``declared`` primes containing the annihilator are used, provided they
    cover its zero set.  Failing both, the result is marked incomplete,
    except at ``j = codim M``: a depth failure at ``p`` always puts ``p`` in
    ``Supp Ext^j`` for some ``j > codim M``, so those primes are never needed.
    """
    ring = M.ring
    d = ring.nvars
    c = d - dim_module(M)
    found = {}
    by_index = {}
    provenance = "complete"
    reason = ""
    notes = []
    for j in range(d + 1):
        E = ext_module(j, M)
        if is_zero(E):
            continue
        ann = annihilator(E)
        if is_monomial_ideal(ann):
            sets = monomial.minimal_primes(monomial_exps(ann), d)
            primes = [PrimeIdeal.from_variables(ring, s) for s in sets if s]
        else:
            primes = _declared_cover(ann, declared)
            if primes is None:
                if j <= c:
                    # depth failures live in Supp Ext^j for j > codim only
                    notes.append(f"Ext^{j}: not decomposed (not needed at the codimension)")
                    continue
                provenance = "incomplete"
                reason = f"Ann Ext^{j} is not monomial and no declared primes cover it"
                notes.append(reason)
                continue
            primes = [p for p in primes if p.height > 0]
            if provenance == "complete":
                provenance = "declared"
            notes.append(f"Ext^{j}: covered by declared primes")
        by_index[j] = primes
        for p in primes:
            found.setdefault(tuple(p.gb.strings()), p)
    ordered = sorted(found.values(), key=lambda p: (p.height, p.gb.strings()))
    return WitnessSet(ordered, provenance, reason, by_index, notes)


def local_cohomology_nonvanishing(M, p, i):
    """Whether ``H^i`` of ``M_p`` at the maximal ideal of ``R_p`` is nonzero,
    i.e. ``p ∈ Supp Ext^{ht p - i}(M, R)``."""
    if not support_contains(p, M):
        raise ContractError(f"prime {p} is outside the support")
    if i < 0 or i > p.height:
        raise ContractError(f"i must lie in 0..{p.height}")
    return support_contains(p, ext_module(p.height - i, M))


def cond_ii(M, n, declared=(), witnesses=None):
    """Condition (ii) for ``n``: ``D^i_k(M) = 0`` for ``0 ≤ i < n`` and
    ``0 ≤ k < dim M - i``."""
    if is_zero(M):
        raise ContractError("condition (ii) needs a nonzero module")
    dimM = dim_module(M)
    if not 1 <= n <= dimM:
        return ConditionIIVerdict(n, OUT_OF_RANGE,
                                  reason=f"n must lie between 1 and dim M = {dimM}")
    cells = {}
    for k in range(dimM):
        zero = dk(M, k).is_zero()
        cells[(0, k)] = "zero" if zero else "nonzero"
        if not zero:
            return ConditionIIVerdict(n, REFUTED, None,
                                      f"D_{k}(M) ≠ 0", "direct", cells)
    if n == 1:
        return ConditionIIVerdict(n, HOLDS, None, "i = 0 stratum computed directly",
                                  "direct", cells)
    if witnesses is None:
        witnesses = witness_primes(M, declared)
    for i in range(1, n):
        for p in witnesses.primes:
            if not support_contains(p, M) or p.height < i:
                continue
            r = p.dim
            if r < dimM - i and local_cohomology_nonvanishing(M, p, i):
                w = Witness(p, i, r, p.height - i, dimM - i)
                if not w.recheck(M):
                    raise AssertionError(f"witness {w} fails its recheck")
                cells[(i, r)] = "nonzero"
                return ConditionIIVerdict(n, REFUTED, w,
                                          f"D^{i}_{r}(M) localizes to a nonzero module at {p}",
                                          witnesses.provenance, cells)
        for k in range(dimM - i):
            cells.setdefault((i, k), "no witness")
    if not witnesses.complete:
        return ConditionIIVerdict(n, INCONCLUSIVE, None, witnesses.reason,
                                  witnesses.provenance, cells)
    return ConditionIIVerdict(n, HOLDS, None,
                              f"no refuting prime among {len(witnesses.primes)} witnesses",
                              witnesses.provenance, cells)


@dataclass
class TheoremRow:
    n: int
    sn: Verdict
    cond: ConditionIIVerdict

    @property
    def decided(self):
        return self.cond.status in (HOLDS, REFUTED)

    @property
    def agree(self):
        return self.decided and bool(self.sn) == (self.cond.status == HOLDS)


@dataclass
class TheoremReport:
    hypotheses: object
    rows: list = field(default_factory=list)

    @property
    def ok(self):
        return all(row.agree for row in self.rows)


def verify_theorem(M, nmax, declared=()):
    """Compare ``S_n`` with condition (ii) for ``n = 1..nmax``."""
    A = ambient_ring_of(M)
    hyp = check_hypotheses(A, M)
    if not hyp.ok:
        raise HypothesisFailure(hyp)
    dimM = dim_module(M)
    if not 1 <= nmax <= dimM:
        raise ContractError(f"max n must lie between 1 and dim M = {dimM}")
    witnesses = witness_primes(M, declared)
    rows = []
    for n in range(1, nmax + 1):
        rows.append(TheoremRow(n, is_sn(M, n, witnesses), cond_ii(M, n, declared, witnesses)))
    return TheoremReport(hyp, rows)


class HypothesisFailure(ContractError):
    def __init__(self, report):
        self.report = report
        failed = [note for note in report.notes if "False" in note or "undetermined" in note]
        super().__init__("hypotheses fail: " + "; ".join(failed))


def localization_support_check(M, p, k):
    """At ``i = 0``: ``p ∈ Supp D_{k+r}(M)`` iff ``D_k(M_p) ≠ 0``, ``r = dim R/p``.

    The right side uses associated primes from the monomial decomposition:
    some associated ``q ⊆ p`` with ``ht p - ht q ≤ k``.
    """
    if not M.is_monomial():
        raise ContractError("localization check needs a monomial module")
    if p.certificate != "monomial":
        raise ContractError("localization check needs a monomial prime")
    r = p.dim
    left = support_contains(p, dk(M, k + r).submodule.as_presentation())
    pv = p.variables()
    n = M.ring.nvars
    right = False
    for I in M.monomial_summands():
        for q in monomial.associated_primes(I, n):
            if q <= pv and len(pv) - len(q) <= k:
                right = True
    ok = left == right
    return Verdict(ok, "localization", None,
                   [f"p in Supp D_{k + r}(M): {left}",
                    f"associated q ⊆ p with height gap ≤ {k}: {right}"],
                   {"left": left, "right": right, "r": r})
