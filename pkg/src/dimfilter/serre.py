"""Depth, local depth and dimension at primes, Serre's condition S_n,
equidimensionality, and the ring hypotheses, all through Ext modules over the
polynomial ring (local duality).  Nothing here uses the dimension filtration.
"""

from dataclasses import dataclass, field

from .errors import ContractError
from .modules import (
    Presentation, annihilator, dim_module, ext_module, is_zero, radical_equal,
    support_contains,
)
from .verdict import Verdict

INFINITY = float("inf")


@dataclass
class DepthProfile:
    module: Presentation
    depth: object
    projective_dimension: int
    ext_table: dict = field(default_factory=dict)  # j -> (nonzero, dim)


def _require_graded(M):
    if not M.is_graded():
        raise ContractError("module is not graded")


def ext_table(M):
    """``{j: (Ext^j nonzero?, dim Ext^j)}`` for ``j = 0..d``."""
    out = {}
    for j in range(M.ring.nvars + 1):
        E = ext_module(j, M)
        out[j] = (not is_zero(E), dim_module(E))
    return out


def depth_graded(M):
    """``d - max{j : Ext^j(M, R) ≠ 0}``; infinity for the zero module."""
    _require_graded(M)
    nonzero = [j for j, (nz, _) in ext_table(M).items() if nz]
    if not nonzero:
        return INFINITY
    return M.ring.nvars - max(nonzero)


def depth_profile(M):
    _require_graded(M)
    res = M.resolution(minimal=True)
    table = ext_table(M)
    depth = depth_graded(M)
    pd = res.length
    if depth != INFINITY and depth + pd != M.ring.nvars:
        raise AssertionError(f"Auslander-Buchsbaum fails: depth {depth} + pd {pd}")
    return DepthProfile(M, depth, pd, table)


def is_equidimensional(M):
    """All minimal primes of ``M`` have the same dimension: ``√Ann M`` equals
    the radical of ``Ann Ext^c(M, R)`` for ``c = codim M``."""
    if is_zero(M):
        raise ContractError("zero module")
    c = M.ring.nvars - dim_module(M)
    annM = annihilator(M)
    annE = annihilator(ext_module(c, M))
    ok = radical_equal(annM, annE)
    return Verdict(ok, "equidimensional", None,
                   [f"radical of Ann M {'=' if ok else '≠'} radical of Ann Ext^{c}"],
                   {"codim": c, "ann": annM.strings(), "ann_ext": annE.strings()})


def _equidim_cached(M):
    return M.cached("equidim", lambda: bool(is_equidimensional(M)))


def local_dim_at(M, p):
    """``dim M_p = height(p) - codim M`` for equidimensional ``M``; ``-1`` when
    ``p`` is outside the support."""
    if not support_contains(p, M):
        return -1
    if not _equidim_cached(M):
        raise ContractError("local_dim_at needs an equidimensional module; "
                            "run check_hypotheses / is_equidimensional first")
    return p.height - (M.ring.nvars - dim_module(M))


def local_depth_at(M, p):
    """``depth M_p = height(p) - max{j : p ∈ Supp Ext^j(M, R)}``."""
    if not support_contains(p, M):
        raise ContractError(f"prime {p} is outside the support")
    js = [j for j in range(M.ring.nvars + 1) if support_contains(p, ext_module(j, M))]
    return p.height - max(js)


def sn_global(M, n):
    """The Ext-dimension criterion: ``dim Ext^j ≤ d - j - n`` for ``codim < j ≤ d``,
    vacuous where ``Ext^j`` vanishes.

    Returns ``(holds, failing j or None)``.
    """
    d = M.ring.nvars
    c = d - dim_module(M)
    for j in range(c + 1, d + 1):
        E = ext_module(j, M)
        if not is_zero(E) and dim_module(E) > d - j - n:
            return False, j
    return True, None


def is_sn(M, n, witnesses=None):
    """Serre's condition S_n by the global Ext criterion, cross-checked
    pointwise at witness primes (``derived_vanish.witness_primes`` by default).
    """
    if n < 1:
        raise ContractError("n must be ≥ 1")
    if is_zero(M):
        raise ContractError("S_n is not defined here for the zero module")
    _require_graded(M)
    if not _equidim_cached(M):
        raise ContractError("S_n is checked on equidimensional modules only; "
                            "run hypotheses on this module")
    holds, j = sn_global(M, n)
    trail = [f"global Ext criterion: {'holds' if holds else f'fails at j={j}'}"]
    witness = None
    if j is not None:
        E = ext_module(j, M)
        witness = {"j": j, "dim_ext": dim_module(E), "bound": M.ring.nvars - j - n}
    if witnesses is None:
        from .vanishing import witness_primes
        witnesses = witness_primes(M)
    data = {}
    if witnesses.complete:
        pointwise = True
        failing = None
        for p in witnesses.primes:
            if not support_contains(p, M):
                continue
            if local_depth_at(M, p) < min(n, local_dim_at(M, p)):
                pointwise = False
                failing = p
                break
        trail.append(f"pointwise check at {len(witnesses.primes)} witness primes "
                     f"({witnesses.provenance}): {'holds' if pointwise else f'fails at {failing}'}")
        if pointwise != holds:
            raise AssertionError(
                f"S_{n}: global criterion says {holds}, witness primes say {pointwise}")
        if failing is not None and witness is not None:
            witness["prime"] = str(failing)
        data["provenance"] = witnesses.provenance
    else:
        trail.append(f"pointwise cross-check skipped: {witnesses.reason}")
        data["provenance"] = "incomplete"
    return Verdict(holds, f"S_{n}", witness, trail, data)


@dataclass
class HypothesisReport:
    finite_dim: bool
    catenary: bool
    equidimensional: bool
    height_condition: object  # True, False or None (undetermined)
    module_equidimensional: object = None
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return (self.finite_dim and self.catenary and self.equidimensional
                and self.height_condition is True
                and self.module_equidimensional is not False)


def check_hypotheses(A, M=None):
    """The four ring assumptions for an affine algebra ``A = R/I``.

    Finite dimension is certified by the computed dimension; catenarity holds
    for every affine algebra over a field; equidimensionality is computed;
    the height condition on maximal over minimal primes follows from it for
    affine algebras.  If ``M`` is given, its equidimensionality is added.
    """
    if A.rank != 1:
        raise ContractError("hypotheses are checked on a cyclic presentation R/I")
    if is_zero(A):
        raise ContractError("unit ideal: A is the zero ring")
    dimA = dim_module(A)
    notes = [f"(1) dim A = {dimA}",
             "(2) catenary: automatic for affine algebras over a field"]
    eq = bool(is_equidimensional(A))
    notes.append(f"(3) equidimensional: {eq}")
    if eq:
        height = True
        notes.append("(4) height(m/p) = dim A: follows from (3) for affine algebras")
    else:
        height = None
        notes.append("(4) undetermined since (3) fails")
    meq = None
    if M is not None:
        meq = bool(is_equidimensional(M))
        notes.append(f"module equidimensional: {meq}")
    return HypothesisReport(True, True, eq, height, meq, notes)


def ambient_ring_of(M):
    """``R/I`` from a module's quotient tag, or ``R`` itself."""
    if M.quotient:
        return Presentation.quotient_ring(list(M.quotient), name="A")
    return Presentation(M.ring, 1, [], name="R")
