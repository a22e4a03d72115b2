"""The nine acceptance criteria, each timed against its budget.

Run under pytest (a summary line per criterion is printed at the end) or
directly with ``python tests/test_acceptance.py``.
"""

import sys
import time
from pathlib import Path

from dimfilter.corpus import corpus_run
from dimfilter.filtration import check_functor_law, dk, dk_oracle_monomial
from dimfilter.modules import dim_module, is_zero
from dimfilter.properties import (
    auslander_buchsbaum, claim_arithmetic, exactness_laws, ext_window, functor_laws,
    height_arithmetic, localization, s1_equivalence,
)
from dimfilter.randomized import (
    monomial_module, random_map, random_monomial_ideal, random_monomial_module,
    random_ring, rng_for,
)
from dimfilter.serre import ambient_ring_of, check_hypotheses, is_equidimensional
from dimfilter.session import parse_session
from dimfilter.vanishing import HOLDS, REFUTED, verify_theorem

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
RESULTS = []


def corpus_modules(sub=None):
    """``(label, module, session)`` for every module in the shipped corpus."""
    root = CORPUS / sub if sub else CORPUS
    out = []
    for path in sorted(root.rglob("*.session")):
        try:
            s = parse_session(path.read_text(encoding="utf-8"))
        except Exception:
            continue
        for name, M in s.modules.items():
            out.append((f"{path.stem}:{name}", M, s))
    return out


def passes_hypotheses(M):
    if is_zero(M):
        return False
    return check_hypotheses(ambient_ring_of(M), M).ok


def record(number, title, budget):
    """Decorator: time the criterion, record a pass/fail line, enforce the budget."""
    def wrap(fn):
        def run():
            start = time.perf_counter()
            detail = ""
            ok = False
            try:
                detail = fn() or ""
                ok = True
            finally:
                secs = time.perf_counter() - start
                within = secs < budget
                line = (f"criterion {number} [{'PASS' if ok and within else 'FAIL'}] "
                        f"{title}: {secs:.1f}s (limit {budget}s){'; ' + detail if detail else ''}")
                RESULTS.append(line)
            assert within, f"criterion {number} took {secs:.1f}s, over {budget}s"
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


@record(1, "functor and exactness laws, 100 seeded monomial modules", 60)
def test_functor_laws():
    checked = 0
    for seed in range(100):
        rng = rng_for(seed)
        ring = random_ring(rng, 2, 4)
        M, ideals = random_monomial_module(rng, ring)
        assert functor_laws(M, rng), seed
        assert exactness_laws(M, rng), seed
        tgt = [random_monomial_ideal(rng, ring.nvars) for _ in range(rng.randint(1, 2))]
        phi = random_map(rng, ring, ideals, tgt)
        for k in range(max(dim_module(M), 0) + 1):
            assert check_functor_law(phi, k), (seed, k)
        checked += 1
    return f"{checked} modules"


@record(2, "D_k against the monomial oracle, ideals and direct sums", 120)
def test_dk_oracle():
    count = 0
    pairs = 0
    for seed in range(30):
        rng = rng_for(1000 + seed)
        ring = random_ring(rng, 2, 4)
        I = random_monomial_ideal(rng, ring.nvars)
        J = random_monomial_ideal(rng, ring.nvars)
        for M in (monomial_module(ring, [I]), monomial_module(ring, [I, J])):
            for k in range(dim_module(M) + 1):
                assert dk(M, k).submodule == dk_oracle_monomial(M, k), (seed, k)
                pairs += 1
            count += 1
    assert count >= 40
    return f"{count} modules, {pairs} (module, k) pairs"


@record(3, "S_1 iff D_k = 0 below dim, curated corpus", 60)
def test_s1_equivalence():
    seen = 0
    for label, M, _ in corpus_modules("curated"):
        v = s1_equivalence(M)
        if v is None:
            continue
        assert v, (label, v.trail)
        seen += 1
    assert seen >= 10
    return f"{seen} modules"


@record(4, "S_n against condition (ii) for every n up to dim", 120)
def test_theorem_harness():
    rows = 0
    modules = 0
    for label, M, s in corpus_modules():
        if not passes_hypotheses(M) or dim_module(M) < 1:
            continue
        rep = verify_theorem(M, dim_module(M), s.declared_primes)
        assert rep.ok, (label, [(r.n, bool(r.sn), r.cond.status) for r in rep.rows])
        rows += len(rep.rows)
        modules += 1
    planes = corpus_modules("curated")
    A = next(M for label, M, _ in planes if label == "two_planes:A")
    rep = verify_theorem(A, 2)
    assert [(bool(r.sn), r.cond.status) for r in rep.rows] == [(True, HOLDS), (False, REFUTED)]
    w = rep.rows[1].cond.witness
    assert (str(w.prime), w.i, w.r) == ("(x, y, z, w)", 1, 0)
    C = next(M for label, M, _ in planes if label == "coker_column:C")
    rep = verify_theorem(C, 3)
    assert [(bool(r.sn), r.cond.status) for r in rep.rows] == \
        [(True, HOLDS), (True, HOLDS), (False, REFUTED)]
    w = rep.rows[2].cond.witness
    assert (w.i, w.r) == (2, 0)
    return f"{modules} modules, {rows} rows agree"


@record(5, "localization at i = 0 on monomial corpus modules", 60)
def test_localization():
    modules = 0
    for label, M, _ in corpus_modules():
        v = localization(M)
        if v is None:
            continue
        assert v, (label, v.trail)
        modules += 1
    return f"{modules} modules"


@record(6, "hypothesis gate", 60)
def test_hypothesis_gate():
    mods = {label: M for label, M, _ in corpus_modules("curated")}
    bad = check_hypotheses(ambient_ring_of(mods["mixed_dimension:B"]))
    assert not bad.ok and bad.equidimensional is False
    for label in ("two_planes:A", "cubic_surface:H", "quadric_fp:H",
                  "determinantal:D", "free_module:F", "coker_column:C"):
        assert check_hypotheses(ambient_ring_of(mods[label])).ok, label
    return "1 rejected, 6 accepted"


@record(7, "height and localized-dimension arithmetic", 60)
def test_arithmetic():
    chains = 0
    claims = 0
    for label, M, s in corpus_modules():
        v = height_arithmetic(M)
        if v is not None:
            assert v, (label, v.trail)
            chains += 1
        if not is_zero(M) and is_equidimensional(M):
            v = claim_arithmetic(M, s.declared_primes)
            assert v, (label, v.trail)
            claims += 1
    return f"{chains} modules with prime chains, {claims} with witness primes"


@record(8, "Auslander-Buchsbaum, Ext window and Ext dimension bound", 60)
def test_homological_consistency():
    graded = 0
    for label, M, _ in corpus_modules():
        if not M.is_graded():
            continue
        v = auslander_buchsbaum(M)
        assert v, (label, v.trail)
        w = ext_window(M)
        if w is not None:
            assert w, (label, w.trail)
        graded += 1
    return f"{graded} graded modules"


@record(9, "repeated corpus runs are byte-identical", 60)
def test_determinism():
    first = corpus_run(CORPUS).to_json()
    second = corpus_run(CORPUS).to_json()
    assert first == second
    assert corpus_run(CORPUS, jobs=2).to_json() == first
    return f"{len(first)} bytes"


CRITERIA = [test_functor_laws, test_dk_oracle, test_s1_equivalence, test_theorem_harness,
            test_localization, test_hypothesis_gate, test_arithmetic,
            test_homological_consistency, test_determinism]


if __name__ == "__main__":
    failed = 0
    for crit in CRITERIA:
        try:
            crit()
        except AssertionError:
            failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
