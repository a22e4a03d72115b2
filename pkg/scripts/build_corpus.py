"""Write the corpus sidecars and the randomized monomial sessions.

Curated expectations are the hand derivations recorded in each session's
provenance comment, typed in below.  Randomized expectations come only from
the combinatorial monomial routines (vertex covers and irreducible
decompositions), never from the Gröbner/Ext pipeline being tested.

    python scripts/build_corpus.py [corpus-dir]
"""

import json
import random
import sys
from pathlib import Path

from dimfilter import monomial

ROOT = Path(__file__).resolve().parent.parent
VARS = "xyzw"
N_RANDOM = 24


def expect(command, verdicts, exit=0, data=None):
    item = {"command": command, "verdicts": verdicts, "exit": exit}
    if data:
        item["data"] = data
    return item


def agree(n):
    return ["agree"] * n + ["pass"]


CURATED = {
    "two_planes": [
        expect("hypotheses --module A", ["pass"]),
        expect("dim --module A", ["computed"], data=[{"dim": 2, "codim": 2}]),
        expect("ext --module A --j 1", ["zero"]),
        expect("ext --module A --j 2", ["nonzero"], data=[{"dim": 2}]),
        expect("ext --module A --j 3", ["nonzero"], data=[{"dim": 0}]),
        expect("ext --module A --j 4", ["zero"]),
        expect("dk --module A --k 0", ["zero"]),
        expect("dk --module A --k 1", ["zero"]),
        expect("dk --module A --k 2", ["nonzero"]),
        expect("sn --module A --n 1", ["true"]),
        expect("sn --module A --n 2", ["false"]),
        expect("verify --module A --max-n 2", agree(2),
               data=[{"cond_ii": "holds"}, {"cond_ii": "refuted"}]),
        expect("gb --target P", ["computed"], data=[{"kind": "prime (monomial)"}]),
    ],
    "embedded_point": [
        expect("hypotheses --module M", ["pass"]),
        expect("dim --module M", ["computed"], data=[{"dim": 1}]),
        expect("dk --module M --k 0", ["nonzero"], data=[{"generators": ["(x)"]}]),
        expect("dk --module M --k 1", ["nonzero"]),
        expect("dk --module M --k -1", ["error"], exit=1),
        expect("ext --module M --j 2", ["nonzero"], data=[{"dim": 0}]),
        expect("sn --module M --n 1", ["false"]),
        expect("verify --module M --max-n 1", agree(1)),
        expect("verify --module M --max-n 2", ["error"], exit=1),
    ],
    "coker_column": [
        expect("hypotheses --module C", ["pass"]),
        expect("dim --module C", ["computed"], data=[{"dim": 3, "rank": 3}]),
        expect("ext --module C --j 1", ["nonzero"], data=[{"dim": 0}]),
        expect("ext --module C --j 2", ["zero"]),
        expect("dk --module C --k 0", ["zero"]),
        expect("dk --module C --k 2", ["zero"]),
        expect("sn --module C --n 2", ["true"]),
        expect("sn --module C --n 3", ["false"]),
        expect("verify --module C --max-n 3", agree(3),
               data=[{"cond_ii": "holds"}, {"cond_ii": "holds"}, {"cond_ii": "refuted"}]),
    ],
    "cubic_surface": [
        expect("hypotheses --module H", ["pass"]),
        expect("dim --module H", ["computed"], data=[{"dim": 2}]),
        expect("ext --module H --j 1", ["nonzero"], data=[{"dim": 2}]),
        expect("ext --module H --j 2", ["zero"]),
        expect("sn --module H --n 2", ["true"]),
        expect("verify --module H --max-n 2", agree(2)),
    ],
    "quadric_fp": [
        expect("hypotheses --module H", ["pass"]),
        expect("dim --module H", ["computed"], data=[{"dim": 3}]),
        expect("sn --module H --n 3", ["true"]),
        expect("verify --module H --max-n 3", agree(3)),
    ],
    "determinantal": [
        expect("hypotheses --module D", ["pass"]),
        expect("dim --module D", ["computed"], data=[{"dim": 4, "codim": 2}]),
        expect("gb --target I", ["computed"], data=[{"size": 3}]),
        expect("ext --module D --j 2", ["nonzero"], data=[{"dim": 4, "generators": 2}]),
        expect("ext --module D --j 3", ["zero"]),
        expect("sn --module D --n 4", ["true"]),
        expect("verify --module D --max-n 4", agree(4)),
    ],
    "free_module": [
        expect("hypotheses --module F", ["pass"]),
        expect("dim --module F", ["computed"], data=[{"dim": 3, "rank": 2}]),
        expect("ext --module F --j 0", ["nonzero"], data=[{"dim": 3}]),
        expect("ext --module F --j 1", ["zero"]),
        expect("sn --module F --n 3", ["true"]),
        expect("verify --module F --max-n 3", agree(3)),
    ],
    "mixed_dimension": [
        expect("hypotheses --module B", ["reject"], data=[{"equidimensional": False}]),
        expect("dim --module B", ["computed"], data=[{"dim": 3}]),
        expect("verify --module B --max-n 1", ["error"], exit=1),
        expect("sn --module B --n 1", ["error"], exit=1),
    ],
    "zero_module": [
        expect("dim --module Z", ["computed"], data=[{"dim": -1}]),
        expect("dk --module Z --k 0", ["zero"]),
        expect("sn --module Z --n 1", ["error"], exit=1),
        expect("hypotheses --module Z", ["error"], exit=1),
    ],
    "linear_column": [
        expect("hypotheses --module C", ["pass"]),
        expect("gb --target P", ["computed"], data=[{"kind": "prime (linear)"}]),
        expect("gb --target L", ["computed"], data=[{"gb": ["y", "x"]}]),
        expect("ext --module C --j 1", ["nonzero"], data=[{"dim": 1}]),
        expect("sn --module C --n 2", ["true"], data=[{"provenance": "declared"}]),
        expect("sn --module C --n 3", ["false"]),
        expect("verify --module C --max-n 4", agree(4)),
    ],
    "quartic_curve": [
        expect("hypotheses --module Q", ["pass"]),
        expect("dim --module Q", ["computed"], data=[{"dim": 2}]),
        expect("ext --module Q --j 3", ["nonzero"], data=[{"dim": 0}]),
        expect("sn --module Q --n 1", ["true"]),
        expect("sn --module Q --n 2", ["false"]),
        expect("verify --module Q --max-n 2", agree(2)),
    ],
    "assumed_prime": [
        expect("hypotheses --module C", ["pass"]),
        expect("gb --target P", ["computed"], data=[{"kind": "prime (declared)"}]),
        expect("sn --module C --n 1", ["true"]),
        expect("sn --module C --n 2", ["false"], data=[{"provenance": "declared"}]),
        expect("verify --module C --max-n 3", agree(3)),
    ],
}

PARSE_ERRORS = {"bad_syntax": [1, 12]}


def poly(e):
    parts = []
    for v, a in zip(VARS, e):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts) or "1"


def random_ideal(rng, n):
    gens = []
    for _ in range(rng.randint(1, 4)):
        e = [0] * n
        for _ in range(rng.randint(1, 3)):
            e[rng.randrange(n)] += 1
        gens.append(tuple(e))
    return monomial.minimalize(gens)


def oracle(ideals, n):
    """Expectations for ``⊕ R/I_i`` from combinatorics alone."""
    # Supp M is the union of the summand supports; its minimal primes are
    # the inclusion-minimal ones among all summand minimal primes
    found = {s for I in ideals for s in monomial.minimal_primes(I, n)}
    mins = [s for s in found if not any(t < s for t in found)]
    dim = n - min(len(s) for s in mins) if mins else -1
    heights = {len(s) for s in mins}
    equidim = len(heights) == 1
    dk_zero = []
    for k in range(dim + 1):
        zero = True
        for I in ideals:
            J = [(0,) * n]
            for q in monomial.irreducible_components(I, n):
                if n - len(monomial.radical_support(q)) > k:
                    J = monomial.intersect(J, monomial.component_gens(q))
            if not monomial.contains(I, J):
                zero = False
        dk_zero.append(zero)
    # with equal-dimensional minimal primes, S_1 means no embedded primes
    s1 = equidim and all(len(q) in heights
                         for I in ideals for q in monomial.associated_primes(I, n))
    return dim, equidim, dk_zero, s1


def random_session(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    summands = 1 if rng.random() < 0.6 else 2
    ideals = [random_ideal(rng, n) for _ in range(summands)]
    lines = [f"# provenance: randomized monomial session, seed {seed}; expectations from",
             "# the combinatorial monomial oracle (vertex covers, irreducible components).",
             f"ring R = QQ[{', '.join(VARS[:n])}]"]
    if summands == 1:
        lines.append(f"ideal I = ({', '.join(poly(e) for e in ideals[0])})")
        lines.append("module M = quotient I")
    else:
        cols = [(i, e) for i, I in enumerate(ideals) for e in I]
        rows = [", ".join(poly(e) if i == r else "0" for i, e in cols) for r in range(summands)]
        lines.append(f"module M = coker [{'; '.join(rows)}]")
    dim, equidim, dk_zero, s1 = oracle(ideals, n)
    items = [expect("dim --module M", ["computed"], data=[{"dim": dim}]),
             expect("hypotheses --module M", ["pass" if equidim else "reject"])]
    for k, zero in enumerate(dk_zero):
        items.append(expect(f"dk --module M --k {k}", ["zero" if zero else "nonzero"]))
    if equidim:
        items.append(expect("sn --module M --n 1", ["true" if s1 else "false"]))
        if dim >= 1:
            items.append(expect(f"verify --module M --max-n {dim}", agree(dim)))
    else:
        items.append(expect("sn --module M --n 1", ["error"], exit=1))
    note = f"seed {seed}: monomial oracle"
    return "\n".join(lines) + "\n", {"schema": 1, "note": note, "expect": items}


def write_json(path, data):
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def main(argv):
    corpus = Path(argv[1]) if len(argv) > 1 else ROOT / "corpus"
    curated = corpus / "curated"
    for name, items in CURATED.items():
        if not (curated / f"{name}.session").exists():
            raise SystemExit(f"missing curated session {name}")
        write_json(curated / f"{name}.expect.json",
                   {"schema": 1, "note": "hand derivation, see the session header",
                    "expect": items})
    for name, where in PARSE_ERRORS.items():
        write_json(curated / f"{name}.expect.json",
                   {"schema": 1, "note": "parser error location", "parse_error": where})
    rand = corpus / "random"
    rand.mkdir(parents=True, exist_ok=True)
    for seed in range(N_RANDOM):
        text, sidecar = random_session(seed)
        (rand / f"mono_{seed:02d}.session").write_text(text, encoding="utf-8")
        write_json(rand / f"mono_{seed:02d}.expect.json", sidecar)
    print(f"wrote {len(CURATED) + len(PARSE_ERRORS)} curated and {N_RANDOM} random sidecars")


if __name__ == "__main__":
    main(sys.argv)
