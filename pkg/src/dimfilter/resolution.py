"""Free resolutions by Schreyer's algorithm, with unit-entry pruning.

A differential is stored as a list of columns, each column a sparse dict
``{row: Poly}``; column ``j`` of ``d_i`` is the image of the j-th basis
element of ``F_i`` in ``F_{i-1}``.
"""

from .errors import ContractError
from .groebner import groebner_vecs, leading, schreyer_syzygies
from .poly import DEGREVLEX, FreeElem, Poly


def degree_shifts(ring, rank, columns):
    """Generator degrees making every column homogeneous, or ``None``.

    ``columns`` are sparse ``{row: Poly}`` dicts.
    """
    parent = list(range(rank))
    offset = [0] * rank  # degree(i) = degree(root) + offset[i]

    def find(i):
        if parent[i] == i:
            return i, 0
        r, o = find(parent[i])
        parent[i] = r
        offset[i] += o
        return r, offset[i]

    for col in columns:
        ref = None
        for row, f in col.items():
            if not f.is_homogeneous():
                return None
            d = f.degree()
            # degree(row) + d is the column degree
            if ref is None:
                ref = (row, d)
                continue
            r0, d0 = ref
            a, oa = find(r0)
            b, ob = find(row)
            # deg(r0) - deg(row) must equal d - d0
            want = d - d0
            if a == b:
                if oa - ob != want:
                    return None
            else:
                parent[b] = a
                offset[b] = oa - want - ob
    return [find(i)[1] for i in range(rank)]


def vec_to_column(ring, vec):
    col = {}
    for (pos, e), c in vec.items():
        col.setdefault(pos, {})[e] = c
    return {r: Poly(ring, t) for r, t in col.items()}


def column_to_vec(col):
    vec = {}
    for r, f in col.items():
        for e, c in f.terms.items():
            vec[(r, e)] = c
    return vec


def _lex_sort(vecs, order):
    """Sort so that, within a position, leading monomials decrease in lex."""
    leads = [leading(v, order) for v in vecs]
    idx = sorted(range(len(vecs)), key=lambda i: (leads[i][0], tuple(-a for a in leads[i][1])))
    return [vecs[i] for i in idx]


class Resolution:
    """Free resolution ``F_0 <- F_1 <- ... <- F_L`` of ``coker d_1``."""

    def __init__(self, ring, ranks, differentials, minimal=False):
        self.ring = ring
        self.ranks = list(ranks)
        self.differentials = differentials  # differentials[i-1] is d_i
        self.minimal = minimal

    @property
    def length(self):
        return len(self.differentials)

    def d(self, i):
        """Columns of ``d_i : F_i -> F_{i-1}``; empty outside 1..length."""
        if 1 <= i <= len(self.differentials):
            return self.differentials[i - 1]
        return [{} for _ in range(self.rank(i))]

    def rank(self, i):
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    def matrix(self, i):
        """``d_i`` as a dense row-major list of ``Poly``."""
        rows, cols = self.rank(i - 1), self.rank(i)
        m = [[self.ring.zero() for _ in range(cols)] for _ in range(rows)]
        for j, col in enumerate(self.d(i)):
            for r, f in col.items():
                m[r][j] = f
        return m

    def column_elems(self, i):
        rows = self.rank(i - 1)
        out = []
        for col in self.d(i):
            out.append(FreeElem(self.ring, [col.get(r, self.ring.zero()) for r in range(rows)]))
        return out

    def __repr__(self):
        return f"Resolution(ranks={self.ranks})"


def schreyer_resolution(ring, rank, relation_vecs, order=DEGREVLEX):
    """Resolution from iterated Schreyer syzygies.

    Level one is the reduced Gröbner basis of the relations; every further
    level is the Schreyer syzygy basis of the previous one.  Bases are sorted
    so leading monomials in one position decrease lexicographically, which
    makes each level lose one more variable from its leading terms; once the
    leading terms are variable-free the kernel is a free summand and the
    corresponding columns are dropped instead of adding a level.
    """
    p = ring.p
    gb = groebner_vecs(relation_vecs, order, p)
    level = _lex_sort(gb, order)
    cur_order = order
    vec_levels = [level]
    ranks = [rank, len(level)]
    while level:
        syz, sorder = schreyer_syzygies(level, cur_order, p)
        if not syz:
            break
        leads = [leading(s, sorder) for s in syz]
        if all(not any(e) for _, e in leads):
            drop = {pos for pos, _ in leads}
            keep = [j for j in range(len(level)) if j not in drop]
            vec_levels[-1] = [level[j] for j in keep]
            ranks[-1] = len(keep)
            break
        level = _lex_sort(syz, sorder)
        cur_order = sorder
        vec_levels.append(level)
        ranks.append(len(level))
    diffs = [[vec_to_column(ring, v) for v in lv] for lv in vec_levels]
    while diffs and not diffs[-1]:
        diffs.pop()
        ranks.pop()
    return Resolution(ring, ranks, diffs)


def _is_unit(f):
    return len(f.terms) == 1 and not any(next(iter(f.terms)))


def prune(res):
    """Cancel nonzero constant entries (Gaussian elimination on the complex).

    On a graded resolution the result is minimal.  Returns a new Resolution.
    """
    ring = res.ring
    diffs = [[dict(c) for c in d] for d in res.differentials]
    ranks = list(res.ranks)
    k = 0
    while k < len(diffs):
        hit = _find_unit(diffs[k])
        if hit is None:
            k += 1
            continue
        a, b = hit
        d = diffs[k]
        u_inv = ring.inv(next(iter(d[b][a].terms.values())))
        pivot = d[b]
        new_cols = []
        for j, col in enumerate(d):
            if j == b:
                continue
            col = dict(col)
            f = col.get(a)
            if f is not None:
                s = f * ring.const(u_inv)
                for r, g in pivot.items():
                    v = col.get(r, ring.zero()) - s * g
                    if v.terms:
                        col[r] = v
                    else:
                        col.pop(r, None)
            col.pop(a, None)
            new_cols.append({(r - 1 if r > a else r): g for r, g in col.items()})
        diffs[k] = new_cols
        ranks[k] -= 1
        ranks[k + 1] -= 1
        if k + 1 < len(diffs):
            diffs[k + 1] = [{(r - 1 if r > b else r): g for r, g in col.items() if r != b}
                            for col in diffs[k + 1]]
        if k > 0:
            diffs[k - 1] = [c for j, c in enumerate(diffs[k - 1]) if j != a]
    while diffs and not diffs[-1]:
        diffs.pop()
        ranks.pop()
    return Resolution(ring, ranks, diffs, minimal=res.minimal)


def _find_unit(d):
    for j, col in enumerate(d):
        for r in sorted(col):
            if _is_unit(col[r]):
                return r, j
    return None


def resolve(ring, rank, relation_vecs, minimal=False):
    """Free resolution of ``R^rank / span(relation_vecs)``.

    With ``minimal`` the relations must be graded; the result is then the
    minimal graded resolution and its length is checked against the number of
    variables.
    """
    if minimal:
        cols = [vec_to_column(ring, v) for v in relation_vecs]
        if degree_shifts(ring, rank, cols) is None:
            raise ContractError("minimal resolution requested for a non-graded presentation")
    res = prune(schreyer_resolution(ring, rank, relation_vecs))
    res.minimal = minimal
    if res.length > ring.nvars:
        raise AssertionError(
            f"resolution of length {res.length} exceeds the Hilbert syzygy bound {ring.nvars}")
    return res
