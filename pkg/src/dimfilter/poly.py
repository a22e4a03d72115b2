"""Exact sparse polynomials and free-module elements over QQ or a prime field."""

from fractions import Fraction
from operator import add

from .errors import ContractError

MAX_VARS = 8
MAX_DEGREE = 12


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


class Ring:
    """Polynomial ring ``k[x_1, ..., x_n]`` with standard grading.

    ``modulus=None`` selects the rationals; otherwise the prime field of that
    order.  Variable order in ``variables`` fixes x_1 > x_2 > ... for all
    monomial orders.
    """

    def __init__(self, variables, modulus=None, max_vars=MAX_VARS):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ContractError(f"duplicate variable names in {variables}")
        if len(variables) > max_vars:
            raise ContractError(
                f"{len(variables)} variables exceeds the budget of {max_vars}")
        if modulus is not None:
            if not (isinstance(modulus, int) and modulus < 2**31 and _is_prime(modulus)):
                raise ContractError(f"modulus {modulus} is not a prime below 2^31")
        self.variables = variables
        self.nvars = len(variables)
        self.modulus = modulus
        self.p = modulus or 0
        self._index = {v: i for i, v in enumerate(variables)}

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.variables == other.variables
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.variables, self.modulus))

    def __repr__(self):
        field = "QQ" if self.modulus is None else f"Fp({self.modulus})"
        return f"{field}[{','.join(self.variables)}]"

    @property
    def zero_exps(self):
        return (0,) * self.nvars

    # coefficient arithmetic
    def coerce(self, c):
        if self.p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, self.p) % self.p
            return int(c) % self.p
        return Fraction(c)

    def inv(self, c):
        if self.p:
            return pow(c, -1, self.p)
        return 1 / c

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ContractError(f"unknown variable {name!r} in {self!r}") from None

    def var(self, name):
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Poly(self, {tuple(e): self.coerce(1)})

    def gens(self):
        return [self.var(v) for v in self.variables]

    def const(self, c):
        c = self.coerce(c)
        return Poly(self, {self.zero_exps: c} if c else {})

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.const(1)

    def extend(self, name):
        """Same field, one extra variable appended (placed last in the order)."""
        return Ring(self.variables + (name,), self.modulus, max_vars=self.nvars + 1)

    def fresh_name(self, base="t"):
        name = base
        i = 0
        while name in self._index:
            i += 1
            name = f"{base}{i}"
        return name


def grevlex_key(e):
    return (sum(e),) + tuple(-a for a in reversed(e))


def lex_key(e):
    return e


class MonomialOrder:
    """Order on monomials ``(position, exponents)`` of a free module.

    Position-over-term: the position priority decides first (by default an
    earlier basis element is greater), then ``kind`` on exponents.  Keys are
    memoized; ``key`` is fast enough to hand straight to ``max``/``sorted``.
    """

    def __init__(self, kind="grevlex", priority=None):
        if kind not in ("grevlex", "lex"):
            raise ContractError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.priority = tuple(priority) if priority is not None else None
        self._exp_key = grevlex_key if kind == "grevlex" else lex_key
        self._cache = _KeyCache(self._compute)
        self.key = self._cache.__getitem__

    def _compute(self, mono):
        pos, e = mono
        prio = -pos if self.priority is None else self.priority[pos]
        return (prio,) + self._exp_key(e)

    def exp_key(self, e):
        return self._exp_key(e)

    def __eq__(self, other):
        return (type(other) is MonomialOrder and self.kind == other.kind
                and self.priority == other.priority)

    def __hash__(self):
        return hash((self.kind, self.priority))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


class _KeyCache(dict):
    __slots__ = ("fn",)

    def __init__(self, fn):
        super().__init__()
        self.fn = fn

    def __missing__(self, mono):
        k = self[mono] = self.fn(mono)
        return k


DEGREVLEX = MonomialOrder("grevlex")


def mono_mul(e, f):
    return tuple(map(add, e, f))


def divides(e, f):
    for a, b in zip(e, f):
        if a > b:
            return False
    return True


def mono_lcm(e, f):
    return tuple(map(max, e, f))


def mono_div(e, f):
    return tuple(a - b for a, b in zip(e, f))


class Poly:
    """Immutable sparse polynomial: ``{exponent tuple: nonzero coefficient}``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_terms(cls, ring, items):
        terms = {}
        p = ring.p
        for e, c in items:
            c = terms.get(e, 0) + c
            if p:
                c %= p
            if c:
                terms[e] = c
            else:
                terms.pop(e, None)
        return cls(ring, terms)

    def _check(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ContractError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Poly.from_terms(self.ring, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Poly(self.ring, {e: (-c % p if p else -c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        items = [(mono_mul(e, f), a * b)
                 for e, a in self.terms.items() for f, b in other.terms.items()]
        return Poly.from_terms(self.ring, items)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ContractError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self, order=DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.exp_key(t[0]), reverse=True)

    def leading_term(self, order=DEGREVLEX):
        if not self.terms:
            raise ContractError("zero polynomial has no leading term")
        e = max(self.terms, key=order.exp_key)
        return e, self.terms[e]

    def monic(self, order=DEGREVLEX):
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        inv = self.ring.inv(c)
        p = self.ring.p
        return Poly(self.ring, {e: (a * inv % p if p else a * inv) for e, a in self.terms.items()})

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _format_coeff(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_monomial(ring, e):
    parts = []
    for name, a in zip(ring.variables, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_poly(f):
    """Print in degrevlex-descending order; output re-parses to ``f``."""
    if not f.terms:
        return "0"
    out = []
    p = f.ring.p
    for e, c in f.sorted_terms():
        if p and c > p // 2:
            c = c - p
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(f.ring, e)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


class FreeElem:
    """Element of the free module ``R^rank`` stored as a tuple of coordinates."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        coords = tuple(ring.const(c) if not isinstance(c, Poly) else c for c in coords)
        for c in coords:
            if c.ring != ring:
                raise ContractError("coordinate ring mismatch")
        self.ring = ring
        self.coords = coords

    @classmethod
    def basis(cls, ring, rank, i):
        return cls(ring, [ring.one() if j == i else ring.zero() for j in range(rank)])

    @classmethod
    def zero(cls, ring, rank):
        return cls(ring, [ring.zero()] * rank)

    @property
    def rank(self):
        return len(self.coords)

    def __add__(self, other):
        self._same(other)
        return FreeElem(self.ring, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._same(other)
        return FreeElem(self.ring, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return FreeElem(self.ring, [-a for a in self.coords])

    def scale(self, f):
        if not isinstance(f, Poly):
            f = self.ring.const(f)
        return FreeElem(self.ring, [f * a for a in self.coords])

    __rmul__ = scale

    def _same(self, other):
        if not isinstance(other, FreeElem) or other.ring != self.ring or other.rank != self.rank:
            raise ContractError("free-module elements of different ring or rank")

    def is_zero(self):
        return not any(c.terms for c in self.coords)

    def __eq__(self, other):
        return (isinstance(other, FreeElem) and self.ring == other.ring
                and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return "(" + ", ".join(format_poly(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"FreeElem{self}"


# Conversion to the engine's dict representation {(pos, exps): coeff}.

def to_vec(x):
    if isinstance(x, Poly):
        return {(0, e): c for e, c in x.terms.items()}
    vec = {}
    for i, c in enumerate(x.coords):
        for e, a in c.terms.items():
            vec[(i, e)] = a
    return vec


def vec_to_elem(ring, vec, rank):
    coords = [dict() for _ in range(rank)]
    for (i, e), c in vec.items():
        coords[i][e] = c
    return FreeElem(ring, [Poly(ring, t) for t in coords])


def vec_to_poly(ring, vec):
    return Poly(ring, {e: c for (_, e), c in vec.items()})
