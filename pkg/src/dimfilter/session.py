"""Input sessions: a small line-oriented language declaring one ring and named
ideals, modules and primes.

::

    ring R = QQ[x, y, z, w]          # or Fp(32003)[...]
    ideal I = (x*z, x*w, y*z, y*w)
    module A = quotient I
    module C = coker [x; y; z]       # rows separated by ';', columns are relations
    prime P = (x, y, z, w)
    prime Q = (x^2 + y^2) assume-prime

The whole text is checked for syntax first, then names and polynomials are
resolved.  Every error carries a 1-based line and column.
"""

import re
from dataclasses import dataclass, field

from .errors import ContractError, ParseError, ResourceError
from .groebner import budget
from .modules import Presentation, PrimeIdeal
from .poly import Poly, Ring

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#.*)
  | (?P<assume>assume-prime\b)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<sym>[=()\[\],;+\-*^/])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    col: int


def tokenize(line, lineno):
    out = []
    pos = 0
    while pos < len(line):
        m = _TOKEN.match(line, pos)
        if not m:
            raise ParseError(f"unexpected character {line[pos]!r}", lineno, pos + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), pos + 1))
        pos = m.end()
    return out


# Polynomial syntax trees: ("int", n) ("var", name, col) ("neg", a)
# ("add"|"sub", a, b) ("mul"|"div", a, b, col) ("pow", a, n, col)

class _Cursor:
    def __init__(self, toks, lineno, end_col):
        self.toks = toks
        self.i = 0
        self.lineno = lineno
        self.end_col = end_col

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of line", self.lineno, self.end_col)
        self.i += 1
        return tok

    def at(self, text):
        tok = self.peek()
        return tok is not None and tok.kind in ("sym", "name", "assume") and tok.text == text

    def expect(self, text, what=None):
        tok = self.peek()
        if tok is None or tok.text != text:
            found = "end of line" if tok is None else repr(tok.text)
            col = self.end_col if tok is None else tok.col
            raise ParseError(f"expected {what or repr(text)}, found {found}", self.lineno, col)
        return self.next()

    def expect_kind(self, kind, what):
        tok = self.peek()
        if tok is None or tok.kind != kind:
            found = "end of line" if tok is None else repr(tok.text)
            col = self.end_col if tok is None else tok.col
            raise ParseError(f"expected {what}, found {found}", self.lineno, col)
        return self.next()

    def done(self):
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.text!r}", self.lineno, tok.col)


class _PolyError(Exception):
    def __init__(self, message, col):
        super().__init__(message)
        self.col = col


def _parse_expr(cur):
    if cur.at("-") or cur.at("+"):
        sign = cur.next().text
        node = _parse_term(cur)
        if sign == "-":
            node = ("neg", node)
    else:
        node = _parse_term(cur)
    while cur.at("+") or cur.at("-"):
        op = "add" if cur.next().text == "+" else "sub"
        node = (op, node, _parse_term(cur))
    return node


def _parse_term(cur):
    node = _parse_factor(cur)
    while cur.at("*") or cur.at("/"):
        tok = cur.next()
        op = "mul" if tok.text == "*" else "div"
        node = (op, node, _parse_factor(cur), tok.col)
    return node


def _parse_factor(cur):
    node = _parse_atom(cur)
    if cur.at("^"):
        cur.next()
        tok = cur.peek()
        if tok is None or tok.kind != "int":
            col = cur.end_col if tok is None else tok.col
            raise _PolyError("exponent must be a nonnegative integer", col)
        cur.next()
        node = ("pow", node, int(tok.text), tok.col)
    return node


def _parse_atom(cur):
    tok = cur.peek()
    if tok is None:
        raise _PolyError("expected a term, found end of line", cur.end_col)
    if tok.kind == "int":
        cur.next()
        return ("int", int(tok.text))
    if tok.kind == "name":
        cur.next()
        return ("var", tok.text, tok.col)
    if tok.text == "(":
        cur.next()
        node = _parse_expr(cur)
        if not cur.at(")"):
            nxt = cur.peek()
            raise _PolyError("expected ')'", cur.end_col if nxt is None else nxt.col)
        cur.next()
        return node
    raise _PolyError(f"expected a term, found {tok.text!r}", tok.col)


def _parse_pol(cur, stops):
    """One polynomial ending before a token in ``stops``; syntax errors are
    reported at the column where the polynomial starts."""
    start = cur.peek()
    start_col = cur.end_col if start is None else start.col
    try:
        node = _parse_expr(cur)
        nxt = cur.peek()
        if nxt is not None and nxt.text not in stops:
            raise _PolyError(f"unexpected {nxt.text!r}", nxt.col)
    except _PolyError as exc:
        raise ParseError(f"malformed polynomial ({exc} at column {exc.col})",
                         cur.lineno, start_col) from None
    return (node, start_col)


def _parse_pol_list(cur):
    cur.expect("(")
    pols = []
    if cur.at(")"):
        cur.next()
        return pols
    while True:
        pols.append(_parse_pol(cur, {",", ")"}))
        if cur.at(","):
            cur.next()
            continue
        cur.expect(")", "',' or ')'")
        return pols


def _parse_matrix(cur):
    cur.expect("[")
    rows = [[]]
    while True:
        rows[-1].append(_parse_pol(cur, {",", ";", "]"}))
        if cur.at(","):
            cur.next()
        elif cur.at(";"):
            cur.next()
            rows.append([])
        else:
            cur.expect("]", "',', ';' or ']'")
            return rows


@dataclass
class Statement:
    kind: str
    name: str
    line: int
    col: int
    body: dict


def _parse_line(toks, lineno, end_col):
    cur = _Cursor(toks, lineno, end_col)
    head = cur.expect_kind("name", "a declaration keyword")
    if head.text not in ("ring", "ideal", "module", "prime"):
        raise ParseError(f"unknown declaration {head.text!r}", lineno, head.col)
    name = cur.expect_kind("name", "a name")
    cur.expect("=")
    body = {}
    if head.text == "ring":
        field_tok = cur.expect_kind("name", "QQ or Fp(PRIME)")
        if field_tok.text == "QQ":
            body["modulus"] = None
        elif field_tok.text == "Fp":
            cur.expect("(")
            num = cur.expect_kind("int", "a prime modulus")
            cur.expect(")")
            body["modulus"] = (int(num.text), num.col)
        else:
            raise ParseError("expected QQ or Fp(PRIME)", lineno, field_tok.col)
        cur.expect("[")
        names = [cur.expect_kind("name", "a variable name")]
        while cur.at(","):
            cur.next()
            names.append(cur.expect_kind("name", "a variable name"))
        cur.expect("]", "',' or ']'")
        body["variables"] = [(t.text, t.col) for t in names]
    elif head.text == "ideal":
        body["pols"] = _parse_pol_list(cur)
    elif head.text == "prime":
        body["pols"] = _parse_pol_list(cur)
        body["assume"] = False
        if cur.peek() is not None and cur.peek().kind == "assume":
            cur.next()
            body["assume"] = True
    else:
        kind = cur.expect_kind("name", "'quotient' or 'coker'")
        if kind.text == "quotient":
            ref = cur.expect_kind("name", "an ideal name")
            body["quotient"] = (ref.text, ref.col)
        elif kind.text == "coker":
            body["rows"] = _parse_matrix(cur)
        else:
            raise ParseError("expected 'quotient' or 'coker'", lineno, kind.col)
    cur.done()
    return Statement(head.text, name.text, lineno, name.col, body)


def parse_statements(text):
    stmts = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = tokenize(line, lineno)
        if toks:
            stmts.append(_parse_line(toks, lineno, len(line) + 1))
    return stmts


def evaluate(node, ring, line):
    """Evaluate a polynomial syntax tree in ``ring``."""
    kind = node[0]
    if kind == "int":
        return ring.const(node[1])
    if kind == "var":
        name, col = node[1], node[2]
        if name not in ring.variables:
            raise ParseError(f"unknown variable {name!r} in {ring!r}", line, col)
        return ring.var(name)
    if kind == "neg":
        return -evaluate(node[1], ring, line)
    if kind == "pow":
        if node[2] > budget.max_degree:
            raise ResourceError("degree", f"exponent {node[2]} at line {line}, "
                                f"column {node[3]} exceeds {budget.max_degree}")
        return evaluate(node[1], ring, line) ** node[2]
    a = evaluate(node[1], ring, line)
    b = evaluate(node[2], ring, line)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if not b.is_constant() or b.is_zero():
        raise ParseError("division only by a nonzero constant", line, node[3])
    c = next(iter(b.terms.values()))
    return a * ring.const(ring.inv(c))


def parse_poly(ring, text):
    """Parse one polynomial in ``ring``."""
    toks = tokenize(text, 1)
    cur = _Cursor(toks, 1, len(text) + 1)
    node, _ = _parse_pol(cur, set())
    return _checked(evaluate(node, ring, 1), 1)


def _checked(f, line):
    if f.terms and f.degree() > budget.max_degree:
        raise ResourceError("degree", f"polynomial of degree {f.degree()} at line {line}")
    return f


@dataclass
class Session:
    ring: Ring
    ideals: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    primes: dict = field(default_factory=dict)
    locations: dict = field(default_factory=dict)  # name -> (line, column)
    text: str = ""
    ring_name: str = "R"

    def lookup(self, name):
        for table in (self.modules, self.ideals, self.primes):
            if name in table:
                return table[name]
        raise ContractError(f"unknown name {name!r}")

    def module(self, name):
        if name not in self.modules:
            raise ContractError(f"no module named {name!r}")
        return self.modules[name]

    def where(self, name):
        line, col = self.locations.get(name, (0, 0))
        return f"{name} (line {line}, column {col})"

    @property
    def declared_primes(self):
        return list(self.primes.values())


def parse_session(text):
    """Parse and resolve a session; raises ``ParseError`` with a location."""
    stmts = parse_statements(text)
    ring = None
    seen = {}
    session = None
    for st in stmts:
        if st.name in seen:
            raise ParseError(f"duplicate name {st.name!r} (first at line {seen[st.name]})",
                             st.line, st.col)
        seen[st.name] = st.line
        if st.kind == "ring":
            if ring is not None:
                raise ParseError("only one ring per session", st.line, st.col)
            mod = st.body["modulus"]
            names = [n for n, _ in st.body["variables"]]
            for i, (n, col) in enumerate(st.body["variables"]):
                if n in names[:i]:
                    raise ParseError(f"duplicate variable {n!r}", st.line, col)
            try:
                ring = Ring(names, None if mod is None else mod[0])
            except ContractError as exc:
                col = st.col if mod is None else mod[1]
                raise ParseError(str(exc), st.line, col) from None
            session = Session(ring, text=text, ring_name=st.name)
            session.locations[st.name] = (st.line, st.col)
            continue
        if ring is None:
            raise ParseError("declare the ring first", st.line, st.col)
        session.locations[st.name] = (st.line, st.col)
        if st.kind == "ideal":
            session.ideals[st.name] = [_checked(evaluate(n, ring, st.line), st.line)
                                       for n, _ in st.body["pols"]]
        elif st.kind == "prime":
            gens = [_checked(evaluate(n, ring, st.line), st.line) for n, _ in st.body["pols"]]
            cert = "declared" if st.body["assume"] else None
            try:
                session.primes[st.name] = PrimeIdeal(ring, gens, cert, name=st.name)
            except ContractError as exc:
                raise ParseError(f"prime {st.name}: {exc}", st.line, st.col) from None
        else:
            session.modules[st.name] = _build_module(session, st)
    if session is None:
        raise ParseError("no ring declared", max(1, len(text.splitlines())), 1)
    return session


def _build_module(session, st):
    ring = session.ring
    if "quotient" in st.body:
        ref, col = st.body["quotient"]
        if ref not in session.ideals:
            raise ParseError(f"unknown ideal {ref!r}", st.line, col)
        gens = session.ideals[ref]
        return Presentation(ring, 1, gens, name=st.name, quotient=tuple(gens))
    rows = st.body["rows"]
    width = len(rows[0])
    for row in rows:
        if len(row) != width:
            raise ParseError(f"matrix rows have different lengths ({len(row)} vs {width})",
                             st.line, row[0][1])
    mat = [[_checked(evaluate(n, ring, st.line), st.line) for n, _ in row] for row in rows]
    return Presentation.from_matrix(ring, mat, name=st.name)


def format_session(session):
    """Canonical text for a session; parses back to an equal session."""
    from .poly import format_poly
    ring = session.ring
    field_txt = "QQ" if ring.modulus is None else f"Fp({ring.modulus})"
    lines = [f"ring {session.ring_name} = {field_txt}[{', '.join(ring.variables)}]"]
    for name, gens in session.ideals.items():
        lines.append(f"ideal {name} = ({', '.join(format_poly(g) for g in gens)})")
    for name, P in session.primes.items():
        tail = " assume-prime" if P.certificate == "declared" else ""
        lines.append(f"prime {name} = ({', '.join(format_poly(g) for g in P.generators)}){tail}")
    for name, M in session.modules.items():
        rows = [[] for _ in range(M.rank)]
        if M.quotient is not None and M.rank == 1:
            ref = next((n for n, g in session.ideals.items() if tuple(g) == M.quotient), None)
            if ref is not None:
                lines.append(f"module {name} = quotient {ref}")
                continue
        if not M.relation_vecs:
            rows = [["0"] for _ in range(M.rank)]
        for v in M.relation_vecs:
            col = [Poly(ring, {}) for _ in range(M.rank)]
            for (pos, e), c in v.items():
                col[pos] = col[pos] + Poly(ring, {e: c})
            for i in range(M.rank):
                rows[i].append(format_poly(col[i]))
        lines.append(f"module {name} = coker [{'; '.join(', '.join(r) for r in rows)}]")
    return "\n".join(lines) + "\n"
