"""Surface syntax for algebra elements: parser, evaluator, printer.

Grammar (largest-munch lexing, whitespace ignored):

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/')? factor)*        # juxtaposition = '*'
    factor  := '-' factor | power
    power   := primary ('^' ('-'? INT))?
    primary := INT | IDENT | '(' expr ')'
    IDENT   := e1 | e2 | e3 | z | zt | z1 | zp | q

'^' binds tighter than '*' and '/', which bind tighter than '+' and '-';
products associate to the left.  Negative exponents and division require the
base (resp. divisor) to be an invertible scalar; 'q^-2' and rationals like
'3/5' are the common cases.  Evaluation returns the PBW normal form, so
're-parsing the printed form of an element reproduces it exactly.
"""

from __future__ import annotations

import re

from . import structure

IDENTIFIERS = ("e1", "e2", "e3", "z", "zt", "z1", "zp", "q")

# known identifiers are matched longest-first so juxtaposed names split
# ("e3e2" lexes as e3, e2); any other word is an unknown-identifier error
_TOKEN = re.compile(r"\s*(?:(\d+)|(e1|e2|e3|zt|zp|z1|z|q)|([A-Za-z][A-Za-z0-9]*)|([-+*/^()]))")


class ParseError(ValueError):
    """Syntax or name error, carrying the offending position."""

    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


def tokenize(src):
    tokens = []
    idx = 0
    while idx < len(src):
        m = _TOKEN.match(src, idx)
        if m is None:
            stripped = src[idx:].lstrip()
            if not stripped:
                break
            raise ParseError("unexpected character %r" % stripped[0], len(src) - len(stripped))
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            raise ParseError("unknown identifier %r" % m.group(3), m.start(3))
        else:
            tokens.append(("op", m.group(4), m.start(4)))
        idx = m.end()
    return tokens


class _Parser:
    def __init__(self, src):
        self.src = src
        self.tokens = tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.src))

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val, at = self.take()
        if kind != "op" or val != op:
            raise ParseError("expected %r" % op, at)

    def parse(self):
        tree = self.expr()
        kind, val, at = self.peek()
        if kind is not None:
            raise ParseError("unexpected trailing input %r" % (val,), at)
        return tree

    def expr(self):
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                node = (("add" if val == "+" else "sub"), node, self.term())
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                node = (("mul" if val == "*" else "div"), node, self.factor())
            elif kind in ("int", "name") or (kind == "op" and val == "("):
                node = ("mul", node, self.factor())
            else:
                return node

    def factor(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return ("neg", self.factor())
        return self.power()

    def power(self):
        base = self.primary()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val, at = self.take()
            if kind == "op" and val == "-":
                sign = -1
                kind, val, at = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer", at)
            return ("pow", base, sign * val)
        return base

    def primary(self):
        kind, val, at = self.take()
        if kind == "int":
            return ("int", val)
        if kind == "name":
            return ("name", val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError("expected a value", at)


def parse(src):
    """Parse source text into an expression tree."""
    return _Parser(src).parse()


def evaluate(tree, alg):
    """Fold an expression tree through the algebra; returns the normal form."""
    if isinstance(tree, str):
        tree = parse(tree)
    return _eval(tree, alg)


def _eval(node, alg):
    head = node[0]
    if head == "int":
        return alg.scalar(node[1])
    if head == "name":
        name = node[1]
        if name == "q":
            return alg.scalar(alg.ctx.q)
        if name in ("e1", "e2", "e3", "z"):
            return alg.generator(name)
        return structure.named(
            alg, {"zt": "z_tilde", "z1": "z_one", "zp": "z_prime"}[name]
        )
    if head == "add":
        return _eval(node[1], alg) + _eval(node[2], alg)
    if head == "sub":
        return _eval(node[1], alg) - _eval(node[2], alg)
    if head == "mul":
        return _eval(node[1], alg) * _eval(node[2], alg)
    if head == "div":
        divisor = _eval(node[2], alg).as_scalar()
        return _eval(node[1], alg) * divisor.invert()
    if head == "neg":
        return -_eval(node[1], alg)
    if head == "pow":
        base = _eval(node[1], alg)
        k = node[2]
        if k >= 0:
            return base ** k
        return alg.scalar(base.as_scalar().invert() ** (-k))
    raise ValueError("malformed expression node %r" % (node,))


def eval_scalar(src, ctx):
    """Evaluate source text that must denote a field scalar."""
    from .pbw import PBWAlgebra

    return evaluate(parse(src), PBWAlgebra(ctx)).as_scalar()


def scalar_to_src(c):
    """Render a field scalar in the grammar (power-basis polynomial in q)."""
    parts = []
    for t, f in enumerate(c.coeffs):
        if not f:
            continue
        mag = abs(f)
        var = "" if t == 0 else ("q" if t == 1 else "q^%d" % t)
        if var and mag == 1:
            body = var
        elif var:
            body = "%s*%s" % (mag, var)
        else:
            body = str(mag)
        parts.append((f < 0, body))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def to_src(element):
    """Render a PBW element in the grammar; parse(to_src(x)) evaluates back to x."""
    if not element.terms:
        return "0"
    chunks = []
    for key in sorted(element.terms):
        i, j, k, n = key
        mono = "*".join(
            name + ("" if e == 1 else "^%d" % e)
            for name, e in (("z", i), ("e3", j), ("e1", k), ("e2", n))
            if e
        )
        coeff = scalar_to_src(element.terms[key])
        if mono:
            chunks.append("(%s)*%s" % (coeff, mono))
        else:
            chunks.append(coeff)
    return " + ".join(chunks)
