"""
Exact arithmetic in Q(q, t) and a few q-series helpers.

Elements are reduced fractions of integer polynomials in q and t.  The
polynomial layer (gcd, exact division) is python-flint's ``fmpz_mpoly``; this
module only owns canonical form, substitutions and rendering.
"""

from __future__ import annotations

from functools import lru_cache

import flint

CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "lex")
_ZERO = CTX.from_dict({})
_ONE = CTX.from_dict({(0, 0): 1})


def intpoly2(terms):
    """Integer polynomial in (q, t) from a mapping ``(deg_q, deg_t) -> int``."""
    return CTX.from_dict({k: v for k, v in terms.items() if v})


def poly_terms(p):
    return {tuple(int(e) for e in k): int(c) for k, c in p.to_dict().items()}


def _is_monomial(p):
    return len(p) == 1


class QtRational:
    """Reduced element num/den of Q(q,t).

    Canonical form: gcd(num, den) = 1 and the lex-leading coefficient of den
    (q-degree first, then t-degree) is positive.  Two equal field elements
    therefore have identical (num, den).
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, QtRational):
            if den != 1:
                raise TypeError("den must be 1 when num is a QtRational")
            self.num, self.den, self._hash = num.num, num.den, num._hash
            return
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _canon(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def _make(cls, num, den):
        num, den = _canon(num, den)
        return cls._raw(num, den)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.den.is_one() and self.num.is_one()

    def is_polynomial(self):
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QtRational):
            other = _lift(other)
            if other is None:
                return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den.is_one() and other.den.is_one():
            return QtRational._raw(self.num + other.num, _ONE)
        if self.den == other.den:
            return QtRational._make(self.num + other.num, self.den)
        return QtRational._make(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QtRational._raw(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, QtRational):
            other = _lift(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QtRational):
            other = _lift(other)
            if other is None:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return QtRational._raw(self.num * other.num, _ONE)
        # cross-cancel before multiplying keeps the gcds small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = (self.num / g1) * (other.num / g2)
        den = (self.den / g2) * (other.den / g1)
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return QtRational._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q,t)")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return QtRational._raw(num, den)

    def __truediv__(self, other):
        if not isinstance(other, QtRational):
            other = _lift(other)
            if other is None:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        return QtRational._raw(self.num ** e, self.den ** e) if e else ONE

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QtRational):
            other = _lift(other)
            if other is None:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.to_dict().items()),
                               frozenset(self.den.to_dict().items())))
        return self._hash

    # -- substitution ---------------------------------------------------------

    def substitute(self, q_image=(1, 0), t_image=(0, 1)):
        """Substitute q -> q^a t^b and t -> q^c t^d (integer exponents).

        ``q_image = (a, b)``, ``t_image = (c, d)``.  Negative exponents are
        cleared from numerator and denominator together.
        """
        if q_image == (1, 0) and t_image == (0, 1):
            return self
        num, sn = _monomial_subs(self.num, q_image, t_image)
        den, sd = _monomial_subs(self.den, q_image, t_image)
        shift = (sn[0] - sd[0], sn[1] - sd[1])
        num, den = _apply_shift(num, den, shift)
        return QtRational._make(num, den)

    def invert_params(self):
        """(q, t) -> (q^-1, t^-1)."""
        return self.substitute((-1, 0), (0, -1))

    def t_to_qk(self, k):
        return self.substitute((1, 0), (k, 0))

    def evaluate(self, q=None, t=None):
        """Substitute numbers (or flint/python rationals) for q and/or t."""
        from fractions import Fraction

        def ev(p):
            total = Fraction(0)
            for (i, j), c in poly_terms(p).items():
                v = Fraction(int(c))
                v *= Fraction(q) ** i if i else 1
                v *= Fraction(t) ** j if j else 1
                total += v
            return total
        if q is None or t is None:
            raise ValueError("numeric evaluation needs both q and t")
        return ev(self.num) / ev(self.den)

    # -- inspection ---------------------------------------------------------

    def num_terms(self):
        return poly_terms(self.num)

    def den_terms(self):
        return poly_terms(self.den)

    def degrees(self):
        """Max (q, t) degrees over numerator and denominator."""
        dn = self.num.degrees() if not self.num.is_zero() else (0, 0)
        dd = self.den.degrees()
        return max(int(dn[0]), int(dd[0])), max(int(dn[1]), int(dd[1]))

    def as_laurent_monomial(self):
        """Return (c, i, j) if self == c*q^i*t^j for integer c, else None."""
        if len(self.num) != 1 or len(self.den) != 1:
            return None
        (en, cn), = poly_terms(self.num).items()
        (ed, cd), = poly_terms(self.den).items()
        if cn % cd:
            return None
        return cn // cd, en[0] - ed[0], en[1] - ed[1]

    def render(self):
        return render(self)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return "QtRational(%s)" % render(self)


def _coerce_poly(x):
    if isinstance(x, flint.fmpz_mpoly):
        return x
    if isinstance(x, int):
        return CTX.from_dict({(0, 0): x}) if x else _ZERO
    if isinstance(x, dict):
        return intpoly2(x)
    raise TypeError("cannot build a polynomial from %r" % (type(x),))


def _lift(x):
    if isinstance(x, int):
        return QtRational._raw(_coerce_poly(x), _ONE)
    if isinstance(x, flint.fmpz_mpoly):
        return QtRational._raw(x, _ONE)
    return None


def _canon(num, den):
    if num.is_zero():
        return _ZERO, _ONE
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


def _monomial_subs(p, q_image, t_image):
    a, b = q_image
    c, d = t_image
    out = {}
    for (i, j), coef in poly_terms(p).items():
        key = (a * i + c * j, b * i + d * j)
        out[key] = out.get(key, 0) + coef
    out = {k: v for k, v in out.items() if v}
    if not out:
        return _ZERO, (0, 0)
    mq = min(k[0] for k in out)
    mt = min(k[1] for k in out)
    return intpoly2({(k[0] - mq, k[1] - mt): v for k, v in out.items()}), (mq, mt)


def _apply_shift(num, den, shift):
    sq, st = shift
    num_mono = {(max(sq, 0), max(st, 0)): 1}
    den_mono = {(max(-sq, 0), max(-st, 0)): 1}
    return num * intpoly2(num_mono), den * intpoly2(den_mono)


ZERO = QtRational._raw(_ZERO, _ONE)
ONE = QtRational._raw(_ONE, _ONE)
Q = QtRational._raw(CTX.from_dict({(1, 0): 1}), _ONE)
T = QtRational._raw(CTX.from_dict({(0, 1): 1}), _ONE)


def qt(x):
    """Coerce an int or QtRational to QtRational."""
    if isinstance(x, QtRational):
        return x
    r = _lift(x)
    if r is None:
        raise TypeError("cannot coerce %r to QtRational" % (x,))
    return r


@lru_cache(maxsize=4096)
def monomial(i, j, c=1):
    """c * q^i * t^j with possibly negative exponents."""
    if c == 0:
        return ZERO
    num = intpoly2({(max(i, 0), max(j, 0)): c})
    den = intpoly2({(max(-i, 0), max(-j, 0)): 1})
    return QtRational._raw(num, den)


def arith(a, b, op):
    a, b = qt(a), qt(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero in Q(q,t)")
        return a / b
    raise ValueError("unknown op %r" % (op,))


# Named substitutions used across the package.  Each maps (q, t) to a pair of
# monomials (q^a t^b, q^c t^d).
SUBSTITUTIONS = {
    "identity": ((1, 0), (0, 1)),
    "invert": ((-1, 0), (0, -1)),
    "t->qt": ((1, 0), (1, 1)),
}


def substitution(name):
    """Resolve a substitution name: identity, invert, t->qt, t->q^K, q->qt^P."""
    if name in SUBSTITUTIONS:
        return SUBSTITUTIONS[name]
    if name.startswith("t->q^"):
        k = int(name[5:])
        if k < 0:
            raise ValueError("t -> q^k needs k >= 0")
        return (1, 0), (k, 0)
    if name.startswith("q->qt^"):
        p = int(name[6:])
        if p < 1:
            raise ValueError("q -> q t^p needs p >= 1")
        return (1, p), (0, 1)
    raise ValueError("unsupported substitution %r" % (name,))


def substitute(r, name):
    qi, ti = substitution(name)
    return qt(r).substitute(qi, ti)


# -- q-series -------------------------------------------------------------------

def _base(base):
    return Q if base is None else qt(base)


def q_number(m, base=None):
    """[m]_x = (1 - x^m)/(1 - x), as the finite geometric sum."""
    x = _base(base)
    if m < 0:
        raise ValueError("q_number needs m >= 0")
    total = ZERO
    p = ONE
    for _ in range(m):
        total = total + p
        p = p * x
    return total


def q_factorial(m, base=None):
    if m < 0:
        raise ValueError("q_factorial needs m >= 0")
    out = ONE
    for j in range(1, m + 1):
        out = out * q_number(j, base)
    return out


def q_gamma(m, base=None):
    """Gamma_x(m) = [m-1]_x! for positive integers m."""
    if m < 1:
        raise ValueError("q_gamma is only defined here for integers m >= 1")
    return q_factorial(m - 1, base)


def pochhammer(a, k, step=None):
    """(a; x)_k = prod_{j<k} (1 - a x^j)."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    a = qt(a)
    x = _base(step)
    out = ONE
    p = a
    for _ in range(k):
        out = out * (ONE - p)
        p = p * x
    return out


# -- rendering ------------------------------------------------------------------

def _term_key(e):
    return (e[0] + e[1], e[0], e[1])


def _mono_str(i, j):
    parts = []
    for name, e in (("q", i), ("t", j)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def render_terms(terms):
    """Render {(i, j): c} (Laurent exponents allowed) as '1 - q*t^2'."""
    if not terms:
        return "0"
    out = []
    for e in sorted(terms, key=_term_key):
        c = terms[e]
        m = _mono_str(*e)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if m:
            body = m if a == 1 else "%d*%s" % (a, m)
        else:
            body = str(a)
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append("%s %s" % (sign, body))
    return " ".join(out)


def render(r):
    r = qt(r)
    nt = r.num_terms()
    dt = r.den_terms()
    if len(dt) == 1:
        (ed, cd), = dt.items()
        if cd == 1:
            return render_terms({(e[0] - ed[0], e[1] - ed[1]): c for e, c in nt.items()})
    ns = render_terms(nt)
    ds = render_terms(dt)
    if len(nt) > 1:
        ns = "(%s)" % ns
    if len(dt) > 1:
        ds = "(%s)" % ds
    return "%s/%s" % (ns, ds)


def parse(text):
    """Parse a rendered scalar back into Q(q,t).

    Accepts the output of :func:`render`; it is a restricted expression
    language (integers, q, t, ^, *, /, +, -, parentheses).
    """
    import re
    tokens = re.findall(r"\d+|[qt]|\^|\*|/|\+|-|\(|\)", text.replace(" ", ""))
    if "".join(tokens) != text.replace(" ", ""):
        raise ValueError("cannot parse scalar %r" % (text,))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        val = term() * sign
        while peek() in ("+", "-"):
            op = take()
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = factor()
        while peek() in ("*", "/"):
            op = take()
            rhs = factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor():
        tok = peek()
        if tok == "(":
            take()
            val = expr()
            if take() != ")":
                raise ValueError("unbalanced parentheses in %r" % (text,))
        elif tok == "q":
            take()
            val = Q
        elif tok == "t":
            take()
            val = T
        elif tok is not None and tok.isdigit():
            val = qt(int(take()))
        else:
            raise ValueError("unexpected token %r in %r" % (tok, text))
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            val = val ** (sign * int(take()))
        return val

    out = expr()
    if pos != len(tokens):
        raise ValueError("trailing input in %r" % (text,))
    return out
