"""
Sparse Laurent polynomials in z_1..z_n with Q(q,t) coefficients.
"""

from __future__ import annotations

import contextvars
import json

from .qtfield import ONE, ZERO, QtRational, parse, qt, render

DEFAULT_TERM_CAP = 10**6
term_cap = contextvars.ContextVar("term_cap", default=DEFAULT_TERM_CAP)


class TermCapExceeded(MemoryError):
    pass


class LaurentPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError("exponent %r does not have length %d" % (e, n))
                c = qt(c)
                if c:
                    clean[e] = clean[e] + c if e in clean else c
            clean = {e: c for e, c in clean.items() if c}
        self.terms = clean

    @classmethod
    def _raw(cls, n, terms):
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {(0,) * n: ONE})

    @classmethod
    def constant(cls, n, c):
        c = qt(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, exps, c=ONE):
        exps = tuple(exps)
        c = qt(c)
        return cls._raw(len(exps), {exps: c} if c else {})

    @classmethod
    def variable(cls, n, i, c=ONE):
        """c * z_i (1-based)."""
        e = [0] * n
        e[i - 1] = 1
        return cls.monomial(e, c)

    # -- basic protocol -------------------------------------------------------

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            return False
        if other.n != self.n:
            raise ValueError("dimension mismatch: %d vs %d variables" % (self.n, other.n))
        return True

    def __eq__(self, other):
        if isinstance(other, (int, QtRational)):
            other = LaurentPoly.constant(self.n, other)
        if not self._check(other):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, QtRational)):
            other = LaurentPoly.constant(self.n, other)
        if not self._check(other):
            return NotImplemented
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return LaurentPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, QtRational)):
            other = LaurentPoly.constant(self.n, other)
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = qt(c)
        if not c:
            return LaurentPoly.zero(self.n)
        if c.is_one():
            return self
        return LaurentPoly._raw(self.n, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, QtRational)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        cap = term_cap.get()
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    out[e] = out[e] + c
                else:
                    out[e] = c
                    if len(out) > cap:
                        raise TermCapExceeded("product exceeds term cap %d" % cap)
        return LaurentPoly._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        out = LaurentPoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def map_coefficients(self, fn):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return LaurentPoly._raw(self.n, out)

    def substitute_params(self, q_image=(1, 0), t_image=(0, 1)):
        return self.map_coefficients(lambda c: c.substitute(q_image, t_image))

    def t_to_qk(self, k):
        return self.substitute_params((1, 0), (k, 0))

    def embed(self, n):
        """View as a polynomial in n >= self.n variables (extra exponents 0)."""
        if n < self.n:
            raise ValueError("cannot embed into fewer variables")
        pad = (0,) * (n - self.n)
        return LaurentPoly._raw(n, {e + pad: c for e, c in self.terms.items()})

    # -- inspection ------------------------------------------------------------

    def coefficient(self, e):
        return self.terms.get(tuple(e), ZERO)

    def constant_term(self):
        return self.terms.get((0,) * self.n, ZERO)

    def degree(self):
        """Set of total degrees present."""
        return {sum(e) for e in self.terms}

    def is_homogeneous(self):
        return len(self.degree()) <= 1

    def render(self):
        return render_poly(self)

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return "LaurentPoly(%d, %s)" % (self.n, render_poly(self))

    def to_json(self):
        return poly_to_json(self)


# -- variable-level operators -------------------------------------------------

def poly_arith(f, g, op):
    if f.n != g.n:
        raise ValueError("dimension mismatch: %d vs %d variables" % (f.n, g.n))
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ValueError("unknown op %r" % (op,))


def _swap(e, i):
    e = list(e)
    e[i - 1], e[i] = e[i], e[i - 1]
    return tuple(e)


def apply_si(f, i):
    """Swap z_i and z_{i+1} (1-based)."""
    if not 1 <= i <= f.n - 1:
        raise IndexError("s_%d undefined for n=%d" % (i, f.n))
    return LaurentPoly._raw(f.n, {_swap(e, i): c for e, c in f.terms.items()})


def apply_tau(f, i, q=None):
    """z_i -> q z_i; ``q`` may be any monomial scalar (defaults to q)."""
    from .qtfield import Q
    if not 1 <= i <= f.n:
        raise IndexError("tau_%d undefined for n=%d" % (i, f.n))
    q = Q if q is None else qt(q)
    out = {}
    for e, c in f.terms.items():
        out[e] = c * q ** e[i - 1] if e[i - 1] else c
    return LaurentPoly._raw(f.n, out)


def bar(f):
    """f(z^-1; q^-1, t^-1)."""
    return LaurentPoly._raw(
        f.n, {tuple(-a for a in e): c.invert_params() for e, c in f.terms.items()})


def constant_term(f):
    return f.constant_term()


def coefficient(f, e):
    return f.coefficient(e)


def leading_under_order(f):
    """Unique maximal exponent of f under the composition order.

    Only terms with non-negative exponents are considered.  Raises
    ValueError when f is zero or the maximal elements are not unique.
    """
    from .combinat import order_precedes
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    exps = [e for e in f.terms if min(e) >= 0]
    if len(exps) != len(f.terms):
        raise ValueError("leading_under_order needs non-negative exponents")
    if len({sum(e) for e in exps}) != 1:
        raise ValueError("leading_under_order needs a homogeneous polynomial")
    maxima = [e for e in exps if not any(order_precedes(e, o) for o in exps if o != e)]
    if len(maxima) != 1:
        raise ValueError("no unique maximal exponent: %r" % (sorted(maxima),))
    return maxima[0]


def evaluate_monomial_spec(f, spec):
    """Substitute z_i <- spec[i] (scalars, typically monomials q^a t^b)."""
    spec = [qt(s) for s in spec]
    if len(spec) != f.n:
        raise ValueError("need %d values, got %d" % (f.n, len(spec)))
    total = ZERO
    for e, c in f.terms.items():
        v = c
        for s, a in zip(spec, e):
            if a:
                v = v * s ** a
        total = total + v
    return total


# -- rendering / serialisation ---------------------------------------------------

def _zmono(e):
    parts = []
    for i, a in enumerate(e, 1):
        if a == 1:
            parts.append("z%d" % i)
        elif a:
            parts.append("z%d^%d" % (i, a))
    return "*".join(parts)


def _sorted_exps(f):
    return sorted(f.terms, reverse=True)


def render_poly(f):
    if f.is_zero():
        return "0"
    if len(f.terms) == 1 and not any(next(iter(f.terms))):
        return render(next(iter(f.terms.values())))
    out = []
    for e in _sorted_exps(f):
        c = f.terms[e]
        cs = render(c)
        m = _zmono(e)
        neg = False
        single = " " not in cs
        if single and cs.startswith("-"):
            neg, cs = True, cs[1:]
        if not m:
            body = cs if single else "(%s)" % cs
        elif cs == "1":
            body = m
        else:
            body = ("%s*%s" % (cs, m)) if single else ("(%s)*%s" % (cs, m))
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def poly_to_json(f):
    return {"n": f.n,
            "terms": [{"exp": list(e), "coeff": render(f.terms[e])} for e in _sorted_exps(f)]}


def poly_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = int(obj["n"])
    terms = {}
    for t in obj["terms"]:
        e = tuple(int(a) for a in t["exp"])
        terms[e] = terms.get(e, ZERO) + parse(t["coeff"])
    return LaurentPoly(n, terms)
