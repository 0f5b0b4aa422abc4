"""
Hecke-type operators on Laurent polynomials: T_i, T_i^{-1}, T_w, omega,
the Cherednik operators Y_i, the symmetrizers U+/U-, O_{I,J} and D^1_n.

T_i = t + (t z_i - z_{i+1})/(z_i - z_{i+1}) (s_i - 1) is applied monomial by
monomial: (s_i - 1) z_i^a z_{i+1}^b is always divisible by z_i - z_{i+1} and
the quotient is a signed complete homogeneous sum, so no rational functions
in z ever appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinat import SymmetrySpec, subgroup_enumerate
from .conventions import default_conventions
from .laurent import LaurentPoly
from .qtfield import ONE, Q, T, ZERO, QtRational, qt


@dataclass(frozen=True)
class OperatorParams:
    """Parameter values (q, t) the operators carry, plus the composition order."""
    q: QtRational = Q
    t: QtRational = T
    order: str = ""

    def __post_init__(self):
        object.__setattr__(self, "q", qt(self.q))
        object.__setattr__(self, "t", qt(self.t))
        if not self.order:
            object.__setattr__(self, "order", default_conventions().operator_order)
        if self.order not in ("right-first", "left-first"):
            raise ValueError("unknown operator order %r" % (self.order,))

    @classmethod
    def plain(cls, order=""):
        return cls(Q, T, order)

    @classmethod
    def t_to_qt(cls, order=""):
        """(q, t) -> (q, q t)."""
        return cls(Q, Q * T, order)

    @classmethod
    def q_to_qtp(cls, p, order=""):
        """(q, t) -> (q t^p, t)."""
        if p < 0:
            raise ValueError("p must be non-negative")
        return cls(Q * T ** p, T, order)


def _params(params):
    return OperatorParams.plain() if params is None else params


@lru_cache(maxsize=None)
def _ti_shape(a, b):
    """T_i on z_i^a z_{i+1}^b as {(a', b'): (c0, c1)}, coefficient c0 + c1*t."""
    out = {}

    def add(key, c0, c1):
        x0, x1 = out.get(key, (0, 0))
        out[key] = (x0 + c0, x1 + c1)

    add((a, b), 0, 1)
    if a > b:
        sign, lo, hi = -1, b, a
    elif a < b:
        sign, lo, hi = 1, a, b
    else:
        return {k: v for k, v in out.items()}
    # quotient D = sign * sum_{j} z_i^{lo+j} z_{i+1}^{hi-1-j}, j = 0..hi-lo-1
    for j in range(hi - lo):
        x, y = lo + j, hi - 1 - j
        add((x + 1, y), 0, sign)
        add((x, y + 1), -sign, 0)
    return {k: v for k, v in out.items() if v != (0, 0)}


@lru_cache(maxsize=4096)
def _lin(c0, c1, tv):
    return qt(c0) + tv * c1


def _apply_two_var(f, i, shape_fn):
    if not 1 <= i <= f.n - 1:
        raise IndexError("T_%d undefined for n=%d" % (i, f.n))
    out = {}
    k = i - 1
    for e, c in f.terms.items():
        for (a2, b2), s in shape_fn(e[k], e[k + 1]):
            ne = e[:k] + (a2, b2) + e[k + 2:]
            v = c * s
            if ne in out:
                out[ne] = out[ne] + v
            else:
                out[ne] = v
    return LaurentPoly._raw(f.n, {e: c for e, c in out.items() if c})


def apply_Ti(f, i, params=None):
    tv = _params(params).t

    def shape(a, b):
        return [(key, _lin(c0, c1, tv)) for key, (c0, c1) in _ti_shape(a, b).items()]
    return _apply_two_var(f, i, shape)


def apply_Ti_inv(f, i, params=None):
    """T_i^{-1} = t^{-1} T_i + (t^{-1} - 1), from (T_i - t)(T_i + 1) = 0."""
    tv = _params(params).t
    tinv = tv ** -1
    shift = tinv - ONE

    def shape(a, b):
        terms = {key: _lin(c0, c1, tv) * tinv for key, (c0, c1) in _ti_shape(a, b).items()}
        terms[(a, b)] = terms.get((a, b), ZERO) + shift
        return [(k, v) for k, v in terms.items() if v]
    return _apply_two_var(f, i, shape)


def _apply_sequence(f, ops, params):
    """Apply a written product of operators (leftmost symbol first in ``ops``)."""
    seq = reversed(ops) if params.order == "right-first" else ops
    for op in seq:
        f = op(f)
    return f


def _swap_op(i):
    def op(f):
        from .laurent import apply_si
        return apply_si(f, i)
    return op


def _tau1_op(qv):
    def op(f):
        from .laurent import apply_tau
        return apply_tau(f, 1, qv)
    return op


def apply_omega(f, params=None):
    """omega = s_{n-1} ... s_1 tau_1 (as written)."""
    params = _params(params)
    ops = [_swap_op(i) for i in range(f.n - 1, 0, -1)] + [_tau1_op(params.q)]
    return _apply_sequence(f, ops, params)


def apply_Tword(f, word, params=None):
    """T_{i_l} ... T_{i_1} for word = (i_l, ..., i_1) as written."""
    params = _params(params)
    ops = [(lambda g, i=i: apply_Ti(g, i, params)) for i in word]
    return _apply_sequence(f, ops, params)


def apply_Yi(f, i, params=None):
    """Y_i = t^{-n+i} T_i ... T_{n-1} omega T_1^{-1} ... T_{i-1}^{-1}.

    The prefactor t^{-n+i} is the normalization for which Y_i has eigenvalue
    q^{eta_i} t^{-l'_eta(i)} on E_eta (so Y_i 1 = t^{-(i-1)}).
    """
    params = _params(params)
    n = f.n
    if not 1 <= i <= n:
        raise IndexError("Y_%d undefined for n=%d" % (i, n))
    ops = [(lambda g, j=j: apply_Ti(g, j, params)) for j in range(i, n)]
    ops.append(lambda g: apply_omega(g, params))
    ops.extend((lambda g, j=j: apply_Ti_inv(g, j, params)) for j in range(1, i))
    return _apply_sequence(f, ops, params).scale(params.t ** (i - n))


def apply_D1(f, params=None):
    """D^1_n = t^{n-1} sum_i Y_i."""
    params = _params(params)
    total = LaurentPoly.zero(f.n)
    for i in range(1, f.n + 1):
        total = total + apply_Yi(f, i, params)
    return total.scale(params.t ** (f.n - 1))


def _group_images(f, elements, params):
    """T_w f for every group element, sharing prefixes of the application order."""
    memo = {(): f}

    def image(seq):
        if seq in memo:
            return memo[seq]
        prev = image(seq[:-1])
        memo[seq] = apply_Ti(prev, seq[-1], params)
        return memo[seq]

    out = []
    for g in elements:
        seq = tuple(reversed(g.word)) if params.order == "right-first" else tuple(g.word)
        out.append((g, image(seq)))
    return out


def apply_OIJ(f, spec, params=None):
    """sum over w in W_{I u J} of (-1/t)^{l(w_J)} T_w f."""
    params = _params(params)
    if spec.n != f.n:
        raise ValueError("spec is for n=%d but f has n=%d" % (spec.n, f.n))
    minus_tinv = -(params.t ** -1)
    total = LaurentPoly.zero(f.n)
    for g, img in _group_images(f, subgroup_enumerate(spec), params):
        total = total + img.scale(minus_tinv ** g.len_J) if g.len_J else total + img
    return total


def apply_U(f, sign, params=None):
    """U+ = sum T_w, U- = sum (-1/t)^{l(w)} T_w over the full symmetric group."""
    full = frozenset(range(1, f.n))
    if sign == "+":
        spec = SymmetrySpec(f.n, full, frozenset())
    elif sign == "-":
        spec = SymmetrySpec(f.n, frozenset(), full)
    else:
        raise ValueError("sign must be '+' or '-'")
    return apply_OIJ(f, spec, params)
