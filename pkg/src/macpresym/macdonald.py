"""
Nonsymmetric, symmetric, antisymmetric and prescribed-symmetry Macdonald
polynomials, with the coefficient and evaluation formulas that relate them.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass

from . import combinat as cb
from .conventions import default_conventions
from .hecke import OperatorParams, apply_D1, apply_OIJ, apply_Ti, apply_Ti_inv, apply_U, apply_Yi
from .laurent import LaurentPoly, bar, evaluate_monomial_spec, leading_under_order
from .linalg import Echelon, solve_expansion
from .qtfield import ONE, T, ZERO, monomial
from .report import IdentityReport, compare


@dataclass(frozen=True)
class LabeledPoly:
    label: tuple
    body: LaurentPoly
    family: str
    spec: cb.SymmetrySpec = None

    def __str__(self):
        return str(self.body)


class ConventionError(RuntimeError):
    """The computation contradicts the selected conventions."""


def _conv(conv):
    return default_conventions() if conv is None else conv


# -- E_eta ---------------------------------------------------------------------------

_E_CACHE = {}
_E_LOCK = threading.Lock()


def _solve_E(eta, conv):
    n, d = len(eta), sum(eta)
    params = OperatorParams.plain(conv.operator_order)
    basis = sorted(cb.compositions(n, d), key=cb.order_key, reverse=True)
    index = {b: k for k, b in enumerate(basis)}
    dim = len(basis)
    if dim == 1:
        return LaurentPoly.monomial(eta)
    eig = [cb.eigenvalue(eta, i) for i in range(1, n + 1)]
    # pivots prefer dominant monomials, so the free column ends up being eta itself
    ech = Echelon(dim, col_rank=lambda c: c)
    for i in range(1, n + 1):
        cols = [apply_Yi(LaurentPoly.monomial(b), i, params) for b in basis]
        rows = {}
        for k, img in enumerate(cols):
            for e, c in img.terms.items():
                if e not in index:
                    raise ConventionError("Y_%d leaves the homogeneous polynomial space" % i)
                rows.setdefault(index[e], {})[k] = c
            diag = rows.setdefault(index[basis[k]], {})
            diag[k] = diag.get(k, ZERO) - eig[i - 1]
        for r in sorted(rows):
            ech.add(rows[r])
            if ech.rank == dim:
                raise ConventionError("%r: eigenvalues admit no common eigenvector" % (eta,))
        if ech.rank == dim - 1:
            break
    free = ech.free_columns()
    if len(free) != 1:
        raise ConventionError("%r: eigenspace has dimension %d" % (eta, len(free)))
    vec = ech.null_vector(free[0])
    f = LaurentPoly._raw(n, {basis[k]: v for k, v in vec.items() if v})
    for i in range(1, n + 1):
        if apply_Yi(f, i, params) != f.scale(eig[i - 1]):
            raise ConventionError("%r: eigen equation for Y_%d fails" % (eta, i))
    lead = leading_under_order(f)
    if lead != tuple(eta):
        raise ConventionError("%r: leading exponent is %r" % (eta, lead))
    return f.scale(ONE / f.coefficient(eta))


def compute_E(eta, conv=None):
    eta = tuple(int(x) for x in eta)
    if any(x < 0 for x in eta):
        raise ValueError("composition parts must be non-negative")
    conv = _conv(conv)
    key = (eta, conv.operator_order)
    got = _E_CACHE.get(key)
    if got is None:
        got = _solve_E(eta, conv)
        with _E_LOCK:
            _E_CACHE.setdefault(key, got)
    return LabeledPoly(eta, got, "E")


# -- T_i action on E_eta -----------------------------------------------------------------

def _hooks(eta, variant, conv, n=None):
    return cb.hook_products(eta, variant, n=n, leg_convention=conv.leg_length)


def ti_action_check(eta, i, conv=None):
    """T_i E_eta against the three-case formula."""
    conv = _conv(conv)
    start = time.perf_counter()
    eta = tuple(eta)
    params = OperatorParams.plain(conv.operator_order)
    E = compute_E(eta, conv).body
    lhs = apply_Ti(E, i, params)
    if eta[i - 1] == eta[i]:
        rhs = E.scale(T)
    else:
        dl = cb.delta_ratio(eta, i)
        Es = compute_E(cb.swap(eta, i), conv).body
        first = (T - ONE) / (ONE - dl ** -1)
        if eta[i - 1] < eta[i]:
            second = T
        else:
            second = (ONE - T * dl) * (ONE - dl / T) / (ONE - dl) ** 2
        rhs = E.scale(first) + Es.scale(second)
    return compare("TiEn", {"eta": list(eta), "i": i}, lhs, rhs, started=start)


def ti_bar_action_check(eta, i, conv=None):
    """T_i applied to E_eta(z^-1; q^-1, t^-1) against the three-case formula."""
    conv = _conv(conv)
    start = time.perf_counter()
    eta = tuple(eta)
    params = OperatorParams.plain(conv.operator_order)
    Eb = bar(compute_E(eta, conv).body)
    lhs = apply_Ti(Eb, i, params)
    if eta[i - 1] == eta[i]:
        rhs = Eb.scale(T)
    else:
        se = cb.swap(eta, i)
        dl = cb.delta_ratio(eta, i)
        Esb = bar(compute_E(se, conv).body)
        ratio = (_hooks(se, "d", conv) * _hooks(eta, "d'", conv)
                 / (_hooks(se, "d'", conv) * _hooks(eta, "d", conv)))
        first = (T - ONE) / (ONE - dl ** -1)
        if eta[i - 1] < eta[i]:
            second = ratio * (ONE - T * dl) * (ONE - dl / T) / (ONE - dl) ** 2
        else:
            second = T * ratio
        rhs = Eb.scale(first) + Esb.scale(second)
    return compare("TiEnInv", {"eta": list(eta), "i": i}, lhs, rhs, started=start)


# -- symmetrized polynomials --------------------------------------------------------------

def _normalize(f, label, what):
    c = f.coefficient(label)
    if not c:
        raise ValueError("%s vanishes or lacks z^%r; label is not valid here" % (what, tuple(label)))
    return f.scale(ONE / c)


def compute_P(kappa, n=None, conv=None):
    """Symmetric Macdonald polynomial P_kappa in n variables (monic in z^kappa)."""
    conv = _conv(conv)
    kappa = tuple(kappa)
    n = len(kappa) if n is None else n
    if len(kappa) > n:
        raise ValueError("kappa has more than n parts")
    kappa = kappa + (0,) * (n - len(kappa))
    if list(kappa) != sorted(kappa, reverse=True):
        raise ValueError("kappa must be a partition")
    E = compute_E(kappa, conv).body
    body = _normalize(apply_U(E, "+", OperatorParams.plain(conv.operator_order)), kappa, "U+ E")
    full = frozenset(range(1, n))
    return LabeledPoly(kappa, body, "P", cb.SymmetrySpec(n, full, frozenset()))


def compute_S_antisym(label, conv=None):
    """Antisymmetric Macdonald polynomial S_{lambda+delta}; label strictly decreasing."""
    conv = _conv(conv)
    label = tuple(label)
    if any(label[j] <= label[j + 1] for j in range(len(label) - 1)):
        raise ValueError("label must be strictly decreasing")
    E = compute_E(label, conv).body
    body = _normalize(apply_U(E, "-", OperatorParams.plain(conv.operator_order)), label, "U- E")
    n = len(label)
    return LabeledPoly(label, body, "S_antisym", cb.SymmetrySpec(n, frozenset(), frozenset(range(1, n))))


def compute_S_IJ(eta_star, spec, via=None, conv=None):
    """S^{(I,J)}_{eta*} = O_{I,J} E_via normalized at z^{eta*}."""
    conv = _conv(conv)
    eta_star = tuple(eta_star)
    if len(eta_star) != spec.n:
        raise ValueError("eta* has %d parts but spec has n=%d" % (len(eta_star), spec.n))
    if not spec.is_valid_label(eta_star):
        raise ValueError("eta*=%r is not a valid label for %s" % (eta_star, spec))
    via = eta_star if via is None else tuple(via)
    if via not in cb.orbit(eta_star, spec):
        raise ValueError("%r is not in the orbit of %r" % (via, eta_star))
    E = compute_E(via, conv).body
    body = _normalize(apply_OIJ(E, spec, OperatorParams.plain(conv.operator_order)),
                      eta_star, "O_{I,J} E")
    return LabeledPoly(eta_star, body, "S_IJ", spec)


# -- coefficient formulas -------------------------------------------------------------------

def _orbit_data(mu, spec):
    """(l(w_J), minimal l(w_I), mu_I) for mu = w_I w_J eta*."""
    lJ = cb.block_inversions(mu, spec.J_tilde)
    lI = cb.block_inversions(mu, spec.I_tilde)
    mu_I = cb.orbit_markers(mu, spec, [("0", "+")])[("0", "+")]
    return lJ, lI, mu_I


def expansion_coeffs(eta_star, spec, direction="plain", conv=None):
    """Coefficients of S^{(I,J)}_{eta*} in the E basis (or of its bar in the bar basis)."""
    conv = _conv(conv)
    eta_star = tuple(eta_star)
    out = {}
    dps = _hooks(eta_star, "d'", conv)
    for mu in cb.orbit(eta_star, spec):
        lJ, lI, mu_I = _orbit_data(mu, spec)
        base = dps * _hooks(mu, "d", conv) / (_hooks(mu_I, "d'", conv) * _hooks(mu_I, "d", conv))
        if direction == "plain":
            out[mu] = base * (-(T ** -1)) ** lJ
        elif direction == "bar":
            out[mu] = base * (-ONE) ** lJ * T ** lI
        else:
            raise ValueError("direction must be 'plain' or 'bar'")
    return out


def proportionality(eta, spec, conv=None):
    """a^{(I,J)}_eta with O_{I,J} E_eta = a S^{(I,J)}_{eta*}."""
    conv = _conv(conv)
    eta = tuple(eta)
    m = cb.orbit_markers(eta, spec, [("-", "+"), ("0", "+"), ("-", "-")])
    lJ = cb.block_inversions(eta, spec.J_tilde)
    num = (_hooks(eta, "d'", conv) * _hooks(m[("-", "+")], "d'", conv)
           * _hooks(m[("-", "+")], "d", conv))
    den = (_hooks(m[("0", "+")], "d'", conv) * _hooks(m[("0", "+")], "d", conv)
           * _hooks(m[("-", "-")], "d'", conv))
    return (-ONE) ** lJ * cb.M_I(spec, eta) * num / den


def expansion_check(eta_star, spec, direction="plain", conv=None):
    """Expand S (or bar S) in the E basis by exact linear solve; compare with the formula."""
    conv = _conv(conv)
    start = time.perf_counter()
    S = compute_S_IJ(eta_star, spec, conv=conv).body
    orbit = cb.orbit(eta_star, spec)
    Es = [compute_E(mu, conv).body for mu in orbit]
    if direction == "bar":
        S = bar(S)
        Es = [bar(e) for e in Es]
    solved = solve_expansion(dict(S.terms), [dict(e.terms) for e in Es])
    formula = expansion_coeffs(eta_star, spec, direction, conv)
    diffs = {}
    for mu, x in zip(orbit, solved):
        d = x - formula[mu]
        if d:
            diffs[",".join(map(str, mu))] = d
    status = "differ" if diffs else "equal"
    return IdentityReport("expansion-" + direction,
                          {"eta_star": list(eta_star), "spec": str(spec)},
                          status, diffs or 0, time.perf_counter() - start)


def proportionality_check(eta, spec, conv=None):
    conv = _conv(conv)
    start = time.perf_counter()
    eta = tuple(eta)
    eta_star = cb.orbit_markers(eta, spec, [("+", "+")])[("+", "+")]
    params = OperatorParams.plain(conv.operator_order)
    lhs = apply_OIJ(compute_E(eta, conv).body, spec, params)
    rhs = compute_S_IJ(eta_star, spec, conv=conv).body.scale(proportionality(eta, spec, conv))
    return compare("proportionality", {"eta": list(eta), "spec": str(spec)}, lhs, rhs, started=start)


# -- evaluations ---------------------------------------------------------------------------

def tdelta_point(n, conv=None):
    conv = _conv(conv)
    return [T ** e for e in conv.tdelta_exponents(n)]


def evaluate_E_closed(eta, conv=None):
    """t^{l(eta)} e_eta / d_eta."""
    conv = _conv(conv)
    eta = tuple(eta)
    return T ** conv.l_of(eta) * _hooks(eta, "e", conv) / _hooks(eta, "d", conv)


def evaluate_S_sym_closed(eta_star, spec, conv=None):
    """(n_I / M_{I,eta*}) t^{l(eta*)} e_{eta*} / d_{eta*^{(-,0)}} for J empty."""
    conv = _conv(conv)
    if spec.J:
        raise ValueError("the symmetrized evaluation needs J empty")
    eta_star = tuple(eta_star)
    low = cb.orbit_markers(eta_star, spec, [("-", "0")])[("-", "0")]
    return (cb.n_I(spec) / cb.M_I(spec, eta_star) * T ** conv.l_of(eta_star)
            * _hooks(eta_star, "e", conv) / _hooks(low, "d", conv))


def _n_of_partition(kappa):
    return sum(i * k for i, k in enumerate(kappa))


def evaluate_P_product(kappa, n, conv=None):
    """t^{n(kappa)} prod (1 - q^{a'} t^{n-l'})/(1 - q^{a} t^{l+1}) over the diagram."""
    conv = _conv(conv)
    kappa = tuple(kappa) + (0,) * (n - len(kappa))
    out = ONE
    for s in cb.diagram(kappa):
        a, ap = cb.arm(kappa, s), cb.arm_colength(kappa, s)
        lp = cb.leg_colength(kappa, s[0])
        l = cb.leg(kappa, s, conv.leg_length)
        out = out * (ONE - monomial(ap, n - lp)) / (ONE - monomial(a, l + 1))
    exps = conv.tdelta_exponents(n)
    # the product is the value at (1, t, ..., t^{n-1}); rescale to the chosen point
    shift = min(exps)
    return out * T ** (_n_of_partition(kappa) + shift * sum(kappa))


def evaluate_P_display(kappa, n):
    """Product exactly as displayed for P_kappa(t^delta): a' and l' in both factors."""
    kappa = tuple(kappa) + (0,) * (n - len(kappa))
    out = ONE
    for s in cb.diagram(kappa):
        ap = cb.arm_colength(kappa, s)
        lp = cb.leg_colength(kappa, s[0])
        out = out * (ONE - monomial(ap, n - lp)) / (ONE - monomial(ap, lp + 1))
    return out


def evaluate_principal(family, label, spec=None, n=None, conv=None):
    """Closed-form value at t^delta for family in {E, P, S_I}."""
    conv = _conv(conv)
    if family == "E":
        return evaluate_E_closed(label, conv)
    if family == "P":
        n = len(label) if n is None else n
        return evaluate_P_product(label, n, conv)
    if family == "S_I":
        return evaluate_S_sym_closed(label, spec, conv)
    raise ValueError("unknown family %r" % (family,))


def evaluate_at_tdelta(f, conv=None):
    return evaluate_monomial_spec(f, tdelta_point(f.n, conv))


# -- factorization theorems -------------------------------------------------------------------

def shape_S(shape, kappa=(), conv=None):
    eta, I, J = cb.build_shapes(shape, kappa)
    spec = cb.SymmetrySpec(shape.n, I, J)
    return compute_S_IJ(eta, spec, conv=conv)


def special_eta_check(shape, conv=None):
    """S_{(0^{n0}, staircases)} against the block t-Vandermonde."""
    start = time.perf_counter()
    lhs = shape_S(shape, (), conv).body
    rhs = cb.vandermonde(shape, "t")
    return compare("special-eta", {"shape": str(shape)}, lhs, rhs, started=start)


def thm34_check(kappa, n, conv=None):
    """S_{kappa+delta}(z;q,t) against Delta_t(z) P_kappa(z;q,qt)."""
    conv = _conv(conv)
    start = time.perf_counter()
    kappa = tuple(kappa) + (0,) * (n - len(kappa))
    label = tuple(k + n - 1 - i for i, k in enumerate(kappa))
    lhs = compute_S_antisym(label, conv).body
    P = compute_P(kappa, n, conv).body.substitute_params((1, 0), (1, 1))
    rhs = cb.vandermonde(cb.BlockShape(0, (n,)), "t") * P
    return compare("thm34", {"kappa": list(kappa), "n": n}, lhs, rhs, started=start)


def operator_identity_check(f, conv=None):
    """D^1_n(q,t) Delta_t f against Delta_t D^1_n(q,qt) f, f symmetric in all variables."""
    conv = _conv(conv)
    start = time.perf_counter()
    n = f.n
    delta = cb.vandermonde(cb.BlockShape(0, (n,)), "t")
    lhs = apply_D1(delta * f, OperatorParams.plain(conv.operator_order))
    rhs = delta * apply_D1(f, OperatorParams.t_to_qt(conv.operator_order))
    return compare("D1-intertwine", {"n": n, "f": str(f)}, lhs, rhs, started=start)


def conjecture1_check(kappa, shape, conv=None):
    """S^{(I,J)}_{(kappa, staircases)} against Delta_t^{n0,Np} P_kappa(z_1..z_{n0}; q t^p, t)."""
    conv = _conv(conv)
    start = time.perf_counter()
    kappa = tuple(k for k in kappa if k) or ()
    if shape.p < 1:
        raise ValueError("need at least one antisymmetric block")
    if kappa and kappa[0] >= min(shape.Np):
        raise ValueError("need kappa_1 < min(Np)")
    if len(kappa) > shape.n0:
        raise ValueError("kappa has more than n0 parts")
    lhs = shape_S(shape, kappa, conv).body
    if shape.n0:
        P = compute_P(kappa, shape.n0, conv).body
        P = P.substitute_params((1, shape.p), (0, 1)).embed(shape.n)
    else:
        P = LaurentPoly.one(shape.n)
    rhs = cb.vandermonde(shape, "t") * P
    return compare("conjecture1", {"kappa": list(kappa), "shape": str(shape)}, lhs, rhs,
                   label="conjecture", started=start)


def commutation_check(shape, f, conv=None):
    """D^1_n(q,t) Delta_t^{n0,Np} f against Delta_t^{n0,Np} D^1_n(q t^p, t) f."""
    conv = _conv(conv)
    start = time.perf_counter()
    if f.n != shape.n:
        f = f.embed(shape.n)
    delta = cb.vandermonde(shape, "t")
    lhs = apply_D1(delta * f, OperatorParams.plain(conv.operator_order))
    rhs = delta * apply_D1(f, OperatorParams.q_to_qtp(shape.p, conv.operator_order))
    return compare("D1-blocks", {"shape": str(shape), "f": str(f)}, lhs, rhs,
                   label="conjecture", started=start)


# -- standard suites ---------------------------------------------------------------------------

PRESCRIBED_SUITES = (
    (frozenset(), frozenset({1})),
    (frozenset({1}), frozenset()),
    (frozenset(), frozenset({1, 2})),
    (frozenset({1}), frozenset({3})),
)


def prescribed_suite(max_n=4, max_degree=4, pairs=PRESCRIBED_SUITES):
    """(eta*, spec) for every (I, J) pair, every n <= max_n it fits, every valid label."""
    out = []
    for I, J in pairs:
        lo = max(I | J) + 1
        for n in range(lo, max_n + 1):
            spec = cb.SymmetrySpec(n, I, J)
            for eta in cb.compositions_upto(n, max_degree):
                if spec.is_valid_label(eta):
                    out.append((eta, spec))
    return out
