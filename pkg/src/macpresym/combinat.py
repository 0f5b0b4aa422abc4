"""
Compositions, diagram statistics, symmetry sets and small group enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
import itertools
from itertools import product

from .laurent import LaurentPoly
from .qtfield import ONE, Q, T, ZERO, monomial, q_factorial, qt

LEG_CONVENTIONS = ("standard", "literal")


# -- compositions -----------------------------------------------------------------

def partition_of(eta):
    return tuple(sorted(eta, reverse=True))


def compositions(n, d):
    """All compositions of d into n non-negative parts, lexicographically."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in compositions(n - 1, d - first):
            out.append((first,) + rest)
    return out


def compositions_upto(n, max_degree):
    out = []
    for d in range(max_degree + 1):
        out.extend(compositions(n, d))
    return out


def partitions(d, max_parts=None, max_part=None):
    """Partitions of d (weakly decreasing tuples), largest first."""
    if max_part is None:
        max_part = d
    if d == 0:
        return [()]
    if max_parts == 0:
        return []
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, None if max_parts is None else max_parts - 1, first):
            out.append((first,) + rest)
    return out


def _dominates(a, b):
    """Partial sums of a >= partial sums of b."""
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def order_precedes(mu, eta):
    """mu strictly precedes eta in the order used for triangularity."""
    mu, eta = tuple(mu), tuple(eta)
    if len(mu) != len(eta):
        raise ValueError("compositions of different length")
    if sum(mu) != sum(eta):
        raise ValueError("compositions of different modulus")
    if mu == eta:
        return False
    mp, ep = partition_of(mu), partition_of(eta)
    if mp != ep:
        return _dominates(ep, mp)
    return _dominates(eta, mu)


def order_key(eta):
    """A total order refining ``order_precedes`` (smaller key = lower)."""
    return (partition_of(eta), tuple(eta))


def coxeter_length_to(eta):
    """#{i<j : eta_i < eta_j}: length of the shortest permutation sorting eta+ into eta."""
    n = len(eta)
    return sum(1 for i in range(n) for j in range(i + 1, n) if eta[i] < eta[j])


def swap(eta, i):
    e = list(eta)
    e[i - 1], e[i] = e[i], e[i - 1]
    return tuple(e)


# -- eigenvalues and diagram statistics ---------------------------------------------

def leg_colength(eta, i):
    """l'_eta(i) for row i (1-based)."""
    v = eta[i - 1]
    return (sum(1 for j in range(i - 1) if eta[j] >= v)
            + sum(1 for j in range(i, len(eta)) if eta[j] > v))


def eigenvalue(eta, i, q=None, t=None):
    """q^{eta_i} t^{-l'_eta(i)}, optionally at substituted parameters."""
    q = Q if q is None else qt(q)
    t = T if t is None else qt(t)
    return q ** eta[i - 1] * t ** (-leg_colength(eta, i))


def eigen_data(eta, i):
    if not 1 <= i <= len(eta):
        raise IndexError("row %d out of range for %r" % (i, eta))
    return leg_colength(eta, i), eigenvalue(eta, i)


def delta_ratio(eta, i):
    return eigenvalue(eta, i) / eigenvalue(eta, i + 1)


def diagram(eta):
    return [(i, j) for i in range(1, len(eta) + 1) for j in range(1, eta[i - 1] + 1)]


def arm(eta, s):
    return eta[s[0] - 1] - s[1]


def arm_colength(eta, s):
    return s[1] - 1


def leg(eta, s, convention="standard"):
    i, j = s
    ei = eta[i - 1]
    before = sum(1 for k in range(1, i) if j <= eta[k - 1] + 1 <= ei)
    if convention == "standard":
        other = sum(1 for k in range(i + 1, len(eta) + 1) if j <= eta[k - 1] <= ei)
    elif convention == "literal":
        other = sum(1 for k in range(1, i) if j <= eta[k - 1] <= ei)
    else:
        raise ValueError("unknown leg convention %r" % (convention,))
    return before + other


@lru_cache(maxsize=None)
def _hook_exponents(eta, variant, n, convention):
    out = []
    for s in diagram(eta):
        if variant == "d":
            out.append((arm(eta, s) + 1, leg(eta, s, convention) + 1))
        elif variant == "d'":
            out.append((arm(eta, s) + 1, leg(eta, s, convention)))
        elif variant == "e":
            out.append((arm_colength(eta, s) + 1, n - leg_colength(eta, s[0])))
        elif variant == "e'":
            out.append((arm_colength(eta, s) + 1, n - 1 - leg_colength(eta, s[0])))
        else:
            raise ValueError("unknown hook variant %r" % (variant,))
    return tuple(out)


def hook_products(eta, variant, n=None, leg_convention="standard"):
    """d, d', e or e' of a composition as an element of Q(q,t)."""
    eta = tuple(eta)
    n = len(eta) if n is None else n
    out = ONE
    for a, b in _hook_exponents(eta, variant, n, leg_convention):
        out = out * (ONE - monomial(a, b))
    return out


def d_ratio_identities_check(eta, i, leg_convention="standard"):
    """Check d_{s_i eta}/d_eta and d'_{s_i eta}/d'_eta against delta (eta_i < eta_{i+1})."""
    eta = tuple(eta)
    if not eta[i - 1] < eta[i]:
        raise ValueError("need eta_i < eta_{i+1}")
    dl = delta_ratio(eta, i)
    se = swap(eta, i)
    d_ok = (hook_products(se, "d", leg_convention=leg_convention)
            / hook_products(eta, "d", leg_convention=leg_convention)) == (ONE - dl) / (T - dl)
    dp_ok = (hook_products(se, "d'", leg_convention=leg_convention)
             / hook_products(eta, "d'", leg_convention=leg_convention)) == (T ** -1 - dl) / (ONE - dl)
    return d_ok and dp_ok


# -- symmetry sets --------------------------------------------------------------

def runs(indices):
    """Maximal runs of consecutive integers, as sorted tuples."""
    out = []
    for i in sorted(indices):
        if out and out[-1][-1] == i - 1:
            out[-1].append(i)
        else:
            out.append([i])
    return [tuple(r) for r in out]


@dataclass(frozen=True)
class SymmetrySpec:
    n: int
    I: frozenset = frozenset()
    J: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "I", frozenset(self.I))
        object.__setattr__(self, "J", frozenset(self.J))
        allowed = set(range(1, self.n))
        if not self.I <= allowed or not self.J <= allowed:
            raise ValueError("I and J must be subsets of {1..%d}" % (self.n - 1))
        if self.I & self.J:
            raise ValueError("I and J must be disjoint")
        for i in self.I:
            if i - 1 in self.J or i + 1 in self.J:
                raise ValueError("i=%d in I is adjacent to J" % i)

    @property
    def blocks_I(self):
        return runs(self.I)

    @property
    def blocks_J(self):
        return runs(self.J)

    @property
    def I_tilde(self):
        return [b + (b[-1] + 1,) for b in self.blocks_I]

    @property
    def J_tilde(self):
        return [b + (b[-1] + 1,) for b in self.blocks_J]

    def __str__(self):
        return "I=%s;J=%s" % (",".join(map(str, sorted(self.I))), ",".join(map(str, sorted(self.J))))

    def is_valid_label(self, eta):
        eta = tuple(eta)
        return (all(eta[i - 1] >= eta[i] for i in self.I)
                and all(eta[j - 1] > eta[j] for j in self.J))


@dataclass(frozen=True)
class BlockShape:
    n0: int
    Np: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "Np", tuple(self.Np))
        if self.n0 < 0 or any(m < 1 for m in self.Np):
            raise ValueError("need n0 >= 0 and block sizes >= 1")

    @property
    def n(self):
        return self.n0 + sum(self.Np)

    @property
    def p(self):
        return len(self.Np)

    def blocks(self):
        """Variable positions (1-based) of each antisymmetric block."""
        out = []
        start = self.n0 + 1
        for m in self.Np:
            out.append(tuple(range(start, start + m)))
            start += m
        return out

    def __str__(self):
        return "n0=%d;Np=%s" % (self.n0, ",".join(map(str, self.Np)))


def build_shapes(shape, kappa=()):
    """Label (kappa, staircases), I = {1..n0-1} and J for a block shape.

    kappa may have fewer than n0 parts; it is padded with zeros.
    """
    kappa = tuple(kappa)
    if len(kappa) > shape.n0:
        raise ValueError("kappa has more than n0=%d parts" % shape.n0)
    if any(kappa[i] < kappa[i + 1] for i in range(len(kappa) - 1)) or any(x < 0 for x in kappa):
        raise ValueError("kappa must be a partition")
    kappa = kappa + (0,) * (shape.n0 - len(kappa))
    eta = list(kappa)
    for m in shape.Np:
        eta.extend(range(m - 1, -1, -1))
    I = set(range(1, shape.n0))
    J = set()
    for b in shape.blocks():
        J.update(b[:-1])
    return tuple(eta), frozenset(I), frozenset(J)


def block_factor_product(n, blocks, a=ONE):
    """prod over blocks, i<j in block, of (z_i - a z_j)."""
    a = qt(a)
    out = LaurentPoly.one(n)
    for b in blocks:
        for x in range(len(b)):
            for y in range(x + 1, len(b)):
                f = (LaurentPoly.variable(n, b[x]) - LaurentPoly.variable(n, b[y], a))
                out = out * f
    return out


def vandermonde(shape, variant="t"):
    if variant == "plain":
        a = ONE
    elif variant == "t":
        a = T ** -1
    else:
        raise ValueError("variant must be 'plain' or 't'")
    return block_factor_product(shape.n, shape.blocks(), a)


# -- subgroup enumeration ---------------------------------------------------------

@dataclass(frozen=True)
class GroupElement:
    perm: tuple       # image of (1..n) under the element, acting on positions
    word: tuple       # reduced word as written: (i_l, ..., i_1), i_1 acts first
    len_I: int
    len_J: int

    @property
    def length(self):
        return self.len_I + self.len_J

    def act(self, eta):
        return tuple(eta[p - 1] for p in self.perm)


def apply_word_to_composition(eta, word):
    """s_{i_l} ... s_{i_1} eta for word = (i_l, ..., i_1)."""
    eta = tuple(eta)
    for i in reversed(word):
        eta = swap(eta, i)
    return eta


@lru_cache(maxsize=None)
def _block_elements(start, size):
    """All permutations of positions start..start+size-1 with reduced words (BFS)."""
    n_local = size
    ident = tuple(range(1, n_local + 1))
    words = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in range(1, n_local):
                np_ = swap(p, g)
                if np_ not in words:
                    words[np_] = (start + g - 1,) + words[p]
                    nxt.append(np_)
        frontier = nxt
    return [(p, words[p]) for p in sorted(words, key=lambda p: (len(words[p]), p))]


def subgroup_enumerate(spec):
    """Elements of W_{I u J} with reduced words and (l(w_I), l(w_J))."""
    blocks = [("I", b) for b in spec.I_tilde] + [("J", b) for b in spec.J_tilde]
    blocks.sort(key=lambda x: x[1][0])
    per_block = [[(kind, b, p, w) for p, w in _block_elements(b[0], len(b))] for kind, b in blocks]
    out = []
    for combo in product(*per_block):
        perm = list(range(1, spec.n + 1))
        word = ()
        li = lj = 0
        for kind, b, p, w in combo:
            for k, x in enumerate(p):
                perm[b[0] - 1 + k] = b[0] - 1 + x
            word = word + w
            if kind == "I":
                li += len(w)
            else:
                lj += len(w)
        out.append(GroupElement(tuple(perm), word, li, lj))
    out.sort(key=lambda g: (g.length, g.word))
    return out


def orbit(eta, spec):
    return sorted({g.act(eta) for g in subgroup_enumerate(spec)}, reverse=True)


# -- scalar constants ----------------------------------------------------------------

def _apply_marker(eta, blocks, mark, strict):
    eta = list(eta)
    for b in blocks:
        vals = [eta[p - 1] for p in b]
        if mark == "0":
            continue
        if strict and len(set(vals)) != len(vals):
            raise ValueError("strict ordering impossible on block %r of %r" % (b, tuple(eta)))
        vals.sort(reverse=(mark == "+"))
        for p, v in zip(b, vals):
            eta[p - 1] = v
    return tuple(eta)


MARKERS = tuple((a, b) for a in "+0-" for b in "+0-")


def orbit_markers(eta, spec, which=MARKERS):
    """eta^{(eps_I, eps_J)}: '+' sorts a block decreasing, '-' increasing,
    '0' keeps eta's own arrangement there."""
    out = {}
    for mi, mj in which:
        e = _apply_marker(eta, spec.I_tilde, mi, strict=False)
        e = _apply_marker(e, spec.J_tilde, mj, strict=True)
        out[(mi, mj)] = e
    return out


def n_I(spec, t=None):
    t = T if t is None else qt(t)
    out = ONE
    for b in spec.I_tilde:
        out = out * q_factorial(len(b), t)
    return out


def K_IJ(spec, t=None):
    t = T if t is None else qt(t)
    out = ONE
    for b in spec.J_tilde:
        out = out * q_factorial(len(b), t)
    for b in spec.I_tilde:
        out = out * q_factorial(len(b), t ** -1)
    return out


def M_I(spec, eta, t=None):
    """sum of t^{l(s)} over s in W_I with s(eta) = eta^{(+,0)}."""
    t = T if t is None else qt(t)
    target = orbit_markers(eta, spec, [("+", "0")])[("+", "0")]
    ispec = SymmetrySpec(spec.n, spec.I, frozenset())
    out = ZERO
    for g in subgroup_enumerate(ispec):
        if g.act(eta) == target:
            out = out + t ** g.len_I
    return out


def scalar_constants(spec, eta, t=None):
    return K_IJ(spec, t), n_I(spec, t), M_I(spec, eta, t)


def block_inversions(eta, blocks):
    """Number of increasing pairs inside the given blocks."""
    return sum(1 for b in blocks for x in range(len(b)) for y in range(x + 1, len(b))
               if eta[b[x] - 1] < eta[b[y] - 1])


# -- statistics for the block inner products ------------------------------------------

def mj_stats(Np, j):
    """(i_j, m(j)) with m(j) = sum over blocks n_k >= j of (n_k - j).

    i_j indexes the first contributing block once the sizes are sorted
    increasingly (the sizes smaller than j come first).
    """
    Np = tuple(Np)
    if not Np or not 1 <= j <= max(Np):
        raise ValueError("j must lie in 1..max(Np)")
    inc = sorted(Np)
    i_j = sum(1 for m in inc if m < j) + 1
    m = sum(inc[k] - j for k in range(i_j - 1, len(inc)))
    return i_j, m


# -- parsing ---------------------------------------------------------------------------

def parse_composition(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def _parse_index_set(text):
    text = text.strip().strip("'\"")
    if not text:
        return frozenset()
    return frozenset(int(x) for x in text.split(","))


def parse_sets(text):
    """'I=1,2;J=4,5,6,8' -> (I, J)."""
    I = J = frozenset()
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, val = part.partition("=")
        key = key.strip()
        if key == "I":
            I = _parse_index_set(val)
        elif key == "J":
            J = _parse_index_set(val)
        else:
            raise ValueError("unknown set %r in %r" % (key, text))
    return I, J


def parse_shape(text):
    """'n0=3;Np=4,2' -> BlockShape."""
    vals = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, val = part.partition("=")
        vals[key.strip()] = val.strip()
    if "n0" not in vals or "Np" not in vals:
        raise ValueError("shape needs n0 and Np: %r" % (text,))
    return BlockShape(int(vals["n0"]), parse_composition(vals["Np"]))


def elementary(n, r):
    """e_r(z_1, ..., z_n)."""
    out = LaurentPoly.zero(n)
    for c in itertools.combinations(range(n), r):
        out = out + LaurentPoly.monomial([1 if i in c else 0 for i in range(n)])
    return out
