import random

import pytest

from macpresym.combinat import SymmetrySpec, elementary
from macpresym.hecke import (OperatorParams, apply_D1, apply_OIJ, apply_omega, apply_Ti,
                             apply_Ti_inv, apply_Tword, apply_U, apply_Yi)
from macpresym.laurent import LaurentPoly
from macpresym.macdonald import compute_E, compute_P
from macpresym.qtfield import ONE, Q, T

z = lambda n, i: LaurentPoly.variable(n, i)
one = LaurentPoly.one


def rand_poly(n, seed, deg=2):
    rng = random.Random(seed)
    out = LaurentPoly.zero(n)
    for _ in range(4):
        e = tuple(rng.randint(-1, deg) for _ in range(n))
        out = out + LaurentPoly.monomial(e, rng.choice([ONE, -ONE, Q, T, ONE + Q]))
    return out


def test_ti_examples():
    s = z(2, 1) + z(2, 2)
    assert apply_Ti(s, 1) == s.scale(T)
    assert apply_Ti(z(2, 2), 1) == z(2, 1).scale(T) + z(2, 2).scale(T - ONE)
    assert apply_Ti(one(2), 1) == one(2).scale(T)
    assert apply_Ti_inv(apply_Ti(z(2, 2), 1), 1) == z(2, 2)
    assert apply_Ti_inv(s, 1) == s.scale(T ** -1)
    assert apply_Ti_inv(one(2), 1) == one(2).scale(T ** -1)
    with pytest.raises(IndexError):
        apply_Ti(one(2), 2)


@pytest.mark.parametrize("seed", range(5))
def test_hecke_relations(seed):
    f = rand_poly(3, seed)
    for i in (1, 2):
        Tf = apply_Ti(f, i)
        assert apply_Ti(Tf, i) - Tf.scale(T - ONE) - f.scale(T) == LaurentPoly.zero(3)
        assert apply_Ti(apply_Ti_inv(f, i), i) == f
    assert apply_Tword(f, (1, 2, 1)) == apply_Tword(f, (2, 1, 2))
    f4 = rand_poly(4, seed)
    assert apply_Ti(apply_Ti(f4, 1), 3) == apply_Ti(apply_Ti(f4, 3), 1)


def test_omega_and_y():
    assert apply_omega(z(2, 1)) == z(2, 2).scale(Q)
    f = rand_poly(2, 0)
    assert apply_Tword(f, ()) == f
    for n in (1, 2, 3):
        for i in range(1, n + 1):
            assert apply_Yi(one(n), i) == one(n).scale(T ** -(i - 1))


@pytest.mark.parametrize("seed", range(3))
def test_y_operators_commute(seed):
    f = rand_poly(3, seed)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        assert apply_Yi(apply_Yi(f, j), i) == apply_Yi(apply_Yi(f, i), j)


def test_symmetrizers():
    assert apply_U(one(2), "+") == one(2).scale(ONE + T)
    s = z(2, 1) + z(2, 2)
    assert apply_U(s, "-") == LaurentPoly.zero(2)
    u = apply_U(compute_E((1, 0)).body, "+")
    assert u == s.scale(u.coefficient((1, 0)))


@pytest.mark.parametrize("seed", range(3))
def test_symmetrizer_outputs(seed):
    f = rand_poly(3, seed)
    up, um = apply_U(f, "+"), apply_U(f, "-")
    for i in (1, 2):
        assert apply_Ti(up, i) == up.scale(T)
        assert apply_Ti(um, i) == -um
    spec = SymmetrySpec(4, (1,), (3,))
    g = apply_OIJ(rand_poly(4, seed), spec)
    assert apply_Ti(g, 1) == g.scale(T)
    assert apply_Ti(g, 3) == -g


def test_oij_examples():
    f = rand_poly(2, 7)
    assert apply_OIJ(f, SymmetrySpec(2)) == f
    anti = z(2, 1) - z(2, 2).scale(T ** -1)
    assert apply_Ti(anti, 1) == -anti
    assert apply_OIJ(anti, SymmetrySpec(2, (), (1,))) == anti.scale(ONE + T ** -1)
    s = z(2, 1) * z(2, 2)
    assert apply_OIJ(s, SymmetrySpec(2, (1,), ())) == s.scale(ONE + T)


def test_d1():
    assert apply_D1(one(3)) == one(3).scale(ONE + T + T ** 2)
    P = compute_P((1,), 2).body
    assert P == z(2, 1) + z(2, 2)
    D = apply_D1(P)
    assert D == P.scale(D.coefficient((1, 0)))
    delta = z(2, 1) - z(2, 2).scale(T ** -1)
    rhs = delta * apply_D1(P, OperatorParams.t_to_qt())
    assert apply_D1(delta * P) == rhs


def test_params():
    with pytest.raises(ValueError):
        OperatorParams.q_to_qtp(-1)
    with pytest.raises(ValueError):
        OperatorParams(order="sideways")
    e1 = elementary(3, 1)
    assert apply_D1(e1, OperatorParams.q_to_qtp(0)) == apply_D1(e1)
