import random

from hopfpbw.scalar import Scalar
from hopfpbw.hopf import h_mul
from hopfpbw.modalg import act_on_tensor, CutoffExceeded
from hopfpbw.smash import (
    NormalElement, unit_element, from_h, straighten, smash_mult,
    adjoint_on_VH, eps_project,
)

import pytest


def one(order=1):
    return Scalar.one(order)


def test_straighten_degree_zero(problem):
    prob = problem("sweedler")
    H, B = prob.hopf, prob.algebra
    a = {1: one(), 2: -one()}
    assert straighten(H, B, a, {(): one()}) == {((), 1): one(), ((), 2): -one()}


def test_straighten_examples(problem):
    prob = problem("sweedler")
    H, B = prob.hopf, prob.algebra
    v = {(1,): one()}
    # unit: t (x) 1
    assert straighten(H, B, H.unit, v) == {((1,), 0): one()}
    # grouplike g: g v = (g.v) g = -v (x) g
    assert straighten(H, B, {2: one()}, v) == {((1,), 2): -one()}
    # x v = (g.v)(x)x + (x.v)(x)1 = u(x)1 - v(x)x
    assert straighten(H, B, {1: one()}, v) == {((0,), 0): one(), ((1,), 1): -one()}


def test_smash_mult_unit_law(problem):
    prob = problem("h8")
    H, B = prob.hopf, prob.algebra
    rng = random.Random(3)
    e = unit_element(H, B.cutoff)
    for _ in range(5):
        terms = {}
        for _ in range(4):
            word = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 3)))
            terms[(word, rng.randint(0, 7))] = Scalar.from_int(1, rng.randint(-3, 3))
        x = NormalElement(B.cutoff, {k: c for k, c in terms.items() if not c.is_zero()})
        assert smash_mult(H, B, e, x).terms == x.terms
        assert smash_mult(H, B, x, e).terms == x.terms


def test_smash_mult_two_step_straightening(problem):
    prob = problem("sweedler")
    H, B = prob.hopf, prob.algebra
    g = from_h(H, {2: one()}, B.cutoff)
    v = NormalElement(B.cutoff, {((1,), 0): one()})
    gv = smash_mult(H, B, g, v)
    assert gv.terms == {((1,), 2): -one()}
    gvg = smash_mult(H, B, gv, g)
    assert gvg.terms == {((1,), 0): -one()}


def test_smash_mult_associativity(problem):
    prob = problem("taft-3")
    H, B = prob.hopf, prob.algebra
    rng = random.Random(5)
    order = H.order
    for _ in range(6):
        elems = []
        for _ in range(3):
            terms = {}
            for _ in range(2):
                word = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 1)))
                c = Scalar.from_int(order, rng.randint(-2, 2))
                if not c.is_zero():
                    terms[(word, rng.randint(0, 8))] = c
            elems.append(NormalElement(B.cutoff, terms))
        a, b, c = elems
        left = smash_mult(H, B, smash_mult(H, B, a, b), c)
        right = smash_mult(H, B, a, smash_mult(H, B, b, c))
        assert left.terms == right.terms


def test_smash_mult_cutoff_is_hard(problem):
    prob = problem("sweedler")
    H, B = prob.hopf, prob.algebra
    deep = NormalElement(B.cutoff, {((0,) * B.cutoff, 0): one()})
    v = NormalElement(B.cutoff, {((0,), 0): one()})
    with pytest.raises(CutoffExceeded):
        smash_mult(H, B, deep, v)


def test_straighten_compatible_with_h_multiplication(problem):
    prob = problem("h8")
    H, B = prob.hopf, prob.algebra
    rng = random.Random(9)
    for _ in range(6):
        a = {rng.randint(0, 7): Scalar.from_int(1, rng.randint(-2, 2)) for _ in range(2)}
        b = {rng.randint(0, 7): Scalar.from_int(1, rng.randint(-2, 2)) for _ in range(2)}
        a = {k: c for k, c in a.items() if not c.is_zero()}
        b = {k: c for k, c in b.items() if not c.is_zero()}
        word = tuple(rng.randint(0, 1) for _ in range(2))
        t = {word: one()}
        direct = straighten(H, B, h_mul(H, a, b), t)
        via = smash_mult(H, B, from_h(H, a, B.cutoff),
                         NormalElement(B.cutoff, straighten(H, B, b, t)))
        assert direct == via.terms


def test_adjoint_on_VH_examples(problem):
    prob = problem("sweedler")
    H, B = prob.hopf, prob.algebra
    w = {(0, 1): one()}          # u (x) x
    # unit fixes everything
    assert adjoint_on_VH(H, B, H.unit, w) == w
    # g . (u (x) x) = (g.u) (x) g x g = -u (x) x
    assert adjoint_on_VH(H, B, {2: one()}, w) == {(0, 1): -one()}
    # grouplike on v (x) g
    got = adjoint_on_VH(H, B, {2: one()}, {(1, 2): one()})
    assert got == {(1, 2): -one()}


def test_adjoint_on_VH_module_axiom(problem):
    prob = problem("ha1")
    H, B = prob.hopf, prob.algebra
    o = Scalar.one(4)
    for a in (1, 8):
        for b in (4, 9):
            for w in ({(0, 2): o}, {(3, 8): o}):
                lhs = adjoint_on_VH(H, B, H.mult[a][b], w)
                rhs = adjoint_on_VH(H, B, H.basis_vec(a),
                                    adjoint_on_VH(H, B, H.basis_vec(b), w))
                assert lhs == rhs


def test_eps_consistency(problem):
    # applying the counit to the H-leg of a straightening recovers the action
    for name in ("sweedler", "h8", "ha1"):
        prob = problem(name)
        H, B = prob.hopf, prob.algebra
        rng = random.Random(21)
        for _ in range(4):
            a = {rng.randint(0, H.dim - 1): Scalar.from_int(H.order, rng.randint(-2, 2))
                 for _ in range(2)}
            a = {k: c for k, c in a.items() if not c.is_zero()}
            word = tuple(rng.randint(0, B.vdim - 1) for _ in range(3))
            t = {word: one(H.order)}
            assert eps_project(H, straighten(H, B, a, t)) == act_on_tensor(H, B, a, t)
