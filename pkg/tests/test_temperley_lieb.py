import random

import pytest

from ebraid.braid_words import random_braid
from ebraid.errors import IndexOutOfRange
from ebraid.scalar_ring import TauLaurent
from ebraid.temperley_lieb import (
    PlanarMatching,
    TLElement,
    closure_loop_count,
    rho_sigma,
    rho_word,
    tl_closure_eval,
    tl_generator,
    tl_multiply,
)

d = TauLaurent.d()


def test_generators():
    e = tl_generator(2, 1)
    assert str(e) == "b1-b2 t1-t2"
    assert str(tl_generator(3, 2)) == "b1-t1 b2-b3 t2-t3"
    with pytest.raises(IndexOutOfRange):
        tl_generator(2, 2)


def test_non_planar_rejected():
    with pytest.raises(ValueError):
        PlanarMatching(2, (3, 2, 1, 0))


def test_relations():
    e1 = tl_generator(2, 1)
    assert tl_multiply(e1, e1) == (1, e1)
    a, b = tl_generator(3, 1), tl_generator(3, 2)
    loops1, ab = tl_multiply(a, b)
    loops2, aba = tl_multiply(ab, a)
    assert (loops1 + loops2, aba) == (0, a)
    ident = PlanarMatching.identity(3)
    assert tl_multiply(ident, b) == (0, b)


def test_far_commutation():
    a, c = tl_generator(4, 1), tl_generator(4, 3)
    assert tl_multiply(a, c) == tl_multiply(c, a)


def _random_matching(n, rng):
    _, m = 0, PlanarMatching.identity(n)
    for _ in range(rng.randint(0, 5)):
        _, m = tl_multiply(m, tl_generator(n, rng.randint(1, n - 1)))
    return m


def test_multiplication_associative_with_loops():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(2, 5)
        a, b, c = (_random_matching(n, rng) for _ in range(3))
        l1, ab = tl_multiply(a, b)
        l2, ab_c = tl_multiply(ab, c)
        l3, bc = tl_multiply(b, c)
        l4, a_bc = tl_multiply(a, bc)
        assert (l1 + l2, ab_c) == (l3 + l4, a_bc)


def test_closure_loops():
    assert closure_loop_count(PlanarMatching.identity(2)) == 2
    assert closure_loop_count(tl_generator(2, 1)) == 1
    assert closure_loop_count(tl_generator(3, 1)) == 2


def test_rho_inverse_and_braid_relation():
    ident = TLElement.identity(2)
    assert rho_sigma(2, 1) * rho_sigma(2, 1, inverse=True) == ident
    lhs = rho_sigma(3, 1) * rho_sigma(3, 2) * rho_sigma(3, 1)
    rhs = rho_sigma(3, 2) * rho_sigma(3, 1) * rho_sigma(3, 2)
    assert lhs == rhs


def test_rho_is_homomorphism_on_random_words():
    for seed in range(20):
        b = random_braid(3 + seed % 2, 6, seed)
        assert rho_word(b) * rho_word(b.inverse()) == TLElement.identity(b.strands)


def test_closure_eval():
    assert tl_closure_eval(TLElement.identity(1)) == d
    assert tl_closure_eval(TLElement.identity(2)) == d * d
    assert tl_closure_eval(rho_sigma(2, 1)) == TauLaurent.monomial(2, -1) * d


def test_trace_property():
    for seed in range(20):
        x = rho_word(random_braid(3, 4, seed))
        y = rho_word(random_braid(3, 4, seed + 100))
        assert tl_closure_eval(x * y) == tl_closure_eval(y * x)
