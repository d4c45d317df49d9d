import pytest

from ebraid.braid_words import BraidWord, markov_variants, parse_braid, random_braid
from ebraid.errors import LengthMismatch, TooManyCrossings
from ebraid.scalar_ring import GaussLaurent, TauLaurent, specialize_tau
from ebraid.skein_eval import (
    bracket,
    bracket_by_states,
    bracket_via_tl,
    jhat,
    resolve_state,
    state_weight,
)

from oracles import jhat_monomials

m = TauLaurent.monomial
d = TauLaurent.d()
trefoil = parse_braid("1 1 1", 2)


def test_resolve_state():
    assert resolve_state(trefoil, (0, 0, 0)).circles == 2
    assert resolve_state(trefoil, (1, 0, 0)).circles == 1
    assert resolve_state(trefoil, (1, 1, 1)).circles == 3
    with pytest.raises(LengthMismatch):
        resolve_state(trefoil, (0, 1))


def test_state_weight():
    assert state_weight(trefoil, (0, 0, 0)) == m(3, 0)
    assert state_weight(trefoil, (1, 1, 1)) == m(0, 3, -1)
    assert state_weight(parse_braid("-1", 2), (1,)) == m(3, 0)


def test_bracket_examples():
    assert bracket(BraidWord(1)) == d
    assert bracket(parse_braid("1", 2)) == m(2, -1) * d
    assert bracket(trefoil) == m(1, 6, -1) + m(1, 2) + m(3, 0) + m(1, -2)
    assert bracket_via_tl(parse_braid("1 -1", 2)) == d * d


def test_jhat_examples():
    assert jhat(BraidWord(1)) == m(3, 1) + m(1, -1)
    hopf = jhat(parse_braid("1 1", 2))
    assert hopf == m(2, 6) + m(0, 4) + m(2, 2) + m(0, 0)
    assert specialize_tau(hopf, 0) == GaussLaurent.from_integer_terms({6: 1, 4: 1, 2: 1, 0: 1})
    assert jhat(trefoil) == m(3, 9, -1) + m(3, 5) + m(1, 3) + m(3, 1)
    assert jhat(trefoil, method="tl") == jhat(trefoil)
    with pytest.raises(ValueError):
        jhat(trefoil, method="nope")


def test_against_independent_oracle():
    for seed in range(25):
        b = random_braid(2 + seed % 3, seed % 7, seed)
        mons = {(q, a): c for q, a, c in jhat(b).monomials()}
        assert mons == jhat_monomials(b.strands, b.letters), str(b)


def test_routes_agree():
    for seed in range(40):
        b = random_braid(2 + seed % 3, seed % 8, seed)
        assert bracket(b) == bracket_via_tl(b) == bracket_by_states(b)


def test_markov_moves():
    for seed in range(30):
        b = random_braid(2 + seed % 3, 5, seed)
        for v in markov_variants(b, seed, 3):
            assert jhat(v) == jhat(b)
    a, b = random_braid(3, 4, 1), random_braid(3, 4, 2)
    assert jhat(a * b) == jhat(b * a)


def test_stabilization_scalar_identity():
    # (τ²q)·(τd − q) = 1, and its negative-crossing counterpart
    assert m(2, 1) * (m(1, 0) * d - m(0, 1)) == TauLaurent.one()
    assert m(2, -1) * (m(3, 0) * d - m(0, -1)) == TauLaurent.one()


def test_monomials_balanced():
    for seed in range(30):
        b = random_braid(2 + seed % 3, seed % 9, seed)
        assert all((q + a) % 4 == 0 for q, a, _ in jhat(b).monomials())


def test_state_cap():
    with pytest.raises(TooManyCrossings):
        bracket(parse_braid("1 " * 5, 2), max_states=16)
