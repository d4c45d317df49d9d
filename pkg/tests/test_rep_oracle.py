import pytest

from ebraid.braid_words import BraidWord, all_braids, parse_braid, random_braid
from ebraid.errors import PositionOutOfRange, TooManyStrands
from ebraid.rep_oracle import (
    ORIENTED_MAPS,
    apply_local,
    e_prime,
    evaluate_closed_braid,
    jhat_oracle,
    local_map,
    local_matrix,
    verify_crossing_identity,
)
from ebraid.scalar_ring import TauLaurent
from ebraid.skein_eval import bracket, jhat

m = TauLaurent.monomial
Z = TauLaurent.zero()
one = TauLaurent.one()
P, M = 0, 1  # v₊, v₋


def test_matrix_entries():
    pos = local_matrix("crossing_pos")
    assert pos[2][1] == m(3, 1)
    assert pos[2][2] == m(1, 0) - m(3, 2)
    assert local_matrix("cap_n") == ((Z, m(3, 0, -1), m(3, 1), Z),)
    assert [row[0] for row in local_matrix("cup_u")] == [Z, m(2, -1, -1), one, Z]
    with pytest.raises(ValueError):
        local_map("nope")


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Z) for j in range(len(b[0]))] for i in range(len(a))]


def test_crossings_are_inverse():
    prod = _matmul(local_matrix("crossing_pos"), local_matrix("crossing_neg"))
    assert prod == [[one if i == j else Z for j in range(4)] for i in range(4)]


def test_e_prime_and_crossing_identity():
    e = e_prime()
    assert e[1] == (Z, m(1, -1), m(1, 0, -1), Z)
    assert e[2] == (Z, m(3, 0, -1), m(3, 1), Z)
    assert e[0] == e[3] == (Z, Z, Z, Z)
    assert verify_crossing_identity()


def test_cap_and_cup_application():
    cap, cup = local_map("cap_n"), local_map("cup_u")
    assert apply_local(cap, 1, {(P, M): one}) == {(): m(3, 0, -1)}
    assert apply_local(cap, 2, {(M, P, P): one}) == {}
    assert apply_local(cup, 1, {(): one}) == {(P, M): m(2, -1, -1), (M, P): one}
    with pytest.raises(PositionOutOfRange):
        apply_local(cap, 2, {(P, M): one})


def test_circle_is_d():
    cap, cup = local_map("cap_n"), local_map("cup_u")
    assert apply_local(cap, 1, apply_local(cup, 1, {(): one})) == {(): TauLaurent.d()}


@pytest.mark.parametrize("nested", [True, False])
def test_two_circles(nested):
    cap, cup = local_map("cap_n"), local_map("cup_u")
    v = apply_local(cup, 1, {(): one})
    if nested:
        v = apply_local(cap, 2, apply_local(cup, 2, v))
    else:
        v = apply_local(cap, 3, apply_local(cup, 3, v))
    v = apply_local(cap, 1, v)
    assert v == {(): TauLaurent.d() * TauLaurent.d()}


def test_zigzags():
    cap, cup = local_map("cap_n"), local_map("cup_u")
    for x in (P, M):
        # (n ⊗ id)(id ⊗ u)
        left = apply_local(cap, 1, apply_local(cup, 2, {(x,): one}))
        assert left == {(x,): m(3, 0, -1)}
        # (id ⊗ n)(u ⊗ id)
        right = apply_local(cap, 2, apply_local(cup, 1, {(x,): one}))
        assert right == {(x,): m(1, 0, -1)}


def test_oriented_constants():
    assert ORIENTED_MAPS["coev"] == ((m(3, 1),), (Z,), (Z,), (m(1, -1),))
    assert ORIENTED_MAPS["qtr"] == ((m(1, -1), Z, Z, m(3, 1)),)
    assert ORIENTED_MAPS["ev"] == ((one, Z, Z, one),)
    assert ORIENTED_MAPS["coqtr"] == ((one,), (Z,), (Z,), (one,))
    # either orientation of a closed circle evaluates to d
    def pair(row, col):
        return sum((row[0][k] * col[k][0] for k in range(4)), Z)

    assert pair(ORIENTED_MAPS["ev"], ORIENTED_MAPS["coev"]) == TauLaurent.d()
    assert pair(ORIENTED_MAPS["qtr"], ORIENTED_MAPS["coqtr"]) == TauLaurent.d()


def test_closed_braid_examples():
    assert evaluate_closed_braid(BraidWord(1)) == TauLaurent.d()
    assert evaluate_closed_braid(parse_braid("1", 2)) == m(2, -1) * TauLaurent.d()
    assert jhat_oracle(parse_braid("1 1", 2)) == m(2, 6) + m(0, 4) + m(2, 2) + m(0, 0)
    assert jhat_oracle(parse_braid("1 1 1", 2)) == jhat(parse_braid("1 1 1", 2))


def test_agrees_with_bracket_exhaustively_small():
    for n in (2, 3):
        for length in range(4):
            for b in all_braids(n, length):
                assert evaluate_closed_braid(b) == bracket(b)


def test_agrees_with_bracket_random_and_both_slicings():
    for seed in range(60):
        b = random_braid(2 + seed % 3, seed % 9, seed)
        value = bracket(b)
        assert evaluate_closed_braid(b, "right") == value
        assert evaluate_closed_braid(b, "left") == value


def test_factor_cap():
    with pytest.raises(TooManyStrands):
        evaluate_closed_braid(BraidWord(9))
