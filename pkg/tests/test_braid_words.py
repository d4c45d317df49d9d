import pytest
from hypothesis import given
from hypothesis import strategies as st

from ebraid.braid_words import (
    BraidWord,
    all_braids,
    closure_components,
    markov_variants,
    parse_braid,
    random_braid,
    writhe,
)
from ebraid.errors import MalformedBraid


def test_parse():
    assert parse_braid("1 1 1", 2) == BraidWord(2, (1, 1, 1))
    assert parse_braid("", 3) == BraidWord(3, ())
    assert parse_braid("  -1\t2 ", 3).letters == (-1, 2)


@pytest.mark.parametrize("text,n", [("2 -1", 2), ("0", 2), ("1 x", 2), ("1.5", 3), ("1", 1)])
def test_parse_rejects(text, n):
    with pytest.raises(MalformedBraid):
        parse_braid(text, n)


def test_zero_strands_rejected():
    with pytest.raises(MalformedBraid):
        BraidWord(0)


def test_writhe():
    assert writhe(parse_braid("1 1 1", 2)) == 3
    assert writhe(parse_braid("1 -1", 2)) == 0
    assert writhe(parse_braid("-1 -2", 3)) == -2


def test_closure_components():
    assert closure_components(parse_braid("1 1 1", 2)) == 1
    assert closure_components(parse_braid("1 1", 2)) == 2
    assert closure_components(parse_braid("", 3)) == 3
    assert closure_components(parse_braid("1 -2 1 -2", 3)) == 1


def test_moves():
    b = parse_braid("1 2 -1", 3)
    assert b.rotate(1) == parse_braid("2 -1 1", 3)
    assert b.conjugate(1) == parse_braid("1 1 2 -1 -1", 3)
    assert parse_braid("1 1 1", 2).stabilize(1) == parse_braid("1 1 1 2", 3)
    assert b.inverse() == parse_braid("1 -2 -1", 3)


def test_markov_variants_are_deterministic():
    b = parse_braid("1 1 1", 2)
    assert markov_variants(b, 3, 5) == markov_variants(b, 3, 5)
    with pytest.raises(ValueError):
        markov_variants(b, 3, 0)


words = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.sampled_from([s * i for i in range(1, n) for s in (1, -1)]), max_size=8).map(
        lambda letters: BraidWord(n, tuple(letters))
    )
)


@given(words, st.integers(0, 1000))
def test_markov_variants_preserve_components(b, seed):
    for v in markov_variants(b, seed, 3):
        assert closure_components(v) == closure_components(b)
        # stabilizations change writhe by ±1 and add one strand each
        assert abs(writhe(v) - writhe(b)) <= v.strands - b.strands


@given(words)
def test_render_parse_round_trip(b):
    assert parse_braid(str(b), b.strands) == b


def test_random_braid():
    assert random_braid(2, 0, 5) == BraidWord(2)
    assert random_braid(3, 5, 42) == random_braid(3, 5, 42)
    assert len(random_braid(3, 5, 42)) == 5
    assert random_braid(2, 4, 7) == random_braid(2, 4, 7)


def test_all_braids_count():
    assert len(all_braids(3, 2)) == 16
