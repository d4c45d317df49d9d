"""
The bracket ⟨B⟩ of a braid closure and the normalized invariant Ĵ.

Crossing rules (letters read bottom to top)::

    positive σ_i:  0-resolution = identity, weight τ;   1-resolution = E_i, weight −q
    negative σ_i⁻¹: 0-resolution = E_i,  weight −q⁻¹; 1-resolution = identity, weight τ³

Every closed loop of a fully resolved, closed diagram contributes a factor
d = τ³q + τq⁻¹, and Ĵ(B) = (τ²q)^{wr(B)} ⟨B⟩.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .braid_words import BraidWord, writhe
from .errors import LengthMismatch, TooManyCrossings
from .scalar_ring import TauLaurent
from .temperley_lieb import (
    PlanarMatching,
    closure_loop_count,
    rho_word,
    tl_closure_eval,
    tl_generator,
    tl_multiply,
)

__all__ = [
    "State",
    "ResolutionOutcome",
    "resolve_state",
    "state_weight",
    "bracket",
    "bracket_via_tl",
    "jhat",
    "DEFAULT_MAX_STATES",
]

State = tuple[int, ...]

DEFAULT_MAX_STATES = 2**24

# (sign, τ-exponent, q-exponent) per (crossing positive?, resolution bit)
_WEIGHTS = {
    (True, 0): (1, 1, 0),
    (True, 1): (-1, 0, 1),
    (False, 0): (-1, 0, -1),
    (False, 1): (1, 3, 0),
}


@dataclass(frozen=True)
class ResolutionOutcome:
    circles: int
    residual: PlanarMatching


def _is_cup_cap(letter: int, bit: int) -> bool:
    return (letter > 0) == (bit == 1)


def _check_state(b: BraidWord, z: Sequence[int]) -> None:
    if len(z) != len(b.letters):
        raise LengthMismatch(f"state has {len(z)} bits, braid has {len(b.letters)} crossings")


def resolve_state(b: BraidWord, z: Sequence[int]) -> ResolutionOutcome:
    _check_state(b, z)
    n = b.strands
    m = PlanarMatching.identity(n)
    loops = 0
    for letter, bit in zip(b.letters, z):
        if _is_cup_cap(letter, bit):
            k, m = tl_multiply(m, tl_generator(n, abs(letter)))
            loops += k
    return ResolutionOutcome(loops + closure_loop_count(m), m)


def state_weight(b: BraidWord, z: Sequence[int]) -> TauLaurent:
    _check_state(b, z)
    sign, a, e = 1, 0, 0
    for letter, bit in zip(b.letters, z):
        s, da, de = _WEIGHTS[(letter > 0, bit)]
        sign, a, e = sign * s, a + da, e + de
    return TauLaurent.monomial(a, e, sign)


def _check_size(b: BraidWord, max_states: int) -> None:
    if 2 ** len(b.letters) > max_states:
        raise TooManyCrossings(f"{len(b.letters)} crossings exceed the cap of {max_states} states")


def bracket(b: BraidWord, max_states: int = DEFAULT_MAX_STATES) -> TauLaurent:
    """State sum over all 2^m resolutions."""
    _check_size(b, max_states)
    n = b.strands
    letters = b.letters
    identity = PlanarMatching.identity(n)
    generators = {i: tl_generator(n, i) for i in range(1, n)}
    tally: Counter[tuple[int, int, int]] = Counter()

    # depth-first over states so each prefix product is computed once
    stack = [(0, identity, 0, 1, 0, 0)]
    while stack:
        j, m, loops, sign, a, e = stack.pop()
        if j == len(letters):
            tally[(a % 4, e, loops + closure_loop_count(m))] += sign
            continue
        letter = letters[j]
        for bit in (0, 1):
            s, da, de = _WEIGHTS[(letter > 0, bit)]
            if _is_cup_cap(letter, bit):
                k, m2 = tl_multiply(m, generators[abs(letter)])
                stack.append((j + 1, m2, loops + k, sign * s, a + da, e + de))
            else:
                stack.append((j + 1, m, loops, sign * s, a + da, e + de))

    d = TauLaurent.d()
    powers: dict[int, TauLaurent] = {}
    total = TauLaurent.zero()
    for (a, e, k), c in tally.items():
        if not c:
            continue
        if k not in powers:
            powers[k] = d**k
        total = total + powers[k].shift(a, e) * c
    return total


def bracket_by_states(b: BraidWord, max_states: int = DEFAULT_MAX_STATES) -> TauLaurent:
    """Literal Σ_z weight(z)·d^{circles(z)}; slow reference for ``bracket``."""
    _check_size(b, max_states)
    d = TauLaurent.d()
    total = TauLaurent.zero()
    for z in itertools.product((0, 1), repeat=len(b.letters)):
        total = total + state_weight(b, z) * d ** resolve_state(b, z).circles
    return total


def bracket_via_tl(b: BraidWord) -> TauLaurent:
    return tl_closure_eval(rho_word(b))


def jhat(b: BraidWord, method: str = "statesum", max_states: int = DEFAULT_MAX_STATES) -> TauLaurent:
    if method == "statesum":
        value = bracket(b, max_states)
    elif method == "tl":
        value = bracket_via_tl(b)
    else:
        raise ValueError(f"unknown method {method!r}")
    return normalize(value, writhe(b))


def normalize(bracket_value: TauLaurent, wr: int) -> TauLaurent:
    """(τ²q)^{wr}·⟨B⟩; τ²q is a unit so negative writhe is fine."""
    return bracket_value.shift(2 * wr, wr)
