"""
Braid words and Markov moves.

A braid on ``n`` strands is a sequence of nonzero integers; the letter ``i``
is the positive crossing σ_i between strands i and i+1, ``-i`` its inverse.
Letters are read bottom to top.  Text form is whitespace separated, e.g.
``"1 2 -1"``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import MalformedBraid

__all__ = [
    "BraidWord",
    "Permutation",
    "parse_braid",
    "writhe",
    "closure_components",
    "markov_variants",
    "random_braid",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise MalformedBraid(f"strand count must be a positive integer, got {self.strands!r}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not isinstance(letter, int) or letter == 0:
                raise MalformedBraid(f"invalid letter {letter!r}")
            if abs(letter) >= self.strands:
                raise MalformedBraid(
                    f"letter {letter} needs at least {abs(letter) + 1} strands, braid has {self.strands}"
                )

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        n = max(self.strands, other.strands)
        return BraidWord(n, self.letters + other.letters)

    @property
    def n_plus(self) -> int:
        return sum(1 for x in self.letters if x > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for x in self.letters if x < 0)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def conjugate(self, letter: int) -> BraidWord:
        """σ B σ⁻¹ for the generator σ given as a signed letter."""
        return BraidWord(self.strands, (letter,) + self.letters + (-letter,))

    def stabilize(self, sign: int = 1) -> BraidWord:
        """B σ_n^{±1} in B_{n+1}."""
        return BraidWord(self.strands + 1, self.letters + (sign * self.strands,))

    def rotate(self, k: int = 1) -> BraidWord:
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def permutation(self) -> Permutation:
        image = list(range(1, self.strands + 1))
        for letter in self.letters:
            i = abs(letter) - 1
            image[i], image[i + 1] = image[i + 1], image[i]
        return Permutation(tuple(image))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as its image sequence."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation: {self.image}")

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.image) + 1):
            if start in seen:
                continue
            cycle = []
            x = start
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self.image[x - 1]
            out.append(tuple(cycle))
        return out


def parse_braid(text: str, n: int) -> BraidWord:
    letters = []
    for token in text.split():
        try:
            letters.append(int(token))
        except ValueError:
            raise MalformedBraid(f"not an integer: {token!r}") from None
    return BraidWord(n, tuple(letters))


def writhe(b: BraidWord) -> int:
    return b.n_plus - b.n_minus


def closure_components(b: BraidWord) -> int:
    return len(b.permutation().cycles())


def _random_move(b: BraidWord, rng: random.Random) -> BraidWord:
    moves = ["stabilize", "rotate"]
    if b.strands >= 2:
        moves.append("conjugate")
    move = rng.choice(moves)
    if move == "stabilize":
        return b.stabilize(rng.choice((1, -1)))
    if move == "rotate":
        return b.rotate(rng.randrange(max(len(b), 1)))
    letter = rng.randrange(1, b.strands) * rng.choice((1, -1))
    return b.conjugate(letter)


def markov_variants(b: BraidWord, seed: int, count: int, max_moves: int = 3) -> list[BraidWord]:
    """
    ``count`` braids whose closures are isotopic to the closure of ``b``.

    Each variant applies 1..max_moves random moves: conjugation by a
    generator, stabilization by σ_n^{±1}, or cyclic rotation of the letters.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        v = b
        for _ in range(rng.randint(1, max_moves)):
            v = _random_move(v, rng)
        out.append(v)
    return out


def random_braid(n: int, length: int, seed: int) -> BraidWord:
    if n < 2:
        raise ValueError("random braids need at least 2 strands")
    if length < 0:
        raise ValueError("length must be non-negative")
    rng = random.Random(seed)
    alphabet = [s * i for i in range(1, n) for s in (1, -1)]
    return BraidWord(n, tuple(rng.choice(alphabet) for _ in range(length)))


def all_braids(n: int, length: int) -> list[BraidWord]:
    """Every word of exactly ``length`` letters in B_n."""
    alphabet = [s * i for i in range(1, n) for s in (1, -1)]
    return [BraidWord(n, w) for w in itertools.product(alphabet, repeat=length)]
