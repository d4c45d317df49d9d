"""
Diagrammatic Temperley–Lieb algebra TL_n(d) with d = τ³q + τq⁻¹.

A ``PlanarMatching`` on n strands pairs the 2n boundary points: bottom
points are 0..n-1 and top points n..2n-1, both numbered left to right.
Products stack the left factor underneath the right one, so the product of
the images of a braid word, letter by letter, reads the braid bottom to top.

Closures are never normalized by the Markov trace: d is not invertible over
Z[τ][q^±], so the closure of a diagram is evaluated as d^{loops}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ._unionfind import UnionFind
from .braid_words import BraidWord
from .errors import IndexOutOfRange
from .scalar_ring import TauLaurent

__all__ = [
    "PlanarMatching",
    "TLElement",
    "tl_generator",
    "tl_multiply",
    "closure_loop_count",
    "rho_sigma",
    "rho_word",
    "tl_closure_eval",
]


def _is_planar(n: int, pairing: tuple[int, ...]) -> bool:
    # walk the boundary circle: bottom left-to-right, then top right-to-left
    order = list(range(n)) + list(range(2 * n - 1, n - 1, -1))
    position = {p: k for k, p in enumerate(order)}
    stack = []
    for p in order:
        partner = pairing[p]
        if position[partner] > position[p]:
            stack.append(p)
        elif not stack or stack.pop() != partner:
            return False
    return not stack


@dataclass(frozen=True)
class PlanarMatching:
    n: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        pairing = tuple(self.pairing)
        object.__setattr__(self, "pairing", pairing)
        if len(pairing) != 2 * self.n:
            raise ValueError(f"pairing must have {2 * self.n} entries")
        for p, r in enumerate(pairing):
            if not 0 <= r < 2 * self.n or r == p or pairing[r] != p:
                raise ValueError(f"not a perfect matching: {pairing}")
        if not _is_planar(self.n, pairing):
            raise ValueError(f"matching has crossing arcs: {pairing}")

    @classmethod
    def identity(cls, n: int) -> PlanarMatching:
        return cls(n, tuple(range(n, 2 * n)) + tuple(range(n)))

    def is_identity(self) -> bool:
        return all(self.pairing[i] == self.n + i for i in range(self.n))

    def __str__(self) -> str:
        arcs = sorted({tuple(sorted((p, r))) for p, r in enumerate(self.pairing)})

        def label(p: int) -> str:
            return f"b{p + 1}" if p < self.n else f"t{p - self.n + 1}"

        return " ".join(f"{label(a)}-{label(b)}" for a, b in arcs)


def tl_generator(n: int, i: int) -> PlanarMatching:
    """E_i: cup–cap on strands i, i+1 (1-indexed), every other strand straight."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"E_{i} does not exist in TL_{n}")
    pairing = list(PlanarMatching.identity(n).pairing)
    b, t = i - 1, n + i - 1
    pairing[b], pairing[b + 1] = b + 1, b
    pairing[t], pairing[t + 1] = t + 1, t
    return PlanarMatching(n, tuple(pairing))


def tl_multiply(a: PlanarMatching, b: PlanarMatching) -> tuple[int, PlanarMatching]:
    """Stack ``a`` under ``b``; return (closed loops removed, residual matching)."""
    if a.n != b.n:
        raise ValueError("cannot multiply diagrams on different strand counts")
    n = a.n
    uf = UnionFind(4 * n)
    for p, r in enumerate(a.pairing):
        uf.union(p, r)
    for p, r in enumerate(b.pairing):
        uf.union(2 * n + p, 2 * n + r)
    for i in range(n):
        uf.union(n + i, 2 * n + i)
    # outer points of the stack, numbered as in the result
    outer = {i: i for i in range(n)}
    outer.update({3 * n + i: n + i for i in range(n)})
    ends: dict[int, list[int]] = {}
    roots = set()
    for p in range(4 * n):
        root = uf.find(p)
        roots.add(root)
        if p in outer:
            ends.setdefault(root, []).append(outer[p])
    pairing = [0] * (2 * n)
    for x, y in ends.values():
        pairing[x], pairing[y] = y, x
    return len(roots) - len(ends), PlanarMatching(n, tuple(pairing))


def closure_loop_count(a: PlanarMatching) -> int:
    """Number of circles in the trace closure of ``a``."""
    uf = UnionFind(2 * a.n)
    for p, r in enumerate(a.pairing):
        uf.union(p, r)
    for i in range(a.n):
        uf.union(i, a.n + i)
    return len({uf.find(p) for p in range(2 * a.n)})


class TLElement:
    """Formal TauLaurent-linear combination of planar matchings."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[PlanarMatching, TauLaurent] | None = None):
        self.n = n
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, m: PlanarMatching, coeff: TauLaurent | int = 1) -> TLElement:
        return cls(m.n, {m: TauLaurent.one() * coeff})

    @classmethod
    def identity(cls, n: int) -> TLElement:
        return cls.basis(PlanarMatching.identity(n))

    def __add__(self, other: TLElement) -> TLElement:
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, TauLaurent.zero()) + c
        return TLElement(self.n, terms)

    def __neg__(self) -> TLElement:
        return TLElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def scale(self, c: TauLaurent | int) -> TLElement:
        return TLElement(self.n, {m: x * c for m, x in self.terms.items()})

    def __mul__(self, other: TLElement) -> TLElement:
        d = TauLaurent.d()
        terms: dict[PlanarMatching, TauLaurent] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                loops, m = tl_multiply(ma, mb)
                c = ca * cb * d**loops
                terms[m] = terms.get(m, TauLaurent.zero()) + c
        return TLElement(self.n, terms)

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        inner = ", ".join(f"[{m}]: {c}" for m, c in self.terms.items())
        return f"TLElement({self.n}, {{{inner}}})"


def rho_sigma(n: int, i: int, inverse: bool = False) -> TLElement:
    """τ·Id − q·E_i for σ_i, τ³·Id − q⁻¹·E_i for σ_i⁻¹."""
    e = tl_generator(n, i)
    if inverse:
        id_coeff, e_coeff = TauLaurent.monomial(3, 0), TauLaurent.monomial(0, -1, -1)
    else:
        id_coeff, e_coeff = TauLaurent.monomial(1, 0), TauLaurent.monomial(0, 1, -1)
    return TLElement(n, {PlanarMatching.identity(n): id_coeff, e: e_coeff})


def rho_word(b: BraidWord) -> TLElement:
    x = TLElement.identity(b.strands)
    for letter in b.letters:
        x = x * rho_sigma(b.strands, abs(letter), inverse=letter < 0)
    return x


def tl_closure_eval(x: TLElement) -> TauLaurent:
    d = TauLaurent.d()
    total = TauLaurent.zero()
    for m, c in x.terms.items():
        total = total + c * d ** closure_loop_count(m)
    return total
