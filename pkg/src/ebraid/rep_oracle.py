"""
Braid closures evaluated through explicit maps on tensor powers of V = span{v₊, v₋}.

Basis vectors of V^{⊗k} are words over {0, 1} (0 = v₊ even, 1 = v₋ odd).
Two-factor bases are ordered v₊v₊, v₊v₋, v₋v₊, v₋v₋.  The crossing maps are
the renormalized R-matrices τR and τ³R⁻¹; the cap ``n`` and cup ``u`` are odd.
Applying an odd map after a prefix of tensor factors multiplies by
π^{parity of the prefix}, π = τ².

``evaluate_closed_braid`` slices the trace closure into rows of cups,
crossings and caps and returns the resulting scalar, which must agree with
the skein bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .braid_words import BraidWord, writhe
from .errors import PositionOutOfRange, TooManyStrands
from .scalar_ring import TauLaurent
from .skein_eval import normalize

__all__ = [
    "BasisVector",
    "TensorVector",
    "LocalMap",
    "local_matrix",
    "local_map",
    "apply_local",
    "verify_crossing_identity",
    "evaluate_closed_braid",
    "jhat_oracle",
    "ORIENTED_MAPS",
]

BasisVector = tuple[int, ...]
TensorVector = dict[BasisVector, TauLaurent]

_m = TauLaurent.monomial
_0 = TauLaurent.zero()

# entries [row][col]; columns index inputs, rows outputs
_CROSSING_POS = (
    (_m(1, 0), _0, _0, _0),
    (_0, _0, _m(1, 1), _0),
    (_0, _m(3, 1), _m(1, 0) - _m(3, 2), _0),
    (_0, _0, _0, _m(1, 0)),
)
_CROSSING_NEG = (
    (_m(3, 0), _0, _0, _0),
    (_0, _m(3, 0) - _m(1, -2), _m(1, -1), _0),
    (_0, _m(3, -1), _0, _0),
    (_0, _0, _0, _m(3, 0)),
)
_CAP_N = ((_0, _m(3, 0, -1), _m(3, 1), _0),)
_CUP_U = ((_0,), (_m(2, -1, -1),), (_m(0, 0),), (_0,))

# The oriented (red) maps after renormalization by τ; stored for reference
# and unit tests, never used by the closure evaluator.
ORIENTED_MAPS = {
    "coev": ((_m(3, 1),), (_0,), (_0,), (_m(1, -1),)),
    "coqtr": ((_m(0, 0),), (_0,), (_0,), (_m(0, 0),)),
    "qtr": ((_m(1, -1), _0, _0, _m(3, 1)),),
    "ev": ((_m(0, 0), _0, _0, _m(0, 0)),),
}


@dataclass(frozen=True)
class LocalMap:
    kind: str
    arity_in: int
    arity_out: int
    parity: int
    matrix: tuple[tuple[TauLaurent, ...], ...]


_LOCAL_MAPS = {
    "crossing_pos": LocalMap("crossing_pos", 2, 2, 0, _CROSSING_POS),
    "crossing_neg": LocalMap("crossing_neg", 2, 2, 0, _CROSSING_NEG),
    "cap_n": LocalMap("cap_n", 2, 0, 1, _CAP_N),
    "cup_u": LocalMap("cup_u", 0, 2, 1, _CUP_U),
}


def local_map(kind: str) -> LocalMap:
    try:
        return _LOCAL_MAPS[kind]
    except KeyError:
        raise ValueError(f"unknown local map {kind!r}") from None


def local_matrix(kind: str) -> tuple[tuple[TauLaurent, ...], ...]:
    return local_map(kind).matrix


def _index(word: BasisVector) -> int:
    out = 0
    for bit in word:
        out = 2 * out + bit
    return out


def _word(index: int, length: int) -> BasisVector:
    return tuple((index >> (length - 1 - k)) & 1 for k in range(length))


def apply_local(f: LocalMap, position: int, v: Mapping[BasisVector, TauLaurent]) -> TensorVector:
    """
    Apply ``f`` to the factors starting at 1-indexed ``position``.

    For maps with no input (cups) the new factors are inserted so that they
    occupy positions ``position`` and ``position + 1``.
    """
    out: TensorVector = {}
    for word, coeff in v.items():
        start = position - 1
        if start < 0 or start + f.arity_in > len(word):
            raise PositionOutOfRange(f"{f.kind} at position {position} does not fit a word of length {len(word)}")
        prefix, block, suffix = word[:start], word[start : start + f.arity_in], word[start + f.arity_in :]
        twist = 2 * (f.parity * sum(prefix) % 2)
        col = _index(block)
        for row in range(2**f.arity_out):
            entry = f.matrix[row][col]
            if not entry:
                continue
            new = prefix + _word(row, f.arity_out) + suffix
            term = (coeff * entry).shift(twist, 0)
            acc = out.get(new)
            total = term if acc is None else acc + term
            if total:
                out[new] = total
            else:
                out.pop(new, None)
    return out


def _matmul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(inner)), TauLaurent.zero()) for j in range(cols))
        for i in range(rows)
    )


def e_prime() -> tuple[tuple[TauLaurent, ...], ...]:
    """E′ = u∘n as a 4×4 matrix."""
    return _matmul(_CUP_U, _CAP_N)


def verify_crossing_identity() -> bool:
    """Check τ·Id − q·E′ and τ³·Id − q⁻¹·E′ against the crossing matrices."""
    e = e_prime()
    for matrix, id_coeff, e_coeff in ((_CROSSING_POS, _m(1, 0), _m(0, 1)), (_CROSSING_NEG, _m(3, 0), _m(0, -1))):
        for i in range(4):
            for j in range(4):
                expected = (id_coeff if i == j else _0) - e_coeff * e[i][j]
                if matrix[i][j] != expected:
                    return False
    return True


DEFAULT_MAX_FACTORS = 16


def evaluate_closed_braid(b: BraidWord, closure: str = "right", max_factors: int = DEFAULT_MAX_FACTORS) -> TauLaurent:
    """
    Scalar value of the closed braid.

    ``closure="right"`` runs the closing arcs to the right of the braid,
    ``"left"`` to the left; both are valid slicings of the same link.
    """
    n = b.strands
    if 2 * n > max_factors:
        raise TooManyStrands(f"{n} strands need {2 * n} tensor factors, cap is {max_factors}")
    if closure not in ("right", "left"):
        raise ValueError(f"unknown closure side {closure!r}")
    cup, cap = _LOCAL_MAPS["cup_u"], _LOCAL_MAPS["cap_n"]
    v: TensorVector = {(): TauLaurent.one()}
    # nested cups, outermost first; cup k is inserted in the middle of the word
    for k in range(n):
        v = apply_local(cup, k + 1, v)
    offset = 0 if closure == "right" else n
    for letter in b.letters:
        f = _LOCAL_MAPS["crossing_pos" if letter > 0 else "crossing_neg"]
        v = apply_local(f, offset + abs(letter), v)
    for k in range(n, 0, -1):
        v = apply_local(cap, k, v)
    return v.get((), TauLaurent.zero())


def jhat_oracle(b: BraidWord, closure: str = "right") -> TauLaurent:
    return normalize(evaluate_closed_braid(b, closure), writhe(b))
