"""
The e-graded covering complex over Z^π = Z[π]/(π² − 1).

Generators are those of the even complex, additionally graded by a parity
c ∈ Z₂ (𝟙 even, X odd).  Moving a homogeneous factor y past x costs
λ(deg x, deg y) = π^{c_x·c_y}.  A saddle is applied by moving its circles to
the front of the tensor word (keeping their relative order), applying m or
Δ there, and moving the outputs to their places in the target order.

Edge units are ε = (lexicographic sign)·π^{p(edge)}.  The π-exponents are
found by propagation along the cube: tree edges get p = 0, every other edge
is fixed by a face through lower directions, and the faces left over give
linear equations over F₂ that are solved at the end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .braid_words import BraidWord
from .egraded_homology import EGradedComplex, Generator, complex_generators
from .errors import DifferentialNotSquareZero, SignSystemInconsistent
from .resolution_cube import (
    DEFAULT_MAX_CROSSINGS,
    CubeEdge,
    ShiftedCube,
    build_cube,
    faces,
    flip,
    sign_assignment,
)
from .scalar_ring import PI, PiScalar

__all__ = [
    "GDegree",
    "CovFrobeniusSpec",
    "COV_FROBENIUS",
    "PiComplex",
    "cov_edge_map",
    "cov_sign_assignment",
    "build_cov_complex",
    "specialize_pi",
]

ONE, X = 0, 1
_UNIT = PiScalar(1, 0)


@dataclass(frozen=True)
class GDegree:
    """An element of Z × Z₄ × Z₂."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        object.__setattr__(self, "b", self.b % 4)
        object.__setattr__(self, "c", self.c % 2)

    def __add__(self, other: GDegree) -> GDegree:
        return GDegree(self.a + other.a, self.b + other.b, self.c + other.c)


def lam(x: GDegree, y: GDegree) -> PiScalar:
    return PI if x.c * y.c else _UNIT


class CovFrobeniusSpec:
    degrees = {ONE: GDegree(1, -1, 0), X: GDegree(-1, 1, 1)}
    map_degrees = {
        "m": GDegree(-1, 1, 0),
        "delta": GDegree(-1, 1, 1),
        "epsilon": GDegree(1, -1, 1),
        "eta": GDegree(1, -1, 0),
    }

    def __init__(self, pi: PiScalar = PI):
        self.pi = pi

    def m(self, a: int, b: int) -> dict[int, PiScalar]:
        if a == X and b == X:
            return {}
        return {a | b: _UNIT}

    def delta(self, a: int) -> dict[tuple[int, int], PiScalar]:
        if a == ONE:
            return {(ONE, X): self.pi, (X, ONE): _UNIT}
        return {(X, X): _UNIT}

    def epsilon(self, a: int) -> int:
        return 1 if a == X else 0

    def eta(self) -> dict[int, PiScalar]:
        return {ONE: _UNIT}


COV_FROBENIUS = CovFrobeniusSpec()


def _bits(word: int, k: int) -> list[int]:
    return [(word >> (k - 1 - c)) & 1 for c in range(k)]


def _odd_before(bits: list[int], skip: tuple[int, ...], limit: int) -> int:
    return sum(bits[c] for c in range(limit) if c not in skip)


def cov_edge_map(cube: ShiftedCube, e: CubeEdge, word: int) -> dict[int, PiScalar]:
    """Image of a basis word under the covering saddle map of ``e`` (no edge unit)."""
    ks = cube.vertices[e.source].n_circles
    kt = cube.vertices[e.target].n_circles
    src = _bits(word, ks)
    involved_s, involved_t = e.involved_source, e.involved_target

    # move the involved circles to the front
    exponent = sum(src[s] * _odd_before(src, involved_s, s) for s in involved_s)

    tgt_untouched = [0] * kt
    for s, t in e.untouched:
        tgt_untouched[t] = src[s]
    base = 0
    for t in range(kt):
        if tgt_untouched[t]:
            base |= 1 << (kt - 1 - t)

    if e.kind == "merge":
        s1, s2 = involved_s
        local = {(b,): c for b, c in COV_FROBENIUS.m(src[s1], src[s2]).items()}
    else:
        local = COV_FROBENIUS.delta(src[involved_s[0]])

    out: dict[int, PiScalar] = {}
    for outs, c in local.items():
        # move the outputs back to their places in the target order
        back = sum(b * _odd_before(tgt_untouched, involved_t, t) for t, b in zip(involved_t, outs))
        w = base
        for t, b in zip(involved_t, outs):
            w |= b << (kt - 1 - t)
        coeff = c * (PI if (exponent + back) % 2 else _UNIT)
        out[w] = out.get(w, PiScalar()) + coeff
    return {w: c for w, c in out.items() if c}


def _compose(cube: ShiftedCube, first: CubeEdge, second: CubeEdge, word: int) -> dict[int, PiScalar]:
    acc: dict[int, PiScalar] = {}
    for mid, c in cov_edge_map(cube, first, word).items():
        for w, c2 in cov_edge_map(cube, second, mid).items():
            acc[w] = acc.get(w, PiScalar()) + c * c2
    return acc


_CANDIDATES = ((PiScalar(1, 0), 0), (PI, 1))


def face_defect(cube: ShiftedCube, pos: int, j: int, k: int) -> int | None:
    """
    Compare the two unsigned paths around a face: the returned bit u has
    (path via k) = π^u·(path via j); ``None`` when both π^0 and π^1 work.
    """
    e_j, e_k = cube.edge(pos, j), cube.edge(pos, k)
    e_jk = cube.edge(flip(cube, pos, j), k)
    e_kj = cube.edge(flip(cube, pos, k), j)
    possible = [True, True]
    for word in range(1 << cube.vertices[pos].n_circles):
        p1 = _compose(cube, e_j, e_jk, word)
        p2 = _compose(cube, e_k, e_kj, word)
        for unit, bit in _CANDIDATES:
            if not possible[bit]:
                continue
            keys = set(p1) | set(p2)
            if any(p2.get(w, PiScalar()) != unit * p1.get(w, PiScalar()) for w in keys):
                possible[bit] = False
        if not any(possible):
            raise SignSystemInconsistent(f"face at vertex {pos}, crossings {j},{k} is not unit-commutative")
    if all(possible):
        return None
    return 0 if possible[0] else 1


def _solve_f2(equations: list[tuple[int, int]]) -> dict[int, int]:
    """Solve Σ mask-bits = const over F₂; free parameters are set to 0."""
    pivots: dict[int, tuple[int, int]] = {}
    for mask, const in equations:
        for bit, (pmask, pconst) in pivots.items():
            if mask >> bit & 1:
                mask ^= pmask
                const ^= pconst
        if not mask:
            if const:
                raise SignSystemInconsistent("face equations for the π-exponents have no solution")
            continue
        bit = mask.bit_length() - 1
        for other, (pmask, pconst) in list(pivots.items()):
            if pmask >> bit & 1:
                pivots[other] = (pmask ^ mask, pconst ^ const)
        pivots[bit] = (mask, const)
    # fully reduced: each pivot row is pivot bit + free bits, free bits = 0
    return {bit: const for bit, (_mask, const) in pivots.items()}


def cov_sign_assignment(cube: ShiftedCube) -> dict[tuple[int, int], PiScalar]:
    """Edge units ε(edge) ∈ {±1, ±π}, keyed by (source position, crossing)."""
    m = cube.crossings
    defects = {}
    for pos, j, k in faces(cube):
        defects[(pos, j, k)] = face_defect(cube, pos, j, k)

    # affine expressions over F₂: (constant bit, parameter mask)
    expr: dict[tuple[int, int], tuple[int, int]] = {}
    used = set()
    n_params = 0
    for j in range(m):
        bit_j = 1 << (m - 1 - j)
        for pos in range(len(cube.vertices)):
            if pos & bit_j:
                continue
            lower = [k for k in range(j) if pos >> (m - 1 - k) & 1]
            if not lower:
                expr[(pos, j)] = (0, 0)
                continue
            chosen = None
            for k in lower:
                base = pos & ~(1 << (m - 1 - k))
                if defects[(base, k, j)] is not None:
                    chosen = (k, base)
                    break
            if chosen is None:
                expr[(pos, j)] = (0, 1 << n_params)
                n_params += 1
                continue
            k, base = chosen
            used.add((base, k, j))
            u = defects[(base, k, j)]
            c1, m1 = expr[(base, k)]
            c2, m2 = expr[(base, j)]
            c3, m3 = expr[(flip(cube, base, j), k)]
            expr[(pos, j)] = (u ^ c1 ^ c2 ^ c3, m1 ^ m2 ^ m3)

    equations = []
    for (pos, j, k), u in defects.items():
        if u is None or (pos, j, k) in used:
            continue
        c = u
        mask = 0
        for key in ((pos, j), (flip(cube, pos, j), k), (pos, k), (flip(cube, pos, k), j)):
            ce, me = expr[key]
            c ^= ce
            mask ^= me
        if mask or c:
            equations.append((mask, c))
    params = _solve_f2(equations)

    units = {}
    for (pos, j), (c, mask) in expr.items():
        p = c
        while mask:
            low = mask & -mask
            p ^= params.get(low.bit_length() - 1, 0)
            mask ^= low
        lex = cube.edge(pos, j).sign
        units[(pos, j)] = (PI if p else _UNIT) * lex

    if not _faces_anticommute(cube, units):
        raise SignSystemInconsistent(f"edge units fail a face check for braid {cube.braid}")
    return units


def _faces_anticommute(cube: ShiftedCube, units: Mapping[tuple[int, int], PiScalar]) -> bool:
    for pos, j, k in faces(cube):
        e_j, e_k = cube.edge(pos, j), cube.edge(pos, k)
        e_jk = cube.edge(flip(cube, pos, j), k)
        e_kj = cube.edge(flip(cube, pos, k), j)
        u1 = units[(pos, j)] * units[(e_j.target, k)]
        u2 = units[(pos, k)] * units[(e_k.target, j)]
        for word in range(1 << cube.vertices[pos].n_circles):
            p1 = _compose(cube, e_j, e_jk, word)
            p2 = _compose(cube, e_k, e_kj, word)
            for w in set(p1) | set(p2):
                if u1 * p1.get(w, PiScalar()) + u2 * p2.get(w, PiScalar()):
                    return False
    return True


class PiComplex:
    """Free complex over Z^π; ``differential[i][col]`` is ``{row: PiScalar}``."""

    def __init__(
        self,
        generators: Mapping[int, list[Generator]],
        differential: Mapping[int, list[dict[int, PiScalar]]],
    ):
        self.generators = dict(generators)
        self.differential = dict(differential)

    @property
    def indices(self) -> list[int]:
        return sorted(self.generators)

    def degree(self, i: int, col: int) -> GDegree:
        g = self.generators[i][col]
        return GDegree(g.q, g.tau, bin(g.word).count("1"))

    def square_zero(self) -> bool:
        for i in self.indices:
            d1 = self.differential.get(i, ())
            d2 = self.differential.get(i + 1, ())
            for col in d1:
                acc: dict[int, PiScalar] = {}
                for mid, c in col.items():
                    for row, c2 in d2[mid].items():
                        acc[row] = acc.get(row, PiScalar()) + c * c2
                if any(acc.values()):
                    return False
        return True

    def has_pi_entries(self) -> bool:
        return any(c.b for cols in self.differential.values() for col in cols for c in col.values())

    def to_json(self) -> str:
        obj = {
            "indices": self.indices,
            "generators": {
                str(i): [{"q": g.q, "tau": g.tau, "parity": bin(g.word).count("1") % 2} for g in gens]
                for i, gens in sorted(self.generators.items())
            },
            "differential": {
                str(i): [
                    {"col": col, "row": row, "a": c.a, "b": c.b}
                    for col, entries in enumerate(cols)
                    for row, c in sorted(entries.items())
                ]
                for i, cols in sorted(self.differential.items())
            },
        }
        return json.dumps(obj, separators=(",", ":"))


def build_cov_complex(b: BraidWord, max_crossings: int = DEFAULT_MAX_CROSSINGS, check: bool = True) -> PiComplex:
    cube = sign_assignment(build_cube(b, max_crossings))
    units = cov_sign_assignment(cube)
    generators, offset = complex_generators(cube)
    differential: dict[int, list[dict[int, PiScalar]]] = {}
    for i, gens in generators.items():
        cols = []
        for g in gens:
            entries: dict[int, PiScalar] = {}
            for e in cube.edges_from(g.vertex):
                unit = units[(e.source, e.crossing)]
                base = offset[e.target]
                for word, c in cov_edge_map(cube, e, g.word).items():
                    row = base + word
                    entries[row] = entries.get(row, PiScalar()) + unit * c
            cols.append({r: c for r, c in entries.items() if c})
        differential[i] = cols
    out = PiComplex(generators, differential)
    if check and not out.square_zero():
        raise DifferentialNotSquareZero(f"covering d∘d ≠ 0 for braid {b}")
    return out


def specialize_pi(c: PiComplex, s: int) -> EGradedComplex:
    if s not in (1, -1):
        raise ValueError(f"π can only be specialized to ±1, got {s}")
    differential = {
        i: [{row: v for row, x in col.items() if (v := x.specialize(s))} for col in cols]
        for i, cols in c.differential.items()
    }
    return EGradedComplex(c.generators, differential)
