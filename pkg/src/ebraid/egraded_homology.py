"""
The e-graded Khovanov complex of a braid closure and its integral homology.

Each vertex of the cube carries A^{⊗k}, A = Z[X]/(X²) with basis 𝟙, X, one
factor per circle in canonical order.  A basis word is stored as an integer
whose bit ``k - 1 - c`` is set when circle c carries X, so numeric order is
the lexicographic order with the first circle most significant.

Degrees: 𝟙 has (q, τ) = (1, −1), X has (−1, 1); a vertex at height r adds
(r − n₋, n₊ − r) and the whole complex is shifted by (wr, 2wr), with τ
read mod 4.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import DifferentialNotSquareZero
from .linalg import invariant_factors
from .resolution_cube import CubeEdge, ShiftedCube, faces, flip
from .scalar_ring import TauLaurent

__all__ = [
    "FrobeniusSpec",
    "FROBENIUS",
    "Generator",
    "EGradedComplex",
    "HomologyGroup",
    "HomologyTable",
    "word_degree",
    "even_edge_map",
    "tqft_complex",
    "check_faces",
    "homology",
    "homology_mod2",
    "graded_euler",
    "forget_tau",
]

ONE, X = 0, 1


@dataclass(frozen=True)
class FrobeniusSpec:
    """Structure constants of A = Z[X]/(X²) as lookup tables."""

    degrees: Mapping[int, tuple[int, int]] = field(default_factory=lambda: {ONE: (1, -1), X: (-1, 1)})

    def m(self, a: int, b: int) -> dict[int, int]:
        if a == X and b == X:
            return {}
        return {a | b: 1}

    def delta(self, a: int) -> dict[tuple[int, int], int]:
        if a == ONE:
            return {(ONE, X): 1, (X, ONE): 1}
        return {(X, X): 1}

    def epsilon(self, a: int) -> int:
        return 1 if a == X else 0

    def eta(self) -> dict[int, int]:
        return {ONE: 1}


FROBENIUS = FrobeniusSpec()


def word_degree(word: int, k: int) -> tuple[int, int]:
    """(q, τ) degree of a basis word on k circles, before shifts."""
    xs = bin(word).count("1")
    ones = k - xs
    return ones - xs, xs - ones


def _bit(word: int, k: int, c: int) -> int:
    return (word >> (k - 1 - c)) & 1


def _carry_untouched(word: int, k_src: int, k_tgt: int, untouched: Iterable[tuple[int, int]]) -> int:
    out = 0
    for s, t in untouched:
        if (word >> (k_src - 1 - s)) & 1:
            out |= 1 << (k_tgt - 1 - t)
    return out


def even_edge_map(cube: ShiftedCube, e: CubeEdge, word: int) -> dict[int, int]:
    """Image of a basis word under the unsigned saddle map of ``e``."""
    ks = cube.vertices[e.source].n_circles
    kt = cube.vertices[e.target].n_circles
    base = _carry_untouched(word, ks, kt, e.untouched)
    if e.kind == "merge":
        (s1, s2), (t,) = e.involved_source, e.involved_target
        return {base | (b << (kt - 1 - t)): c for b, c in FROBENIUS.m(_bit(word, ks, s1), _bit(word, ks, s2)).items()}
    (s,), (t1, t2) = e.involved_source, e.involved_target
    return {
        base | (b1 << (kt - 1 - t1)) | (b2 << (kt - 1 - t2)): c
        for (b1, b2), c in FROBENIUS.delta(_bit(word, ks, s)).items()
    }


@dataclass(frozen=True)
class Generator:
    vertex: int
    word: int
    q: int
    tau: int


class EGradedComplex:
    """
    Free chain complex with (q, τ)-graded generators.

    ``generators[i]`` lists the generators in index i, ordered by vertex
    state and then by word.  ``differential[i][col]`` maps a column of
    index i to ``{row: coefficient}`` in index i + 1.
    """

    def __init__(
        self,
        generators: Mapping[int, list[Generator]],
        differential: Mapping[int, list[dict[int, int]]],
    ):
        self.generators = dict(generators)
        self.differential = {i: differential.get(i, [{} for _ in gens]) for i, gens in self.generators.items()}

    @property
    def indices(self) -> list[int]:
        return sorted(self.generators)

    def rank(self, i: int) -> int:
        return len(self.generators.get(i, ()))

    def matrix(self, i: int) -> list[list[int]]:
        """Dense matrix of d_i : C^i → C^{i+1} (rows index C^{i+1})."""
        rows, cols = self.rank(i + 1), self.rank(i)
        out = [[0] * cols for _ in range(rows)]
        for col, entries in enumerate(self.differential.get(i, ())):
            for row, c in entries.items():
                out[row][col] = c
        return out

    def square_zero(self) -> bool:
        for i in self.indices:
            d1 = self.differential.get(i, ())
            d2 = self.differential.get(i + 1, ())
            for col in d1:
                acc: dict[int, int] = {}
                for mid, c in col.items():
                    for row, c2 in d2[mid].items():
                        acc[row] = acc.get(row, 0) + c * c2
                if any(acc.values()):
                    return False
        return True

    def degrees_preserved(self) -> bool:
        for i, cols in self.differential.items():
            src, tgt = self.generators[i], self.generators.get(i + 1, [])
            for col, entries in enumerate(cols):
                g = src[col]
                for row in entries:
                    h = tgt[row]
                    if (g.q, g.tau) != (h.q, h.tau):
                        return False
        return True

    def degrees_balanced(self) -> bool:
        """q + τ ≡ 0 (mod 4) for every generator."""
        return all((g.q + g.tau) % 4 == 0 for gens in self.generators.values() for g in gens)


def _vertex_layout(cube: ShiftedCube) -> tuple[dict[int, list[int]], dict[int, int]]:
    by_index: dict[int, list[int]] = {}
    for pos, v in enumerate(cube.vertices):
        by_index.setdefault(v.index, []).append(pos)
    offset: dict[int, int] = {}
    for positions in by_index.values():
        total = 0
        for pos in positions:
            offset[pos] = total
            total += 1 << cube.vertices[pos].n_circles
    return by_index, offset


def complex_generators(cube: ShiftedCube) -> tuple[dict[int, list[Generator]], dict[int, int]]:
    by_index, offset = _vertex_layout(cube)
    wq, wt = cube.global_shift
    generators: dict[int, list[Generator]] = {}
    for i in range(-cube.n_minus, cube.n_plus + 1):
        gens = []
        for pos in by_index.get(i, []):
            v = cube.vertices[pos]
            k = v.n_circles
            sq, st = v.shift
            for word in range(1 << k):
                q, t = word_degree(word, k)
                gens.append(Generator(pos, word, q + sq + wq, (t + st + wt) % 4))
        generators[i] = gens
    return generators, offset


def tqft_complex(cube: ShiftedCube, check: bool = True) -> EGradedComplex:
    """Apply the Frobenius TQFT to a signed cube."""
    generators, offset = complex_generators(cube)
    differential: dict[int, list[dict[int, int]]] = {}
    for i, gens in generators.items():
        cols = []
        for g in gens:
            entries: dict[int, int] = {}
            for e in cube.edges_from(g.vertex):
                base = offset[e.target]
                for word, c in even_edge_map(cube, e, g.word).items():
                    row = base + word
                    entries[row] = entries.get(row, 0) + e.sign * c
            cols.append({r: c for r, c in entries.items() if c})
        differential[i] = cols
    out = EGradedComplex(generators, differential)
    if check and not out.square_zero():
        raise DifferentialNotSquareZero(f"d∘d ≠ 0 for braid {cube.braid}")
    return out


def check_faces(cube: ShiftedCube) -> bool:
    """Both signed paths around every square face cancel on every basis word."""
    for pos, j, k in faces(cube):
        e_j, e_k = cube.edge(pos, j), cube.edge(pos, k)
        e_jk = cube.edge(flip(cube, pos, j), k)
        e_kj = cube.edge(flip(cube, pos, k), j)
        for word in range(1 << cube.vertices[pos].n_circles):
            acc: dict[int, int] = {}
            for first, second in ((e_j, e_jk), (e_k, e_kj)):
                sign = first.sign * second.sign
                for mid, c in even_edge_map(cube, first, word).items():
                    for out, c2 in even_edge_map(cube, second, mid).items():
                        acc[out] = acc.get(out, 0) + sign * c * c2
            if any(acc.values()):
                return False
    return True


def graded_euler(c: EGradedComplex) -> TauLaurent:
    counts: dict[tuple[int, int], int] = {}
    for i, gens in c.generators.items():
        sign = -1 if i % 2 else 1
        for g in gens:
            key = (g.q, g.tau)
            counts[key] = counts.get(key, 0) + sign
    total = TauLaurent.zero()
    for (q, t), n in counts.items():
        if n:
            total = total + TauLaurent.monomial(t, q, n)
    return total


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.rank or self.torsion)

    def __str__(self) -> str:
        parts = [f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


class HomologyTable:
    """
    Nonzero homology groups keyed by (i, q, τ), or by (i, q) once τ has
    been forgotten (``graded_by_tau`` False).
    """

    def __init__(self, groups: Mapping[tuple[int, ...], HomologyGroup], graded_by_tau: bool = True):
        self.groups = {k: g for k, g in sorted(groups.items()) if g}
        self.graded_by_tau = graded_by_tau

    def __getitem__(self, key: tuple[int, ...]) -> HomologyGroup:
        return self.groups.get(key, HomologyGroup(0))

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], HomologyGroup]]:
        return iter(self.groups.items())

    def __len__(self) -> int:
        return len(self.groups)

    def __eq__(self, other):
        if not isinstance(other, HomologyTable):
            return NotImplemented
        return self.graded_by_tau == other.graded_by_tau and self.groups == other.groups

    def __repr__(self) -> str:
        return f"HomologyTable({self.groups!r}, graded_by_tau={self.graded_by_tau})"

    def total_rank(self, i: int) -> int:
        return sum(g.rank for k, g in self.groups.items() if k[0] == i)

    def rows(self) -> list[dict]:
        names = ("i", "q", "tau") if self.graded_by_tau else ("i", "q")
        return [
            {**dict(zip(names, key)), "rank": g.rank, "torsion": list(g.torsion)} for key, g in self.groups.items()
        ]

    def to_json(self) -> str:
        return json.dumps(self.rows(), separators=(",", ":"))

    def to_text(self) -> str:
        header = ["i", "q", "tau"] if self.graded_by_tau else ["i", "q"]
        lines = ["\t".join(header + ["rank", "torsion"])]
        for key, g in self.groups.items():
            torsion = ",".join(str(t) for t in g.torsion) or "-"
            lines.append("\t".join([str(x) for x in key] + [str(g.rank), torsion]))
        return "\n".join(lines)


def _reduce(c: EGradedComplex, modulus: int | None = None):
    """
    Gaussian elimination of the complex along unit entries.

    Cancelling d(x → y) = u (a unit) removes x and y and replaces every
    entry d(z → w) by d(z → w) − d(z → y)·u⁻¹·d(x → w).  The result is a
    chain-homotopy-equivalent complex whose differentials have no unit
    entries.  With ``modulus=2`` every nonzero entry is a unit and the
    residual differential vanishes.

    Returns (alive, out): surviving nodes as (i, column) pairs and their
    remaining outgoing entries.
    """
    out: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
    inc: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for i, gens in c.generators.items():
        for col in range(len(gens)):
            inc[(i, col)] = set()
    for i, cols in c.differential.items():
        for col, entries in enumerate(cols):
            node = (i, col)
            row_map = {}
            for row, v in entries.items():
                if modulus:
                    v %= modulus
                if v:
                    row_map[(i + 1, row)] = v
                    inc[(i + 1, row)].add(node)
            out[node] = row_map

    def is_unit(v: int) -> bool:
        return bool(v) if modulus == 2 else v in (1, -1)

    def drop(node):
        for w in out.pop(node):
            inc[w].discard(node)
        for z in inc.pop(node):
            del out[z][node]

    order = sorted(out)
    changed = True
    while changed:
        changed = False
        for x in order:
            if x not in out:
                continue
            y = next((w for w, v in out[x].items() if is_unit(v)), None)
            if y is None:
                continue
            u = out[x][y]
            tail = [(w, v) for w, v in out[x].items() if w != y]
            for z in list(inc[y]):
                if z == x:
                    continue
                zy = out[z][y]
                factor = zy * u  # u⁻¹ = u for ±1 and for 1 mod 2
                row = out[z]
                for w, v in tail:
                    new = row.get(w, 0) - factor * v
                    if modulus:
                        new %= modulus
                    if new:
                        if w not in row:
                            inc[w].add(z)
                        row[w] = new
                    elif w in row:
                        del row[w]
                        inc[w].discard(z)
            drop(x)
            drop(y)
            changed = True
    return out


def _by_block(c: EGradedComplex, nodes: Iterable[tuple[int, int]]) -> dict[tuple[int, int], dict[int, list]]:
    blocks: dict[tuple[int, int], dict[int, list]] = {}
    for i, col in nodes:
        g = c.generators[i][col]
        blocks.setdefault((g.q, g.tau), {}).setdefault(i, []).append((i, col))
    return blocks


def homology(c: EGradedComplex) -> HomologyTable:
    """Integral homology, blockwise per (q, τ)."""
    out = _reduce(c)
    groups: dict[tuple[int, ...], HomologyGroup] = {}
    for (q, t), per_index in _by_block(c, out).items():
        position = {node: k for nodes in per_index.values() for k, node in enumerate(nodes)}
        factors: dict[int, list[int]] = {}
        for i, nodes in per_index.items():
            targets = per_index.get(i + 1, [])
            matrix = [[0] * len(nodes) for _ in targets]
            for col, node in enumerate(nodes):
                for w, v in out[node].items():
                    matrix[position[w]][col] = v
            factors[i] = invariant_factors(matrix) if targets else []
        for i, nodes in per_index.items():
            incoming = factors.get(i - 1, [])
            free = len(nodes) - len(factors[i]) - len(incoming)
            torsion = tuple(f for f in incoming if f > 1)
            groups[(i, q, t)] = HomologyGroup(free, torsion)
    return HomologyTable(groups)


def homology_mod2(c: EGradedComplex, forget: bool = False) -> dict[tuple[int, ...], int]:
    """F₂-dimensions of H(C ⊗ F₂), keyed by (i, q, τ) or by (i, q) when ``forget``."""
    out = _reduce(c, modulus=2)
    if any(out.values()):
        raise AssertionError("mod-2 reduction left a nonzero differential")
    dims: dict[tuple[int, ...], int] = {}
    for i, col in sorted(out):
        g = c.generators[i][col]
        key = (i, g.q) if forget else (i, g.q, g.tau)
        dims[key] = dims.get(key, 0) + 1
    return dims


def forget_tau(table: HomologyTable) -> HomologyTable:
    """Direct-sum collapse of the τ-grading."""
    if not table.graded_by_tau:
        return table
    merged: dict[tuple[int, int], tuple[int, list[int]]] = {}
    for (i, q, _t), g in table:
        rank, torsion = merged.get((i, q), (0, []))
        merged[(i, q)] = (rank + g.rank, torsion + list(g.torsion))
    return HomologyTable(
        {k: HomologyGroup(r, _normalize_torsion(ts)) for k, (r, ts) in merged.items()}, graded_by_tau=False
    )


def _normalize_torsion(factors: list[int]) -> tuple[int, ...]:
    """Invariant factors of a direct sum of cyclic groups Z/f."""
    if not factors:
        return ()
    diag = [[f if i == j else 0 for j in range(len(factors))] for i, f in enumerate(factors)]
    return tuple(f for f in invariant_factors(diag) if f > 1)
