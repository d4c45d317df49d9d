"""
Cube of resolutions of a braid closure.

The closed diagram of a braid with m letters on n strands is cut into
segments: segment ``level * n + p`` is the piece of strand position p
between crossing rows ``level - 1`` and ``level`` (levels 0..m).  The
closure joins the top segment of each position to the bottom one.  A state
fixes, for every crossing, whether the two segments below it continue
straight up (identity) or are capped off against each other (cup–cap).
Circles are the connected components; their canonical order is by smallest
segment id.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, replace
from typing import Iterator

from ._unionfind import UnionFind
from .braid_words import BraidWord
from .errors import TooManyCrossings

__all__ = [
    "CubeVertex",
    "CubeEdge",
    "ShiftedCube",
    "build_cube",
    "sign_assignment",
    "lexicographic_sign",
    "degree_audit",
    "cube_to_json",
    "DEFAULT_MAX_CROSSINGS",
]

DEFAULT_MAX_CROSSINGS = 16

State = tuple[int, ...]


@dataclass(frozen=True)
class CubeVertex:
    state: State
    circles: tuple[tuple[int, ...], ...]
    segment_circle: tuple[int, ...]
    index: int
    shift: tuple[int, int]

    @property
    def r(self) -> int:
        return sum(self.state)

    @property
    def n_circles(self) -> int:
        return len(self.circles)


@dataclass(frozen=True)
class CubeEdge:
    """
    Saddle from ``source`` to ``target`` flipping crossing ``crossing``.

    ``involved_source`` / ``involved_target`` are circle indices in the
    canonical order of each end: two then one for a merge, one then two for a
    split.  ``untouched`` maps each remaining source circle to its target
    index.
    """

    source: int
    target: int
    crossing: int
    kind: str
    involved_source: tuple[int, ...]
    involved_target: tuple[int, ...]
    untouched: tuple[tuple[int, int], ...]
    sign: int = 1


@dataclass
class ShiftedCube:
    braid: BraidWord
    vertices: list[CubeVertex]
    edges: list[CubeEdge]
    n_plus: int
    n_minus: int

    @property
    def wr(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def global_shift(self) -> tuple[int, int]:
        return (self.wr, 2 * self.wr)

    @property
    def crossings(self) -> int:
        return len(self.braid.letters)

    def vertex_position(self, state: State) -> int:
        # vertices are stored in lexicographic order of their state tuples
        return _state_position(state)

    def edges_from(self, position: int) -> list[CubeEdge]:
        return self._out.get(position, [])

    def edge(self, source: int, crossing: int) -> CubeEdge:
        return self._by_key[(source, crossing)]

    def __post_init__(self):
        self._reindex()

    def _reindex(self) -> None:
        self._out: dict[int, list[CubeEdge]] = {}
        self._by_key = {}
        for e in self.edges:
            self._out.setdefault(e.source, []).append(e)
            self._by_key[(e.source, e.crossing)] = e


def _is_cup_cap(letter: int, bit: int) -> bool:
    return (letter > 0) == (bit == 1)


def _resolve(b: BraidWord, state: State) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    n, m = b.strands, len(b.letters)
    uf = UnionFind((m + 1) * n)
    for j, (letter, bit) in enumerate(zip(b.letters, state)):
        i = abs(letter)
        below, above = j * n, (j + 1) * n
        for p in range(n):
            if p not in (i - 1, i):
                uf.union(below + p, above + p)
        if _is_cup_cap(letter, bit):
            uf.union(below + i - 1, below + i)
            uf.union(above + i - 1, above + i)
        else:
            uf.union(below + i - 1, above + i - 1)
            uf.union(below + i, above + i)
    for p in range(n):
        uf.union(m * n + p, p)
    groups: dict[int, list[int]] = {}
    for s in range((m + 1) * n):
        groups.setdefault(uf.find(s), []).append(s)
    circles = tuple(sorted(tuple(g) for g in groups.values()))
    segment_circle = [0] * ((m + 1) * n)
    for k, c in enumerate(circles):
        for s in c:
            segment_circle[s] = k
    return circles, tuple(segment_circle)


def _classify(b: BraidWord, j: int, src: CubeVertex, tgt: CubeVertex, sign: int) -> CubeEdge:
    n = b.strands
    i = abs(b.letters[j])
    touched = (j * n + i - 1, j * n + i, (j + 1) * n + i - 1, (j + 1) * n + i)
    s_inv = tuple(sorted({src.segment_circle[s] for s in touched}))
    t_inv = tuple(sorted({tgt.segment_circle[s] for s in touched}))
    if (len(s_inv), len(t_inv)) == (2, 1):
        kind = "merge"
    elif (len(s_inv), len(t_inv)) == (1, 2):
        kind = "split"
    else:
        raise AssertionError(f"saddle at crossing {j} changes {len(s_inv)} circles into {len(t_inv)}")
    untouched = tuple(
        (k, tgt.segment_circle[c[0]]) for k, c in enumerate(src.circles) if k not in s_inv
    )
    src_pos = _state_position(src.state)
    tgt_pos = _state_position(tgt.state)
    return CubeEdge(src_pos, tgt_pos, j, kind, s_inv, t_inv, untouched, sign)


def _state_position(state: State) -> int:
    out = 0
    for bit in state:
        out = 2 * out + bit
    return out


def lexicographic_sign(state: State, j: int) -> int:
    """(−1)^{number of 1s in ``state`` before position ``j``}."""
    return -1 if sum(state[:j]) % 2 else 1


def build_cube(b: BraidWord, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> ShiftedCube:
    m = len(b.letters)
    if m > max_crossings:
        raise TooManyCrossings(f"{m} crossings exceed the cube cap of {max_crossings}")
    n_plus, n_minus = b.n_plus, b.n_minus
    vertices = []
    for state in itertools.product((0, 1), repeat=m):
        circles, seg = _resolve(b, state)
        r = sum(state)
        vertices.append(CubeVertex(state, circles, seg, r - n_minus, (r - n_minus, n_plus - r)))
    edges = []
    for pos, v in enumerate(vertices):
        for j in range(m):
            if v.state[j]:
                continue
            target = v.state[:j] + (1,) + v.state[j + 1 :]
            tgt = vertices[_state_position(target)]
            edges.append(_classify(b, j, v, tgt, 1))
    return ShiftedCube(b, vertices, edges, n_plus, n_minus)


def sign_assignment(cube: ShiftedCube) -> ShiftedCube:
    """Return a copy of ``cube`` whose edges carry the lexicographic signs."""
    edges = [
        replace(e, sign=lexicographic_sign(cube.vertices[e.source].state, e.crossing))
        for e in cube.edges
    ]
    return ShiftedCube(cube.braid, cube.vertices, edges, cube.n_plus, cube.n_minus)


# (q, τ) degrees of the Frobenius structure maps
MAP_DEGREE = {"merge": (-1, 1), "split": (-1, 1)}


def degree_audit(cube: ShiftedCube) -> bool:
    """Every saddle, combined with the shift change along its edge, has degree (0, 0)."""
    for e in cube.edges:
        dq, dt = MAP_DEGREE[e.kind]
        sq, st = cube.vertices[e.source].shift
        tq, tt = cube.vertices[e.target].shift
        if dq + tq - sq != 0 or (dt + tt - st) % 4:
            return False
    return True


def faces(cube: ShiftedCube) -> Iterator[tuple[int, int, int]]:
    """(source position, first crossing, second crossing) for every 2-face."""
    for pos, v in enumerate(cube.vertices):
        zeros = [j for j, bit in enumerate(v.state) if not bit]
        for j, k in itertools.combinations(zeros, 2):
            yield pos, j, k


def flip(cube: ShiftedCube, position: int, j: int) -> int:
    return position | (1 << (cube.crossings - 1 - j))


def cube_to_json(cube: ShiftedCube) -> str:
    def bits(state: State) -> str:
        return "".join(str(x) for x in state)

    obj = {
        "strands": cube.braid.strands,
        "word": str(cube.braid),
        "n_plus": cube.n_plus,
        "n_minus": cube.n_minus,
        "vertices": [
            {"state": bits(v.state), "index": v.index, "circles": v.n_circles, "shift": list(v.shift)}
            for v in cube.vertices
        ],
        "edges": [
            {
                "from": bits(cube.vertices[e.source].state),
                "to": bits(cube.vertices[e.target].state),
                "kind": e.kind,
                "sign": e.sign,
            }
            for e in cube.edges
        ],
    }
    return json.dumps(obj, separators=(",", ":"))
