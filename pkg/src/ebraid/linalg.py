"""Integer and mod-2 linear algebra on small dense matrices (lists of lists)."""

from __future__ import annotations

from typing import Sequence

__all__ = ["smith_normal_form", "invariant_factors", "integer_rank", "rank_mod2", "identity", "matmul"]

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else [()] * cols
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


class _Reducer:
    """
    Diagonalize A in place by unimodular row and column operations.

    The invariant M = U·A·V is kept when ``track`` is set: a row operation
    A ← E·A is balanced by U ← U·E⁻¹ and a column operation A ← A·F by
    V ← F⁻¹·V.
    """

    def __init__(self, m: Sequence[Sequence[int]], track: bool):
        self.a = [list(map(int, row)) for row in m]
        self.rows = len(self.a)
        self.cols = len(self.a[0]) if self.a else 0
        self.track = track
        if track:
            self.u = identity(self.rows)
            self.v = identity(self.cols)

    def add_row(self, src: int, dst: int, k: int) -> None:
        a = self.a
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        if self.track:
            for row in self.u:
                row[src] -= k * row[dst]

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        if self.track:
            for row in self.u:
                row[i], row[j] = row[j], row[i]

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        if self.track:
            for row in self.u:
                row[i] = -row[i]

    def add_col(self, src: int, dst: int, k: int) -> None:
        for row in self.a:
            row[dst] += k * row[src]
        if self.track:
            v = self.v
            v[src] = [x - k * y for x, y in zip(v[src], v[dst])]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        if self.track:
            self.v[i], self.v[j] = self.v[j], self.v[i]

    def _smallest(self, t: int) -> tuple[int, int] | None:
        best = None
        for i in range(t, self.rows):
            row = self.a[i]
            for j in range(t, self.cols):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return i, j
        return None if best is None else (best[1], best[2])

    def run(self) -> list[int]:
        a = self.a
        diag = []
        for t in range(min(self.rows, self.cols)):
            pos = self._smallest(t)
            if pos is None:
                break
            while True:
                i, j = pos
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                p = a[t][t]
                clean = True
                for i in range(t + 1, self.rows):
                    if a[i][t]:
                        self.add_row(t, i, -(a[i][t] // p))
                        clean = clean and not a[i][t]
                for j in range(t + 1, self.cols):
                    if a[t][j]:
                        self.add_col(t, j, -(a[t][j] // p))
                        clean = clean and not a[t][j]
                if not clean:
                    pos = self._smallest_in_cross(t)
                    continue
                bad = self._not_divisible(t, p)
                if bad is None:
                    break
                self.add_row(bad, t, 1)
                pos = self._smallest_in_cross(t)
            if a[t][t] < 0:
                self.negate_row(t)
            diag.append(a[t][t])
        return diag

    def _smallest_in_cross(self, t: int) -> tuple[int, int]:
        # after a partial elimination the remainders live in row t and column t
        best = (abs(self.a[t][t]), t, t)
        for i in range(t + 1, self.rows):
            x = self.a[i][t]
            if x and abs(x) < best[0]:
                best = (abs(x), i, t)
        for j in range(t + 1, self.cols):
            x = self.a[t][j]
            if x and abs(x) < best[0]:
                best = (abs(x), t, j)
        return best[1], best[2]

    def _not_divisible(self, t: int, p: int) -> int | None:
        for i in range(t + 1, self.rows):
            row = self.a[i]
            for j in range(t + 1, self.cols):
                if row[j] % p:
                    return i
        return None


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """
    Return (U, D, V) with M = U·D·V, U and V unimodular, D diagonal with
    nonnegative entries each dividing the next.
    """
    r = _Reducer(m, track=True)
    r.run()
    return r.u, r.a, r.v


def invariant_factors(m: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, in divisibility order."""
    if not m or not m[0]:
        return []
    return _Reducer(m, track=False).run()


def integer_rank(m: Sequence[Sequence[int]]) -> int:
    return len(invariant_factors(m))


def rank_mod2(m: Sequence[Sequence[int]]) -> int:
    """Rank over F₂, rows packed into integer bitsets."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in m:
        bits = 0
        for j, x in enumerate(row):
            if x % 2:
                bits |= 1 << j
        while bits:
            top = bits.bit_length() - 1
            if top not in pivots:
                pivots[top] = bits
                rank += 1
                break
            bits ^= pivots[top]
    return rank
