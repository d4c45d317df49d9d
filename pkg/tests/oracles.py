"""
Independent reference computations used only by the tests.

Nothing here imports the package's evaluation code.  Diagrams are encoded
as graphs on crossing endpoints (not strand segments), circles are counted
with networkx, polynomials are handled by sympy, and the Khovanov oracle
builds dense matrices and uses sympy's Smith normal form.
"""

from __future__ import annotations

import itertools

import networkx as nx
import sympy
from sympy.matrices.normalforms import smith_normal_form

t, q = sympy.symbols("t q")
D = t**3 * q + t / q


def _graph(strands: int, letters: tuple[int, ...], state: tuple[int, ...]) -> nx.Graph:
    g = nx.Graph()
    current = {p: ("bottom", p) for p in range(strands)}
    g.add_nodes_from(current.values())
    for j, (letter, bit) in enumerate(zip(letters, state)):
        a = abs(letter) - 1
        ins = (("in", j, 0), ("in", j, 1))
        outs = (("out", j, 0), ("out", j, 1))
        g.add_edge(current[a], ins[0])
        g.add_edge(current[a + 1], ins[1])
        smoothing_is_cup_cap = (letter > 0) == (bit == 1)
        if smoothing_is_cup_cap:
            g.add_edge(*ins)
            g.add_edge(*outs)
        else:
            g.add_edge(ins[0], outs[0])
            g.add_edge(ins[1], outs[1])
        current[a], current[a + 1] = outs
    for p in range(strands):
        g.add_edge(current[p], ("bottom", p))
    return g


def circle_count(strands: int, letters: tuple[int, ...], state: tuple[int, ...]) -> int:
    return nx.number_connected_components(_graph(strands, letters, state))


def _weight(letter: int, bit: int):
    if letter > 0:
        return t if bit == 0 else -q
    return -1 / q if bit == 0 else t**3


def bracket_expr(strands: int, letters: tuple[int, ...]):
    total = 0
    for state in itertools.product((0, 1), repeat=len(letters)):
        w = sympy.Integer(1)
        for letter, bit in zip(letters, state):
            w *= _weight(letter, bit)
        total += w * D ** circle_count(strands, letters, state)
    return sympy.expand(total)


def to_monomials(expr) -> dict[tuple[int, int], int]:
    """Reduce a Laurent expression in t, q modulo t⁴ = 1; keys (q-exp, t-exp)."""
    expr = sympy.expand(expr)
    out: dict[tuple[int, int], int] = {}
    for term in sympy.Add.make_args(expr):
        if term == 0:
            continue
        coeff, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict()
        a = int(powers.get(t, 0)) % 4
        b = int(powers.get(q, 0))
        out[(b, a)] = out.get((b, a), 0) + int(coeff)
    return {k: v for k, v in out.items() if v}


def jhat_monomials(strands: int, letters: tuple[int, ...]) -> dict[tuple[int, int], int]:
    wr = sum(1 if x > 0 else -1 for x in letters)
    return to_monomials((t**2 * q) ** wr * bracket_expr(strands, letters))


def jhat_json_obj(strands: int, letters: tuple[int, ...]) -> dict:
    """Same layout as the package's polynomial JSON, built from the oracle."""
    mons = jhat_monomials(strands, letters)
    return {"terms": [{"c": c, "tau": a, "q": b} for (b, a), c in sorted(mons.items())]}


def khovanov_table(strands: int, letters: tuple[int, ...]) -> dict[tuple[int, int], tuple[int, tuple[int, ...]]]:
    """
    Standard integral Khovanov homology, keyed (i, q) -> (rank, torsion).

    Generators are v₊/v₋ per circle with q-degree ±1, vertex shift
    r + n₊ − 2n₋, homological degree r − n₋, signs (−1)^{#1s before the
    flipped bit}.
    """
    m = len(letters)
    n_plus = sum(1 for x in letters if x > 0)
    n_minus = m - n_plus
    circles = {}
    for state in itertools.product((0, 1), repeat=m):
        g = _graph(strands, letters, state)
        comps = sorted((frozenset(c) for c in nx.connected_components(g)), key=lambda c: sorted(map(str, c)))
        circles[state] = comps

    def gens(state):
        k = len(circles[state])
        r = sum(state)
        for labels in itertools.product((1, -1), repeat=k):
            yield labels, sum(labels) + r + n_plus - 2 * n_minus

    def component_of(state, node):
        for idx, c in enumerate(circles[state]):
            if node in c:
                return idx
        raise KeyError(node)

    def edge_image(src, tgt, j, labels):
        """Image of a labelling under the saddle; dict labels -> coefficient."""
        a = abs(letters[j]) - 1
        touching = [("in", j, 0), ("in", j, 1), ("out", j, 0), ("out", j, 1)]
        s_inv = sorted({component_of(src, x) for x in touching})
        t_inv = sorted({component_of(tgt, x) for x in touching})
        # untouched circles keep their node sets
        carry = {}
        for idx, c in enumerate(circles[src]):
            if idx not in s_inv:
                carry[circles[tgt].index(c)] = labels[idx]
        results = []
        if len(s_inv) == 2:
            x, y = labels[s_inv[0]], labels[s_inv[1]]
            if x == -1 and y == -1:
                return {}
            results.append(({t_inv[0]: min(x, y)}, 1))
        else:
            x = labels[s_inv[0]]
            if x == 1:
                results.append(({t_inv[0]: 1, t_inv[1]: -1}, 1))
                results.append(({t_inv[0]: -1, t_inv[1]: 1}, 1))
            else:
                results.append(({t_inv[0]: -1, t_inv[1]: -1}, 1))
        out = {}
        for assign, c in results:
            full = dict(carry)
            full.update(assign)
            key = tuple(full[i] for i in range(len(circles[tgt])))
            out[key] = out.get(key, 0) + c
        return out

    # chain groups per (i, q)
    groups: dict[tuple[int, int], list] = {}
    for state in circles:
        for labels, qdeg in gens(state):
            groups.setdefault((sum(state) - n_minus, qdeg), []).append((state, labels))
    index = {key: {g: k for k, g in enumerate(v)} for key, v in groups.items()}

    def matrix(i, qdeg):
        src = groups.get((i, qdeg), [])
        tgt = groups.get((i + 1, qdeg), [])
        mat = sympy.zeros(len(tgt), len(src))
        for col, (state, labels) in enumerate(src):
            for j in range(m):
                if state[j]:
                    continue
                target = state[:j] + (1,) + state[j + 1 :]
                sign = (-1) ** sum(state[:j])
                for lab, c in edge_image(state, target, j, labels).items():
                    mat[index[(i + 1, qdeg)][(target, lab)], col] += sign * c
        return mat

    def diag(mat):
        if mat.rows == 0 or mat.cols == 0:
            return []
        s = smith_normal_form(mat, domain=sympy.ZZ)
        return [abs(int(s[k, k])) for k in range(min(s.rows, s.cols)) if s[k, k] != 0]

    table = {}
    for (i, qdeg), members in groups.items():
        out_d = diag(matrix(i, qdeg))
        in_d = diag(matrix(i - 1, qdeg))
        free = len(members) - len(out_d) - len(in_d)
        torsion = tuple(x for x in in_d if x > 1)
        if free or torsion:
            table[(i, qdeg)] = (free, torsion)
    return table
