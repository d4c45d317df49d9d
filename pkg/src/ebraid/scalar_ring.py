"""
Exact coefficient rings.

``CyclotomicInt4`` is Z[τ]/(τ⁴−1), ``PiScalar`` is Z[π]/(π²−1) with π = τ²,
``TauLaurent`` is a Laurent polynomial in q over Z[τ]/(τ⁴−1) and
``GaussLaurent`` a Laurent polynomial in q over the Gaussian integers Z[t],
t² = −1, which is where the τ ↦ tᵏ specializations land.

All values are immutable and all arithmetic is exact (Python integers).

The canonical text form of a ``TauLaurent`` lists its monomials by ascending
q-exponent, then ascending τ-exponent, as ``{c}*t^{a}*q^{b}`` joined by
``" + "``; the zero polynomial renders as ``0``.  Note that in this text form
``t`` stands for τ.

>>> d = TauLaurent.d()
>>> str(d)
'1*t^1*q^-1 + 1*t^3*q^1'
>>> str(d * d)
'1*t^2*q^-2 + 2*t^0*q^0 + 1*t^2*q^2'
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import ComponentNotIntegral

__all__ = [
    "CyclotomicInt4",
    "PiScalar",
    "TauLaurent",
    "GaussLaurent",
    "IdempotentComponent",
    "cyc4_mul",
    "laurent_arith",
    "tau_monomial",
    "specialize_tau",
    "idempotent_component",
    "idempotent_decomposition",
]


@dataclass(frozen=True, slots=True)
class CyclotomicInt4:
    """c0 + c1·τ + c2·τ² + c3·τ³ with τ⁴ = 1."""

    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    @classmethod
    def tau(cls, k: int = 1, coeff: int = 1) -> CyclotomicInt4:
        c = [0, 0, 0, 0]
        c[k % 4] = coeff
        return cls(*c)

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt4(other)
        if not isinstance(other, CyclotomicInt4):
            return NotImplemented
        return CyclotomicInt4(*(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt4(-self.c0, -self.c1, -self.c2, -self.c3)

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt4(other)
        if not isinstance(other, CyclotomicInt4):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt4(*(other * x for x in self.coeffs))
        if not isinstance(other, CyclotomicInt4):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        out = [0, 0, 0, 0]
        for i in range(4):
            if a[i]:
                for j in range(4):
                    out[(i + j) % 4] += a[i] * b[j]
        return CyclotomicInt4(*out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ZeroDivisionError(f"{self} is not invertible")
            return self.inverse() ** (-n)
        result = CyclotomicInt4(1)
        for _ in range(n):
            result = result * self
        return result

    def is_unit(self) -> bool:
        """True for the monomial units ±τᵏ."""
        nz = [c for c in self.coeffs if c]
        return len(nz) == 1 and abs(nz[0]) == 1

    def inverse(self) -> CyclotomicInt4:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a monomial unit")
        k = next(i for i, c in enumerate(self.coeffs) if c)
        return CyclotomicInt4.tau(-k, self.coeffs[k])

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __str__(self) -> str:
        parts = [f"{c}*t^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


def cyc4_mul(x: CyclotomicInt4, y: CyclotomicInt4) -> CyclotomicInt4:
    return x * y


@dataclass(frozen=True, slots=True)
class PiScalar:
    """a + b·π with π² = 1."""

    a: int = 0
    b: int = 0

    def __add__(self, other):
        if isinstance(other, int):
            return PiScalar(self.a + other, self.b)
        if not isinstance(other, PiScalar):
            return NotImplemented
        return PiScalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return PiScalar(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PiScalar(self.a * other, self.b * other)
        if not isinstance(other, PiScalar):
            return NotImplemented
        return PiScalar(self.a * other.a + self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def is_unit(self) -> bool:
        return (abs(self.a), abs(self.b)) in ((1, 0), (0, 1))

    def specialize(self, s: int) -> int:
        """Image under the ring map π ↦ s (s = ±1)."""
        return self.a + self.b * s

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*pi"
        return f"{self.a} + {self.b}*pi"


PI = PiScalar(0, 1)
PI_UNITS = (PiScalar(1, 0), PiScalar(0, 1), PiScalar(-1, 0), PiScalar(0, -1))


class TauLaurent:
    """
    Laurent polynomial in q with coefficients in Z[τ]/(τ⁴−1).

    Stored as a mapping (q-exponent, τ-exponent) -> nonzero integer.
    """

    __slots__ = ("_m", "_hash")

    def __init__(self, monomials: Mapping[tuple[int, int], int] | None = None):
        m: dict[tuple[int, int], int] = {}
        if monomials:
            for (b, a), c in monomials.items():
                key = (b, a % 4)
                m[key] = m.get(key, 0) + c
        self._m = {k: c for k, c in m.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, m: dict[tuple[int, int], int]) -> TauLaurent:
        # m must already be canonical: τ-exponents in 0..3, no zeros
        obj = cls.__new__(cls)
        obj._m = m
        obj._hash = None
        return obj

    @classmethod
    def from_coefficients(cls, terms: Mapping[int, CyclotomicInt4]) -> TauLaurent:
        return cls({(b, a): c for b, x in terms.items() for a, c in enumerate(x.coeffs)})

    @classmethod
    def monomial(cls, tau: int = 0, q: int = 0, coeff: int = 1) -> TauLaurent:
        return cls({(q, tau): coeff})

    @classmethod
    def one(cls) -> TauLaurent:
        return cls._wrap({(0, 0): 1})

    @classmethod
    def zero(cls) -> TauLaurent:
        return cls._wrap({})

    @classmethod
    def d(cls) -> TauLaurent:
        """The circle value τ⁻¹q + τq⁻¹ = τ³q + τq⁻¹."""
        return cls._wrap({(1, 3): 1, (-1, 1): 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, CyclotomicInt4]:
        out: dict[int, list[int]] = {}
        for (b, a), c in self._m.items():
            out.setdefault(b, [0, 0, 0, 0])[a] = c
        return {b: CyclotomicInt4(*out[b]) for b in sorted(out)}

    def monomials(self) -> Iterator[tuple[int, int, int]]:
        """Yield (q-exponent, τ-exponent, coefficient) in canonical order."""
        for b, a in sorted(self._m):
            yield b, a, self._m[(b, a)]

    def coefficient(self, q: int) -> CyclotomicInt4:
        return CyclotomicInt4(*(self._m.get((q, a), 0) for a in range(4)))

    def is_zero(self) -> bool:
        return not self._m

    def __bool__(self) -> bool:
        return bool(self._m)

    def __len__(self) -> int:
        return len(self._m)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> TauLaurent | None:
        if isinstance(other, TauLaurent):
            return other
        if isinstance(other, int):
            return TauLaurent({(0, 0): other})
        if isinstance(other, CyclotomicInt4):
            return TauLaurent.from_coefficients({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m = dict(self._m)
        for k, c in other._m.items():
            v = m.get(k, 0) + c
            if v:
                m[k] = v
            else:
                m.pop(k, None)
        return TauLaurent._wrap(m)

    __radd__ = __add__

    def __neg__(self):
        return TauLaurent._wrap({k: -c for k, c in self._m.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m: dict[tuple[int, int], int] = {}
        for (b1, a1), c1 in self._m.items():
            for (b2, a2), c2 in other._m.items():
                k = (b1 + b2, (a1 + a2) & 3)
                m[k] = m.get(k, 0) + c1 * c2
        return TauLaurent._wrap({k: c for k, c in m.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._m) != 1:
                raise ZeroDivisionError("only monomials ±τᵃqᵇ are invertible")
            ((b, a), c), = self._m.items()
            if abs(c) != 1:
                raise ZeroDivisionError("only monomials ±τᵃqᵇ are invertible")
            k = -n
            return TauLaurent.monomial(-a * k, -b * k, c**k)
        result = TauLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, tau: int = 0, q: int = 0) -> TauLaurent:
        """Multiply by the monomial τ^tau q^q."""
        return TauLaurent._wrap({(b + q, (a + tau) & 3): c for (b, a), c in self._m.items()})

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, CyclotomicInt4)):
            other = self._coerce(other)
        if not isinstance(other, TauLaurent):
            return NotImplemented
        return self._m == other._m

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._m.items()))
        return self._hash

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self._m:
            return "0"
        return " + ".join(f"{c}*t^{a}*q^{b}" for b, a, c in self.monomials())

    def __repr__(self) -> str:
        return f"TauLaurent('{self}')"

    def to_json_obj(self) -> dict:
        return {"terms": [{"c": c, "tau": a, "q": b} for b, a, c in self.monomials()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> TauLaurent:
        return cls({(int(t["q"]), int(t["tau"])): int(t["c"]) for t in obj["terms"]})

    @classmethod
    def from_json(cls, text: str) -> TauLaurent:
        return cls.from_json_obj(json.loads(text))


def laurent_arith(p: TauLaurent, q_: TauLaurent, op: str) -> TauLaurent:
    if op == "add":
        return p + q_
    if op == "mul":
        return p * q_
    if op == "neg":
        return -p
    raise ValueError(f"unknown operation {op!r}")


def tau_monomial(a: int, b: int, c: int) -> TauLaurent:
    """c·τᵃqᵇ."""
    return TauLaurent.monomial(a, b, c)


def _gauss_mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


# tᵏ for k mod 4 as Gaussian integer pairs
_T_POWERS = ((1, 0), (0, 1), (-1, 0), (0, -1))


class GaussLaurent:
    """Laurent polynomial in q with Gaussian integer coefficients x + y·t, t² = −1."""

    __slots__ = ("_m",)

    def __init__(self, terms: Mapping[int, tuple[int, int]] | None = None):
        self._m = {b: (x, y) for b, (x, y) in (terms or {}).items() if x or y}

    @property
    def terms(self) -> dict[int, tuple[int, int]]:
        return {b: self._m[b] for b in sorted(self._m)}

    def __add__(self, other: GaussLaurent) -> GaussLaurent:
        m = dict(self._m)
        for b, (x, y) in other._m.items():
            u, v = m.get(b, (0, 0))
            m[b] = (u + x, v + y)
        return GaussLaurent(m)

    def __neg__(self) -> GaussLaurent:
        return GaussLaurent({b: (-x, -y) for b, (x, y) in self._m.items()})

    def __sub__(self, other: GaussLaurent) -> GaussLaurent:
        return self + (-other)

    def __mul__(self, other: GaussLaurent) -> GaussLaurent:
        m: dict[int, tuple[int, int]] = {}
        for b1, c1 in self._m.items():
            for b2, c2 in other._m.items():
                x, y = _gauss_mul(c1, c2)
                u, v = m.get(b1 + b2, (0, 0))
                m[b1 + b2] = (u + x, v + y)
        return GaussLaurent(m)

    def __eq__(self, other):
        if not isinstance(other, GaussLaurent):
            return NotImplemented
        return self._m == other._m

    def __hash__(self):
        return hash(frozenset(self._m.items()))

    def __str__(self) -> str:
        if not self._m:
            return "0"
        return " + ".join(f"({x}+{y}*i)*q^{b}" for b, (x, y) in self.terms.items())

    def __repr__(self) -> str:
        return f"GaussLaurent({self.terms})"

    @classmethod
    def from_integer_terms(cls, terms: Mapping[int, int]) -> GaussLaurent:
        return cls({b: (c, 0) for b, c in terms.items()})


def specialize_tau(p: TauLaurent, k: int) -> GaussLaurent:
    """Ring homomorphism Z[τ]/(τ⁴−1)[q^±] → Z[t][q^±] sending τ ↦ tᵏ."""
    m: dict[int, tuple[int, int]] = {}
    for b, a, c in p.monomials():
        x, y = _T_POWERS[(a * k) % 4]
        u, v = m.get(b, (0, 0))
        m[b] = (u + c * x, v + c * y)
    return GaussLaurent(m)


@dataclass(frozen=True)
class IdempotentComponent:
    """
    The product ε_{tᵏ}·p.

    ``tau_coeffs`` writes the product in the τ-basis, τ-exponent -> Gaussian
    Laurent coefficient.  ``scalar`` is the value attached to ε_{tᵏ} under
    ε_{tᵏ}·p = scalar·ε_{tᵏ}; τ acts on ε_{tᵏ} as t⁻ᵏ.
    """

    k: int
    tau_coeffs: dict[int, GaussLaurent]
    scalar: GaussLaurent

    def to_tau_laurent(self) -> tuple[TauLaurent, TauLaurent]:
        """Split into (real part, coefficient of t) as TauLaurent values."""
        re: dict[tuple[int, int], int] = {}
        im: dict[tuple[int, int], int] = {}
        for a, g in self.tau_coeffs.items():
            for b, (x, y) in g.terms.items():
                re[(b, a)] = x
                im[(b, a)] = y
        return TauLaurent(re), TauLaurent(im)


def _rational_component(p: TauLaurent, k: int) -> dict[tuple[int, int], tuple[Fraction, Fraction]]:
    """ε_{tᵏ}·p over Q(t), keyed (q-exponent, τ-exponent)."""
    out: dict[tuple[int, int], tuple[Fraction, Fraction]] = {}
    for b, a, c in p.monomials():
        for j in range(4):
            x, y = _T_POWERS[(k * j) % 4]
            key = (b, (a + j) % 4)
            u, v = out.get(key, (Fraction(0), Fraction(0)))
            out[key] = (u + Fraction(c * x, 4), v + Fraction(c * y, 4))
    return {key: val for key, val in out.items() if val[0] or val[1]}


def idempotent_decomposition(p: TauLaurent) -> list[dict[tuple[int, int], tuple[Fraction, Fraction]]]:
    """All four rational components ε_{tᵏ}·p, k = 0..3; they sum back to p."""
    return [_rational_component(p, k) for k in range(4)]


def idempotent_component(p: TauLaurent, k: int) -> IdempotentComponent:
    """
    Component of p in the summand ε_{tᵏ}·Q(q,t)^τ.

    Raises ComponentNotIntegral when the component has a coefficient that is
    not a Gaussian integer (the idempotents carry a factor 1/4).
    """
    rational = _rational_component(p, k % 4)
    by_tau: dict[int, dict[int, tuple[int, int]]] = {}
    for (b, a), (x, y) in rational.items():
        if x.denominator != 1 or y.denominator != 1:
            raise ComponentNotIntegral(f"component {k} of {p} has coefficient ({x})+({y})t at q^{b} tau^{a}")
        by_tau.setdefault(a, {})[b] = (int(x), int(y))
    tau_coeffs = {a: GaussLaurent(by_tau[a]) for a in sorted(by_tau)}
    return IdempotentComponent(k % 4, tau_coeffs, specialize_tau(p, -k % 4))


def sum_components(components: Iterable[IdempotentComponent]) -> TauLaurent:
    """Reassemble integral components; the t-parts must cancel."""
    total_re = TauLaurent.zero()
    total_im = TauLaurent.zero()
    for comp in components:
        re, im = comp.to_tau_laurent()
        total_re = total_re + re
        total_im = total_im + im
    if total_im:
        raise ArithmeticError("components do not reassemble to an element of Z[τ][q^±]")
    return total_re
