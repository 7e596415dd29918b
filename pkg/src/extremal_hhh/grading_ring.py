"""Graded polynomial ring R = k[a_1, ..., a_{n-1}] and the exterior algebra on dual roots.

Every generator a_i has Q-degree 2.  Exterior generators a_i^v have
(A, Q)-bidegree (1, -2).  Scalars are exact: ``Fraction`` for the rationals
or a small residue class type for a prime field.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Exponent = tuple[int, ...]


# ---------------------------------------------------------------- scalars


@functools.lru_cache(maxsize=None)
def _residue_class(p: int) -> type:
    """Build (once per prime) an immutable residue type modulo ``p``."""

    class Residue:
        __slots__ = ("v",)
        modulus = p

        def __init__(self, v=0):
            if isinstance(v, Residue):
                self.v = v.v
            elif isinstance(v, Fraction):
                self.v = v.numerator * pow(v.denominator, -1, p) % p
            else:
                self.v = int(v) % p

        @staticmethod
        def _raw(other):
            if isinstance(other, Residue):
                return other.v
            if isinstance(other, int):
                return other
            if isinstance(other, Fraction):
                return other.numerator * pow(other.denominator, -1, p)
            return NotImplemented

        def _new(self, v):
            r = object.__new__(Residue)
            r.v = v % p
            return r

        def __add__(self, other):
            o = self._raw(other)
            return NotImplemented if o is NotImplemented else self._new(self.v + o)

        __radd__ = __add__

        def __sub__(self, other):
            o = self._raw(other)
            return NotImplemented if o is NotImplemented else self._new(self.v - o)

        def __rsub__(self, other):
            o = self._raw(other)
            return NotImplemented if o is NotImplemented else self._new(o - self.v)

        def __mul__(self, other):
            o = self._raw(other)
            return NotImplemented if o is NotImplemented else self._new(self.v * o)

        __rmul__ = __mul__

        def __truediv__(self, other):
            o = self._raw(other)
            if o is NotImplemented:
                return NotImplemented
            if o % p == 0:
                raise ZeroDivisionError("division by zero in GF(%d)" % p)
            return self._new(self.v * pow(o, -1, p))

        def __rtruediv__(self, other):
            o = self._raw(other)
            if o is NotImplemented:
                return NotImplemented
            return self._new(o * pow(self.v, -1, p))

        def __neg__(self):
            return self._new(-self.v)

        def __pos__(self):
            return self

        def __bool__(self):
            return self.v != 0

        def __eq__(self, other):
            o = self._raw(other)
            if o is NotImplemented:
                return NotImplemented
            return (self.v - o) % p == 0

        def __hash__(self):
            return hash((p, self.v))

        def __int__(self):
            return self.v if self.v <= p // 2 else self.v - p

        def __repr__(self):
            return str(int(self))

    Residue.__name__ = "GF%d" % p
    Residue.__qualname__ = Residue.__name__
    return Residue


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class Field:
    """Coefficient field: rationals when ``p == 0``, else GF(p) with p > 3."""

    p: int = 0

    def __post_init__(self):
        if self.p and (self.p <= 3 or not _is_prime(self.p)):
            raise ValueError(f"field characteristic must be 0 or a prime > 3, got {self.p}")

    @property
    def name(self) -> str:
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def __call__(self, x):
        if self.p == 0:
            return x if isinstance(x, Fraction) else Fraction(x)
        return _residue_class(self.p)(x)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @classmethod
    def parse(cls, text: str | int | None) -> "Field":
        """Accept ``rational``/``QQ``/``0`` or ``p``/``prime:p``/``GF(p)``."""
        if text is None:
            return cls()
        if isinstance(text, int):
            return cls(text)
        t = text.strip().lower()
        if t in ("", "q", "qq", "rational", "rationals", "0"):
            return cls()
        for prefix in ("prime:", "gf(", "gf", "p"):
            if t.startswith(prefix):
                t = t[len(prefix):]
                break
        t = t.rstrip(")")
        try:
            return cls(int(t))
        except ValueError:
            raise ValueError(f"unrecognised field {text!r}") from None


QQ = Field()


# ---------------------------------------------------------------- polynomials


def monomials_of_degree(nvars: int, d: int) -> Iterator[Exponent]:
    """Exponent vectors of total degree ``d``, in descending lexicographic order."""
    if nvars == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


class Poly:
    """A polynomial in a_1..a_nvars with exact coefficients.

    Terms are kept in a dict from exponent tuples to nonzero scalars.
    Instances are treated as immutable once built.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponent, object] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[e] = c

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, nvars: int, exp: Exponent, c=1) -> "Poly":
        return cls(nvars, {tuple(exp): c})

    @classmethod
    def var(cls, nvars: int, i: int, c=1) -> "Poly":
        """The root a_i (1-based)."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): c})

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in rings of different rank")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        p = Poly(self.nvars)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Poly(self.nvars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return Poly(self.nvars)
            p = Poly(self.nvars)
            p.terms = {e: c * other for e, c in self.terms.items()}
            return p
        o = self._lift(other)
        out: dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly.const(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)) or hasattr(other, "modulus"):
                other = Poly.const(self.nvars, other)
            else:
                return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant(self):
        """The coefficient of the monomial 1."""
        return self.terms.get((0,) * self.nvars, 0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def degree(self) -> int | None:
        """Q-degree (twice the polynomial degree); ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        degs = {2 * sum(e) for e in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def convert(self, field: Field) -> "Poly":
        return Poly(self.nvars, {e: field(c) for e, c in self.terms.items()})

    def coefficient(self, exp: Exponent):
        return self.terms.get(tuple(exp), 0)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(
                f"a{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_sum(nvars: int, items: Iterable[Poly]) -> Poly:
    total = Poly(nvars)
    for p in items:
        total = total + p
    return total


# ---------------------------------------------------------------- reflections


def _check_index(i: int, nvars: int) -> None:
    if not 1 <= i <= nvars:
        raise IndexError(f"generator index {i} out of range 1..{nvars}")


@functools.lru_cache(maxsize=None)
def _root_images(nvars: int, i: int) -> tuple[Poly, ...]:
    """Images s_i(a_j) for j = 1..nvars in the geometric realization."""
    images = []
    for j in range(1, nvars + 1):
        if j == i:
            images.append(Poly.var(nvars, j, -1))
        elif abs(i - j) == 1:
            images.append(Poly.var(nvars, j) + Poly.var(nvars, i))
        else:
            images.append(Poly.var(nvars, j))
    return tuple(images)


def reflect(f: Poly, i: int) -> Poly:
    """Apply the simple reflection s_i, extended multiplicatively."""
    _check_index(i, f.nvars)
    images = _root_images(f.nvars, i)
    out = Poly(f.nvars)
    for e, c in f.terms.items():
        term = Poly.const(f.nvars, c)
        for j, k in enumerate(e):
            if k:
                term = term * images[j] ** k
        out = out + term
    return out


def divide_by_root(f: Poly, i: int) -> Poly:
    """Exact division by a_i; raises ``ArithmeticError`` if it does not divide."""
    out = {}
    for e, c in f.terms.items():
        if e[i - 1] == 0:
            raise ArithmeticError(f"a{i} does not divide {f}")
        e2 = list(e)
        e2[i - 1] -= 1
        out[tuple(e2)] = c
    return Poly(f.nvars, out)


def demazure(f: Poly, i: int) -> Poly:
    """The Demazure operator (f - s_i f) / a_i."""
    _check_index(i, f.nvars)
    return divide_by_root(f - reflect(f, i), i)


def graded_slice_basis(degree: int, n: int) -> list[Exponent]:
    """Monomials of Q-degree ``degree`` in R for ``n`` strands, lexicographically."""
    if degree < 0 or degree % 2:
        return []
    return list(monomials_of_degree(n - 1, degree // 2))


# ---------------------------------------------------------------- exterior algebra


@dataclass(frozen=True)
class ExteriorMonomial:
    """Signed product of distinct dual roots, indices stored increasing."""

    indices: tuple[int, ...] = ()
    sign: int = 1

    def __post_init__(self):
        if list(self.indices) != sorted(set(self.indices)):
            raise ValueError("exterior indices must be strictly increasing")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def bidegree(self) -> tuple[int, int]:
        return (len(self.indices), -2 * len(self.indices))

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "ExteriorMonomial | None":
        """Normalise a product in the given order; ``None`` when it vanishes."""
        seq = list(seq)
        if len(set(seq)) != len(seq):
            return None
        return cls(tuple(sorted(seq)), permutation_sign(seq))


def permutation_sign(seq: Iterable[int]) -> int:
    """Sign of the permutation sorting a sequence of distinct items."""
    seq = list(seq)
    inversions = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return -1 if inversions % 2 else 1


def ext_product(a: ExteriorMonomial, b: ExteriorMonomial) -> ExteriorMonomial | None:
    """Wedge product, with the Koszul sign from sorting; ``None`` means zero."""
    m = ExteriorMonomial.from_sequence(a.indices + b.indices)
    if m is None:
        return None
    return ExteriorMonomial(m.indices, m.sign * a.sign * b.sign)
