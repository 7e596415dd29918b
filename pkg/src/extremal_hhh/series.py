"""Rational generating functions  P(Q) / (1 - Q^2)^r  with integer coefficients.

These record graded dimensions of finitely generated modules over
R = k[a_1..a_r] (each a_i in Q-degree 2) exactly, including infinite tails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb


def _clean(d: dict[int, int]) -> dict[int, int]:
    return {k: v for k, v in d.items() if v}


@dataclass
class HilbertSeries:
    """The series num(Q) / (1 - Q^2)^den, with ``num`` a Laurent polynomial."""

    num: dict[int, int] = field(default_factory=dict)
    den: int = 0

    def __post_init__(self):
        self.num = _clean(self.num)

    @classmethod
    def free(cls, degrees, r: int) -> "HilbertSeries":
        """Series of the free module with generators in the given Q-degrees."""
        num: dict[int, int] = {}
        for g in degrees:
            num[g] = num.get(g, 0) + 1
        return cls(num, r)

    def _raised(self, den: int) -> dict[int, int]:
        """Numerator rewritten over (1 - Q^2)^den, den >= self.den."""
        num = dict(self.num)
        for _ in range(den - self.den):
            out: dict[int, int] = {}
            for k, v in num.items():
                out[k] = out.get(k, 0) + v
                out[k + 2] = out.get(k + 2, 0) - v
            num = _clean(out)
        return num

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        d = max(self.den, other.den)
        a, b = self._raised(d), other._raised(d)
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + v
        return HilbertSeries(out, d).simplified()

    def __neg__(self):
        return HilbertSeries({k: -v for k, v in self.num.items()}, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        a, b = self.simplified(), other.simplified()
        return a.num == b.num and a.den == b.den

    def shift(self, s: int) -> "HilbertSeries":
        return HilbertSeries({k + s: v for k, v in self.num.items()}, self.den)

    def is_zero(self) -> bool:
        return not self.num

    def simplified(self) -> "HilbertSeries":
        """Cancel factors (1 - Q^2) between numerator and denominator."""
        num, den = dict(self.num), self.den
        while den > 0 and num:
            q = _divide_one_minus_q2(num)
            if q is None:
                break
            num, den = q, den - 1
        if not num:
            den = 0
        return HilbertSeries(num, den)

    def coefficient(self, q: int) -> int:
        r = self.den
        total = 0
        for k, v in self.num.items():
            d = q - k
            if d < 0 or d % 2:
                continue
            total += v * (comb(d // 2 + r - 1, r - 1) if r else (1 if d == 0 else 0))
        return total

    def dims(self, qmin: int, qmax: int) -> dict[int, int]:
        return {q: c for q in range(qmin, qmax + 1) if (c := self.coefficient(q))}

    def min_degree(self) -> int | None:
        return min(self.num) if self.num else None

    def growth(self) -> int:
        """Order of the pole at Q^2 = 1 (0: finite, 1: eventually constant, ...)."""
        return self.simplified().den

    def eventual_value(self) -> int | None:
        """The eventually constant coefficient in the parity class of the numerator.

        Only meaningful when ``growth() == 1``; the series is assumed to live in
        a single parity of Q.
        """
        s = self.simplified()
        if s.den != 1:
            return None
        return sum(s.num.values())

    def split_tail(self) -> tuple[dict[int, int], dict[int, int]]:
        """Write a growth <= 1 series as finite part + sum c_k Q^k / (1 - Q^2).

        The tail is moved to start at the top numerator degree, so the finite
        part is a Laurent polynomial below it.
        """
        s = self.simplified()
        if s.den == 0:
            return dict(s.num), {}
        if s.den > 1:
            raise ValueError("series grows faster than a rank-one tail")
        tail: dict[int, int] = {}
        finite: dict[int, int] = {}
        by_parity: dict[int, list[tuple[int, int]]] = {}
        for k, v in s.num.items():
            by_parity.setdefault(k % 2, []).append((k, v))
        for items in by_parity.values():
            top = max(k for k, _ in items)
            total = sum(v for _, v in items)
            if total:
                tail[top] = total
            # sum_k v_k Q^k/(1-Q^2) - total Q^top/(1-Q^2) is a polynomial
            for k, v in items:
                for j in range(k, top, 2):
                    finite[j] = finite.get(j, 0) + v
        return _clean(finite), _clean(tail)

    def __repr__(self):
        if not self.num:
            return "0"
        terms = " + ".join(f"{v}*Q^{k}" for k, v in sorted(self.num.items()))
        return f"({terms})" + (f"/(1-Q^2)^{self.den}" if self.den else "")


def _divide_one_minus_q2(num: dict[int, int]) -> dict[int, int] | None:
    """Exact quotient by (1 - Q^2), or ``None`` if it does not divide."""
    if not num:
        return {}
    lo, hi = min(num), max(num)
    out: dict[int, int] = {}
    for k in range(lo, hi + 1):
        out[k] = num.get(k, 0) + out.get(k - 2, 0)
    if out.get(hi, 0) or out.get(hi - 1, 0):
        return None
    return _clean(out)
